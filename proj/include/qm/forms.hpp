#pragma once

#include <vector>

#include "qm/multivector.hpp"
#include "qm/supermatrix.hpp"

namespace qm {

// Differential forms on the linear supermanifold, realized on the shifted
// tangent bundle: coordinates x_i and differentials dx_i of flipped parity.
// Coefficients multiply from the left of the differentials in rendered output.
using FormSpace = PhaseSpace;
using FormSpacePtr = SpacePtr;

FormSpacePtr make_form_space(const std::vector<std::string>& coords, const std::vector<Parity>& parities);
FormSpacePtr form_space_like(const PhaseSpace& s);

// move a coordinate-only polynomial between spaces sharing the coordinate order
SuperPoly coords_to(const SuperPoly& f, const TablePtr& target);

SuperPoly exterior_derivative(const FormSpace& s, const SuperPoly& w);
// ι_X with X = Σ comps[i] ∂_i
SuperPoly interior_product(const FormSpace& s, const std::vector<SuperPoly>& comps, const SuperPoly& w);
// L_X = [ι_X, d]: Σ X_i ∂/∂x_i + (−1)^{|X|} Σ d(X_i) ∂/∂dx_i
SuperPoly lie_derivative(const FormSpace& s, const std::vector<SuperPoly>& comps, const SuperPoly& w);
// form degree (number of differentials), -1 when inhomogeneous
int form_degree(const FormSpace& s, const SuperPoly& w);
// Ω_ij = ∂/∂dx_i ∂/∂dx_j ω for a 2-form
QMatrix two_form_body(const FormSpace& s, const SuperPoly& w);

using FormMatrix = std::vector<std::vector<SuperPoly>>;
// Φ⁻¹ dΦ with Φ given over s's table
FormMatrix maurer_cartan_pullback(const FormSpace& s, const SuperMatrix& phi);
// d(A) + A∧A
FormMatrix structure_equation_residual(const FormSpace& s, const FormMatrix& a);

}  // namespace qm

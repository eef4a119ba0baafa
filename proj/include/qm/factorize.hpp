#pragma once

#include "qm/supermatrix.hpp"

namespace qm {

struct GStarElement {
  SuperMatrix plus;   // upper triangular
  SuperMatrix minus;  // lower triangular
};

struct GaussFactors {
  SuperMatrix upper;     // unipotent N₊
  SuperMatrix diagonal;  // D
  SuperMatrix lower;     // unipotent N₋
};

// Φ = N₊ D N₋, eliminating from the bottom-right corner
GaussFactors gauss_udl(const SuperMatrix& phi);
// L₊ = N₊ D^{1/2}, L₋ = N₋⁻¹ D^{-1/2}, so Φ = L₊ L₋⁻¹
GStarElement gauss_factorize(const SuperMatrix& phi);
// diag(L₊) diag(L₋) = 1 and triangularity
bool valid_gstar(const GStarElement& l);

}  // namespace qm

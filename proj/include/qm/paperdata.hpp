#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qm/forms.hpp"
#include "qm/moment.hpp"

namespace qm::printed {

// Printed reference expressions for the worked sl(2) and sl(3) examples,
// written in this library's coordinate names. Keys:
//   adjoint.*  odd adjoint sl(2), coordinates ξ2 ξ0 ξ-2
//   vector.*   even ϖ₁ of sl(2), coordinates v1 v-1
//   pair2.*    odd ϖ₁ ⊕ ϖ₁* of sl(2), coordinates v1 v2 v1* v2*
//   pair3.*    odd ϖ₁ ⊕ ϖ₁* of sl(3)
const std::string& text(const std::string& key);
std::vector<std::string> keys();

SuperPoly poly(const TablePtr& t, const std::string& key);
SuperMatrix matrix(const TablePtr& t, const std::string& key, int truncation = -1);
// F ⊗ g element as coefficients on the basis of g
std::vector<SuperPoly> element(const Setting& st, const std::string& key);

// substitution ξ0 -> ξ0 + c ξ2ξ0ξ-2 on the adjoint example
std::vector<SuperPoly> adjoint_change_of_variables(const Setting& st, const Q& c = 1);

// L± of the even example built from s = √(1 + ¼v1v-1)
SuperMatrix vector_l_plus(const Setting& st);
SuperMatrix vector_l_minus(const Setting& st);            // as printed
SuperMatrix vector_l_minus_corrected(const Setting& st);  // diagonal entries swapped
// printed diagonal Gauss factor diag(4/(4+v1v-1), ¼(1+4v1v-1))
SuperMatrix vector_gauss_diagonal(const Setting& st);

}  // namespace qm::printed

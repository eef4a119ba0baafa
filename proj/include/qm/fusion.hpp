#pragma once

#include "qm/moment.hpp"

namespace qm {

// Quadratic Poisson bivector on W = V ⊕ V* for (sl_n, V = ϖ₁).
struct Fusion {
  Setting st;  // W with its generating fields
  int n = 0;
  int s = 0;  // 1 odd, 0 even
  Q c;        // −(−1)^s/2 − 1/(2 dim V)
  MultiVector pi_b;
  MultiVector twist;   // ½ t_W
  MultiVector psi;     // ψ_W
  MultiVector pi_cor;  // Σ v_i∂_i ∧ v_j*∂_j*
  MultiVector pi_w;    // −½t_W − ψ_W − c π_cor
  MultiVector pi_w_alt;  // −½t_W − ψ_W + π_cor/(2 dim V) + ½ Σ v_j* v_i ∂_i∧∂_j*
};

Q fusion_constant(int n, Parity p);
Fusion fusion_bivector(int n, Parity p);

// [[π_W,π_W]] = 0, [[π_B,π_W]] = 0, L_{x_W}π_W = −½δ(x)_W, both forms agree
std::vector<CheckResult> fusion_identities(const Fusion& f);
// [[τ,τ]] = −φ_W, [[ψ,ψ]] = φ_W, [[τ,ψ]] = [[τ,π_cor]] = [[ψ,π_cor]] = 0
std::vector<CheckResult> fusion_lemmas(const Fusion& f);

}  // namespace qm

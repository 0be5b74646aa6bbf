#pragma once

// Irreducible corepresentations of SU_q(2) pushed through the homomorphism
// attached to an SL_q(2,C)-matrix A: v^(t) = (id (x) phi_A)(u^(t)).
//
// Matrix coefficients come from the closed-form little q-Jacobi expansion
//
//   u^(t)_{nm} = sum_i coeff_i * b^i c^(n-m+i) a^(t-n-i) d^(t+m-i)
//
// in the ordered letters (a, b, c, d) = (a_q, -q c_q^*, c_q, a_q^*). Evaluating a
// word on A substitutes A.a, A.b, A.c, A.d for those letters, in that order.

#include <string>
#include <vector>

#include "qbf/linalg.hpp"
#include "qbf/qgmatrix.hpp"
#include "qbf/qscalar.hpp"

namespace qbf {

struct CoeffTerm {
  double coeff = 0.0;
  int i = 0;
  // Exponents of b, c, a, d in that order.
  int pow_b = 0, pow_c = 0, pow_a = 0, pow_d = 0;
};

struct CoeffWord {
  HalfInt t;
  SignedHalfInt n, m;
  std::vector<CoeffTerm> terms;
};

/// Rejects n, m outside {-t, ..., t} or in the wrong coset.
CoeffWord irrep_coeff_word(const QParam& q, HalfInt t, SignedHalfInt n, SignedHalfInt m);

/// v^(t): entries indexed n, m = -t..t (ascending), each a dim x dim block.
struct RepMatrix {
  HalfInt t;
  BlockOpMat v;

  int dim() const noexcept { return v.dim(); }
  const CMat& entry(SignedHalfInt n, SignedHalfInt m) const;
};

RepMatrix evaluate_rep(const TwoByTwoOp& a, const QParam& q, HalfInt t);

/// ||v^(t)|| in M_{2t+1} (x) B(H).
double rep_norm(const TwoByTwoOp& a, const QParam& q, HalfInt t);

struct FusionReport {
  HalfInt t1, t2;
  std::vector<HalfInt> summands;  // |t1-t2|, ..., t1+t2
  double residual = 0.0;
  int null_dim = 0;
  bool passed = false;
  CMat intertwiner;
};

/// Checks v^(t1) top v^(t2) ~ direct sum of v^(r) by a scalar unitary.
FusionReport verify_fusion(const TwoByTwoOp& a, const QParam& q, HalfInt t1, HalfInt t2, double tol);

/// Q_s = diag(|q|^{2k}), k = -s..s.
CMat q_matrix(const QParam& q, HalfInt s);

bool check_unitary_corep(const TwoByTwoOp& a, const QParam& q, HalfInt t, double tol);

}  // namespace qbf

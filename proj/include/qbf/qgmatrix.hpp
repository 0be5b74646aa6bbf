#pragma once

// 2x2 operator matrices with quantum-group structure: relation checks for
// SL_q(2,C)-, SU_q(2)- and AN_q-matrices, the irreducible family A_s, the
// bot product of AN_q-matrices, their decomposition into irreducibles, and
// composition of Iwasawa factors.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbf/linalg.hpp"
#include "qbf/qscalar.hpp"

namespace qbf {

/// [[a, b], [c, d]] with entries acting on one space C^dim.
struct TwoByTwoOp {
  CMat a, b, c, d;

  TwoByTwoOp() = default;
  TwoByTwoOp(CMat a_, CMat b_, CMat c_, CMat d_);

  int dim() const noexcept { return static_cast<int>(a.rows()); }
  double max_entry_norm() const;

  BlockOpMat as_blocks() const;
  static TwoByTwoOp from_blocks(const BlockOpMat& m);

  /// [[rho, 0], [0, 1/rho]] on C^1.
  static TwoByTwoOp character(cplx rho);
  /// [[I, 0], [0, I]] on C^dim.
  static TwoByTwoOp identity(int dim);
};

struct RelationReport {
  std::vector<std::string> labels;
  std::vector<double> residuals;  // operator norm of LHS - RHS
  double max_residual = 0.0;
  double scale = 1.0;             // (1 + max entry norm)^2
  std::optional<bool> spectrum_ok;
  bool passed = false;

  /// Label of the relation with the largest residual.
  std::string worst() const;
};

RelationReport check_slq2c(const TwoByTwoOp& m, const QParam& q, double tol);
RelationReport check_suq2(const TwoByTwoOp& m, const QParam& q, double tol);
/// Throws std::domain_error when the a-entry is not invertible.
RelationReport check_anq(const TwoByTwoOp& m, const QParam& q, double tol);

/// Membership of lambda in S_q (R_+ for q > 0, the spiral |q|^x e^{i pi x} or 0 for q < 0).
bool in_sq(cplx lambda, const QParam& q, double tol);

/// The (2s+1)-dimensional irreducible AN_q-matrix, basis e_{-s}, ..., e_s.
TwoByTwoOp make_As(const QParam& q, HalfInt s);

/// (A bot B)_{il} = sum_j A_ij (x) B_jl.
TwoByTwoOp anq_bot(const TwoByTwoOp& a, const TwoByTwoOp& b);

struct AnqDecomposition {
  std::vector<std::pair<HalfInt, int>> blocks;  // (s, multiplicity), s descending
  CMat intertwiner;                             // U A U^* = direct sum of A_s blocks
  double residual = 0.0;
};

/// Splits an AN_q-matrix into irreducible A_s blocks. Throws std::runtime_error
/// with "spectrum not tileable" or "no intertwiner" on failure.
AnqDecomposition decompose_anq(const TwoByTwoOp& m, const QParam& q, double tol);

/// Reference direct sum of A_s blocks in the order given (multiplicities expanded).
TwoByTwoOp direct_sum_As(const QParam& q, const std::vector<std::pair<HalfInt, int>>& blocks);

/// Ac (x) I as a 2x2 operator matrix on H_c (x) H_d.
TwoByTwoOp inflate_compact(const TwoByTwoOp& ac, int dim_d);
/// I (x) Ad as a 2x2 operator matrix on H_c (x) H_d.
TwoByTwoOp inflate_solvable(const TwoByTwoOp& ad, int dim_c);

/// Product (Ac (x) I)(I (x) Ad). Throws std::invalid_argument if Ac is not an
/// SU_q(2)-matrix or Ad is not an AN_q-matrix at tolerance tol.
TwoByTwoOp iwasawa_compose(const TwoByTwoOp& ac, const TwoByTwoOp& ad, const QParam& q, double tol = 1e-10);

bool check_doubly_commute(const CMat& x, const CMat& y, double tol);

}  // namespace qbf

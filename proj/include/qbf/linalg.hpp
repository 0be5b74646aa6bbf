#pragma once

// Dense complex matrices and the operator-matrix tensor calculus used
// throughout: leg tensor products, direct sums, norms, spectra and a
// numerical intertwiner search.

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "qbf/qscalar.hpp"

namespace qbf {

using CMat = Eigen::MatrixXcd;

/// n x n array of d x d operator blocks: an element of M_n(B(C^d)).
class BlockOpMat {
 public:
  BlockOpMat() = default;
  BlockOpMat(int outer, int dim);  // zero blocks

  /// Every block is a 1x1 matrix holding the corresponding scalar entry.
  static BlockOpMat from_scalars(const CMat& m);
  /// Inverse of flatten(): splits an (n*d) square matrix into n x n blocks of size d.
  static BlockOpMat from_flat(const CMat& flat, int outer);
  /// Blocks delta_ij * I_d.
  static BlockOpMat identity(int outer, int dim);

  int outer() const noexcept { return outer_; }
  int dim() const noexcept { return dim_; }

  CMat& block(int i, int j) { return blocks_[static_cast<std::size_t>(i * outer_ + j)]; }
  const CMat& block(int i, int j) const { return blocks_[static_cast<std::size_t>(i * outer_ + j)]; }

  /// (n*d) x (n*d) matrix with row index i*d + p.
  CMat flatten() const;

  /// The n x n scalar matrices (block(i,j))(p,r), one per inner index pair (p,r).
  std::vector<CMat> entry_matrices() const;

 private:
  int outer_ = 0;
  int dim_ = 0;
  std::vector<CMat> blocks_;
};

double op_norm(const CMat& a);
double trace_norm(const CMat& a);
CMat kron(const CMat& a, const CMat& b);

/// u (top) v = u_13 v_23: block ((i,k),(j,l)) = u_ij v_kl, outer index i*m + k.
BlockOpMat top_tensor(const BlockOpMat& u, const BlockOpMat& v);
/// u (bot) v = u_12 v_13: block (i,l) = sum_j u_ij (x) v_jl.
BlockOpMat bot_tensor(const BlockOpMat& u, const BlockOpMat& v);

CMat direct_sum(std::span<const CMat> parts);
/// Entrywise direct sum on the inner leg; all operands share the outer size.
BlockOpMat direct_sum_blocks(std::span<const BlockOpMat> parts);
/// Block-diagonal direct sum on the outer leg; all operands share the inner dimension.
BlockOpMat direct_sum_outer(std::span<const BlockOpMat> parts);

struct IntertwinerResult {
  std::optional<CMat> unitary;
  /// max_i ||U A_i - B_i U|| / max_i ||A_i|| for the returned (or best rejected) candidate.
  double residual = 0.0;
  int null_dim = 0;
};

/// Searches for a unitary U with U A_i = B_i U for every i.
IntertwinerResult find_intertwiner(std::span<const CMat> as, std::span<const CMat> bs, double tol);

/// Eigenvalues with multiplicity, sorted by (real, imag).
std::vector<cplx> multiset_spectrum(const CMat& a);
/// Greedy nearest-neighbour matching; tol is relative to max(1, max |lambda|).
bool multiset_equal(std::span<const cplx> x, std::span<const cplx> y, double tol);

}  // namespace qbf

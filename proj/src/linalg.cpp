#include "qbf/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qbf {

BlockOpMat::BlockOpMat(int outer, int dim) : outer_(outer), dim_(dim) {
  if (outer <= 0 || dim <= 0) throw std::invalid_argument("BlockOpMat sizes must be positive");
  blocks_.assign(static_cast<std::size_t>(outer) * outer, CMat::Zero(dim, dim));
}

BlockOpMat BlockOpMat::from_scalars(const CMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("from_scalars needs a square matrix");
  BlockOpMat out(static_cast<int>(m.rows()), 1);
  for (int i = 0; i < out.outer_; ++i)
    for (int j = 0; j < out.outer_; ++j) out.block(i, j)(0, 0) = m(i, j);
  return out;
}

BlockOpMat BlockOpMat::from_flat(const CMat& flat, int outer) {
  if (outer <= 0 || flat.rows() != flat.cols() || flat.rows() % outer != 0) {
    throw std::invalid_argument("from_flat: size is not a multiple of the outer dimension");
  }
  const int d = static_cast<int>(flat.rows()) / outer;
  BlockOpMat out(outer, d);
  for (int i = 0; i < outer; ++i)
    for (int j = 0; j < outer; ++j) out.block(i, j) = flat.block(i * d, j * d, d, d);
  return out;
}

BlockOpMat BlockOpMat::identity(int outer, int dim) {
  BlockOpMat out(outer, dim);
  for (int i = 0; i < outer; ++i) out.block(i, i) = CMat::Identity(dim, dim);
  return out;
}

CMat BlockOpMat::flatten() const {
  CMat flat(outer_ * dim_, outer_ * dim_);
  for (int i = 0; i < outer_; ++i)
    for (int j = 0; j < outer_; ++j) flat.block(i * dim_, j * dim_, dim_, dim_) = block(i, j);
  return flat;
}

std::vector<CMat> BlockOpMat::entry_matrices() const {
  std::vector<CMat> out;
  out.reserve(static_cast<std::size_t>(dim_) * dim_);
  for (int p = 0; p < dim_; ++p) {
    for (int r = 0; r < dim_; ++r) {
      CMat m(outer_, outer_);
      for (int i = 0; i < outer_; ++i)
        for (int j = 0; j < outer_; ++j) m(i, j) = block(i, j)(p, r);
      out.push_back(std::move(m));
    }
  }
  return out;
}

double op_norm(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<CMat> svd(a);
  return svd.singularValues()(0);
}

double trace_norm(const CMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_norm needs a square matrix");
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<CMat> svd(a);
  return svd.singularValues().sum();
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

BlockOpMat top_tensor(const BlockOpMat& u, const BlockOpMat& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("top_tensor: operands act on different algebras");
  const int n = u.outer();
  const int m = v.outer();
  BlockOpMat out(n * m, u.dim());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < m; ++l) out.block(i * m + k, j * m + l).noalias() = u.block(i, j) * v.block(k, l);
  return out;
}

BlockOpMat bot_tensor(const BlockOpMat& u, const BlockOpMat& v) {
  if (u.outer() != v.outer()) throw std::invalid_argument("bot_tensor: outer sizes differ");
  const int n = u.outer();
  BlockOpMat out(n, u.dim() * v.dim());
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j) out.block(i, l) += kron(u.block(i, j), v.block(j, l));
  return out;
}

CMat direct_sum(std::span<const CMat> parts) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  CMat out = CMat::Zero(rows, cols);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  for (const auto& p : parts) {
    out.block(r, c, p.rows(), p.cols()) = p;
    r += p.rows();
    c += p.cols();
  }
  return out;
}

BlockOpMat direct_sum_blocks(std::span<const BlockOpMat> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum_blocks: no operands");
  const int n = parts.front().outer();
  int d = 0;
  for (const auto& p : parts) {
    if (p.outer() != n) throw std::invalid_argument("direct_sum_blocks: outer sizes differ");
    d += p.dim();
  }
  BlockOpMat out(n, d);
  std::vector<CMat> entries(parts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < parts.size(); ++k) entries[k] = parts[k].block(i, j);
      out.block(i, j) = direct_sum(entries);
    }
  }
  return out;
}

BlockOpMat direct_sum_outer(std::span<const BlockOpMat> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum_outer: no operands");
  const int d = parts.front().dim();
  int n = 0;
  for (const auto& p : parts) {
    if (p.dim() != d) throw std::invalid_argument("direct_sum_outer: inner dimensions differ");
    n += p.outer();
  }
  BlockOpMat out(n, d);
  int offset = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.outer(); ++i)
      for (int j = 0; j < p.outer(); ++j) out.block(offset + i, offset + j) = p.block(i, j);
    offset += p.outer();
  }
  return out;
}

namespace {

// Candidate null-space cutoffs relative to the largest singular value of the stacked map.
constexpr std::array<double, 3> kNullCutoffs = {1e-9, 1e-7, 1e-11};
constexpr int kDrawsPerCutoff = 3;
// Below this the candidate is treated as singular.
constexpr double kMinConditionRatio = 1e-8;

double intertwining_residual(const CMat& u, std::span<const CMat> as, std::span<const CMat> bs) {
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    worst = std::max(worst, op_norm(u * as[i] - bs[i] * u));
    scale = std::max(scale, op_norm(as[i]));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace

IntertwinerResult find_intertwiner(std::span<const CMat> as, std::span<const CMat> bs, double tol) {
  if (as.size() != bs.size() || as.empty()) {
    throw std::invalid_argument("find_intertwiner: need equally many (nonzero) A and B matrices");
  }
  const Eigen::Index n = as.front().rows();
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i].rows() != n || as[i].cols() != n || bs[i].rows() != n || bs[i].cols() != n) {
      throw std::invalid_argument("find_intertwiner: all matrices must be square of one size");
    }
  }

  // A unitary intertwiner of {A_i} and {B_i} also intertwines {A_i^*} and {B_i^*};
  // adding those equations makes the polar part of any invertible solution a solution.
  const Eigen::Index nn = n * n;
  const Eigen::Index blocks = static_cast<Eigen::Index>(2 * as.size());
  CMat stacked(blocks * nn, nn);
  const CMat id = CMat::Identity(n, n);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (int adj = 0; adj < 2; ++adj) {
      const CMat a = adj ? CMat(as[i].adjoint()) : as[i];
      const CMat b = adj ? CMat(bs[i].adjoint()) : bs[i];
      // vec(X A) - vec(B X) with column-major vec.
      stacked.middleRows(row, nn) = kron(a.transpose(), id) - kron(id, b);
      row += nn;
    }
  }

  Eigen::BDCSVD<CMat> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;

  auto null_start = [&](double cutoff) {
    Eigen::Index first = sv.size();
    while (first > 0 && sv(first - 1) <= cutoff * smax) --first;
    return first;
  };

  IntertwinerResult best;
  best.residual = std::numeric_limits<double>::infinity();
  best.null_dim = static_cast<int>(nn - null_start(kNullCutoffs.front()));
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss;

  for (double cutoff : kNullCutoffs) {
    const Eigen::Index first_null = null_start(cutoff);
    const Eigen::Index null_dim = nn - first_null;
    if (null_dim == 0) continue;
    for (int draw = 0; draw < kDrawsPerCutoff; ++draw) {
      Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(nn);
      for (Eigen::Index k = first_null; k < nn; ++k) vec += cplx(gauss(rng), gauss(rng)) * svd.matrixV().col(k);
      const CMat x = Eigen::Map<const CMat>(vec.data(), n, n);
      Eigen::BDCSVD<CMat> polar(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const auto& xs = polar.singularValues();
      if (xs(0) == 0.0 || xs(n - 1) < kMinConditionRatio * xs(0)) continue;
      const CMat u = polar.matrixU() * polar.matrixV().adjoint();
      const double res = intertwining_residual(u, as, bs);
      if (res < best.residual) {
        best.residual = res;
        best.null_dim = static_cast<int>(null_dim);
        best.unitary = u;
      }
      if (res <= tol) return best;
    }
  }
  if (best.residual > tol) best.unitary.reset();
  return best;
}

std::vector<cplx> multiset_spectrum(const CMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("multiset_spectrum needs a square matrix");
  std::vector<cplx> ev;
  if (a.size() == 0) return ev;
  Eigen::ComplexEigenSolver<CMat> es(a, false);
  ev.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return ev;
}

bool multiset_equal(std::span<const cplx> x, std::span<const cplx> y, double tol) {
  if (x.size() != y.size()) return false;
  double scale = 1.0;
  for (cplx v : x) scale = std::max(scale, std::abs(v));
  for (cplx v : y) scale = std::max(scale, std::abs(v));
  std::vector<bool> used(y.size(), false);
  for (cplx v : x) {
    std::size_t pick = y.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(v - y[j]);
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    if (pick == y.size() || best > tol * scale) return false;
    used[pick] = true;
  }
  return true;
}

}  // namespace qbf

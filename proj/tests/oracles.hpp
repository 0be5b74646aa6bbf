#pragma once

// Reference computations for the tests. Each one is written from the defining
// formula, without reusing the library code path it is compared against.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qbf/linalg.hpp"
#include "qbf/qgmatrix.hpp"

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

// Gaussian binomial from the Pascal rule [a,b] = [a-1,b-1] + base^b [a-1,b].
inline double q_binomial_pascal(int a, int b, double base) {
  std::vector<std::vector<double>> t(a + 1, std::vector<double>(a + 1, 0.0));
  for (int n = 0; n <= a; ++n) {
    t[n][0] = 1.0;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + std::pow(base, k) * (k <= n - 1 ? t[n - 1][k] : 0.0);
  }
  return t[a][b];
}

// Spectral norm as the square root of the top eigenvalue of M^* M.
inline double spectral_norm(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m.adjoint() * m);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

inline CMat random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> g;
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

inline qbf::BlockOpMat random_blocks(std::mt19937_64& rng, int outer, int dim) {
  qbf::BlockOpMat b(outer, dim);
  for (int i = 0; i < outer; ++i)
    for (int j = 0; j < outer; ++j) b.block(i, j) = random_matrix(rng, dim, dim);
  return b;
}

inline qbf::TwoByTwoOp random_op(std::mt19937_64& rng, int dim) {
  return {random_matrix(rng, dim, dim), random_matrix(rng, dim, dim), random_matrix(rng, dim, dim),
          random_matrix(rng, dim, dim)};
}

// Kronecker product entry by entry.
inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Basis e_{-s}, ..., e_s: a e_k = q^k e_k, n e_k = sqrt(...) e_{k+1}.
inline qbf::TwoByTwoOp As_by_hand(double q, int twice_s) {
  const int n = twice_s + 1;
  const double aq = std::abs(q);
  CMat a = CMat::Zero(n, n), nn = CMat::Zero(n, n), d = CMat::Zero(n, n);
  for (int idx = 0; idx < n; ++idx) {
    const double k = (2 * idx - twice_s) / 2.0;
    const double s = twice_s / 2.0;
    // q^k on the spiral branch for negative q.
    const cplx qk = q > 0 ? cplx(std::pow(aq, k), 0.0) : std::polar(std::pow(aq, k), M_PI * k);
    a(idx, idx) = qk;
    d(idx, idx) = 1.0 / qk;
    if (idx + 1 < n) {
      const double v = std::pow(aq, -2 * s) - std::pow(aq, -2 * k) - std::pow(aq, 2 * k + 2) + std::pow(aq, 2 * s + 2);
      nn(idx + 1, idx) = std::sqrt(std::max(0.0, v));
    }
  }
  return {a, nn, CMat::Zero(n, n), d};
}

inline CMat permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  CMat m = CMat::Zero(n, n);
  for (int r = 0; r < n; ++r) m(r, perm[r]) = 1.0;
  return m;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle

#include "qbf/freeqg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbf {

namespace {

void require_square(const CMat& v, int n, const char* what) {
  if (v.rows() != v.cols() || v.rows() != n) {
    throw std::invalid_argument(std::string(what) + ": V must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

bool invertible(const CMat& v) {
  if (v.size() == 0) return false;
  Eigen::BDCSVD<CMat> svd(v);
  const auto& s = svd.singularValues();
  return s(0) > 0.0 && s(s.size() - 1) > 1e-12 * s(0);
}

}  // namespace

FMatrix::FMatrix(CMat f, Flavor flavor, double tol) : f_(std::move(f)), flavor_(flavor) {
  if (f_.rows() != f_.cols() || f_.rows() == 0) throw std::invalid_argument("F must be a nonempty square matrix");
  if (!invertible(f_)) throw std::invalid_argument("F must be invertible");
  if (flavor_ == Flavor::orthogonal) {
    const CMat ffbar = f_ * f_.conjugate();
    const CMat id = CMat::Identity(f_.rows(), f_.cols());
    if (op_norm(ffbar - id) <= tol) {
      sign_ = 1;
    } else if (op_norm(ffbar + id) <= tol) {
      sign_ = -1;
    } else {
      throw std::invalid_argument("orthogonal F needs F conj(F) = +-I");
    }
  }
}

F2Word::F2Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l != 1 && l != 2) throw std::invalid_argument("F2Word letters are 1 (g1) or 2 (g2)");
  }
}

F2Word F2Word::parse(const std::string& text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (pos + 1 < text.size() && text[pos] == 'g' && (text[pos + 1] == '1' || text[pos + 1] == '2')) {
      letters.push_back(text[pos + 1] - '0');
      pos += 2;
    } else {
      throw std::invalid_argument("bad word '" + text + "'");
    }
  }
  return F2Word(std::move(letters));
}

int F2Word::count(int letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

F2Word F2Word::bar() const {
  F2Word out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& l : out.letters_) l = 3 - l;
  return out;
}

F2Word F2Word::operator+(const F2Word& other) const {
  F2Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

std::string F2Word::str() const {
  std::string s;
  for (int l : letters_) s += (l == 1) ? "g1" : "g2";
  return s;
}

bool ofplus_char_check(const CMat& v, const FMatrix& f, double tol) {
  require_square(v, f.size(), "ofplus_char_check");
  if (!invertible(v)) return false;
  const CMat& F = f.matrix();
  return op_norm(v * F * v.transpose() - F) <= tol * op_norm(F);
}

double ofplus_rep_norm(const CMat& v, HalfInt s) { return std::pow(op_norm(v), s.twice()); }

bool ofplus_in_spec(const CMat& v, const FMatrix& f, double beta, double tol) {
  if (!ofplus_char_check(v, f, tol)) return false;
  const double n = op_norm(v);
  if (n < 1.0 - 1e-10) throw std::logic_error("character relations hold but ||V|| < 1");
  return n <= beta;
}

bool ufplus_char_check(const CMat& v, const FMatrix& f, double tol) {
  require_square(v, f.size(), "ufplus_char_check");
  if (!invertible(v)) return false;
  const CMat g = (f.matrix().adjoint() * f.matrix()).transpose();
  return op_norm(v * g - g * v) <= tol * std::max(1.0, op_norm(v) * op_norm(g));
}

double ufplus_rep_norm(const CMat& v, const F2Word& g) {
  if (g.empty()) return 1.0;
  const double nv = op_norm(v);
  const double ninv = op_norm(v.inverse());
  return std::pow(nv, g.count(1)) * std::pow(ninv, g.count(2));
}

bool ufplus_in_spec(const CMat& v, const FMatrix& f, double beta, double tol) {
  if (!ufplus_char_check(v, f, tol)) return false;
  return op_norm(v) <= beta && op_norm(v.inverse()) <= beta;
}

std::vector<F2Word> f2_fusion(const F2Word& g, const F2Word& h) {
  std::vector<F2Word> out;
  const auto& gl = g.letters();
  const auto& hl = h.letters();
  const std::size_t limit = std::min(gl.size(), hl.size());
  for (std::size_t k = 0; k <= limit; ++k) {
    // sigma = last k letters of g; bar(sigma) must be the first k letters of h.
    bool match = true;
    for (std::size_t j = 0; j < k && match; ++j) match = (3 - gl[gl.size() - 1 - j]) == hl[j];
    if (!match) break;
    F2Word alpha(std::vector<int>(gl.begin(), gl.end() - static_cast<std::ptrdiff_t>(k)));
    F2Word beta(std::vector<int>(hl.begin() + static_cast<std::ptrdiff_t>(k), hl.end()));
    out.push_back(alpha + beta);
  }
  return out;
}

bool snplus_char_check(const CMat& v, double tol) {
  if (v.rows() != v.cols() || v.rows() == 0) return false;
  const Eigen::Index n = v.rows();
  std::vector<int> row_ones(n, 0), col_ones(n, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const cplx x = v(i, j);
      if (std::abs(x) <= tol) continue;
      if (std::abs(x - 1.0) <= tol) {
        ++row_ones[i];
        ++col_ones[j];
      } else {
        return false;
      }
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    if (row_ones[k] != 1 || col_ones[k] != 1) return false;
  }
  return true;
}

bool suq2_char_in_spec(cplx rho, double beta) {
  if (rho == cplx(0.0, 0.0)) throw std::invalid_argument("character parameter rho must be nonzero");
  if (!(beta >= 1.0)) throw std::invalid_argument("suq2_char_in_spec needs beta >= 1");
  const double r = std::abs(rho);
  return 1.0 / beta <= r && r <= beta;
}

}  // namespace qbf

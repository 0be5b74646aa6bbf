#pragma once

// Character spectra of free orthogonal, free unitary and quantum permutation
// groups, the SU_q(2) annulus, and fusion of words in the free semigroup on
// two generators.

#include <string>
#include <vector>

#include "qbf/linalg.hpp"
#include "qbf/qscalar.hpp"

namespace qbf {

class FMatrix {
 public:
  enum class Flavor { orthogonal, unitary };

  /// Orthogonal flavor requires F conj(F) = +-I within tol. Throws std::invalid_argument.
  FMatrix(CMat f, Flavor flavor, double tol = 1e-10);

  const CMat& matrix() const noexcept { return f_; }
  Flavor flavor() const noexcept { return flavor_; }
  int size() const noexcept { return static_cast<int>(f_.rows()); }
  /// +1 or -1 for the orthogonal flavor, 0 otherwise.
  int sign() const noexcept { return sign_; }

 private:
  CMat f_;
  Flavor flavor_;
  int sign_ = 0;
};

/// Word over {g1, g2}; letters stored as 1 and 2.
class F2Word {
 public:
  F2Word() = default;
  explicit F2Word(std::vector<int> letters);
  /// "", "g1", "g1g2g2", ... Throws std::invalid_argument.
  static F2Word parse(const std::string& text);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int count(int letter) const;

  /// Reverse and swap g1 <-> g2.
  F2Word bar() const;
  F2Word operator+(const F2Word& other) const;
  bool operator==(const F2Word&) const = default;

  std::string str() const;

 private:
  std::vector<int> letters_;
};

bool ofplus_char_check(const CMat& v, const FMatrix& f, double tol);
/// ||V||^{2s}.
double ofplus_rep_norm(const CMat& v, HalfInt s);
/// Requires the character relations; throws std::logic_error if they hold but ||V|| < 1.
bool ofplus_in_spec(const CMat& v, const FMatrix& f, double beta, double tol);

bool ufplus_char_check(const CMat& v, const FMatrix& f, double tol);
/// ||V||^n ||V^{-1}||^m with n, m the numbers of g1 and g2 letters.
double ufplus_rep_norm(const CMat& v, const F2Word& g);
bool ufplus_in_spec(const CMat& v, const FMatrix& f, double beta, double tol);

/// All alpha beta with g = alpha sigma and h = bar(sigma) beta, shortest sigma first.
std::vector<F2Word> f2_fusion(const F2Word& g, const F2Word& h);

bool snplus_char_check(const CMat& v, double tol);

/// 1/beta <= |rho| <= beta. Throws std::invalid_argument for rho = 0 or beta < 1.
bool suq2_char_in_spec(cplx rho, double beta);

}  // namespace qbf

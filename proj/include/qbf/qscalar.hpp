#pragma once

// q-deformed scalar arithmetic: branch-aware powers of q, q-binomials,
// quantum dimensions and second-kind Chebyshev values.

#include <complex>
#include <compare>
#include <string>

namespace qbf {

using cplx = std::complex<double>;

/// Deformation parameter q with -1 < q < 1, q != 0.
class QParam {
 public:
  explicit QParam(double q);

  double value() const noexcept { return q_; }
  double abs() const noexcept { return q_ < 0 ? -q_ : q_; }
  bool negative() const noexcept { return q_ < 0; }

 private:
  double q_;
};

/// Signed element of (1/2)Z, stored as twice its value.
struct SignedHalfInt {
  int twice = 0;

  static constexpr SignedHalfInt from_twice(int t) noexcept { return {t}; }
  double value() const noexcept { return twice / 2.0; }
  bool is_integer() const noexcept { return twice % 2 == 0; }

  friend constexpr SignedHalfInt operator+(SignedHalfInt a, SignedHalfInt b) noexcept {
    return {a.twice + b.twice};
  }
  friend constexpr SignedHalfInt operator-(SignedHalfInt a) noexcept { return {-a.twice}; }
  friend constexpr auto operator<=>(SignedHalfInt, SignedHalfInt) = default;
};

/// Label s in (1/2)Z_+ of an SU_q(2) irreducible; dimension 2s+1.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static HalfInt from_twice(int twice);
  static HalfInt from_double(double s);  // rounds to the nearest half-integer, rejects s < 0

  constexpr int twice() const noexcept { return twice_; }
  constexpr double value() const noexcept { return twice_ / 2.0; }
  constexpr int dim() const noexcept { return twice_ + 1; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  constexpr operator SignedHalfInt() const noexcept { return {twice_}; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  int twice_ = 0;
};

/// "3/2", "1", "0" style rendering.
std::string to_string(HalfInt s);
std::string to_string(SignedHalfInt k);

/// q^k on the S_q branch: |q|^k e^{i pi k} for q < 0.
cplx q_power(const QParam& q, SignedHalfInt k);

/// Gaussian binomial prod_{j<=a}(1-base^j) / (prod_{j<=b} * prod_{j<=a-b}).
double q_binomial(int a, int b, double base);

/// log|binom(a,b)_base| together with its sign; used where the value overflows.
struct LogValue {
  double log_abs = 0.0;
  int sign = 1;
};
LogValue q_binomial_log(int a, int b, double base);

/// d_s = sum_{k=-s..s} |q|^{2k}.
double quantum_dim(const QParam& q, HalfInt s);

/// Second-kind Chebyshev value with U_0 = 1, U_1(x) = x, U_{k+1} = x U_k - U_{k-1}.
double chebyshev_u(int n, double x);

}  // namespace qbf

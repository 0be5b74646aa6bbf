#include "qbf/qscalar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbf {

QParam::QParam(double q) : q_(q) {
  if (!std::isfinite(q) || !(q > -1.0 && q < 1.0) || q == 0.0) {
    throw std::invalid_argument("q must satisfy -1 < q < 1 and q != 0, got " + std::to_string(q));
  }
}

HalfInt HalfInt::from_twice(int twice) {
  if (twice < 0) throw std::invalid_argument("half-integer label must be nonnegative");
  HalfInt h;
  h.twice_ = twice;
  return h;
}

HalfInt HalfInt::from_double(double s) {
  const double t = std::round(2.0 * s);
  if (!std::isfinite(s) || t < 0 || std::abs(2.0 * s - t) > 1e-9) {
    throw std::invalid_argument("not a nonnegative half-integer: " + std::to_string(s));
  }
  return from_twice(static_cast<int>(t));
}

namespace {
std::string twice_to_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}
}  // namespace

std::string to_string(HalfInt s) { return twice_to_string(s.twice()); }
std::string to_string(SignedHalfInt k) { return twice_to_string(k.twice); }

cplx q_power(const QParam& q, SignedHalfInt k) {
  const double mag = std::pow(q.abs(), k.value());
  if (!q.negative()) return {mag, 0.0};
  // e^{i pi k} for k in Z/2 is one of 1, i, -1, -i; keep it exact.
  switch (((k.twice % 4) + 4) % 4) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, -mag};
  }
}

LogValue q_binomial_log(int a, int b, double base) {
  if (b < 0 || b > a) throw std::invalid_argument("q_binomial requires 0 <= b <= a");
  if (!(base > 0.0) || base == 1.0) throw std::invalid_argument("q_binomial base must be in (0,1) or (1,inf)");
  LogValue out;
  auto accumulate = [&](int from, int to, int direction) {
    for (int j = from; j <= to; ++j) {
      const double f = 1.0 - std::pow(base, j);
      out.log_abs += direction * std::log(std::abs(f));
      if (f < 0) out.sign = -out.sign;
    }
  };
  // Cancel the common factors first; this also makes the result symmetric in b <-> a-b.
  const int lo = std::min(b, a - b);
  const int hi = std::max(b, a - b);
  accumulate(hi + 1, a, +1);
  accumulate(1, lo, -1);
  return out;
}

double q_binomial(int a, int b, double base) {
  if (b < 0 || b > a) throw std::invalid_argument("q_binomial requires 0 <= b <= a");
  if (!(base > 0.0) || base == 1.0) throw std::invalid_argument("q_binomial base must be in (0,1) or (1,inf)");
  if (a > 30) {
    const LogValue lv = q_binomial_log(a, b, base);
    return lv.sign * std::exp(lv.log_abs);
  }
  // Same factors on both sides, so binom(a,b) == binom(a,a-b) bit for bit.
  const int lo = std::min(b, a - b);
  const int hi = std::max(b, a - b);
  double num = 1.0;
  double den = 1.0;
  for (int j = hi + 1; j <= a; ++j) num *= 1.0 - std::pow(base, j);
  for (int j = 1; j <= lo; ++j) den *= 1.0 - std::pow(base, j);
  return num / den;
}

double quantum_dim(const QParam& q, HalfInt s) {
  double sum = 0.0;
  for (int k2 = -s.twice(); k2 <= s.twice(); k2 += 2) sum += std::pow(q.abs(), k2);
  return sum;
}

double chebyshev_u(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_u requires n >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < n; ++k) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace qbf

#pragma once

// Central weights on the dual of SU_q(2), the weighted Fourier norm, and the
// cb-norm estimate for homomorphisms transferred from SL_q(2,C)-matrices.

#include <map>
#include <string>
#include <vector>

#include "qbf/linalg.hpp"
#include "qbf/qgmatrix.hpp"
#include "qbf/qscalar.hpp"

namespace qbf {

/// Length function on irreducible labels.
enum class LengthKind {
  twice_spin,  // tau(s) = 2s  (SU_q(2), O_F^+)
  spin,        // tau(s) = s   (S_n^+)
};

double length_value(LengthKind kind, HalfInt s);

class Weight {
 public:
  enum class Kind { polynomial, exponential, table };

  /// (1 + tau(s))^alpha, alpha >= 0.
  static Weight polynomial(double alpha, LengthKind length = LengthKind::twice_spin);
  /// beta^tau(s), beta >= 1.
  static Weight exponential(double beta, LengthKind length = LengthKind::twice_spin);
  /// Explicit values; every entry must be positive.
  static Weight table(std::map<HalfInt, double> values);

  /// "poly:2", "exp:1.5".
  static Weight parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }
  LengthKind length() const noexcept { return length_; }
  const std::map<HalfInt, double>& values() const noexcept { return table_; }

  /// Throws std::out_of_range on a table miss.
  double operator()(HalfInt s) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::polynomial;
  double param_ = 0.0;
  LengthKind length_ = LengthKind::twice_spin;
  std::map<HalfInt, double> table_;
};

double weight_value(const Weight& w, HalfInt s);

struct WeightViolation {
  HalfInt s, t, tp;  // w(s) > w(t) w(tp) although s occurs in t (top) tp
  double lhs = 0.0, rhs = 0.0;
};

struct WeightReport {
  std::vector<WeightViolation> violations;
  double min_value = 0.0;  // smallest w(s) seen; the lower bound delta
  bool ok() const noexcept { return violations.empty() && min_value > 0.0; }
};

/// Submultiplicativity over all t, t' <= s_max and s in the fusion range
/// |t - t'|, ..., t + t'. Labels absent from a table weight are skipped.
WeightReport check_weight(const Weight& w, HalfInt s_max);

/// Finitely supported X in c_00 of the dual, one (2s+1)-square block per label.
class CoeffFamily {
 public:
  /// Throws std::invalid_argument when the block size is not 2s+1.
  void set(HalfInt s, CMat x);
  const std::map<HalfInt, CMat>& blocks() const noexcept { return blocks_; }

  CoeffFamily scaled(cplx lambda) const;
  /// Blockwise sum; labels present in only one operand are copied.
  friend CoeffFamily operator+(const CoeffFamily& a, const CoeffFamily& b);

 private:
  std::map<HalfInt, CMat> blocks_;
};

/// sum_s d_s w(s) || X_s Q_s^{-1} ||_1.
double fourier_norm(const CoeffFamily& x, const Weight& w, const QParam& q);

enum class Trend { saturating, growing };
const char* to_string(Trend t);

struct CbEstimate {
  double sup_value = 0.0;
  HalfInt argmax;
  Trend trend = Trend::saturating;
  std::vector<double> ratios;  // r(t) = ||v^(t)|| / w(t), t = 0, 1/2, ..., t_max
};

/// Ratio r(t) for every half-integer up to t_max. Growing iff the last three
/// successive quotients r(t+1/2)/r(t) all exceed 1 + 1e-6.
CbEstimate cb_norm_estimate(const TwoByTwoOp& a, const QParam& q, const Weight& w, HalfInt t_max);

/// |q|^{-s} <= beta. Throws std::invalid_argument when beta < 1.
bool classify_boundedness(const QParam& q, HalfInt s, double beta);

}  // namespace qbf

#include "qbf/beurling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qbf/corep.hpp"

namespace qbf {

double length_value(LengthKind kind, HalfInt s) {
  return kind == LengthKind::twice_spin ? static_cast<double>(s.twice()) : s.value();
}

Weight Weight::polynomial(double alpha, LengthKind length) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("polynomial weight needs alpha >= 0");
  Weight w;
  w.kind_ = Kind::polynomial;
  w.param_ = alpha;
  w.length_ = length;
  return w;
}

Weight Weight::exponential(double beta, LengthKind length) {
  if (!(beta >= 1.0) || !std::isfinite(beta)) throw std::invalid_argument("exponential weight needs beta >= 1");
  Weight w;
  w.kind_ = Kind::exponential;
  w.param_ = beta;
  w.length_ = length;
  return w;
}

Weight Weight::table(std::map<HalfInt, double> values) {
  for (const auto& [s, v] : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("table weight value at s=" + to_string(s) + " is not positive");
    }
  }
  Weight w;
  w.kind_ = Kind::table;
  w.table_ = std::move(values);
  return w;
}

Weight Weight::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("weight must look like poly:ALPHA or exp:BETA");
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad weight parameter '" + num + "'");
  }
  if (kind == "poly") return polynomial(value);
  if (kind == "exp") return exponential(value);
  throw std::invalid_argument("unknown weight kind '" + kind + "'");
}

double Weight::operator()(HalfInt s) const {
  switch (kind_) {
    case Kind::polynomial:
      return std::pow(1.0 + length_value(length_, s), param_);
    case Kind::exponential:
      return std::pow(param_, length_value(length_, s));
    case Kind::table: {
      const auto it = table_.find(s);
      if (it == table_.end()) throw std::out_of_range("table weight has no value at s=" + to_string(s));
      return it->second;
    }
  }
  return 0.0;
}

std::string Weight::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::polynomial: os << "poly:" << param_; break;
    case Kind::exponential: os << "exp:" << param_; break;
    case Kind::table: os << "table[" << table_.size() << "]"; break;
  }
  return os.str();
}

double weight_value(const Weight& w, HalfInt s) { return w(s); }

WeightReport check_weight(const Weight& w, HalfInt s_max) {
  WeightReport rep;
  rep.min_value = std::numeric_limits<double>::infinity();

  auto lookup = [&](int twice, double& out) {
    const HalfInt s = HalfInt::from_twice(twice);
    if (w.kind() == Weight::Kind::table && !w.values().count(s)) return false;
    out = w(s);
    return true;
  };

  const int top = s_max.twice();
  for (int s2 = 0; s2 <= 2 * top; ++s2) {
    double v = 0.0;
    if (lookup(s2, v)) rep.min_value = std::min(rep.min_value, v);
  }
  for (int t2 = 0; t2 <= top; ++t2) {
    double wt = 0.0;
    if (!lookup(t2, wt)) continue;
    for (int tp2 = 0; tp2 <= top; ++tp2) {
      double wtp = 0.0;
      if (!lookup(tp2, wtp)) continue;
      for (int s2 = std::abs(t2 - tp2); s2 <= t2 + tp2; s2 += 2) {
        double ws = 0.0;
        if (!lookup(s2, ws)) continue;
        const double rhs = wt * wtp;
        // Relative slack so exact identities like beta^{2s} = beta^{2t} beta^{2t'} survive rounding.
        if (ws > rhs * (1.0 + 1e-12)) {
          rep.violations.push_back({HalfInt::from_twice(s2), HalfInt::from_twice(t2), HalfInt::from_twice(tp2), ws, rhs});
        }
      }
    }
  }
  if (!std::isfinite(rep.min_value)) rep.min_value = 0.0;
  return rep;
}

void CoeffFamily::set(HalfInt s, CMat x) {
  if (x.rows() != s.dim() || x.cols() != s.dim()) {
    throw std::invalid_argument("CoeffFamily block at s=" + to_string(s) + " must be " + std::to_string(s.dim()) +
                                "x" + std::to_string(s.dim()));
  }
  blocks_[s] = std::move(x);
}

CoeffFamily CoeffFamily::scaled(cplx lambda) const {
  CoeffFamily out = *this;
  for (auto& [s, x] : out.blocks_) x *= lambda;
  return out;
}

CoeffFamily operator+(const CoeffFamily& a, const CoeffFamily& b) {
  CoeffFamily out = a;
  for (const auto& [s, x] : b.blocks_) {
    auto it = out.blocks_.find(s);
    if (it == out.blocks_.end()) {
      out.blocks_.emplace(s, x);
    } else {
      it->second += x;
    }
  }
  return out;
}

double fourier_norm(const CoeffFamily& x, const Weight& w, const QParam& q) {
  double total = 0.0;
  for (const auto& [s, block] : x.blocks()) {
    // Q_s is diagonal, so X Q^{-1} just rescales columns.
    const CMat qm = q_matrix(q, s);
    CMat scaled = block;
    for (Eigen::Index k = 0; k < scaled.cols(); ++k) scaled.col(k) /= qm(k, k).real();
    total += quantum_dim(q, s) * w(s) * trace_norm(scaled);
  }
  return total;
}

const char* to_string(Trend t) { return t == Trend::growing ? "growing" : "saturating"; }

CbEstimate cb_norm_estimate(const TwoByTwoOp& a, const QParam& q, const Weight& w, HalfInt t_max) {
  CbEstimate est;
  est.sup_value = -1.0;
  for (int t2 = 0; t2 <= t_max.twice(); ++t2) {
    const HalfInt t = HalfInt::from_twice(t2);
    const double r = rep_norm(a, q, t) / w(t);
    est.ratios.push_back(r);
    if (r > est.sup_value) {
      est.sup_value = r;
      est.argmax = t;
    }
  }
  const auto& r = est.ratios;
  bool growing = r.size() >= 4;
  for (std::size_t k = r.size() >= 3 ? r.size() - 3 : 0; growing && k < r.size(); ++k) {
    growing = r[k] > r[k - 1] * (1.0 + 1e-6);
  }
  est.trend = growing ? Trend::growing : Trend::saturating;
  return est;
}

bool classify_boundedness(const QParam& q, HalfInt s, double beta) {
  if (!(beta >= 1.0)) throw std::invalid_argument("classify_boundedness needs beta >= 1");
  return std::pow(q.abs(), -s.value()) <= beta;
}

}  // namespace qbf

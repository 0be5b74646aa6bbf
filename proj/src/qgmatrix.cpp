#include "qbf/qgmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qbf {

TwoByTwoOp::TwoByTwoOp(CMat a_, CMat b_, CMat c_, CMat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  const auto n = a.rows();
  for (const CMat* m : {&a, &b, &c, &d}) {
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("TwoByTwoOp entries must share one square size");
  }
}

double TwoByTwoOp::max_entry_norm() const {
  return std::max({op_norm(a), op_norm(b), op_norm(c), op_norm(d)});
}

BlockOpMat TwoByTwoOp::as_blocks() const {
  BlockOpMat m(2, dim());
  m.block(0, 0) = a;
  m.block(0, 1) = b;
  m.block(1, 0) = c;
  m.block(1, 1) = d;
  return m;
}

TwoByTwoOp TwoByTwoOp::from_blocks(const BlockOpMat& m) {
  if (m.outer() != 2) throw std::invalid_argument("from_blocks needs a 2x2 operator matrix");
  return {m.block(0, 0), m.block(0, 1), m.block(1, 0), m.block(1, 1)};
}

TwoByTwoOp TwoByTwoOp::character(cplx rho) {
  if (rho == cplx(0.0)) throw std::invalid_argument("character needs rho != 0");
  CMat a(1, 1), z = CMat::Zero(1, 1), d(1, 1);
  a(0, 0) = rho;
  d(0, 0) = 1.0 / rho;
  return {a, z, z, d};
}

TwoByTwoOp TwoByTwoOp::identity(int dim) {
  const CMat id = CMat::Identity(dim, dim);
  const CMat z = CMat::Zero(dim, dim);
  return {id, z, z, id};
}

std::string RelationReport::worst() const {
  if (residuals.empty()) return {};
  const auto it = std::max_element(residuals.begin(), residuals.end());
  return labels[static_cast<std::size_t>(it - residuals.begin())];
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(double max_entry_norm) {
    report_.scale = (1.0 + max_entry_norm) * (1.0 + max_entry_norm);
  }

  void add(std::string label, const CMat& lhs_minus_rhs) {
    const double r = op_norm(lhs_minus_rhs);
    report_.labels.push_back(std::move(label));
    report_.residuals.push_back(r);
    report_.max_residual = std::max(report_.max_residual, r);
  }

  RelationReport finish(double tol, std::optional<bool> spectrum_ok = std::nullopt) {
    report_.spectrum_ok = spectrum_ok;
    report_.passed = report_.max_residual <= tol * report_.scale && spectrum_ok.value_or(true);
    return std::move(report_);
  }

 private:
  RelationReport report_;
};

CMat adj(const CMat& m) { return m.adjoint(); }

// Eigenvalue tests are looser than entry residuals; eigen-solvers lose digits on non-normal input.
double spectral_tol(double tol) { return std::max(tol, 1e-8); }

}  // namespace

RelationReport check_slq2c(const TwoByTwoOp& m, const QParam& qp, double tol) {
  const double q = qp.value();
  const double k = 1.0 - q * q;
  const CMat& a = m.a;
  const CMat& b = m.b;
  const CMat& c = m.c;
  const CMat& d = m.d;
  const CMat as = adj(a), bs = adj(b), cs = adj(c), ds = adj(d);
  const CMat id = CMat::Identity(m.dim(), m.dim());

  ReportBuilder rb(m.max_entry_norm());
  rb.add("ab = q ba", a * b - q * b * a);
  rb.add("ac = q ca", a * c - q * c * a);
  rb.add("ad - q bc = I", a * d - q * b * c - id);
  rb.add("bc = cb", b * c - c * b);
  rb.add("bd = q db", b * d - q * d * b);
  rb.add("cd = q dc", c * d - q * d * c);
  rb.add("ca* = q a*c", c * as - q * as * c);
  rb.add("da* = a*d", d * as - as * d);
  rb.add("da - q^-1 bc = I", d * a - (1.0 / q) * b * c - id);
  rb.add("cb* = b*c", c * bs - bs * c);
  rb.add("dc* = q^-1 c*d", d * cs - (1.0 / q) * cs * d);
  rb.add("cc* = c*c", c * cs - cs * c);
  rb.add("ba* = q^-1 a*b + q^-1 (1-q^2) c*d", b * as - (1.0 / q) * as * b - (k / q) * cs * d);
  rb.add("db* = q b*d - q (1-q^2) a*c", d * bs - q * bs * d + q * k * as * c);
  rb.add("aa* = a*a + (1-q^2) c*c", a * as - as * a - k * cs * c);
  rb.add("dd* = d*d - (1-q^2) c*c", d * ds - ds * d + k * cs * c);
  rb.add("bb* = b*b + (1-q^2)(d*d - a*a) - (1-q^2)^2 c*c",
         b * bs - bs * b - k * (ds * d - as * a) + k * k * cs * c);
  return rb.finish(tol);
}

RelationReport check_suq2(const TwoByTwoOp& m, const QParam& qp, double tol) {
  const double q = qp.value();
  const CMat& a = m.a;
  const CMat& c = m.c;
  const CMat as = adj(a), cs = adj(c);
  const CMat id = CMat::Identity(m.dim(), m.dim());

  ReportBuilder rb(m.max_entry_norm());
  rb.add("a*a + c*c = I", as * a + cs * c - id);
  rb.add("aa* + q^2 c*c = I", a * as + q * q * cs * c - id);
  rb.add("c*c = cc*", cs * c - c * cs);
  rb.add("ac = q ca", a * c - q * c * a);
  rb.add("ac* = q c*a", a * cs - q * cs * a);
  rb.add("b = -q c*", m.b + q * cs);
  rb.add("d = a*", m.d - as);
  return rb.finish(tol);
}

bool in_sq(cplx lambda, const QParam& q, double tol) {
  const double mag = std::abs(lambda);
  if (!q.negative()) return mag > 0.0 && std::abs(lambda / mag - 1.0) <= tol;
  if (mag <= tol) return true;
  const double x = std::log(mag) / std::log(q.abs());
  return std::abs(std::polar(1.0, M_PI * x) - lambda / mag) <= tol;
}

RelationReport check_anq(const TwoByTwoOp& m, const QParam& qp, double tol) {
  const double q = qp.value();
  const CMat& a = m.a;
  const CMat& n = m.b;
  const CMat as = adj(a), ns = adj(n);
  const CMat id = CMat::Identity(m.dim(), m.dim());

  const CMat ata = as * a;
  Eigen::FullPivLU<CMat> lu(ata);
  if (!lu.isInvertible()) throw std::domain_error("check_anq: a-entry is not invertible");
  const CMat ata_inv = lu.inverse();

  ReportBuilder rb(m.max_entry_norm());
  rb.add("c = 0", m.c);
  rb.add("ad = I", a * m.d - id);
  rb.add("da = I", m.d * a - id);
  rb.add("aa* = a*a", a * as - ata);
  rb.add("an = q na", a * n - q * n * a);
  rb.add("na* = q^-1 a*n", n * as - (1.0 / q) * as * n);
  rb.add("nn* = n*n + (1-q^2)((a*a)^-1 - a*a)", n * ns - ns * n - (1.0 - q * q) * (ata_inv - ata));

  bool spec_ok = true;
  for (cplx lambda : multiset_spectrum(a)) spec_ok = spec_ok && in_sq(lambda, qp, spectral_tol(tol));
  return rb.finish(tol, spec_ok);
}

TwoByTwoOp make_As(const QParam& q, HalfInt s) {
  const int n = s.dim();
  const int ts = s.twice();
  const double aq = q.abs();
  CMat a = CMat::Zero(n, n), nil = CMat::Zero(n, n), d = CMat::Zero(n, n);
  for (int idx = 0; idx < n; ++idx) {
    const int k2 = 2 * idx - ts;  // twice the weight k
    a(idx, idx) = q_power(q, {k2});
    d(idx, idx) = q_power(q, {-k2});
    if (idx + 1 < n) {
      const double c2 = std::pow(aq, -ts) - std::pow(aq, -k2) - std::pow(aq, k2 + 2) + std::pow(aq, ts + 2);
      nil(idx + 1, idx) = std::sqrt(std::max(c2, 0.0));
    }
  }
  return {a, nil, CMat::Zero(n, n), d};
}

TwoByTwoOp anq_bot(const TwoByTwoOp& a, const TwoByTwoOp& b) {
  return TwoByTwoOp::from_blocks(bot_tensor(a.as_blocks(), b.as_blocks()));
}

TwoByTwoOp direct_sum_As(const QParam& q, const std::vector<std::pair<HalfInt, int>>& blocks) {
  std::vector<BlockOpMat> parts;
  for (const auto& [s, mult] : blocks)
    for (int k = 0; k < mult; ++k) parts.push_back(make_As(q, s).as_blocks());
  if (parts.empty()) throw std::invalid_argument("direct_sum_As: empty block list");
  return TwoByTwoOp::from_blocks(direct_sum_blocks(parts));
}

AnqDecomposition decompose_anq(const TwoByTwoOp& m, const QParam& q, double tol) {
  const RelationReport rep = check_anq(m, q, tol);
  if (!rep.passed) throw std::invalid_argument("decompose_anq: input is not an AN_q-matrix (" + rep.worst() + ")");

  // Every irreducible block contributes the exponent string -s, ..., s to the a-spectrum.
  std::map<int, int> exponents;  // twice the exponent -> count
  const double log_q = std::log(q.abs());
  for (cplx lambda : multiset_spectrum(m.a)) {
    const double x2 = 2.0 * std::log(std::abs(lambda)) / log_q;
    const double r = std::round(x2);
    if (std::abs(x2 - r) > 1e-6) throw std::runtime_error("spectrum not tileable");
    ++exponents[static_cast<int>(r)];
  }
  std::map<int, int, std::greater<>> mult;  // twice s -> multiplicity
  while (!exponents.empty()) {
    const int top = exponents.rbegin()->first;
    if (top < 0) throw std::runtime_error("spectrum not tileable");
    for (int k2 = -top; k2 <= top; k2 += 2) {
      auto it = exponents.find(k2);
      if (it == exponents.end()) throw std::runtime_error("spectrum not tileable");
      if (--it->second == 0) exponents.erase(it);
    }
    ++mult[top];
  }

  AnqDecomposition out;
  for (const auto& [ts, k] : mult) out.blocks.emplace_back(HalfInt::from_twice(ts), k);
  const TwoByTwoOp ref = direct_sum_As(q, out.blocks);
  const std::vector<CMat> as = {m.a, m.b, m.d};
  const std::vector<CMat> bs = {ref.a, ref.b, ref.d};
  const IntertwinerResult found = find_intertwiner(as, bs, tol);
  if (!found.unitary) throw std::runtime_error("no intertwiner");
  out.intertwiner = *found.unitary;
  out.residual = found.residual;
  return out;
}

TwoByTwoOp inflate_compact(const TwoByTwoOp& ac, int dim_d) {
  const CMat id = CMat::Identity(dim_d, dim_d);
  return {kron(ac.a, id), kron(ac.b, id), kron(ac.c, id), kron(ac.d, id)};
}

TwoByTwoOp inflate_solvable(const TwoByTwoOp& ad, int dim_c) {
  const CMat id = CMat::Identity(dim_c, dim_c);
  return {kron(id, ad.a), kron(id, ad.b), kron(id, ad.c), kron(id, ad.d)};
}

TwoByTwoOp iwasawa_compose(const TwoByTwoOp& ac, const TwoByTwoOp& ad, const QParam& q, double tol) {
  const RelationReport rc = check_suq2(ac, q, tol);
  if (!rc.passed) throw std::invalid_argument("iwasawa_compose: compact factor fails " + rc.worst());
  const RelationReport rd = check_anq(ad, q, tol);
  if (!rd.passed) throw std::invalid_argument("iwasawa_compose: solvable factor fails " + rd.worst());

  const TwoByTwoOp l = inflate_compact(ac, ad.dim());
  const TwoByTwoOp r = inflate_solvable(ad, ac.dim());
  // The lower-left entry of the solvable factor is exactly zero.
  return {l.a * r.a, l.a * r.b + l.b * r.d, l.c * r.a, l.c * r.b + l.d * r.d};
}

bool check_doubly_commute(const CMat& x, const CMat& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("check_doubly_commute: size mismatch");
  const CMat ys = y.adjoint();
  return op_norm(x * y - y * x) <= tol && op_norm(x * ys - ys * x) <= tol;
}

}  // namespace qbf

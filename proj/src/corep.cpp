#include "qbf/corep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qbf {

CoeffWord irrep_coeff_word(const QParam& q, HalfInt t, SignedHalfInt n, SignedHalfInt m) {
  const int T = t.twice();
  if (std::abs(n.twice) > T || std::abs(m.twice) > T || (T - n.twice) % 2 != 0 || (T - m.twice) % 2 != 0) {
    throw std::invalid_argument("irrep_coeff_word: indices " + to_string(n) + ", " + to_string(m) +
                                " are not weights of the spin-" + to_string(t) + " representation");
  }
  const int t_minus_n = (T - n.twice) / 2;
  const int t_plus_n = (T + n.twice) / 2;
  const int t_minus_m = (T - m.twice) / 2;
  const int t_plus_m = (T + m.twice) / 2;
  const int n_minus_m = (n.twice - m.twice) / 2;

  const double base = 1.0 / (q.value() * q.value());
  const double log_q = std::log(q.abs());

  const LogValue top = q_binomial_log(T, t_minus_n, base);
  const LogValue bottom = q_binomial_log(T, t_minus_m, base);
  if (top.sign < 0 || bottom.sign < 0) {
    throw std::logic_error("irrep_coeff_word: negative q-binomial under a square root");
  }
  const double log_prefactor = 0.5 * top.log_abs - 0.5 * bottom.log_abs;

  CoeffWord word{t, n, m, {}};
  const int lo = std::max(0, -n_minus_m);
  const int hi = std::min(t_minus_n, t_plus_m);
  for (int i = lo; i <= hi; ++i) {
    const int q_exp = (t_minus_n - i) * (n_minus_m + 2 * i) - i * (n_minus_m + i);
    const LogValue b1 = q_binomial_log(t_minus_n, i, base);
    const LogValue b2 = q_binomial_log(t_plus_n, t_plus_m - i, base);
    int sign = b1.sign * b2.sign;
    if (q.negative() && (q_exp % 2 != 0)) sign = -sign;
    const double log_coeff = log_prefactor + q_exp * log_q + b1.log_abs + b2.log_abs;

    CoeffTerm term;
    term.coeff = sign * std::exp(log_coeff);
    term.i = i;
    term.pow_b = i;
    term.pow_c = n_minus_m + i;
    term.pow_a = t_minus_n - i;
    term.pow_d = t_plus_m - i;
    word.terms.push_back(term);
  }
  return word;
}

const CMat& RepMatrix::entry(SignedHalfInt n, SignedHalfInt m) const {
  const int T = t.twice();
  return v.block((n.twice + T) / 2, (m.twice + T) / 2);
}

namespace {

struct Powers {
  std::vector<CMat> mats;  // mats[k] = x^k, k >= 1; mats[0] unused
  std::vector<bool> zero;

  Powers(const CMat& x, int up_to) : mats(static_cast<std::size_t>(up_to) + 1), zero(mats.size(), false) {
    for (int k = 1; k <= up_to; ++k) {
      mats[k] = (k == 1) ? x : CMat(mats[k - 1] * x);
      zero[k] = mats[k].isZero(0.0);
    }
  }
};

}  // namespace

RepMatrix evaluate_rep(const TwoByTwoOp& a, const QParam& q, HalfInt t) {
  const int dim = a.dim();
  const int T = t.twice();
  RepMatrix out{t, BlockOpMat(T + 1, dim)};
  if (T == 0) {
    out.v.block(0, 0) = CMat::Identity(dim, dim);
    return out;
  }
  const Powers pa(a.a, T), pb(a.b, T), pc(a.c, T), pd(a.d, T);
  // Letter order inside every word: b, c, a, d.
  const std::array<const Powers*, 4> letters = {&pb, &pc, &pa, &pd};

  for (int row = 0; row <= T; ++row) {
    for (int col = 0; col <= T; ++col) {
      const CoeffWord word = irrep_coeff_word(q, t, {2 * row - T}, {2 * col - T});
      CMat& acc = out.v.block(row, col);
      for (const CoeffTerm& term : word.terms) {
        const std::array<int, 4> exps = {term.pow_b, term.pow_c, term.pow_a, term.pow_d};
        bool vanishes = false;
        for (int l = 0; l < 4; ++l) vanishes = vanishes || (exps[l] > 0 && letters[l]->zero[exps[l]]);
        if (vanishes) continue;

        CMat prod;
        bool have = false;
        for (int l = 0; l < 4; ++l) {
          if (exps[l] == 0) continue;
          const CMat& f = letters[l]->mats[exps[l]];
          prod = have ? CMat(prod * f) : f;
          have = true;
        }
        if (!have) prod = CMat::Identity(dim, dim);
        if (term.coeff != 1.0) prod *= term.coeff;
        acc += prod;
      }
    }
  }
  return out;
}

double rep_norm(const TwoByTwoOp& a, const QParam& q, HalfInt t) {
  return op_norm(evaluate_rep(a, q, t).v.flatten());
}

FusionReport verify_fusion(const TwoByTwoOp& a, const QParam& q, HalfInt t1, HalfInt t2, double tol) {
  FusionReport rep;
  rep.t1 = t1;
  rep.t2 = t2;
  for (int r = std::abs(t1.twice() - t2.twice()); r <= t1.twice() + t2.twice(); r += 2) {
    rep.summands.push_back(HalfInt::from_twice(r));
  }

  const RepMatrix v1 = evaluate_rep(a, q, t1);
  const RepMatrix v2 = evaluate_rep(a, q, t2);
  const BlockOpMat lhs = top_tensor(v1.v, v2.v);
  std::vector<BlockOpMat> parts;
  for (auto it = rep.summands.rbegin(); it != rep.summands.rend(); ++it) parts.push_back(evaluate_rep(a, q, *it).v);
  const BlockOpMat rhs = direct_sum_outer(parts);

  const std::vector<CMat> as = lhs.entry_matrices();
  const std::vector<CMat> bs = rhs.entry_matrices();

  if (t1.twice() == 0 || t2.twice() == 0) {
    // One factor is trivial: both sides are the same matrix.
    rep.intertwiner = CMat::Identity(lhs.outer(), lhs.outer());
    double worst = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) worst = std::max(worst, op_norm(as[i] - bs[i]));
    rep.residual = worst;
    rep.null_dim = -1;
    rep.passed = worst <= tol;
    return rep;
  }

  const IntertwinerResult found = find_intertwiner(as, bs, tol);
  rep.residual = found.residual;
  rep.null_dim = found.null_dim;
  rep.passed = found.unitary.has_value();
  if (found.unitary) rep.intertwiner = *found.unitary;
  return rep;
}

CMat q_matrix(const QParam& q, HalfInt s) {
  const int n = s.dim();
  CMat out = CMat::Zero(n, n);
  for (int idx = 0; idx < n; ++idx) out(idx, idx) = std::pow(q.abs(), 2 * idx - s.twice());
  return out;
}

bool check_unitary_corep(const TwoByTwoOp& a, const QParam& q, HalfInt t, double tol) {
  const CMat v = evaluate_rep(a, q, t).v.flatten();
  const CMat id = CMat::Identity(v.rows(), v.cols());
  return op_norm(v * v.adjoint() - id) <= tol && op_norm(v.adjoint() * v - id) <= tol;
}

}  // namespace qbf

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qbf/corep.hpp"

using namespace qbf;

namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

struct Letters {
  int b, c, a, d;
};

Letters letters(const CoeffTerm& t) { return {t.pow_b, t.pow_c, t.pow_a, t.pow_d}; }

}  // namespace

TEST_CASE("spin-1/2 words are the four generators") {
  const QParam q(0.4);
  const auto word = [&](int n2, int m2) { return irrep_coeff_word(q, H(1), {n2}, {m2}); };
  const auto w_aa = word(-1, -1), w_ab = word(-1, 1), w_ba = word(1, -1), w_bb = word(1, 1);
  REQUIRE(w_aa.terms.size() == 1);
  CHECK(w_aa.terms[0].coeff == 1.0);
  CHECK(w_aa.terms[0].pow_a == 1);
  REQUIRE(w_ab.terms.size() == 1);
  CHECK(w_ab.terms[0].pow_b == 1);
  CHECK(w_ab.terms[0].coeff == 1.0);
  REQUIRE(w_ba.terms.size() == 1);
  CHECK(w_ba.terms[0].pow_c == 1);
  REQUIRE(w_bb.terms.size() == 1);
  CHECK(w_bb.terms[0].pow_d == 1);
}

TEST_CASE("extreme diagonal words are pure powers") {
  for (double qv : {0.5, -0.5}) {
    const QParam q(qv);
    for (int t2 = 1; t2 <= 6; ++t2) {
      const CoeffWord top = irrep_coeff_word(q, H(t2), {t2}, {t2});
      REQUIRE(top.terms.size() == 1);
      CHECK(top.terms[0].coeff == doctest::Approx(1.0));
      const Letters lt = letters(top.terms[0]);
      CHECK(lt.d == t2);
      CHECK(lt.a + lt.b + lt.c == 0);

      const CoeffWord bottom = irrep_coeff_word(q, H(t2), {-t2}, {-t2});
      REQUIRE(bottom.terms.size() == 1);
      CHECK(letters(bottom.terms[0]).a == t2);
    }
  }
}

TEST_CASE("every word has total degree 2t") {
  const QParam q(0.7);
  for (int t2 = 0; t2 <= 6; ++t2)
    for (int n2 = -t2; n2 <= t2; n2 += 2)
      for (int m2 = -t2; m2 <= t2; m2 += 2)
        for (const CoeffTerm& term : irrep_coeff_word(q, H(t2), {n2}, {m2}).terms) {
          CHECK(term.pow_a + term.pow_b + term.pow_c + term.pow_d == t2);
          CHECK(term.pow_c - term.pow_b == (n2 - m2) / 2);
        }
}

TEST_CASE("coefficient words reject non-weights") {
  const QParam q(0.5);
  CHECK_THROWS(irrep_coeff_word(q, H(2), {4}, {0}));
  CHECK_THROWS(irrep_coeff_word(q, H(2), {1}, {0}));
  CHECK_THROWS(irrep_coeff_word(q, H(1), {1}, {0}));
}

TEST_CASE("t = 0 is the identity and t = 1/2 reproduces A exactly") {
  std::mt19937_64 rng(31);
  const QParam q(-0.6);
  for (int k = 0; k < 5; ++k) {
    const TwoByTwoOp a = oracle::random_op(rng, 3);
    const RepMatrix v0 = evaluate_rep(a, q, H(0));
    CHECK(v0.v.outer() == 1);
    CHECK(v0.v.block(0, 0).isIdentity(0.0));
    const RepMatrix v = evaluate_rep(a, q, H(1));
    CHECK(v.entry({-1}, {-1}) == a.a);
    CHECK(v.entry({-1}, {1}) == a.b);
    CHECK(v.entry({1}, {-1}) == a.c);
    CHECK(v.entry({1}, {1}) == a.d);
  }
}

TEST_CASE("characters evaluate to diagonal rho^{-2n}") {
  const QParam q(0.5);
  for (cplx rho : {cplx(0.5), cplx(2.0), std::polar(1.0, M_PI / 3), std::polar(3.0, -1.0)}) {
    for (int t2 = 0; t2 <= 8; ++t2) {
      const CMat v = evaluate_rep(TwoByTwoOp::character(rho), q, H(t2)).v.flatten();
      for (int r = 0; r <= t2; ++r) {
        for (int c = 0; c <= t2; ++c) {
          const cplx want = r == c ? std::pow(rho, -(2 * r - t2)) : cplx(0.0);
          CHECK(std::abs(v(r, c) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
      }
      const double m = std::max(std::abs(rho), 1 / std::abs(rho));
      CHECK(rep_norm(TwoByTwoOp::character(rho), q, H(t2)) == doctest::Approx(std::pow(m, t2)).epsilon(1e-10));
    }
  }
}

TEST_CASE("evaluation is multiplicative under the bot product") {
  for (double qv : {0.5, -0.5, 0.8}) {
    const QParam q(qv);
    const std::vector<TwoByTwoOp> mats = {make_As(q, H(1)), make_As(q, H(2)), TwoByTwoOp::character({0.3, 1.1})};
    for (const auto& a : mats) {
      for (const auto& b : mats) {
        for (int t2 = 0; t2 <= 3; ++t2) {
          const CMat lhs = evaluate_rep(anq_bot(a, b), q, H(t2)).v.flatten();
          const CMat rhs = bot_tensor(evaluate_rep(a, q, H(t2)).v, evaluate_rep(b, q, H(t2)).v).flatten();
          CHECK(op_norm(lhs - rhs) <= 1e-12 * std::max(1.0, op_norm(rhs)));
        }
      }
    }
  }
}

TEST_CASE("unitary characters give unitary corepresentations") {
  const QParam q(0.3);
  for (int t2 = 0; t2 <= 6; ++t2) {
    CHECK(check_unitary_corep(TwoByTwoOp::character(std::polar(1.0, 0.4)), q, H(t2), 1e-12));
    CHECK(check_unitary_corep(TwoByTwoOp::identity(2), q, H(t2), 1e-12));
  }
  CHECK_FALSE(check_unitary_corep(TwoByTwoOp::character(2.0), q, H(2), 1e-6));
  CHECK_FALSE(check_unitary_corep(make_As(q, H(1)), q, H(1), 1e-6));
}

TEST_CASE("norms of A_s grow at least like |q|^{-2st}") {
  for (double qv : {0.5, -0.7}) {
    const QParam q(qv);
    for (int s2 = 1; s2 <= 4; ++s2)
      for (int t2 = 0; t2 <= 6; ++t2) {
        const double lower = std::pow(q.abs(), -s2 * t2 / 2.0);
        CHECK(rep_norm(make_As(q, H(s2)), q, H(t2)) >= lower * (1 - 1e-12));
      }
  }
}

TEST_CASE("fusion of spin-1/2 with itself") {
  const QParam q(0.5);
  const FusionReport rep = verify_fusion(make_As(q, H(1)), q, H(1), H(1), 1e-8);
  CHECK(rep.passed);
  CHECK(rep.residual <= 1e-10);
  REQUIRE(rep.summands.size() == 2);
  CHECK(rep.summands[0] == H(0));
  CHECK(rep.summands[1] == H(2));
  const CMat& u = rep.intertwiner;
  CHECK((u * u.adjoint() - CMat::Identity(4, 4)).norm() < 1e-10);
}

TEST_CASE("fusion grid") {
  for (double qv : {0.5, -0.5}) {
    const QParam q(qv);
    const std::vector<TwoByTwoOp> mats = {TwoByTwoOp::character(0.5), TwoByTwoOp::character(std::polar(1.0, 1.0)),
                                          make_As(q, H(1)), make_As(q, H(2))};
    for (const auto& a : mats)
      for (int t1 = 0; t1 <= 3; ++t1)
        for (int t2 = 0; t2 <= 3; ++t2) {
          const FusionReport rep = verify_fusion(a, q, H(t1), H(t2), 1e-8);
          CHECK(rep.passed);
          CHECK(rep.residual <= 1e-8);
          if (t1 == 0 || t2 == 0) CHECK(rep.residual == 0.0);
        }
  }
}

TEST_CASE("fusion fails for a matrix without the relations") {
  std::mt19937_64 rng(32);
  const FusionReport rep = verify_fusion(oracle::random_op(rng, 2), QParam(0.5), H(1), H(1), 1e-8);
  CHECK_FALSE(rep.passed);
  CHECK(rep.residual > 1e-4);
}

TEST_CASE("Q_s traces") {
  for (double qv : {0.3, -0.8}) {
    const QParam q(qv);
    for (int s2 = 0; s2 <= 12; ++s2) {
      const CMat qs = q_matrix(q, H(s2));
      const double d = quantum_dim(q, H(s2));
      CHECK(std::abs(qs.trace().real() - d) <= 1e-12 * d);
      CHECK(std::abs(qs.inverse().trace().real() - d) <= 1e-12 * d);
      CHECK(qs.isDiagonal(0.0));
    }
  }
}

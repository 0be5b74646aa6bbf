#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qbf/qgmatrix.hpp"

using namespace qbf;

namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

TwoByTwoOp conjugate(const TwoByTwoOp& m, const CMat& u) {
  return {u * m.a * u.adjoint(), u * m.b * u.adjoint(), u * m.c * u.adjoint(), u * m.d * u.adjoint()};
}

CMat random_unitary(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<CMat> qr(oracle::random_matrix(rng, n, n));
  return qr.householderQ();
}

}  // namespace

TEST_CASE("A_s agrees with the hand-built matrices") {
  for (double qv : {0.5, -0.5, 0.9, -0.3}) {
    for (int s2 = 0; s2 <= 6; ++s2) {
      const TwoByTwoOp m = make_As(QParam(qv), H(s2));
      const TwoByTwoOp ref = oracle::As_by_hand(qv, s2);
      CHECK((m.a - ref.a).norm() < 1e-13);
      CHECK((m.b - ref.b).norm() < 1e-13);
      CHECK(m.c.isZero(0.0));
      CHECK((m.d - ref.d).norm() < 1e-12);
    }
  }
}

TEST_CASE("A_s for s = 1/2 and q = 0.5") {
  const TwoByTwoOp m = make_As(QParam(0.5), H(1));
  CHECK(m.a(0, 0).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.a(1, 1).real() == doctest::Approx(1 / std::sqrt(2.0)));
  // |q|^{-1} - |q| - |q| + |q|^3 = 2 - 1 + 0.125 = 1.125
  CHECK(m.b(1, 0).real() == doctest::Approx(std::sqrt(1.125)));
  CHECK(m.b(0, 1) == cplx(0.0));
}

TEST_CASE("A_s satisfies the AN_q and SL_q(2,C) relations") {
  for (double qv : {0.3, -0.3, 0.7, -0.9}) {
    const QParam q(qv);
    for (int s2 = 0; s2 <= 6; ++s2) {
      const TwoByTwoOp m = make_As(q, H(s2));
      const RelationReport an = check_anq(m, q, 1e-10);
      CHECK(an.passed);
      CHECK(an.spectrum_ok.value_or(false));
      const RelationReport sl = check_slq2c(m, q, 1e-10);
      CHECK(sl.passed);
      CHECK(sl.labels.size() == 17);
    }
  }
}

TEST_CASE("a corrupted entry is caught and named") {
  const QParam q(0.5);
  TwoByTwoOp m = make_As(q, H(2));
  m.b(1, 0) += 1e-3;
  const RelationReport an = check_anq(m, q, 1e-10);
  CHECK_FALSE(an.passed);
  CHECK(an.worst().find("n") != std::string::npos);
  CHECK_FALSE(check_slq2c(m, q, 1e-10).passed);
}

TEST_CASE("characters") {
  const QParam q(0.5);
  const TwoByTwoOp unit = TwoByTwoOp::character(std::polar(1.0, 0.7));
  CHECK(check_suq2(unit, q, 1e-12).passed);
  CHECK(check_slq2c(unit, q, 1e-12).passed);

  // Characters with |rho| != 1 are algebra characters only: the *-relations force |rho| = 1.
  const TwoByTwoOp big = TwoByTwoOp::character(2.0);
  CHECK_FALSE(check_suq2(big, q, 1e-10).passed);
  const RelationReport sl = check_slq2c(big, q, 1e-10);
  CHECK_FALSE(sl.passed);
  CHECK(sl.worst().rfind("bb*", 0) == 0);
  const RelationReport an = check_anq(big, q, 1e-10);
  CHECK_FALSE(an.passed);
  CHECK(an.worst().rfind("nn*", 0) == 0);

  // Flipping the sign of a and d keeps every relation but leaves the positive spectrum.
  TwoByTwoOp flipped = make_As(q, HalfInt::from_twice(2));
  flipped.a = -flipped.a;
  flipped.d = -flipped.d;
  const RelationReport neg = check_anq(flipped, q, 1e-12);
  CHECK(neg.max_residual <= 1e-12 * neg.scale);
  CHECK(neg.spectrum_ok == false);
  CHECK_FALSE(neg.passed);

  CHECK_THROWS(TwoByTwoOp::character(0.0));
  CHECK(check_suq2(TwoByTwoOp::identity(3), q, 1e-14).passed);
}

TEST_CASE("check_anq needs an invertible a-entry") {
  TwoByTwoOp m = TwoByTwoOp::identity(2);
  m.a(1, 1) = 0.0;
  CHECK_THROWS_AS(check_anq(m, QParam(0.5), 1e-10), std::domain_error);
}

TEST_CASE("S_q membership") {
  const QParam pos(0.5), neg(-0.5);
  CHECK(in_sq(3.0, pos, 1e-12));
  CHECK_FALSE(in_sq(-3.0, pos, 1e-12));
  CHECK_FALSE(in_sq(cplx(0.0, 1.0), pos, 1e-12));
  for (int k2 = -8; k2 <= 8; ++k2) CHECK(in_sq(q_power(neg, {k2}), neg, 1e-12));
  for (double x : {-1.3, 0.4, 2.2}) {
    CHECK(in_sq(std::polar(std::pow(0.5, x), M_PI * x), neg, 1e-12));
    CHECK_FALSE(in_sq(std::polar(std::pow(0.5, x), M_PI * (x + 0.3)), neg, 1e-12));
  }
  CHECK(in_sq(0.0, neg, 1e-12));
}

TEST_CASE("bot product of AN_q-matrices stays AN_q") {
  for (double qv : {0.6, -0.6}) {
    const QParam q(qv);
    const TwoByTwoOp m = anq_bot(make_As(q, H(1)), make_As(q, H(2)));
    CHECK(m.dim() == 6);
    CHECK(check_anq(m, q, 1e-10).passed);
    CHECK(check_slq2c(m, q, 1e-10).passed);
  }
}

TEST_CASE("decomposition of A_1/2 bot A_s") {
  for (double qv : {0.5, -0.5}) {
    const QParam q(qv);
    for (int s2 = 1; s2 <= 5; ++s2) {
      const AnqDecomposition dec = decompose_anq(anq_bot(make_As(q, H(1)), make_As(q, H(s2))), q, 1e-8);
      REQUIRE(dec.blocks.size() == 2);
      CHECK(dec.blocks[0] == std::pair{H(s2 + 1), 1});
      CHECK(dec.blocks[1] == std::pair{H(s2 - 1), 1});
      CHECK(dec.residual <= 1e-8);
    }
  }
}

TEST_CASE("decomposition recovers a hidden direct sum with multiplicity") {
  std::mt19937_64 rng(21);
  const QParam q(0.6);
  const std::vector<std::pair<HalfInt, int>> blocks = {{H(2), 1}, {H(1), 2}, {H(0), 1}};
  const TwoByTwoOp sum = direct_sum_As(q, blocks);
  CHECK(sum.dim() == 3 + 2 * 2 + 1);
  const CMat u = random_unitary(rng, sum.dim());
  const AnqDecomposition dec = decompose_anq(conjugate(sum, u), q, 1e-8);
  CHECK(dec.blocks == blocks);
  CHECK(dec.residual < 1e-9);
  const TwoByTwoOp back = conjugate(conjugate(sum, u), dec.intertwiner);
  CHECK((back.b - sum.b).norm() < 1e-8);
}

TEST_CASE("decomposition rejects non-AN_q input") {
  std::mt19937_64 rng(22);
  CHECK_THROWS_AS(decompose_anq(oracle::random_op(rng, 2), QParam(0.5), 1e-8), std::invalid_argument);
}

TEST_CASE("Iwasawa composition") {
  const QParam q(0.5);
  const TwoByTwoOp ac = TwoByTwoOp::character(std::polar(1.0, 1.2));
  const TwoByTwoOp ad = make_As(q, H(3));
  const TwoByTwoOp prod = iwasawa_compose(ac, ad, q);
  CHECK(prod.dim() == 4);
  CHECK(check_slq2c(prod, q, 1e-10).passed);

  const BlockOpMat l = inflate_compact(ac, ad.dim()).as_blocks();
  const BlockOpMat r = inflate_solvable(ad, ac.dim()).as_blocks();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) CHECK(check_doubly_commute(l.block(i, j), r.block(k, m), 1e-10));

  CHECK_THROWS_AS(iwasawa_compose(TwoByTwoOp::character(2.0), ad, q), std::invalid_argument);
  CHECK_THROWS_AS(iwasawa_compose(ac, TwoByTwoOp::character(-2.0), q), std::invalid_argument);
}

TEST_CASE("doubly commuting pairs") {
  std::mt19937_64 rng(23);
  const CMat x = oracle::random_matrix(rng, 2, 2);
  const CMat y = oracle::random_matrix(rng, 3, 3);
  CHECK(check_doubly_commute(oracle::kron(x, CMat::Identity(3, 3)), oracle::kron(CMat::Identity(2, 2), y), 1e-12));
  CHECK_FALSE(check_doubly_commute(x, oracle::random_matrix(rng, 2, 2), 1e-6));
  CMat n = CMat::Zero(2, 2);
  n(0, 1) = 1.0;
  // n commutes with itself but not with its adjoint.
  CHECK_FALSE(check_doubly_commute(n, n, 1e-12));
}

TEST_CASE("operator matrix plumbing") {
  std::mt19937_64 rng(24);
  const TwoByTwoOp m = oracle::random_op(rng, 3);
  const TwoByTwoOp back = TwoByTwoOp::from_blocks(m.as_blocks());
  CHECK((back.c - m.c).norm() == 0.0);
  CHECK(m.max_entry_norm() >= oracle::spectral_norm(m.d) - 1e-12);
  CHECK_THROWS(TwoByTwoOp(CMat::Zero(2, 2), CMat::Zero(3, 3), CMat::Zero(2, 2), CMat::Zero(2, 2)));
  CHECK_THROWS(TwoByTwoOp::from_blocks(BlockOpMat(3, 1)));
}

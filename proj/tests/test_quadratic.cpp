#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"
#include "taf/checked.hpp"
#include "taf/quadratic.hpp"

namespace taf {
namespace {

using V = std::array<int64_t, 2>;

// Lattice index as the gcd of all 2x2 minors; no normal form involved.
int64_t index_of(const std::vector<V>& vs) {
  int64_t g = 0;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) g = std::gcd(g, vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0]);
  return std::abs(g);
}

bool in_lattice(const std::vector<V>& vs, V p) {
  auto more = vs;
  more.push_back(p);
  return index_of(more) == index_of(vs);
}

// (a, b, c) from the index and the gcd of second coordinates.
QuadIdeal hnf_oracle(const QuadOrder& D, const std::vector<QuadElement>& gens) {
  std::vector<V> vs;
  for (const auto& g : gens) {
    vs.push_back({g.x, g.y});
    const QuadElement gb = quad_mul(D, g, {0, 1});
    vs.push_back({gb.x, gb.y});
  }
  int64_t c = 0;
  for (const auto& v : vs) c = std::gcd(c, v[1]);
  const int64_t a = index_of(vs) / c;
  for (int64_t b = 0; b < a; ++b)
    if (in_lattice(vs, {b, c})) return {a, b, c};
  return {0, 0, 0};
}

// TA straight from the definition over canonical representatives in D.
bool ta_oracle(const QuadOrder& D, const QuadIdeal& i) {
  std::vector<QuadElement> reps;
  for (int64_t y = 0; y < i.c; ++y)
    for (int64_t x = 0; x < i.a; ++x) reps.push_back({x, y});
  for (const auto& a : reps)
    for (const auto& b : reps) {
      const QuadElement ab = quad_mul(D, a, b);
      if (contains(i, ab)) continue;
      for (const auto& c : reps)
        if (contains(i, quad_mul(D, ab, c)) && !contains(i, quad_mul(D, a, c)) && !contains(i, quad_mul(D, b, c)))
          return false;
    }
  return true;
}

std::vector<QuadIdeal> random_ideals(const QuadOrder& D, int count, uint64_t salt, int64_t span = 6) {
  auto gen = test::rng(salt);
  std::vector<QuadIdeal> out;
  while (int(out.size()) < count) {
    auto pick = [&] { return int64_t(gen() % uint64_t(2 * span + 1)) - span; };
    std::vector<QuadElement> gens{{pick(), pick()}};
    if (gen() % 2) gens.push_back({pick(), pick()});
    bool zero = true;
    for (const auto& g : gens) zero = zero && g == QuadElement{};
    if (!zero) out.push_back(ideal_from_gens(D, gens));
  }
  return out;
}

TEST(QuadOrder, Validation) {
  EXPECT_THROW(QuadOrder(0), InputError);
  EXPECT_THROW(QuadOrder(1), InputError);
  EXPECT_THROW(QuadOrder(-12), InputError);
  EXPECT_THROW(QuadOrder(-7 + 2, QuadBasis::Half), InputError);  // -5 = 3 mod 4
  EXPECT_NO_THROW(QuadOrder(-7, QuadBasis::Half));
  EXPECT_EQ(QuadOrder(-11, QuadBasis::Half).beta_square(), (std::array<int64_t, 2>{-3, 1}));
}

TEST(QuadIdeal, FromGens) {
  const QuadOrder d11(-11);
  const QuadIdeal i = ideal_from_gens(d11, {{3, 1}});
  EXPECT_EQ(i, (QuadIdeal{20, 3, 1}));
  EXPECT_EQ(i, hnf_oracle(d11, {{3, 1}}));
  const QuadOrder d7(-7);
  EXPECT_EQ(ideal_norm(ideal_from_gens(d7, {{3, 1}})), 16);
  EXPECT_EQ(ideal_from_gens(d7, {{1, 0}}), quad_unit_ideal());
  try {
    ideal_from_gens(d7, {{0, 0}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("zero ideal not representable"), std::string::npos);
  }
}

TEST(QuadIdeal, ArithmeticExamples) {
  const QuadOrder d11(-11);
  const QuadIdeal p4 = ideal_from_gens(d11, {{4, 0}, {3, 1}});
  const QuadIdeal p5 = ideal_from_gens(d11, {{5, 0}, {3, 1}});
  EXPECT_EQ(ideal_mul(d11, p4, p5), ideal_from_gens(d11, {{3, 1}}));
  const QuadOrder d7(-7);
  const QuadIdeal i = ideal_from_gens(d7, {{3, 1}});
  EXPECT_EQ(ideal_norm(i), 3 * 3 + 7);
  EXPECT_FALSE(contains(i, {4, 0}));
  EXPECT_FALSE(contains(i, {8, 0}));
  EXPECT_TRUE(contains(i, {16, 0}));
  EXPECT_TRUE(contains(i, {3, 1}));
  EXPECT_TRUE(subset(i, ideal_from_gens(d7, {{2, 0}, {3, 1}})));
}

TEST(QuadQuotient, Examples) {
  const QuadOrder d11(-11);
  const auto q4 = quotient_finite(d11, ideal_from_gens(d11, {{4, 0}, {3, 1}}));
  EXPECT_TRUE(is_isomorphic_to_zn(q4.ring(), 4));
  const auto q5 = quotient_finite(d11, ideal_from_gens(d11, {{5, 0}, {3, 1}}));
  EXPECT_TRUE(is_isomorphic_to_zn(q5.ring(), 5));
  EXPECT_EQ(quotient_finite(d11, quad_unit_ideal()).ring().order(), 1U);
  EXPECT_THROW(quotient_finite(d11, ideal_from_gens(d11, {{100, 0}}), Limits{.enumeration_guard = 1000}),
               LimitExceeded);
}

TEST(QuadTA, Examples) {
  const QuadOrder d7(-7);
  const QuadIdeal i = ideal_from_gens(d7, {{3, 1}});
  const QuadTAResult r = ta_check_quad(d7, i);
  EXPECT_FALSE(r.is_ta);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->a, (QuadElement{2, 0}));
  EXPECT_EQ(r.witness->b, (QuadElement{2, 0}));
  EXPECT_EQ(r.witness->c, (QuadElement{4, 0}));
  EXPECT_TRUE(verify_quad_witness(d7, i, *r.witness));

  const QuadOrder d11(-11);
  EXPECT_TRUE(ta_check_quad(d11, ideal_from_gens(d11, {{4, 0}, {3, 1}})).is_ta);
  // 5 is inert in Z[sqrt -7] since -7 is not a square mod 5
  EXPECT_TRUE(ta_check_quad(d7, ideal_from_gens(d7, {{5, 0}})).is_ta);
  EXPECT_THROW(ta_check_quad(d7, quad_unit_ideal()), InputError);
}

TEST(QuadFactor, Examples) {
  const QuadOrder d7(-7);
  const QuadIdeal i7 = ideal_from_gens(d7, {{3, 1}});
  EXPECT_FALSE(ta_factorization_quad(d7, i7));
  const QuadIdeal m = ideal_from_gens(d7, {{2, 0}, {3, 1}});
  for (const auto& j : ideals_above_quad(d7, i7))
    if (is_proper(j)) {
      EXPECT_TRUE(subset(j, m)) << format(j);
    }

  const QuadOrder d11(-11);
  const QuadIdeal i11 = ideal_from_gens(d11, {{3, 1}});
  const auto f = ta_factorization_quad(d11, i11);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_quad_factorization(d11, i11, *f));
  const QuadFactorization worked{{ideal_from_gens(d11, {{4, 0}, {3, 1}}), ideal_from_gens(d11, {{5, 0}, {3, 1}})}};
  EXPECT_TRUE(verify_quad_factorization(d11, i11, worked));
  const auto s = ta_factorization_quad(d11, i11, {}, true);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->factors.size(), 2U);
  EXPECT_TRUE(verify_quad_factorization(d11, i11, *s));

  const QuadIdeal five = ideal_from_gens(d7, {{5, 0}});
  const auto f5 = ta_factorization_quad(d7, five);
  ASSERT_TRUE(f5);
  EXPECT_EQ(f5->factors, std::vector<QuadIdeal>{five});
}

TEST(QuadMinPrimes, Examples) {
  const QuadOrder d7(-7);
  EXPECT_EQ(min_primes_quad(d7, ideal_from_gens(d7, {{3, 1}})),
            std::vector<QuadIdeal>{ideal_from_gens(d7, {{2, 0}, {3, 1}})});
  EXPECT_EQ(min_primes_quad(d7, ideal_from_gens(d7, {{5, 0}})), std::vector<QuadIdeal>{ideal_from_gens(d7, {{5, 0}})});

  // oracle: ideals (p, b + w) of prime norm p dividing 6, valid when b^2 = d mod p
  const QuadOrder d11(-11);
  std::set<QuadIdeal> expected;
  for (int64_t p : {2, 3})
    for (int64_t b = 0; b < p; ++b)
      if (mod_floor(b * b + 11, p) == 0) expected.insert({p, b, 1});
  const auto primes = min_primes_quad(d11, ideal_from_gens(d11, {{6, 0}}));
  EXPECT_EQ(std::set<QuadIdeal>(primes.begin(), primes.end()), expected);
  EXPECT_EQ(expected.size(), 3U);
}

TEST(Classify, Examples) {
  const auto c11 = classify_quadratic_order(-11);
  EXPECT_EQ(c11.verdict, QuadVerdict::TAF);
  EXPECT_EQ(c11.residue_constant, 3);
  EXPECT_TRUE(c11.field_by_polynomial && c11.field_by_quotient);
  EXPECT_EQ(classify_quadratic_order(-7).verdict, QuadVerdict::NotTAF);
  EXPECT_EQ(classify_quadratic_order(5).verdict, QuadVerdict::TAF);
  const auto c17 = classify_quadratic_order(17);
  EXPECT_EQ(c17.verdict, QuadVerdict::NotTAF);
  EXPECT_TRUE(c17.homomorphism_well_defined && c17.homomorphism_surjective);
  EXPECT_TRUE(verify_classification(c17));

  try {
    classify_quadratic_order(-5);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("outside"), std::string::npos);
  }
  EXPECT_THROW(classify_quadratic_order(-27), InputError);  // 9 divides it
}

TEST(Text, ParseAndFormat) {
  EXPECT_EQ(parse_quad_element("3+w"), (QuadElement{3, 1}));
  EXPECT_EQ(parse_quad_element("2*w - 1"), (QuadElement{-1, 2}));
  EXPECT_EQ(parse_quad_element("sqrt"), (QuadElement{0, 1}));
  EXPECT_EQ(parse_quad_element(" 5 "), (QuadElement{5, 0}));
  EXPECT_THROW(parse_quad_element("w^2"), InputError);
  EXPECT_EQ(parse_quad_elements("4, 3+w").size(), 2U);
  EXPECT_EQ(format(QuadElement{3, 1}), "w + 3");
  const QuadOrder d11(-11);
  EXPECT_EQ(format(ideal_from_gens(d11, {{4, 0}, {3, 1}})), "(4, w + 3)");
  EXPECT_EQ(format(ideal_from_gens(d11, {{6, 0}})), "(6)");
}

// ---------------------------------------------------------------- properties

TEST(Properties, HnfCanonicity) {
  for (int64_t d : {-11, -7, -3, -1, 2, 5, 13}) {
    const QuadOrder D(d);
    auto gen = test::rng(uint64_t(d + 100));
    for (int trial = 0; trial < 50; ++trial) {
      auto pick = [&] { return int64_t(gen() % 15) - 7; };
      std::vector<QuadElement> gens{{pick(), pick()}, {pick(), pick()}};
      if (gens[0] == QuadElement{} && gens[1] == QuadElement{}) continue;
      const QuadIdeal i = ideal_from_gens(D, gens);
      EXPECT_EQ(i, hnf_oracle(D, gens)) << d;
      EXPECT_EQ(i, ideal_from_gens(D, {gens[1], gens[0]})) << d;
      EXPECT_EQ(i, ideal_from_gens(D, {{i.a, 0}, {i.b, i.c}})) << d;
      EXPECT_EQ(i.a % i.c, 0) << d;
      EXPECT_EQ(i.b % i.c, 0) << d;
    }
  }
}

TEST(Properties, NormIsMultiplicativeForInvertibleIdeals) {
  // Z[sqrt d] is the maximal order when d = 2, 3 mod 4; for d = 1 mod 4 the
  // ideals of odd norm avoid the conductor 2 and are invertible.
  for (int64_t d : {-1, -2, -5, 2, 3, 6, -7, -11, 5, 17}) {
    const QuadOrder D(d);
    const bool maximal = mod_floor(d, 4) != 1;
    const auto ideals = random_ideals(D, 30, uint64_t(d + 500));
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        if (!maximal && (ideal_norm(i) % 2 == 0 || ideal_norm(j) % 2 == 0)) continue;
        EXPECT_EQ(ideal_norm(ideal_mul(D, i, j)), ideal_norm(i) * ideal_norm(j)) << d;
      }
  }
}

TEST(Properties, NormFailsAtTheConductor) {
  // M = (2, 1 + sqrt -3) satisfies M^2 = 2M, so norm(M^2) = 8, not 4
  const QuadOrder D(-3);
  const QuadIdeal m = ideal_from_gens(D, {{2, 0}, {1, 1}});
  EXPECT_EQ(ideal_norm(m), 2);
  EXPECT_EQ(ideal_mul(D, m, m), ideal_mul(D, ideal_from_gens(D, {{2, 0}}), m));
  EXPECT_EQ(ideal_norm(ideal_mul(D, m, m)), 8);
}

TEST(Properties, QuotientCardinalityAndBridge) {
  for (int64_t d : {-11, -7, -3, -1, 2, 5, 17}) {
    for (QuadBasis basis : {QuadBasis::Sqrt, QuadBasis::Half}) {
      if (basis == QuadBasis::Half && mod_floor(d, 4) != 1) continue;
      const QuadOrder D(d, basis);
      for (const auto& i : random_ideals(D, 25, uint64_t(d + 900), 4)) {
        if (!is_proper(i) || ideal_norm(i) > 4096) continue;
        const auto q = quotient_finite(D, i);
        EXPECT_EQ(int64_t(q.ring().order()), ideal_norm(i)) << d;
        const QuadTAResult r = ta_check_quad(D, i);
        EXPECT_EQ(r.is_ta, ta_check(q.ring(), ideal_zero(q.ring())).is_ta) << d;
        if (ideal_norm(i) <= 64) {
          EXPECT_EQ(r.is_ta, ta_oracle(D, i)) << d << " " << format(i);
        }
        if (r.witness) {
          EXPECT_TRUE(verify_quad_witness(D, i, *r.witness)) << d;
        }
      }
    }
  }
}

TEST(Properties, FactorizationsReMultiplyExactly) {
  for (int64_t d : {-11, -7, -3, -1, 5, 17, -15}) {
    const QuadOrder D(d);
    for (const auto& i : random_ideals(D, 15, uint64_t(d + 1300), 4)) {
      if (!is_proper(i) || ideal_norm(i) > 400) continue;
      const auto f = ta_factorization_quad(D, i);
      if (f) {
        EXPECT_TRUE(verify_quad_factorization(D, i, *f)) << d << " " << format(i);
      }
    }
  }
}

TEST(Properties, ClassificationCoherence) {
  for (int64_t d = -200; d <= 200; ++d) {
    if (d == 1 || d == 0 || mod_floor(d, 4) != 1 || !is_squarefree(d)) continue;
    const auto c = classify_quadratic_order(d);
    EXPECT_EQ(c.verdict == QuadVerdict::TAF, mod_floor(d, 8) == 5) << d;
    EXPECT_TRUE(verify_classification(c)) << d;
  }
}

}  // namespace
}  // namespace taf

#include <gtest/gtest.h>

#include "support.hpp"
#include "taf/absorbing.hpp"
#include "taf/checked.hpp"

namespace taf {
namespace {

using test::ideal;
using test::presented;
using test::ring;

// Plain triple loop over all of R^3 with no ordering or pruning.
bool ta_oracle(const FiniteRing& r, const FinIdeal& i) {
  const Elem n = Elem(r.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = r.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (i.contains(r.mul(ab, c)) && !i.contains(ab) && !i.contains(r.mul(a, c)) && !i.contains(r.mul(b, c)))
          return false;
    }
  return true;
}

TEST(TACheck, SpecExamples) {
  const auto z8 = presented("Z/8");
  const TAResult r0 = ta_check(z8.ring(), ideal_zero(z8.ring()));
  EXPECT_FALSE(r0.is_ta);
  ASSERT_TRUE(r0.witness);
  const Elem two = z8.parse_element("2");
  EXPECT_EQ(*r0.witness, (TAWitness{two, two, two}));
  EXPECT_TRUE(verify_ta_witness(z8.ring(), ideal_zero(z8.ring()), *r0.witness));

  const auto z4 = presented("Z/4");
  EXPECT_TRUE(ta_check(z4.ring(), ideal_zero(z4.ring())).is_ta);
  EXPECT_TRUE(ta_check(z8.ring(), ideal(z8, "4")).is_ta);
  EXPECT_TRUE(ta_oracle(z8.ring(), ideal(z8, "4")));

  try {
    ta_check(z8.ring(), ideal_unit(z8.ring()));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("TA is defined for proper ideals"), std::string::npos);
  }
}

TEST(TACheck, AgreesWithOracleOnCorpus) {
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    for (const auto& i : enumerate_ideals(r)) {
      if (!is_proper(r, i)) continue;
      const TAResult res = ta_check(r, i);
      EXPECT_EQ(res.is_ta, ta_oracle(r, i)) << spec;
      if (res.witness) {
        EXPECT_TRUE(verify_ta_witness(r, i, *res.witness)) << spec;
      }
    }
  }
}

TEST(TACheck, SerialAndParallelKernelsAgree) {
  for (const char* spec : {"Z/9[x]/(x^3)", "Z/8[x]/(x^3)", "Z/4[x]/(x^3)", "Z/27[x]/(x^2, 3x)", "Z/64",
                           "Z/2[x]/(x^6)", "Z/4 x Z/8[x]/(x^2, 2x)"}) {
    const FiniteRing r = ring(spec);
    for (const auto& i : enumerate_ideals(r)) {
      if (!is_proper(r, i)) continue;
      const CosetTable t = coset_table(r, i);
      EXPECT_EQ(find_ta_witness_serial(t), find_ta_witness_parallel(t)) << spec;
    }
  }
}

TEST(TACheck, WitnessIsFirstInOrder) {
  const auto r = presented("Z/9[x]/(x^3)");
  const FinIdeal zero = ideal_zero(r.ring());
  const TAResult res = ta_check(r.ring(), zero);
  ASSERT_TRUE(res.witness);
  const auto& w = *res.witness;
  EXPECT_LE(w.a, w.b);
  EXPECT_LE(w.b, w.c);
  // nothing refutes with a smaller first element
  for (Elem a = 1; a < w.a; ++a)
    for (Elem b = a; b < r.ring().order(); ++b)
      for (Elem c = b; c < r.ring().order(); ++c)
        ASSERT_FALSE(verify_ta_witness(r.ring(), zero, {a, b, c}));
  EXPECT_EQ(res.witness, ta_check_serial(r.ring(), zero).witness);
}

TEST(NAbsorbing, SpecExamples) {
  const auto z8 = presented("Z/8");
  const FinIdeal zero = ideal_zero(z8.ring());
  EXPECT_TRUE(n_absorbing_check(z8.ring(), zero, 3).holds);
  const auto two = n_absorbing_check(z8.ring(), zero, 2);
  EXPECT_FALSE(two.holds);
  ASSERT_TRUE(two.witness);
  EXPECT_EQ(two.witness->size(), 3U);
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    for (const auto& i : enumerate_ideals(r))
      if (is_maximal(r, i)) {
        EXPECT_TRUE(n_absorbing_check(r, i, 1).holds) << spec;
      }
  }
  EXPECT_THROW(n_absorbing_check(z8.ring(), zero, 0), InputError);
}

TEST(NAbsorbing, Budget) {
  const FiniteRing r = ring("Z/9[x]/(x^3)");
  try {
    n_absorbing_check(r, ideal_zero(r), 5, Limits{.enumeration_guard = 4096, .tuple_budget = 1000});
    FAIL();
  } catch (const LimitExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("n-absorbing check too large"), std::string::npos);
  }
}

TEST(NAbsorbing, OneAbsorbingIsPrime) {
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    for (const auto& i : enumerate_ideals(r))
      if (is_proper(r, i)) {
        EXPECT_EQ(n_absorbing_check(r, i, 1).holds, is_prime(r, i)) << spec;
      }
  }
}

TEST(Structure, SpecExamples) {
  const auto z8 = presented("Z/8");
  const TAStructure s8 = ta_structure(z8.ring(), ideal(z8, "4"));
  EXPECT_EQ(s8.kind, TAKind::PrimeSquare);
  EXPECT_EQ(s8.primes, std::vector<FinIdeal>{ideal(z8, "2")});

  const auto z6 = presented("Z/6");
  const TAStructure s6 = ta_structure(z6.ring(), ideal_zero(z6.ring()));
  EXPECT_EQ(s6.kind, TAKind::TwoPrimes);
  ASSERT_EQ(s6.primes.size(), 2U);
  EXPECT_EQ(ideal_product(z6.ring(), s6.primes[0], s6.primes[1]), ideal_zero(z6.ring()));

  const auto z4 = presented("Z/4");
  const TAStructure s4 = ta_structure(z4.ring(), ideal_zero(z4.ring()));
  EXPECT_EQ(s4.kind, TAKind::PrimeSquare);
  EXPECT_EQ(s4.primes, std::vector<FinIdeal>{ideal(z4, "2")});

  try {
    ta_structure(z8.ring(), ideal_zero(z8.ring()));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not a TA-ideal"), std::string::npos);
  }
  EXPECT_STREQ(to_string(TAKind::TwoPrimes), "two-primes");
}

// ---------------------------------------------------------------- properties

TEST(Properties, TAEqualsTwoAbsorbing) {
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    for (const auto& i : enumerate_ideals(r))
      if (is_proper(r, i)) {
        EXPECT_EQ(ta_check(r, i).is_ta, n_absorbing_check(r, i, 2).holds) << spec;
      }
  }
}

TEST(Properties, PrimesAndPrimeSquaresAreTA) {
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    for (const auto& p : enumerate_ideals(r)) {
      if (!is_prime(r, p)) continue;
      EXPECT_TRUE(ta_check(r, p).is_ta) << spec;
      const FinIdeal p2 = ideal_product(r, p, p);
      if (is_proper(r, p2)) {
        EXPECT_TRUE(ta_check(r, p2).is_ta) << spec;
      }
    }
  }
}

TEST(Properties, StructureTheoremHolds) {
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    for (const auto& i : enumerate_ideals(r)) {
      if (!is_proper(r, i) || !ta_check(r, i).is_ta) continue;
      const TAStructure s = ta_structure(r, i);
      EXPECT_TRUE(verify_ta_structure(r, i, s)) << spec;
    }
  }
}

TEST(Properties, ImagesOfTAIdealsAreTA) {
  for (const auto& spec : test::corpus()) {
    const FiniteRing r = ring(spec);
    const auto ideals = enumerate_ideals(r);
    for (const auto& i : ideals) {
      const QuotientRing q = quotient_ring(r, i);
      for (const auto& j : ideals) {
        if (!i.subset_of(j) || !is_proper(r, j) || !ta_check(r, j).is_ta) continue;
        std::vector<Elem> img;
        for (Elem g : j.gens()) img.push_back(q.image(r, g));
        EXPECT_TRUE(ta_check(q.ring(), ideal_generate(q.ring(), std::span<const Elem>(img))).is_ta) << spec;
      }
    }
  }
}

TEST(Properties, ChainedRingLaws) {
  for (int64_t p : {2, 3}) {
    int64_t pn = 1;
    for (int n = 1; n <= 5; ++n) {
      pn *= p;
      const auto r = presented("Z/" + std::to_string(pn));
      const FinIdeal P = ideal(r, std::to_string(p));
      const FinIdeal P2 = ideal(r, std::to_string(p * p));
      for (const auto& i : enumerate_ideals(r.ring())) {
        if (!is_proper(r.ring(), i)) continue;
        const bool ta = ta_check(r.ring(), i).is_ta;
        EXPECT_EQ(ta, i == P || i == P2) << pn;
        if (!ta) continue;
        EXPECT_TRUE(is_primary(r.ring(), i)) << pn;
        EXPECT_EQ(ideal_radical(r.ring(), i), P) << pn;
        EXPECT_TRUE(is_prime(r.ring(), i) || i == ideal_product(r.ring(), P, P)) << pn;
      }
    }
  }
}

}  // namespace
}  // namespace taf

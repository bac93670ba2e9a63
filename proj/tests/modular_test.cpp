#include "qg/modular.hpp"

#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "qg/fixtures.hpp"
#include "qg/identity.hpp"
#include "oracle.hpp"

using qg::CayleyTable;
using qg::TQuasigroupForm;

TEST(FValue, ExactIntegerEvaluation) {
  EXPECT_EQ(qg::f_value(-3), -161);
  EXPECT_EQ(qg::f_value(0), 1);
  EXPECT_EQ(qg::f_value(-1), 1);
  EXPECT_EQ(qg::f_value(7), 19209);
  EXPECT_EQ(qg::f_value(-20), -3039999);
  EXPECT_EQ(qg::f_value(4096), 4096ll * 4096 * 4096 * 4096 * 4096 + 4096ll * 4096 * 4096 * 4096 + 1);
  EXPECT_THROW(qg::f_value(4097), qg::Overflow);
  EXPECT_THROW(qg::f_value(-4097), qg::Overflow);
}

TEST(ScanRoots, SmallModuli) {
  EXPECT_EQ(qg::scan_roots(7), (std::vector<long long>{2, 4}));
  std::vector<long long> roots23 = qg::scan_roots(23);
  EXPECT_TRUE(std::find(roots23.begin(), roots23.end(), 20) != roots23.end());
  std::vector<long long> roots161 = qg::scan_roots(161);
  EXPECT_TRUE(std::find(roots161.begin(), roots161.end(), 158) != roots161.end());
  EXPECT_EQ(qg::scan_roots(1), (std::vector<long long>{0}));
  EXPECT_TRUE(qg::scan_roots(2).empty());  // f is always odd
}

TEST(ScanRoots, SortedDuplicateFreeAndExhaustive) {
  for (long long r : {1, 2, 3, 5, 7, 12, 23, 30, 161}) {
    std::vector<long long> roots = qg::scan_roots(r);
    EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
    EXPECT_EQ(std::adjacent_find(roots.begin(), roots.end()), roots.end());
    for (long long k = 0; k < r; ++k) {
      long long rem = ((k % r) * (k % r) % r * (k % r) % r * (k % r) % r * (k % r) % r +
                       (k * k % r) * (k * k % r) % r + 1) % r;
      bool is_root = std::find(roots.begin(), roots.end(), k) != roots.end();
      EXPECT_EQ(is_root, rem % r == 0) << "r=" << r << " k=" << k;
    }
  }
}

TEST(BSolutions, PaperCases) {
  EXPECT_EQ(qg::b_solutions(7, 4), (std::vector<long long>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(qg::b_solutions(23, 20), (std::vector<long long>{0}));
  EXPECT_EQ(qg::b_solutions(161, 158),
            (std::vector<long long>{0, 23, 46, 69, 92, 115, 138}));
}

TEST(BSolutions, CountEqualsGcdAndAllSolve) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long long> r_dist(1, 200);
  for (int trial = 0; trial < 100; ++trial) {
    long long r = r_dist(rng);
    long long k = std::uniform_int_distribution<long long>(0, r - 1)(rng);
    std::vector<long long> solutions = qg::b_solutions(r, k);
    long long g = (k * k + k + 1) % r;
    EXPECT_EQ(static_cast<long long>(solutions.size()), std::gcd(g, r));
    for (long long b : solutions) EXPECT_EQ(g * b % r, 0);
    // Exhaustive complement: nothing outside the list solves the congruence.
    for (long long b = 0; b < r; ++b)
      EXPECT_EQ(std::binary_search(solutions.begin(), solutions.end(), b), g * b % r == 0);
  }
}

TEST(BuildTForm, ExampleCoefficients) {
  TQuasigroupForm case1 = qg::build_t_form(7, -3, 0);
  EXPECT_EQ(case1.a, 6);
  EXPECT_EQ(case1.c, 4);
  EXPECT_EQ(case1.b, 0);

  TQuasigroupForm case2 = qg::build_t_form(23, -3, 0);
  EXPECT_EQ(case2.a, 4);
  EXPECT_EQ(case2.c, 20);

  TQuasigroupForm case3 = qg::build_t_form(161, -3, 23);
  EXPECT_EQ(case3.a, 27);
  EXPECT_EQ(case3.c, 158);
  EXPECT_EQ(case3.b, 23);
}

TEST(BuildTForm, RejectsBadInputs) {
  EXPECT_THROW(qg::build_t_form(7, 1, 0), qg::NotARoot);
  EXPECT_THROW(qg::build_t_form(6, 2, 0), qg::NotARoot);  // even moduli have no roots
  EXPECT_THROW(qg::build_t_form(23, -3, 5), qg::BadConstant);
  EXPECT_THROW(qg::build_t_form(161, -3, 24), qg::BadConstant);
}

TEST(TQuasigroupFormType, EnforcesInvertibleMultipliers) {
  EXPECT_THROW(TQuasigroupForm(6, 2, 1, 0), qg::NotInvertible);
  EXPECT_THROW(TQuasigroupForm(6, 1, 3, 0), qg::NotInvertible);
  TQuasigroupForm canonicalized(5, -1, 7, -3);
  EXPECT_EQ(canonicalized.a, 4);
  EXPECT_EQ(canonicalized.c, 2);
  EXPECT_EQ(canonicalized.b, 2);
}

TEST(CheckTConditions, ExampleForms) {
  qg::ConditionReport free_b = qg::check_t_conditions(TQuasigroupForm(7, 6, 4, 3));
  EXPECT_TRUE(free_b.phi_ok);
  EXPECT_TRUE(free_b.psi_ok);
  EXPECT_TRUE(free_b.b_ok);

  qg::ConditionReport bad_psi = qg::check_t_conditions(TQuasigroupForm(7, 1, 1, 0));
  EXPECT_FALSE(bad_psi.psi_ok);  // 1 + 1 + 1 = 3 is nonzero mod 7
  EXPECT_TRUE(bad_psi.b_ok);

  qg::ConditionReport mod3 = qg::check_t_conditions(TQuasigroupForm(3, 2, 1, 0));
  EXPECT_TRUE(mod3.all());
  EXPECT_TRUE(qg::check_identity(qg::materialize(TQuasigroupForm(3, 2, 1, 0)),
                                 qg::t2_identity())
                  .holds);
}

TEST(Materialize, LinearGridsAndFixtures) {
  EXPECT_EQ(qg::materialize(TQuasigroupForm(3, 2, 1, 0)), qg::fixture("star3"));
  EXPECT_TRUE(qg::satisfies_t2_via_translations(qg::materialize(TQuasigroupForm(7, 6, 4, 0))));
  EXPECT_EQ(qg::materialize(TQuasigroupForm(1, 0, 0, 0)), qg::validate_table({{0}}));
}

TEST(Materialize, AlwaysYieldsALatinSquare) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    long long n = std::uniform_int_distribution<long long>(1, 40)(rng);
    long long a = 0, c = 0;
    do a = std::uniform_int_distribution<long long>(0, n - 1)(rng);
    while (std::gcd(a, n) != 1);
    do c = std::uniform_int_distribution<long long>(0, n - 1)(rng);
    while (std::gcd(c, n) != 1);
    long long b = std::uniform_int_distribution<long long>(0, n - 1)(rng);
    CayleyTable t = qg::materialize(TQuasigroupForm(n, a, c, b));
    EXPECT_TRUE(oracle::naive_is_latin(oracle::to_grid(t)));
  }
}

// Both directions of the coefficient criterion: the three conditions hold iff
// the materialized table satisfies the identity. The module's central test.
TEST(CriterionEquivalence, ExhaustiveSweepUpTo30) {
  const qg::Identity& t2 = qg::t2_identity();
  long long forms = 0, mismatches = 0;
  for (long long n = 1; n <= 30; ++n)
    for (long long a = 0; a < std::max(n, 1ll); ++a) {
      if (std::gcd(a, n) != 1) continue;
      for (long long c = 0; c < std::max(n, 1ll); ++c) {
        if (std::gcd(c, n) != 1) continue;
        for (long long b = 0; b < n; ++b) {
          TQuasigroupForm form(n, a, c, b);
          ++forms;
          bool conditions = qg::check_t_conditions(form).all();
          bool table = qg::check_identity(qg::materialize(form), t2).holds;
          if (conditions != table) ++mismatches;
        }
      }
    }
  EXPECT_GT(forms, 5000);
  EXPECT_EQ(mismatches, 0);
}

TEST(ModularWitnesses, EveryRootAndConstantYieldsT2Table) {
  for (long long r : {3, 7, 23, 161}) {
    bool found_any = false;
    for (long long k : qg::scan_roots(r)) {
      if (std::gcd(k, r) != 1) continue;
      for (long long b : qg::b_solutions(r, k)) {
        CayleyTable t = qg::materialize(qg::build_t_form(r, k, b));
        EXPECT_TRUE(qg::satisfies_t2_via_translations(t)) << "r=" << r << " k=" << k;
        found_any = true;
      }
    }
    EXPECT_TRUE(found_any) << "r=" << r;
  }
}

TEST(MedialProperty, HoldsForConditionPassingForms) {
  // (x*y)*(u*v) = (x*u)*(y*v), exhausted over all four-tuples.
  for (long long n = 1; n <= 7; ++n)
    for (long long a = 0; a < std::max(n, 1ll); ++a) {
      if (std::gcd(a, n) != 1) continue;
      for (long long c = 0; c < std::max(n, 1ll); ++c) {
        if (std::gcd(c, n) != 1) continue;
        for (long long b = 0; b < n; ++b) {
          TQuasigroupForm form(n, a, c, b);
          if (!qg::check_t_conditions(form).all()) continue;
          CayleyTable t = qg::materialize(form);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                  ASSERT_EQ(t(t(x, y), t(u, v)), t(t(x, u), t(y, v)));
        }
      }
    }
}

TEST(Factorize, MultisetsWithPrimeEntries) {
  EXPECT_EQ(qg::factorize(161), (std::vector<unsigned long long>{7, 23}));
  EXPECT_TRUE(qg::factorize(1).empty());
  std::vector<unsigned long long> big = qg::factorize(3039999);
  unsigned long long product = 1;
  for (unsigned long long p : big) {
    EXPECT_TRUE(qg::is_prime(p));
    product *= p;
  }
  EXPECT_EQ(product, 3039999u);
  EXPECT_TRUE(std::is_sorted(big.begin(), big.end()));
  EXPECT_EQ(qg::factorize(1024), std::vector<unsigned long long>(10, 2));
  EXPECT_EQ(qg::factorize(999983), (std::vector<unsigned long long>{999983}));
}

TEST(Factorize, RemultiplicationProperty) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned long long m = std::uniform_int_distribution<unsigned long long>(1, 4000000)(rng);
    unsigned long long product = 1;
    for (unsigned long long p : qg::factorize(m)) {
      EXPECT_TRUE(qg::is_prime(p));
      product *= p;
    }
    EXPECT_EQ(product, m);
  }
}

TEST(ScanPolynomial, SingleValueWindows) {
  qg::PolynomialScanReport at3 = qg::scan_polynomial(-3, -3);
  ASSERT_EQ(at3.entries.size(), 1u);
  EXPECT_EQ(at3.entries[0].value, -161);
  EXPECT_EQ(at3.entries[0].prime_factors, (std::vector<unsigned long long>{7, 23}));
  EXPECT_EQ(at3.prime_divisors, (std::vector<unsigned long long>{7, 23}));

  qg::PolynomialScanReport at_minus1 = qg::scan_polynomial(-1, -1);
  EXPECT_EQ(at_minus1.entries[0].value, 1);
  EXPECT_TRUE(at_minus1.entries[0].prime_factors.empty());
}

TEST(ScanPolynomial, FullWindowPrimeSet) {
  qg::PolynomialScanReport report = qg::scan_polynomial(-20, 20);
  ASSERT_EQ(report.entries.size(), 41u);
  for (const auto& entry : report.entries) {
    EXPECT_EQ(entry.value, qg::f_value(entry.k));
    unsigned long long product = 1;
    for (unsigned long long p : entry.prime_factors) product *= p;
    long long magnitude = entry.value < 0 ? -entry.value : entry.value;
    EXPECT_EQ(product, static_cast<unsigned long long>(magnitude == 0 ? 1 : magnitude));
  }
  const std::vector<unsigned long long> expected = {
      3,    5,    7,    11,   13,   17,   19,   23,   31,   37,   43,
      53,   59,   61,   67,   73,   79,   83,   89,   101,  103,  127,
      157,  211,  241,  307,  337,  347,  421,  503,  719,  977,  991,
      1163, 1319, 1321, 2729, 2731, 3359, 3361, 4079, 5813, 6841};
  EXPECT_EQ(report.prime_divisors, expected);
}

TEST(ReferenceAudit, ValuesConfirmedDefectsItemized) {
  qg::ScanReferenceAudit audit = qg::audit_scan_reference();

  // Every listed value matches its recomputation; the defects are structural.
  for (const auto& row : audit.value_rows) EXPECT_TRUE(row.matches) << "k=" << row.k;
  EXPECT_EQ(audit.duplicated_ks, (std::vector<long long>{12}));
  EXPECT_TRUE(audit.inconsistent_duplicate_ks.empty());
  EXPECT_EQ(audit.missing_ks, (std::vector<long long>{16}));

  const std::vector<long long> composites = {341,   833,   979,    2183,  2881,  3751,
                                             5047,  6403,  7373,   9073,  10033, 25099,
                                             36667, 166469, 269569, 868807, 1503379};
  EXPECT_EQ(audit.composite_listed_divisors, composites);
  // Every defective listed entry is composite; no prime was listed in error.
  EXPECT_EQ(audit.listed_not_recomputed, composites);

  const std::vector<long long> omitted = {11,  17,  31,  53,   67,   79,   83,   89,  103,
                                          127, 337, 991, 1321, 2729, 2731, 3361, 4079, 6841};
  EXPECT_EQ(audit.recomputed_not_listed, omitted);
  EXPECT_EQ(audit.recomputed_prime_divisors.size(), 43u);
}

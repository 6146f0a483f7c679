#include <doctest.h>

#include <random>

#include "gchain/methods.hpp"
#include "gchain/optimal.hpp"
#include "support/brute_oracle.hpp"

using namespace gchain;

TEST_CASE("bounds from the length sandwich") {
  CHECK(bounds(15, 2).lower == 4);
  CHECK(bounds(15, 2).upper == 7);
  CHECK(bounds(9, 3).lower == 2);
  CHECK(bounds(9, 3).upper == 3);
  for (int g : {2, 3, 7}) {
    CHECK(bounds(1, g).lower == 0);
    CHECK(bounds(1, g).upper == 1);
  }
}

TEST_CASE("exact search matches the brute-force oracle up to 100 at g=2") {
  const auto oracle = testsupport::brute_force_table(2, 100);
  // Frozen oracle values, computed by the naive breadth-first expansion.
  CHECK(oracle.l[15] == 5);
  CHECK(oracle.l[7] == 4);
  CHECK(oracle.l[23] == 6);
  for (u64 n = 1; n <= 100; ++n) {
    const OptimalResult r = l_g_exact(n, 2);
    CHECK(r.l == oracle.l[n]);
    r.witness.verify();
    CHECK(r.witness.target() == n);
    CHECK(r.witness.length() == static_cast<std::size_t>(r.l));
    CHECK(r.witness.elements == oracle.lex_witness[n]);
  }
}

TEST_CASE("exact search matches the brute-force oracle up to 40 at g=3") {
  const auto oracle = testsupport::brute_force_table(3, 40);
  for (u64 n = 1; n <= 40; ++n) {
    const OptimalResult r = l_g_exact(n, 3);
    CHECK(r.l == oracle.l[n]);
    CHECK(r.witness.elements == oracle.lex_witness[n]);
  }
}

TEST_CASE("exact search examples") {
  CHECK(l_g_exact(15, 2).l == 5);
  CHECK(l_g_exact(1, 5).l == 0);
  SUBCASE("11 at g=3 forced by the lower bound") {
    const OptimalResult r = l_g_exact(11, 3);
    CHECK(r.l == 3);
    CHECK(bounds(11, 3).lower == 3);
  }
  SUBCASE("powers of g are exactly their exponent") {
    for (int g : {2, 3, 5}) {
      for (int r = 1; r <= 8; ++r) {
        const u64 d = pow_checked(static_cast<u64>(g), r);
        CHECK(l_g_exact(d, g).l == r);
      }
    }
  }
  SUBCASE("tiny budget fails loudly") {
    CHECK_THROWS_AS(l_g_exact(1023, 2, 10), LimitError);
  }
}

TEST_CASE("oracle sandwich and method dominance on a unit-size grid") {
  for (int g : {2, 3, 4, 5}) {
    for (u64 d = 1; d <= 400; ++d) {
      const Bounds bb = bounds(d, g);
      const OptimalResult r = l_g_exact(d, g);
      CHECK(bb.lower <= r.l);
      CHECK(r.l <= bb.upper);
      CHECK(static_cast<std::size_t>(r.l) <= best_method(d, g).length());
    }
  }
}

TEST_CASE("more summands never hurt") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const u64 d = 1 + rng() % 800;
    for (int g = 2; g <= 5; ++g)
      CHECK(l_g_exact(d, g + 1).l <= l_g_exact(d, g).l);
  }
}

TEST_CASE("binary lengths bracket g-ary lengths") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 d = 1 + rng() % 600;
    const int l2 = l_g_exact(d, 2).l;
    for (int g : {3, 4, 5}) {
      const int lg = l_g_exact(d, g).l;
      CHECK(lg <= l2);
      CHECK(l2 <= (g - 1) * lg);
    }
  }
}

TEST_CASE("enumeration sweep agrees with the oracle and the exact engine") {
  const auto oracle = testsupport::brute_force_table(2, 100);
  const EnumerationTable table = enumerate_lengths(2, 100);
  for (u64 n = 1; n <= 100; ++n) {
    CHECK(table.length_of(n) == oracle.l[n]);
    CHECK(table.chains_of(n) == oracle.nmc[n]);
  }

  const EnumerationTable t3 = enumerate_lengths(3, 300);
  for (u64 n = 1; n <= 300; ++n) CHECK(t3.length_of(n) == l_g_exact(n, 3).l);
}

TEST_CASE("enumeration summary functions") {
  const EnumerationTable table = enumerate_lengths(2, 100);
  SUBCASE("least n per length, frozen from the oracle") {
    const std::vector<u64> least{1, 2, 3, 5, 7, 11, 19, 29, 47, 71};
    for (int r = 0; r < static_cast<int>(least.size()); ++r)
      CHECK(table.least_by_length.at(r) == least[static_cast<std::size_t>(r)]);
  }
  SUBCASE("counts partition the range") {
    u64 total = 0;
    for (const auto& [r, count] : table.count_by_length) total += count;
    CHECK(total == 100);
  }
  SUBCASE("minimal chain counts") {
    CHECK(table.chains_of(3) == 1);  // only (1, 2, 3)
    CHECK(table.chains_of(1) == 1);
    const auto oracle = testsupport::brute_force_table(2, 100);
    CHECK(table.chains_of(7) == oracle.nmc[7]);
  }
  SUBCASE("c_3(1) = 2") {
    const EnumerationTable t3 = enumerate_lengths(3, 10);
    CHECK(t3.least_by_length.at(1) == 2);
    CHECK(t3.length_of(2) == 1);
    CHECK(t3.length_of(1) == 0);
  }
  SUBCASE("budget exhaustion is explicit") {
    CHECK_THROWS_AS(enumerate_lengths(2, 500, 50), LimitError);
  }
}

TEST_CASE("subadditivity on exact lengths") {
  SUBCASE("no violations at g=2, grid 15") {
    const SubadditivityReport report = subadditivity_check(2, 15);
    CHECK(report.violations.empty());
    CHECK(report.checked == 14 * 15 / 2);
  }
  SUBCASE("no violations at g=3, grid 12") {
    CHECK(subadditivity_check(3, 12).violations.empty());
  }
  SUBCASE("scaling by one is free") {
    for (int g : {2, 3}) {
      const int l0 = l_g_exact(1, g).l;
      CHECK(l0 == 0);
      for (u64 n : {5, 9, 31}) CHECK(l_g_exact(n, g).l == l0 + l_g_exact(n, g).l);
    }
  }
}

TEST_CASE("search effort is reported") {
  const OptimalResult r = l_g_exact(127, 2);
  CHECK(r.node_count > 0);
  CHECK(r.l == 10);  // c_2(10) = 127: frozen from the enumeration sweep
}

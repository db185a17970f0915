#include <doctest.h>

#include <cmath>

#include "dnfenum/avg.hpp"
#include "oracle.hpp"

using namespace dnfenum;

TEST_SUITE("avg") {
  TEST_CASE("model-count bound") {
    CHECK(kGamma == doctest::Approx(0.63093).epsilon(1e-4));
    CHECK(std::pow(3.0, kGamma) == doctest::Approx(2.0));
    CHECK(min_models_bound(8) == doctest::Approx(3.71).epsilon(0.01));
    CHECK(min_models_bound(1) == 1.0);
    CHECK(min_models_bound(0) == 0.0);
  }

  TEST_CASE("core example in both modes") {
    const Dnf d = oracle::parse("p dnf 3 2\n1 2 0\n-3 0\n");
    AvgFlashlightEnum a(d, AvgMode::kReinsert);
    AvgFlashlightEnum b(d, AvgMode::kSmallIntoLarge);
    const auto ga = oracle::drain(a);
    CHECK(ga == oracle::models(d));
    CHECK(oracle::drain(b) == ga);

    AvgFlashlightEnum none(Dnf(4, {}), AvgMode::kSmallIntoLarge);
    CHECK_FALSE(none.next());
    CHECK_FALSE(none.next());
  }

  TEST_CASE("tautology switches to counting") {
    const Dnf d = oracle::parse("p dnf 4 2\n1 0\n-1 0\n");
    AvgFlashlightEnum a(d, AvgMode::kSmallIntoLarge);
    CHECK(oracle::drain(a).size() == 16);
  }

  TEST_CASE("random formulas match the oracle in ascending order") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 200; ++it) {
      const Dnf d = oracle::random_dnf(rng, 1 + rng() % 12, rng() % 40, 5);
      const auto want = oracle::models(d);
      for (auto mode : {AvgMode::kReinsert, AvgMode::kSmallIntoLarge}) {
        AvgFlashlightEnum a(d, mode);
        CHECK(oracle::drain(a) == want);
      }
    }
  }

  TEST_CASE("trie at every search node equals the restriction") {
    std::mt19937_64 rng(55);
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = 2 + rng() % 9;
      const Dnf d = oracle::random_dnf(rng, n, 1 + rng() % 20, 4);
      AvgFlashlightEnum a(d, AvgMode::kSmallIntoLarge);
      a.set_node_hook([&](const TermTrie& tt, std::span<const std::uint8_t> prefix) {
        PartialAssignment tau(n);
        for (std::size_t i = 0; i < prefix.size(); ++i) tau.set(static_cast<Var>(i + 1), prefix[i]);
        const Dnf want = restrict(d, tau);
        REQUIRE(tt.num_terms() == want.num_terms());
        for (const auto& t : want.terms()) {
          const Word w = word_of(t);
          CHECK(tt.trie().contains(w));
        }
      });
      while (a.next()) {
      }
    }
  }

  TEST_CASE("fast branching charges at most half of the parent") {
    std::mt19937_64 rng(77);
    std::size_t fast = 0;
    for (int it = 0; it < 60; ++it) {
      const Dnf d = oracle::random_dnf(rng, 10, 50 + rng() % 200, 6);
      AvgFlashlightEnum a(d, AvgMode::kSmallIntoLarge);
      a.record_branches(true);
      while (a.next()) {
      }
      for (const auto& b : a.branches()) {
        if (!b.fast) continue;
        ++fast;
        CHECK(2 * b.inserted <= b.parent_terms);
      }
    }
    CHECK(fast > 0);
  }

  TEST_CASE("changed_from marks the first differing position") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 30; ++it) {
      const Dnf d = oracle::random_dnf(rng, 2 + rng() % 8, 1 + rng() % 10, 3);
      AvgFlashlightEnum a(d, AvgMode::kSmallIntoLarge);
      Assignment prev;
      while (a.next()) {
        const auto& cur = a.model();
        if (!prev.empty()) {
          std::size_t first = 0;
          while (first < cur.size() && cur[first] == prev[first]) ++first;
          CHECK(a.changed_from() <= first);
        }
        prev = cur;
      }
    }
  }

  TEST_CASE("small-into-large never costs more steps than re-insertion on dense inputs") {
    std::mt19937_64 rng(9);
    int wins = 0, total = 0;
    for (int it = 0; it < 20; ++it) {
      const Dnf d = oracle::random_dnf(rng, 12, 200 + rng() % 400, 12);
      AvgFlashlightEnum slow(d, AvgMode::kReinsert);
      AvgFlashlightEnum fast(d, AvgMode::kSmallIntoLarge);
      oracle::drain(slow);
      oracle::drain(fast);
      wins += fast.steps() <= slow.steps();
      ++total;
    }
    CHECK(wins * 10 >= total * 9);
  }
}

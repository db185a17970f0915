#include <doctest.h>

#include "dnfenum/classic.hpp"
#include "dnfenum/graycode.hpp"
#include "oracle.hpp"

using namespace dnfenum;
using oracle::bits;

namespace {
const char* kCore = "p dnf 3 2\n1 2 0\n-3 0\n";
const std::vector<oracle::Bits> kCoreModels = {bits("000"), bits("010"), bits("100"), bits("110"),
                                               bits("111")};
}  // namespace

TEST_SUITE("classic") {
  TEST_CASE("union with priority") {
    UnionPriorityEnum e(oracle::parse(kCore));
    const auto got = oracle::drain(e);
    CHECK(oracle::sorted(got) == kCoreModels);
    CHECK_FALSE(oracle::has_duplicates(got));

    UnionPriorityEnum nested(oracle::parse("p dnf 2 2\n1 0\n1 2 0\n"));
    CHECK(oracle::sorted(oracle::drain(nested)) ==
          std::vector<oracle::Bits>{bits("10"), bits("11")});
  }

  TEST_CASE("union with priority on one term equals the Gray stream") {
    const Dnf d = oracle::parse("p dnf 4 1\n2 -4 0\n");
    UnionPriorityEnum u(d);
    TermModelEnum g(d.term(0), 4);
    CHECK(oracle::drain(u) == oracle::drain(g));
  }

  TEST_CASE("ordered union is ascending") {
    UnionOrderedEnum e(oracle::parse(kCore));
    CHECK(oracle::drain(e) == kCoreModels);

    const Dnf one = oracle::parse("p dnf 3 1\n-2 0\n");
    UnionOrderedEnum single(one);
    CHECK(oracle::drain(single) == oracle::models(one));
  }

  TEST_CASE("flashlight stream equals the ordered union") {
    FlashlightEnum f(oracle::parse(kCore));
    CHECK(oracle::drain(f) == kCoreModels);
    FlashlightEnum none(Dnf(3, {}));
    CHECK_FALSE(none.next());
    CHECK(none.live_terms() == 0);
  }

  TEST_CASE("flashlight counters restore after a full run") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 30; ++it) {
      const Dnf d = oracle::random_dnf(rng, 2 + rng() % 8, 1 + rng() % 10, 3);
      FlashlightEnum f(d);
      while (f.next()) REQUIRE(f.counters_consistent());
      CHECK(f.live_terms() == d.num_terms());
      for (auto c : f.falsified_counts()) CHECK(c == 0);
    }
  }

  TEST_CASE("all three agree with the oracle") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 150; ++it) {
      const Dnf d = oracle::random_dnf(rng, 1 + rng() % 10, rng() % 15, 4);
      const auto want = oracle::models(d);
      UnionPriorityEnum p(d);
      UnionOrderedEnum o(d);
      FlashlightEnum f(d);
      const auto gp = oracle::drain(p);
      CHECK_FALSE(oracle::has_duplicates(gp));
      CHECK(oracle::sorted(gp) == want);
      CHECK(oracle::drain(o) == want);
      CHECK(oracle::drain(f) == want);
    }
  }
}

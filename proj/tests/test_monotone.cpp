#include <doctest.h>

#include <cmath>
#include <set>

#include "dnfenum/avg.hpp"
#include "dnfenum/monotone.hpp"
#include "oracle.hpp"

using namespace dnfenum;
using oracle::bits;

namespace {

Dnf all_but_one(std::size_t n) {
  std::vector<Term> ts;
  for (Var s = 1; s <= n; ++s) {
    std::vector<Literal> ls;
    for (Var v = 1; v <= n; ++v)
      if (v != s) ls.emplace_back(v, true);
    ts.push_back(make_term(ls, n));
  }
  return Dnf(n, ts);
}

}  // namespace

TEST_SUITE("monotone") {
  TEST_CASE("unate normalization") {
    const auto u = normalize_unate(oracle::parse("p dnf 2 1\n1 -2 0\n"));
    CHECK(u.monotone == oracle::parse("p dnf 2 1\n1 2 0\n"));
    CHECK(u.mask == bits("01"));

    const Dnf mono = oracle::parse("p dnf 3 2\n1 0\n2 3 0\n");
    CHECK(normalize_unate(mono).mask == bits("000"));
    CHECK(normalize_unate(mono).monotone == mono);

    CHECK_THROWS_AS(normalize_unate(oracle::parse("p dnf 1 2\n1 0\n-1 0\n")), InputError);
  }

  TEST_CASE("unate models map back through the mask") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 50; ++it) {
      const std::size_t n = 1 + rng() % 10;
      Dnf d = oracle::random_dnf(rng, n, 1 + rng() % 15, 4, true);
      Assignment flip(n);
      for (auto& b : flip) b = rng() & 1;
      std::vector<Term> ts;
      for (const auto& t : d.terms()) {
        std::vector<Literal> ls;
        for (auto l : t) ls.emplace_back(l.var(), !flip[l.var() - 1]);
        ts.push_back(make_term(ls, n));
      }
      const Dnf signed_d(n, ts);
      const auto u = normalize_unate(signed_d);
      UnateEnum e(std::make_unique<MonotoneRsEnum>(u.monotone), u.mask);
      CHECK(oracle::sorted(oracle::drain(e)) == oracle::models(signed_d));
    }
  }

  TEST_CASE("minimization") {
    CHECK(minimize_monotone(oracle::parse("p dnf 2 2\n1 0\n1 2 0\n")) ==
          oracle::parse("p dnf 2 1\n1 0\n"));
    const Dnf anti = oracle::parse("p dnf 3 2\n1 2 0\n2 3 0\n");
    CHECK(same_terms(minimize_monotone(anti), anti));
    CHECK_THROWS_AS(minimize_monotone(oracle::parse("p dnf 1 1\n-1 0\n")), InputError);

    std::mt19937_64 rng(15);
    for (int it = 0; it < 60; ++it) {
      const Dnf d = oracle::random_dnf(rng, 1 + rng() % 12, 1 + rng() % 30, 6, true);
      const Dnf m = minimize_monotone(d);
      CHECK(oracle::models(m) == oracle::models(d));
      for (const auto& a : m.terms())
        for (const auto& b : m.terms())
          if (&a != &b) CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      CHECK(std::is_sorted(m.terms().begin(), m.terms().end()));
    }
  }

  TEST_CASE("reverse search examples") {
    MonotoneRsEnum e(oracle::parse("p dnf 3 2\n1 0\n2 3 0\n"));
    const auto got = oracle::drain(e);
    CHECK_FALSE(oracle::has_duplicates(got));
    CHECK(oracle::sorted(got) ==
          std::vector<oracle::Bits>{bits("011"), bits("100"), bits("101"), bits("110"), bits("111")});

    MonotoneRsEnum one(oracle::parse("p dnf 4 1\n1 2 3 4 0\n"));
    CHECK(oracle::drain(one) == std::vector<oracle::Bits>{bits("1111")});
  }

  TEST_CASE("reverse search freshness and discard soundness") {
    std::mt19937_64 rng(16);
    for (int it = 0; it < 80; ++it) {
      const std::size_t n = 1 + rng() % 12;
      const Dnf d = oracle::random_dnf(rng, n, 1 + rng() % 30, 6, true);
      MonotoneRsEnum e(d);
      e.record_discards(true);
      std::set<oracle::Bits> out;
      const auto terms = oracle::int_terms(d);
      while (e.next()) {
        const oracle::Bits m = e.model();
        CHECK(out.insert(m).second);
        for (const auto& x : e.discarded_models()) {
          CHECK(oracle::holds(terms, x));
          CHECK(out.count(x) == 1);
        }
      }
      CHECK(e.model_trie().size() == oracle::models(d).size());
      CHECK(out.size() >= e.terms().num_terms());  // at least as many models as terms
    }
  }

  TEST_CASE("monotone avg examples") {
    const Dnf d = oracle::parse("p dnf 3 2\n1 0\n2 3 0\n");
    AvgFlashlightEnum a(d, AvgMode::kSmallIntoLarge);
    CHECK(oracle::drain(a) == oracle::models(d));
  }

  TEST_CASE("complement encoding") {
    const std::vector<Word> terms = {{1, 3}, {3, 5}, {}};
    const auto comp = complement_words(terms, 1, 3);
    CHECK(comp == std::vector<Word>{{3}, {1}, {1, 2, 3}});
    CHECK(term_words_of_complements(comp, 1, 3) == terms);
    CHECK(complement_words({{5}}, 3, 4) == std::vector<Word>{{4}});
  }

  TEST_CASE("switch threshold") {
    // t = log2(6) + 2 log2(6) ~ 7.75
    CHECK(complement_trigger(6, 5, 6, 6));
    CHECK(complement_trigger(8, 1, 6, 6));
    CHECK_FALSE(complement_trigger(20, 1, 6, 6));
    CHECK_FALSE(complement_trigger(3, 0, 0, 6));
    const double t = std::log2(100.0) + 2 * std::log2(20.0);
    CHECK(complement_trigger(20, 20 - static_cast<std::size_t>(std::floor(t)), 100, 20));
    CHECK_FALSE(complement_trigger(20, 20 - static_cast<std::size_t>(std::ceil(t)), 100, 20));
  }

  TEST_CASE("log enumerator examples") {
    MonotoneLogEnum e(all_but_one(6));
    CHECK(e.first_switch_depth() == std::optional<std::size_t>(0));
    const auto got = oracle::drain(e);
    CHECK(got.size() == 7);
    CHECK(got == oracle::models(all_but_one(6)));

    MonotoneLogEnum x1(oracle::parse("p dnf 30 1\n1 0\n"));
    CHECK(oracle::drain(x1, 5).size() == 5);
    CHECK(x1.switches() == 0);
  }

  TEST_CASE("all three monotone enumerators agree") {
    std::mt19937_64 rng(18);
    for (int it = 0; it < 120; ++it) {
      const std::size_t n = 1 + rng() % 14;
      const Dnf d = oracle::random_dnf(rng, n, 1 + rng() % 40, n, true);
      const auto want = oracle::models(d);
      CHECK(want.size() >= minimize_monotone(d).num_terms());
      MonotoneRsEnum rs(d);
      MonotoneLogEnum lg(d);
      AvgFlashlightEnum av(d, AvgMode::kSmallIntoLarge);
      CHECK(oracle::sorted(oracle::drain(rs)) == want);
      CHECK(oracle::drain(lg) == want);
      CHECK(oracle::drain(av) == want);
    }
  }
}

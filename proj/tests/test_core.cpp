#include <doctest.h>

#include "dnfenum/core.hpp"
#include "oracle.hpp"

using namespace dnfenum;
using oracle::bits;

TEST_SUITE("core") {
  TEST_CASE("parse the core example") {
    const Dnf d = oracle::parse("p dnf 3 2\n1 2 0\n-3 0\n");
    CHECK(d.num_vars() == 3);
    CHECK(d.num_terms() == 2);
    CHECK(d.size() == 3);
    CHECK(d.term(0) == Term{Literal(1, true), Literal(2, true)});
    CHECK(d.term(1) == Term{Literal(3, false)});
  }

  TEST_CASE("duplicate terms are dropped") {
    const Dnf d = oracle::parse("p dnf 3 3\n1 2 0\n2 1 0\n-3 0\n");
    CHECK(d.num_terms() == 2);
    CHECK(d == oracle::parse("p dnf 3 2\n1 2 0\n-3 0\n"));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(oracle::parse("p dnf 2 1\n1 -1 0\n"), InputError);
    CHECK_THROWS_AS(oracle::parse("p dnf 2 1\n1 3 0\n"), InputError);
    CHECK_THROWS_AS(oracle::parse("1 2 0\n"), InputError);
    CHECK_THROWS_AS(oracle::parse("p dnf 2 2\n1 0\n"), InputError);
    CHECK_THROWS_AS(oracle::parse("p dnf 2 1\n1 2\n"), InputError);
    CHECK_THROWS_AS(oracle::parse("p dnf 2 1\n1 x 0\n"), InputError);
    try {
      oracle::parse("c hi\np dnf 2 1\n1 -1 0\n");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("serialize round trip") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
      const Dnf d = oracle::random_dnf(rng, 1 + rng() % 9, rng() % 12, 4);
      CHECK(parse_dnf_string(serialize_dnf(d)) == d);
    }
  }

  TEST_CASE("eval") {
    const Dnf d = oracle::parse("p dnf 3 2\n1 2 0\n-3 0\n");
    CHECK(eval(d, bits("110")));
    CHECK_FALSE(eval(d, bits("001")));
    CHECK_FALSE(eval(Dnf(3, {}), bits("000")));
  }

  TEST_CASE("restrict") {
    PartialAssignment t1(3);
    t1.set(1, 1);
    CHECK(same_terms(restrict(oracle::parse("p dnf 3 1\n1 2 -3 0\n"), t1),
                     oracle::parse("p dnf 3 1\n2 -3 0\n")));

    PartialAssignment t3(3);
    t3.set(3, 1);
    const Dnf d = oracle::parse("p dnf 3 2\n1 2 0\n-3 0\n");
    const Dnf r = restrict(d, t3);
    CHECK(same_terms(r, oracle::parse("p dnf 3 1\n1 2 0\n")));

    // {x1},{x1,x2} under x1=1: the empty term makes it a tautology over x2.
    PartialAssignment a(2);
    a.set(1, 1);
    const Dnf taut = restrict(oracle::parse("p dnf 2 2\n1 0\n1 2 0\n"), a);
    CHECK(taut.has_empty_term());
    std::size_t count = 0;
    for (const auto& m : oracle::models(taut)) count += m[0] == 1;
    CHECK(count == 2);  // both values of x2 once x1 is fixed
  }

  TEST_CASE("restrict agrees with sat(D, tau) on random inputs") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
      const std::size_t n = 2 + rng() % 8;
      const Dnf d = oracle::random_dnf(rng, n, 1 + rng() % 10, 4);
      PartialAssignment tau(n);
      for (Var v = 1; v <= n; ++v)
        if (rng() % 3 == 0) tau.set(v, rng() & 1);
      const auto terms = oracle::int_terms(restrict(d, tau));
      for (const auto& a : oracle::models(Dnf(n, {Term{}}))) {
        if (!tau.compatible(a)) continue;
        CHECK(oracle::holds(oracle::int_terms(d), a) == oracle::holds(terms, a));
      }
    }
  }

  TEST_CASE("brute force oracle") {
    const Dnf d = oracle::parse("p dnf 3 2\n1 2 0\n-3 0\n");
    const std::vector<Assignment> want = {bits("000"), bits("010"), bits("100"), bits("110"),
                                          bits("111")};
    CHECK(brute_force_models(d) == want);
    CHECK(brute_force_models(Dnf(3, {})).empty());
    CHECK(brute_force_count(d) == 5);

    std::vector<Term> all;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        std::vector<Literal> lits;
        if (a) lits.push_back(Literal::from_int(a));
        if (b && b != a && b != -a) lits.push_back(Literal::from_int(b));
        if (!lits.empty() && (!a || !b || std::abs(a) != std::abs(b))) all.push_back(make_term(lits, 2));
      }
    const Dnf full(2, all);
    CHECK(full.num_terms() == 8);
    CHECK(brute_force_models(full).size() == 4);
  }

  TEST_CASE("parallel oracle matches serial reference and naive scan") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 40; ++it) {
      const Dnf d = oracle::random_dnf(rng, 1 + rng() % 16, rng() % 30, 5);
      const auto par = brute_force_models(d);
      CHECK(par == brute_force_models_serial(d));
      CHECK(par == oracle::models(d));
    }
    CHECK_THROWS(brute_force_models(Dnf(25, {})));
  }

  TEST_CASE("pack and unpack") {
    CHECK(pack(bits("100")) == 4);
    CHECK(unpack(6, 3) == bits("110"));
    CHECK(to_bits(bits("0101")) == "0101");
  }
}

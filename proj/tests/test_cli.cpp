#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <numeric>
#include <sstream>

#include "dnfenum/runner.hpp"
#include "oracle.hpp"

using namespace dnfenum;

namespace {

struct Proc {
  std::string out;
  int code;
};

Proc sh(const std::string& args) {
  const std::string cmd = std::string(DNFENUM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  const int status = pclose(p);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string data(const char* name) { return std::string(DNFENUM_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("algorithm names round trip") {
    CHECK(algo_names().size() == 11);
    for (const auto& name : algo_names()) CHECK(algo_name(*parse_algo(name)) == name);
    CHECK_FALSE(parse_algo("nope").has_value());
  }

  TEST_CASE("stats identity and invariants") {
    std::mt19937_64 rng(60);
    for (const auto& name : algo_names()) {
      if (name == "term-gray" || name == "setunion") continue;
      const bool mono = name.rfind("monotone", 0) == 0;
      const Dnf d = oracle::random_dnf(rng, 9, 12, 3, mono);
      RunOptions o;
      o.algo = *parse_algo(name);
      const auto st = run_dnf(d, o, nullptr, true);
      CHECK(st.n_models == oracle::models(d).size());
      CHECK(st.total_steps ==
            st.precompute_steps + std::accumulate(st.delays.begin(), st.delays.end(), std::uint64_t{0}));
      CHECK(st.avg_delay_steps <= static_cast<double>(st.max_delay_steps));
      CHECK(st.max_delay_steps == *std::max_element(st.delays.begin(), st.delays.end()));
    }
  }

  TEST_CASE("stats with no models and with a limit") {
    RunOptions o;
    const auto none = run_dnf(Dnf(3, {}), o, nullptr);
    CHECK(none.n_models == 0);
    CHECK(none.avg_delay_steps == 0.0);
    o.limit = 3;
    const auto lim = run_dnf(oracle::parse("p dnf 4 1\n1 0\n"), o, nullptr);
    CHECK(lim.n_models == 3);
    const std::string js = lim.to_json();
    for (const char* key : {"total_steps", "n_models", "max_delay_steps", "avg_delay_steps",
                            "precompute_steps", "wall_ns", "peak_aux_memory_estimate"})
      CHECK(js.find(std::string("\"") + key + "\"") != std::string::npos);
  }

  TEST_CASE("term-gray needs one term") {
    RunOptions o;
    o.algo = Algo::kTermGray;
    StepCounter sc;
    CHECK_THROWS_AS(make_enumerator(oracle::parse("p dnf 2 2\n1 0\n2 0\n"), o, &sc), InputError);
  }

  TEST_CASE("generator contract") {
    GenSpec g{GenKind::kAllTerms, 2, 0, 0, 1};
    const Dnf all = generate_dnf(g);
    CHECK(all.num_terms() == 8);
    CHECK(oracle::models(all).size() == 4);

    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const GenSpec k{GenKind::kKdnf, 10, 200, 3, seed};
      const Dnf d = generate_dnf(k);
      CHECK(d.num_terms() == 200);
      CHECK(d.max_width() <= 3);
      CHECK(generate_dnf(k) == d);
    }
    const Dnf mono = generate_dnf({GenKind::kMonotone, 8, 30, 4, 5});
    CHECK(mono.is_monotone());
    CHECK(mono.num_terms() == 30);
    CHECK(generate_sets({GenKind::kSets, 6, 20, 3, 9}).size() == 20);
    CHECK_THROWS_AS(generate_dnf({GenKind::kRandom, 2, 9, 2, 1}), InputError);  // only 8 terms exist
    CHECK_THROWS_AS(generate_dnf({GenKind::kMonotone, 3, 8, 3, 1}), InputError);
  }

  TEST_CASE("sweep") {
    SweepSpec s;
    s.kind = GenKind::kRandom;
    s.ns = {12};
    s.ms = {16, 64, 256};
    s.run.algo = Algo::kAvg;
    s.check_oracle = true;
    const auto par = sweep(s);
    const auto ser = sweep_serial(s);
    REQUIRE(par.size() == 3);
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].oracle_ok);
      CHECK(par[i].n_models == ser[i].n_models);
      CHECK(par[i].total_steps == ser[i].total_steps);
      CHECK(par[i].max_delay_steps == ser[i].max_delay_steps);
    }
    s.ms.clear();
    CHECK(sweep_csv(sweep(s)) == "m,n,n_models,avg_delay_steps,max_delay_steps,wall_ns\n");
  }

  TEST_CASE("command line") {
    const auto count = sh(data("core.dnf") + " --algo flashlight --count");
    CHECK(count.code == 0);
    CHECK(count.out == "5\n");
    CHECK(sh(data("core.dnf") + " --algo kdnf --k 2 --check-oracle").code == 0);
    CHECK(sh(data("mixed.dnf") + " --algo monotone-rs").code == 3);
    CHECK(sh(data("core.dnf") + " --algo kdnf --k 1").code == 3);
    CHECK(sh(data("core.dnf") + " --algo nope").code == 2);
    CHECK(sh("").code == 2);
    CHECK(sh("/nonexistent.dnf").code == 3);
    CHECK(sh(data("triangle.sets") + " --algo setunion --count").out == "4\n");
    CHECK(sh(data("unate.dnf") + " --algo monotone-log --check-oracle").code == 0);
  }

  TEST_CASE("flips replay to the bits stream") {
    const auto inst = sh("gen --kind random --n 9 --m 14 --k 3 --seed 4");
    REQUIRE(inst.code == 0);
    const std::string path = "/tmp/dnfenum_cli_test.dnf";
    {
      FILE* f = fopen(path.c_str(), "w");
      fputs(inst.out.c_str(), f);
      fclose(f);
    }
    for (const char* algo : {"kdnf", "avg", "union-priority"}) {
      const auto b = lines(sh(path + " --algo " + std::string(algo)).out);
      const auto fl = lines(sh(path + " --format flips --algo " + std::string(algo)).out);
      REQUIRE(b.size() == fl.size());
      REQUIRE(!b.empty());
      std::string cur = fl[0];
      CHECK(cur == b[0]);
      for (std::size_t i = 1; i < fl.size(); ++i) {
        std::istringstream in(fl[i]);
        for (std::size_t p; in >> p;) cur[p - 1] = cur[p - 1] == '0' ? '1' : '0';
        CHECK(cur == b[i]);
      }
    }
    std::remove(path.c_str());
  }
}

// dnfenum: enumerate the models of a DNF (or the unions of a set family).

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dnfenum/runner.hpp"

using namespace dnfenum;

namespace {

constexpr int kUsage = 2;
constexpr int kInput = 3;
constexpr int kMismatch = 4;

struct Input {
  bool is_sets = false;
  std::optional<Dnf> dnf;
  std::optional<SetFamily> sets;
  std::size_t n() const { return is_sets ? sets->ground_size() : dnf->num_vars(); }
};

Input read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Input in;
  std::istringstream probe(text);
  std::string line;
  while (std::getline(probe, line)) {
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a) || a == "c") continue;
    in.is_sets = a == "p" && (ls >> b) && b == "sets";
    break;
  }
  if (in.is_sets)
    in.sets = parse_sets_string(text);
  else
    in.dnf = parse_dnf_string(text);
  return in;
}

// Buffered model writer for the bits and flips formats.
class Writer {
 public:
  explicit Writer(bool flips) : flips_(flips) {}
  ~Writer() { flush(); }

  void put(const Assignment& a) {
    if (flips_ && have_prev_) {
      bool first = true;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != prev_[i]) {
          if (!first) buf_ += ' ';
          buf_ += std::to_string(i + 1);
          first = false;
        }
    } else {
      for (auto b : a) buf_ += static_cast<char>('0' + b);
    }
    buf_ += '\n';
    if (flips_) {
      prev_ = a;
      have_prev_ = true;
    }
    if (buf_.size() > (1u << 16)) flush();
  }
  void flush() {
    std::fwrite(buf_.data(), 1, buf_.size(), stdout);
    buf_.clear();
  }

 private:
  bool flips_;
  bool have_prev_ = false;
  Assignment prev_;
  std::string buf_;
};

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoull(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model enumeration for DNF formulas"};
  app.set_help_all_flag("--help-all");

  std::string input;
  std::string algo = "flashlight";
  std::string mode = "t11";
  std::size_t k = 0;
  double lambda = kDefaultLambda;
  bool count_only = false;
  std::uint64_t limit = 0;
  bool stats = false;
  std::string format = "bits";
  bool check_oracle = false;

  app.add_option("input", input, "Input .dnf or .sets file ('-' for stdin)");
  app.add_option("--algo", algo, "Algorithm")->check(CLI::IsMember(algo_names()));
  app.add_option("--mode", mode, "avg construction: t10 (re-insert) or t11 (small into large)")
      ->check(CLI::IsMember({"t10", "t11"}));
  app.add_option("--k", k, "Width bound for kdnf (default: maximum term width)");
  app.add_option("--lambda", lambda, "kdnf-hybrid cutoff factor");
  app.add_flag("--count", count_only, "Print only the number of models");
  app.add_option("--limit", limit, "Stop after this many models");
  app.add_flag("--stats", stats, "Write delay statistics as JSON to stderr");
  app.add_option("--format", format, "Model format")->check(CLI::IsMember({"bits", "flips"}));
  app.add_flag("--check-oracle", check_oracle, "Compare against brute force (n <= 24)");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_kind = "random";
  GenSpec gspec;
  std::string out_path;
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"random", "monotone", "kdnf", "all-terms", "sets"}));
  gen->add_option("--n", gspec.n);
  gen->add_option("--m", gspec.m);
  gen->add_option("--k", gspec.k, "Maximum width (set size); 0 means n");
  gen->add_option("--seed", gspec.seed);
  gen->add_option("-o,--output", out_path);

  auto* sw = app.add_subcommand("sweep", "Run a family of generated instances, print CSV");
  std::string sw_kind = "random", sw_ns = "10", sw_ms = "";
  SweepSpec sspec;
  bool sw_serial = false;
  sw->add_option("--kind", sw_kind)->check(CLI::IsMember({"random", "monotone", "kdnf", "all-terms", "sets"}));
  sw->add_option("--n", sw_ns, "Comma-separated list");
  sw->add_option("--m", sw_ms, "Comma-separated list");
  sw->add_option("--k", sspec.k);
  sw->add_option("--seed", sspec.seed);
  sw->add_option("--algo", algo)->check(CLI::IsMember(algo_names()));
  sw->add_option("--mode", mode)->check(CLI::IsMember({"t10", "t11"}));
  sw->add_option("--limit", limit);
  sw->add_flag("--check-oracle", check_oracle);
  sw->add_flag("--serial", sw_serial, "Run instances one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  RunOptions opts;
  opts.algo = *parse_algo(algo);
  opts.mode = mode == "t10" ? AvgMode::kReinsert : AvgMode::kSmallIntoLarge;
  opts.k = k;
  opts.lambda = lambda;
  opts.limit = limit;

  try {
    if (gen->parsed()) {
      gspec.kind = *parse_gen_kind(gen_kind);
      const std::string text = gspec.kind == GenKind::kSets ? serialize_sets(generate_sets(gspec))
                                                            : serialize_dnf(generate_dnf(gspec));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write " + out_path);
        f << text;
      }
      return 0;
    }
    if (sw->parsed()) {
      sspec.kind = *parse_gen_kind(sw_kind);
      sspec.ns = parse_list(sw_ns);
      sspec.ms = parse_list(sw_ms);
      sspec.run = opts;
      sspec.check_oracle = check_oracle;
      const auto rows = sw_serial ? sweep_serial(sspec) : sweep(sspec);
      std::cout << sweep_csv(rows);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.oracle_ok; });
      if (!ok) std::cerr << "error: oracle mismatch in sweep\n";
      return ok ? 0 : kMismatch;
    }
    if (input.empty()) {
      std::cerr << "error: missing input file\n" << app.help();
      return kUsage;
    }
    const Input in = read_input(input);
    if (check_oracle && in.n() > kMaxOracleVars) {
      std::cerr << "error: --check-oracle needs n <= " << kMaxOracleVars << "\n";
      return kUsage;
    }
    Writer writer(format == "flips");
    std::vector<Assignment> seen;
    ModelSink sink = [&](const Assignment& a) {
      if (!count_only) writer.put(a);
      if (check_oracle) seen.push_back(a);
    };
    DelayStats st;
    if (in.is_sets && opts.algo == Algo::kSetUnion)
      st = run_sets(*in.sets, limit, sink);
    else
      st = run_dnf(in.is_sets ? in.sets->as_dnf() : *in.dnf, opts, sink);
    writer.flush();
    if (count_only) std::cout << st.n_models << "\n";
    std::cout.flush();
    if (stats) std::cerr << st.to_json() << "\n";
    if (check_oracle) {
      std::vector<Assignment> want;
      if (opts.algo == Algo::kSetUnion)
        want = brute_force_unions(in.is_sets ? *in.sets : SetFamily(in.n(), [&] {
          std::vector<std::vector<Element>> s;
          for (const auto& t : in.dnf->terms()) {
            s.emplace_back();
            for (auto l : t) s.back().push_back(l.var());
          }
          return s;
        }()));
      else
        want = brute_force_models(in.is_sets ? in.sets->as_dnf() : *in.dnf);
      std::sort(seen.begin(), seen.end());
      bool ok = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
      if (limit && seen.size() < want.size())
        ok = ok && std::includes(want.begin(), want.end(), seen.begin(), seen.end());
      else
        ok = ok && seen == want;
      if (!ok) {
        std::cerr << "error: output differs from the brute-force oracle (" << seen.size()
                  << " vs " << want.size() << " models)\n";
        return kMismatch;
      }
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

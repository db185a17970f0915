#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"
#include "dnfenum/kdnf.hpp"
#include "dnfenum/setunion.hpp"

namespace dnfenum {

enum class Algo {
  kTermGray,
  kUnionPriority,
  kUnionOrdered,
  kFlashlight,
  kKdnf,
  kKdnfHybrid,
  kAvg,
  kMonotoneRs,
  kMonotoneAvg,
  kMonotoneLog,
  kSetUnion,
};

std::optional<Algo> parse_algo(const std::string& name);
std::string algo_name(Algo a);
const std::vector<std::string>& algo_names();

struct RunOptions {
  Algo algo = Algo::kFlashlight;
  AvgMode mode = AvgMode::kSmallIntoLarge;
  std::size_t k = 0;  // 0: the formula's maximum width
  double lambda = kDefaultLambda;
  std::uint64_t limit = 0;  // 0: no limit
};

/// Builds the enumerator for `d`; all construction work lands on `counter`.
/// Throws InputError when the formula does not suit the algorithm.
std::unique_ptr<ModelEnumerator> make_enumerator(const Dnf& d, const RunOptions& opts,
                                                 StepCounter* counter);

struct DelayStats {
  std::uint64_t total_steps = 0;
  std::uint64_t n_models = 0;
  std::uint64_t max_delay_steps = 0;
  double avg_delay_steps = 0;
  std::uint64_t precompute_steps = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t peak_aux_memory_estimate = 0;
  /// Per-output delays, kept only when requested.
  std::vector<std::uint64_t> delays;

  std::string to_json() const;
};

using ModelSink = std::function<void(const Assignment&)>;

/// Drains `e` (up to `limit` models, 0 = all). The delay of an output is the
/// step count since the previous output; work after the last output is
/// charged to the last delay. `precompute` is the construction cost.
DelayStats measure(ModelEnumerator& e, std::uint64_t precompute, std::uint64_t limit,
                   const ModelSink& sink, bool keep_delays = false);

/// Constructs and measures in one go.
DelayStats run_dnf(const Dnf& d, const RunOptions& opts, const ModelSink& sink,
                   bool keep_delays = false);
DelayStats run_sets(const SetFamily& f, std::uint64_t limit, const ModelSink& sink,
                    bool keep_delays = false);

enum class GenKind { kRandom, kMonotone, kKdnf, kAllTerms, kSets };
std::optional<GenKind> parse_gen_kind(const std::string& name);

struct GenSpec {
  GenKind kind = GenKind::kRandom;
  std::size_t n = 10;
  std::size_t m = 10;
  std::size_t k = 0;  // maximum width (set size); 0: n
  std::uint64_t seed = 1;
};

/// Seeded instance generator; duplicates are redrawn. Throws InputError when
/// m exceeds the number of distinct terms (sets) available.
Dnf generate_dnf(const GenSpec& g);
SetFamily generate_sets(const GenSpec& g);

struct SweepSpec {
  GenKind kind = GenKind::kRandom;
  std::vector<std::size_t> ns;
  std::vector<std::size_t> ms;
  std::size_t k = 0;
  std::uint64_t seed = 1;
  RunOptions run;
  bool check_oracle = false;
};

struct SweepRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t n_models = 0;
  double avg_delay_steps = 0;
  std::uint64_t max_delay_steps = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t total_steps = 0;
  bool oracle_ok = true;
};

/// One row per (n, m) pair, n-major. Instances run in parallel; rows are
/// identical to sweep_serial apart from wall_ns.
std::vector<SweepRow> sweep(const SweepSpec& s);
std::vector<SweepRow> sweep_serial(const SweepSpec& s);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace dnfenum

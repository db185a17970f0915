#include "dnfenum/runner.hpp"

#include <chrono>
#include <json.hpp>

#include "dnfenum/avg.hpp"
#include "dnfenum/classic.hpp"
#include "dnfenum/graycode.hpp"
#include "dnfenum/monotone.hpp"

namespace dnfenum {

namespace {

const std::vector<std::pair<std::string, Algo>>& algo_table() {
  static const std::vector<std::pair<std::string, Algo>> table = {
      {"term-gray", Algo::kTermGray},       {"union-priority", Algo::kUnionPriority},
      {"union-ordered", Algo::kUnionOrdered}, {"flashlight", Algo::kFlashlight},
      {"kdnf", Algo::kKdnf},                {"kdnf-hybrid", Algo::kKdnfHybrid},
      {"avg", Algo::kAvg},                  {"monotone-rs", Algo::kMonotoneRs},
      {"monotone-avg", Algo::kMonotoneAvg}, {"monotone-log", Algo::kMonotoneLog},
      {"setunion", Algo::kSetUnion},
  };
  return table;
}

std::unique_ptr<ModelEnumerator> unate(const Dnf& d, StepCounter* counter,
                                       std::unique_ptr<ModelEnumerator> (*make)(const Dnf&,
                                                                                StepCounter*)) {
  auto u = normalize_unate(d);
  counter->tick(d.size());
  auto inner = make(u.monotone, counter);
  if (std::none_of(u.mask.begin(), u.mask.end(), [](auto b) { return b != 0; })) return inner;
  return std::make_unique<UnateEnum>(std::move(inner), std::move(u.mask));
}

}  // namespace

std::optional<Algo> parse_algo(const std::string& name) {
  for (const auto& [s, a] : algo_table())
    if (s == name) return a;
  return std::nullopt;
}

std::string algo_name(Algo a) {
  for (const auto& [s, b] : algo_table())
    if (a == b) return s;
  return "?";
}

const std::vector<std::string>& algo_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : algo_table()) v.push_back(e.first);
    return v;
  }();
  return names;
}

std::unique_ptr<ModelEnumerator> make_enumerator(const Dnf& d, const RunOptions& opts,
                                                 StepCounter* counter) {
  switch (opts.algo) {
    case Algo::kTermGray:
      if (d.num_terms() != 1)
        throw InputError("term-gray enumerates a single term; the formula has " +
                         std::to_string(d.num_terms()));
      return std::make_unique<TermModelEnum>(d.term(0), d.num_vars(), counter);
    case Algo::kUnionPriority:
      return std::make_unique<UnionPriorityEnum>(d, counter);
    case Algo::kUnionOrdered:
      return std::make_unique<UnionOrderedEnum>(d, counter);
    case Algo::kFlashlight:
      return std::make_unique<FlashlightEnum>(d, counter);
    case Algo::kKdnf:
    case Algo::kKdnfHybrid: {
      const std::size_t k = opts.k ? opts.k : std::max<std::size_t>(d.max_width(), 1);
      if (d.max_width() > k)
        throw InputError("formula has a term of width " + std::to_string(d.max_width()) +
                         ", above --k " + std::to_string(k));
      auto cfg = KdnfConfig::for_width(k);
      cfg.lambda = opts.lambda;
      return std::make_unique<KdnfEnum>(d, cfg, opts.algo == Algo::kKdnfHybrid, counter);
    }
    case Algo::kAvg:
      return std::make_unique<AvgFlashlightEnum>(d, opts.mode, counter);
    case Algo::kMonotoneRs:
      return unate(d, counter, [](const Dnf& m, StepCounter* c) -> std::unique_ptr<ModelEnumerator> {
        return std::make_unique<MonotoneRsEnum>(m, c);
      });
    case Algo::kMonotoneAvg:
      return unate(d, counter, [](const Dnf& m, StepCounter* c) -> std::unique_ptr<ModelEnumerator> {
        return std::make_unique<AvgFlashlightEnum>(m, AvgMode::kSmallIntoLarge, c);
      });
    case Algo::kMonotoneLog:
      return unate(d, counter, [](const Dnf& m, StepCounter* c) -> std::unique_ptr<ModelEnumerator> {
        return std::make_unique<MonotoneLogEnum>(m, c);
      });
    case Algo::kSetUnion:
      return std::make_unique<UnionEnum>(
          SetFamily(d.num_vars(), [&] {
            if (!d.is_monotone()) throw InputError("setunion needs a set family (positive terms)");
            std::vector<std::vector<Element>> sets;
            for (const auto& t : d.terms()) {
              std::vector<Element> s;
              for (auto l : t) s.push_back(l.var());
              sets.push_back(std::move(s));
            }
            return sets;
          }()),
          counter);
  }
  throw InputError("unknown algorithm");
}

std::string DelayStats::to_json() const {
  nlohmann::ordered_json j;
  j["total_steps"] = total_steps;
  j["n_models"] = n_models;
  j["max_delay_steps"] = max_delay_steps;
  j["avg_delay_steps"] = avg_delay_steps;
  j["precompute_steps"] = precompute_steps;
  j["wall_ns"] = wall_ns;
  j["peak_aux_memory_estimate"] = peak_aux_memory_estimate;
  return j.dump();
}

DelayStats measure(ModelEnumerator& e, std::uint64_t precompute, std::uint64_t limit,
                   const ModelSink& sink, bool keep_delays) {
  DelayStats st;
  st.precompute_steps = precompute;
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t base = e.steps();
  std::uint64_t last = base;
  std::uint64_t last_delay = 0;
  bool exhausted = false;
  while (limit == 0 || st.n_models < limit) {
    if (!e.next()) {
      exhausted = true;
      break;
    }
    const std::uint64_t now = e.steps();
    const std::uint64_t delay = now - last;
    last = now;
    ++st.n_models;
    st.max_delay_steps = std::max(st.max_delay_steps, delay);
    last_delay = delay;
    if (keep_delays) st.delays.push_back(delay);
    if (sink) sink(e.model());
  }
  st.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  if (exhausted) {
    const std::uint64_t tail = e.steps() - last;
    if (st.n_models == 0) {
      st.max_delay_steps = tail;
    } else {
      last_delay += tail;
      st.max_delay_steps = std::max(st.max_delay_steps, last_delay);
      if (keep_delays) st.delays.back() = last_delay;
    }
  }
  const std::uint64_t enum_steps = e.steps() - base;
  st.total_steps = precompute + enum_steps;
  st.avg_delay_steps =
      st.n_models ? static_cast<double>(enum_steps) / static_cast<double>(st.n_models) : 0.0;
  st.peak_aux_memory_estimate = e.peak_aux_nodes();
  return st;
}

DelayStats run_dnf(const Dnf& d, const RunOptions& opts, const ModelSink& sink, bool keep_delays) {
  StepCounter counter;
  auto e = make_enumerator(d, opts, &counter);
  return measure(*e, counter.count, opts.limit, sink, keep_delays);
}

DelayStats run_sets(const SetFamily& f, std::uint64_t limit, const ModelSink& sink,
                    bool keep_delays) {
  StepCounter counter;
  UnionEnum e(f, &counter);
  return measure(e, counter.count, limit, sink, keep_delays);
}

}  // namespace dnfenum

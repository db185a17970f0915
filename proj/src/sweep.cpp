#include <algorithm>
#include <exception>
#include <sstream>

#include "dnfenum/runner.hpp"

namespace dnfenum {

namespace {

struct Cell {
  std::size_t n, m;
  std::uint64_t seed;
};

std::vector<Cell> cells(const SweepSpec& s) {
  std::vector<Cell> out;
  for (auto n : s.ns)
    for (auto m : s.ms) out.push_back({n, m, s.seed + out.size()});
  return out;
}

SweepRow run_cell(const SweepSpec& s, const Cell& c) {
  const GenSpec g{s.kind, c.n, c.m, s.k, c.seed};
  std::vector<Assignment> got;
  const bool collect = s.check_oracle && c.n <= 16;
  ModelSink sink;
  if (collect) sink = [&](const Assignment& a) { got.push_back(a); };
  SweepRow row;
  row.n = c.n;
  row.m = c.m;
  DelayStats st;
  std::vector<Assignment> want;
  if (s.kind == GenKind::kSets) {
    const auto f = generate_sets(g);
    st = run_sets(f, s.run.limit, sink);
    if (collect && f.size() <= 20) want = brute_force_unions(f);
  } else {
    const auto d = generate_dnf(g);
    row.m = d.num_terms();
    st = run_dnf(d, s.run, sink);
    if (collect) want = brute_force_models(d);
  }
  if (collect && (s.kind != GenKind::kSets || !want.empty())) {
    std::sort(got.begin(), got.end());
    row.oracle_ok = std::adjacent_find(got.begin(), got.end()) == got.end() && got == want;
  }
  row.n_models = st.n_models;
  row.avg_delay_steps = st.avg_delay_steps;
  row.max_delay_steps = st.max_delay_steps;
  row.wall_ns = st.wall_ns;
  row.total_steps = st.total_steps;
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_serial(const SweepSpec& s) {
  const auto cs = cells(s);
  std::vector<SweepRow> rows;
  rows.reserve(cs.size());
  for (const auto& c : cs) rows.push_back(run_cell(s, c));
  return rows;
}

std::vector<SweepRow> sweep(const SweepSpec& s) {
  const auto cs = cells(s);
  std::vector<SweepRow> rows(cs.size());
  std::exception_ptr err;
  const long count = static_cast<long>(cs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      rows[i] = run_cell(s, cs[i]);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "m,n,n_models,avg_delay_steps,max_delay_steps,wall_ns\n";
  for (const auto& r : rows)
    out << r.m << ',' << r.n << ',' << r.n_models << ',' << r.avg_delay_steps << ','
        << r.max_delay_steps << ',' << r.wall_ns << '\n';
  return out.str();
}

}  // namespace dnfenum

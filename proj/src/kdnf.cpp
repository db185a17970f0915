#include "dnfenum/kdnf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace dnfenum {

std::uint64_t output_budget(std::size_t k) {
  const double kd = static_cast<double>(k);
  return static_cast<std::uint64_t>(std::ceil(std::pow(kd, 1.5) * std::ldexp(1.0, static_cast<int>(2 * k))));
}

KdnfConfig KdnfConfig::for_width(std::size_t k) {
  KdnfConfig cfg;
  cfg.k = std::max<std::size_t>(k, 1);
  cfg.budget = output_budget(cfg.k);
  cfg.step_constant = calibrated_step_constant();
  return cfg;
}

TermPartition partition_assignments(const Term& t, std::size_t n) {
  TermPartition p{PartialAssignment(n), {}};
  for (auto l : t) p.one.set(l.var(), l.positive() ? 1 : 0);
  for (std::size_t j = 0; j < t.size(); ++j) {
    PartialAssignment z(n);
    for (std::size_t i = 0; i < j; ++i) z.set(t[i].var(), t[i].positive() ? 1 : 0);
    z.set(t[j].var(), t[j].positive() ? 0 : 1);
    p.zeros.push_back(std::move(z));
  }
  return p;
}

Term choose_min_term(const Dnf& d) {
  if (d.empty()) throw std::invalid_argument("cannot choose a term of an empty DNF");
  const Term* best = &d.term(0);
  for (const auto& t : d.terms())
    if (t.size() < best->size() || (t.size() == best->size() && t < *best)) best = &t;
  return *best;
}

bool budget_suffices(std::uint64_t budget, std::size_t live_vars, std::size_t min_width,
                     std::size_t terms) {
  const long double lhs =
      std::ldexp(static_cast<long double>(budget),
                 static_cast<int>(live_vars) - static_cast<int>(min_width));
  const long double rhs = static_cast<long double>(min_width) * min_width * terms;
  return lhs >= rhs;
}

CofactorBuilder::CofactorBuilder(const Trie& src, PartialAssignment assignment, StepCounter* steps)
    : src_(&src),
      assignment_(std::move(assignment)),
      steps_(steps),
      out_(std::make_unique<Trie>(src.alphabet(), ChildRep::Array, steps)),
      seen_(src.alphabet() / 2 + 1, 0) {
  stack_.push_back({src.root(), 0, false});
  if (src.terminal(src.root())) {
    out_->insert(buf_);
    have_min_ = true;
  }
}

void CofactorBuilder::step() {
  steps_->tick();
  if (stack_.empty()) {
    done_ = true;
    return;
  }
  Entry& top = stack_.back();
  if (top.next >= src_->num_children(top.node)) {
    if (top.appended) buf_.pop_back();
    stack_.pop_back();
    if (stack_.empty()) done_ = true;
    return;
  }
  const auto [sym, c] = src_->child_at(top.node, top.next++);
  const Literal l = literal_of(sym);
  bool appended = false;
  if (assignment_.contains(l.var())) {
    if (!l.satisfied_by(assignment_.get(l.var()))) return;  // falsified: prune
  } else {
    buf_.push_back(sym);
    appended = true;
  }
  stack_.push_back({c, 0, appended});
  if (!src_->terminal(c)) return;
  if (!out_->insert(buf_)) return;
  for (auto s : buf_) {
    const Var v = literal_of(s).var();
    if (!seen_[v]) {
      seen_[v] = 1;
      ++live_vars_;
    }
  }
  if (!have_min_ || buf_.size() < min_word_.size() ||
      (buf_.size() == min_word_.size() && buf_ < min_word_)) {
    min_word_ = buf_;
    have_min_ = true;
  }
}

std::uint64_t CofactorBuilder::run(std::uint64_t budget) {
  const std::uint64_t start = steps_->count;
  while (!done_ && steps_->count - start < budget) step();
  return steps_->count - start;
}

std::uint64_t calibrated_step_constant() {
  static const std::uint64_t constant = [] {
    std::mt19937_64 rng(0x6b646e66u);
    double worst = 1.0;
    for (std::size_t k = 1; k <= 4; ++k)
      for (std::size_t n : {8u, 12u, 16u, 24u})
        for (std::size_t m : {8u, 32u, 128u}) {
          std::vector<Term> terms;
          std::uniform_int_distribution<std::size_t> width(1, k);
          std::uniform_int_distribution<Var> var(1, static_cast<Var>(n));
          for (std::size_t i = 0; i < m; ++i) {
            std::set<Var> vars;
            const std::size_t w = width(rng);
            while (vars.size() < w) vars.insert(var(rng));
            std::vector<Literal> lits;
            for (Var v : vars) lits.emplace_back(v, (rng() & 1u) != 0);
            terms.push_back(make_term(std::move(lits), n));
          }
          Dnf d(n, std::move(terms));
          Trie src(2 * n, ChildRep::Array);
          for (const auto& t : d.terms()) src.insert(word_of(t));
          StepCounter sc;
          const auto part = partition_assignments(choose_min_term(d), n);
          for (const auto& z : part.zeros) {
            CofactorBuilder b(src, z, &sc);
            b.run(std::numeric_limits<std::uint64_t>::max());
          }
          const double ratio = static_cast<double>(sc.count) /
                               static_cast<double>(k * k * d.num_terms());
          worst = std::max(worst, ratio);
        }
    return static_cast<std::uint64_t>(std::ceil(worst));
  }();
  return constant;
}

struct KdnfEnum::Frame {
  std::int64_t id = 0;
  FrameInfo::Kind kind = FrameInfo::Kind::kTerm;
  std::unique_ptr<Trie> trie;
  std::unique_ptr<TermModelEnum> gray;
  bool gray_done = false;
  std::vector<PartialAssignment> child_tau;
  std::vector<CofactorBuilder> builders;
  std::size_t building = 0;
  std::vector<std::unique_ptr<Trie>> cofactors;
  std::vector<Word> cofactor_min;
  std::vector<std::size_t> cofactor_vars;
  std::size_t next_child = 0;
  std::unique_ptr<AvgFlashlightEnum> avg;
  std::vector<Var> avg_vars;
};

KdnfEnum::KdnfEnum(const Dnf& d, KdnfConfig cfg, bool hybrid, StepCounter* shared)
    : ModelEnumerator(shared), d_(d), cfg_(cfg), hybrid_(hybrid), n_(d.num_vars()), model_(n_, 0) {
  if (d.max_width() > cfg_.k)
    throw std::invalid_argument("term of width " + std::to_string(d.max_width()) +
                                " exceeds k = " + std::to_string(cfg_.k));
  if (d.empty()) return;
  auto trie = std::make_unique<Trie>(2 * n_, ChildRep::Array, &counter());
  std::vector<std::uint8_t> seen(n_ + 1, 0);
  std::size_t live = 0;
  for (const auto& t : d.terms()) {
    trie->insert(word_of(t));
    for (auto l : t)
      if (!seen[l.var()]) {
        seen[l.var()] = 1;
        ++live;
      }
  }
  push_frame(std::move(trie), PartialAssignment(n_), word_of(choose_min_term(d)), live, -1);
}

KdnfEnum::~KdnfEnum() = default;

void KdnfEnum::push_frame(std::unique_ptr<Trie> trie, PartialAssignment tau, const Word& min_word,
                          std::size_t live_vars, std::int64_t parent) {
  auto f = std::make_unique<Frame>();
  f->id = frame_counter_++;
  const Term chosen = term_of(min_word);
  if (trie->terminal(trie->root())) {
    f->kind = FrameInfo::Kind::kTerm;
    f->gray = std::make_unique<TermModelEnum>(Term{}, tau, model_, &counter());
  } else if (hybrid_ && static_cast<double>(live_vars) < cfg_.lambda * static_cast<double>(cfg_.k)) {
    f->kind = FrameInfo::Kind::kAvg;
    std::vector<Var> index(n_ + 1, 0);
    for (Var v = 1; v <= n_; ++v) {
      tick();
      if (tau.contains(v)) {
        model_[v - 1] = tau.get(v);
      } else {
        f->avg_vars.push_back(v);
        index[v] = static_cast<Var>(f->avg_vars.size());
      }
    }
    std::vector<Term> terms;
    for (const auto& w : trie->words()) {
      Term t;
      for (auto s : w) {
        const Literal l = literal_of(s);
        t.emplace_back(index[l.var()], l.positive());
        tick();
      }
      terms.push_back(std::move(t));
    }
    f->avg = std::make_unique<AvgFlashlightEnum>(Dnf(f->avg_vars.size(), std::move(terms)),
                                                 AvgMode::kSmallIntoLarge, &counter());
  } else {
    f->gray = std::make_unique<TermModelEnum>(chosen, tau, model_, &counter());
    if (trie->size() == 1) {
      f->kind = FrameInfo::Kind::kTerm;
    } else {
      f->kind = FrameInfo::Kind::kSplit;
      if (!budget_suffices(cfg_.budget, live_vars, chosen.size(), trie->size())) ++guard_failures_;
      auto part = partition_assignments(chosen, n_);
      for (auto& z : part.zeros) {
        PartialAssignment child = tau;
        for (Var v : z.domain()) child.set(v, z.get(v));
        f->child_tau.push_back(std::move(child));
        f->builders.emplace_back(*trie, std::move(z), &counter());
      }
    }
  }
  f->trie = std::move(trie);
  if (cfg_.record_frames) frames_.push_back({parent, tau, chosen, f->kind});
  stack_.push_back(std::move(f));
  max_depth_ = std::max(max_depth_, stack_.size());
  std::size_t nodes = 0;
  for (const auto& fr : stack_) {
    if (fr->trie) nodes += fr->trie->live_nodes();
    for (const auto& c : fr->cofactors)
      if (c) nodes += c->live_nodes();
  }
  peak_nodes_ = std::max(peak_nodes_, nodes);
}

void KdnfEnum::precompute(Frame& f, std::uint64_t budget) {
  while (budget > 0 && f.building < f.builders.size()) {
    auto& b = f.builders[f.building];
    const std::uint64_t used = b.run(budget);
    budget -= std::min(used, budget);
    if (b.done()) {
      f.cofactor_min.push_back(b.min_word());
      f.cofactor_vars.push_back(b.live_vars());
      f.cofactors.push_back(b.take());
      ++f.building;
    }
  }
}

bool KdnfEnum::next() {
  for (;;) {
    if (stack_.empty()) return false;
    Frame& f = *stack_.back();
    tick();
    if (f.kind == FrameInfo::Kind::kAvg) {
      if (f.avg->next()) {
        const auto& sub = f.avg->model();
        for (std::size_t i = f.avg->changed_from(); i < sub.size(); ++i) {
          model_[f.avg_vars[i] - 1] = sub[i];
          tick();
        }
        current_frame_ = f.id;
        return true;
      }
      stack_.pop_back();
      continue;
    }
    if (!f.gray_done) {
      if (f.gray->next()) {
        precompute(f, cfg_.steps_per_output());
        current_frame_ = f.id;
        return true;
      }
      f.gray_done = true;
      if (f.building < f.builders.size()) {
        ++overruns_;
        precompute(f, std::numeric_limits<std::uint64_t>::max());
      }
      f.builders.clear();
      f.trie.reset();
      continue;
    }
    if (f.next_child < f.cofactors.size()) {
      const std::size_t i = f.next_child++;
      auto trie = std::move(f.cofactors[i]);
      if (trie->empty()) continue;
      push_frame(std::move(trie), f.child_tau[i], f.cofactor_min[i], f.cofactor_vars[i], f.id);
      continue;
    }
    stack_.pop_back();
  }
}

}  // namespace dnfenum

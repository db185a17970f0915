#include "dnfenum/classic.hpp"

namespace dnfenum {

UnionPriorityEnum::UnionPriorityEnum(const Dnf& d, StepCounter* shared)
    : ModelEnumerator(shared), d_(d), live_(d.num_terms(), true), live_count_(d.num_terms()) {
  enums_.reserve(d.num_terms());
  for (const auto& t : d.terms())
    enums_.push_back(std::make_unique<TermModelEnum>(t, d.num_vars(), &counter()));
}

const Assignment& UnionPriorityEnum::model() const {
  return enums_.empty() ? empty_ : enums_[current_]->model();
}

bool UnionPriorityEnum::covered_after(std::size_t i, const Assignment& a) {
  for (std::size_t j = i + 1; j < d_.num_terms(); ++j) {
    bool sat = true;
    for (auto l : d_.term(j)) {
      tick();
      if (!l.satisfied_by(a[l.var() - 1])) {
        sat = false;
        break;
      }
    }
    if (sat) return true;
  }
  return false;
}

bool UnionPriorityEnum::next() {
  const std::size_t m = enums_.size();
  while (live_count_ > 0) {
    const std::size_t i = cursor_;
    cursor_ = (cursor_ + 1) % m;
    tick();
    if (!live_[i]) continue;
    if (!enums_[i]->next()) {
      live_[i] = false;
      --live_count_;
      continue;
    }
    if (!covered_after(i, enums_[i]->model())) {
      current_ = i;
      return true;
    }
  }
  return false;
}

LexTermEnum::LexTermEnum(const Term& c, std::size_t n, StepCounter* steps)
    : regs_(n, 0), steps_(steps) {
  std::vector<bool> bound(n, false);
  for (auto l : c) {
    regs_[l.var() - 1] = l.positive() ? 1 : 0;
    bound[l.var() - 1] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!bound[i]) free_.push_back(static_cast<Var>(i + 1));
  if (steps_) steps_->tick(n);
}

bool LexTermEnum::advance() {
  // Binary increment over the free variables, x_1 most significant.
  for (std::size_t i = free_.size(); i-- > 0;) {
    auto& r = regs_[free_[i] - 1];
    if (steps_) steps_->tick();
    if (r == 0) {
      r = 1;
      return true;
    }
    r = 0;
  }
  return false;
}

UnionOrderedEnum::UnionOrderedEnum(const Dnf& d, StepCounter* shared)
    : ModelEnumerator(shared), n_(d.num_vars()), frontier_(2, ChildRep::SortedList, &counter()) {
  enums_.reserve(d.num_terms());
  for (const auto& t : d.terms()) enums_.emplace_back(t, n_, &counter());
  for (std::size_t i = 0; i < enums_.size(); ++i) push_frontier(i);
}

void UnionOrderedEnum::push_frontier(std::size_t term) {
  const auto& a = enums_[term].model();
  Word w(a.begin(), a.end());
  auto [node, fresh] = frontier_.insert_at(frontier_.root(), w);
  (void)fresh;
  if (labels_.size() <= node) labels_.resize(node + 1);
  labels_[node].push_back(static_cast<std::uint32_t>(term));
  tick();
}

bool UnionOrderedEnum::next() {
  if (frontier_.empty()) return false;
  Word w = frontier_.min_word(frontier_.root());
  const auto node = frontier_.find(frontier_.root(), w);
  std::vector<std::uint32_t> sources = std::move(labels_[node]);
  labels_[node].clear();
  frontier_.erase(w);
  current_.assign(w.begin(), w.end());
  for (auto t : sources)
    if (enums_[t].advance()) push_frontier(t);
  return true;
}

FlashlightEnum::FlashlightEnum(const Dnf& d, StepCounter* shared)
    : ModelEnumerator(shared),
      d_(d),
      n_(d.num_vars()),
      occ_(2 * d.num_vars()),
      falsified_(d.num_terms(), 0),
      live_(d.num_terms()),
      model_(d.num_vars(), 0),
      stage_(d.num_vars() + 1, 0) {
  for (std::size_t i = 0; i < d.num_terms(); ++i)
    for (auto l : d.term(i)) {
      occ_[l.code()].push_back(static_cast<std::uint32_t>(i));
      tick();
    }
}

void FlashlightEnum::assign(Var x, std::uint8_t b) {
  // x = b falsifies the literal of x with the opposite polarity.
  for (auto t : occ_[Literal(x, b == 0).code()]) {
    tick();
    if (falsified_[t]++ == 0) --live_;
  }
}

void FlashlightEnum::unassign(Var x, std::uint8_t b) {
  for (auto t : occ_[Literal(x, b == 0).code()]) {
    tick();
    if (--falsified_[t] == 0) ++live_;
  }
}

bool FlashlightEnum::counters_consistent() const {
  std::size_t live = 0;
  for (std::size_t i = 0; i < d_.num_terms(); ++i) {
    std::uint32_t f = 0;
    for (auto l : d_.term(i))
      if (l.var() <= depth_ && !l.satisfied_by(model_[l.var() - 1])) ++f;
    if (f != falsified_[i]) return false;
    if (f == 0) ++live;
  }
  return live == live_;
}

bool FlashlightEnum::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (live_ == 0) {
      done_ = true;
      return false;
    }
  }
  for (;;) {
    tick();
    if (depth_ == n_ && stage_[n_] == 0) {
      stage_[n_] = 2;
      return true;
    }
    if (stage_[depth_] < 2) {
      const auto b = stage_[depth_]++;
      const Var x = static_cast<Var>(depth_ + 1);
      assign(x, b);
      if (live_ > 0) {
        model_[depth_] = b;
        ++depth_;
        stage_[depth_] = 0;
      } else {
        unassign(x, b);
      }
      continue;
    }
    if (depth_ == 0) {
      done_ = true;
      return false;
    }
    --depth_;
    unassign(static_cast<Var>(depth_ + 1), model_[depth_]);
  }
}

}  // namespace dnfenum

#include <algorithm>

#include "dnfenum/monotone.hpp"

namespace dnfenum {

// Complement trie: symbols are variables; a word lists the free variables a
// term misses. Fixing x (the smallest variable in any word) to 0 keeps only
// the words that contain x; fixing it to 1 merges the x-subtree, stripped of
// x, with the rest.
struct MonotoneLogEnum::Complement {
  struct Level {
    Var x;
    std::uint8_t stage = 0;
    Trie::NodeId old_root = Trie::kNone;
    Trie::NodeId sub = Trie::kNone;
    bool into_sub = false;
    std::vector<Word> inserted;
  };

  Complement(std::size_t n, StepCounter* steps) : trie(n + 1, ChildRep::SortedList, steps) {}

  Trie trie;
  std::vector<Level> stack;
  bool fresh = true;
};

MonotoneLogEnum::MonotoneLogEnum(const Dnf& d, StepCounter* shared)
    : ModelEnumerator(shared),
      n_(d.num_vars()),
      trie_(d, &counter()),
      model_(d.num_vars(), 0),
      stage_(d.num_vars() + 1, 0),
      tokens_(d.num_vars(), 0) {
  if (!d.is_monotone()) throw InputError("formula has a negative literal");
  if (!trie_.empty() && !trie_.has_empty_term() && should_switch()) {
    stage_[0] = 2;
    enter_complement();
  }
}

MonotoneLogEnum::~MonotoneLogEnum() = default;

std::size_t MonotoneLogEnum::peak_aux_nodes() const { return trie_.peak_nodes() + comp_peak_; }

bool MonotoneLogEnum::should_switch() {
  const std::size_t free = n_ - depth_;
  const Trie& t = trie_.trie();
  // Any root-to-terminal path bounds the shortest term from above.
  std::size_t len = 0;
  for (auto v = t.root(); !t.terminal(v); v = t.child_at(v, 0).second) {
    ++len;
    tick();
  }
  if (!complement_trigger(free, len, trie_.num_terms(), n_)) return false;
  return complement_trigger(free, trie_.min_term_length(), trie_.num_terms(), n_);
}

void MonotoneLogEnum::enter_complement() {
  ++switches_;
  if (!first_switch_) first_switch_ = depth_;
  comp_ = std::make_unique<Complement>(n_, &counter());
  const auto first = static_cast<Var>(depth_ + 1);
  for (const auto& c : complement_words(trie_.words(), first, n_)) {
    tick(c.size() + 1);
    comp_->trie.insert(c);
  }
  for (std::size_t i = depth_; i < n_; ++i) {
    tick();
    model_[i] = 1;
  }
}

bool MonotoneLogEnum::next_complement() {
  auto& c = *comp_;
  Trie& t = c.trie;
  for (;;) {
    tick();
    if (c.fresh) {
      c.fresh = false;
      if (t.num_children(t.root()) == 0) return true;  // only the empty word: all ones
      Complement::Level L;
      L.x = static_cast<Var>(t.child_at(t.root(), 0).first);
      c.stack.push_back(std::move(L));
    }
    if (c.stack.empty()) return false;
    auto& L = c.stack.back();
    const Var x = L.x;
    if (L.stage == 0) {
      L.stage = 1;
      L.old_root = t.root();
      t.set_root(t.child(t.root(), x));
      model_[x - 1] = 0;
      c.fresh = true;
      continue;
    }
    if (L.stage == 1) {
      L.stage = 2;
      t.set_root(L.old_root);
      model_[x - 1] = 1;
      L.sub = t.detach(t.root(), x);
      std::vector<Word> moved;
      if (t.words(L.sub) <= t.size()) {
        t.collect(L.sub, moved);
        L.into_sub = false;
      } else {
        t.collect(t.root(), moved);
        t.set_root(L.sub);
        L.into_sub = true;
      }
      for (auto& w : moved)
        if (t.insert(w)) L.inserted.push_back(std::move(w));
      comp_peak_ = std::max(comp_peak_, t.peak_nodes());
      c.fresh = true;
      continue;
    }
    for (const auto& w : L.inserted) t.erase(w);
    if (L.into_sub) t.set_root(L.old_root);
    t.attach(t.root(), x, L.sub);
    c.stack.pop_back();
  }
}

bool MonotoneLogEnum::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (trie_.empty()) {
      done_ = true;
      return false;
    }
  }
  if (comp_) {
    if (next_complement()) return true;
    comp_.reset();
  }
  if (tail_) {
    for (std::size_t i = n_; i-- > tail_from_;) {
      tick();
      if (model_[i] == 0) {
        model_[i] = 1;
        return true;
      }
      model_[i] = 0;
    }
    tail_ = false;
  }
  for (;;) {
    tick();
    if (depth_ == n_ && stage_[n_] == 0) {
      stage_[n_] = 2;
      return true;
    }
    if (stage_[depth_] == 0 && trie_.has_empty_term()) {
      stage_[depth_] = 2;
      tail_ = true;
      tail_from_ = depth_;
      for (std::size_t i = depth_; i < n_; ++i) {
        tick();
        model_[i] = 0;
      }
      return true;
    }
    if (stage_[depth_] == 0 && depth_ < n_ && should_switch()) {
      stage_[depth_] = 2;
      enter_complement();
      if (next_complement()) return true;
      comp_.reset();
      continue;
    }
    if (stage_[depth_] < 2) {
      const std::uint8_t b = stage_[depth_]++;
      const Var x = static_cast<Var>(depth_ + 1);
      const auto split = trie_.split(x);
      const std::size_t kept = b == 0 ? split.with_neg : split.with_pos;
      if (kept + split.without == 0) continue;
      tokens_[depth_] = split.without < kept ? trie_.set_variable_fast(x, b)
                                             : trie_.set_variable(x, b);
      model_[depth_] = b;
      ++depth_;
      stage_[depth_] = 0;
      continue;
    }
    if (depth_ == 0) {
      done_ = true;
      return false;
    }
    --depth_;
    trie_.undo(tokens_[depth_]);
  }
}

}  // namespace dnfenum

#include "dnfenum/avg.hpp"

namespace dnfenum {

double min_models_bound(double m) { return m <= 0 ? 0.0 : std::pow(m, kGamma); }

AvgFlashlightEnum::AvgFlashlightEnum(const Dnf& d, AvgMode mode, StepCounter* shared)
    : ModelEnumerator(shared),
      n_(d.num_vars()),
      mode_(mode),
      trie_(d, &counter()),
      model_(d.num_vars(), 0),
      stage_(d.num_vars() + 1, 0),
      tokens_(d.num_vars(), 0) {}

bool AvgFlashlightEnum::emit() {
  changed_from_ = min_changed_;
  min_changed_ = n_;
  return true;
}

void AvgFlashlightEnum::enter_node() {
  if (hook_) hook_(trie_, std::span<const std::uint8_t>(model_.data(), depth_));
}

bool AvgFlashlightEnum::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (trie_.empty()) {
      done_ = true;
      return false;
    }
    enter_node();
  }
  if (tail_) {
    // Binary increment over positions [tail_from_, n).
    for (std::size_t i = n_; i-- > tail_from_;) {
      tick();
      touch(i);
      if (model_[i] == 0) {
        model_[i] = 1;
        return emit();
      }
      model_[i] = 0;
    }
    tail_ = false;
  }
  for (;;) {
    tick();
    if (depth_ == n_ && stage_[n_] == 0) {
      stage_[n_] = 2;
      return emit();
    }
    if (stage_[depth_] == 0 && trie_.has_empty_term()) {
      // D[tau] is a tautology over the remaining variables.
      stage_[depth_] = 2;
      tail_ = true;
      tail_from_ = depth_;
      for (std::size_t i = depth_; i < n_; ++i) {
        model_[i] = 0;
        touch(i);
        tick();
      }
      return emit();
    }
    if (stage_[depth_] < 2) {
      const std::uint8_t b = stage_[depth_]++;
      const Var x = static_cast<Var>(depth_ + 1);
      const auto split = trie_.split(x);
      const std::size_t kept = b == 0 ? split.with_neg : split.with_pos;
      if (kept + split.without == 0) continue;
      const std::size_t parent = trie_.num_terms();
      bool fast = false;
      TermTrie::Token tok;
      if (mode_ == AvgMode::kSmallIntoLarge && split.without < kept) {
        tok = trie_.set_variable_fast(x, b);
        fast = true;
      } else {
        tok = trie_.set_variable(x, b);
      }
      if (record_) branches_.push_back({depth_, b, fast, parent, trie_.inserted_count(tok)});
      tokens_[depth_] = tok;
      model_[depth_] = b;
      touch(depth_);
      ++depth_;
      stage_[depth_] = 0;
      enter_node();
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

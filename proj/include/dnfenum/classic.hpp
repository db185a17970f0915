#pragma once

#include <memory>
#include <vector>

#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"
#include "dnfenum/graycode.hpp"
#include "dnfenum/trie.hpp"

namespace dnfenum {

/// Union of the terms' Gray enumerations with a priority rule: a model is
/// output only by the largest-index term it satisfies. Delay O(m * |D|).
class UnionPriorityEnum final : public ModelEnumerator {
 public:
  explicit UnionPriorityEnum(const Dnf& d, StepCounter* shared = nullptr);
  bool next() override;
  const Assignment& model() const override;

 private:
  bool covered_after(std::size_t i, const Assignment& a);

  Dnf d_;
  std::vector<std::unique_ptr<TermModelEnum>> enums_;
  std::vector<bool> live_;
  std::size_t live_count_;
  std::size_t cursor_ = 0;
  std::size_t current_ = 0;
  Assignment empty_;
};

/// Models of one term in lexicographic order (x_1 most significant).
class LexTermEnum {
 public:
  LexTermEnum(const Term& c, std::size_t n, StepCounter* steps);
  const Assignment& model() const { return regs_; }
  /// Moves to the next model; false when none is left.
  bool advance();

 private:
  Assignment regs_;
  std::vector<Var> free_;
  StepCounter* steps_;
};

/// Merge of the terms' lexicographic streams through a trie holding every
/// live term's next model. Outputs sat(D) in ascending order, delay O(m * n).
class UnionOrderedEnum final : public ModelEnumerator {
 public:
  explicit UnionOrderedEnum(const Dnf& d, StepCounter* shared = nullptr);
  bool next() override;
  const Assignment& model() const override { return current_; }
  std::size_t peak_aux_nodes() const override { return frontier_.peak_nodes(); }

 private:
  void push_frontier(std::size_t term);

  std::size_t n_;
  std::vector<LexTermEnum> enums_;
  Trie frontier_;
  std::vector<std::vector<std::uint32_t>> labels_;
  Assignment current_;
};

/// Depth-first search over prefix assignments with per-term falsified
/// counters. Outputs sat(D) in ascending order with delay O(|D|).
class FlashlightEnum final : public ModelEnumerator {
 public:
  explicit FlashlightEnum(const Dnf& d, StepCounter* shared = nullptr);
  bool next() override;
  const Assignment& model() const override { return model_; }

  std::size_t live_terms() const { return live_; }
  const std::vector<std::uint32_t>& falsified_counts() const { return falsified_; }
  /// Recomputes every counter from the current prefix; true if they match.
  bool counters_consistent() const;

 private:
  void assign(Var x, std::uint8_t b);
  void unassign(Var x, std::uint8_t b);

  Dnf d_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> occ_;  // literal code -> term indices
  std::vector<std::uint32_t> falsified_;
  std::size_t live_;
  Assignment model_;
  std::vector<std::uint8_t> stage_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace dnfenum

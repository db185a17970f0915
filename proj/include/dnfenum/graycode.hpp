#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"

namespace dnfenum {

/// Loopless binary reflected Gray code over k positions (focus pointers).
/// The flip sequence is the ruler sequence 1,2,1,3,1,2,1,... and every step
/// costs O(1) in the worst case.
class GrayState {
 public:
  explicit GrayState(std::size_t k);

  std::size_t width() const { return k_; }
  /// Next position to flip, 1-based, or nullopt once all 2^k patterns have
  /// been visited (after 2^k - 1 flips).
  std::optional<std::size_t> next();
  bool exhausted() const { return done_; }

 private:
  std::size_t k_;
  std::vector<std::size_t> focus_;
  bool done_;
};

/// Models of a single term over x_1..x_n in Gray order. The first model is
/// the term's satisfying assignment with every free variable at 0; each later
/// model flips exactly one free variable.
class TermModelEnum final : public ModelEnumerator {
 public:
  TermModelEnum(const Term& c, std::size_t n, StepCounter* shared = nullptr);
  /// Enumerates over an existing register file: variables where `fixed` is
  /// assigned keep their value, the term's variables get its literal values,
  /// every other variable is free. `registers` must outlive the enumerator.
  TermModelEnum(const Term& c, const PartialAssignment& fixed, Assignment& registers,
                StepCounter* shared = nullptr);

  bool next() override;
  const Assignment& model() const override { return *regs_; }

  /// Variable flipped by the last next() (0 for the first model).
  Var last_flip() const { return last_flip_; }
  std::size_t free_count() const { return sigma_.size(); }

 private:
  void init(const Term& c, const PartialAssignment* fixed);

  Assignment own_regs_;
  Assignment* regs_;
  std::vector<Var> sigma_;
  GrayState gray_;
  bool started_ = false;
  Var last_flip_ = 0;
};

}  // namespace dnfenum

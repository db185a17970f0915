#pragma once

#include <cstdint>
#include <cstddef>

#include "dnfenum/core.hpp"

namespace dnfenum {

/// Deterministic proxy for RAM steps. Incremented at trie node visits,
/// counter updates, register writes, Gray flips and literal comparisons.
struct StepCounter {
  std::uint64_t count = 0;
  void tick(std::uint64_t k = 1) { count += k; }
};

/// Pull-style enumerator: every successful next() exposes one new model.
/// Instances are single-owner and not copyable.
class ModelEnumerator {
 public:
  explicit ModelEnumerator(StepCounter* shared = nullptr)
      : counter_(shared ? shared : &own_) {}
  virtual ~ModelEnumerator() = default;
  ModelEnumerator(const ModelEnumerator&) = delete;
  ModelEnumerator& operator=(const ModelEnumerator&) = delete;

  /// Advances to the next model. Returns false once exhausted, and keeps
  /// returning false afterwards.
  virtual bool next() = 0;
  /// The model produced by the last successful next().
  virtual const Assignment& model() const = 0;
  /// Peak count of auxiliary structure nodes (tries, frames, search nodes).
  virtual std::size_t peak_aux_nodes() const { return 0; }

  StepCounter& counter() { return *counter_; }
  const StepCounter& counter() const { return *counter_; }
  std::uint64_t steps() const { return counter_->count; }

 protected:
  void tick(std::uint64_t k = 1) { counter_->tick(k); }

 private:
  StepCounter own_;
  StepCounter* counter_;
};

}  // namespace dnfenum

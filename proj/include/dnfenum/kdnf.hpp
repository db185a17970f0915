#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dnfenum/avg.hpp"
#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"
#include "dnfenum/graycode.hpp"
#include "dnfenum/trie.hpp"

namespace dnfenum {

inline constexpr double kDefaultLambda = 3.55301;

struct KdnfConfig {
  std::size_t k = 1;
  /// Output budget d = ceil(k^{3/2} 2^{2k}).
  std::uint64_t budget = 1;
  /// Steps per (k^2 * term) of cofactor construction.
  std::uint64_t step_constant = 1;
  /// Hybrid cutoff: below lambda * k live variables the subformula is handed
  /// to the trie flashlight.
  double lambda = kDefaultLambda;
  bool record_frames = false;

  static KdnfConfig for_width(std::size_t k);
  std::uint64_t steps_per_output() const { return budget * step_constant; }
};

std::uint64_t output_budget(std::size_t k);
/// Measured constant A: max over a fixed sample of (cofactor construction
/// steps) / (k^2 * M), rounded up. Computed once and cached.
std::uint64_t calibrated_step_constant();

struct TermPartition {
  PartialAssignment one;                 // the unique satisfying assignment of the term
  std::vector<PartialAssignment> zeros;  // one per variable of the term, ascending
};
/// 1_T and the assignments 0_T^y that, together, partition all assignments.
TermPartition partition_assignments(const Term& t, std::size_t n);

/// A term of minimum width, ties broken by canonical literal order.
Term choose_min_term(const Dnf& d);

/// True when 2^{N-k'} * d >= k'^2 * M, the condition under which the Gray
/// phase of a frame pays for building its cofactors.
bool budget_suffices(std::uint64_t budget, std::size_t live_vars, std::size_t min_width,
                     std::size_t terms);

/// Incrementally builds the trie of D[0_C^y] from the trie of D.
class CofactorBuilder {
 public:
  CofactorBuilder(const Trie& src, PartialAssignment assignment, StepCounter* steps);

  /// Works until `budget` steps are consumed or construction ends. Returns the
  /// steps used.
  std::uint64_t run(std::uint64_t budget);
  bool done() const { return done_; }
  std::unique_ptr<Trie> take() { return std::move(out_); }
  const Word& min_word() const { return min_word_; }
  std::size_t live_vars() const { return live_vars_; }

 private:
  void step();

  struct Entry {
    Trie::NodeId node;
    std::size_t next;
    bool appended;
  };
  const Trie* src_;
  PartialAssignment assignment_;
  StepCounter* steps_;
  std::unique_ptr<Trie> out_;
  std::vector<Entry> stack_;
  Word buf_;
  Word min_word_;
  bool have_min_ = false;
  std::vector<std::uint8_t> seen_;
  std::size_t live_vars_ = 0;
  bool done_ = false;
};

struct FrameInfo {
  enum class Kind { kTerm, kSplit, kAvg };
  std::int64_t parent;
  PartialAssignment tau;
  Term chosen;
  Kind kind;
};

/// Constant-delay k-DNF enumeration: each frame enumerates the models
/// extending its minimum term in Gray order while spending at most d*A steps
/// per output building the cofactors D[0_C^y]; the cofactors are then
/// processed as child frames. With `hybrid`, frames with fewer than
/// lambda*k live variables run the trie flashlight instead.
class KdnfEnum final : public ModelEnumerator {
 public:
  KdnfEnum(const Dnf& d, KdnfConfig cfg, bool hybrid = false, StepCounter* shared = nullptr);
  ~KdnfEnum() override;

  bool next() override;
  const Assignment& model() const override { return model_; }
  std::size_t peak_aux_nodes() const override { return peak_nodes_; }

  const KdnfConfig& config() const { return cfg_; }
  /// Frames whose budget condition failed (should stay 0).
  std::size_t guard_failures() const { return guard_failures_; }
  /// Frames whose Gray phase ended before their cofactors were complete.
  std::size_t overruns() const { return overruns_; }
  std::size_t max_depth() const { return max_depth_; }
  /// Frame that produced the latest model (needs record_frames).
  std::int64_t current_frame() const { return current_frame_; }
  const std::vector<FrameInfo>& frames() const { return frames_; }

 private:
  struct Frame;
  void push_frame(std::unique_ptr<Trie> trie, PartialAssignment tau, const Word& min_word,
                  std::size_t live_vars, std::int64_t parent);
  void precompute(Frame& f, std::uint64_t budget);

  Dnf d_;
  KdnfConfig cfg_;
  bool hybrid_;
  std::size_t n_;
  Assignment model_;
  std::vector<std::unique_ptr<Frame>> stack_;
  std::size_t guard_failures_ = 0;
  std::size_t overruns_ = 0;
  std::size_t max_depth_ = 0;
  std::size_t peak_nodes_ = 0;
  std::int64_t current_frame_ = -1;
  std::int64_t frame_counter_ = 0;
  std::vector<FrameInfo> frames_;
};

}  // namespace dnfenum

#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"
#include "dnfenum/trie.hpp"

namespace dnfenum {

/// Exponent of the model-count lower bound: 3^gamma = 2.
inline const double kGamma = std::log(2.0) / std::log(3.0);

/// A DNF with m non-empty distinct terms has at least m^gamma models.
double min_models_bound(double m);

enum class AvgMode {
  kReinsert,        // both children rebuilt by re-inserting the satisfied-literal subtree
  kSmallIntoLarge,  // per child, insert the smaller of the two parts into the larger
};

struct BranchRecord {
  std::size_t depth;
  std::uint8_t value;
  bool fast;
  std::size_t parent_terms;
  std::size_t inserted;
};

/// Prefix-ordered flashlight search maintaining D[tau] in a term trie with
/// undo. Outputs sat(D) in ascending order. Once D[tau] contains the empty
/// term, the remaining variables are enumerated by a binary counter.
class AvgFlashlightEnum final : public ModelEnumerator {
 public:
  using NodeHook = std::function<void(const TermTrie&, std::span<const std::uint8_t> prefix)>;

  AvgFlashlightEnum(const Dnf& d, AvgMode mode, StepCounter* shared = nullptr);

  bool next() override;
  const Assignment& model() const override { return model_; }
  std::size_t peak_aux_nodes() const override { return trie_.peak_nodes(); }

  /// Called on entering every search node, before the node is expanded.
  void set_node_hook(NodeHook hook) { hook_ = std::move(hook); }
  void record_branches(bool on) { record_ = on; }
  const std::vector<BranchRecord>& branches() const { return branches_; }
  const TermTrie& trie() const { return trie_; }
  /// Smallest position that changed between the two latest models.
  std::size_t changed_from() const { return changed_from_; }

 private:
  void touch(std::size_t pos) { min_changed_ = std::min(min_changed_, pos); }
  bool emit();
  void enter_node();

  std::size_t n_;
  AvgMode mode_;
  TermTrie trie_;
  Assignment model_;
  std::vector<std::uint8_t> stage_;
  std::vector<TermTrie::Token> tokens_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool tail_ = false;
  std::size_t tail_from_ = 0;
  std::size_t min_changed_ = 0;
  std::size_t changed_from_ = 0;
  NodeHook hook_;
  bool record_ = false;
  std::vector<BranchRecord> branches_;
};

}  // namespace dnfenum

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dnfenum/avg.hpp"
#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"
#include "dnfenum/trie.hpp"

namespace dnfenum {

struct UnateForm {
  Dnf monotone;
  /// mask[v-1] == 1 when x_v was flipped to make it positive.
  Assignment mask;
};

/// Flips every variable that occurs only negatively. Throws InputError if a
/// variable occurs with both signs.
UnateForm normalize_unate(const Dnf& d);

/// Drops every term that is a superset of another term; the result lists
/// terms in canonical (word) order. Throws InputError on a negative literal.
Dnf minimize_monotone(const Dnf& d);

/// Reverse search over the models of a minimized monotone DNF. For each term
/// T_i, its fresh models (not satisfying T_1..T_{i-1}) form a subtree of the
/// tree of subsets S of the variables outside T_i, with parent S minus its
/// largest element. A model trie answers the freshness probes.
class MonotoneRsEnum final : public ModelEnumerator {
 public:
  explicit MonotoneRsEnum(const Dnf& d, StepCounter* shared = nullptr);

  bool next() override;
  const Assignment& model() const override { return model_; }
  std::size_t peak_aux_nodes() const override { return peak_nodes_; }

  const Dnf& terms() const { return d_; }
  const Trie& model_trie() const { return seen_; }
  /// Successor probes rejected because the model was already output.
  std::size_t discarded() const { return discarded_; }
  /// Models rejected by the latest successor probe, for soundness checks.
  void record_discards(bool on) { record_discards_ = on; }
  const std::vector<Assignment>& discarded_models() const { return discarded_models_; }

 private:
  static constexpr std::uint32_t kNull = 0xffffffffu;
  struct Node {
    std::uint32_t parent;
    std::int32_t y;  // index into free_, -1 for the root
    std::uint32_t next;
  };

  void start_term();
  void load(std::uint32_t v);
  bool probe(Var x);

  Dnf d_;
  std::size_t n_;
  Trie seen_;
  Assignment model_;
  Word buf_;
  std::size_t term_ = 0;
  bool started_ = false;
  std::vector<Var> free_;
  std::vector<Node> arena_;
  std::uint32_t cur_ = kNull;
  std::size_t peak_nodes_ = 0;
  std::size_t discarded_ = 0;
  bool record_discards_ = false;
  std::vector<Assignment> discarded_models_;
};

/// Average-delay flashlight for monotone DNF that switches a subtree to the
/// complement encoding (each term stored as the free variables it misses)
/// once every live term has more than n_tau - t variables, where
/// t = log2|D[tau]| + 2 log2 n.
class MonotoneLogEnum final : public ModelEnumerator {
 public:
  explicit MonotoneLogEnum(const Dnf& d, StepCounter* shared = nullptr);
  ~MonotoneLogEnum() override;

  bool next() override;
  const Assignment& model() const override { return model_; }
  std::size_t peak_aux_nodes() const override;

  /// Number of times a subtree switched to the complement encoding.
  std::size_t switches() const { return switches_; }
  /// Depth (number of fixed variables) of the first switch, if any.
  std::optional<std::size_t> first_switch_depth() const { return first_switch_; }

 private:
  struct Complement;
  bool should_switch();
  void enter_complement();
  bool next_complement();

  std::size_t n_;
  TermTrie trie_;
  Assignment model_;
  std::vector<std::uint8_t> stage_;
  std::vector<TermTrie::Token> tokens_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool tail_ = false;
  std::size_t tail_from_ = 0;
  std::unique_ptr<Complement> comp_;
  std::size_t switches_ = 0;
  std::optional<std::size_t> first_switch_;
  std::size_t comp_peak_ = 0;
};

/// True when every word has more than `free_vars - t` symbols with
/// t = log2(terms) + 2 log2(n); `min_len` is the shortest word length.
bool complement_trigger(std::size_t free_vars, std::size_t min_len, std::size_t terms,
                        std::size_t n);

/// Complement words of the terms of `d` over the variables first..n.
std::vector<Word> complement_words(const std::vector<Word>& term_words, Var first, std::size_t n);
/// Inverse of complement_words.
std::vector<Word> term_words_of_complements(const std::vector<Word>& comp, Var first, std::size_t n);

/// Maps a monotone enumerator's output back through a unate sign mask.
class UnateEnum final : public ModelEnumerator {
 public:
  UnateEnum(std::unique_ptr<ModelEnumerator> inner, Assignment mask);

  bool next() override;
  const Assignment& model() const override { return model_; }
  std::size_t peak_aux_nodes() const override { return inner_->peak_aux_nodes(); }

 private:
  std::unique_ptr<ModelEnumerator> inner_;
  Assignment mask_;
  Assignment model_;
  std::vector<Var> flipped_;
};

}  // namespace dnfenum

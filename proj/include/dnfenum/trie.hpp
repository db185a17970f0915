#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"

namespace dnfenum {

enum class ChildRep { SortedList, Array };

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Set of words over the alphabet [0, alphabet). Nodes live in a pool and are
/// addressed by id; every node keeps the number of words stored below it.
///
/// With ChildRep::Array each node owns a slot array indexed by symbol. Slots
/// are never cleared: a slot is trusted only if it points at a child edge
/// carrying the same symbol (back-pointer validation), so recycled or
/// freshly grown slot memory may hold anything.
class Trie {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNone = 0xffffffffu;

  Trie(std::size_t alphabet, ChildRep rep, StepCounter* steps = nullptr);

  std::size_t alphabet() const { return alphabet_; }
  ChildRep rep() const { return rep_; }

  NodeId root() const { return root_; }
  void set_root(NodeId r) { root_ = r; }

  /// Words below the current root.
  std::size_t size() const { return nodes_[root_].words; }
  bool empty() const { return size() == 0; }

  bool insert(std::span<const Symbol> w) { return insert_at(root_, w).second; }
  bool contains(std::span<const Symbol> w) const { return find(root_, w) != kNone; }
  bool erase(std::span<const Symbol> w) { return erase_at(root_, w); }

  /// Inserts below `from`. Returns the terminal node and whether it is new.
  std::pair<NodeId, bool> insert_at(NodeId from, std::span<const Symbol> w);
  /// Terminal node of `w` below `from`, or kNone.
  NodeId find(NodeId from, std::span<const Symbol> w) const;
  /// Removes `w` below `from`, pruning emptied nodes strictly below `from`.
  bool erase_at(NodeId from, std::span<const Symbol> w);

  NodeId child(NodeId parent, Symbol s) const;
  /// Unlinks the child edge `s` of `parent` and returns the child (or kNone).
  /// The subtree stays allocated and can be re-attached.
  NodeId detach(NodeId parent, Symbol s);
  void attach(NodeId parent, Symbol s, NodeId child);

  std::size_t words(NodeId v) const { return nodes_[v].words; }
  bool terminal(NodeId v) const { return nodes_[v].terminal; }
  Symbol label(NodeId v) const { return nodes_[v].sym; }
  std::size_t num_children(NodeId v) const { return nodes_[v].kids.size(); }
  /// i-th child edge of `v` (unordered for ChildRep::Array).
  std::pair<Symbol, NodeId> child_at(NodeId v, std::size_t i) const {
    const auto& e = nodes_[v].kids[i];
    return {e.sym, e.child};
  }

  template <typename F>
  void for_each_child(NodeId v, F&& f) const {
    for (const auto& e : nodes_[v].kids) f(e.sym, e.child);
  }

  /// Appends every word below `from` (relative to it, after `prefix`) to `out`.
  void collect(NodeId from, std::vector<Word>& out, Word prefix = {}) const;
  std::vector<Word> words() const {
    std::vector<Word> out;
    collect(root_, out);
    return out;
  }
  /// Smallest word below `from` in symbol order (leftmost path).
  Word min_word(NodeId from) const;

  std::size_t live_nodes() const { return nodes_.size() - free_.size(); }
  std::size_t peak_nodes() const { return peak_nodes_; }

  void set_counter(StepCounter* steps) { steps_ = steps; }

 private:
  struct Edge {
    Symbol sym;
    NodeId child;
  };
  struct Node {
    std::vector<Edge> kids;
    std::uint32_t words = 0;
    Symbol sym = 0;
    bool terminal = false;
    std::size_t slot_base = 0;
  };

  NodeId new_node(Symbol sym);
  void free_node(NodeId v);
  void link(NodeId parent, Symbol s, NodeId child);
  void unlink(NodeId parent, Symbol s);
  void tick(std::uint64_t k = 1) const {
    if (steps_) steps_->tick(k);
  }
  void check_symbol(Symbol s) const;

  std::size_t alphabet_;
  ChildRep rep_;
  StepCounter* steps_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> slots_;
  std::vector<NodeId> free_;
  NodeId root_ = 0;
  std::size_t peak_nodes_ = 1;
};

inline Symbol symbol_of(Literal l) { return l.code(); }
inline Literal literal_of(Symbol s) { return Literal::from_code(s); }
Word word_of(const Term& t);
Term term_of(std::span<const Symbol> w);

/// The working representation of D[tau] during prefix-ordered tree search:
/// a trie of canonical literal words with an undo stack. Variables must be
/// fixed in order first_var, first_var+1, ...; terms of every fixed variable
/// are gone from the trie, so a branching variable's literals sit directly
/// under the root.
class TermTrie {
 public:
  struct Split {
    std::size_t with_pos = 0;  // |D_x|
    std::size_t with_neg = 0;  // |D_not x|
    std::size_t without = 0;   // |D_nox|, including the empty term
  };
  using Token = std::size_t;

  explicit TermTrie(const Dnf& d, StepCounter* steps = nullptr, Var first_var = 1);

  std::size_t num_vars() const { return n_; }
  std::size_t num_terms() const { return trie_.size(); }
  bool empty() const { return trie_.empty(); }
  bool has_empty_term() const { return trie_.terminal(trie_.root()); }
  /// Next variable to fix.
  Var branch_var() const { return first_var_ + static_cast<Var>(log_.size()); }

  Split split(Var x) const;

  /// Slow construction: drops the falsified-literal subtree and re-inserts
  /// the satisfied-literal subtree without its first symbol.
  Token set_variable(Var x, std::uint8_t b);
  /// Fast construction: the satisfied-literal subtree becomes the root and the
  /// terms without x are inserted into it.
  Token set_variable_fast(Var x, std::uint8_t b = 1);
  /// Reverts the most recent edit. Throws std::logic_error if `t` is not it.
  void undo(Token t);

  /// Number of words inserted by the edit `t` (its construction cost driver).
  std::size_t inserted_count(Token t) const { return log_.at(t).inserted.size(); }

  Dnf decode() const;
  std::vector<Word> words() const { return trie_.words(); }
  std::size_t min_term_length() const;
  const Trie& trie() const { return trie_; }
  std::size_t peak_nodes() const { return trie_.peak_nodes(); }

 private:
  struct Edit {
    Trie::NodeId old_root = Trie::kNone;
    Trie::NodeId detached_false = Trie::kNone;
    Trie::NodeId detached_true = Trie::kNone;
    Symbol false_sym = 0;
    Symbol true_sym = 0;
    bool fast = false;
    std::vector<Word> inserted;
  };
  void check_branch(Var x) const;

  std::size_t n_;
  Var first_var_;
  Trie trie_;
  std::vector<Edit> log_;
  StepCounter* steps_;
};

}  // namespace dnfenum

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dnfenum/core.hpp"
#include "dnfenum/enumerator.hpp"
#include "dnfenum/trie.hpp"

namespace dnfenum {

using Element = std::uint32_t;

/// m distinct subsets of {1..n}, each kept as an ascending element list.
class SetFamily {
 public:
  SetFamily(std::size_t n, std::vector<std::vector<Element>> sets);

  std::size_t ground_size() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<std::vector<Element>>& sets() const { return sets_; }
  const std::vector<Element>& set(std::size_t i) const { return sets_[i]; }
  bool has_empty_set() const;

  /// The family as a monotone DNF: set s becomes the term of its elements.
  Dnf as_dnf() const;

 private:
  std::size_t n_;
  std::vector<std::vector<Element>> sets_;
};

SetFamily parse_sets(std::istream& in);
SetFamily parse_sets_string(const std::string& text);
std::string serialize_sets(const SetFamily& f);

/// Characteristic vector of a subset of {1..n}.
Assignment characteristic(const std::vector<Element>& s, std::size_t n);

/// True iff the union of some non-empty subfamily agrees with `prefix` on
/// elements 1..prefix.size().
bool extendable_union(const SetFamily& f, const std::vector<std::uint8_t>& prefix);

/// All distinct unions of non-empty subfamilies, ascending. Needs m <= 24.
std::vector<Assignment> brute_force_unions(const SetFamily& f);

/// Flashlight over elements 1..n. The live sets (those avoiding every element
/// fixed to 0), stripped of fixed elements, sit in a term trie edited like a
/// monotone DNF. Counters of zeros per set and of live sets covering each
/// element fixed to 1 decide whether a prefix still extends to a union.
class UnionEnum final : public ModelEnumerator {
 public:
  explicit UnionEnum(const SetFamily& f, StepCounter* shared = nullptr);

  bool next() override;
  const Assignment& model() const override { return model_; }
  std::size_t peak_aux_nodes() const override { return trie_.peak_nodes(); }

 private:
  bool assign(std::size_t e, std::uint8_t b);
  void unassign(std::size_t e, std::uint8_t b);

  SetFamily f_;
  std::size_t n_;
  TermTrie trie_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::uint32_t> zeros_;
  std::vector<std::uint32_t> cover_;
  std::size_t live_;
  std::size_t uncovered_ = 0;
  Assignment model_;
  std::vector<std::uint8_t> stage_;
  std::vector<TermTrie::Token> tokens_;
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace dnfenum

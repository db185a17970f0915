#include "dnfenum/trie.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dnfenum {

Trie::Trie(std::size_t alphabet, ChildRep rep, StepCounter* steps)
    : alphabet_(alphabet), rep_(rep), steps_(steps) {
  if (alphabet_ == 0) throw std::invalid_argument("trie alphabet must be non-empty");
  root_ = new_node(0);
}

void Trie::check_symbol(Symbol s) const {
  if (s >= alphabet_)
    throw std::out_of_range("symbol " + std::to_string(s) + " outside alphabet of size " +
                            std::to_string(alphabet_));
}

Trie::NodeId Trie::new_node(Symbol sym) {
  NodeId id;
  if (!free_.empty()) {
    id = free_.back();
    free_.pop_back();
  } else {
    id = static_cast<NodeId>(nodes_.size());
    Node node;
    if (rep_ == ChildRep::Array) {
      node.slot_base = slots_.size();
      slots_.resize(slots_.size() + alphabet_);
    }
    nodes_.push_back(std::move(node));
  }
  Node& node = nodes_[id];
  node.sym = sym;
  node.words = 0;
  node.terminal = false;
  node.kids.clear();
  peak_nodes_ = std::max(peak_nodes_, live_nodes());
  return id;
}

void Trie::free_node(NodeId v) {
  nodes_[v].kids.clear();
  nodes_[v].terminal = false;
  nodes_[v].words = 0;
  free_.push_back(v);
}

Trie::NodeId Trie::child(NodeId parent, Symbol s) const {
  const Node& p = nodes_[parent];
  tick();
  if (rep_ == ChildRep::Array) {
    std::uint32_t idx = slots_[p.slot_base + s];
    if (idx < p.kids.size() && p.kids[idx].sym == s) return p.kids[idx].child;
    return kNone;
  }
  for (const auto& e : p.kids) {
    tick();
    if (e.sym == s) return e.child;
    if (e.sym > s) break;
  }
  return kNone;
}

void Trie::link(NodeId parent, Symbol s, NodeId c) {
  Node& p = nodes_[parent];
  if (rep_ == ChildRep::Array) {
    slots_[p.slot_base + s] = static_cast<std::uint32_t>(p.kids.size());
    p.kids.push_back({s, c});
    return;
  }
  auto it = p.kids.begin();
  while (it != p.kids.end() && it->sym < s) {
    tick();
    ++it;
  }
  p.kids.insert(it, {s, c});
}

void Trie::unlink(NodeId parent, Symbol s) {
  Node& p = nodes_[parent];
  if (rep_ == ChildRep::Array) {
    std::uint32_t idx = slots_[p.slot_base + s];
    const Edge last = p.kids.back();
    p.kids[idx] = last;
    slots_[p.slot_base + last.sym] = idx;
    p.kids.pop_back();
    return;
  }
  for (auto it = p.kids.begin(); it != p.kids.end(); ++it) {
    tick();
    if (it->sym == s) {
      p.kids.erase(it);
      return;
    }
  }
}

std::pair<Trie::NodeId, bool> Trie::insert_at(NodeId from, std::span<const Symbol> w) {
  thread_local std::vector<NodeId> path;
  path.clear();
  path.push_back(from);
  NodeId v = from;
  for (Symbol s : w) {
    check_symbol(s);
    NodeId c = child(v, s);
    if (c == kNone) {
      c = new_node(s);
      link(v, s, c);
    }
    v = c;
    path.push_back(v);
  }
  if (nodes_[v].terminal) return {v, false};
  nodes_[v].terminal = true;
  for (NodeId u : path) {
    ++nodes_[u].words;
    tick();
  }
  return {v, true};
}

Trie::NodeId Trie::find(NodeId from, std::span<const Symbol> w) const {
  NodeId v = from;
  for (Symbol s : w) {
    check_symbol(s);
    v = child(v, s);
    if (v == kNone) return kNone;
  }
  return nodes_[v].terminal ? v : kNone;
}

bool Trie::erase_at(NodeId from, std::span<const Symbol> w) {
  thread_local std::vector<NodeId> path;
  path.clear();
  path.push_back(from);
  NodeId v = from;
  for (Symbol s : w) {
    check_symbol(s);
    v = child(v, s);
    if (v == kNone) return false;
    path.push_back(v);
  }
  if (!nodes_[v].terminal) return false;
  nodes_[v].terminal = false;
  for (NodeId u : path) {
    --nodes_[u].words;
    tick();
  }
  for (std::size_t i = path.size() - 1; i > 0; --i) {
    NodeId u = path[i];
    if (nodes_[u].words != 0) break;
    unlink(path[i - 1], nodes_[u].sym);
    free_node(u);
  }
  return true;
}

Trie::NodeId Trie::detach(NodeId parent, Symbol s) {
  NodeId c = child(parent, s);
  if (c == kNone) return kNone;
  unlink(parent, s);
  nodes_[parent].words -= nodes_[c].words;
  tick();
  return c;
}

void Trie::attach(NodeId parent, Symbol s, NodeId c) {
  if (c == kNone) return;
  link(parent, s, c);
  nodes_[parent].words += nodes_[c].words;
  tick();
}

void Trie::collect(NodeId from, std::vector<Word>& out, Word prefix) const {
  Word buf = std::move(prefix);
  auto rec = [&](auto& self, NodeId v) -> void {
    tick();
    const Node& node = nodes_[v];
    if (node.terminal) out.push_back(buf);
    for (const auto& e : node.kids) {
      buf.push_back(e.sym);
      self(self, e.child);
      buf.pop_back();
    }
  };
  rec(rec, from);
}

Word Trie::min_word(NodeId from) const {
  Word w;
  NodeId v = from;
  while (!nodes_[v].terminal && !nodes_[v].kids.empty()) {
    tick();
    const auto& kids = nodes_[v].kids;
    auto best = kids.begin();
    if (rep_ == ChildRep::Array) {
      for (auto it = kids.begin(); it != kids.end(); ++it) {
        tick();
        if (it->sym < best->sym) best = it;
      }
    }
    w.push_back(best->sym);
    v = best->child;
  }
  return w;
}

Word word_of(const Term& t) {
  Word w;
  w.reserve(t.size());
  for (auto l : t) w.push_back(symbol_of(l));
  return w;
}

Term term_of(std::span<const Symbol> w) {
  Term t;
  t.reserve(w.size());
  for (auto s : w) t.push_back(literal_of(s));
  return t;
}

TermTrie::TermTrie(const Dnf& d, StepCounter* steps, Var first_var)
    : n_(d.num_vars()),
      first_var_(first_var),
      trie_(std::max<std::size_t>(2 * d.num_vars(), 1), ChildRep::Array, steps),
      steps_(steps) {
  for (const auto& t : d.terms()) trie_.insert(word_of(t));
}

void TermTrie::check_branch(Var x) const {
  if (x != branch_var())
    throw std::logic_error("variable x" + std::to_string(x) + " is not the branching variable x" +
                           std::to_string(branch_var()));
}

TermTrie::Split TermTrie::split(Var x) const {
  Split s;
  const auto root = trie_.root();
  auto pos = trie_.child(root, Literal(x, true).code());
  auto neg = trie_.child(root, Literal(x, false).code());
  s.with_pos = pos == Trie::kNone ? 0 : trie_.words(pos);
  s.with_neg = neg == Trie::kNone ? 0 : trie_.words(neg);
  s.without = trie_.size() - s.with_pos - s.with_neg;
  return s;
}

TermTrie::Token TermTrie::set_variable(Var x, std::uint8_t b) {
  check_branch(x);
  Edit e;
  e.old_root = trie_.root();
  e.true_sym = Literal(x, b != 0).code();
  e.false_sym = e.true_sym ^ 1u;
  e.detached_false = trie_.detach(e.old_root, e.false_sym);
  e.detached_true = trie_.detach(e.old_root, e.true_sym);
  if (e.detached_true != Trie::kNone) {
    std::vector<Word> ws;
    trie_.collect(e.detached_true, ws);
    for (auto& w : ws)
      if (trie_.insert(w)) e.inserted.push_back(std::move(w));
  }
  log_.push_back(std::move(e));
  return log_.size() - 1;
}

TermTrie::Token TermTrie::set_variable_fast(Var x, std::uint8_t b) {
  check_branch(x);
  const auto root = trie_.root();
  const Symbol sat = Literal(x, b != 0).code();
  const Symbol fal = sat ^ 1u;
  const auto base = trie_.child(root, sat);
  if (base == Trie::kNone) return set_variable(x, b);
  Edit e;
  e.fast = true;
  e.old_root = root;
  e.true_sym = sat;
  e.false_sym = fal;
  std::vector<Word> ws;
  if (trie_.terminal(root)) ws.emplace_back();
  trie_.for_each_child(root, [&](Symbol s, Trie::NodeId c) {
    if (s != sat && s != fal) trie_.collect(c, ws, Word{s});
  });
  trie_.set_root(base);
  for (auto& w : ws)
    if (trie_.insert(w)) e.inserted.push_back(std::move(w));
  log_.push_back(std::move(e));
  return log_.size() - 1;
}

void TermTrie::undo(Token t) {
  if (log_.empty() || t != log_.size() - 1)
    throw std::logic_error("out-of-order undo of term trie edit");
  Edit& e = log_.back();
  for (const auto& w : e.inserted) trie_.erase(w);
  if (e.fast) {
    trie_.set_root(e.old_root);
  } else {
    trie_.attach(e.old_root, e.true_sym, e.detached_true);
    trie_.attach(e.old_root, e.false_sym, e.detached_false);
  }
  log_.pop_back();
}

Dnf TermTrie::decode() const {
  std::vector<Term> terms;
  for (const auto& w : trie_.words()) terms.push_back(term_of(w));
  return Dnf(n_, std::move(terms));
}

std::size_t TermTrie::min_term_length() const {
  std::size_t best = static_cast<std::size_t>(-1);
  auto rec = [&](auto& self, Trie::NodeId v, std::size_t depth) -> void {
    if (steps_) steps_->tick();
    if (depth >= best) return;
    if (trie_.terminal(v)) {
      best = depth;
      return;
    }
    trie_.for_each_child(v, [&](Symbol, Trie::NodeId c) { self(self, c, depth + 1); });
  };
  rec(rec, trie_.root(), 0);
  return best;
}

}  // namespace dnfenum

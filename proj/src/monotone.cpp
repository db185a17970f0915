#include "dnfenum/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dnfenum {

UnateForm normalize_unate(const Dnf& d) {
  const std::size_t n = d.num_vars();
  std::vector<std::uint8_t> pos(n + 1, 0), neg(n + 1, 0);
  for (const auto& t : d.terms())
    for (auto l : t) (l.positive() ? pos : neg)[l.var()] = 1;
  Assignment mask(n, 0);
  for (Var v = 1; v <= n; ++v) {
    if (pos[v] && neg[v])
      throw InputError("variable x" + std::to_string(v) +
                       " occurs with both signs; the formula is not unate");
    mask[v - 1] = neg[v];
  }
  std::vector<Term> terms;
  terms.reserve(d.num_terms());
  for (const auto& t : d.terms()) {
    std::vector<Literal> lits;
    for (auto l : t) lits.emplace_back(l.var(), true);
    terms.push_back(make_term(std::move(lits), n));
  }
  return {Dnf(n, std::move(terms)), std::move(mask)};
}

Dnf minimize_monotone(const Dnf& d) {
  if (!d.is_monotone()) throw InputError("formula has a negative literal");
  const std::size_t n = d.num_vars();
  std::vector<const Term*> order;
  for (const auto& t : d.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const Term* a, const Term* b) { return a->size() < b->size(); });
  std::vector<std::vector<std::uint8_t>> kept_masks;
  std::vector<Term> kept;
  for (const Term* t : order) {
    std::vector<std::uint8_t> mask(n + 1, 0);
    for (auto l : *t) mask[l.var()] = 1;
    bool absorbed = false;
    for (std::size_t j = 0; j < kept.size() && !absorbed; ++j)
      absorbed = std::all_of(kept[j].begin(), kept[j].end(),
                             [&](Literal l) { return mask[l.var()] != 0; });
    if (absorbed) continue;
    kept.push_back(*t);
    kept_masks.push_back(std::move(mask));
  }
  std::sort(kept.begin(), kept.end());
  return Dnf(n, std::move(kept));
}

MonotoneRsEnum::MonotoneRsEnum(const Dnf& d, StepCounter* shared)
    : ModelEnumerator(shared),
      d_(minimize_monotone(d)),
      n_(d.num_vars()),
      seen_(2, ChildRep::SortedList, &counter()),
      model_(n_, 0) {
  // Subset absorption compares every pair of terms over n variables.
  tick(d.num_terms() * d.num_terms() * (n_ + 1));
}

void MonotoneRsEnum::start_term() {
  std::vector<std::uint8_t> in_term(n_ + 1, 0);
  for (auto l : d_.term(term_)) in_term[l.var()] = 1;
  free_.clear();
  for (Var v = 1; v <= n_; ++v) {
    tick();
    if (!in_term[v]) free_.push_back(v);
  }
  arena_.clear();
  arena_.push_back({kNull, -1, kNull});
  cur_ = 0;
}

void MonotoneRsEnum::load(std::uint32_t v) {
  std::fill(model_.begin(), model_.end(), 0);
  tick(n_);
  for (auto l : d_.term(term_)) model_[l.var() - 1] = 1;
  for (; arena_[v].y >= 0; v = arena_[v].parent) {
    tick();
    model_[free_[arena_[v].y] - 1] = 1;
  }
}

bool MonotoneRsEnum::probe(Var x) {
  buf_[x - 1] = 1;
  const bool fresh = !seen_.contains(buf_);
  if (!fresh) {
    ++discarded_;
    if (record_discards_) discarded_models_.emplace_back(buf_.begin(), buf_.end());
  }
  buf_[x - 1] = 0;
  return fresh;
}

bool MonotoneRsEnum::next() {
  if (!started_) {
    started_ = true;
    if (d_.empty()) return false;
    start_term();
  }
  while (cur_ == kNull) {
    if (term_ + 1 >= d_.num_terms()) return false;
    ++term_;
    start_term();
  }
  load(cur_);
  buf_.assign(model_.begin(), model_.end());
  seen_.insert(buf_);
  if (record_discards_) discarded_models_.clear();

  const std::uint32_t at = cur_;
  const std::size_t first = static_cast<std::size_t>(arena_[at].y + 1);
  std::uint32_t prev = kNull;
  std::uint32_t head = kNull;
  for (std::size_t j = first; j < free_.size(); ++j) {
    tick();
    if (!probe(free_[j])) continue;
    const auto id = static_cast<std::uint32_t>(arena_.size());
    arena_.push_back({at, static_cast<std::int32_t>(j), kNull});
    if (prev == kNull)
      head = id;
    else
      arena_[prev].next = id;
    prev = id;
  }
  if (prev != kNull) arena_[prev].next = arena_[at].next;
  cur_ = head != kNull ? head : arena_[at].next;
  peak_nodes_ = std::max(peak_nodes_, seen_.live_nodes() + arena_.size());
  return true;
}

UnateEnum::UnateEnum(std::unique_ptr<ModelEnumerator> inner, Assignment mask)
    : ModelEnumerator(&inner->counter()), inner_(std::move(inner)), mask_(std::move(mask)) {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) flipped_.push_back(static_cast<Var>(i + 1));
}

bool UnateEnum::next() {
  if (!inner_->next()) return false;
  model_ = inner_->model();
  for (Var v : flipped_) {
    tick();
    model_[v - 1] ^= 1;
  }
  return true;
}

bool complement_trigger(std::size_t free_vars, std::size_t min_len, std::size_t terms,
                        std::size_t n) {
  if (terms == 0 || n == 0) return false;
  const double t = std::log2(static_cast<double>(terms)) + 2.0 * std::log2(static_cast<double>(n));
  return static_cast<double>(free_vars) - static_cast<double>(min_len) < t;
}

std::vector<Word> complement_words(const std::vector<Word>& term_words, Var first, std::size_t n) {
  std::vector<Word> out;
  out.reserve(term_words.size());
  std::vector<std::uint8_t> in(n + 1, 0);
  for (const auto& w : term_words) {
    for (auto s : w) in[literal_of(s).var()] = 1;
    Word c;
    for (Var v = first; v <= n; ++v)
      if (!in[v]) c.push_back(v);
    for (auto s : w) in[literal_of(s).var()] = 0;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Word> term_words_of_complements(const std::vector<Word>& comp, Var first,
                                            std::size_t n) {
  std::vector<Word> out;
  out.reserve(comp.size());
  std::vector<std::uint8_t> in(n + 1, 0);
  for (const auto& c : comp) {
    for (auto v : c) in[v] = 1;
    Word w;
    for (Var v = first; v <= n; ++v)
      if (!in[v]) w.push_back(symbol_of(Literal(v, true)));
    for (auto v : c) in[v] = 0;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace dnfenum

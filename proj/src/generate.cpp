#include <cmath>
#include <random>
#include <set>

#include "dnfenum/runner.hpp"

namespace dnfenum {

namespace {

long double binom(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return r;
}

std::vector<Var> draw_vars(std::mt19937_64& rng, std::size_t n, std::size_t w) {
  std::vector<Var> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Var>(i + 1);
  for (std::size_t i = 0; i < w; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(w);
  return pool;
}

Dnf all_terms(std::size_t n) {
  if (n > 12) throw InputError("all-terms family is limited to n <= 12");
  std::vector<Term> terms;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Literal> lits;
    std::size_t c = code;
    for (Var v = 1; v <= n; ++v, c /= 3)
      if (c % 3) lits.emplace_back(v, c % 3 == 2);
    terms.push_back(make_term(std::move(lits), n));
  }
  return Dnf(n, std::move(terms));
}

}  // namespace

std::optional<GenKind> parse_gen_kind(const std::string& name) {
  if (name == "random") return GenKind::kRandom;
  if (name == "monotone") return GenKind::kMonotone;
  if (name == "kdnf") return GenKind::kKdnf;
  if (name == "all-terms") return GenKind::kAllTerms;
  if (name == "sets") return GenKind::kSets;
  return std::nullopt;
}

Dnf generate_dnf(const GenSpec& g) {
  if (g.n == 0) throw InputError("n must be positive");
  if (g.kind == GenKind::kAllTerms) return all_terms(g.n);
  if (g.kind == GenKind::kSets) throw InputError("the sets family is not a DNF");
  const std::size_t k = std::min(g.k ? g.k : g.n, g.n);
  const bool signs = g.kind != GenKind::kMonotone;
  std::vector<double> weight;
  long double available = 0;
  for (std::size_t w = 1; w <= k; ++w) {
    const long double c = binom(g.n, w) * (signs ? std::pow(2.0L, w) : 1.0L);
    available += c;
    weight.push_back(static_cast<double>(c));
  }
  if (static_cast<long double>(g.m) > available)
    throw InputError("cannot draw " + std::to_string(g.m) + " distinct terms of width <= " +
                     std::to_string(k) + " over " + std::to_string(g.n) + " variables");
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> uniform_width(1, k);
  std::discrete_distribution<std::size_t> weighted_width(weight.begin(), weight.end());
  std::set<Term> seen;
  std::vector<Term> terms;
  while (terms.size() < g.m) {
    const std::size_t w =
        g.kind == GenKind::kKdnf ? weighted_width(rng) + 1 : uniform_width(rng);
    std::vector<Literal> lits;
    for (Var v : draw_vars(rng, g.n, w)) lits.emplace_back(v, signs ? (rng() & 1u) != 0 : true);
    Term t = make_term(std::move(lits), g.n);
    if (seen.insert(t).second) terms.push_back(std::move(t));
  }
  return Dnf(g.n, std::move(terms));
}

SetFamily generate_sets(const GenSpec& g) {
  if (g.n == 0) throw InputError("n must be positive");
  const std::size_t k = std::min(g.k ? g.k : g.n, g.n);
  long double available = 0;
  for (std::size_t w = 1; w <= k; ++w) available += binom(g.n, w);
  if (static_cast<long double>(g.m) > available)
    throw InputError("cannot draw " + std::to_string(g.m) + " distinct non-empty sets");
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<std::size_t> size(1, k);
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> sets;
  while (sets.size() < g.m) {
    std::vector<Element> s;
    for (Var v : draw_vars(rng, g.n, size(rng))) s.push_back(v);
    std::sort(s.begin(), s.end());
    if (seen.insert(s).second) sets.push_back(std::move(s));
  }
  return SetFamily(g.n, std::move(sets));
}

}  // namespace dnfenum

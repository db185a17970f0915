#include "dnfenum/setunion.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dnfenum {

SetFamily::SetFamily(std::size_t n, std::vector<std::vector<Element>> sets) : n_(n) {
  if (n == 0) throw InputError("ground set must be non-empty");
  std::set<std::vector<Element>> seen;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("set lists an element twice");
    for (auto e : s)
      if (e == 0 || e > n) throw InputError("element " + std::to_string(e) + " out of range");
    if (seen.insert(s).second) sets_.push_back(std::move(s));
  }
}

bool SetFamily::has_empty_set() const {
  return std::any_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.empty(); });
}

Dnf SetFamily::as_dnf() const {
  std::vector<Term> terms;
  terms.reserve(sets_.size());
  for (const auto& s : sets_) {
    Term t;
    for (auto e : s) t.emplace_back(static_cast<Var>(e), true);
    terms.push_back(std::move(t));
  }
  return Dnf(n_, std::move(terms));
}

SetFamily parse_sets(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::vector<Element>> sets;
  std::vector<Element> cur;
  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      if (have_header) fail("duplicate header");
      if (!(ls >> kind >> n >> m) || kind != "sets" || n <= 0 || m < 0)
        fail("expected 'p sets <n> <m>'");
      have_header = true;
      continue;
    }
    if (!have_header) fail("set before header");
    ls.clear();
    ls.seekg(0);
    long long v;
    while (ls >> v) {
      if (v == 0) {
        sets.push_back(std::move(cur));
        cur.clear();
        continue;
      }
      if (v < 0 || v > n) fail("element " + std::to_string(v) + " out of range");
      if (!cur.empty() && static_cast<Element>(v) <= cur.back()) fail("elements must be ascending");
      cur.push_back(static_cast<Element>(v));
    }
    if (!ls.eof()) fail("unexpected token");
  }
  if (!have_header) throw InputError("missing 'p sets' header");
  if (!cur.empty()) throw InputError("line " + std::to_string(lineno) + ": set not terminated by 0");
  if (static_cast<long long>(sets.size()) != m)
    throw InputError("header declares " + std::to_string(m) + " sets, found " +
                     std::to_string(sets.size()));
  return SetFamily(static_cast<std::size_t>(n), std::move(sets));
}

SetFamily parse_sets_string(const std::string& text) {
  std::istringstream in(text);
  return parse_sets(in);
}

std::string serialize_sets(const SetFamily& f) {
  std::ostringstream out;
  out << "p sets " << f.ground_size() << ' ' << f.size() << '\n';
  for (const auto& s : f.sets()) {
    for (auto e : s) out << e << ' ';
    out << "0\n";
  }
  return out.str();
}

Assignment characteristic(const std::vector<Element>& s, std::size_t n) {
  Assignment a(n, 0);
  for (auto e : s) a[e - 1] = 1;
  return a;
}

bool extendable_union(const SetFamily& f, const std::vector<std::uint8_t>& prefix) {
  const std::size_t k = prefix.size();
  std::vector<std::uint8_t> covered(k, 0);
  bool any_live = false;
  for (const auto& s : f.sets()) {
    const bool live = std::none_of(s.begin(), s.end(),
                                   [&](Element e) { return e <= k && prefix[e - 1] == 0; });
    if (!live) continue;
    any_live = true;
    for (auto e : s)
      if (e <= k) covered[e - 1] = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (prefix[i] && !covered[i]) return false;
  return any_live;
}

std::vector<Assignment> brute_force_unions(const SetFamily& f) {
  const std::size_t m = f.size();
  if (m > 24) throw std::invalid_argument("brute-force union oracle needs m <= 24");
  std::set<Assignment> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Assignment a(f.ground_size(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1)
        for (auto e : f.set(i)) a[e - 1] = 1;
    out.insert(std::move(a));
  }
  return {out.begin(), out.end()};
}

UnionEnum::UnionEnum(const SetFamily& f, StepCounter* shared)
    : ModelEnumerator(shared),
      f_(f),
      n_(f.ground_size()),
      trie_(f.as_dnf(), &counter()),
      occ_(n_ + 1),
      zeros_(f.size(), 0),
      cover_(n_ + 1, 0),
      live_(f.size()),
      model_(n_, 0),
      stage_(n_ + 1, 0),
      tokens_(n_, 0) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (auto e : f.set(i)) {
      tick();
      occ_[e].push_back(static_cast<std::uint32_t>(i));
    }
}

bool UnionEnum::assign(std::size_t e, std::uint8_t b) {
  if (b == 1) {
    cover_[e] = 0;
    for (auto s : occ_[e]) {
      tick();
      if (zeros_[s] == 0) ++cover_[e];
    }
    if (cover_[e] == 0) ++uncovered_;
  } else {
    for (auto s : occ_[e]) {
      tick();
      if (zeros_[s]++ != 0) continue;
      --live_;
      for (auto j : f_.set(s)) {
        if (j >= e) break;
        tick();
        if (model_[j - 1] == 1 && --cover_[j] == 0) ++uncovered_;
      }
    }
  }
  return live_ > 0 && uncovered_ == 0;
}

void UnionEnum::unassign(std::size_t e, std::uint8_t b) {
  if (b == 1) {
    if (cover_[e] == 0) --uncovered_;
    return;
  }
  for (auto s : occ_[e]) {
    tick();
    if (--zeros_[s] != 0) continue;
    ++live_;
    for (auto j : f_.set(s)) {
      if (j >= e) break;
      tick();
      if (model_[j - 1] == 1 && cover_[j]++ == 0) --uncovered_;
    }
  }
}

bool UnionEnum::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (live_ == 0) {
      done_ = true;
      return false;
    }
  }
  for (;;) {
    tick();
    if (depth_ == n_ && stage_[n_] == 0) {
      stage_[n_] = 2;
      return true;
    }
    if (stage_[depth_] < 2) {
      const std::uint8_t b = stage_[depth_]++;
      const std::size_t e = depth_ + 1;
      model_[depth_] = b;
      if (!assign(e, b)) {
        unassign(e, b);
        model_[depth_] = 0;
        continue;
      }
      const auto split = trie_.split(static_cast<Var>(e));
      const std::size_t kept = b == 0 ? split.with_neg : split.with_pos;
      tokens_[depth_] = split.without < kept ? trie_.set_variable_fast(static_cast<Var>(e), b)
                                             : trie_.set_variable(static_cast<Var>(e), b);
      ++depth_;
      stage_[depth_] = 0;
      continue;
    }
    if (depth_ == 0) {
      done_ = true;
      return false;
    }
    --depth_;
    trie_.undo(tokens_[depth_]);
    unassign(depth_ + 1, model_[depth_]);
  }
}

}  // namespace dnfenum

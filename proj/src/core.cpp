#include "dnfenum/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dnfenum {

std::vector<Var> PartialAssignment::domain() const {
  std::vector<Var> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != kUnset) out.push_back(static_cast<Var>(i + 1));
  return out;
}

std::size_t PartialAssignment::domain_size() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](auto v) { return v != kUnset; }));
}

bool PartialAssignment::compatible(const Assignment& a) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != kUnset && a[i] != static_cast<std::uint8_t>(values_[i])) return false;
  return true;
}

Term make_term(std::vector<Literal> lits, std::size_t n) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (lits[i].var() < 1 || lits[i].var() > n)
      throw InputError("variable " + std::to_string(lits[i].var()) + " out of range [1," +
                       std::to_string(n) + "]");
    if (i > 0 && lits[i - 1].var() == lits[i].var())
      throw InputError("contradictory literals on x" + std::to_string(lits[i].var()));
  }
  return lits;
}

Dnf::Dnf(std::size_t n, std::vector<Term> terms) : n_(n) {
  std::set<Term> seen;
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    Term c = make_term(std::move(t), n);
    if (seen.insert(c).second) terms_.push_back(std::move(c));
  }
}

std::size_t Dnf::size() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s += t.size();
  return s;
}

std::size_t Dnf::max_width() const {
  std::size_t w = 0;
  for (const auto& t : terms_) w = std::max(w, t.size());
  return w;
}

bool Dnf::has_empty_term() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.empty(); });
}

bool Dnf::is_monotone() const {
  for (const auto& t : terms_)
    for (auto l : t)
      if (!l.positive()) return false;
  return true;
}

bool satisfies(const Term& t, const Assignment& a) {
  for (auto l : t)
    if (!l.satisfied_by(a[l.var() - 1])) return false;
  return true;
}

bool eval(const Dnf& d, const Assignment& a) {
  for (const auto& t : d.terms())
    if (satisfies(t, a)) return true;
  return false;
}

Dnf restrict(const Dnf& d, const PartialAssignment& tau) {
  std::vector<Term> out;
  for (const auto& t : d.terms()) {
    Term kept;
    bool falsified = false;
    for (auto l : t) {
      if (!tau.contains(l.var())) {
        kept.push_back(l);
      } else if (!l.satisfied_by(tau.get(l.var()))) {
        falsified = true;
        break;
      }
    }
    if (!falsified) out.push_back(std::move(kept));
  }
  return Dnf(d.num_vars(), std::move(out));
}

bool same_terms(const Dnf& a, const Dnf& b) {
  if (a.num_vars() != b.num_vars()) return false;
  std::set<Term> sa(a.terms().begin(), a.terms().end());
  std::set<Term> sb(b.terms().begin(), b.terms().end());
  return sa == sb;
}

Dnf parse_dnf(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Term> terms;
  std::vector<Literal> cur;
  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      long long nn = -1, mm = -1;
      if (have_header) fail("duplicate header");
      if (!(ls >> kind >> nn >> mm) || kind != "dnf" || nn <= 0 || mm < 0)
        fail("expected 'p dnf <n> <m>'");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
      continue;
    }
    if (!have_header) fail("term before header");
    ls.clear();
    ls.seekg(0);
    long long v;
    while (ls >> v) {
      if (v == 0) {
        try {
          terms.push_back(make_term(std::move(cur), n));
        } catch (const InputError& e) {
          fail(e.what());
        }
        cur.clear();
        continue;
      }
      if (v > static_cast<long long>(n) || -v > static_cast<long long>(n))
        fail("variable " + std::to_string(v < 0 ? -v : v) + " out of range");
      cur.push_back(Literal::from_int(static_cast<int>(v)));
    }
    if (!ls.eof()) fail("unexpected token");
  }
  if (!have_header) throw InputError("missing 'p dnf' header");
  if (!cur.empty()) throw InputError("line " + std::to_string(lineno) + ": term not terminated by 0");
  if (terms.size() != m)
    throw InputError("header declares " + std::to_string(m) + " terms, found " +
                     std::to_string(terms.size()));
  return Dnf(n, std::move(terms));
}

Dnf parse_dnf_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dnf(in);
}

std::string serialize_dnf(const Dnf& d) {
  std::ostringstream out;
  out << "p dnf " << d.num_vars() << ' ' << d.num_terms() << '\n';
  for (const auto& t : d.terms()) {
    for (auto l : t) out << l.to_int() << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

struct MaskTerm {
  std::uint32_t care = 0;
  std::uint32_t value = 0;
};

std::vector<MaskTerm> mask_terms(const Dnf& d) {
  if (d.num_vars() > kMaxOracleVars)
    throw std::invalid_argument("brute force oracle refuses n > 24");
  const std::size_t n = d.num_vars();
  std::vector<MaskTerm> out;
  for (const auto& t : d.terms()) {
    MaskTerm mt;
    for (auto l : t) {
      std::uint32_t bit = 1u << (n - l.var());
      mt.care |= bit;
      if (l.positive()) mt.value |= bit;
    }
    out.push_back(mt);
  }
  return out;
}

bool eval_mask(const std::vector<MaskTerm>& ts, std::uint32_t a) {
  for (const auto& t : ts)
    if ((a & t.care) == t.value) return true;
  return false;
}

}  // namespace

std::vector<Assignment> brute_force_models_serial(const Dnf& d) {
  auto ts = mask_terms(d);
  const std::size_t n = d.num_vars();
  std::vector<Assignment> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
    if (eval_mask(ts, static_cast<std::uint32_t>(a))) out.push_back(unpack(a, n));
  return out;
}

std::vector<Assignment> brute_force_models(const Dnf& d) {
  auto ts = mask_terms(d);
  const std::size_t n = d.num_vars();
  const std::int64_t total = std::int64_t{1} << n;
  constexpr std::int64_t kChunk = 4096;
  const std::int64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint32_t>> found(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < chunks; ++c) {
    auto& bucket = found[static_cast<std::size_t>(c)];
    const std::int64_t hi = std::min(total, (c + 1) * kChunk);
    for (std::int64_t a = c * kChunk; a < hi; ++a)
      if (eval_mask(ts, static_cast<std::uint32_t>(a))) bucket.push_back(static_cast<std::uint32_t>(a));
  }
  std::vector<Assignment> out;
  for (const auto& bucket : found)
    for (auto a : bucket) out.push_back(unpack(a, n));
  return out;
}

std::uint64_t brute_force_count(const Dnf& d) {
  auto ts = mask_terms(d);
  const std::int64_t total = std::int64_t{1} << d.num_vars();
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count)
  for (std::int64_t a = 0; a < total; ++a)
    if (eval_mask(ts, static_cast<std::uint32_t>(a))) ++count;
  return count;
}

std::uint64_t pack(const Assignment& a) {
  std::uint64_t v = 0;
  for (auto b : a) v = (v << 1) | (b & 1u);
  return v;
}

Assignment unpack(std::uint64_t bits, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>((bits >> (n - 1 - i)) & 1u);
  return a;
}

std::string to_bits(const Assignment& a) {
  std::string s(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) s[i] = '1';
  return s;
}

}  // namespace dnfenum

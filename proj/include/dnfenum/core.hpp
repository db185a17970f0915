#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnfenum {

using Var = std::uint32_t;  // 1-based variable index

/// A literal x_i or its negation. Codes are ordered so that
/// not x_1 < x_1 < not x_2 < x_2 < ..., which is the canonical order of
/// literals inside a term and the alphabet order of term tries.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool positive)
      : code_(2 * (var - 1) + (positive ? 1u : 0u)) {}

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }
  /// DIMACS-style signed integer (+i for x_i, -i for not x_i).
  static Literal from_int(int v) {
    return v > 0 ? Literal(static_cast<Var>(v), true)
                 : Literal(static_cast<Var>(-v), false);
  }

  constexpr std::uint32_t code() const { return code_; }
  constexpr Var var() const { return code_ / 2 + 1; }
  constexpr bool positive() const { return (code_ & 1u) != 0; }
  constexpr Literal negated() const { return from_code(code_ ^ 1u); }
  int to_int() const {
    return positive() ? static_cast<int>(var()) : -static_cast<int>(var());
  }
  /// Value this literal takes under x_var = bit.
  constexpr bool satisfied_by(std::uint8_t bit) const {
    return (bit != 0) == positive();
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

/// A term is a set of literals over distinct variables, kept sorted.
using Term = std::vector<Literal>;

/// Full assignment, position i holds the value of x_{i+1}.
using Assignment = std::vector<std::uint8_t>;

class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::size_t n) : values_(n, kUnset) {}

  std::size_t num_vars() const { return values_.size(); }
  bool contains(Var v) const { return values_[v - 1] != kUnset; }
  std::uint8_t get(Var v) const { return static_cast<std::uint8_t>(values_[v - 1]); }
  void set(Var v, std::uint8_t bit) { values_[v - 1] = static_cast<std::int8_t>(bit & 1u); }
  void unset(Var v) { values_[v - 1] = kUnset; }
  std::vector<Var> domain() const;
  std::size_t domain_size() const;

  /// True if `a` agrees with every assigned variable.
  bool compatible(const Assignment& a) const;

  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;

 private:
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> values_;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A DNF over variables x_1..x_n: a set of terms. Terms keep their input order
/// after de-duplication; literals within a term are canonical.
class Dnf {
 public:
  Dnf() = default;
  /// Validates and canonicalizes. Throws InputError on a contradictory term or
  /// an out-of-range variable. Duplicate terms are dropped.
  Dnf(std::size_t n, std::vector<Term> terms);

  std::size_t num_vars() const { return n_; }
  std::size_t num_terms() const { return terms_.size(); }
  /// Sum of term lengths.
  std::size_t size() const;
  std::size_t max_width() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& term(std::size_t i) const { return terms_[i]; }
  bool empty() const { return terms_.empty(); }
  bool has_empty_term() const;
  bool is_monotone() const;

  friend bool operator==(const Dnf&, const Dnf&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// Sorts literals and checks the term invariant. Throws InputError.
Term make_term(std::vector<Literal> lits, std::size_t n);

bool satisfies(const Term& t, const Assignment& a);
bool eval(const Dnf& d, const Assignment& a);

/// D[tau]: drops terms falsified by tau and strips assigned literals.
/// The result keeps the variable count of `d`.
Dnf restrict(const Dnf& d, const PartialAssignment& tau);

/// Same set of terms, ignoring order.
bool same_terms(const Dnf& a, const Dnf& b);

/// `p dnf` text format. Throws InputError with the offending line number.
Dnf parse_dnf(std::istream& in);
Dnf parse_dnf_string(const std::string& text);
std::string serialize_dnf(const Dnf& d);

constexpr std::size_t kMaxOracleVars = 24;

/// Every model of `d`, lexicographically ascending (x_1 most significant).
/// OpenMP-parallel scan of all 2^n assignments. Throws for n > 24.
std::vector<Assignment> brute_force_models(const Dnf& d);
/// Single-threaded reference for brute_force_models.
std::vector<Assignment> brute_force_models_serial(const Dnf& d);
std::uint64_t brute_force_count(const Dnf& d);

/// Packs an assignment into an integer with x_1 as the most significant bit.
std::uint64_t pack(const Assignment& a);
Assignment unpack(std::uint64_t bits, std::size_t n);
std::string to_bits(const Assignment& a);

}  // namespace dnfenum

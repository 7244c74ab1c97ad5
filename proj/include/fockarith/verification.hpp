#pragma once

#include "fockarith/arith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fockarith::verify {

// ------------------------------------------------------------------ oracle
// Reference arithmetic on exact values. Works from digit lists only and never
// touches the operator machinery.

struct OracleValue {
  BigInt numerator = 0;
  int exponent = 0;  // value = numerator / base^exponent, exponent >= 0, reduced

  bool operator==(const OracleValue&) const = default;
};

enum class OracleOp { Add, Sub, Mul };

[[nodiscard]] OracleValue oracle_value(const Numeral& n);
[[nodiscard]] OracleValue oracle_normalize(BigInt numerator, int exponent, int base);
[[nodiscard]] OracleValue oracle(OracleOp op, const OracleValue& a, const OracleValue& b, int base);
[[nodiscard]] bool oracle_matches(const OracleValue& v, const Numeral& n);

// ----------------------------------------------------- exponent collection

// Digit lists least significant first. Entries may exceed base - 1, which is
// how collected exponents are carried around.
using Digits = std::vector<long>;
// Site m -> collected power of V_m. Zero entries are dropped.
using ExponentVector = std::map<int, long>;

[[nodiscard]] Digits digits_of(const Numeral& n);

// The E / G / F collection of the product s x t. The shorter list plays the
// role of s.
[[nodiscard]] ExponentVector exponent_vectors(const Digits& s, const Digits& t);
// exp(m) = sum_{a + b = m + 1} s(a) t(b).
[[nodiscard]] ExponentVector digit_convolution(const Digits& s, const Digits& t);
// F_{L_s} == G_{L_s, L_s} and G_{L_s, L_t} == E_{L_s - 1}.
[[nodiscard]] bool exponent_boundaries_consistent(const Digits& s, const Digits& t);
[[nodiscard]] BigInt exponent_value(const ExponentVector& e, int base);
// prod_m (V_m)^{exp(m)} |0> through the operators, highest site leftmost.
[[nodiscard]] Numeral reconstruct(Machine& m, const ExponentVector& e);

struct DistributiveReport {
  bool exponent_identity = false;  // E/G/F(s, t) + t shifted by j-1 == E/G/F(s with s(j)+1, t)
  bool reconstruction = false;     // that vector rebuilds (s + k^{j-1}) t through V powers
  bool operator_identity = false;  // times (V_j on register 1) |s, t, 0> == |s', t, s' t>
  std::string detail;

  [[nodiscard]] bool ok() const { return exponent_identity && reconstruction && operator_identity; }
};

// Natural numerals, 1 <= j <= L_s.
[[nodiscard]] DistributiveReport check_distributive_step(Machine& m, const Numeral& s, const Numeral& t, int j);

// --------------------------------------------------- power decomposition

struct AppendixBReport {
  bool ok = true;
  std::size_t checked = 0;
  // Which part of the expansion produced the image.
  std::size_t positive_part = 0;   // (I+_j)^k
  std::size_t flip_to_zero = 0;    // l-sum through P_{+0} W
  std::size_t lt_in_sum = 0;       // l-sum through I-_{<j}
  std::size_t geq_part = 0;        // stays negative
  std::size_t lt_part = 0;         // (I+_j)^{k-1} I-_{<j}
  std::optional<Numeral> witness;
  std::string detail;
};

// Evaluates each part of the expansion of (I_j)^k on every word of the span
// and checks that exactly one part fires and that the sum equals both
// (I_j)^k and I_{j+1}.
[[nodiscard]] AppendixBReport check_appendixB_decomposition(Machine& m, int j, const std::vector<Numeral>& span);

// ------------------------------------------------------------------ spans

// Canonical numerals with at most max_len digits in total; rationals keep at
// most max_len - 1 fraction digits.
[[nodiscard]] std::vector<Numeral> canonical_span(Flavor f, int base, int max_len);
// Up to `count` distinct seeded random canonical numerals with 1..max_len digits per part.
[[nodiscard]] std::vector<Numeral> random_span(Flavor f, int base, int max_len, std::size_t count, std::uint64_t seed);

// ------------------------------------------------------------------ suite

struct SuiteConfig {
  int base = 2;
  Statistics stats = Statistics::Boson;
  int max_len = 4;
  std::uint64_t seed = 1;
  Flavor flavor = Flavor::Nat;
  ArithOptions opts{};
  // Exhaustive spans are used while base^max_len stays below this; above it
  // the span is random_span(..., random_words, seed).
  std::size_t exhaustive_limit = 4096;
  std::size_t random_words = 200;
  // Pair and triple checks sample this many tuples when the full product is larger.
  std::size_t tuple_samples = 300;
  bool parallel = true;
};

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string witness;  // "-" on pass
  std::size_t cases = 0;
  std::size_t digest = 0;  // hash of every output word, for cross-statistics comparison
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const;
  [[nodiscard]] bool ok() const { return failed() == 0; }
  [[nodiscard]] const CheckResult* find(const std::string& id) const;
  // "check=<id> flavor=<..> k=<..> stats=<b|f> result=<pass|fail> witness=<..>"
  // per check, then "summary checks=<n> passed=<n> failed=<n>".
  [[nodiscard]] std::string format() const;
};

[[nodiscard]] SuiteReport run_axiom_suite(const SuiteConfig& config);

// Every word-level output of two reports (boson vs fermion) agrees.
[[nodiscard]] bool same_outcomes(const SuiteReport& a, const SuiteReport& b);

}  // namespace fockarith::verify

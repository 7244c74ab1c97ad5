#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fockarith {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Statistics { Boson, Fermion };

[[nodiscard]] const char* to_string(Statistics s);

// One single-particle property: a digit 0..k-1, a sign, or the k-al point.
class ModeSymbol {
 public:
  constexpr ModeSymbol() = default;
  static constexpr ModeSymbol digit(int h) { return ModeSymbol(h); }
  static constexpr ModeSymbol plus() { return ModeSymbol(kPlus); }
  static constexpr ModeSymbol minus() { return ModeSymbol(kMinus); }
  static constexpr ModeSymbol point() { return ModeSymbol(kPoint); }

  [[nodiscard]] constexpr bool is_digit() const { return code_ >= 0; }
  [[nodiscard]] constexpr bool is_sign() const { return code_ == kPlus || code_ == kMinus; }
  [[nodiscard]] constexpr bool is_plus() const { return code_ == kPlus; }
  [[nodiscard]] constexpr bool is_minus() const { return code_ == kMinus; }
  [[nodiscard]] constexpr bool is_point() const { return code_ == kPoint; }
  [[nodiscard]] constexpr int digit_value() const { return code_; }
  [[nodiscard]] constexpr int code() const { return code_; }

  // "0".."k-1" in decimal for digits, "+", "-" or "." otherwise.
  [[nodiscard]] std::string label() const;
  // Inverse of label(); throws InvalidSymbol.
  static ModeSymbol parse(const std::string& text);

  constexpr auto operator<=>(const ModeSymbol&) const = default;

 private:
  static constexpr int kPlus = -1;
  static constexpr int kMinus = -2;
  static constexpr int kPoint = -3;
  constexpr explicit ModeSymbol(int code) : code_(code) {}
  int code_ = 0;
};

struct Mode {
  int reg = 1;
  int site = 1;
  ModeSymbol sym;

  constexpr auto operator<=>(const Mode&) const = default;
};

// True when a precedes b in canonical order: register ascending, then site descending.
[[nodiscard]] constexpr bool canonical_before(const Mode& a, const Mode& b) {
  if (a.reg != b.reg) return a.reg < b.reg;
  return a.site > b.site;
}

// A Fock basis state. Modes are kept in canonical order; phase is the sign
// picked up while sorting (always +1 for bosons and inside StateVector keys).
class BasisWord {
 public:
  BasisWord() = default;

  [[nodiscard]] const std::vector<Mode>& modes() const { return modes_; }
  [[nodiscard]] int phase() const { return phase_; }
  [[nodiscard]] bool empty() const { return modes_.empty(); }
  [[nodiscard]] std::size_t size() const { return modes_.size(); }

  // Index of the mode at (reg, site), or -1.
  [[nodiscard]] int find(int reg, int site) const;
  [[nodiscard]] const Mode* at(int reg, int site) const;
  // Modes of one register, in canonical order.
  [[nodiscard]] std::vector<Mode> register_modes(int reg) const;
  [[nodiscard]] bool has_register(int reg) const;

  // Support extent used by recursion budgets: max site minus min site plus one.
  [[nodiscard]] int extent() const;
  [[nodiscard]] int max_abs_site() const;

  bool operator==(const BasisWord& o) const { return modes_ == o.modes_; }
  bool operator<(const BasisWord& o) const { return modes_ < o.modes_; }

 private:
  friend std::pair<BasisWord, int> canonicalize(std::vector<Mode> modes, Statistics stats);
  friend int create_in_place(BasisWord& w, const Mode& m, Statistics stats);
  friend int annihilate_in_place(BasisWord& w, const Mode& m, Statistics stats);
  std::vector<Mode> modes_;
  int phase_ = 1;
};

// Sorts modes into canonical order and reports the fermion parity of the sort.
// Registers are distinguishable tensor factors, so only inversions between
// modes of the same register contribute. Throws DuplicateSite.
[[nodiscard]] std::pair<BasisWord, int> canonicalize(std::vector<Mode> modes, Statistics stats);

// Convenience: canonical word from a mode list, ignoring the phase.
[[nodiscard]] BasisWord make_word(std::vector<Mode> modes);

// Low-level in-place mutation used by the evaluator. Returns 0 when the
// operator annihilates the word, otherwise the sign (+1/-1) it contributes.
[[nodiscard]] int create_in_place(BasisWord& w, const Mode& m, Statistics stats);
[[nodiscard]] int annihilate_in_place(BasisWord& w, const Mode& m, Statistics stats);

// Exact sparse superposition of canonical basis words.
class StateVector {
 public:
  using Map = std::map<BasisWord, Rational>;

  StateVector() = default;
  explicit StateVector(const BasisWord& w, const Rational& amp = 1);

  static StateVector vacuum() { return StateVector(BasisWord{}); }

  void add(const BasisWord& w, const Rational& amp);
  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational amplitude(const BasisWord& w) const;
  // The only word of a single-term vector; throws EmptyResult otherwise.
  [[nodiscard]] const BasisWord& single_word() const;
  [[nodiscard]] Rational norm2() const;

  StateVector& operator+=(const StateVector& o);
  StateVector& operator*=(const Rational& c);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b);
  friend StateVector operator*(const Rational& c, StateVector a) { return a *= c; }
  bool operator==(const StateVector& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

[[nodiscard]] StateVector apply_create(const StateVector& v, const Mode& m, Statistics stats);
[[nodiscard]] StateVector apply_annihilate(const StateVector& v, const Mode& m, Statistics stats);
[[nodiscard]] Rational inner_product(const StateVector& a, const StateVector& b);

// Fraction text "p/q", or "p" when q == 1.
[[nodiscard]] std::string format_rational(const Rational& r);

// Dump format: one "reg=<r> site=<j> sym=<s>" line per mode then "phase=<+1|-1>".
void dump_word(std::ostream& os, const BasisWord& w);
// Words separated by blank lines, each preceded by "amp=<p/q>".
void dump_state(std::ostream& os, const StateVector& v);
[[nodiscard]] std::string dump_state(const StateVector& v);

}  // namespace fockarith

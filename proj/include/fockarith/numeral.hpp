#pragma once

#include "fockarith/fock.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fockarith {

enum class Flavor { Nat, Int, Rat };

[[nodiscard]] const char* to_string(Flavor f);
[[nodiscard]] Flavor parse_flavor(std::string_view s);

// Human-level number bridging basis words and exact values.
// Digits are stored least significant first: int_digits[0] is s(1),
// frac_digits[0] is t(-1).
struct Numeral {
  Flavor flavor = Flavor::Nat;
  int base = 10;
  bool negative = false;
  std::vector<int> int_digits{0};
  std::vector<int> frac_digits;  // rationals only; empty otherwise

  [[nodiscard]] int int_len() const { return static_cast<int>(int_digits.size()); }
  [[nodiscard]] int frac_len() const { return static_cast<int>(frac_digits.size()); }
  [[nodiscard]] bool is_zero() const;

  bool operator==(const Numeral&) const = default;
};

// value = numerator / base^exponent, exactly.
struct ExactValue {
  BigInt numerator = 0;
  int exponent = 0;

  [[nodiscard]] Rational to_rational(int base) const;
};

// Throws InvalidDigit for out-of-range digits or an empty digit list.
void validate_digits(const Numeral& n);
[[nodiscard]] bool is_canonical(const Numeral& n);

// Text grammar: nat "<digits>", int "[+|-]<digits>", rat "[+|-]<digits>.<digits>".
// Digits are 0-9a-z, most significant first. Throws ParseError / InvalidDigit.
[[nodiscard]] Numeral parse_numeral(std::string_view text, Flavor flavor, int base);
// Integers and rationals always carry an explicit sign.
[[nodiscard]] std::string format_numeral(const Numeral& n);

// Basis word layout: digits s(j) at site j, sign at L+1 (int, rat), point at
// site 0 and fraction digits at -1..-L_t (rat). Encode rejects non-canonical
// numerals unless allow_noncanonical is set (useful for intermediate words).
[[nodiscard]] BasisWord encode(const Numeral& n, int reg = 1, bool allow_noncanonical = false);
[[nodiscard]] std::vector<Mode> encode_modes(const Numeral& n, int reg = 1);

// Strict decode of one register. Throws NonCanonical, NegativeZero,
// NonContiguousSites, InvalidSymbol or InvalidDigit.
[[nodiscard]] Numeral decode(const BasisWord& w, Flavor flavor, int base, int reg = 1);
// Accepts leading and trailing zeros and "-0"; still requires the layout.
[[nodiscard]] Numeral decode_loose(const BasisWord& w, Flavor flavor, int base, int reg = 1);

[[nodiscard]] ExactValue value_of(const Numeral& n);
// Canonical numeral for an exact value. Throws NotKAdic when the denominator
// has a prime factor that does not divide the base, DomainError for a
// negative natural.
[[nodiscard]] Numeral numeral_from_rational(const Rational& v, Flavor flavor, int base);
[[nodiscard]] Numeral numeral_from_int(const BigInt& v, Flavor flavor, int base);

}  // namespace fockarith

#include "fockarith/numeral.hpp"

#include "fockarith/errors.hpp"

#include <algorithm>

namespace fockarith {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Nat: return "nat";
    case Flavor::Int: return "int";
    case Flavor::Rat: return "rat";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "nat") return Flavor::Nat;
  if (s == "int") return Flavor::Int;
  if (s == "rat") return Flavor::Rat;
  throw ParseError("unknown flavor '" + std::string(s) + "'");
}

bool Numeral::is_zero() const {
  auto zero = [](int d) { return d == 0; };
  return std::all_of(int_digits.begin(), int_digits.end(), zero) &&
         std::all_of(frac_digits.begin(), frac_digits.end(), zero);
}

Rational ExactValue::to_rational(int base) const {
  BigInt den = 1;
  for (int i = 0; i < exponent; ++i) den *= base;
  return Rational(numerator, den);
}

void validate_digits(const Numeral& n) {
  if (n.base < 2) throw InvalidDigit("base must be >= 2");
  if (n.int_digits.empty()) throw InvalidDigit("empty digit string");
  if (n.flavor == Flavor::Rat && n.frac_digits.empty()) throw InvalidDigit("rational needs a fraction digit");
  if (n.flavor != Flavor::Rat && !n.frac_digits.empty()) throw InvalidDigit("fraction digits need the rat flavor");
  if (n.flavor == Flavor::Nat && n.negative) throw InvalidDigit("naturals carry no sign");
  for (int d : n.int_digits)
    if (d < 0 || d >= n.base) throw InvalidDigit(std::to_string(d) + " not in [0," + std::to_string(n.base - 1) + "]");
  for (int d : n.frac_digits)
    if (d < 0 || d >= n.base) throw InvalidDigit(std::to_string(d) + " not in [0," + std::to_string(n.base - 1) + "]");
}

bool is_canonical(const Numeral& n) {
  if (n.int_digits.size() > 1 && n.int_digits.back() == 0) return false;
  if (n.frac_digits.size() > 1 && n.frac_digits.back() == 0) return false;
  if (n.negative && n.is_zero()) return false;
  return true;
}

namespace {

int digit_of(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char char_of(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10); }

std::vector<int> parse_digits(std::string_view s, int base, bool least_first_is_last) {
  if (s.empty()) throw ParseError("missing digits");
  std::vector<int> out;
  for (char c : s) {
    int d = digit_of(c);
    if (d < 0) throw ParseError(std::string("bad digit character '") + c + "'");
    if (d >= base) throw InvalidDigit(std::string("digit '") + c + "' not valid in base " + std::to_string(base));
    out.push_back(d);
  }
  if (least_first_is_last) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Numeral parse_numeral(std::string_view text, Flavor flavor, int base) {
  if (base < 2 || base > 36) throw ParseError("base must be in [2, 36] for text I/O");
  Numeral n;
  n.flavor = flavor;
  n.base = base;
  std::string_view s = text;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (flavor == Flavor::Nat) throw ParseError("naturals carry no sign: '" + std::string(text) + "'");
    n.negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  if (flavor == Flavor::Rat) {
    if (dot == std::string_view::npos) throw ParseError("rational needs a point: '" + std::string(text) + "'");
    n.int_digits = parse_digits(s.substr(0, dot), base, true);
    // Fraction text reads t(-1) t(-2) ... left to right.
    n.frac_digits = parse_digits(s.substr(dot + 1), base, false);
  } else {
    if (dot != std::string_view::npos) throw ParseError("unexpected point in '" + std::string(text) + "'");
    n.int_digits = parse_digits(s, base, true);
  }
  return n;
}

std::string format_numeral(const Numeral& n) {
  std::string out;
  if (n.flavor != Flavor::Nat) out += n.negative ? '-' : '+';
  for (auto it = n.int_digits.rbegin(); it != n.int_digits.rend(); ++it) out += char_of(*it);
  if (n.flavor == Flavor::Rat) {
    out += '.';
    for (int d : n.frac_digits) out += char_of(d);
  }
  return out;
}

std::vector<Mode> encode_modes(const Numeral& n, int reg) {
  validate_digits(n);
  std::vector<Mode> modes;
  const int L = n.int_len();
  if (n.flavor != Flavor::Nat)
    modes.push_back({reg, L + 1, n.negative ? ModeSymbol::minus() : ModeSymbol::plus()});
  for (int j = L; j >= 1; --j) modes.push_back({reg, j, ModeSymbol::digit(n.int_digits[static_cast<std::size_t>(j - 1)])});
  if (n.flavor == Flavor::Rat) {
    modes.push_back({reg, 0, ModeSymbol::point()});
    for (int j = 1; j <= n.frac_len(); ++j)
      modes.push_back({reg, -j, ModeSymbol::digit(n.frac_digits[static_cast<std::size_t>(j - 1)])});
  }
  return modes;
}

BasisWord encode(const Numeral& n, int reg, bool allow_noncanonical) {
  validate_digits(n);
  if (!allow_noncanonical && !is_canonical(n)) {
    if (n.negative && n.is_zero()) throw NegativeZero(format_numeral(n));
    throw NonCanonical(format_numeral(n));
  }
  return make_word(encode_modes(n, reg));
}

namespace {

Numeral decode_impl(const BasisWord& w, Flavor flavor, int base, int reg, bool strict) {
  auto modes = w.register_modes(reg);
  if (modes.empty()) throw NonContiguousSites("register " + std::to_string(reg) + " is empty");
  Numeral n;
  n.flavor = flavor;
  n.base = base;
  n.int_digits.clear();
  std::size_t i = 0;
  int top = modes.front().site;
  if (flavor != Flavor::Nat) {
    const Mode& s = modes.front();
    if (!s.sym.is_sign()) throw InvalidSymbol("expected a sign at the top site, found '" + s.sym.label() + "'");
    n.negative = s.sym.is_minus();
    ++i;
    top = s.site - 1;
  }
  if (top < 1) throw NonContiguousSites("no integer digits");
  // Integer digits must fill sites top..1 exactly.
  for (int site = top; site >= 1; --site, ++i) {
    if (i >= modes.size() || modes[i].site != site) throw NonContiguousSites("gap at site " + std::to_string(site));
    if (!modes[i].sym.is_digit()) throw InvalidSymbol("non-digit '" + modes[i].sym.label() + "' at site " + std::to_string(site));
    if (modes[i].sym.digit_value() >= base) throw InvalidDigit("digit exceeds base");
    n.int_digits.push_back(modes[i].sym.digit_value());
  }
  std::reverse(n.int_digits.begin(), n.int_digits.end());
  if (flavor == Flavor::Rat) {
    if (i >= modes.size() || modes[i].site != 0 || !modes[i].sym.is_point())
      throw NonContiguousSites("missing point at site 0");
    ++i;
    for (int site = -1; i < modes.size(); --site, ++i) {
      if (modes[i].site != site) throw NonContiguousSites("gap at site " + std::to_string(site));
      if (!modes[i].sym.is_digit()) throw InvalidSymbol("non-digit in fraction");
      if (modes[i].sym.digit_value() >= base) throw InvalidDigit("digit exceeds base");
      n.frac_digits.push_back(modes[i].sym.digit_value());
    }
    if (n.frac_digits.empty()) throw NonContiguousSites("missing fraction digits");
  } else if (i != modes.size()) {
    throw NonContiguousSites("unexpected modes below site 1");
  }
  if (strict) {
    if (n.negative && n.is_zero()) throw NegativeZero(format_numeral(n));
    if (!is_canonical(n)) throw NonCanonical(format_numeral(n));
  }
  return n;
}

}  // namespace

Numeral decode(const BasisWord& w, Flavor flavor, int base, int reg) { return decode_impl(w, flavor, base, reg, true); }

Numeral decode_loose(const BasisWord& w, Flavor flavor, int base, int reg) {
  return decode_impl(w, flavor, base, reg, false);
}

ExactValue value_of(const Numeral& n) {
  ExactValue v;
  v.exponent = n.frac_len();
  BigInt acc = 0;
  for (auto it = n.int_digits.rbegin(); it != n.int_digits.rend(); ++it) acc = acc * n.base + *it;
  for (int d : n.frac_digits) acc = acc * n.base + d;
  v.numerator = n.negative ? BigInt(-acc) : acc;
  return v;
}

Numeral numeral_from_int(const BigInt& v, Flavor flavor, int base) {
  return numeral_from_rational(Rational(v), flavor, base);
}

Numeral numeral_from_rational(const Rational& v, Flavor flavor, int base) {
  if (base < 2) throw InvalidDigit("base must be >= 2");
  if (flavor == Flavor::Nat && v < 0) throw DomainError("negative value for a natural");
  if (flavor != Flavor::Rat && denominator(v) != 1) throw DomainError("non-integer value for flavor " + std::string(to_string(flavor)));
  Numeral n;
  n.flavor = flavor;
  n.base = base;
  n.negative = v < 0;
  BigInt num = abs(numerator(v));
  BigInt den = denominator(v);
  // Scale by base until the denominator divides out; bail if it never will.
  int e = 0;
  BigInt scaled = num;
  BigInt kpow = 1;
  while (scaled % den != 0) {
    ++e;
    scaled *= base;
    kpow *= base;
    if (e > 4096) throw NotKAdic(format_rational(v) + " has no finite base-" + std::to_string(base) + " expansion");
  }
  BigInt q = scaled / den;
  BigInt ip = q / kpow;
  BigInt fp = q % kpow;
  n.int_digits.clear();
  if (ip == 0) n.int_digits.push_back(0);
  while (ip > 0) {
    n.int_digits.push_back(static_cast<int>(ip % base));
    ip /= base;
  }
  if (flavor == Flavor::Rat) {
    std::vector<int> frac;
    for (int i = 0; i < e; ++i) {
      // Most significant fraction digit first.
      kpow /= base;
      frac.push_back(static_cast<int>(fp / kpow));
      fp %= kpow;
    }
    if (frac.empty()) frac.push_back(0);
    n.frac_digits = std::move(frac);
  }
  if (v == 0) n.negative = false;
  return n;
}

}  // namespace fockarith

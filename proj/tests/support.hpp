#pragma once

// Reference helpers for the tests. They work on plain integers and strings and
// never call the library's converters or operators.

#include "fockarith/arith.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace support {

inline char digit_char(long long d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

// Base-k digits of |v|, most significant first.
inline std::string magnitude_text(long long v, int k) {
  if (v < 0) v = -v;
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(digit_char(v % k));
    v /= k;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

inline std::string nat_text(long long v, int k) { return magnitude_text(v, k); }
inline std::string int_text(long long v, int k) { return (v < 0 ? "-" : "+") + magnitude_text(v, k); }

// Text of n / k^e with canonical trailing digits.
inline std::string rat_text(long long n, int e, int k) {
  const bool neg = n < 0;
  if (neg) n = -n;
  while (e > 0 && n % k == 0) {
    n /= k;
    --e;
  }
  long long scale = 1;
  for (int i = 0; i < e; ++i) scale *= k;
  std::string frac;
  long long f = n % scale;
  for (int i = 0; i < e; ++i) {
    frac.insert(frac.begin(), digit_char(f % k));
    f /= k;
  }
  if (frac.empty()) frac = "0";
  return std::string(neg && n != 0 ? "-" : "+") + magnitude_text(n / scale, k) + "." + frac;
}

// Parity of the sort into canonical order, counting only same-register pairs.
inline int inversion_parity(const std::vector<fockarith::Mode>& modes) {
  int inv = 0;
  for (std::size_t a = 0; a < modes.size(); ++a)
    for (std::size_t b = a + 1; b < modes.size(); ++b)
      if (modes[a].reg == modes[b].reg && modes[a].site < modes[b].site) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

inline fockarith::Numeral nat(const std::string& s, int k) { return fockarith::parse_numeral(s, fockarith::Flavor::Nat, k); }
inline fockarith::Numeral integer(const std::string& s, int k) { return fockarith::parse_numeral(s, fockarith::Flavor::Int, k); }
inline fockarith::Numeral rat(const std::string& s, int k) { return fockarith::parse_numeral(s, fockarith::Flavor::Rat, k); }

inline fockarith::Mode mode(int site, int digit, int reg = 1) { return {reg, site, fockarith::ModeSymbol::digit(digit)}; }

// Every digit string of length 1..max_len at sites 1..L, leading zeros included.
inline std::vector<fockarith::BasisWord> loose_words(int k, int max_len, int reg = 1) {
  std::vector<fockarith::BasisWord> out;
  for (int L = 1; L <= max_len; ++L) {
    std::vector<int> d(static_cast<std::size_t>(L), 0);
    while (true) {
      std::vector<fockarith::Mode> modes;
      for (int i = 0; i < L; ++i) modes.push_back(mode(i + 1, d[static_cast<std::size_t>(i)], reg));
      out.push_back(fockarith::make_word(std::move(modes)));
      int i = 0;
      while (i < L && ++d[static_cast<std::size_t>(i)] == k) d[static_cast<std::size_t>(i++)] = 0;
      if (i == L) break;
    }
  }
  return out;
}

inline std::vector<fockarith::BasisWord> encode_all(const std::vector<fockarith::Numeral>& ns) {
  std::vector<fockarith::BasisWord> out;
  for (const auto& n : ns) out.push_back(fockarith::encode(n));
  return out;
}

}  // namespace support

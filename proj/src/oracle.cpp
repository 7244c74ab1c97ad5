#include "fockarith/verification.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace fockarith::verify {

namespace {

BigInt power(int base, int e) {
  BigInt p = 1;
  for (int i = 0; i < e; ++i) p *= base;
  return p;
}

long at(const Digits& d, int i) { return i >= 1 && i <= static_cast<int>(d.size()) ? d[static_cast<std::size_t>(i - 1)] : 0; }

void put(ExponentVector& e, int site, long v) {
  if (v != 0) e[site] = v;
}

Numeral blank(Flavor f, int base) {
  Numeral n;
  n.flavor = f;
  n.base = base;
  if (f == Flavor::Rat) n.frac_digits = {0};
  return n;
}

// Every digit string of length len; the top digit is nonzero when top_nonzero.
void for_each_digits(int base, int len, bool top_nonzero, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d(static_cast<std::size_t>(len), 0);
  if (top_nonzero) d.back() = 1;
  while (true) {
    fn(d);
    int i = 0;
    while (i < len) {
      auto& x = d[static_cast<std::size_t>(i)];
      const int lo = (top_nonzero && i == len - 1) ? 1 : 0;
      if (++x < base) break;
      x = lo;
      ++i;
    }
    if (i == len) return;
  }
}

}  // namespace

OracleValue oracle_normalize(BigInt numerator, int exponent, int base) {
  while (exponent > 0 && numerator % base == 0) {
    numerator /= base;
    --exponent;
  }
  if (numerator == 0) exponent = 0;
  return {numerator, exponent};
}

OracleValue oracle_value(const Numeral& n) {
  BigInt v = 0;
  for (auto it = n.int_digits.rbegin(); it != n.int_digits.rend(); ++it) v = v * n.base + *it;
  for (int d : n.frac_digits) v = v * n.base + d;
  if (n.negative) v = -v;
  return oracle_normalize(v, n.frac_len(), n.base);
}

OracleValue oracle(OracleOp op, const OracleValue& a, const OracleValue& b, int base) {
  if (op == OracleOp::Mul) return oracle_normalize(a.numerator * b.numerator, a.exponent + b.exponent, base);
  const int e = std::max(a.exponent, b.exponent);
  const BigInt x = a.numerator * power(base, e - a.exponent);
  const BigInt y = b.numerator * power(base, e - b.exponent);
  return oracle_normalize(op == OracleOp::Add ? BigInt(x + y) : BigInt(x - y), e, base);
}

bool oracle_matches(const OracleValue& v, const Numeral& n) { return oracle_value(n) == v; }

Digits digits_of(const Numeral& n) { return Digits(n.int_digits.begin(), n.int_digits.end()); }

ExponentVector exponent_vectors(const Digits& s_in, const Digits& t_in) {
  const bool swap = s_in.size() > t_in.size();
  const Digits& s = swap ? t_in : s_in;
  const Digits& t = swap ? s_in : t_in;
  const int Ls = static_cast<int>(s.size());
  const int Lt = static_cast<int>(t.size());
  ExponentVector e;
  for (int n = 0; n <= Ls - 2; ++n) {
    long E = 0;
    for (int h = 0; h <= n; ++h) E += at(s, Ls - h) * at(t, Lt - n + h);
    put(e, Lt + Ls - 1 - n, E);
  }
  for (int m = Ls; m <= Lt; ++m) {
    long G = 0;
    for (int h = 0; h <= Ls - 1; ++h) G += at(s, Ls - h) * at(t, m + 1 + h - Ls);
    put(e, m, G);
  }
  for (int l = 1; l <= Ls - 1; ++l) {
    long F = 0;
    for (int h = 0; h <= l - 1; ++h) F += at(s, l - h) * at(t, h + 1);
    put(e, l, F);
  }
  return e;
}

bool exponent_boundaries_consistent(const Digits& s_in, const Digits& t_in) {
  const bool swap = s_in.size() > t_in.size();
  const Digits& s = swap ? t_in : s_in;
  const Digits& t = swap ? s_in : t_in;
  const int Ls = static_cast<int>(s.size());
  const int Lt = static_cast<int>(t.size());
  long F = 0, G_first = 0, G_last = 0, E = 0;
  for (int h = 0; h <= Ls - 1; ++h) {
    F += at(s, Ls - h) * at(t, h + 1);
    G_first += at(s, Ls - h) * at(t, 1 + h);
    G_last += at(s, Ls - h) * at(t, Lt + 1 + h - Ls);
    E += at(s, Ls - h) * at(t, Lt - (Ls - 1) + h);
  }
  return F == G_first && G_last == E;
}

ExponentVector digit_convolution(const Digits& s, const Digits& t) {
  ExponentVector e;
  for (int a = 1; a <= static_cast<int>(s.size()); ++a)
    for (int b = 1; b <= static_cast<int>(t.size()); ++b) e[a + b - 1] += at(s, a) * at(t, b);
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return e;
}

BigInt exponent_value(const ExponentVector& e, int base) {
  BigInt v = 0;
  for (const auto& [site, x] : e) v += BigInt(x) * power(base, site - 1);
  return v;
}

std::vector<Numeral> canonical_span(Flavor f, int base, int max_len) {
  std::vector<Numeral> out;
  auto emit_signed = [&](Numeral n) {
    if (f != Flavor::Nat && !n.is_zero()) {
      n.negative = true;
      out.push_back(n);
      n.negative = false;
    }
    out.push_back(std::move(n));
  };
  if (f != Flavor::Rat) {
    for (int L = 1; L <= max_len; ++L) {
      for_each_digits(base, L, L > 1, [&](const std::vector<int>& d) {
        Numeral n = blank(f, base);
        n.int_digits = d;
        emit_signed(std::move(n));
      });
    }
    return out;
  }
  for (int a = 1; a < max_len; ++a) {
    for (int b = 1; a + b <= max_len; ++b) {
      for_each_digits(base, a, a > 1, [&](const std::vector<int>& id) {
        // Fraction digits are stored t(-1) first, so the canonical constraint
        // sits on the last entry, which for_each_digits treats as its top.
        for_each_digits(base, b, b > 1, [&](const std::vector<int>& fd) {
          Numeral n = blank(f, base);
          n.int_digits = id;
          n.frac_digits = fd;
          emit_signed(std::move(n));
        });
      });
    }
  }
  return out;
}

std::vector<Numeral> random_span(Flavor f, int base, int max_len, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, max_len), digit(0, base - 1), nonzero(1, base - 1), coin(0, 1);
  auto digits = [&](int L) {
    std::vector<int> d(static_cast<std::size_t>(L));
    for (auto& x : d) x = digit(rng);
    if (L > 1) d.back() = nonzero(rng);
    return d;
  };
  std::vector<Numeral> out;
  out.reserve(count);
  std::set<std::string> seen;
  // Small spaces may hold fewer than count words; give up after enough misses.
  for (std::size_t misses = 0; out.size() < count && misses < 64 * count;) {
    Numeral n = blank(f, base);
    n.int_digits = digits(len(rng));
    if (f == Flavor::Rat) n.frac_digits = digits(len(rng));
    if (f != Flavor::Nat) n.negative = coin(rng) == 1 && !n.is_zero();
    if (!seen.insert(format_numeral(n)).second) {
      ++misses;
      continue;
    }
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace fockarith::verify

#include "fockarith/rationals.hpp"

#include "builders.hpp"
#include "fockarith/integers.hpp"

#include <functional>

namespace fockarith::rationals {

using namespace detail;

namespace {

Op build_gamma(int j, int reg, int k) {
  if (j >= 0) return Op::zero();
  std::vector<Op> terms;
  for (int h = 0; h <= k - 2; ++h) terms.push_back(cr(reg, j, dg(h + 1)) * an(reg, j, dg(h)));
  const Op next = j == -1 ? integers::carry_plus(1, reg) : carry_fraction(j + 1, reg);
  terms.push_back(Op::product({digit_is(reg, j, 0), next, cr(reg, j, dg(0)), an(reg, j, dg(k - 1))}));
  return Op::sum(std::move(terms));
}

// Fermion padding carries the weight -(-1)^l (-1)^m, with l the sign site
// and m the lowest occupied site, so the new bottom zero costs no phase.
Op build_pad_fraction(int j, int reg, Statistics stats) {
  if (j >= -1) return Op::identity();
  const Op grow = pad_fraction(j + 1, reg) * cr(reg, j, dg(0)) * unocc(reg, j);
  if (stats == Statistics::Boson) return occ(reg, j) + grow;
  const Op weight = Op::lazy("SignParity", 0, reg) * Op::lazy("BottomParity", j, reg);
  return occ(reg, j) + Op::scale(-1, grow * weight);
}

Op build_successor_plus(int j, int reg) {
  if (j > 0) return integers::successor_plus(j, reg);
  if (j == 0) return Op::zero();
  return Op::product({trim(j, reg), carry_fraction(j, reg), pad_fraction(j, reg), P(ProjectorSpec::plus_any(reg))});
}

Op compressed_plus_adjoint(int i, int reg) { return canonical(reg, Flavor::Rat) * successor_plus_adjoint(i, reg); }

Op zero_word(int reg) { return state_projector(numeral_from_rational(0, Flavor::Rat, 2), reg); }

// The printed outer projector P_{!=0,>=j} drops results such as
// -0.15 + 0.1 = -0.05 whose remaining digits all sit below j; any nonzero
// result must be re-signed, so the outer test is plain nonzero.
Op build_minus_geq(int j, int reg) {
  const Op w = sign_flip(reg);
  const Op outer = zero_word(reg) + w * P(ProjectorSpec::nonzero(reg));
  return Op::product({outer, compressed_plus_adjoint(j, reg), w, P(ProjectorSpec::minus_any(reg)),
                      P(ProjectorSpec::nonzero_geq(reg, j))});
}

Op minus_lt_term(const Numeral& p, int j, int reg) {
  Numeral neg = p;
  neg.negative = true;
  const Op down = successor_plus_string_adjoint(p, reg);
  return Op::product({down, successor_plus(j, reg), down, sign_flip(reg), state_projector(neg, reg),
                      P(ProjectorSpec::all_zero_geq(reg, j))});
}

Op signed_steps(const Numeral& p, bool negative, int reg) {
  std::vector<Op> f;
  for (auto [i, e] : digit_steps(p)) {
    const Op step = negative ? canonical(reg, Flavor::Rat) * Op::family("R", i, reg, true) : successor(i, reg);
    f.push_back(Op::power(step, static_cast<unsigned>(e)));
  }
  return Op::product(std::move(f));
}

// Z_j of the point shift; moves cover digits, signs and the point.
Op build_shift_level(int j, int reg, int k, Statistics stats) {
  const auto syms = all_symbols(k);
  auto mv = [&](int from) { return move(reg, from, from + 1, syms); };
  if (j == 2) {
    const Op keep = nocc(reg, 2) + P(ProjectorSpec::sign_at(reg, 2, 0)) * gt0(reg, 1);
    std::vector<Op> del;
    for (int s : {+1, -1})
      for (int h = 0; h < k; ++h)
        del.push_back(Op::product({cr(reg, 2, sgn(s)), cr(reg, 1, dg(h)), an(reg, 0, dg(h)), an(reg, 1, dg(0)),
                                   an(reg, 2, sgn(s)), P(ProjectorSpec::sign_at(reg, 2, s)),
                                   P(ProjectorSpec::digit_eq(reg, 1, 0))}));
    return Op::product({shift_level(1, reg), mv(2), keep}) + shift_level(-1, reg) * Op::sum(std::move(del));
  }
  if (j >= 0) return Op::product({shift_level(j - 1, reg), mv(j), unocc(reg, j + 1)});
  if (j == -1) {
    Op append = Op::product({cr(reg, 0, ModeSymbol::point()), cr(reg, -1, dg(0)), an(reg, -1, ModeSymbol::point()),
                             unocc(reg, 0), unocc(reg, -2)});
    if (stats == Statistics::Fermion) append = append * Op::lazy("SignParity", 0, reg);
    return Op::product({occ(reg, -1), shift_level(-2, reg), mv(-1), unocc(reg, 0), occ(reg, -2)}) + append;
  }
  return Op::product({Op::product({occ(reg, j), shift_level(j - 1, reg), occ(reg, j - 1)}) + unocc(reg, j - 1), mv(j),
                      unocc(reg, j + 1)});
}

Op swap_point(int reg, int k) {
  std::vector<Op> terms;
  for (int h = 0; h < k; ++h)
    terms.push_back(Op::product({cr(reg, 0, dg(h)), an(reg, 0, ModeSymbol::point()), cr(reg, -1, ModeSymbol::point()),
                                 an(reg, -1, dg(h))}));
  return Op::sum(std::move(terms));
}

// Canonical rationals with exactly a integer and b fraction digits.
void for_each_canonical(int k, int a, int b, const std::function<void(const Numeral&)>& fn) {
  Numeral n;
  n.flavor = Flavor::Rat;
  n.base = k;
  n.int_digits.assign(static_cast<std::size_t>(a), 0);
  n.frac_digits.assign(static_cast<std::size_t>(b), 0);
  std::vector<int*> slots;
  for (auto& d : n.int_digits) slots.push_back(&d);
  for (auto& d : n.frac_digits) slots.push_back(&d);
  while (true) {
    if (is_canonical(n)) {
      n.negative = false;
      fn(n);
      if (!n.is_zero()) {
        n.negative = true;
        fn(n);
        n.negative = false;
      }
    }
    std::size_t i = 0;
    while (i < slots.size() && *slots[i] == k - 1) *slots[i++] = 0;
    if (i == slots.size()) return;
    ++*slots[i];
  }
}

}  // namespace

std::vector<std::pair<int, int>> digit_steps(const Numeral& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = p.int_len(); i >= 1; --i) out.emplace_back(i, p.int_digits[i - 1]);
  for (int i = 1; i <= p.frac_len(); ++i) out.emplace_back(-i, p.frac_digits[i - 1]);
  return out;
}

Op successor_plus_string_adjoint(const Numeral& p, int reg) {
  std::vector<Op> f;
  for (auto [i, e] : digit_steps(p)) f.push_back(Op::power(compressed_plus_adjoint(i, reg), static_cast<unsigned>(e)));
  return Op::product(std::move(f));
}

Op shift_adjoint(int reg) { return canonical(reg, Flavor::Rat) * Op::lazy("UR", 0, reg, true); }

void register_families(Registry& r, int k, Statistics stats, const ArithOptions&) {
  r.add_family("Gamma", [k](int j, int reg) { return build_gamma(j, reg, k); });
  r.add_family("Y", [stats](int j, int reg) { return build_pad_fraction(j, reg, stats); });
  r.add_family("Rp", [](int j, int reg) { return build_successor_plus(j, reg); });
  r.add_family("RmGeq", [](int j, int reg) { return build_minus_geq(j, reg); });
  r.add_family("R", [](int j, int reg) {
    if (j == 0) return Op::zero();
    return successor_plus(j, reg) + successor_minus_geq(j, reg) + successor_minus_lt(j, reg);
  });
  r.add_family("ZR", [k, stats](int j, int reg) { return build_shift_level(j, reg, k, stats); });

  r.add_lazy("Trim", [stats](int j, int reg, const BasisWord& w, bool dagger) {
    if (j >= -1) return Op::identity();
    auto bottom = bottom_mode(w, reg);
    if (!bottom || bottom->site > -1) return Op::identity();
    const int n = register_size(w, reg);
    std::vector<Op> f;
    Rational c = 1;
    if (!dagger) {
      // Remove zeros from the bottom while they sit in [j, -2].
      auto modes = w.register_modes(reg);
      int r_count = 0;
      for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
        if (it->site > -2 || it->site < j || !(it->sym == dg(0))) break;
        f.insert(f.begin(), an(reg, it->site, dg(0)));
        if (stats == Statistics::Fermion) c *= parity(n - 1 - r_count);
        ++r_count;
      }
    } else {
      // Pad zeros down to site j.
      int i = 0;
      for (int site = bottom->site - 1; site >= j; --site, ++i) {
        f.insert(f.begin(), cr(reg, site, dg(0)));
        if (stats == Statistics::Fermion) c *= parity(n + i);
      }
    }
    return Op::scale(c, Op::product(std::move(f)));
  });

  r.add_lazy("RmLt", [k](int j, int reg, const BasisWord& w, bool dagger) {
    auto n = read(w, Flavor::Rat, k, reg, true);
    if (!n || n->is_zero() || j == 0) return Op::zero();
    const Rational unit = successor_step(k, j);
    Numeral p = *n;
    p.negative = false;
    const Rational x = value_of(p).to_rational(k);
    if (x >= unit) return Op::zero();
    if (!dagger) return n->negative ? minus_lt_term(p, j, reg) : Op::zero();
    if (n->negative) return Op::zero();
    return adjoint(minus_lt_term(numeral_from_rational(unit - x, Flavor::Rat, k), j, reg));
  });

  r.add_lazy("UR", [k](int, int reg, const BasisWord& w, bool dagger) {
    auto top = top_mode(w, reg);
    if (!top || !top->sym.is_sign() || top->site < 2) return Op::zero();
    if (!dagger) return shift_level(top->site, reg) * swap_point(reg, k);
    // A sign at 2 can only come from the leading-zero branch of Z_2.
    const int T = std::max(2, top->site - 1);
    return adjoint(shift_level(T, reg) * swap_point(reg, k));
  });

  r.add_lazy("PlusR", [k](int, int src, const BasisWord& w, bool dagger) {
    auto p = read(w, Flavor::Rat, k, src, false);
    if (!p) return Op::zero();
    return signed_steps(*p, p->negative != dagger, src + 1) * state_projector(*p, src);
  });

  r.add_lazy("TimesR", [k](int, int first, const BasisWord& w, bool dagger) {
    auto p = read(w, Flavor::Rat, k, first, false);
    if (!p) return Op::zero();
    const Op add = Op::lazy("PlusR", 0, first + 1, p->negative);
    const Op u = shift(first + 1);
    const Op ud = shift_adjoint(first + 1);
    const int Ls = p->int_len(), Lt = p->frac_len();
    std::vector<Op> f{Op::power(ud, static_cast<unsigned>(Ls - 1))};
    bool first_block = true;
    for (auto [i, e] : digit_steps(*p)) {
      if (!first_block) f.push_back(u);
      first_block = false;
      f.push_back(Op::power(add, static_cast<unsigned>(e)));
    }
    f.push_back(Op::power(ud, static_cast<unsigned>(Lt)));
    f.push_back(state_projector(*p, first));
    Op term = Op::product(std::move(f));
    return dagger ? adjoint(term) : term;
  });
}

DivisionReport check_division_absence(Machine& m, const Numeral& s, const Numeral& x, int digit_bound,
                                      int literal_bound) {
  DivisionReport rep;
  const int k = m.base();
  const Numeral zero = numeral_from_rational(0, Flavor::Rat, k);
  const Op op = times(1);
  auto hits = [&](const Numeral& t) {
    const StateVector out = m.apply(op, triple_word(s, t, zero));
    return out == StateVector(triple_word(s, t, x));
  };

  for (int a = 1; a < literal_bound && !rep.witness_found; ++a)
    for (int b = 1; a + b <= literal_bound && !rep.witness_found; ++b)
      for_each_canonical(k, a, b, [&](const Numeral& t) {
        if (rep.witness_found) return;
        ++rep.literal_checked;
        if (hits(t)) {
          rep.witness_found = true;
          rep.witness = t;
        }
      });
  if (rep.witness_found) return rep;

  // Every canonical word with at most digit_bound digits lies on one of the
  // grids n * k^-b, |n| < k^digit_bound, b = 1 .. digit_bound - 1.
  const Rational sv = value_of(s).to_rational(k);
  if (sv == 0) return rep;
  const Rational target = value_of(x).to_rational(k);
  BigInt span = 1;
  for (int i = 0; i < digit_bound; ++i) span *= k;
  rep.grid_words = 0;
  for (int b = 1; b < digit_bound; ++b) {
    BigInt scale = 1;
    for (int i = 0; i < b; ++i) scale *= k;
    auto t_of = [&](const BigInt& n) { return numeral_from_rational(Rational(n, scale), Flavor::Rat, k); };
    auto product_of = [&](const BigInt& n) {
      ++rep.bisection_probes;
      const Numeral t = t_of(n);
      const BasisWord out = m.apply_word(op, triple_word(s, t, zero));
      const Rational v = value_of(decode(out, Flavor::Rat, k, 3)).to_rational(k);
      return sv > 0 ? v : Rational(-v);
    };
    const Rational goal = sv > 0 ? target : Rational(-target);
    // Smallest n in (-span, span) with f(n) >= goal, f increasing.
    BigInt lo = -span + 1, hi = span - 1;
    rep.grid_words += static_cast<std::size_t>(2 * span - 1);
    if (product_of(hi) < goal) continue;
    while (lo < hi) {
      BigInt mid = lo + (hi - lo) / 2;
      if (product_of(mid) >= goal) hi = mid; else lo = mid + 1;
    }
    if (product_of(lo) == goal && hits(t_of(lo))) {
      rep.witness_found = true;
      rep.witness = t_of(lo);
      return rep;
    }
  }
  return rep;
}

}  // namespace fockarith::rationals

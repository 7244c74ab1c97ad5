#include "fockarith/integers.hpp"

#include "builders.hpp"
#include "fockarith/naturals.hpp"

namespace fockarith::integers {

using namespace detail;

namespace {

Op plus_sign(int reg) { return P(ProjectorSpec::plus_any(reg)); }

Op build_carry_plus(int j, int reg, int k) {
  std::vector<Op> terms;
  if (j < 1) return Op::zero();
  if (j == 1) {
    for (int h = 0; h <= k - 2; ++h) terms.push_back(cr(reg, 1, dg(h + 1)) * an(reg, 1, dg(h)));
    terms.push_back(Op::product({digit_is(reg, 1, 0), carry_plus(2, reg), cr(reg, 1, dg(0)), an(reg, 1, dg(k - 1))}));
    return Op::sum(std::move(terms));
  }
  for (int h = 1; h <= k - 2; ++h) terms.push_back(cr(reg, j, dg(h + 1)) * an(reg, j, dg(h)));
  terms.push_back(Op::product({cr(reg, j, dg(1)), an(reg, j, dg(0)), nocc(reg, j + 1)}));
  terms.push_back(Op::product({digit_is(reg, j, 0), carry_plus(j + 1, reg), cr(reg, j, dg(0)), an(reg, j, dg(k - 1))}));
  terms.push_back(Op::product({cr(reg, j + 1, ModeSymbol::plus()), cr(reg, j, dg(1)), unocc(reg, j)}));
  // A carry out of the top digit meets the sign at site j; lift it.
  terms.push_back(Op::product({cr(reg, j + 1, ModeSymbol::plus()), cr(reg, j, dg(1)), an(reg, j, ModeSymbol::plus())}));
  return Op::sum(std::move(terms));
}

Op build_pad_plus(int j, int reg) {
  if (j < 1) return Op::zero();
  if (j == 1) return plus_sign(reg);
  if (j == 2) return nocc(reg, 2) * plus_sign(reg) + an(reg, 2, ModeSymbol::plus());
  std::vector<Op> terms{Op::product({unocc(reg, j), an(reg, j, ModeSymbol::plus()), gt0(reg, j - 1)}),
                        nocc(reg, j) * plus_sign(reg)};
  for (int l = 2; l <= j - 2; ++l)
    terms.push_back(Op::product({create_zeros(reg, j - 1, l + 1), an(reg, l + 1, ModeSymbol::plus()), gt0(reg, l)}));
  terms.push_back(create_zeros(reg, j - 1, 2) * an(reg, 2, ModeSymbol::plus()));
  return Op::sum(std::move(terms));
}

Op build_carry_plus_adjoint(int j, int reg, int k) {
  std::vector<Op> terms;
  if (j < 1) return Op::zero();
  if (j == 1) {
    for (int h = 0; h <= k - 2; ++h) terms.push_back(cr(reg, 1, dg(h)) * an(reg, 1, dg(h + 1)));
    terms.push_back(Op::product({cr(reg, 1, dg(k - 1)), an(reg, 1, dg(0)), carry_plus_adjoint_explicit(2, reg), digit_is(reg, 1, 0)}));
    return Op::sum(std::move(terms));
  }
  for (int h = 1; h <= k - 2; ++h) terms.push_back(cr(reg, j, dg(h)) * an(reg, j, dg(h + 1)));
  terms.push_back(Op::product({nocc(reg, j + 1), cr(reg, j, dg(0)), an(reg, j, dg(1))}));
  terms.push_back(Op::product({cr(reg, j, dg(k - 1)), an(reg, j, dg(0)), carry_plus_adjoint_explicit(j + 1, reg), digit_is(reg, j, 0)}));
  terms.push_back(Op::product({unocc(reg, j), an(reg, j, dg(1)), an(reg, j + 1, ModeSymbol::plus())}));
  terms.push_back(Op::product({cr(reg, j, ModeSymbol::plus()), an(reg, j, dg(1)), an(reg, j + 1, ModeSymbol::plus())}));
  return Op::sum(std::move(terms));
}

Op build_pad_plus_adjoint(int j, int reg) {
  if (j < 1) return Op::zero();
  if (j == 1) return plus_sign(reg);
  if (j == 2) return nocc(reg, 2) * plus_sign(reg) + cr(reg, 2, ModeSymbol::plus());
  std::vector<Op> terms{Op::product({gt0(reg, j - 1), cr(reg, j, ModeSymbol::plus()), unocc(reg, j)}),
                        nocc(reg, j) * plus_sign(reg)};
  for (int l = 2; l <= j - 2; ++l)
    terms.push_back(Op::product({gt0(reg, l), cr(reg, l + 1, ModeSymbol::plus()), annihilate_zeros(reg, l + 1, j - 1)}));
  terms.push_back(cr(reg, 2, ModeSymbol::plus()) * annihilate_zeros(reg, 2, j - 1));
  return Op::sum(std::move(terms));
}

Op compressed_plus_adjoint(int i, int reg) { return canonical(reg, Flavor::Int) * successor_plus_adjoint(i, reg); }

Op minus_geq(int j, int reg, bool semantic) {
  const Op w = sign_flip(reg);
  const Op zero_word = state_projector(numeral_from_int(0, Flavor::Int, 2), reg);
  const Op outer = semantic ? w * P(ProjectorSpec::positive_nonzero(reg)) + zero_word
                            : P(ProjectorSpec::negative_nonzero(reg)) * w + zero_word;
  return Op::product({outer, compressed_plus_adjoint(j, reg), w, P(ProjectorSpec::minus_len_geq(reg, j))});
}

// (I+_p)^dag I+_j (I+_p)^dag W P_{-p}
Op minus_lt_term(const Numeral& p, int j, int reg) {
  Numeral neg = p;
  neg.negative = true;
  const Op down = successor_plus_string_adjoint(p, reg);
  return Op::product({down, successor_plus(j, reg), down, sign_flip(reg), state_projector(neg, reg)});
}

// Term of I_{±s}: powers of I_i, or of the compressed adjoint for negative s.
Op signed_steps(const Numeral& s, bool negative, int reg) {
  std::vector<Op> f;
  for (int i = s.int_len(); i >= 1; --i) {
    const unsigned e = static_cast<unsigned>(s.int_digits[i - 1]);
    const Op step = negative ? canonical(reg, Flavor::Int) * Op::family("I", i, reg, true) : successor(i, reg);
    f.push_back(Op::power(step, e));
  }
  return Op::product(std::move(f));
}

Op shift_term(int j, int reg, Statistics stats) {
  std::vector<Op> moves;
  for (int s : {+1, -1}) moves.push_back(cr(reg, j + 2, sgn(s)) * an(reg, j + 1, sgn(s)));
  // The sign mode above the digits adds one transposition per level for
  // fermions; the extra factor keeps the phase at +1.
  const Rational c = stats == Statistics::Fermion ? -1 : 1;
  return Op::scale(c, naturals::shift_level(j, reg) * Op::sum(std::move(moves)));
}

}  // namespace

Op successor_plus_string_adjoint(const Numeral& s, int reg) {
  std::vector<Op> f;
  for (int i = 1; i <= s.int_len(); ++i)
    f.push_back(Op::power(compressed_plus_adjoint(i, reg), static_cast<unsigned>(s.int_digits[i - 1])));
  return Op::product(std::move(f));
}

void register_families(Registry& r, int k, Statistics stats, const ArithOptions&) {
  r.add_family("Kp", [k](int j, int reg) { return build_carry_plus(j, reg, k); });
  r.add_family("Zp", [](int j, int reg) { return build_pad_plus(j, reg); });
  r.add_family("Ip", [](int j, int reg) { return carry_plus(j, reg) * pad_plus(j, reg); });
  r.add_family("Kpx", [k](int j, int reg) { return build_carry_plus_adjoint(j, reg, k); }, AdjointPolicy::None);
  r.add_family("Zpx", [](int j, int reg) { return build_pad_plus_adjoint(j, reg); }, AdjointPolicy::None);
  r.add_family("ImGeq", [](int j, int reg) { return minus_geq(j, reg, false); });
  r.add_family("ImGeqSem", [](int j, int reg) { return minus_geq(j, reg, true); });
  r.add_family("I", [](int j, int reg) {
    return successor_plus(j, reg) + successor_minus_geq(j, reg) + successor_minus_lt(j, reg);
  });

  r.add_lazy("ImLt", [k](int j, int reg, const BasisWord& w, bool dagger) {
    auto n = read(w, Flavor::Int, k, reg, true);
    if (!n || n->is_zero()) return Op::zero();
    if (!dagger) {
      if (!n->negative || n->int_len() >= j) return Op::zero();
      Numeral p = *n;
      p.negative = false;
      return minus_lt_term(p, j, reg);
    }
    // Inverse direction: +x with 0 < x < k^{j-1} came from -(k^{j-1} - x).
    if (n->negative) return Op::zero();
    const Rational unit = successor_step(k, j);
    const Rational x = value_of(*n).to_rational(k);
    if (x >= unit) return Op::zero();
    return adjoint(minus_lt_term(numeral_from_rational(unit - x, Flavor::Int, k), j, reg));
  });

  r.add_lazy("UI", [stats](int, int reg, const BasisWord& w, bool dagger) {
    auto top = top_mode(w, reg);
    if (!top || !top->sym.is_sign()) return Op::zero();
    const int j = top->site - (dagger ? 2 : 1);
    if (j < 1) return Op::zero();
    return dagger ? adjoint(shift_term(j, reg, stats)) : shift_term(j, reg, stats);
  });

  r.add_lazy("PlusI", [k](int, int src, const BasisWord& w, bool dagger) {
    auto s = read(w, Flavor::Int, k, src, false);
    if (!s) return Op::zero();
    return signed_steps(*s, s->negative != dagger, src + 1) * state_projector(*s, src);
  });

  r.add_lazy("TimesI", [k](int, int first, const BasisWord& w, bool dagger) {
    auto s = read(w, Flavor::Int, k, first, false);
    if (!s) return Op::zero();
    const Op add = Op::lazy("PlusI", 0, first + 1, s->negative);
    const Op u = shift(first + 1);
    const int L = s->int_len();
    std::vector<Op> f{Op::power(shift_adjoint(first + 1), static_cast<unsigned>(L - 1))};
    for (int i = L; i >= 1; --i) {
      f.push_back(Op::power(add, static_cast<unsigned>(s->int_digits[i - 1])));
      if (i > 1) f.push_back(u);
    }
    f.push_back(state_projector(*s, first));
    Op term = Op::product(std::move(f));
    return dagger ? adjoint(term) : term;
  });
}

DivisionReport check_division_absence(Machine& m, const Numeral& s, const Numeral& x, long bound) {
  DivisionReport rep;
  const Numeral zero = numeral_from_int(0, Flavor::Int, m.base());
  const Op op = times(1);
  for (long v = -bound; v <= bound; ++v) {
    const Numeral t = numeral_from_int(v, Flavor::Int, m.base());
    ++rep.checked;
    const StateVector out = m.apply(op, triple_word(s, t, zero));
    if (out == StateVector(triple_word(s, t, x))) {
      rep.witness_found = true;
      rep.witness = t;
      return rep;
    }
  }
  return rep;
}

}  // namespace fockarith::integers

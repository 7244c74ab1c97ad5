#include "fockarith/naturals.hpp"

#include "builders.hpp"

namespace fockarith::naturals {

using namespace detail;

namespace {

Op build_carry(int j, int reg, int k, bool drop_carry) {
  std::vector<Op> terms;
  if (j < 1) return Op::zero();
  if (j == 1) {
    for (int h = 0; h <= k - 2; ++h) terms.push_back(cr(reg, 1, dg(h + 1)) * an(reg, 1, dg(h)));
    terms.push_back(Op::product({digit_is(reg, 1, 0), carry(2, reg), cr(reg, 1, dg(0)), an(reg, 1, dg(k - 1))}));
    return Op::sum(std::move(terms));
  }
  for (int h = 1; h <= k - 2; ++h) terms.push_back(cr(reg, j, dg(h + 1)) * an(reg, j, dg(h)));
  terms.push_back(Op::product({cr(reg, j, dg(1)), an(reg, j, dg(0)), occ(reg, j + 1)}));
  if (!drop_carry) terms.push_back(Op::product({digit_is(reg, j, 0), carry(j + 1, reg), cr(reg, j, dg(0)), an(reg, j, dg(k - 1))}));
  terms.push_back(Op::product({unocc(reg, j + 1), cr(reg, j, dg(1)), unocc(reg, j)}));
  return Op::sum(std::move(terms));
}

Op build_pad(int j, int reg) {
  if (j <= 2) return Op::identity();
  std::vector<Op> terms{occ(reg, j), unocc(reg, j) * gt0(reg, j - 1)};
  for (int l = 2; l <= j - 2; ++l)
    terms.push_back(Op::product({create_zeros(reg, j - 1, l + 1), unocc(reg, l + 1), gt0(reg, l)}));
  terms.push_back(create_zeros(reg, j - 1, 2) * unocc(reg, 2));
  return Op::sum(std::move(terms));
}

// Q_m = a†_{0,m}(P_unocc,m P_{>0,m-1} + Q_{m-1}), Q_2 = a†_{0,2} P_unocc,2.
Op build_q(int m, int reg) {
  if (m < 2) return Op::zero();
  if (m == 2) return cr(reg, 2, dg(0)) * unocc(reg, 2);
  return cr(reg, m, dg(0)) * (unocc(reg, m) * gt0(reg, m - 1) + Op::family("Q", m - 1, reg));
}

Op build_pad_recursive(int j, int reg) {
  if (j <= 2) return Op::identity();
  return occ(reg, j) + unocc(reg, j) * gt0(reg, j - 1) + Op::family("Q", j - 1, reg);
}

Op build_carry_adjoint(int j, int reg, int k) {
  std::vector<Op> terms;
  if (j < 1) return Op::zero();
  if (j == 1) {
    for (int h = 0; h <= k - 2; ++h) terms.push_back(cr(reg, 1, dg(h)) * an(reg, 1, dg(h + 1)));
    terms.push_back(Op::product({cr(reg, 1, dg(k - 1)), an(reg, 1, dg(0)), carry_adjoint_explicit(2, reg), digit_is(reg, 1, 0)}));
    return Op::sum(std::move(terms));
  }
  for (int h = 1; h <= k - 2; ++h) terms.push_back(cr(reg, j, dg(h)) * an(reg, j, dg(h + 1)));
  terms.push_back(Op::product({occ(reg, j + 1), cr(reg, j, dg(0)), an(reg, j, dg(1))}));
  terms.push_back(Op::product({cr(reg, j, dg(k - 1)), an(reg, j, dg(0)), carry_adjoint_explicit(j + 1, reg), digit_is(reg, j, 0)}));
  terms.push_back(Op::product({unocc(reg, j), an(reg, j, dg(1)), unocc(reg, j + 1)}));
  return Op::sum(std::move(terms));
}

// The printed first term P_{>0,j}P_unocc,j can never fire; it is read as
// P_unocc,j P_{>0,j-1}, the adjoint of the matching forward term.
Op build_pad_adjoint(int j, int reg) {
  if (j <= 2) return Op::identity();
  std::vector<Op> terms{gt0(reg, j - 1) * unocc(reg, j), occ(reg, j)};
  for (int l = 2; l <= j - 2; ++l)
    terms.push_back(Op::product({gt0(reg, l), unocc(reg, l + 1), annihilate_zeros(reg, l + 1, j - 1)}));
  terms.push_back(unocc(reg, 2) * annihilate_zeros(reg, 2, j - 1));
  return Op::sum(std::move(terms));
}

Op build_shift_level(int j, int reg, int k, Statistics stats) {
  if (j < 1) return Op::zero();
  std::vector<Op> terms;
  if (j == 1) {
    for (int h = 0; h < k; ++h) terms.push_back(Op::product({cr(reg, 2, dg(h)), cr(reg, 1, dg(0)), an(reg, 1, dg(h))}));
    return Op::sum(std::move(terms));
  }
  for (int h = 0; h < k; ++h) terms.push_back(cr(reg, j + 1, dg(h)) * an(reg, j, dg(h)));
  const Rational sg = stats == Statistics::Fermion ? -1 : 1;
  return Op::scale(sg, shift_level(j - 1, reg) * Op::sum(std::move(terms)));
}

Op shift_term(int j, int reg) { return shift_level(j, reg) * unocc(reg, j + 1); }

}  // namespace

void register_families(Registry& r, int k, Statistics stats, const ArithOptions& opts) {
  const bool drop = opts.drop_carry;
  r.add_family("N", [k, drop](int j, int reg) { return build_carry(j, reg, k, drop); });
  r.add_family("Z", [](int j, int reg) { return build_pad(j, reg); });
  r.add_family("Q", [](int m, int reg) { return build_q(m, reg); });
  r.add_family("Zrec", [](int j, int reg) { return build_pad_recursive(j, reg); });
  const char* zname = opts.recursive_z ? "Zrec" : "Z";
  r.add_family("V", [zname](int j, int reg) { return carry(j, reg) * Op::family(zname, j, reg); });
  r.add_family("Nx", [k](int j, int reg) { return build_carry_adjoint(j, reg, k); }, AdjointPolicy::None);
  r.add_family("Zx", [](int j, int reg) { return build_pad_adjoint(j, reg); }, AdjointPolicy::None);
  r.add_family("U", [k, stats](int j, int reg) { return build_shift_level(j, reg, k, stats); });

  // Only the level matching the top site can act, so pick it directly.
  r.add_lazy("UN", [](int, int reg, const BasisWord& w, bool dagger) {
    auto top = top_mode(w, reg);
    if (!top || !top->sym.is_digit()) return Op::zero();
    const int j = dagger ? top->site - 1 : top->site;
    if (j < 1) return Op::zero();
    return dagger ? adjoint(shift_term(j, reg)) : shift_term(j, reg);
  });

  // +~ reads register src classically and applies V powers to src + 1.
  r.add_lazy("PlusN", [k](int, int src, const BasisWord& w, bool dagger) {
    auto s = read(w, Flavor::Nat, k, src, false);
    if (!s) return Op::zero();
    std::vector<Op> f;
    if (!dagger) {
      for (int i = s->int_len(); i >= 1; --i) f.push_back(Op::power(successor(i, src + 1), s->int_digits[i - 1]));
    } else {
      const Op c = canonical(src + 1, Flavor::Nat);
      for (int i = 1; i <= s->int_len(); ++i)
        f.push_back(Op::power(c * successor_adjoint(i, src + 1), s->int_digits[i - 1]));
    }
    f.push_back(state_projector(*s, src));
    return Op::product(std::move(f));
  });

  r.add_lazy("TimesN", [k](int, int first, const BasisWord& w, bool dagger) {
    auto s = read(w, Flavor::Nat, k, first, false);
    if (!s) return Op::zero();
    const Op add = plus(first + 1);
    const Op u = shift(first + 1);
    const int L = s->int_len();
    std::vector<Op> f{Op::power(shift_adjoint(first + 1), L - 1)};
    for (int i = L; i >= 1; --i) {
      f.push_back(Op::power(add, s->int_digits[i - 1]));
      if (i > 1) f.push_back(u);
    }
    f.push_back(state_projector(*s, first));
    Op term = Op::product(std::move(f));
    return dagger ? adjoint(term) : term;
  });
}

}  // namespace fockarith::naturals

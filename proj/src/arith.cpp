#include "fockarith/arith.hpp"

#include "builders.hpp"
#include "fockarith/integers.hpp"
#include "fockarith/naturals.hpp"
#include "fockarith/rationals.hpp"

namespace fockarith {

using namespace detail;

namespace {

int flavor_code(Flavor f) {
  switch (f) {
    case Flavor::Nat: return 0;
    case Flavor::Int: return 1;
    case Flavor::Rat: return 2;
  }
  return 0;
}

void register_common(Registry& r) {
  r.add_lazy("W", [](int, int reg, const BasisWord& w, bool) {
    for (const auto& m : w.modes()) {
      if (m.reg != reg || !m.sym.is_sign()) continue;
      const ModeSymbol other = m.sym.is_plus() ? ModeSymbol::minus() : ModeSymbol::plus();
      return cr(reg, m.site, other) * an(reg, m.site, m.sym);
    }
    return Op::zero();
  });
  // sum_l (-1)^(l + offset) P_{±,l}
  r.add_lazy("SignParity", [](int offset, int reg, const BasisWord& w, bool) {
    auto top = top_mode(w, reg);
    if (!top || !top->sym.is_sign()) return Op::zero();
    return Op::scale(parity(top->site + offset), P(ProjectorSpec::sign_at(reg, top->site, 0)));
  });
  // sum_{m=j+1}^{-1} (-1)^m P_occ,m P_unocc,m-1
  // Padding words can be momentarily gapped, so m is the lowest site of the
  // occupied run, not the lowest occupied site.
  r.add_lazy("BottomParity", [](int j, int reg, const BasisWord& w, bool) {
    std::vector<Op> terms;
    for (int m = j + 1; m <= -1; ++m) {
      if (w.at(reg, m) && !w.at(reg, m - 1)) terms.push_back(Op::scale(parity(m), occ(reg, m) * unocc(reg, m - 1)));
    }
    return Op::sum(std::move(terms));
  });
}

BasisWord join(std::initializer_list<std::pair<const Numeral*, int>> parts) {
  std::vector<Mode> modes;
  for (auto [n, reg] : parts) {
    auto m = encode_modes(*n, reg);
    modes.insert(modes.end(), m.begin(), m.end());
  }
  return make_word(std::move(modes));
}

void require_canonical(const Numeral& n, Flavor f) {
  if (n.flavor != f) throw DomainError(std::string("expected flavor ") + to_string(f));
  validate_digits(n);
  if (!is_canonical(n)) {
    if (n.negative && n.is_zero()) throw NegativeZero(format_numeral(n));
    throw NonCanonical(format_numeral(n));
  }
}

Numeral result_register(Machine& m, const Op& op, const BasisWord& in, Flavor f, int reg) {
  BasisWord out;
  try {
    out = m.apply_word(op, in);
  } catch (const EmptyResult& e) {
    throw DomainError(std::string("operator annihilates the input (") + e.what() + ")");
  }
  return decode(out, f, m.base(), reg);
}

}  // namespace

std::shared_ptr<Registry> make_registry(int base, Statistics stats, ArithOptions opts) {
  if (base < 2) throw InvalidDigit("base must be >= 2");
  auto r = std::make_shared<Registry>();
  register_common(*r);
  naturals::register_families(*r, base, stats, opts);
  integers::register_families(*r, base, stats, opts);
  rationals::register_families(*r, base, stats, opts);
  return r;
}

Op number_space(int reg, Flavor f, bool canonical) {
  return Op::projector(ProjectorSpec::number_word(reg, flavor_code(f), canonical));
}

Op sign_flip(int reg) { return Op::lazy("W", 0, reg); }

Machine::Machine(int base, Statistics stats, ArithOptions opts, EvalOptions eval)
    : base_(base), stats_(stats), opts_(opts), registry_(make_registry(base, stats, opts)), ev_(registry_, stats, eval) {}

BasisWord Machine::apply_word(const Op& e, const BasisWord& w) {
  const StateVector v = ev_.apply(e, w);
  if (v.empty()) throw EmptyResult("operator annihilates the word");
  if (v.size() != 1) throw DomainError("image is a superposition of " + std::to_string(v.size()) + " words");
  const auto& [word, amp] = *v.terms().begin();
  if (amp != 1) throw DomainError("image amplitude " + format_rational(amp) + " != 1");
  return word;
}

Op successor_op(Flavor f, int j, int reg) {
  switch (f) {
    case Flavor::Nat: return naturals::successor(j, reg);
    case Flavor::Int: return integers::successor(j, reg);
    case Flavor::Rat: return rationals::successor(j, reg);
  }
  return Op::zero();
}

Op successor_adjoint_op(Flavor f, int j, int reg) {
  return number_space(reg, f, true) * adjoint(successor_op(f, j, reg));
}

Op plus_op(Flavor f, int src) {
  switch (f) {
    case Flavor::Nat: return naturals::plus(src);
    case Flavor::Int: return integers::plus(src);
    case Flavor::Rat: return rationals::plus(src);
  }
  return Op::zero();
}

Op minus_op(Flavor f, int src) { return adjoint(plus_op(f, src)); }

Op times_op(Flavor f, int first) {
  switch (f) {
    case Flavor::Nat: return naturals::times(first);
    case Flavor::Int: return integers::times(first);
    case Flavor::Rat: return rationals::times(first);
  }
  return Op::zero();
}

Op shift_op(Flavor f, int reg) {
  switch (f) {
    case Flavor::Nat: return naturals::shift(reg);
    case Flavor::Int: return integers::shift(reg);
    case Flavor::Rat: return rationals::shift(reg);
  }
  return Op::zero();
}

Op shift_adjoint_op(Flavor f, int reg) {
  switch (f) {
    case Flavor::Nat: return naturals::shift_adjoint(reg);
    case Flavor::Int: return integers::shift_adjoint(reg);
    case Flavor::Rat: return rationals::shift_adjoint(reg);
  }
  return Op::zero();
}

Rational successor_step(int base, int j) {
  if (j == 0) throw DomainError("successor index 0 does not exist");
  Rational v = 1;
  if (j > 0) {
    for (int i = 1; i < j; ++i) v *= base;
  } else {
    for (int i = 0; i < -j; ++i) v /= base;
  }
  return v;
}

int next_successor_index(int j) { return j == -1 ? 1 : j + 1; }

BasisWord pair_word(const Numeral& a, const Numeral& b) { return join({{&a, 1}, {&b, 2}}); }

BasisWord triple_word(const Numeral& a, const Numeral& b, const Numeral& c) {
  return join({{&a, 1}, {&b, 2}, {&c, 3}});
}

Numeral successor(Machine& m, const Numeral& n, int j, unsigned iterations) {
  require_canonical(n, n.flavor);
  if (j == 0 || (n.flavor != Flavor::Rat && j < 1)) throw DomainError("invalid successor index " + std::to_string(j));
  return result_register(m, Op::power(successor_op(n.flavor, j), iterations), encode(n), n.flavor, 1);
}

Numeral predecessor(Machine& m, const Numeral& n, int j, unsigned iterations) {
  require_canonical(n, n.flavor);
  if (j == 0 || (n.flavor != Flavor::Rat && j < 1)) throw DomainError("invalid successor index " + std::to_string(j));
  return result_register(m, Op::power(successor_adjoint_op(n.flavor, j), iterations), encode(n), n.flavor, 1);
}

Numeral add(Machine& m, const Numeral& s, const Numeral& t) {
  try {
    require_canonical(s, s.flavor);
    require_canonical(t, s.flavor);
  } catch (const Error& e) {
    throw MalformedPair(e.what());
  }
  return result_register(m, plus_op(s.flavor), pair_word(s, t), s.flavor, 2);
}

Numeral subtract(Machine& m, const Numeral& s, const Numeral& t) {
  try {
    require_canonical(s, s.flavor);
    require_canonical(t, s.flavor);
  } catch (const Error& e) {
    throw MalformedPair(e.what());
  }
  return result_register(m, minus_op(s.flavor), pair_word(s, t), s.flavor, 2);
}

Numeral multiply(Machine& m, const Numeral& s, const Numeral& t, const Numeral& x) {
  try {
    require_canonical(s, s.flavor);
    require_canonical(t, s.flavor);
    require_canonical(x, s.flavor);
  } catch (const Error& e) {
    throw MalformedTriple(e.what());
  }
  return result_register(m, times_op(s.flavor), triple_word(s, t, x), s.flavor, 3);
}

}  // namespace fockarith

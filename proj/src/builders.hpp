#pragma once

// Helpers shared by the natural, integer and rational builders. Internal.

#include "fockarith/arith.hpp"
#include "fockarith/errors.hpp"
#include "fockarith/numeral.hpp"
#include "fockarith/operator.hpp"

#include <optional>
#include <vector>

namespace fockarith::detail {

inline ModeSymbol dg(int h) { return ModeSymbol::digit(h); }
inline ModeSymbol sgn(int s) { return s > 0 ? ModeSymbol::plus() : ModeSymbol::minus(); }
inline int parity(long n) { return (n % 2 == 0) ? 1 : -1; }

inline Op P(const ProjectorSpec& p) { return Op::projector(p); }
inline Op occ(int reg, int j) { return P(ProjectorSpec::occ(reg, j)); }
inline Op unocc(int reg, int j) { return P(ProjectorSpec::unocc(reg, j)); }
inline Op gt0(int reg, int j) { return P(ProjectorSpec::gt_zero(reg, j)); }
inline Op nocc(int reg, int j) { return P(ProjectorSpec::num_occ(reg, j)); }
// Carry recursions sit between projectors implied by their neighbours, so
// the structural adjoint tests the local digit before recursing upward.
inline Op digit_is(int reg, int j, int h) { return P(ProjectorSpec::digit_eq(reg, j, h)); }

// a†_{0,hi} ... a†_{0,lo}; the lowest site is created first. Identity when hi < lo.
inline Op create_zeros(int reg, int hi, int lo) {
  std::vector<Op> f;
  for (int s = hi; s >= lo; --s) f.push_back(cr(reg, s, dg(0)));
  return Op::product(std::move(f));
}

// a_{0,lo} ... a_{0,hi}; the highest site is removed first.
inline Op annihilate_zeros(int reg, int lo, int hi) {
  std::vector<Op> f;
  for (int s = lo; s <= hi; ++s) f.push_back(an(reg, s, dg(0)));
  return Op::product(std::move(f));
}

inline std::vector<ModeSymbol> all_symbols(int base) {
  std::vector<ModeSymbol> out;
  for (int h = 0; h < base; ++h) out.push_back(dg(h));
  out.push_back(ModeSymbol::plus());
  out.push_back(ModeSymbol::minus());
  out.push_back(ModeSymbol::point());
  return out;
}

// sum over symbols of a†_{s,to} a_{s,from}
inline Op move(int reg, int from, int to, const std::vector<ModeSymbol>& syms) {
  std::vector<Op> terms;
  for (auto s : syms) terms.push_back(cr(reg, to, s) * an(reg, from, s));
  return Op::sum(std::move(terms));
}

inline Op state_projector(const Numeral& n, int reg) {
  return P(ProjectorSpec::state_eq(reg, encode_modes(n, reg)));
}

inline Op canonical(int reg, Flavor f) { return number_space(reg, f, true); }

inline std::optional<Numeral> read(const BasisWord& w, Flavor f, int base, int reg, bool strict) {
  try {
    return strict ? decode(w, f, base, reg) : decode_loose(w, f, base, reg);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Highest / lowest occupied site of a register.
inline std::optional<Mode> top_mode(const BasisWord& w, int reg) {
  for (const auto& m : w.modes())
    if (m.reg == reg) return m;
  return std::nullopt;
}
inline std::optional<Mode> bottom_mode(const BasisWord& w, int reg) {
  std::optional<Mode> out;
  for (const auto& m : w.modes())
    if (m.reg == reg) out = m;
  return out;
}
inline int register_size(const BasisWord& w, int reg) {
  int n = 0;
  for (const auto& m : w.modes())
    if (m.reg == reg) ++n;
  return n;
}

}  // namespace fockarith::detail

#pragma once

#include "fockarith/arith.hpp"

namespace fockarith::integers {

// Registers Kp, Zp, Ip, Kpx, Zpx, ImGeq, ImGeqSem, I and the lazy nodes
// ImLt, UI, PlusI, TimesI. Needs the natural families (U) and W.
void register_families(Registry& r, int base, Statistics stats, const ArithOptions& opts);

[[nodiscard]] inline Op carry_plus(int j, int reg = 1) { return Op::family("Kp", j, reg); }
[[nodiscard]] inline Op pad_plus(int j, int reg = 1) { return Op::family("Zp", j, reg); }
// I+_j = K+_j Z+_j on nonnegative words.
[[nodiscard]] inline Op successor_plus(int j, int reg = 1) { return Op::family("Ip", j, reg); }
[[nodiscard]] inline Op successor_plus_adjoint(int j, int reg = 1) { return Op::family("Ip", j, reg, true); }
[[nodiscard]] inline Op carry_plus_adjoint_explicit(int j, int reg = 1) { return Op::family("Kpx", j, reg); }
[[nodiscard]] inline Op pad_plus_adjoint_explicit(int j, int reg = 1) { return Op::family("Zpx", j, reg); }
// I-_{>=j}: negative words with at least j digits. Formula form and the
// reading that tests positivity before the final sign flip.
[[nodiscard]] inline Op successor_minus_geq(int j, int reg = 1) { return Op::family("ImGeq", j, reg); }
[[nodiscard]] inline Op successor_minus_geq_semantic(int j, int reg = 1) { return Op::family("ImGeqSem", j, reg); }
// I-_{<j}: negative words with fewer than j digits (sign changes).
[[nodiscard]] inline Op successor_minus_lt(int j, int reg = 1) { return Op::lazy("ImLt", j, reg); }
[[nodiscard]] inline Op successor(int j, int reg = 1) { return Op::family("I", j, reg); }
[[nodiscard]] inline Op shift(int reg = 1) { return Op::lazy("UI", 0, reg); }
[[nodiscard]] inline Op shift_adjoint(int reg = 1) { return Op::lazy("UI", 0, reg, true); }
[[nodiscard]] inline Op plus(int src = 1) { return Op::lazy("PlusI", 0, src); }
[[nodiscard]] inline Op times(int first = 1) { return Op::lazy("TimesI", 0, first); }

// (I+_s)^dag = prod_i (P_canon (I+_i)^dag)^{s(i)} for a nonnegative digit string.
[[nodiscard]] Op successor_plus_string_adjoint(const Numeral& s, int reg = 1);

struct DivisionReport {
  bool witness_found = false;
  Numeral witness;          // valid when witness_found
  std::size_t checked = 0;  // candidate words tried
};

// Scans every integer t with |t| <= bound for x~|s, t, +0> = |s, t, x>.
[[nodiscard]] DivisionReport check_division_absence(Machine& m, const Numeral& s, const Numeral& x, long bound);

}  // namespace fockarith::integers

#pragma once

#include "fockarith/arith.hpp"

#include <vector>

namespace fockarith::rationals {

// Registers Gamma, Y, Rp, RmGeq, R, ZR and the lazy nodes Trim, RmLt, UR,
// PlusR, TimesR. Needs the integer families.
void register_families(Registry& r, int base, Statistics stats, const ArithOptions& opts);

[[nodiscard]] inline Op carry_fraction(int j, int reg = 1) { return Op::family("Gamma", j, reg); }
[[nodiscard]] inline Op pad_fraction(int j, int reg = 1) { return Op::family("Y", j, reg); }
// Strips the trailing zeros at sites [j, -2] that a carry can leave behind.
[[nodiscard]] inline Op trim(int j, int reg = 1) { return Op::lazy("Trim", j, reg); }
[[nodiscard]] inline Op successor_plus(int j, int reg = 1) { return Op::family("Rp", j, reg); }
[[nodiscard]] inline Op successor_plus_adjoint(int j, int reg = 1) { return Op::family("Rp", j, reg, true); }
[[nodiscard]] inline Op successor_minus_geq(int j, int reg = 1) { return Op::family("RmGeq", j, reg); }
[[nodiscard]] inline Op successor_minus_lt(int j, int reg = 1) { return Op::lazy("RmLt", j, reg); }
[[nodiscard]] inline Op successor(int j, int reg = 1) { return Op::family("R", j, reg); }
[[nodiscard]] inline Op shift_level(int j, int reg = 1) { return Op::family("ZR", j, reg); }
[[nodiscard]] inline Op shift(int reg = 1) { return Op::lazy("UR", 0, reg); }
// Compressed onto canonical words: the raw adjoint also reaches words with
// stray zeros, which the shift maps onto the same image.
[[nodiscard]] Op shift_adjoint(int reg = 1);
[[nodiscard]] inline Op plus(int src = 1) { return Op::lazy("PlusR", 0, src); }
[[nodiscard]] inline Op times(int first = 1) { return Op::lazy("TimesR", 0, first); }

// Successor indices touched by a numeral, paired with digit exponents:
// (L_s, s(L_s)) ... (1, s(1)) (-1, t(-1)) ... (-L_t, t(-L_t)).
[[nodiscard]] std::vector<std::pair<int, int>> digit_steps(const Numeral& p);

// (R+_p)^dag for a nonnegative numeral, each factor compressed.
[[nodiscard]] Op successor_plus_string_adjoint(const Numeral& p, int reg = 1);

struct DivisionReport {
  bool witness_found = false;
  Numeral witness;
  std::size_t literal_checked = 0;    // candidates evaluated one by one
  std::size_t bisection_probes = 0;   // operator calls made by the grid search
  std::size_t grid_words = 0;         // canonical words covered by the grid search
};

// Looks for t with x~|s, t, +0.0> = |s, t, x> among canonical rationals whose
// digit count (integer plus fraction) is at most digit_bound. Words with at
// most literal_bound digits are all tried directly. The rest are covered by a
// bisection per fraction length that relies on t -> s*t being monotone
// (s > 0), which the caller verifies separately.
[[nodiscard]] DivisionReport check_division_absence(Machine& m, const Numeral& s, const Numeral& x, int digit_bound,
                                                    int literal_bound);

}  // namespace fockarith::rationals

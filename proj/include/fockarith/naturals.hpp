#pragma once

#include "fockarith/arith.hpp"

namespace fockarith::naturals {

// Registers N, Z, Q, Zrec, V, Nx, Zx, U and the lazy nodes UN, PlusN, TimesN.
void register_families(Registry& r, int base, Statistics stats, const ArithOptions& opts);

[[nodiscard]] inline Op carry(int j, int reg = 1) { return Op::family("N", j, reg); }
[[nodiscard]] inline Op pad(int j, int reg = 1) { return Op::family("Z", j, reg); }
[[nodiscard]] inline Op pad_recursive(int j, int reg = 1) { return Op::family("Zrec", j, reg); }
[[nodiscard]] inline Op successor(int j, int reg = 1) { return Op::family("V", j, reg); }
// Structural adjoint V_j^dag = Z_j^dag N_j^dag, uncompressed.
[[nodiscard]] inline Op successor_adjoint(int j, int reg = 1) { return Op::family("V", j, reg, true); }
// The hand-written adjoint forms, kept for cross-checks against the structural ones.
[[nodiscard]] inline Op carry_adjoint_explicit(int j, int reg = 1) { return Op::family("Nx", j, reg); }
[[nodiscard]] inline Op pad_adjoint_explicit(int j, int reg = 1) { return Op::family("Zx", j, reg); }
// Level operator U_j of the digit shift.
[[nodiscard]] inline Op shift_level(int j, int reg = 1) { return Op::family("U", j, reg); }
// U = sum_j U_j P_unocc,j+1 (multiplication by k).
[[nodiscard]] inline Op shift(int reg = 1) { return Op::lazy("UN", 0, reg); }
[[nodiscard]] inline Op shift_adjoint(int reg = 1) { return Op::lazy("UN", 0, reg, true); }
[[nodiscard]] inline Op plus(int src = 1) { return Op::lazy("PlusN", 0, src); }
[[nodiscard]] inline Op times(int first = 1) { return Op::lazy("TimesN", 0, first); }

}  // namespace fockarith::naturals

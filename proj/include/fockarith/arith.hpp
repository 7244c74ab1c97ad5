#pragma once

#include "fockarith/errors.hpp"
#include "fockarith/numeral.hpp"
#include "fockarith/operator.hpp"

#include <memory>

namespace fockarith {

struct ArithOptions {
  // Natural padding through the recursive Q form instead of the explicit sum.
  bool recursive_z = false;
  // Planted defect used to prove the axiom suite can fail: N_j (j >= 2)
  // loses its carry term.
  bool drop_carry = false;
};

// A registry with every number-module family for one base and statistics.
[[nodiscard]] std::shared_ptr<Registry> make_registry(int base, Statistics stats, ArithOptions opts = {});

// Projector onto numeral words of a flavor. Loose words may carry leading or
// trailing zeros and "-0".
[[nodiscard]] Op number_space(int reg, Flavor f, bool canonical);
// W: swaps '+' and '-' wherever the sign sits.
[[nodiscard]] Op sign_flip(int reg = 1);

// Registry + evaluator for a fixed base and statistics. Not thread-safe.
class Machine {
 public:
  Machine(int base, Statistics stats, ArithOptions opts = {}, EvalOptions eval = {});

  [[nodiscard]] int base() const { return base_; }
  [[nodiscard]] Statistics stats() const { return stats_; }
  [[nodiscard]] const ArithOptions& options() const { return opts_; }
  [[nodiscard]] Evaluator& ev() { return ev_; }
  [[nodiscard]] const Registry& registry() const { return *registry_; }
  [[nodiscard]] std::shared_ptr<const Registry> registry_ptr() const { return registry_; }

  [[nodiscard]] StateVector apply(const Op& e, const BasisWord& w) { return ev_.apply(e, w); }
  [[nodiscard]] StateVector apply(const Op& e, const StateVector& v) { return ev_.apply(e, v); }
  // The single image word of w. Throws EmptyResult when e annihilates w and
  // DomainError when the image is a superposition or has amplitude != 1.
  [[nodiscard]] BasisWord apply_word(const Op& e, const BasisWord& w);

 private:
  int base_;
  Statistics stats_;
  ArithOptions opts_;
  std::shared_ptr<const Registry> registry_;
  Evaluator ev_;
};

// Flavor-generic operator handles. Registers: successor acts on `reg`; plus
// reads `src` and adds into src + 1; times reads first, first + 1 and adds
// into first + 2.
[[nodiscard]] Op successor_op(Flavor f, int j, int reg = 1);
[[nodiscard]] Op successor_adjoint_op(Flavor f, int j, int reg = 1);  // compressed onto canonical words
[[nodiscard]] Op plus_op(Flavor f, int src = 1);
[[nodiscard]] Op minus_op(Flavor f, int src = 1);  // adjoint of plus_op
[[nodiscard]] Op times_op(Flavor f, int first = 1);
[[nodiscard]] Op shift_op(Flavor f, int reg = 1);
[[nodiscard]] Op shift_adjoint_op(Flavor f, int reg = 1);

// Value added by the successor of index j: k^(j-1) for j > 0, k^j for j < 0.
[[nodiscard]] Rational successor_step(int base, int j);
// Index following j in the power law (R_j)^k = R_{next(j)}; site 0 is skipped.
[[nodiscard]] int next_successor_index(int j);

[[nodiscard]] BasisWord pair_word(const Numeral& a, const Numeral& b);
[[nodiscard]] BasisWord triple_word(const Numeral& a, const Numeral& b, const Numeral& c);

// Operator-path arithmetic on numerals. All of these route through the
// evaluator; none consult exact arithmetic. DomainError when the operator
// annihilates the input (e.g. a natural subtraction below zero).
[[nodiscard]] Numeral successor(Machine& m, const Numeral& n, int j, unsigned iterations = 1);
[[nodiscard]] Numeral predecessor(Machine& m, const Numeral& n, int j, unsigned iterations = 1);
[[nodiscard]] Numeral add(Machine& m, const Numeral& s, const Numeral& t);       // t + s
[[nodiscard]] Numeral subtract(Machine& m, const Numeral& s, const Numeral& t);  // t - s
[[nodiscard]] Numeral multiply(Machine& m, const Numeral& s, const Numeral& t, const Numeral& x);  // x + s*t

}  // namespace fockarith

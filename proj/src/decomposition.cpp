#include "builders.hpp"
#include "fockarith/integers.hpp"
#include "fockarith/verification.hpp"

#include <sstream>

namespace fockarith::verify {

using namespace detail;

namespace {

Numeral natural(const BigInt& v, int base) { return numeral_from_int(v, Flavor::Nat, base); }

std::string text(const ExponentVector& e) {
  std::ostringstream os;
  os << "{";
  for (const auto& [site, x] : e) os << " " << site << ":" << x;
  os << " }";
  return os.str();
}

}  // namespace

Numeral reconstruct(Machine& m, const ExponentVector& e) {
  std::vector<Op> f;
  for (auto it = e.rbegin(); it != e.rend(); ++it)
    f.push_back(Op::power(successor_op(Flavor::Nat, it->first), static_cast<unsigned>(it->second)));
  const BasisWord zero = encode(natural(0, m.base()));
  return decode(m.apply_word(Op::product(std::move(f)), zero), Flavor::Nat, m.base());
}

DistributiveReport check_distributive_step(Machine& m, const Numeral& s, const Numeral& t, int j) {
  DistributiveReport r;
  const int k = m.base();
  if (j < 1 || j > s.int_len()) throw DomainError("j must lie in [1, L_s]");
  const Digits S = digits_of(s);
  const Digits T = digits_of(t);

  ExponentVector lhs = exponent_vectors(S, T);
  for (int i = 1; i <= static_cast<int>(T.size()); ++i) lhs[i + j - 1] += T[static_cast<std::size_t>(i - 1)];
  std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
  Digits bumped = S;
  bumped[static_cast<std::size_t>(j - 1)] += 1;
  const ExponentVector rhs = exponent_vectors(bumped, T);
  r.exponent_identity = lhs == rhs;

  BigInt unit = 1;
  for (int i = 1; i < j; ++i) unit *= k;
  const OracleValue s_next = oracle(OracleOp::Add, oracle_value(s), {unit, 0}, k);
  const OracleValue product = oracle(OracleOp::Mul, s_next, oracle_value(t), k);
  r.reconstruction = oracle_matches(product, reconstruct(m, lhs));

  const Numeral zero = natural(0, k);
  const Op op = times_op(Flavor::Nat) * successor_op(Flavor::Nat, j, 1);
  const StateVector got = m.apply(op, triple_word(s, t, zero));
  const StateVector want(triple_word(natural(s_next.numerator, k), t, natural(product.numerator, k)));
  r.operator_identity = got == want;

  if (!r.ok()) {
    std::ostringstream os;
    os << "s=" << format_numeral(s) << " t=" << format_numeral(t) << " j=" << j << " lhs=" << text(lhs)
       << " rhs=" << text(rhs);
    r.detail = os.str();
  }
  return r;
}

AppendixBReport check_appendixB_decomposition(Machine& m, int j, const std::vector<Numeral>& span) {
  const int k = m.base();
  const unsigned uk = static_cast<unsigned>(k);
  const Op ip = integers::successor_plus(j);
  const Op w = sign_flip();
  const Op down = Op::product({w, canonical(1, Flavor::Int), integers::successor_plus_adjoint(j), w});
  const Op plus_zero = state_projector(numeral_from_int(0, Flavor::Int, k), 1);
  const Op geq = P(ProjectorSpec::minus_len_geq(1, j));
  const Op lt = P(ProjectorSpec::minus_len_lt(1, j));
  const Op im_lt = integers::successor_minus_lt(j);

  struct Part {
    std::size_t AppendixBReport::*counter;
    Op op;
  };
  std::vector<Part> parts;
  parts.push_back({&AppendixBReport::positive_part, Op::power(ip, uk)});
  for (unsigned l = 1; l <= uk - 1; ++l) {
    const Op tail = Op::power(down, uk - l) * geq;
    parts.push_back({&AppendixBReport::flip_to_zero, Op::product({Op::power(ip, l - 1), ip, plus_zero, w, tail})});
    parts.push_back({&AppendixBReport::lt_in_sum, Op::product({Op::power(ip, l - 1), im_lt, lt, tail})});
  }
  parts.push_back({&AppendixBReport::geq_part,
                   Op::product({plus_zero * w + P(ProjectorSpec::negative_nonzero(1)), Op::power(down, uk), geq})});
  parts.push_back({&AppendixBReport::lt_part, Op::product({Op::power(ip, uk - 1), im_lt, lt})});

  const Op power_k = Op::power(integers::successor(j), uk);
  const Op next = integers::successor(j + 1);

  AppendixBReport r;
  for (const auto& n : span) {
    ++r.checked;
    const BasisWord in = encode(n);
    StateVector sum;
    int fired = 0;
    std::size_t AppendixBReport::*which = nullptr;
    for (const auto& p : parts) {
      StateVector v = m.apply(p.op, in);
      if (v.empty()) continue;
      ++fired;
      which = p.counter;
      sum += v;
    }
    if (fired == 1) ++(r.*which);
    const StateVector a = m.apply(power_k, in);
    const StateVector b = m.apply(next, in);
    if (fired != 1 || sum != a || sum != b) {
      r.ok = false;
      r.witness = n;
      r.detail = "word " + format_numeral(n) + ": " + std::to_string(fired) + " parts fired";
      return r;
    }
  }
  return r;
}

}  // namespace fockarith::verify

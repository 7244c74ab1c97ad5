#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockarith/integers.hpp"
#include "fockarith/verification.hpp"
#include "support.hpp"

#include <random>

using namespace fockarith;
using support::integer;
using support::mode;

namespace {

const Statistics kBoth[] = {Statistics::Boson, Statistics::Fermion};

Mode sign(int site, bool plus) { return {1, site, plus ? ModeSymbol::plus() : ModeSymbol::minus()}; }

long long value_of_text(const std::string& s, int k) { return std::stoll(s, nullptr, k); }

std::vector<BasisWord> signed_words(int k, int max_len) {
  return support::encode_all(verify::canonical_span(Flavor::Int, k, max_len));
}

}  // namespace

TEST_CASE("integer encoding layout") {
  CHECK(encode(integer("+0", 10)) == make_word({sign(2, true), mode(1, 0)}));
  CHECK(encode(integer("-1", 10)) == make_word({sign(2, false), mode(1, 1)}));
  CHECK(encode(integer("-364", 10)) == make_word({sign(4, false), mode(3, 3), mode(2, 6), mode(1, 4)}));
  CHECK(format_numeral(integer("7", 10)) == "+7");
  for (const auto& n : verify::canonical_span(Flavor::Int, 3, 3)) CHECK(decode(encode(n), Flavor::Int, 3) == n);
}

TEST_CASE("integer decode rejects negative zero and leading zeros") {
  CHECK_THROWS_AS((void)decode(make_word({sign(2, false), mode(1, 0)}), Flavor::Int, 10), NegativeZero);
  CHECK_THROWS_AS((void)decode(make_word({sign(3, true), mode(2, 0), mode(1, 5)}), Flavor::Int, 10), NonCanonical);
  CHECK(format_numeral(decode_loose(make_word({sign(2, false), mode(1, 0)}), Flavor::Int, 10)) == "-0");
}

TEST_CASE("sign flip") {
  for (auto st : kBoth) {
    Machine m(10, st);
    CHECK(m.apply_word(sign_flip(), encode(integer("+5", 10))) == encode(integer("-5", 10)));
    CHECK(m.apply_word(sign_flip(), encode(integer("+0", 10))) == make_word({sign(2, false), mode(1, 0)}));
    const auto words = signed_words(3, 3);
    Machine m3(3, st);
    CHECK(equal_on_span(m3.ev(), sign_flip() * sign_flip(), Op::identity(), words).ok);
  }
}

TEST_CASE("integer successor examples") {
  for (auto st : kBoth) {
    Machine m(10, st);
    CHECK(format_numeral(successor(m, integer("-1", 10), 1)) == "+0");
    CHECK(format_numeral(successor(m, integer("-5", 10), 2)) == "+5");
    CHECK(format_numeral(successor(m, integer("+9", 10), 1)) == "+10");
    CHECK(format_numeral(successor(m, integer("-10", 10), 2)) == "+0");
    CHECK(format_numeral(successor(m, integer("-364", 10), 2)) == "-354");
    CHECK(format_numeral(predecessor(m, integer("+0", 10), 1)) == "-1");
  }
}

TEST_CASE("integer successor matches the reference and is bilateral") {
  for (int k : {2, 3}) {
    for (auto st : kBoth) {
      Machine m(k, st);
      for (const auto& n : verify::canonical_span(Flavor::Int, k, 3)) {
        const std::string text = format_numeral(n);
        const long long v = value_of_text(text, k);
        long long step = 1;
        for (int j = 1; j <= 3; ++j, step *= k) {
          CAPTURE(text);
          CAPTURE(j);
          CHECK(format_numeral(successor(m, n, j)) == support::int_text(v + step, k));
          CHECK(format_numeral(predecessor(m, n, j)) == support::int_text(v - step, k));
          CHECK(successor(m, predecessor(m, n, j), j) == n);
        }
      }
    }
  }
}

TEST_CASE("negative branch: formula and semantic forms agree") {
  for (int k : {2, 3}) {
    Machine m(k, Statistics::Fermion);
    const auto words = signed_words(k, 4);
    for (int j = 1; j <= 3; ++j) {
      CAPTURE(j);
      CHECK(equal_on_span(m.ev(), integers::successor_minus_geq(j), integers::successor_minus_geq_semantic(j), words).ok);
    }
  }
}

TEST_CASE("nines identity: 10000 - 10 through digit powers") {
  for (auto st : kBoth) {
    Machine m(10, st);
    const BasisWord w = encode(integer("+10000", 10));
    const Op lhs = successor_adjoint_op(Flavor::Int, 2) * successor_op(Flavor::Int, 5);
    const Op rhs = Op::product({Op::power(successor_op(Flavor::Int, 2), 9), Op::power(successor_op(Flavor::Int, 3), 9),
                                Op::power(successor_op(Flavor::Int, 4), 9)});
    const BasisWord zero = encode(integer("+0", 10));
    CHECK(m.apply_word(rhs, zero) == encode(integer("+9990", 10)));
    CHECK(m.apply_word(lhs, zero) == encode(integer("+9990", 10)));
    CHECK(m.apply_word(successor_adjoint_op(Flavor::Int, 2), w) == encode(integer("+9990", 10)));
  }
  for (int k : {2, 3}) {
    Machine m(k, Statistics::Fermion);
    const auto words = signed_words(k, 3);
    std::vector<Op> f;
    for (int j = 1; j <= 3; ++j) f.push_back(Op::power(successor_op(Flavor::Int, j), static_cast<unsigned>(k - 1)));
    const Op lhs = successor_adjoint_op(Flavor::Int, 1) * successor_op(Flavor::Int, 4);
    CHECK(equal_on_span(m.ev(), lhs, Op::product(f), words).ok);
  }
}

TEST_CASE("encoding identity for signed words") {
  for (int k : {2, 3}) {
    Machine m(k, Statistics::Fermion);
    const BasisWord zero = encode(integer("+0", k));
    for (const auto& n : verify::canonical_span(Flavor::Int, k, 3)) {
      std::vector<Op> f;
      for (int j = n.int_len(); j >= 1; --j) {
        const auto e = static_cast<unsigned>(n.int_digits[static_cast<std::size_t>(j - 1)]);
        f.push_back(Op::power(n.negative ? successor_adjoint_op(Flavor::Int, j) : integers::successor_plus(j), e));
      }
      CHECK(m.apply(Op::product(f), zero) == StateVector(encode(n)));
    }
  }
}

TEST_CASE("integer addition and subtraction") {
  for (auto st : kBoth) {
    Machine m(10, st);
    CHECK(format_numeral(add(m, integer("+0", 10), integer("-42", 10))) == "-42");
    CHECK(format_numeral(add(m, integer("-364", 10), integer("+364", 10))) == "+0");
    CHECK(format_numeral(subtract(m, integer("+10", 10), integer("+10000", 10))) == "+9990");
  }
  std::mt19937_64 rng(5);
  Machine m(10, Statistics::Fermion);
  std::uniform_int_distribution<long long> pick(-999, 999);
  for (int trial = 0; trial < 200; ++trial) {
    const long long s = pick(rng), t = pick(rng);
    const Numeral ns = integer(support::int_text(s, 10), 10);
    const Numeral nt = integer(support::int_text(t, 10), 10);
    const Numeral sum = add(m, ns, nt);
    CHECK(format_numeral(sum) == support::int_text(s + t, 10));
    CHECK(subtract(m, ns, sum) == nt);
  }
}

TEST_CASE("integer shift") {
  for (auto st : kBoth) {
    Machine m(10, st);
    CHECK(m.apply(integers::shift(), encode(integer("+13", 10))) == StateVector(encode(integer("+130", 10))));
    CHECK(m.apply(integers::shift(), encode(integer("-1", 10))) == StateVector(encode(integer("-10", 10))));
    Machine m3(3, st);
    CHECK(equal_on_span(m3.ev(), integers::shift_adjoint() * integers::shift(), Op::identity(), signed_words(3, 3)).ok);
  }
}

TEST_CASE("integer multiplication") {
  for (auto st : kBoth) {
    Machine m(10, st);
    CHECK(format_numeral(multiply(m, integer("+1", 10), integer("-73", 10), integer("+0", 10))) == "-73");
    CHECK(format_numeral(multiply(m, integer("-2", 10), integer("+3", 10), integer("+0", 10))) == "-6");
    CHECK(format_numeral(multiply(m, integer("-2", 10), integer("-3", 10), integer("-1", 10))) == "+5");
  }
  Numeral bad = integer("+5", 10);
  bad.negative = true;
  bad.int_digits = {0};
  Machine m(10, Statistics::Boson);
  CHECK_THROWS_AS((void)multiply(m, integer("+1", 10), bad, integer("+0", 10)), MalformedTriple);
  CHECK_THROWS_AS((void)add(m, bad, integer("+1", 10)), MalformedPair);
}

TEST_CASE("integer add and mul match the reference on random operands") {
  std::mt19937_64 rng(9);
  for (int k : {2, 10}) {
    Machine m(k, Statistics::Boson);
    std::uniform_int_distribution<long long> pick(k == 2 ? -63 : -9999, k == 2 ? 63 : 9999);
    for (int trial = 0; trial < 60; ++trial) {
      const long long s = pick(rng), t = pick(rng), x = pick(rng);
      auto num = [&](long long v) { return integer(support::int_text(v, k), k); };
      CHECK(format_numeral(add(m, num(s), num(t))) == support::int_text(s + t, k));
      CHECK(format_numeral(multiply(m, num(s), num(t), num(x))) == support::int_text(x + s * t, k));
    }
  }
}

TEST_CASE("division has no witness where the quotient is not an integer") {
  Machine m(10, Statistics::Boson);
  auto none = integers::check_division_absence(m, integer("+2", 10), integer("+1", 10), 50);
  CHECK_FALSE(none.witness_found);
  CHECK(none.checked == 101);
  auto found = integers::check_division_absence(m, integer("+3", 10), integer("+6", 10), 50);
  REQUIRE(found.witness_found);
  CHECK(format_numeral(found.witness) == "+2");
  CHECK_FALSE(integers::check_division_absence(m, integer("+0", 10), integer("+1", 10), 50).witness_found);
}

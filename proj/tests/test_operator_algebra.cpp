#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockarith/integers.hpp"
#include "fockarith/naturals.hpp"
#include "fockarith/rationals.hpp"
#include "fockarith/verification.hpp"
#include "support.hpp"

#include <random>

using namespace fockarith;
using support::mode;

namespace {

Op proj_op(const ProjectorSpec& p) { return Op::projector(p); }

// N_j^dag N_j written out as its diagonal terms, unrolled `depth` levels.
// N_1 moves every digit below k - 1 up, with no occupancy test on site 2.
Op carry_diagonal(int j, int k, int depth) {
  std::vector<Op> terms;
  for (int h = j == 1 ? 0 : 1; h <= k - 2; ++h) terms.push_back(proj_op(ProjectorSpec::digit_eq(1, j, h)));
  if (j > 1) terms.push_back(proj_op(ProjectorSpec::occ(1, j + 1)) * proj_op(ProjectorSpec::digit_eq(1, j, 0)));
  const Op next = depth == 0 ? Op::family("N", j + 1, 1, true) * naturals::carry(j + 1) : carry_diagonal(j + 1, k, depth - 1);
  terms.push_back(proj_op(ProjectorSpec::digit_eq(1, j, k - 1)) * next);
  if (j > 1) terms.push_back(proj_op(ProjectorSpec::unocc(1, j)) * proj_op(ProjectorSpec::unocc(1, j + 1)));
  return Op::sum(std::move(terms));
}

std::vector<BasisWord> signed_words(int k, int max_len) {
  return support::encode_all(verify::canonical_span(Flavor::Int, k, max_len));
}

}  // namespace

TEST_CASE("identity, sums and products") {
  Machine m(10, Statistics::Fermion);
  const StateVector v(encode(support::nat("364", 10)));
  CHECK(m.apply(Op::identity(), v) == v);
  CHECK(m.apply(Op::zero(), v).empty());

  const Op a = naturals::successor(1);
  const Op b = naturals::successor(2);
  CHECK(m.apply(a + b, v) == m.apply(a, v) + m.apply(b, v));

  const StateVector zero(make_word({mode(1, 0)}));
  const Op step = Op::product({cr(1, 1, ModeSymbol::digit(1)), an(1, 1, ModeSymbol::digit(0))});
  CHECK(m.apply(step, zero) == StateVector(make_word({mode(1, 1)})));
}

TEST_CASE("evaluation is linear over scaled sums") {
  Machine m(3, Statistics::Fermion);
  std::mt19937_64 rng(11);
  const Op e = naturals::successor(1) + Op::scale(Rational(2, 3), naturals::successor(2));
  const auto words = support::encode_all(verify::canonical_span(Flavor::Nat, 3, 3));
  for (int trial = 0; trial < 50; ++trial) {
    const auto& w1 = words[rng() % words.size()];
    const auto& w2 = words[rng() % words.size()];
    const Rational c1(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 5));
    const Rational c2(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 5));
    const StateVector in = c1 * StateVector(w1) + c2 * StateVector(w2);
    CHECK(m.apply(e, in) == c1 * m.apply(e, w1) + c2 * m.apply(e, w2));
  }
}

TEST_CASE("structural adjoint") {
  const Op a = cr(1, 2, ModeSymbol::digit(3));
  const Op b = an(1, 1, ModeSymbol::digit(4));
  const Op p = proj_op(ProjectorSpec::occ(1, 2));
  const Op e = Op::sum({a * b, Op::scale(Rational(1, 2), p), naturals::successor(3)});
  CHECK(structurally_equal(adjoint(adjoint(e)), e));
  CHECK(structurally_equal(adjoint(a * b), adjoint(b) * adjoint(a)));
  CHECK(structurally_equal(adjoint(a), an(1, 2, ModeSymbol::digit(3))));
  CHECK(structurally_equal(adjoint(p), p));
}

TEST_CASE("families without an adjoint and unknown names are reported") {
  Registry r;
  r.add_family("F", [](int, int) { return Op::identity(); }, AdjointPolicy::None);
  CHECK_THROWS_AS((void)adjoint(Op::family("F", 1), r), UnboundAdjointFamily);
  auto reg = std::make_shared<Registry>(r);
  Evaluator ev(reg, Statistics::Boson);
  CHECK_THROWS_AS((void)ev.apply(Op::family("Missing", 1), StateVector::vacuum()), UnboundFamily);
}

TEST_CASE("a self-referencing family hits the recursion budget") {
  auto reg = std::make_shared<Registry>();
  reg->add_family("Loop", [](int j, int r) { return Op::family("Loop", j + 1, r); });
  Evaluator ev(reg, Statistics::Boson);
  CHECK_THROWS_AS((void)ev.apply(Op::family("Loop", 1), StateVector(make_word({mode(1, 0)}))), RecursionOverflow);
}

TEST_CASE("projectors on sample words") {
  const BasisWord w364 = encode(support::nat("364", 10));
  CHECK(eval_projector(ProjectorSpec::occ(1, 3), w364) == 1);
  CHECK(eval_projector(ProjectorSpec::occ(1, 4), w364) == 0);
  CHECK(eval_projector(ProjectorSpec::minus_len_geq(1, 2), encode(support::integer("-7", 10))) == 0);
  CHECK(eval_projector(ProjectorSpec::minus_len_geq(1, 2), encode(support::integer("-17", 10))) == 1);
  CHECK(eval_projector(ProjectorSpec::digit_eq(1, 2, 6), w364) == 1);
  CHECK(eval_projector(ProjectorSpec::gt_zero(1, 1), w364) == 1);
}

TEST_CASE("projectors are complementary, idempotent and self-adjoint") {
  Machine m(3, Statistics::Fermion);
  auto words = support::loose_words(3, 3);
  for (const auto& w : signed_words(3, 3)) words.push_back(w);
  for (const auto& w : words)
    for (int j = 0; j <= 4; ++j)
      CHECK(eval_projector(ProjectorSpec::occ(1, j), w) + eval_projector(ProjectorSpec::unocc(1, j), w) == 1);

  const std::vector<ProjectorSpec> specs{
      ProjectorSpec::occ(1, 2),           ProjectorSpec::unocc(1, 3),          ProjectorSpec::gt_zero(1, 1),
      ProjectorSpec::digit_eq(1, 1, 2),   ProjectorSpec::num_occ(1, 2),        ProjectorSpec::sign_at(1, 2, -1),
      ProjectorSpec::plus_any(1),         ProjectorSpec::minus_len_geq(1, 2), ProjectorSpec::minus_len_lt(1, 2),
      ProjectorSpec::nonzero_geq(1, 2),   ProjectorSpec::all_zero_geq(1, 2),   ProjectorSpec::negative_nonzero(1),
      ProjectorSpec::state_eq(1, encode_modes(support::integer("+12", 3)))};
  for (const auto& spec : specs) {
    const Op p = proj_op(spec);
    const auto check = equal_on_span(m.ev(), p * p, p, words);
    CHECK_MESSAGE(check.ok, spec.label());
    for (const auto& a : words)
      for (const auto& b : words)
        CHECK(inner_product(m.apply(adjoint(p), StateVector(a)), StateVector(b)) ==
              inner_product(StateVector(a), m.apply(p, StateVector(b))));
  }
}

TEST_CASE("equal_on_span") {
  Machine m(2, Statistics::Boson);
  const auto words = support::loose_words(2, 3);
  CHECK(equal_on_span(m.ev(), naturals::successor(1), naturals::successor(1), words).ok);
  const std::vector<BasisWord> one{encode(support::nat("1", 2))};
  const auto bad = equal_on_span(m.ev(), Op::identity(), Op::zero(), one);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == one[0]);
  CHECK(bad.lhs == StateVector(one[0]));
  CHECK(bad.rhs.empty());
}

TEST_CASE("N^dag N equals its diagonal expansion") {
  for (int k : {2, 3}) {
    Machine m(k, Statistics::Boson);
    const auto words = support::loose_words(k, 3);
    for (int j = 1; j <= 3; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      const Op lhs = Op::family("N", j, 1, true) * naturals::carry(j);
      const auto check = equal_on_span(m.ev(), lhs, carry_diagonal(j, k, 3), words);
      CHECK(check.ok);
      CHECK(check.checked == words.size());
    }
  }
}

TEST_CASE("hand-written adjoints agree with the structural ones") {
  for (int k : {2, 3}) {
    for (auto st : {Statistics::Boson, Statistics::Fermion}) {
      Machine m(k, st);
      const auto words = support::loose_words(k, 4);
      for (int j = 1; j <= 4; ++j) {
        CAPTURE(k);
        CAPTURE(j);
        CHECK(equal_on_span(m.ev(), naturals::carry_adjoint_explicit(j), Op::family("N", j, 1, true), words).ok);
        CHECK(equal_on_span(m.ev(), naturals::pad_adjoint_explicit(j), Op::family("Z", j, 1, true), words).ok);
      }
      const auto signed_span = signed_words(k, 4);
      for (int j = 1; j <= 3; ++j) {
        CAPTURE(j);
        CHECK(equal_on_span(m.ev(), integers::carry_plus_adjoint_explicit(j), Op::family("Kp", j, 1, true), signed_span).ok);
        CHECK(equal_on_span(m.ev(), integers::pad_plus_adjoint_explicit(j), Op::family("Zp", j, 1, true), signed_span).ok);
      }
    }
  }
}

TEST_CASE("adjoint matrix elements match on spans") {
  auto check_pairs = [](Machine& m, const Op& e, const std::vector<BasisWord>& span) {
    const Op d = adjoint(e, m.registry());
    std::vector<StateVector> fwd, back;
    for (const auto& w : span) {
      fwd.push_back(m.apply(e, w));
      back.push_back(m.apply(d, w));
    }
    bool ok = true;
    for (std::size_t a = 0; a < span.size(); ++a)
      for (std::size_t b = 0; b < span.size(); ++b)
        ok = ok && inner_product(back[a], StateVector(span[b])) == inner_product(StateVector(span[a]), fwd[b]);
    return ok;
  };
  for (int k : {2, 3}) {
    Machine m(k, Statistics::Fermion);
    const auto loose = support::loose_words(k, 3);
    const auto ints = signed_words(k, 3);
    const auto rats = support::encode_all(verify::canonical_span(Flavor::Rat, k, 3));
    for (int j = 1; j <= 3; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      CHECK(check_pairs(m, naturals::successor(j), loose));
      CHECK(check_pairs(m, naturals::carry(j), loose));
      CHECK(check_pairs(m, integers::successor(j), ints));
    }
    for (int j : {-2, -1, 1, 2}) CHECK(check_pairs(m, rationals::successor(j), rats));
  }
}

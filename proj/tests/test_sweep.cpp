#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockarith/naturals.hpp"
#include "fockarith/sweep.hpp"
#include "fockarith/verification.hpp"
#include "support.hpp"

using namespace fockarith;

TEST_CASE("parallel sweep matches the serial reference") {
  for (auto st : {Statistics::Boson, Statistics::Fermion}) {
    const MachineSpec spec{3, st, {}};
    std::vector<BasisWord> words;
    for (const auto& n : verify::canonical_span(Flavor::Int, 3, 4)) words.push_back(encode(n));
    for (const Op& op : {successor_op(Flavor::Int, 2), shift_op(Flavor::Int), successor_adjoint_op(Flavor::Int, 3)}) {
      const auto serial = sweep_serial(spec, op, words);
      const auto parallel = sweep_parallel(spec, op, words);
      REQUIRE(serial.images.size() == words.size());
      CHECK(serial.images == parallel.images);
      CHECK(serial.trace == parallel.trace);
      Machine m(3, st);
      for (std::size_t i = 0; i < words.size(); ++i) CHECK(serial.images[i] == m.apply(op, words[i]));
    }
  }
}

TEST_CASE("sweeps keep empty images and handle empty input") {
  const MachineSpec spec{10, Statistics::Boson, {}};
  const std::vector<BasisWord> words{encode(support::nat("5", 10)), encode(support::nat("50", 10))};
  const auto r = sweep_parallel(spec, naturals::successor_adjoint(2), words);
  REQUIRE(r.images.size() == 2);
  CHECK(r.images[0].empty());
  CHECK(r.images[1] == StateVector(encode(support::nat("40", 10))));
  CHECK(sweep_parallel(spec, naturals::successor(1), {}).images.empty());
  CHECK(sweep_threads() >= 1);
}

#pragma once

#include "fockarith/arith.hpp"

#include <vector>

namespace fockarith {

// What a worker needs to build its own Machine.
struct MachineSpec {
  int base = 10;
  Statistics stats = Statistics::Boson;
  ArithOptions opts{};
};

struct SweepResult {
  std::vector<StateVector> images;  // images[i] = op|words[i]>
  ResourceTrace trace;              // summed over all words
};

// Applies one operator to every word. The parallel path splits the words
// across OpenMP threads, each with a private Machine; the serial path is the
// reference it must match exactly.
[[nodiscard]] SweepResult sweep_serial(const MachineSpec& spec, const Op& op, const std::vector<BasisWord>& words);
[[nodiscard]] SweepResult sweep_parallel(const MachineSpec& spec, const Op& op, const std::vector<BasisWord>& words);
[[nodiscard]] inline SweepResult sweep(const MachineSpec& spec, const Op& op, const std::vector<BasisWord>& words,
                                       bool parallel) {
  return parallel ? sweep_parallel(spec, op, words) : sweep_serial(spec, op, words);
}

[[nodiscard]] int sweep_threads();

}  // namespace fockarith

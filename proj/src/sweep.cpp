#include "fockarith/sweep.hpp"

#include <exception>

#include <omp.h>

namespace fockarith {

SweepResult sweep_serial(const MachineSpec& spec, const Op& op, const std::vector<BasisWord>& words) {
  Machine m(spec.base, spec.stats, spec.opts);
  SweepResult r;
  r.images.reserve(words.size());
  for (const auto& w : words) r.images.push_back(m.apply(op, w));
  r.trace = m.ev().trace();
  return r;
}

SweepResult sweep_parallel(const MachineSpec& spec, const Op& op, const std::vector<BasisWord>& words) {
  SweepResult r;
  r.images.resize(words.size());
  const auto registry = make_registry(spec.base, spec.stats, spec.opts);
  const auto n = static_cast<long>(words.size());
  std::exception_ptr failure;
#pragma omp parallel
  {
    Evaluator ev(registry, spec.stats);
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
      try {
        r.images[static_cast<std::size_t>(i)] = ev.apply(op, words[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical(fockarith_sweep_error)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(fockarith_sweep_trace)
    r.trace += ev.trace();
  }
  if (failure) std::rethrow_exception(failure);
  return r;
}

int sweep_threads() { return omp_get_max_threads(); }

}  // namespace fockarith

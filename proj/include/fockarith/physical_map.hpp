#pragma once

#include "fockarith/arith.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fockarith {

// Component-wise relabeling of abstract modes onto physical ones: sites go
// through g, symbols through d. Both maps must be injective. Registers are
// kept as they are.
class PhysicalEmbedding {
 public:
  // Throws NonInjectiveMap.
  PhysicalEmbedding(std::map<int, int> site_map, std::map<ModeSymbol, ModeSymbol> symbol_map);

  // g(j) = j + offset on [lo, hi]; d is the identity on the k + 3 symbols.
  [[nodiscard]] static PhysicalEmbedding shifted(int offset, int lo, int hi, int base);

  [[nodiscard]] Mode map(const Mode& m) const;    // UnmappedSite / UnmappedSymbol
  [[nodiscard]] Mode unmap(const Mode& m) const;  // same errors, on the image side

  // Relabels and re-sorts; the fermion phase of the re-sort lands in the amplitude.
  [[nodiscard]] StateVector map_state(const BasisWord& w, Statistics stats) const;
  [[nodiscard]] StateVector map_state(const StateVector& v, Statistics stats) const;
  [[nodiscard]] StateVector unmap_state(const BasisWord& w, Statistics stats) const;

  [[nodiscard]] const std::map<int, int>& site_map() const { return g_; }
  [[nodiscard]] const std::map<ModeSymbol, ModeSymbol>& symbol_map() const { return d_; }

 private:
  std::map<int, int> g_, g_inv_;
  std::map<ModeSymbol, ModeSymbol> d_, d_inv_;
};

// Copy of `base` with the lazy node "Embed" registered for this embedding.
// Embed maps abstract words to physical ones; its dagger maps back.
[[nodiscard]] std::shared_ptr<Registry> embedding_registry(const Registry& base, const PhysicalEmbedding& e,
                                                           Statistics stats);

// Induced operator O_W = W O W^dag. Primitive creation and annihilation nodes
// are relabeled directly; projectors, families and lazy nodes are wrapped in
// the conjugation since their meaning depends on abstract labels. Evaluate
// with a registry from embedding_registry.
[[nodiscard]] Op map_operator(const Op& e, const PhysicalEmbedding& emb);

// |<expected|psi>|^2 / <psi|psi> for psi = op|w>. Throws EmptyResult when op
// annihilates w.
[[nodiscard]] Rational implementation_overlap(Machine& m, const Op& op, const BasisWord& w, const BasisWord& expected);

// Primitive counts keyed by operator name and input length.
class ResourceLedger {
 public:
  void record(const std::string& op, int length, const ResourceTrace& t);
  [[nodiscard]] const std::map<std::pair<std::string, int>, ResourceTrace>& entries() const { return entries_; }
  // (L, primitive count) samples for one operator, L increasing.
  [[nodiscard]] std::vector<std::pair<double, double>> series(const std::string& op) const;
  // "op=<name> L=<n> creates=<..> annihilates=<..> projectors=<..>" per entry.
  [[nodiscard]] std::string report() const;

 private:
  std::map<std::pair<std::string, int>, ResourceTrace> entries_;
};

enum class ScalingVerdict { Poly, Exp };

struct ScalingReport {
  double slope = 0;            // least squares d log(count) / d log(L)
  double intercept = 0;
  double semilog_slope = 0;    // d log(count) / d L
  double loglog_rss = 0;       // residual sum of squares of each fit
  double semilog_rss = 0;
  ScalingVerdict verdict = ScalingVerdict::Poly;

  // "slope=<float> verdict=<POLY|EXP>"
  [[nodiscard]] std::string line() const;
};

inline constexpr double kDefaultSlopeCap = 3.5;
inline constexpr std::size_t kMinScalingSamples = 6;

// EXP when log(count) is fitted better by L than by log(L) with a positive
// slope, or when the log-log slope exceeds the cap. Throws
// InsufficientSamples below kMinScalingSamples points or when L does not
// increase.
[[nodiscard]] ScalingReport fit_scaling(const std::vector<std::pair<double, double>>& samples,
                                        double cap = kDefaultSlopeCap);

// Worst-case style workloads at length L: V_1 on a word of k-1 digits (full
// carry chain), plus and times on two such words. Returns the primitive
// trace of one application.
[[nodiscard]] ResourceTrace measure_successor(Machine& m, int length);
[[nodiscard]] ResourceTrace measure_plus(Machine& m, int length);
[[nodiscard]] ResourceTrace measure_times(Machine& m, int length);

}  // namespace fockarith

#include "fockarith/physical_map.hpp"

#include "fockarith/errors.hpp"

#include <cmath>
#include <functional>
#include <tuple>
#include <sstream>

namespace fockarith {

namespace {

template <class K>
std::map<K, K> invert(const std::map<K, K>& m, const char* what) {
  std::map<K, K> inv;
  for (const auto& [a, b] : m) {
    if (!inv.emplace(b, a).second) throw NonInjectiveMap(std::string(what) + " map sends two labels to one");
  }
  return inv;
}

std::string site_text(const Mode& m) { return "reg " + std::to_string(m.reg) + " site " + std::to_string(m.site); }

StateVector relabel(const BasisWord& w, Statistics stats, const std::function<Mode(const Mode&)>& f) {
  std::vector<Mode> modes;
  modes.reserve(w.modes().size());
  for (const auto& m : w.modes()) modes.push_back(f(m));
  // The word keeps the sort phase; StateVector folds it into the amplitude.
  return StateVector(canonicalize(std::move(modes), stats).first);
}

// Least squares y = a + b x; returns (b, a, rss).
std::tuple<double, double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double a = (sy - b * sx) / n;
  double rss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) rss += std::pow(y[i] - a - b * x[i], 2);
  return {b, a, rss};
}

Numeral all_top_digits(int base, int length) {
  Numeral n;
  n.base = base;
  n.int_digits.assign(static_cast<std::size_t>(length), base - 1);
  return n;
}

ResourceTrace traced(Machine& m, const Op& op, const BasisWord& w) {
  m.ev().reset_trace();
  (void)m.apply_word(op, w);
  return m.ev().trace();
}

}  // namespace

PhysicalEmbedding::PhysicalEmbedding(std::map<int, int> site_map, std::map<ModeSymbol, ModeSymbol> symbol_map)
    : g_(std::move(site_map)), d_(std::move(symbol_map)) {
  g_inv_ = invert(g_, "site");
  d_inv_ = invert(d_, "symbol");
}

PhysicalEmbedding PhysicalEmbedding::shifted(int offset, int lo, int hi, int base) {
  std::map<int, int> g;
  for (int j = lo; j <= hi; ++j) g[j] = j + offset;
  std::map<ModeSymbol, ModeSymbol> d;
  for (int h = 0; h < base; ++h) d[ModeSymbol::digit(h)] = ModeSymbol::digit(h);
  for (auto s : {ModeSymbol::plus(), ModeSymbol::minus(), ModeSymbol::point()}) d[s] = s;
  return PhysicalEmbedding(std::move(g), std::move(d));
}

Mode PhysicalEmbedding::map(const Mode& m) const {
  auto gi = g_.find(m.site);
  if (gi == g_.end()) throw UnmappedSite(site_text(m));
  auto di = d_.find(m.sym);
  if (di == d_.end()) throw UnmappedSymbol(m.sym.label());
  return {m.reg, gi->second, di->second};
}

Mode PhysicalEmbedding::unmap(const Mode& m) const {
  auto gi = g_inv_.find(m.site);
  if (gi == g_inv_.end()) throw UnmappedSite(site_text(m));
  auto di = d_inv_.find(m.sym);
  if (di == d_inv_.end()) throw UnmappedSymbol(m.sym.label());
  return {m.reg, gi->second, di->second};
}

StateVector PhysicalEmbedding::map_state(const BasisWord& w, Statistics stats) const {
  return relabel(w, stats, [this](const Mode& m) { return map(m); });
}

StateVector PhysicalEmbedding::map_state(const StateVector& v, Statistics stats) const {
  StateVector out;
  for (const auto& [w, a] : v.terms()) out += a * map_state(w, stats);
  return out;
}

StateVector PhysicalEmbedding::unmap_state(const BasisWord& w, Statistics stats) const {
  return relabel(w, stats, [this](const Mode& m) { return unmap(m); });
}

std::shared_ptr<Registry> embedding_registry(const Registry& base, const PhysicalEmbedding& e, Statistics stats) {
  auto r = std::make_shared<Registry>(base);
  r->add_lazy("Embed", [e, stats](int, int, const BasisWord& w, bool dagger) {
    const StateVector target = dagger ? e.unmap_state(w, stats) : e.map_state(w, stats);
    const auto& [tw, want] = *target.terms().begin();
    // Empty the source word, then fill the target; the scale fixes the sign
    // so the result carries exactly the relabeling phase.
    std::vector<Op> f;
    for (const auto& m : tw.modes()) f.push_back(Op::create(m));
    for (auto it = w.modes().rbegin(); it != w.modes().rend(); ++it) f.push_back(Op::annihilate(*it));
    StateVector probe(w);
    for (auto it = w.modes().begin(); it != w.modes().end(); ++it) probe = apply_annihilate(probe, *it, stats);
    for (auto it = tw.modes().rbegin(); it != tw.modes().rend(); ++it) probe = apply_create(probe, *it, stats);
    const Rational got = probe.amplitude(tw);
    return Op::scale(want / got, Op::product(std::move(f)));
  });
  return r;
}

Op map_operator(const Op& e, const PhysicalEmbedding& emb) {
  const auto& n = e.node();
  auto wrap = [&]() { return Op::product({Op::lazy("Embed", 0, 0), e, Op::lazy("Embed", 0, 0, true)}); };
  auto children = [&]() {
    std::vector<Op> c;
    c.reserve(n.children.size());
    for (const auto& ch : n.children) c.push_back(map_operator(ch, emb));
    return c;
  };
  switch (n.kind) {
    case Op::Kind::Identity:
    case Op::Kind::Zero:
      return e;
    case Op::Kind::Create:
      return Op::create(emb.map(n.mode));
    case Op::Kind::Annihilate:
      return Op::annihilate(emb.map(n.mode));
    case Op::Kind::Projector:
    case Op::Kind::Family:
    case Op::Kind::Lazy:
      return wrap();
    case Op::Kind::Scale:
      return Op::scale(n.coeff, map_operator(n.children[0], emb));
    case Op::Kind::Sum:
      return Op::sum(children());
    case Op::Kind::Product:
      return Op::product(children());
    case Op::Kind::Power:
      return Op::power(map_operator(n.children[0], emb), n.power);
    case Op::Kind::Adjoint:
      return Op::adjoint_node(map_operator(n.children[0], emb));
  }
  return wrap();
}

Rational implementation_overlap(Machine& m, const Op& op, const BasisWord& w, const BasisWord& expected) {
  const StateVector psi = m.apply(op, w);
  if (psi.empty()) throw EmptyResult("operator annihilates the input word");
  const Rational a = psi.amplitude(expected);
  return a * a / psi.norm2();
}

void ResourceLedger::record(const std::string& op, int length, const ResourceTrace& t) {
  entries_[{op, length}] += t;
}

std::vector<std::pair<double, double>> ResourceLedger::series(const std::string& op) const {
  std::vector<std::pair<double, double>> out;
  for (const auto& [key, t] : entries_) {
    if (key.first == op) out.emplace_back(key.second, static_cast<double>(t.primitives()));
  }
  return out;
}

std::string ResourceLedger::report() const {
  std::ostringstream os;
  for (const auto& [key, t] : entries_) {
    os << "op=" << key.first << " L=" << key.second << " creates=" << t.creates << " annihilates=" << t.annihilates
       << " projectors=" << t.projector_evals << "\n";
  }
  return os.str();
}

std::string ScalingReport::line() const {
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << "slope=" << slope << " verdict=" << (verdict == ScalingVerdict::Poly ? "POLY" : "EXP");
  return os.str();
}

ScalingReport fit_scaling(const std::vector<std::pair<double, double>>& samples, double cap) {
  if (samples.size() < kMinScalingSamples)
    throw InsufficientSamples(std::to_string(samples.size()) + " points, need " + std::to_string(kMinScalingSamples));
  std::vector<double> L, logL, logc;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [l, c] = samples[i];
    if (l <= 0 || c <= 0) throw InsufficientSamples("lengths and counts must be positive");
    if (i > 0 && l <= samples[i - 1].first) throw InsufficientSamples("lengths must increase");
    L.push_back(l);
    logL.push_back(std::log(l));
    logc.push_back(std::log(c));
  }
  ScalingReport r;
  std::tie(r.slope, r.intercept, r.loglog_rss) = linear_fit(logL, logc);
  double semilog_intercept = 0;
  std::tie(r.semilog_slope, semilog_intercept, r.semilog_rss) = linear_fit(L, logc);
  const bool exp_fits_better = r.semilog_slope > 0 && r.semilog_rss < r.loglog_rss;
  r.verdict = exp_fits_better || r.slope > cap ? ScalingVerdict::Exp : ScalingVerdict::Poly;
  return r;
}

ResourceTrace measure_successor(Machine& m, int length) {
  return traced(m, successor_op(Flavor::Nat, 1), encode(all_top_digits(m.base(), length)));
}

ResourceTrace measure_plus(Machine& m, int length) {
  const Numeral s = all_top_digits(m.base(), length);
  return traced(m, plus_op(Flavor::Nat), pair_word(s, s));
}

ResourceTrace measure_times(Machine& m, int length) {
  const Numeral s = all_top_digits(m.base(), length);
  return traced(m, times_op(Flavor::Nat), triple_word(s, s, numeral_from_int(0, Flavor::Nat, m.base())));
}

}  // namespace fockarith

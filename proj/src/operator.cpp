#include "fockarith/operator.hpp"

#include "fockarith/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace fockarith {

// ---------------------------------------------------------------- projectors

ProjectorSpec ProjectorSpec::state_eq(int reg, std::vector<Mode> modes) {
  ProjectorSpec p = make(ProjKind::StateEq, reg);
  for (auto& m : modes) m.reg = reg;
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) { return canonical_before(a, b); });
  p.state = std::move(modes);
  return p;
}

std::string ProjectorSpec::label() const {
  std::ostringstream os;
  switch (kind) {
    case ProjKind::Occ: os << "occ"; break;
    case ProjKind::Unocc: os << "unocc"; break;
    case ProjKind::GtZero: os << "gt0"; break;
    case ProjKind::DigitEq: os << "eq" << h; break;
    case ProjKind::NumOcc: os << "nocc"; break;
    case ProjKind::SignAt: os << "sign" << (sign > 0 ? "+" : sign < 0 ? "-" : "+-"); break;
    case ProjKind::SignPlusAny: os << "plus"; break;
    case ProjKind::SignMinusAny: os << "minus"; break;
    case ProjKind::SignMinusLenGeq: os << "minus_geq" << site; break;
    case ProjKind::SignMinusLenLt: os << "minus_lt" << site; break;
    case ProjKind::NegativeNonzero: os << "neg_nonzero"; break;
    case ProjKind::PositiveNonzero: os << "pos_nonzero"; break;
    case ProjKind::Nonzero: os << "nonzero"; break;
    case ProjKind::NumberWord: os << (sign ? "canon" : "wellformed") << "_" << "nir"[h]; break;
    case ProjKind::StateEq: {
      os << "state[";
      for (const auto& m : state) os << m.sym.label() << "@" << m.site << " ";
      os << "]";
      break;
    }
    case ProjKind::NonzeroDigitGeq: os << "nonzero_geq" << site; break;
    case ProjKind::AllZeroDigitsGeq: os << "zero_geq" << site; break;
  }
  return os.str();
}

namespace {

template <typename F>
bool any_in_register(const BasisWord& w, int reg, F&& f) {
  for (const auto& m : w.modes())
    if (m.reg == reg && f(m)) return true;
  return false;
}

bool has_nonzero_digit(const BasisWord& w, int reg) {
  return any_in_register(w, reg, [](const Mode& x) { return x.sym.is_digit() && x.sym.digit_value() > 0; });
}

// Layout test shared by the number-space projectors; mirrors the decoder.
bool number_word(const BasisWord& w, int reg, int flavor, bool canonical) {
  auto modes = w.register_modes(reg);
  if (modes.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  int top = modes.front().site;
  if (flavor != 0) {
    if (!modes[0].sym.is_sign()) return false;
    negative = modes[0].sym.is_minus();
    top = modes[0].site - 1;
    ++i;
  }
  if (top < 1) return false;
  bool all_zero = true;
  const std::size_t first_digit = i;
  for (int site = top; site >= 1; --site, ++i) {
    if (i >= modes.size() || modes[i].site != site || !modes[i].sym.is_digit()) return false;
    if (modes[i].sym.digit_value() != 0) all_zero = false;
  }
  const std::size_t int_len = i - first_digit;
  if (canonical && int_len > 1 && modes[first_digit].sym.digit_value() == 0) return false;
  if (flavor == 2) {
    if (i >= modes.size() || modes[i].site != 0 || !modes[i].sym.is_point()) return false;
    ++i;
    const std::size_t frac_start = i;
    for (int site = -1; i < modes.size(); --site, ++i) {
      if (modes[i].site != site || !modes[i].sym.is_digit()) return false;
      if (modes[i].sym.digit_value() != 0) all_zero = false;
    }
    const std::size_t frac_len = i - frac_start;
    if (frac_len == 0) return false;
    if (canonical && frac_len > 1 && modes.back().sym.digit_value() == 0) return false;
  } else if (i != modes.size()) {
    return false;
  }
  if (canonical && negative && all_zero) return false;
  return true;
}

}  // namespace

int eval_projector(const ProjectorSpec& p, const BasisWord& w) {
  const Mode* m = nullptr;
  switch (p.kind) {
    case ProjKind::Occ:
      return w.find(p.reg, p.site) >= 0 ? 1 : 0;
    case ProjKind::Unocc:
      return w.find(p.reg, p.site) >= 0 ? 0 : 1;
    case ProjKind::GtZero:
      m = w.at(p.reg, p.site);
      return (m && m->sym.is_digit() && m->sym.digit_value() > 0) ? 1 : 0;
    case ProjKind::DigitEq:
      m = w.at(p.reg, p.site);
      return (m && m->sym == ModeSymbol::digit(p.h)) ? 1 : 0;
    case ProjKind::NumOcc:
      m = w.at(p.reg, p.site);
      return (m && m->sym.is_digit()) ? 1 : 0;
    case ProjKind::SignAt:
      m = w.at(p.reg, p.site);
      if (!m || !m->sym.is_sign()) return 0;
      if (p.sign > 0) return m->sym.is_plus() ? 1 : 0;
      if (p.sign < 0) return m->sym.is_minus() ? 1 : 0;
      return 1;
    case ProjKind::SignPlusAny:
      return any_in_register(w, p.reg, [](const Mode& x) { return x.sym.is_plus(); }) ? 1 : 0;
    case ProjKind::SignMinusAny:
      return any_in_register(w, p.reg, [](const Mode& x) { return x.sym.is_minus(); }) ? 1 : 0;
    case ProjKind::SignMinusLenGeq:
      return any_in_register(w, p.reg, [&](const Mode& x) { return x.sym.is_minus() && x.site >= p.site + 1; }) ? 1 : 0;
    case ProjKind::SignMinusLenLt:
      return any_in_register(w, p.reg, [&](const Mode& x) { return x.sym.is_minus() && x.site >= 2 && x.site <= p.site; })
                 ? 1
                 : 0;
    case ProjKind::NegativeNonzero:
      return (any_in_register(w, p.reg, [](const Mode& x) { return x.sym.is_minus(); }) &&
              any_in_register(w, p.reg, [](const Mode& x) { return x.sym.is_digit() && x.sym.digit_value() > 0; }))
                 ? 1
                 : 0;
    case ProjKind::PositiveNonzero:
      return (any_in_register(w, p.reg, [](const Mode& x) { return x.sym.is_plus(); }) && has_nonzero_digit(w, p.reg))
                 ? 1
                 : 0;
    case ProjKind::Nonzero:
      return has_nonzero_digit(w, p.reg) ? 1 : 0;
    case ProjKind::NumberWord:
      return number_word(w, p.reg, p.h, p.sign != 0) ? 1 : 0;
    case ProjKind::StateEq: {
      std::size_t i = 0;
      for (const auto& x : w.modes()) {
        if (x.reg != p.reg) continue;
        if (i >= p.state.size() || !(x == p.state[i])) return 0;
        ++i;
      }
      return i == p.state.size() ? 1 : 0;
    }
    case ProjKind::NonzeroDigitGeq:
      return any_in_register(w, p.reg, [&](const Mode& x) {
               return x.site >= p.site && x.sym.is_digit() && x.sym.digit_value() > 0;
             })
                 ? 1
                 : 0;
    case ProjKind::AllZeroDigitsGeq:
      return any_in_register(w, p.reg, [&](const Mode& x) {
               return x.site >= p.site && x.sym.is_digit() && x.sym.digit_value() > 0;
             })
                 ? 0
                 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------- Op

Op Op::make(Node n) { return Op(std::make_shared<const Node>(std::move(n))); }

Op::Op() : node_(std::make_shared<const Node>()) {}

Op Op::identity() {
  static const Op id = make(Node{});
  return id;
}

Op Op::zero() {
  static const Op z = [] {
    Node n;
    n.kind = Kind::Zero;
    return make(std::move(n));
  }();
  return z;
}

Op Op::create(const Mode& m) {
  Node n;
  n.kind = Kind::Create;
  n.mode = m;
  return make(std::move(n));
}

Op Op::annihilate(const Mode& m) {
  Node n;
  n.kind = Kind::Annihilate;
  n.mode = m;
  return make(std::move(n));
}

Op Op::projector(const ProjectorSpec& p) {
  Node n;
  n.kind = Kind::Projector;
  n.proj = p;
  return make(std::move(n));
}

Op Op::family(std::string name, int index, int reg, bool dagger) {
  Node n;
  n.kind = Kind::Family;
  n.name = std::move(name);
  n.index = index;
  n.reg = reg;
  n.dagger = dagger;
  return make(std::move(n));
}

Op Op::lazy(std::string name, int index, int reg, bool dagger) {
  Node n;
  n.kind = Kind::Lazy;
  n.name = std::move(name);
  n.index = index;
  n.reg = reg;
  n.dagger = dagger;
  return make(std::move(n));
}

Op Op::scale(const Rational& c, const Op& e) {
  if (c == 0 || e.kind() == Kind::Zero) return zero();
  if (c == 1) return e;
  Node n;
  n.kind = Kind::Scale;
  n.coeff = c;
  n.children = {e};
  return make(std::move(n));
}

Op Op::sum(std::vector<Op> terms) {
  std::vector<Op> flat;
  for (auto& t : terms) {
    if (t.kind() == Kind::Zero) continue;
    if (t.kind() == Kind::Sum) {
      for (const auto& c : t.node().children) flat.push_back(c);
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat.front();
  Node n;
  n.kind = Kind::Sum;
  n.children = std::move(flat);
  return make(std::move(n));
}

Op Op::product(std::vector<Op> factors) {
  std::vector<Op> flat;
  for (auto& f : factors) {
    if (f.kind() == Kind::Zero) return zero();
    if (f.kind() == Kind::Identity) continue;
    if (f.kind() == Kind::Product) {
      for (const auto& c : f.node().children) flat.push_back(c);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return identity();
  if (flat.size() == 1) return flat.front();
  Node n;
  n.kind = Kind::Product;
  n.children = std::move(flat);
  return make(std::move(n));
}

Op Op::power(const Op& e, unsigned p) {
  if (p == 0) return identity();
  if (p == 1) return e;
  Node n;
  n.kind = Kind::Power;
  n.power = p;
  n.children = {e};
  return make(std::move(n));
}

Op Op::adjoint_node(const Op& e) {
  Node n;
  n.kind = Kind::Adjoint;
  n.children = {e};
  return make(std::move(n));
}

bool structurally_equal(const Op& a, const Op& b) {
  if (a.id() == b.id()) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Op::Kind::Identity:
    case Op::Kind::Zero:
      return true;
    case Op::Kind::Create:
    case Op::Kind::Annihilate:
      return x.mode == y.mode;
    case Op::Kind::Projector:
      return x.proj == y.proj;
    case Op::Kind::Family:
    case Op::Kind::Lazy:
      return x.name == y.name && x.index == y.index && x.reg == y.reg && x.dagger == y.dagger;
    default:
      break;
  }
  if (x.coeff != y.coeff || x.power != y.power || x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!structurally_equal(x.children[i], y.children[i])) return false;
  return true;
}

std::string to_string(const Op& e) {
  const auto& n = e.node();
  std::ostringstream os;
  auto mode = [&](const Mode& m) { os << "(" << m.reg << "," << m.site << "," << m.sym.label() << ")"; };
  switch (n.kind) {
    case Op::Kind::Identity: os << "1"; break;
    case Op::Kind::Zero: os << "0"; break;
    case Op::Kind::Create: os << "a+"; mode(n.mode); break;
    case Op::Kind::Annihilate: os << "a"; mode(n.mode); break;
    case Op::Kind::Projector: os << "P[" << n.proj.label() << "@" << n.proj.reg << "," << n.proj.site << "]"; break;
    case Op::Kind::Scale: os << format_rational(n.coeff) << "*" << to_string(n.children[0]); break;
    case Op::Kind::Sum: {
      os << "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) os << (i ? " + " : "") << to_string(n.children[i]);
      os << ")";
      break;
    }
    case Op::Kind::Product: {
      for (std::size_t i = 0; i < n.children.size(); ++i) os << (i ? " " : "") << to_string(n.children[i]);
      break;
    }
    case Op::Kind::Power: os << "(" << to_string(n.children[0]) << ")^" << n.power; break;
    case Op::Kind::Adjoint: os << "(" << to_string(n.children[0]) << ")^dag"; break;
    case Op::Kind::Family:
    case Op::Kind::Lazy:
      os << n.name << (n.dagger ? "^dag" : "") << "[" << n.index << ";r" << n.reg << "]";
      break;
  }
  return os.str();
}

namespace {

Op adjoint_impl(const Op& e, const Registry* reg) {
  const auto& n = e.node();
  switch (n.kind) {
    case Op::Kind::Identity:
    case Op::Kind::Zero:
    case Op::Kind::Projector:
      return e;
    case Op::Kind::Create:
      return Op::annihilate(n.mode);
    case Op::Kind::Annihilate:
      return Op::create(n.mode);
    case Op::Kind::Scale:
      return Op::scale(n.coeff, adjoint_impl(n.children[0], reg));
    case Op::Kind::Sum: {
      std::vector<Op> t;
      t.reserve(n.children.size());
      for (const auto& c : n.children) t.push_back(adjoint_impl(c, reg));
      return Op::sum(std::move(t));
    }
    case Op::Kind::Product: {
      std::vector<Op> f;
      f.reserve(n.children.size());
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) f.push_back(adjoint_impl(*it, reg));
      return Op::product(std::move(f));
    }
    case Op::Kind::Power:
      return Op::power(adjoint_impl(n.children[0], reg), n.power);
    case Op::Kind::Adjoint:
      return n.children[0];
    case Op::Kind::Family:
    case Op::Kind::Lazy: {
      if (reg && n.kind == Op::Kind::Family && reg->has_family(n.name) && reg->policy(n.name) == AdjointPolicy::None)
        throw UnboundAdjointFamily(n.name);
      return n.kind == Op::Kind::Family ? Op::family(n.name, n.index, n.reg, !n.dagger)
                                        : Op::lazy(n.name, n.index, n.reg, !n.dagger);
    }
  }
  return e;
}

}  // namespace

Op adjoint(const Op& e) { return adjoint_impl(e, nullptr); }
Op adjoint(const Op& e, const Registry& reg) { return adjoint_impl(e, &reg); }

// ---------------------------------------------------------------- Registry

void Registry::add_family(const std::string& name, Builder b, AdjointPolicy policy) {
  families_[name] = FamilyEntry{std::move(b), policy};
}

void Registry::add_lazy(const std::string& name, Selector s) { lazies_[name] = std::move(s); }

Op Registry::build(const std::string& name, int index, int reg) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw UnboundFamily(name);
  return it->second.build(index, reg);
}

Op Registry::select(const std::string& name, int index, int reg, const BasisWord& w, bool dagger) const {
  auto it = lazies_.find(name);
  if (it == lazies_.end()) throw UnboundFamily(name);
  return it->second(index, reg, w, dagger);
}

AdjointPolicy Registry::policy(const std::string& name) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw UnboundFamily(name);
  return it->second.policy;
}

// ---------------------------------------------------------------- evaluation

ResourceTrace& ResourceTrace::operator+=(const ResourceTrace& o) {
  creates += o.creates;
  annihilates += o.annihilates;
  projector_evals += o.projector_evals;
  family_expansions += o.family_expansions;
  return *this;
}

std::optional<int> max_site_from_env() {
  const char* v = std::getenv("FOCKARITH_MAXSITE");
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoi(v);
  } catch (...) {
    return std::nullopt;
  }
}

Evaluator::Evaluator(std::shared_ptr<const Registry> registry, Statistics stats, EvalOptions opts)
    : registry_(registry ? std::move(registry) : std::make_shared<const Registry>()), stats_(stats), opts_(opts) {
  if (!opts_.max_site_cap) opts_.max_site_cap = max_site_from_env();
}

namespace {

void scan_budget(const Op& e, int& max_index, long& powers) {
  const auto& n = e.node();
  if (n.kind == Op::Kind::Family || n.kind == Op::Kind::Lazy) max_index = std::max(max_index, std::abs(n.index));
  if (n.kind == Op::Kind::Power) powers += n.power;
  for (const auto& c : n.children) scan_budget(c, max_index, powers);
}

}  // namespace

StateVector Evaluator::apply(const Op& e, const StateVector& v) {
  int extent = 1;
  for (const auto& [w, a] : v.terms()) extent = std::max(extent, w.extent());
  int max_index = 0;
  long powers = 0;
  scan_budget(e, max_index, powers);
  budget_extra_ = static_cast<int>(std::min<long>(static_cast<long>(max_index) + powers + 2, 1 << 29));
  long budget = static_cast<long>(extent) + budget_extra_;
  if (opts_.max_site_cap) budget = std::min<long>(budget, *opts_.max_site_cap);
  budget_ = static_cast<int>(std::min<long>(budget, 1 << 30));
  depth_.clear();

  Terms in;
  in.reserve(v.size());
  for (const auto& [w, a] : v.terms()) in.push_back({w, a});
  Terms out;
  eval(e, in, out);
  StateVector result;
  for (auto& t : out) result.add(t.w, t.a);
  return result;
}

void Evaluator::log_event(const char* event, int reg, int site, const std::string& sym, bool survived) {
  *opts_.log << "event=" << event << " reg=" << reg << " site=" << site << " sym=" << sym
             << " survived=" << (survived ? 1 : 0) << "\n";
}

void Evaluator::normalize(Terms& t) {
  if (t.size() < 2) return;
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.w < b.w; });
  Terms merged;
  merged.reserve(t.size());
  for (auto& x : t) {
    if (!merged.empty() && merged.back().w == x.w) {
      merged.back().a += x.a;
    } else {
      merged.push_back(std::move(x));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& x) { return x.a == 0; }), merged.end());
  t = std::move(merged);
}

const Op& Evaluator::cached_adjoint(const Op& e) {
  auto it = adjoint_cache_.find(e.id());
  if (it != adjoint_cache_.end()) return it->second;
  return adjoint_cache_.emplace(e.id(), adjoint(e, *registry_)).first->second;
}

const Op& Evaluator::resolve_family(const Op::Node& n) {
  auto key = std::make_tuple(n.name, n.index, n.reg, n.dagger);
  auto it = family_cache_.find(key);
  if (it != family_cache_.end()) return it->second;
  Op built = registry_->build(n.name, n.index, n.reg);
  if (n.dagger) {
    if (registry_->policy(n.name) == AdjointPolicy::None) throw UnboundAdjointFamily(n.name);
    built = adjoint(built, *registry_);
  }
  return family_cache_.emplace(std::move(key), std::move(built)).first->second;
}

void Evaluator::eval(const Op& e, const Terms& in, Terms& out) {
  if (in.empty()) return;
  const auto& n = e.node();
  switch (n.kind) {
    case Op::Kind::Identity:
      out.insert(out.end(), in.begin(), in.end());
      return;
    case Op::Kind::Zero:
      return;
    case Op::Kind::Create:
    case Op::Kind::Annihilate: {
      const bool create = n.kind == Op::Kind::Create;
      for (const auto& t : in) {
        if (create) {
          ++trace_.creates;
        } else {
          ++trace_.annihilates;
        }
        // Cheap rejection first so dead branches never copy the word.
        const Mode* here = t.w.at(n.mode.reg, n.mode.site);
        const bool viable = create ? here == nullptr : (here != nullptr && here->sym == n.mode.sym);
        int s = 0;
        BasisWord w;
        if (viable) {
          w = t.w;
          s = create ? create_in_place(w, n.mode, stats_) : annihilate_in_place(w, n.mode, stats_);
        }
        if (opts_.log) log_event(create ? "create" : "annihilate", n.mode.reg, n.mode.site, n.mode.sym.label(), s != 0);
        if (s != 0) out.push_back({std::move(w), s > 0 ? t.a : Rational(-t.a)});
      }
      return;
    }
    case Op::Kind::Projector:
      for (const auto& t : in) {
        int keep = eval_projector(n.proj, t.w);
        ++trace_.projector_evals;
        if (opts_.log) log_event("projector", n.proj.reg, n.proj.site, n.proj.label(), keep != 0);
        if (keep) out.push_back(t);
      }
      return;
    case Op::Kind::Scale: {
      Terms tmp;
      eval(n.children[0], in, tmp);
      for (auto& t : tmp) {
        t.a *= n.coeff;
        out.push_back(std::move(t));
      }
      return;
    }
    case Op::Kind::Sum: {
      Terms tmp;
      for (const auto& c : n.children) eval(c, in, tmp);
      normalize(tmp);
      for (auto& t : tmp) out.push_back(std::move(t));
      return;
    }
    case Op::Kind::Product:
    case Op::Kind::Power: {
      const std::size_t steps = n.kind == Op::Kind::Product ? n.children.size() : n.power;
      Terms cur;
      Terms next;
      for (std::size_t i = 0; i < steps; ++i) {
        const Op& f = n.kind == Op::Kind::Product ? n.children[n.children.size() - 1 - i] : n.children[0];
        next.clear();
        eval(f, i == 0 ? in : cur, next);
        std::swap(cur, next);
        if (cur.empty()) return;
      }
      for (auto& t : cur) out.push_back(std::move(t));
      return;
    }
    case Op::Kind::Adjoint:
      eval(cached_adjoint(n.children[0]), in, out);
      return;
    case Op::Kind::Family: {
      const Op& body = resolve_family(n);
      // Words grow during products (carries, shifts), so the limit tracks
      // the current support as well as the support at entry.
      int limit = budget_;
      for (const auto& t : in) limit = std::max(limit, t.w.extent() + budget_extra_);
      if (opts_.max_site_cap) limit = std::min(limit, *opts_.max_site_cap);
      int& d = depth_[n.name];
      if (d + 1 > limit)
        throw RecursionOverflow(n.name + "[" + std::to_string(n.index) + "] exceeded budget " + std::to_string(limit));
      ++d;
      ++trace_.family_expansions;
      try {
        eval(body, in, out);
      } catch (...) {
        --depth_[n.name];
        throw;
      }
      --depth_[n.name];
      return;
    }
    case Op::Kind::Lazy: {
      for (const auto& t : in) {
        Op term = registry_->select(n.name, n.index, n.reg, t.w, n.dagger);
        if (term.kind() == Op::Kind::Zero) continue;
        ++trace_.family_expansions;
        Terms one{t};
        eval(term, one, out);
      }
      return;
    }
  }
}

StateVector apply(const Op& e, const StateVector& v, Statistics stats, std::shared_ptr<const Registry> registry,
                  ResourceTrace* trace) {
  Evaluator ev(std::move(registry), stats);
  auto out = ev.apply(e, v);
  if (trace) *trace += ev.trace();
  return out;
}

SpanCheck equal_on_span(Evaluator& ev, const Op& e1, const Op& e2, const std::vector<BasisWord>& span) {
  SpanCheck r;
  for (const auto& w : span) {
    auto a = ev.apply(e1, w);
    auto b = ev.apply(e2, w);
    ++r.checked;
    if (!(a == b)) {
      r.ok = false;
      r.witness = w;
      r.lhs = std::move(a);
      r.rhs = std::move(b);
      return r;
    }
  }
  return r;
}

}  // namespace fockarith

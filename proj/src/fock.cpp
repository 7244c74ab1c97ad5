#include "fockarith/fock.hpp"

#include "fockarith/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fockarith {

const char* to_string(Statistics s) { return s == Statistics::Boson ? "b" : "f"; }

std::string ModeSymbol::label() const {
  if (is_plus()) return "+";
  if (is_minus()) return "-";
  if (is_point()) return ".";
  return std::to_string(code_);
}

ModeSymbol ModeSymbol::parse(const std::string& text) {
  if (text == "+") return plus();
  if (text == "-") return minus();
  if (text == ".") return point();
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InvalidSymbol("cannot parse symbol '" + text + "'");
  return digit(std::stoi(text));
}

int BasisWord::find(int reg, int site) const {
  // Canonical order makes (reg asc, site desc) a sorted key.
  auto it = std::lower_bound(modes_.begin(), modes_.end(), Mode{reg, site, {}},
                             [](const Mode& a, const Mode& b) {
                               if (a.reg != b.reg) return a.reg < b.reg;
                               return a.site > b.site;
                             });
  if (it != modes_.end() && it->reg == reg && it->site == site) return static_cast<int>(it - modes_.begin());
  return -1;
}

const Mode* BasisWord::at(int reg, int site) const {
  int i = find(reg, site);
  return i < 0 ? nullptr : &modes_[static_cast<std::size_t>(i)];
}

std::vector<Mode> BasisWord::register_modes(int reg) const {
  std::vector<Mode> out;
  for (const auto& m : modes_)
    if (m.reg == reg) out.push_back(m);
  return out;
}

bool BasisWord::has_register(int reg) const {
  return std::any_of(modes_.begin(), modes_.end(), [reg](const Mode& m) { return m.reg == reg; });
}

int BasisWord::extent() const {
  if (modes_.empty()) return 1;
  int lo = modes_.front().site, hi = lo;
  for (const auto& m : modes_) {
    lo = std::min(lo, m.site);
    hi = std::max(hi, m.site);
  }
  return hi - lo + 1;
}

int BasisWord::max_abs_site() const {
  int r = 0;
  for (const auto& m : modes_) r = std::max(r, std::abs(m.site));
  return r;
}

std::pair<BasisWord, int> canonicalize(std::vector<Mode> modes, Statistics stats) {
  // Insertion sort keeps the inversion count explicit; words are short.
  int swaps = 0;
  for (std::size_t i = 1; i < modes.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      Mode& a = modes[j - 1];
      Mode& b = modes[j];
      if (a.reg == b.reg && a.site == b.site)
        throw DuplicateSite("reg=" + std::to_string(a.reg) + " site=" + std::to_string(a.site));
      if (!canonical_before(b, a)) break;
      if (a.reg == b.reg) ++swaps;
      std::swap(a, b);
    }
  }
  for (std::size_t i = 1; i < modes.size(); ++i)
    if (modes[i - 1].reg == modes[i].reg && modes[i - 1].site == modes[i].site)
      throw DuplicateSite("reg=" + std::to_string(modes[i].reg) + " site=" + std::to_string(modes[i].site));
  BasisWord w;
  w.modes_ = std::move(modes);
  int phase = (stats == Statistics::Fermion && (swaps % 2 != 0)) ? -1 : 1;
  w.phase_ = phase;
  return {std::move(w), phase};
}

BasisWord make_word(std::vector<Mode> modes) {
  auto [w, phase] = canonicalize(std::move(modes), Statistics::Boson);
  (void)phase;
  return w;
}

namespace {

// Number of modes of the same register that sit before position pos.
int same_register_before(const std::vector<Mode>& modes, std::size_t pos, int reg) {
  int n = 0;
  for (std::size_t i = pos; i > 0; --i) {
    if (modes[i - 1].reg != reg) break;
    ++n;
  }
  return n;
}

}  // namespace

int create_in_place(BasisWord& w, const Mode& m, Statistics stats) {
  auto& modes = w.modes_;
  auto it = std::lower_bound(modes.begin(), modes.end(), m, [](const Mode& a, const Mode& b) {
    if (a.reg != b.reg) return a.reg < b.reg;
    return a.site > b.site;
  });
  // At most one particle per (register, site), for both statistics.
  if (it != modes.end() && it->reg == m.reg && it->site == m.site) return 0;
  auto pos = static_cast<std::size_t>(it - modes.begin());
  int sign = 1;
  if (stats == Statistics::Fermion && (same_register_before(modes, pos, m.reg) % 2 != 0)) sign = -1;
  modes.insert(it, m);
  return sign;
}

int annihilate_in_place(BasisWord& w, const Mode& m, Statistics stats) {
  int idx = w.find(m.reg, m.site);
  if (idx < 0) return 0;
  auto& modes = w.modes_;
  auto pos = static_cast<std::size_t>(idx);
  if (modes[pos].sym != m.sym) return 0;
  int sign = 1;
  if (stats == Statistics::Fermion && (same_register_before(modes, pos, m.reg) % 2 != 0)) sign = -1;
  modes.erase(modes.begin() + idx);
  return sign;
}

StateVector::StateVector(const BasisWord& w, const Rational& amp) { add(w, amp); }

void StateVector::add(const BasisWord& w, const Rational& amp) {
  if (amp == 0) return;
  BasisWord key = w;
  Rational a = amp;
  if (key.phase() < 0) {
    a = -a;
    key = make_word(key.modes());
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), a);
  if (!inserted) {
    it->second += a;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational StateVector::amplitude(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

const BasisWord& StateVector::single_word() const {
  if (terms_.size() != 1) throw EmptyResult("expected exactly one basis word, found " + std::to_string(terms_.size()));
  return terms_.begin()->first;
}

Rational StateVector::norm2() const {
  Rational s = 0;
  for (const auto& [w, a] : terms_) s += a * a;
  return s;
}

StateVector& StateVector::operator+=(const StateVector& o) {
  for (const auto& [w, a] : o.terms_) add(w, a);
  return *this;
}

StateVector& StateVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, a] : terms_) a *= c;
  return *this;
}

StateVector operator-(StateVector a, const StateVector& b) {
  for (const auto& [w, amp] : b.terms_) a.add(w, -amp);
  return a;
}

StateVector apply_create(const StateVector& v, const Mode& m, Statistics stats) {
  StateVector out;
  for (const auto& [w, a] : v.terms()) {
    BasisWord x = w;
    int s = create_in_place(x, m, stats);
    if (s != 0) out.add(x, s * a);
  }
  return out;
}

StateVector apply_annihilate(const StateVector& v, const Mode& m, Statistics stats) {
  StateVector out;
  for (const auto& [w, a] : v.terms()) {
    BasisWord x = w;
    int s = annihilate_in_place(x, m, stats);
    if (s != 0) out.add(x, s * a);
  }
  return out;
}

Rational inner_product(const StateVector& a, const StateVector& b) {
  Rational s = 0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [w, amp] : small.terms()) {
    auto other = large.amplitude(w);
    if (other != 0) s += amp * other;
  }
  return s;
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

void dump_word(std::ostream& os, const BasisWord& w) {
  for (const auto& m : w.modes())
    os << "reg=" << m.reg << " site=" << m.site << " sym=" << m.sym.label() << "\n";
  os << "phase=" << (w.phase() < 0 ? "-1" : "+1") << "\n";
}

void dump_state(std::ostream& os, const StateVector& v) {
  bool first = true;
  for (const auto& [w, a] : v.terms()) {
    if (!first) os << "\n";
    first = false;
    os << "amp=" << format_rational(a) << "\n";
    dump_word(os, w);
  }
}

std::string dump_state(const StateVector& v) {
  std::ostringstream os;
  dump_state(os, v);
  return os.str();
}

}  // namespace fockarith

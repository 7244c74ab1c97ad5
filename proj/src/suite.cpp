#include "builders.hpp"
#include "fockarith/integers.hpp"
#include "fockarith/rationals.hpp"
#include "fockarith/sweep.hpp"
#include "fockarith/verification.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace fockarith::verify {

using namespace detail;

namespace {

using Tuple = std::vector<Numeral>;

std::string label(const Tuple& t) {
  std::string s;
  for (const auto& n : t) {
    if (!s.empty()) s += ",";
    s += format_numeral(n);
  }
  return s;
}

BasisWord word_of(const Tuple& t) {
  switch (t.size()) {
    case 1: return encode(t[0]);
    case 2: return pair_word(t[0], t[1]);
    default: return triple_word(t[0], t[1], t[2]);
  }
}

Rational to_rational(const OracleValue& v, int base) {
  Rational r(v.numerator);
  for (int i = 0; i < v.exponent; ++i) r /= base;
  return r;
}

// Mixes one output into a running digest.
void mix(std::size_t& h, const std::string& s) { h = h * 1000003u ^ std::hash<std::string>{}(s); }

struct Acc {
  CheckResult r;

  explicit Acc(std::string id) { r.id = std::move(id); }
  void add(bool ok, const std::string& witness, const std::string& output) {
    ++r.cases;
    mix(r.digest, output);
    if (!ok && r.pass) {
      r.pass = false;
      r.witness = witness;
    }
  }
  CheckResult done() {
    if (r.pass) r.witness = "-";
    return r;
  }
};

class Runner {
 public:
  explicit Runner(const SuiteConfig& c)
      : c_(c), f_(c.flavor), k_(c.base), spec_{c.base, c.stats, c.opts}, m_(c.base, c.stats, c.opts) {
    BigInt full = 1;
    for (int i = 0; i < c.max_len; ++i) full *= k_;
    span_ = full <= c.exhaustive_limit ? canonical_span(f_, k_, c.max_len)
                                       : random_span(f_, k_, c.max_len, c.random_words, c.seed);
    for (const auto& n : span_) singles_.push_back({n});
    pairs_ = tuples(2, c.seed ^ 0x9e3779b97f4a7c15ull);
    triples_ = tuples(3, c.seed ^ 0xc2b2ae3d27d4eb4full);
    js_ = f_ == Flavor::Rat ? std::vector<int>{-2, -1, 1, 2} : std::vector<int>{1, 2, 3};
    zero_ = numeral_from_int(0, f_, k_);
    one_ = numeral_from_int(1, f_, k_);
  }

  SuiteReport run() {
    encoding();
    successor_oracle();
    power_law();
    shift_isometry();
    if (f_ == Flavor::Nat) shift_projector(); else bilateral();
    diagonal_zero();
    injective();
    commute();
    if (f_ == Flavor::Nat) non_successor();
    plus_successor();
    add_oracle();
    mul_oracle();
    ring_laws();
    identities();
    if (f_ != Flavor::Nat) additive_inverse();
    times_successor();
    successor_times();
    if (f_ == Flavor::Nat) distributive_step();
    discreteness();
    nines();
    unitary_add();
    unitary_mul();
    shift_u();
    if (f_ != Flavor::Nat) division_absence();
    SuiteReport rep;
    rep.config = c_;
    rep.checks = std::move(out_);
    return rep;
  }

 private:
  const SuiteConfig& c_;
  Flavor f_;
  int k_;
  MachineSpec spec_;
  Machine m_;
  std::vector<Numeral> span_;
  std::vector<Tuple> singles_, pairs_, triples_;
  std::vector<int> js_;
  Numeral zero_, one_;
  std::vector<CheckResult> out_;

  std::vector<Tuple> tuples(std::size_t arity, std::uint64_t seed) const {
    std::vector<Tuple> out;
    double total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= static_cast<double>(span_.size());
    if (total <= static_cast<double>(c_.tuple_samples)) {
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        Tuple t;
        for (auto i : idx) t.push_back(span_[i]);
        out.push_back(std::move(t));
        std::size_t p = 0;
        while (p < arity && ++idx[p] == span_.size()) idx[p++] = 0;
        if (p == arity) return out;
      }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, span_.size() - 1);
    for (std::size_t n = 0; n < c_.tuple_samples; ++n) {
      Tuple t;
      for (std::size_t i = 0; i < arity; ++i) t.push_back(span_[pick(rng)]);
      out.push_back(std::move(t));
    }
    return out;
  }

  std::vector<StateVector> images(const Op& op, const std::vector<BasisWord>& words) {
    return sweep(spec_, op, words, c_.parallel).images;
  }

  static std::vector<BasisWord> words_of(const std::vector<Tuple>& ts) {
    std::vector<BasisWord> w;
    w.reserve(ts.size());
    for (const auto& t : ts) w.push_back(word_of(t));
    return w;
  }

  static std::vector<std::string> labels_of(const std::vector<Tuple>& ts) {
    std::vector<std::string> l;
    l.reserve(ts.size());
    for (const auto& t : ts) l.push_back(label(t));
    return l;
  }

  // Passes when op maps every word to want(i).
  void expect(Acc& acc, const std::vector<BasisWord>& words, const std::vector<std::string>& labels, const Op& op,
              const std::function<StateVector(std::size_t)>& want) {
    std::vector<StateVector> got;
    try {
      got = images(op, words);
    } catch (const Error& e) {
      acc.add(false, labels.empty() ? "-" : labels.front(), e.what());
      return;
    }
    for (std::size_t i = 0; i < words.size(); ++i) acc.add(got[i] == want(i), labels[i], dump_state(got[i]));
  }

  void expect(Acc& acc, const std::vector<Tuple>& ts, const Op& op, const std::function<StateVector(const Tuple&)>& want) {
    expect(acc, words_of(ts), labels_of(ts), op, [&](std::size_t i) { return want(ts[i]); });
  }

  void equal_ops(Acc& acc, const std::vector<BasisWord>& words, const std::vector<std::string>& labels, const Op& lhs,
                 const Op& rhs) {
    std::vector<StateVector> want;
    try {
      want = images(rhs, words);
    } catch (const Error& e) {
      acc.add(false, labels.empty() ? "-" : labels.front(), e.what());
      return;
    }
    expect(acc, words, labels, lhs, [&](std::size_t i) { return want[i]; });
  }

  void equal_ops(Acc& acc, const std::vector<Tuple>& ts, const Op& lhs, const Op& rhs) {
    equal_ops(acc, words_of(ts), labels_of(ts), lhs, rhs);
  }

  void identity(Acc& acc, const std::vector<Tuple>& ts, const Op& op) {
    expect(acc, ts, op, [](const Tuple& t) { return StateVector(word_of(t)); });
  }

  // Serial per-tuple check; fn returns (ok, output text). Library errors fail the case.
  void each(Acc& acc, const std::vector<Tuple>& ts, const std::function<std::pair<bool, std::string>(const Tuple&)>& fn) {
    for (const auto& t : ts) {
      try {
        const auto [ok, text] = fn(t);
        acc.add(ok, label(t), text);
      } catch (const Error& e) {
        acc.add(false, label(t), e.what());
      }
    }
  }

  void push(Acc& acc) { out_.push_back(acc.done()); }

  OracleValue step(int j) const {
    if (j > 0) {
      BigInt v = 1;
      for (int i = 1; i < j; ++i) v *= k_;
      return {v, 0};
    }
    return {1, -j};
  }

  Numeral numeral(const OracleValue& v) const { return numeral_from_rational(to_rational(v, k_), f_, k_); }
  Rational value(const Numeral& n) const { return to_rational(oracle_value(n), k_); }
  Op S(int j, int reg = 1) const { return successor_op(f_, j, reg); }
  Op Sd(int j, int reg = 1) const { return successor_adjoint_op(f_, j, reg); }

  // ---------------------------------------------------------------- checks

  void encoding() {
    Acc acc("encoding");
    each(acc, singles_, [&](const Tuple& t) {
      const Numeral& n = t[0];
      const std::string text = format_numeral(n);
      const bool ok = decode(encode(n), f_, k_) == n && parse_numeral(text, f_, k_) == n;
      return std::pair{ok, text};
    });
    push(acc);
  }

  void successor_oracle() {
    Acc acc("successor_oracle");
    for (int j : js_)
      expect(acc, singles_, S(j), [&](const Tuple& t) {
        return StateVector(encode(numeral(oracle(OracleOp::Add, oracle_value(t[0]), step(j), k_))));
      });
    push(acc);
  }

  void power_law() {
    Acc acc("power_law");
    for (int j : js_) equal_ops(acc, singles_, Op::power(S(j), static_cast<unsigned>(k_)), S(next_successor_index(j)));
    push(acc);
  }

  void shift_isometry() {
    Acc acc("shift_isometry");
    for (int j : js_) identity(acc, singles_, Sd(j) * S(j));
    push(acc);
  }

  void shift_projector() {
    Acc acc("shift_projector");
    const auto words = words_of(singles_);
    const auto labels = labels_of(singles_);
    for (int j : js_) {
      const Op q = S(j) * Sd(j);
      equal_ops(acc, words, labels, q * q, q);
      std::vector<StateVector> img;
      try {
        img = images(q, words);
      } catch (const Error& e) {
        acc.add(false, labels.front(), e.what());
        continue;
      }
      for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = 0; b < words.size(); ++b) {
          const bool ok = img[b].amplitude(words[a]) == img[a].amplitude(words[b]);
          acc.add(ok, labels[a] + "," + labels[b], format_rational(img[b].amplitude(words[a])));
        }
    }
    push(acc);
  }

  void bilateral() {
    Acc acc("bilateral");
    for (int j : js_) identity(acc, singles_, S(j) * Sd(j));
    push(acc);
  }

  void diagonal_zero() {
    Acc acc("diagonal_zero");
    const auto words = words_of(singles_);
    const auto labels = labels_of(singles_);
    for (int j : js_) expect(acc, words, labels, S(j), [&](std::size_t i) {
        StateVector v = m_.apply(S(j), words[i]);
        return v.amplitude(words[i]) == 0 ? v : StateVector();
      });
    push(acc);
  }

  void injective() {
    Acc acc("injective");
    const auto words = words_of(singles_);
    for (int j : js_) {
      std::vector<StateVector> img;
      try {
        img = images(S(j), words);
      } catch (const Error& e) {
        acc.add(false, "-", e.what());
        continue;
      }
      std::map<BasisWord, std::size_t> seen;
      for (std::size_t i = 0; i < words.size(); ++i) {
        const bool single = img[i].size() == 1;
        bool ok = single;
        if (single) ok = seen.emplace(img[i].terms().begin()->first, i).second;
        acc.add(ok, label(singles_[i]), dump_state(img[i]));
      }
    }
    push(acc);
  }

  void commute() {
    Acc acc("commute");
    for (std::size_t a = 0; a < js_.size(); ++a)
      for (std::size_t b = a + 1; b < js_.size(); ++b)
        equal_ops(acc, singles_, S(js_[a]) * S(js_[b]), S(js_[b]) * S(js_[a]));
    push(acc);
  }

  // No natural precedes 0, and V_j^dag kills exactly the words below k^{j-1}.
  void non_successor() {
    Acc acc("non_successor");
    for (int j : js_) {
      const Rational floor = to_rational(step(j), k_);
      expect(acc, singles_, Sd(j), [&](const Tuple& t) {
        if (value(t[0]) < floor) return StateVector();
        return StateVector(encode(numeral(oracle(OracleOp::Sub, oracle_value(t[0]), step(j), k_))));
      });
    }
    push(acc);
  }

  void plus_successor() {
    Acc acc("plus_successor");
    const Op plus = plus_op(f_);
    for (int j : js_) equal_ops(acc, pairs_, plus * S(j, 2), S(j, 2) * plus);
    push(acc);
  }

  void add_oracle() {
    Acc acc("add_oracle");
    expect(acc, pairs_, plus_op(f_), [&](const Tuple& t) {
      return StateVector(pair_word(t[0], numeral(oracle(OracleOp::Add, oracle_value(t[0]), oracle_value(t[1]), k_))));
    });
    push(acc);
  }

  void mul_oracle() {
    Acc acc("mul_oracle");
    expect(acc, triples_, times_op(f_), [&](const Tuple& t) {
      const OracleValue st = oracle(OracleOp::Mul, oracle_value(t[0]), oracle_value(t[1]), k_);
      return StateVector(triple_word(t[0], t[1], numeral(oracle(OracleOp::Add, oracle_value(t[2]), st, k_))));
    });
    push(acc);
  }

  Numeral sum(const Numeral& a, const Numeral& b) { return add(m_, a, b); }
  Numeral prod(const Numeral& a, const Numeral& b) { return multiply(m_, a, b, zero_); }

  void ring_laws() {
    auto same = [](const Numeral& a, const Numeral& b) { return std::pair{a == b, format_numeral(a)}; };
    Acc add_comm("add_commutative");
    each(add_comm, pairs_, [&](const Tuple& t) { return same(sum(t[0], t[1]), sum(t[1], t[0])); });
    push(add_comm);
    Acc add_assoc("add_associative");
    each(add_assoc, triples_,
         [&](const Tuple& t) { return same(sum(sum(t[0], t[1]), t[2]), sum(t[0], sum(t[1], t[2]))); });
    push(add_assoc);
    Acc mul_comm("mul_commutative");
    each(mul_comm, pairs_, [&](const Tuple& t) { return same(prod(t[0], t[1]), prod(t[1], t[0])); });
    push(mul_comm);
    Acc mul_assoc("mul_associative");
    each(mul_assoc, triples_,
         [&](const Tuple& t) { return same(prod(prod(t[0], t[1]), t[2]), prod(t[0], prod(t[1], t[2]))); });
    push(mul_assoc);
    Acc dist("distributive");
    each(dist, triples_,
         [&](const Tuple& t) { return same(prod(t[0], sum(t[1], t[2])), sum(prod(t[0], t[1]), prod(t[0], t[2]))); });
    push(dist);
  }

  void identities() {
    Acc add_id("add_identity");
    each(add_id, singles_, [&](const Tuple& t) {
      const Numeral a = sum(zero_, t[0]);
      return std::pair{a == t[0] && sum(t[0], zero_) == t[0], format_numeral(a)};
    });
    push(add_id);
    Acc mul_id("mul_identity");
    each(mul_id, singles_, [&](const Tuple& t) {
      const Numeral a = prod(one_, t[0]);
      return std::pair{a == t[0] && prod(t[0], one_) == t[0] && prod(zero_, t[0]) == zero_, format_numeral(a)};
    });
    push(mul_id);
  }

  void additive_inverse() {
    Acc acc("additive_inverse");
    each(acc, singles_, [&](const Tuple& t) {
      const Numeral neg = t[0].is_zero() ? t[0] : decode(m_.apply_word(sign_flip(), encode(t[0])), f_, k_);
      const bool ok = value(neg) == -value(t[0]) && sum(neg, t[0]) == zero_;
      return std::pair{ok, format_numeral(neg)};
    });
    push(acc);
  }

  // times (S_j on the first register) |s, t, 0> == |s + S_j(0), t, (s + S_j(0)) t>.
  void times_successor() {
    Acc acc("times_successor");
    std::vector<Tuple> ts;
    for (const auto& p : pairs_) ts.push_back({p[0], p[1], zero_});
    for (int j : js_)
      expect(acc, ts, times_op(f_) * S(j), [&](const Tuple& t) {
        const OracleValue s = oracle(OracleOp::Add, oracle_value(t[0]), step(j), k_);
        const OracleValue p = oracle(OracleOp::Mul, s, oracle_value(t[1]), k_);
        return StateVector(triple_word(numeral(s), t[1], numeral(p)));
      });
    push(acc);
  }

  // With x = S_1(y): x * S_j(0) == y * S_j(0) + S_j(0), both sides through operators.
  void successor_times() {
    Acc acc("successor_times");
    for (int j : js_) {
      const Numeral unit = successor(m_, zero_, j);
      each(acc, singles_, [&](const Tuple& t) {
        const Numeral x = successor(m_, t[0], 1);
        const Numeral lhs = prod(x, unit);
        return std::pair{lhs == sum(unit, prod(t[0], unit)), format_numeral(lhs)};
      });
    }
    push(acc);
  }

  void distributive_step() {
    Acc acc("distributive_step");
    each(acc, pairs_, [&](const Tuple& t) {
      bool ok = true;
      for (int j = 1; j <= t[0].int_len(); ++j) ok = ok && check_distributive_step(m_, t[0], t[1], j).ok();
      return std::pair{ok, std::string(ok ? "ok" : "fail")};
    });
    push(acc);
  }

  // Integers are discrete under S_1; rationals are not, R_{-1} lands in between.
  void discreteness() {
    std::vector<Rational> values;
    for (const auto& n : span_) values.push_back(value(n));
    if (f_ == Flavor::Rat) {
      Acc acc("density");
      each(acc, singles_, [&](const Tuple& t) {
        const Rational x = value(t[0]);
        const Rational mid = value(successor(m_, t[0], -1));
        const Rational up = value(successor(m_, t[0], 1));
        return std::pair{x < mid && mid < up, format_rational(mid)};
      });
      push(acc);
    } else {
      Acc acc("discreteness_j1");
      each(acc, singles_, [&](const Tuple& t) {
        const Rational x = value(t[0]);
        const Rational up = value(successor(m_, t[0], 1));
        bool ok = up == x + 1;
        for (const auto& v : values) ok = ok && !(x < v && v < up);
        return std::pair{ok, format_rational(up)};
      });
      push(acc);
    }
    Acc acc("discreteness_fails_j2");
    each(acc, singles_, [&](const Tuple& t) {
      const Rational x = value(t[0]);
      const Rational mid = value(successor(m_, t[0], 1));
      const Rational up = value(successor(m_, t[0], 2));
      return std::pair{x < mid && mid < up, format_rational(up)};
    });
    push(acc);
  }

  // S_{next(b)} == S_a prod_{i=a..b} (S_i)^{k-1}: the 99..9 + 1 identity.
  void nines() {
    Acc acc("nines");
    const int a = js_.front();
    std::vector<Op> f{S(a)};
    for (int b : js_) {
      f.push_back(Op::power(S(b), static_cast<unsigned>(k_ - 1)));
      equal_ops(acc, singles_, S(next_successor_index(b)), Op::product(f));
    }
    push(acc);
  }

  void unitary_add() {
    Acc acc("unitary_add");
    identity(acc, pairs_, minus_op(f_) * plus_op(f_));
    if (f_ != Flavor::Nat) identity(acc, pairs_, plus_op(f_) * minus_op(f_));
    push(acc);
  }

  void unitary_mul() {
    Acc acc("unitary_mul");
    const Op t = times_op(f_);
    const Op td = adjoint(t);
    identity(acc, triples_, td * t);
    if (f_ != Flavor::Nat) identity(acc, triples_, t * td);
    push(acc);
  }

  void shift_u() {
    Acc acc("shift_U");
    const Op u = shift_op(f_);
    const Op ud = shift_adjoint_op(f_);
    if (f_ == Flavor::Rat) {
      std::vector<Tuple> nonzero;
      for (const auto& t : singles_)
        if (!t[0].is_zero()) nonzero.push_back(t);
      identity(acc, nonzero, ud * u);
      identity(acc, nonzero, u * ud);
      const auto words = words_of(nonzero);
      expect(acc, words, labels_of(nonzero), u, [&](std::size_t i) {
        StateVector v = m_.apply(u, words[i]);
        return v.amplitude(words[i]) == 0 ? v : StateVector();
      });
      push(acc);
      return;
    }
    identity(acc, singles_, ud * u);
    // U U^dag acts on U's range too, which holds padded words.
    std::vector<BasisWord> words = words_of(singles_);
    std::vector<std::string> labels = labels_of(singles_);
    for (const auto& t : singles_) {
      try {
        const BasisWord w = m_.apply_word(u, encode(t[0]));
        words.push_back(w);
        labels.push_back(format_numeral(decode_loose(w, f_, k_)));
      } catch (const Error& e) {
        acc.add(false, label(t), e.what());
      }
    }
    const Op q = u * ud;
    if (f_ == Flavor::Nat) {
      equal_ops(acc, words, labels, q, P(ProjectorSpec::digit_eq(1, 1, 0)) * P(ProjectorSpec::occ(1, 2)));
    } else {
      equal_ops(acc, words, labels, q * q, q);
    }
    push(acc);
  }

  void division_absence() {
    Acc acc("division_absence");
    try {
      if (f_ == Flavor::Int) {
        const Numeral two = numeral_from_int(2, f_, k_);
        const auto rep = integers::check_division_absence(m_, two, one_, 10);
        acc.add(!rep.witness_found, rep.witness_found ? format_numeral(rep.witness) : "-",
                std::to_string(rep.checked));
      } else {
        // 1/p has no finite expansion when the prime p does not divide the base.
        int p = 2;
        while (k_ % p == 0) p = p == 2 ? 3 : p + 2;
        const Numeral s = numeral_from_int(p, f_, k_);
        const auto rep = rationals::check_division_absence(m_, s, one_, 3, 3);
        acc.add(!rep.witness_found, rep.witness_found ? format_numeral(rep.witness) : "-",
                std::to_string(rep.literal_checked));
      }
    } catch (const Error& e) {
      acc.add(false, "-", e.what());
    }
    push(acc);
  }
};

}  // namespace

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

std::size_t SuiteReport::failed() const { return checks.size() - passed(); }

const CheckResult* SuiteReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::string SuiteReport::format() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << "check=" << c.id << " flavor=" << to_string(config.flavor) << " k=" << config.base
       << " stats=" << to_string(config.stats) << " result=" << (c.pass ? "pass" : "fail") << " witness=" << c.witness
       << "\n";
  os << "summary checks=" << checks.size() << " passed=" << passed() << " failed=" << failed() << "\n";
  return os.str();
}

SuiteReport run_axiom_suite(const SuiteConfig& config) {
  if (config.base < 2) throw InvalidDigit("base must be >= 2");
  if (config.max_len < 2) throw DomainError("max_len must be >= 2");
  return Runner(config).run();
}

bool same_outcomes(const SuiteReport& a, const SuiteReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    const auto& x = a.checks[i];
    const auto& y = b.checks[i];
    if (x.id != y.id || x.pass != y.pass || x.digest != y.digest || x.cases != y.cases) return false;
  }
  return true;
}

}  // namespace fockarith::verify

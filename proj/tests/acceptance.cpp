// Acceptance run: one line per criterion, "AC<n> pass|fail <details>".
// Exit status is nonzero when any criterion fails.

#include "fockarith/integers.hpp"
#include "fockarith/naturals.hpp"
#include "fockarith/physical_map.hpp"
#include "fockarith/rationals.hpp"
#include "fockarith/sweep.hpp"
#include "fockarith/verification.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

using namespace fockarith;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kAc1Seconds = 1.0;
constexpr double kAc3Seconds = 300.0;
constexpr double kAc9Seconds = 120.0;
constexpr double kSuccessorSlopeCap = 1.3;
constexpr double kPlusSlopeCap = 2.5;
constexpr double kTimesSlopeCap = 3.5;
constexpr int kSpanLength = 4;
constexpr int kDecompositionSpanLength = 3;
constexpr std::size_t kOracleSamples = 500;
constexpr int kOracleMaxDigits = 6;
constexpr std::size_t kRandomPairsBase10 = 300;
constexpr long kIntDivisionBound = 50;
constexpr int kRatDivisionDigits = 6;
constexpr int kRatDivisionLiteral = 3;
constexpr std::uint64_t kSeed = 20240601;


struct Line {
  bool pass = true;
  std::ostringstream detail;
};

bool report(int n, Line& l) {
  std::cout << "AC" << n << " " << (l.pass ? "pass" : "fail") << " " << l.detail.str() << std::endl;
  return l.pass;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<BasisWord> words_of(const std::vector<Numeral>& ns) {
  std::vector<BasisWord> out;
  for (const auto& n : ns) out.push_back(encode(n));
  return out;
}

// A single word with amplitude exactly +1.
bool unit_image(const StateVector& v) { return v.terms().size() == 1 && v.terms().begin()->second == 1; }

// ---------------------------------------------------------------- reference
// Exact values straight from the numeral text, independent of the library.

using Big = boost::multiprecision::cpp_int;

struct Exact {
  Big n;
  int e = 0;  // value = n / k^e
};

int digit_value(char c) { return c <= '9' ? c - '0' : c - 'a' + 10; }
char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10); }

Exact exact_of(const std::string& text, int k) {
  Exact x;
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  bool frac = false;
  for (; i < text.size(); ++i) {
    if (text[i] == '.') {
      frac = true;
      continue;
    }
    x.n = x.n * k + digit_value(text[i]);
    if (frac) ++x.e;
  }
  if (neg) x.n = -x.n;
  return x;
}

Big kpow(int k, int e) {
  Big p = 1;
  for (int i = 0; i < e; ++i) p *= k;
  return p;
}

Exact add_exact(const Exact& a, const Exact& b, int k) {
  const int e = std::max(a.e, b.e);
  return {a.n * kpow(k, e - a.e) + b.n * kpow(k, e - b.e), e};
}

Exact mul_exact(const Exact& a, const Exact& b) { return {a.n * b.n, a.e + b.e}; }

std::string text_of(Exact x, Flavor f, int k) {
  const bool neg = x.n < 0;
  if (neg) x.n = -x.n;
  while (x.e > 0 && x.n % k == 0) {
    x.n /= k;
    --x.e;
  }
  std::string digits;
  Big v = x.n;
  do {
    digits.insert(digits.begin(), digit_char(static_cast<int>(v % k)));
    v /= k;
  } while (v > 0);
  while (static_cast<int>(digits.size()) <= x.e) digits.insert(digits.begin(), '0');
  std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(x.e));
  std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(x.e));
  if (f == Flavor::Nat) return whole;
  const std::string sign = neg ? "-" : "+";
  if (f == Flavor::Int) return sign + whole;
  return sign + whole + "." + (frac.empty() ? "0" : frac);
}

std::string random_text(std::mt19937_64& rng, Flavor f, int k) {
  std::uniform_int_distribution<int> len(1, kOracleMaxDigits), digit(0, k - 1), top(1, k - 1), coin(0, 1);
  auto part = [&](bool leading_first) {
    const int L = len(rng);
    std::string s;
    for (int i = 0; i < L; ++i) s.push_back(digit_char(i == 0 && L > 1 && leading_first ? top(rng) : digit(rng)));
    // Fraction parts keep their nonzero digit at the far end.
    if (!leading_first && L > 1) s.back() = digit_char(top(rng));
    return s;
  };
  std::string s = part(true);
  if (f == Flavor::Rat) s += "." + part(false);
  if (f == Flavor::Nat) return s;
  const bool zero = s.find_first_not_of("0.") == std::string::npos;
  return (coin(rng) == 1 && !zero ? "-" : "+") + s;
}

// ---------------------------------------------------------------- criteria

bool ac1() {
  Line l;
  const auto t0 = Clock::now();
  Machine m(10, Statistics::Boson);
  const Numeral n = parse_numeral("364", Flavor::Nat, 10);
  const std::string out = format_numeral(successor(m, n, 7));
  const std::string pad = format_numeral(decode_loose(m.apply_word(naturals::pad(7), encode(n)), Flavor::Nat, 10));
  const double secs = since(t0);
  l.pass = out == "1000364" && pad == "000364" && secs < kAc1Seconds;
  l.detail << "out=" << out << " pad=" << pad << " seconds=" << secs;
  return report(1, l);
}

bool ac2() {
  Line l;
  Machine m(10, Statistics::Boson);
  const Numeral zero = parse_numeral("+0", Flavor::Int, 10);
  std::vector<Op> rhs;
  for (int j = 2; j <= 4; ++j) rhs.push_back(Op::power(integers::successor_plus(j), 9));
  const std::string expansion = format_numeral(decode(m.apply_word(Op::product(rhs), encode(zero)), Flavor::Int, 10));
  const Op lhs = integers::successor_plus_adjoint(2) * integers::successor_plus(5);
  const std::string composed = format_numeral(decode(m.apply_word(lhs, encode(zero)), Flavor::Int, 10));
  const BasisWord big = encode(parse_numeral("+10000", Flavor::Int, 10));
  const std::string adjoint = format_numeral(decode(m.apply_word(integers::successor_plus_adjoint(2), big), Flavor::Int, 10));
  const std::string sub = format_numeral(
      subtract(m, parse_numeral("10", Flavor::Nat, 10), parse_numeral("10000", Flavor::Nat, 10)));
  l.pass = expansion == "+9990" && composed == "+9990" && adjoint == "+9990" && sub == "9990";
  l.detail << "expansion=" << expansion << " composed=" << composed << " adjoint=" << adjoint << " subtract=" << sub;
  return report(2, l);
}

struct PowerLawRun {
  std::size_t counterexamples = 0;
  std::size_t cases = 0;
  bool unit_phases = true;
  std::vector<StateVector> images;
};

PowerLawRun power_laws(Statistics st) {
  PowerLawRun r;
  for (int k : {2, 3}) {
    const MachineSpec spec{k, st, {}};
    auto run = [&](Flavor f, const std::vector<int>& js) {
      const auto words = words_of(verify::canonical_span(f, k, kSpanLength));
      for (int j : js) {
        const Op lhs = Op::power(successor_op(f, j), static_cast<unsigned>(k));
        const Op rhs = successor_op(f, next_successor_index(j));
        const auto a = sweep_serial(spec, lhs, words);
        const auto b = sweep_serial(spec, rhs, words);
        for (std::size_t i = 0; i < words.size(); ++i) {
          ++r.cases;
          if (!(a.images[i] == b.images[i])) ++r.counterexamples;
          if (!unit_image(b.images[i])) r.unit_phases = false;
          r.images.push_back(b.images[i]);
        }
      }
    };
    run(Flavor::Nat, {1, 2, 3, 4});
    run(Flavor::Int, {1, 2, 3});
    run(Flavor::Rat, {-3, -2, -1, 1, 2, 3});
  }
  return r;
}

struct SuiteRuns {
  std::vector<verify::SuiteReport> reports;
};

SuiteRuns suites(Statistics st) {
  SuiteRuns s;
  for (Flavor f : {Flavor::Nat, Flavor::Int, Flavor::Rat})
    for (int k : {2, 3}) {
      verify::SuiteConfig c;
      c.base = k;
      c.stats = st;
      c.flavor = f;
      c.max_len = kSpanLength;
      c.seed = kSeed;
      s.reports.push_back(verify::run_axiom_suite(c));
    }
  return s;
}

const char* const kShiftChecks[] = {"shift_isometry", "shift_projector", "bilateral", "diagonal_zero",
                                    "unitary_add",    "unitary_mul",     "shift_U"};

struct ShiftTally {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::string first_failure = "-";
};

ShiftTally shift_tally(const SuiteRuns& s) {
  ShiftTally t;
  for (const auto& rep : s.reports)
    for (const char* id : kShiftChecks) {
      const auto* c = rep.find(id);
      if (c == nullptr) continue;
      ++t.checks;
      if (!c->pass) {
        ++t.failed;
        if (t.first_failure == "-") t.first_failure = c->id + "@" + to_string(rep.config.flavor) + ":" + c->witness;
      }
    }
  return t;
}

struct OracleRun {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch = "-";
  std::vector<std::string> outputs;
};

OracleRun oracle_equivalence(Statistics st) {
  OracleRun r;
  for (Flavor f : {Flavor::Nat, Flavor::Int, Flavor::Rat})
    for (int k : {2, 10}) {
      Machine m(k, st);
      std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(k) * 7 + static_cast<std::uint64_t>(f));
      for (std::size_t i = 0; i < kOracleSamples; ++i) {
        const std::string s = random_text(rng, f, k), t = random_text(rng, f, k), x = random_text(rng, f, k);
        const Exact es = exact_of(s, k), et = exact_of(t, k), ex = exact_of(x, k);
        const std::string want_add = text_of(add_exact(et, es, k), f, k);
        const std::string want_mul = text_of(add_exact(ex, mul_exact(es, et), k), f, k);
        const Numeral ns = parse_numeral(s, f, k), nt = parse_numeral(t, f, k), nx = parse_numeral(x, f, k);
        const std::string got_add = format_numeral(add(m, ns, nt));
        const std::string got_mul = format_numeral(multiply(m, ns, nt, nx));
        r.cases += 2;
        r.outputs.push_back(got_add);
        r.outputs.push_back(got_mul);
        for (const auto& [got, want, what] : {std::tuple{got_add, want_add, "add"}, std::tuple{got_mul, want_mul, "mul"}}) {
          if (got == want) continue;
          ++r.mismatches;
          if (r.first_mismatch == "-") r.first_mismatch = std::string(what) + ":" + s + "," + t + "," + x + "->" + got;
        }
      }
    }
  return r;
}

bool ac7() {
  Line l;
  std::size_t vec_bad = 0, rec_bad = 0, dist_bad = 0, pairs = 0, steps = 0;
  auto conv = [](const verify::Digits& s, const verify::Digits& t) {
    verify::ExponentVector e;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) e[static_cast<int>(a + b) + 1] += s[a] * t[b];
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
  };
  auto check_pair = [&](Machine& m, const Numeral& s, const Numeral& t) {
    ++pairs;
    const auto ds = verify::digits_of(s), dt = verify::digits_of(t);
    const auto e = verify::exponent_vectors(ds, dt);
    if (!(e == conv(ds, dt))) ++vec_bad;
    const Exact want = mul_exact(exact_of(format_numeral(s), m.base()), exact_of(format_numeral(t), m.base()));
    const std::string want_text = text_of(want, Flavor::Nat, m.base());
    const std::string rebuilt = format_numeral(verify::reconstruct(m, e));
    const std::string applied = format_numeral(multiply(m, s, t, parse_numeral("0", Flavor::Nat, m.base())));
    if (rebuilt != want_text || applied != want_text) ++rec_bad;
  };
  Machine m2(2, Statistics::Boson);
  const auto span2 = verify::canonical_span(Flavor::Nat, 2, kSpanLength);
  for (const auto& s : span2)
    for (const auto& t : span2) check_pair(m2, s, t);
  Machine m10(10, Statistics::Boson);
  const auto r10 = verify::random_span(Flavor::Nat, 10, kOracleMaxDigits, 2 * kRandomPairsBase10, kSeed);
  for (std::size_t i = 0; i + 1 < r10.size() && i / 2 < kRandomPairsBase10; i += 2) check_pair(m10, r10[i], r10[i + 1]);
  const auto span3 = verify::canonical_span(Flavor::Nat, 2, 3);
  for (const auto& s : span3)
    for (const auto& t : span3)
      for (int j = 1; j <= s.int_len(); ++j) {
        ++steps;
        if (!verify::check_distributive_step(m2, s, t, j).ok()) ++dist_bad;
      }
  l.pass = vec_bad == 0 && rec_bad == 0 && dist_bad == 0;
  l.detail << "pairs=" << pairs << " vector_mismatches=" << vec_bad << " reconstruction_mismatches=" << rec_bad
           << " distributive_steps=" << steps << " distributive_failures=" << dist_bad;
  return report(7, l);
}

bool ac8() {
  Line l;
  std::size_t checked = 0, failed = 0;
  for (int k : {2, 3}) {
    Machine m(k, Statistics::Boson);
    const auto span = verify::canonical_span(Flavor::Int, k, kDecompositionSpanLength);
    for (int j = 1; j <= 3; ++j) {
      const auto rep = verify::check_appendixB_decomposition(m, j, span);
      checked += rep.checked;
      if (!rep.ok) {
        ++failed;
        if (l.pass) l.detail << "first_failure=k" << k << "j" << j << ":" << rep.detail << " ";
        l.pass = false;
      }
    }
  }
  l.detail << "words=" << checked << " failed_cases=" << failed;
  return report(8, l);
}

bool ac9() {
  Line l;
  const auto t0 = Clock::now();
  Machine m(2, Statistics::Boson);
  ResourceLedger ledger;
  for (int L : {4, 8, 16, 24, 32, 48, 64}) {
    ledger.record("successor", L, measure_successor(m, L));
    ledger.record("plus", L, measure_plus(m, L));
    ledger.record("times", L, measure_times(m, L));
  }
  const auto sv = fit_scaling(ledger.series("successor"));
  const auto sp = fit_scaling(ledger.series("plus"));
  const auto st = fit_scaling(ledger.series("times"));
  std::vector<std::pair<double, double>> planted;
  for (double L : {4.0, 8.0, 16.0, 24.0, 32.0, 48.0, 64.0}) planted.emplace_back(L, std::pow(2.0, L));
  const auto pe = fit_scaling(planted);
  const double secs = since(t0);
  auto poly = [](const ScalingReport& r, double cap) { return r.verdict == ScalingVerdict::Poly && r.slope <= cap; };
  l.pass = poly(sv, kSuccessorSlopeCap) && poly(sp, kPlusSlopeCap) && poly(st, kTimesSlopeCap) &&
           pe.verdict == ScalingVerdict::Exp && secs < kAc9Seconds;
  l.detail << "successor:" << sv.line() << " plus:" << sp.line() << " times:" << st.line()
           << " planted:" << pe.line() << " seconds=" << secs;
  return report(9, l);
}

bool ac10() {
  Line l;
  Machine m(10, Statistics::Boson);
  const auto ir = integers::check_division_absence(m, parse_numeral("+2", Flavor::Int, 10),
                                                   parse_numeral("+1", Flavor::Int, 10), kIntDivisionBound);
  const auto rr = rationals::check_division_absence(m, parse_numeral("+3.0", Flavor::Rat, 10),
                                                    parse_numeral("+1.0", Flavor::Rat, 10), kRatDivisionDigits,
                                                    kRatDivisionLiteral);
  l.pass = !ir.witness_found && !rr.witness_found;
  l.detail << "int_checked=" << ir.checked << " int_witness=" << (ir.witness_found ? format_numeral(ir.witness) : "-")
           << " rat_literal=" << rr.literal_checked << " rat_grid_words=" << rr.grid_words
           << " rat_probes=" << rr.bisection_probes
           << " rat_witness=" << (rr.witness_found ? format_numeral(rr.witness) : "-");
  return report(10, l);
}

}  // namespace

int main() {
  bool ok = true;
  try {
    ok = ac1() && ok;
    ok = ac2() && ok;

    // AC3 to AC5 run under both statistics; AC6 compares the two runs.
    const auto t3 = Clock::now();
    const PowerLawRun pb = power_laws(Statistics::Boson);
    const PowerLawRun pf = power_laws(Statistics::Fermion);
    const double secs3 = since(t3);
    {
      Line l;
      l.pass = pb.counterexamples == 0 && pf.counterexamples == 0 && secs3 < kAc3Seconds;
      l.detail << "cases=" << pb.cases + pf.cases << " counterexamples=" << pb.counterexamples + pf.counterexamples
               << " seconds=" << secs3;
      ok = report(3, l) && ok;
    }

    const SuiteRuns sb = suites(Statistics::Boson);
    const SuiteRuns sf = suites(Statistics::Fermion);
    const ShiftTally tb = shift_tally(sb), tf = shift_tally(sf);
    {
      Line l;
      l.pass = tb.failed == 0 && tf.failed == 0 && tb.checks > 0;
      l.detail << "checks=" << tb.checks + tf.checks << " failed=" << tb.failed + tf.failed
               << " first_failure=" << (tb.first_failure != "-" ? tb.first_failure : tf.first_failure);
      ok = report(4, l) && ok;
    }

    const OracleRun ob = oracle_equivalence(Statistics::Boson);
    const OracleRun of = oracle_equivalence(Statistics::Fermion);
    {
      Line l;
      l.pass = ob.mismatches == 0 && of.mismatches == 0;
      l.detail << "cases=" << ob.cases + of.cases << " mismatches=" << ob.mismatches + of.mismatches
               << " first_mismatch=" << (ob.first_mismatch != "-" ? ob.first_mismatch : of.first_mismatch);
      ok = report(5, l) && ok;
    }

    {
      Line l;
      std::size_t suite_fail = 0;
      bool same = sb.reports.size() == sf.reports.size();
      for (std::size_t i = 0; same && i < sb.reports.size(); ++i) {
        same = verify::same_outcomes(sb.reports[i], sf.reports[i]);
        suite_fail += sb.reports[i].failed() + sf.reports[i].failed();
      }
      const bool images = pb.images == pf.images;
      const bool outputs = ob.outputs == of.outputs;
      l.pass = same && suite_fail == 0 && images && outputs && pf.unit_phases && pf.counterexamples == 0 &&
               of.mismatches == 0;
      l.detail << "suite_outcomes=" << (same ? "same" : "differ") << " suite_failures=" << suite_fail
               << " power_law_images=" << (images ? "same" : "differ")
               << " oracle_outputs=" << (outputs ? "same" : "differ")
               << " fermion_phases=" << (pf.unit_phases ? "+1" : "other");
      ok = report(6, l) && ok;
    }

    ok = ac7() && ok;
    ok = ac8() && ok;
    ok = ac9() && ok;
    ok = ac10() && ok;
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << "acceptance " << (ok ? "pass" : "fail") << std::endl;
  return ok ? 0 : 1;
}

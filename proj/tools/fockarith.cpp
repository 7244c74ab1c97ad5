#include "fockarith/arith.hpp"
#include "fockarith/naturals.hpp"
#include "fockarith/physical_map.hpp"
#include "fockarith/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fockarith;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

struct Config {
  int base = 10;
  std::string stats = "b";
  std::string flavor = "nat";
  int j = 1;
  unsigned iterations = 1;
  std::uint64_t seed = 1;
  int max_len = 0;  // 0 picks the per-command default
  bool trace = false;
  bool oracle = false;
  bool drop_carry = false;
  std::string out;
};

Statistics parse_stats(const std::string& s) {
  if (s == "b") return Statistics::Boson;
  if (s == "f") return Statistics::Fermion;
  throw DomainError("--stats must be b or f");
}

Numeral from_oracle(const verify::OracleValue& v, Flavor f, int base) {
  Rational r(v.numerator);
  for (int i = 0; i < v.exponent; ++i) r /= base;
  return numeral_from_rational(r, f, base);
}

// One token per mode, most significant first: "<site>:<symbol>".
std::string format_word(const BasisWord& w) {
  std::string s;
  for (const auto& m : w.modes()) {
    if (!s.empty()) s += " ";
    s += std::to_string(m.site) + ":" + m.sym.label();
  }
  return s;
}

BasisWord parse_word(const std::vector<std::string>& tokens) {
  std::vector<Mode> modes;
  for (const auto& t : tokens) {
    const auto colon = t.rfind(':');
    if (colon == std::string::npos || colon == 0) throw ParseError("expected <site>:<symbol>, got '" + t + "'");
    int site = 0;
    try {
      site = std::stoi(t.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("bad site in '" + t + "'");
    }
    modes.push_back({1, site, ModeSymbol::parse(t.substr(colon + 1))});
  }
  return make_word(std::move(modes));
}

void print_trace(std::ostream& os, Machine& m) {
  const auto& t = m.ev().trace();
  os << "trace creates=" << t.creates << " annihilates=" << t.annihilates << " projectors=" << t.projector_evals
     << " expansions=" << t.family_expansions << "\n";
}

class Cli {
 public:
  explicit Cli(const Config& c)
      : c_(c), f_(parse_flavor(c.flavor)), stats_(parse_stats(c.stats)), m_(c.base, stats_, opts(c)) {}

  int encode_cmd(const std::string& text, std::ostream& os) {
    os << format_word(encode(parse(text))) << "\n";
    return 0;
  }

  int decode_cmd(const std::vector<std::string>& tokens, std::ostream& os) {
    os << format_numeral(decode(parse_word(tokens), f_, c_.base)) << "\n";
    return 0;
  }

  int succ_cmd(const std::string& text, std::ostream& os) {
    const Numeral n = parse(text);
    const Numeral r = successor(m_, n, c_.j, c_.iterations);
    os << format_numeral(r) << "\n";
    if (c_.trace) {
      if (f_ == Flavor::Nat && c_.j >= 1) {
        Machine pad(c_.base, stats_, opts(c_));
        const BasisWord w = pad.apply_word(naturals::pad(c_.j), encode(n));
        os << "pad=" << format_numeral(decode_loose(w, f_, c_.base)) << "\n";
      }
      print_trace(os, m_);
    }
    if (c_.oracle) {
      verify::OracleValue step{1, 0};
      if (c_.j > 0) {
        for (int i = 1; i < c_.j; ++i) step.numerator *= c_.base;
      } else {
        step.exponent = -c_.j;
      }
      verify::OracleValue v = verify::oracle_value(n);
      for (unsigned i = 0; i < c_.iterations; ++i) v = verify::oracle(verify::OracleOp::Add, v, step, c_.base);
      oracle_line(os, v);
    }
    return 0;
  }

  int binary_cmd(verify::OracleOp op, const std::vector<std::string>& args, std::ostream& os) {
    const Numeral s = parse(args.at(0));
    const Numeral t = parse(args.at(1));
    Numeral r;
    verify::OracleValue v;
    switch (op) {
      case verify::OracleOp::Add:
        r = add(m_, s, t);
        v = verify::oracle(op, verify::oracle_value(t), verify::oracle_value(s), c_.base);
        break;
      case verify::OracleOp::Sub:
        r = subtract(m_, s, t);
        v = verify::oracle(op, verify::oracle_value(t), verify::oracle_value(s), c_.base);
        break;
      case verify::OracleOp::Mul: {
        const Numeral x = args.size() > 2 ? parse(args[2]) : numeral_from_int(0, f_, c_.base);
        r = multiply(m_, s, t, x);
        const auto st = verify::oracle(op, verify::oracle_value(s), verify::oracle_value(t), c_.base);
        v = verify::oracle(verify::OracleOp::Add, verify::oracle_value(x), st, c_.base);
        break;
      }
    }
    os << format_numeral(r) << "\n";
    if (c_.trace) print_trace(os, m_);
    if (c_.oracle) oracle_line(os, v);
    return 0;
  }

  int verify_cmd(std::ostream& os) {
    verify::SuiteConfig sc;
    sc.base = c_.base;
    sc.stats = stats_;
    sc.flavor = f_;
    sc.seed = c_.seed;
    sc.max_len = c_.max_len > 0 ? c_.max_len : 4;
    sc.opts = opts(c_);
    const auto rep = verify::run_axiom_suite(sc);
    os << rep.format();
    return rep.ok() ? 0 : kExitVerify;
  }

  int resources_cmd(std::ostream& os) {
    const int top = c_.max_len > 0 ? c_.max_len : 64;
    ResourceLedger ledger;
    for (int L : {4, 8, 16, 24, 32, 48, 64}) {
      if (L > top) break;
      ledger.record("successor", L, measure_successor(m_, L));
      ledger.record("plus", L, measure_plus(m_, L));
      ledger.record("times", L, measure_times(m_, L));
    }
    os << ledger.report();
    bool poly = true;
    for (const char* op : {"successor", "plus", "times"}) {
      const auto rep = fit_scaling(ledger.series(op));
      poly = poly && rep.verdict == ScalingVerdict::Poly;
      os << "scaling op=" << op << " " << rep.line() << "\n";
    }
    return poly ? 0 : kExitVerify;
  }

 private:
  Config c_;
  Flavor f_;
  Statistics stats_;
  Machine m_;

  static ArithOptions opts(const Config& c) {
    ArithOptions o;
    o.drop_carry = c.drop_carry;
    return o;
  }

  Numeral parse(const std::string& text) const { return parse_numeral(text, f_, c_.base); }

  void oracle_line(std::ostream& os, const verify::OracleValue& v) const {
    os << "oracle=" << format_numeral(from_oracle(v, f_, c_.base)) << "\n";
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-space arithmetic: numbers as occupation states, arithmetic as operators"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--base", c.base, "Base k >= 2")->check(CLI::Range(2, 36));
  app.add_option("--stats", c.stats, "Statistics: b (boson) or f (fermion)")->check(CLI::IsMember({"b", "f"}));
  app.add_option("--flavor", c.flavor, "Number flavor")->check(CLI::IsMember({"nat", "int", "rat"}));
  app.add_option("--j", c.j, "Successor index");
  app.add_option("--iterations", c.iterations, "Successor repetitions");
  app.add_option("--seed", c.seed, "Seed for sampled spans");
  app.add_option("--max-len", c.max_len, "Span length for verify, largest L for resources");
  app.add_flag("--trace", c.trace, "Print the pad image and primitive counts");
  app.add_flag("--oracle", c.oracle, "Also print the exact reference value");
  app.add_option("--out", c.out, "Also write the output to this file");

  std::string number;
  std::vector<std::string> args, tokens;
  auto* encode = app.add_subcommand("encode", "Numeral to basis word");
  encode->add_option("numeral", number)->required();
  auto* decode = app.add_subcommand("decode", "Basis word (<site>:<symbol> tokens) to numeral");
  decode->add_option("modes", tokens)->required();
  auto* succ = app.add_subcommand("succ", "Apply the successor S_j");
  succ->add_option("numeral", number)->required();
  auto* add = app.add_subcommand("add", "add s t prints t + s");
  add->add_option("operands", args)->required()->expected(2);
  auto* sub = app.add_subcommand("sub", "sub s t prints t - s");
  sub->add_option("operands", args)->required()->expected(2);
  auto* mul = app.add_subcommand("mul", "mul s t [x] prints x + s t");
  mul->add_option("operands", args)->required()->expected(2, 3);
  auto* verify = app.add_subcommand("verify", "Run the axiom suite");
  verify->add_flag("--drop-carry", c.drop_carry, "Plant the dropped-carry defect");
  auto* resources = app.add_subcommand("resources", "Primitive counts and scaling fits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  std::ostringstream os;
  int code = 0;
  try {
    Cli cli(c);
    if (*encode) code = cli.encode_cmd(number, os);
    else if (*decode) code = cli.decode_cmd(tokens, os);
    else if (*succ) code = cli.succ_cmd(number, os);
    else if (*add) code = cli.binary_cmd(verify::OracleOp::Add, args, os);
    else if (*sub) code = cli.binary_cmd(verify::OracleOp::Sub, args, os);
    else if (*mul) code = cli.binary_cmd(verify::OracleOp::Mul, args, os);
    else if (*verify) code = cli.verify_cmd(os);
    else if (*resources) code = cli.resources_cmd(os);
  } catch (const Error& e) {
    std::cout << os.str();
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  std::cout << os.str();
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kExitDomain;
    }
    f << os.str();
  }
  return code;
}

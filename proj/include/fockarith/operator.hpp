#pragma once

#include "fockarith/fock.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace fockarith {

enum class ProjKind {
  Occ,               // site holds any symbol
  Unocc,             // site empty
  GtZero,            // site holds a digit h > 0
  DigitEq,           // site holds digit h
  NumOcc,            // site holds a digit (not a sign or point)
  SignAt,            // site holds the given sign (sign == 0 accepts either)
  SignPlusAny,       // a '+' anywhere in the register
  SignMinusAny,      // a '-' anywhere in the register
  SignMinusLenGeq,   // '-' at a site >= j + 1, i.e. at least j digits
  SignMinusLenLt,    // '-' at a site in [2, j], i.e. fewer than j digits
  NegativeNonzero,   // '-' and some nonzero digit
  PositiveNonzero,   // '+' and some nonzero digit
  Nonzero,           // some digit anywhere is nonzero
  NumberWord,        // register holds a well-formed numeral word (h = flavor code, sign = 1 for canonical only)
  StateEq,           // register content equals a fixed mode list
  NonzeroDigitGeq,   // some digit at a site >= j is nonzero
  AllZeroDigitsGeq,  // every digit at a site >= j is zero
};

struct ProjectorSpec {
  ProjKind kind = ProjKind::Occ;
  int reg = 1;
  int site = 0;  // also the threshold j for the *Geq / *Lt kinds
  int h = 0;     // digit for DigitEq
  int sign = 0;  // +1, -1 or 0 (either) for SignAt
  std::vector<Mode> state;  // register content for StateEq, canonical order

  static ProjectorSpec make(ProjKind kind, int reg, int site = 0, int h = 0, int sign = 0) {
    ProjectorSpec p;
    p.kind = kind;
    p.reg = reg;
    p.site = site;
    p.h = h;
    p.sign = sign;
    return p;
  }

  static ProjectorSpec occ(int reg, int site) { return make(ProjKind::Occ, reg, site); }
  static ProjectorSpec unocc(int reg, int site) { return make(ProjKind::Unocc, reg, site); }
  static ProjectorSpec gt_zero(int reg, int site) { return make(ProjKind::GtZero, reg, site); }
  static ProjectorSpec digit_eq(int reg, int site, int h) { return make(ProjKind::DigitEq, reg, site, h); }
  static ProjectorSpec num_occ(int reg, int site) { return make(ProjKind::NumOcc, reg, site); }
  static ProjectorSpec sign_at(int reg, int site, int sign) { return make(ProjKind::SignAt, reg, site, 0, sign); }
  static ProjectorSpec plus_any(int reg) { return make(ProjKind::SignPlusAny, reg); }
  static ProjectorSpec minus_any(int reg) { return make(ProjKind::SignMinusAny, reg); }
  static ProjectorSpec minus_len_geq(int reg, int j) { return make(ProjKind::SignMinusLenGeq, reg, j); }
  static ProjectorSpec minus_len_lt(int reg, int j) { return make(ProjKind::SignMinusLenLt, reg, j); }
  static ProjectorSpec negative_nonzero(int reg) { return make(ProjKind::NegativeNonzero, reg); }
  static ProjectorSpec positive_nonzero(int reg) { return make(ProjKind::PositiveNonzero, reg); }
  static ProjectorSpec nonzero(int reg) { return make(ProjKind::Nonzero, reg); }
  // flavor: 0 natural, 1 integer, 2 rational. Loose words may carry leading
  // or trailing zeros and "-0"; canonical words may not.
  static ProjectorSpec number_word(int reg, int flavor, bool canonical) {
    return make(ProjKind::NumberWord, reg, 0, flavor, canonical ? 1 : 0);
  }
  static ProjectorSpec state_eq(int reg, std::vector<Mode> modes);
  static ProjectorSpec nonzero_geq(int reg, int j) { return make(ProjKind::NonzeroDigitGeq, reg, j); }
  static ProjectorSpec all_zero_geq(int reg, int j) { return make(ProjKind::AllZeroDigitsGeq, reg, j); }

  [[nodiscard]] std::string label() const;
  bool operator==(const ProjectorSpec&) const = default;
};

// Semantic membership test; always 0 or 1.
[[nodiscard]] int eval_projector(const ProjectorSpec& p, const BasisWord& w);

// Immutable operator expression tree with value semantics.
class Op {
 public:
  enum class Kind { Identity, Zero, Create, Annihilate, Projector, Scale, Sum, Product, Power, Adjoint, Family, Lazy };

  struct Node {
    Kind kind = Kind::Identity;
    Mode mode{};
    ProjectorSpec proj{};
    Rational coeff = 1;
    unsigned power = 0;
    std::vector<Op> children;  // Product children are listed left to right
    std::string name;          // Family / Lazy
    int index = 0;
    int reg = 1;
    bool dagger = false;
  };

  Op();  // Identity
  [[nodiscard]] static Op identity();
  [[nodiscard]] static Op zero();
  [[nodiscard]] static Op create(const Mode& m);
  [[nodiscard]] static Op annihilate(const Mode& m);
  [[nodiscard]] static Op projector(const ProjectorSpec& p);
  [[nodiscard]] static Op family(std::string name, int index, int reg = 1, bool dagger = false);
  [[nodiscard]] static Op lazy(std::string name, int index, int reg = 1, bool dagger = false);
  [[nodiscard]] static Op scale(const Rational& c, const Op& e);
  [[nodiscard]] static Op sum(std::vector<Op> terms);
  [[nodiscard]] static Op product(std::vector<Op> factors);  // rightmost acts first
  [[nodiscard]] static Op power(const Op& e, unsigned n);
  [[nodiscard]] static Op adjoint_node(const Op& e);  // unevaluated Adjoint(e)

  [[nodiscard]] const Node& node() const { return *node_; }
  [[nodiscard]] Kind kind() const { return node_->kind; }
  [[nodiscard]] const Node* id() const { return node_.get(); }

  friend Op operator*(const Op& a, const Op& b) { return product({a, b}); }
  friend Op operator+(const Op& a, const Op& b) { return sum({a, b}); }
  friend Op operator*(const Rational& c, const Op& e) { return scale(c, e); }

 private:
  explicit Op(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Op make(Node n);
  std::shared_ptr<const Node> node_;
};

// Shorthands used by the number-module builders.
[[nodiscard]] inline Op cr(int reg, int site, ModeSymbol s) { return Op::create({reg, site, s}); }
[[nodiscard]] inline Op an(int reg, int site, ModeSymbol s) { return Op::annihilate({reg, site, s}); }
[[nodiscard]] inline Op proj(const ProjectorSpec& p) { return Op::projector(p); }

[[nodiscard]] bool structurally_equal(const Op& a, const Op& b);
[[nodiscard]] std::string to_string(const Op& e);

class Registry;

// Structural adjoint. With a registry, families registered without an adjoint
// raise UnboundAdjointFamily.
[[nodiscard]] Op adjoint(const Op& e);
[[nodiscard]] Op adjoint(const Op& e, const Registry& reg);

enum class AdjointPolicy { Structural, None };

class Registry {
 public:
  using Builder = std::function<Op(int index, int reg)>;
  // Picks the only sum term that can act on w; Op::zero() when none does.
  using Selector = std::function<Op(int index, int reg, const BasisWord& w, bool dagger)>;

  void add_family(const std::string& name, Builder b, AdjointPolicy policy = AdjointPolicy::Structural);
  void add_lazy(const std::string& name, Selector s);

  [[nodiscard]] bool has_family(const std::string& name) const { return families_.count(name) != 0; }
  [[nodiscard]] bool has_lazy(const std::string& name) const { return lazies_.count(name) != 0; }
  [[nodiscard]] Op build(const std::string& name, int index, int reg) const;  // throws UnboundFamily
  [[nodiscard]] Op select(const std::string& name, int index, int reg, const BasisWord& w, bool dagger) const;
  [[nodiscard]] AdjointPolicy policy(const std::string& name) const;

 private:
  struct FamilyEntry {
    Builder build;
    AdjointPolicy policy;
  };
  std::unordered_map<std::string, FamilyEntry> families_;
  std::unordered_map<std::string, Selector> lazies_;
};

struct ResourceTrace {
  std::uint64_t creates = 0;
  std::uint64_t annihilates = 0;
  std::uint64_t projector_evals = 0;
  std::uint64_t family_expansions = 0;

  [[nodiscard]] std::uint64_t primitives() const { return creates + annihilates + projector_evals; }
  ResourceTrace& operator+=(const ResourceTrace& o);
  bool operator==(const ResourceTrace&) const = default;
};

struct EvalOptions {
  // Hard cap on family recursion depth; defaults to FOCKARITH_MAXSITE when set.
  std::optional<int> max_site_cap;
  // Receives one "event=..." line per primitive when set.
  std::ostream* log = nullptr;
};

[[nodiscard]] std::optional<int> max_site_from_env();

// Linear evaluator. Not thread-safe; use one instance per thread.
class Evaluator {
 public:
  Evaluator(std::shared_ptr<const Registry> registry, Statistics stats, EvalOptions opts = {});

  [[nodiscard]] StateVector apply(const Op& e, const StateVector& v);
  [[nodiscard]] StateVector apply(const Op& e, const BasisWord& w) { return apply(e, StateVector(w)); }

  [[nodiscard]] Statistics statistics() const { return stats_; }
  [[nodiscard]] const Registry& registry() const { return *registry_; }
  [[nodiscard]] std::shared_ptr<const Registry> registry_ptr() const { return registry_; }
  [[nodiscard]] const ResourceTrace& trace() const { return trace_; }
  void reset_trace() { trace_ = {}; }
  void set_log(std::ostream* os) { opts_.log = os; }

 private:
  struct Term {
    BasisWord w;
    Rational a;
  };
  using Terms = std::vector<Term>;

  void eval(const Op& e, const Terms& in, Terms& out);
  const Op& resolve_family(const Op::Node& n);
  const Op& cached_adjoint(const Op& e);
  void log_event(const char* event, int reg, int site, const std::string& sym, bool survived);
  static void normalize(Terms& t);

  std::shared_ptr<const Registry> registry_;
  Statistics stats_;
  EvalOptions opts_;
  ResourceTrace trace_;
  int budget_ = 0;
  int budget_extra_ = 2;
  std::unordered_map<std::string, int> depth_;
  std::map<std::tuple<std::string, int, int, bool>, Op> family_cache_;
  std::unordered_map<const Op::Node*, Op> adjoint_cache_;
};

// One-shot application with a fresh evaluator.
[[nodiscard]] StateVector apply(const Op& e, const StateVector& v, Statistics stats,
                                std::shared_ptr<const Registry> registry = nullptr,
                                ResourceTrace* trace = nullptr);

struct SpanCheck {
  bool ok = true;
  std::optional<BasisWord> witness;
  StateVector lhs;
  StateVector rhs;
  std::size_t checked = 0;
};

// apply(e1, w) == apply(e2, w) exactly for every w in span; stops at the first mismatch.
[[nodiscard]] SpanCheck equal_on_span(Evaluator& ev, const Op& e1, const Op& e2, const std::vector<BasisWord>& span);

}  // namespace fockarith

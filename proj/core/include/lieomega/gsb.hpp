#pragma once

// Gröbner–Shirshov machinery for Lie Omega-algebras: special normal words,
// ambiguities and compositions, reduction, verification, completion, the
// linear basis Irr(S) and an independent rank-based dimension count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lieomega/lie_poly.hpp"

namespace lieomega {

struct Rule {
  LiePoly poly;
  OmegaWord lead;
  std::size_t id = 0;
};

/// An ordered collection of rewrite rules with their cached leading words.
class RuleSet {
 public:
  explicit RuleSet(Alphabet alphabet, std::optional<Rational> lambda = std::nullopt);

  /// Appends a rule verbatim and returns its id. Throws ZeroPolynomial.
  std::size_t add(const LiePoly& poly);

  std::span<const Rule> rules() const noexcept { return rules_; }
  const Rule& operator[](std::size_t id) const { return rules_.at(id); }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  /// The value lambda has been specialized to, if any.
  const std::optional<Rational>& lambda() const noexcept { return lambda_; }

  /// A copy with lambda replaced by `value` in every coefficient.
  RuleSet specialized(const Rational& value) const;

  /// Smallest id of a rule whose leading word is exactly w.
  std::optional<std::size_t> rule_with_lead(const OmegaWord& w) const;
  std::uint32_t max_lead_degree() const noexcept { return max_lead_degree_; }
  std::size_t max_lead_breadth() const noexcept { return max_lead_breadth_; }

  /// Throws NonMonicRule naming the first rule that is not monic.
  void require_monic() const;

 private:
  Alphabet alphabet_;
  std::optional<Rational> lambda_;
  std::vector<Rule> rules_;
  std::unordered_map<OmegaWord, std::size_t> lead_index_;
  std::uint32_t max_lead_degree_ = 0;
  std::size_t max_lead_breadth_ = 0;
};

struct Reduction {
  std::size_t rule = 0;
  StarWord pi;
};

/// The applicable rewrite for w: smallest rule id whose leading word occurs in
/// w, at its leftmost-outermost occurrence.
std::optional<Reduction> find_reduction(const OmegaWord& w, const RuleSet& rules);

/// [pi|_s]_{lead s}: the relative bracketing of pi|_{lead s} with the slot
/// filled by s. Throws NotAlsw when pi|_{lead s} is not ALSW.
LiePoly special_normal_word(const StarWord& pi, const Rule& s);

enum class AmbiguityKind { Intersection, Inclusion };

struct Ambiguity {
  AmbiguityKind kind = AmbiguityKind::Intersection;
  std::size_t f = 0;
  std::size_t g = 0;
  OmegaWord w;
  std::optional<OmegaWord> a;  // intersection: w = lead(f) a
  std::optional<OmegaWord> b;  // intersection: w = b lead(g)
  std::optional<StarWord> pi;  // inclusion: w = lead(f) = pi|_{lead(g)}
};

/// Intersections of lead(f) followed by lead(g), then inclusions of lead(g)
/// in lead(f); the trivial self-inclusion is excluded.
std::vector<Ambiguity> ambiguities(const Rule& f, const Rule& g);

/// All ambiguities among the rules with degree(w) <= max_degree, in canonical
/// order: ascending w, then f, g, kind.
std::vector<Ambiguity> all_ambiguities(const RuleSet& rules, std::uint32_t max_degree);

LiePoly composition(const Rule& f, const Rule& g, const Ambiguity& amb);

struct ReductionStep {
  OmegaWord word;
  std::optional<Reduction> rewrite;  // empty when the term was irreducible
};

/// Reduction modulo a fixed rule set. Special normal words are memoized per
/// leading word, so reuse one Reducer for many reductions.
class Reducer {
 public:
  explicit Reducer(const RuleSet& rules) : rules_(rules) {}

  LiePoly reduce(const LiePoly& h, std::vector<ReductionStep>* trace = nullptr);

 private:
  struct Entry {
    std::optional<Reduction> rewrite;
    LiePoly word;
  };
  const Entry& lookup(const OmegaWord& w);

  const RuleSet& rules_;
  std::unordered_map<OmegaWord, Entry> cache_;
};

LiePoly reduce(const LiePoly& h, const RuleSet& rules);

template <class Poly>
struct BasicCompositionReport {
  Ambiguity ambiguity;
  Poly composition;
  Poly normal_form;
  bool trivial = true;
};

using CompositionReport = BasicCompositionReport<LiePoly>;
using AssocCompositionReport = BasicCompositionReport<AssocPoly>;

/// Every composition with ambiguity degree <= max_degree, reduced modulo the
/// rules. Ambiguities are evaluated on `threads` workers; the report order is
/// canonical regardless. Throws NonMonicRule.
std::vector<CompositionReport> check_gsb(const RuleSet& rules, std::uint32_t max_degree, unsigned threads = 1);

/// The same check carried out in the free associative Omega-algebra on the
/// expansions of the rules.
std::vector<AssocCompositionReport> assoc_check(const RuleSet& rules, std::uint32_t max_degree,
                                                unsigned threads = 1);

/// Adjoins reduced nontrivial compositions, smallest ambiguity first, and
/// inter-reduces, until no composition of degree <= max_degree is nontrivial.
/// Throws NonMonicRule or NonConstantLeadingCoefficient.
RuleSet complete(const RuleSet& rules, std::uint32_t max_degree);

/// ALSW words of each degree 1..max_degree (index 0 empty) containing no
/// leading word of a rule.
std::vector<std::vector<OmegaWord>> irr_enumerate(const RuleSet& rules, std::uint32_t max_degree);

/// Per-degree dimension (index 0 unused) of the quotient, computed by exact
/// rank over Q of the expansions of all special normal words, with lambda
/// specialized to `samples` random rationals that must agree. Throws Error
/// when the samples disagree.
std::vector<std::size_t> dim_oracle(const RuleSet& rules, std::uint32_t max_degree, unsigned samples = 3,
                                    std::uint64_t seed = 20160101);

enum class PresetKind { RotaBaxter, ModifiedRotaBaxter, Nijenhuis };

/// The defining polynomial for the pair u > v (ALSW words).
LiePoly preset_rule(PresetKind kind, const OperatorSymbol& op, const OmegaWord& u, const OmegaWord& v);

/// Rules for every pair u > v of ALSW words with degree(P(u)P(v)) <=
/// max_degree, ordered by leading word. The alphabet must have exactly one
/// operator, of arity one.
RuleSet preset_rules(PresetKind kind, const Alphabet& alphabet, std::uint32_t max_degree);

}  // namespace lieomega

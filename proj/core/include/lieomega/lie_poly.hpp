#pragma once

// Associative Omega-polynomials, Lie Omega-polynomials in Lyndon–Shirshov
// coordinates, and the bridge between them.

#include <cstddef>
#include <map>
#include <span>
#include <utility>

#include "lieomega/coefficient.hpp"
#include "lieomega/error.hpp"
#include "lieomega/lyndon.hpp"
#include "lieomega/omega_word.hpp"

namespace lieomega {

/// A finite linear combination of words, iterated in descending Deg-lex order
/// (the first term is the leading one). Zero coefficients are never stored.
template <class Tag>
class WordCombination {
 public:
  using Terms = std::map<OmegaWord, Coefficient, DlGreater>;

  WordCombination() = default;

  static WordCombination term(const OmegaWord& w, const Coefficient& c = Coefficient(1)) {
    WordCombination out;
    out.add(w, c);
    return out;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  Coefficient coefficient(const OmegaWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  void add(const OmegaWord& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add_scaled(const WordCombination& other, const Coefficient& c) {
    if (c.is_zero()) return;
    for (const auto& [w, a] : other.terms_) add(w, a * c);
  }

  void erase(const OmegaWord& w) { terms_.erase(w); }

  /// Throws ZeroPolynomial.
  std::pair<const OmegaWord&, const Coefficient&> leading() const {
    if (terms_.empty()) throw ZeroPolynomial("the zero polynomial has no leading term");
    const auto& front = *terms_.begin();
    return {front.first, front.second};
  }

  WordCombination& operator+=(const WordCombination& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WordCombination& operator-=(const WordCombination& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  WordCombination& operator*=(const Coefficient& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, a] : terms_) a *= c;
    return *this;
  }

  friend WordCombination operator+(WordCombination a, const WordCombination& b) { return a += b; }
  friend WordCombination operator-(WordCombination a, const WordCombination& b) { return a -= b; }
  friend WordCombination operator-(WordCombination a) { return a *= Coefficient(-1); }
  friend WordCombination operator*(const Coefficient& c, WordCombination a) { return a *= c; }
  friend bool operator==(const WordCombination& a, const WordCombination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

struct AssocTag {};
struct LieTag {};

/// An element of the free associative Omega-algebra.
using AssocPoly = WordCombination<AssocTag>;
/// Sum of c_i [u_i] over the non-associative Lyndon–Shirshov basis, keyed by
/// the ALSW words u_i.
using LiePoly = WordCombination<LieTag>;

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);
AssocPoly commutator(const AssocPoly& a, const AssocPoly& b);
/// Multilinear application of an operator to associative polynomials.
AssocPoly apply_op(const OperatorSymbol& op, std::span<const AssocPoly> args);

/// The basis element 1·[u]; throws NotAlsw.
LiePoly basis_element(const OmegaWord& u);

/// Associative expansion of [u] for an ALSW word u. Results are memoized per
/// thread.
const AssocPoly& expand_basis(const OmegaWord& u);

AssocPoly expand(const LiePoly& p);

/// Lyndon–Shirshov coordinates of a Lie element, by peeling leading terms.
/// Throws NotLieElement when q is not in the Lie subalgebra.
LiePoly to_nlsw(const AssocPoly& q);

LiePoly bracket(const LiePoly& p, const LiePoly& q);

/// Throws ArityMismatch.
LiePoly apply_op(const OperatorSymbol& op, std::span<const LiePoly> args);

/// Evaluates a bracket tree in the associative algebra; `slot` fills the
/// slot leaf (throws std::logic_error if a slot is present without one).
AssocPoly evaluate_assoc(const Tree& t, const AssocPoly* slot = nullptr);

/// Evaluates a bracket tree to Lyndon–Shirshov coordinates.
LiePoly from_tree(const Tree& t, const LiePoly* slot = nullptr);

/// Leading word and coefficient. Throws ZeroPolynomial.
std::pair<OmegaWord, Coefficient> leading(const LiePoly& p);

/// p divided by its leading coefficient. Throws ZeroPolynomial or
/// NonConstantLeadingCoefficient.
LiePoly normalize_monic(const LiePoly& p);

bool is_monic(const LiePoly& p);

/// Substitutes a rational value for lambda in every coefficient.
template <class Tag>
WordCombination<Tag> specialize(const WordCombination<Tag>& p, const Rational& lambda_value) {
  WordCombination<Tag> out;
  for (const auto& [w, c] : p.terms()) out.add(w, Coefficient(c.evaluate(lambda_value)));
  return out;
}

}  // namespace lieomega

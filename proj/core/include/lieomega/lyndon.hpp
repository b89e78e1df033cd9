#pragma once

// Lyndon–Shirshov machinery over the prime alphabet: recognition,
// factorization, Shirshov standard bracketing, and the bracketing of a word
// relative to a distinguished Lyndon–Shirshov subword.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lieomega/omega_word.hpp"

namespace lieomega {

/// A bracket tree over generators and operators. A Slot leaf stands for a
/// polynomial that is substituted later.
class Tree {
 public:
  enum class Kind { Leaf, Op, Bracket, Slot };

  static Tree leaf(Generator g);
  /// Throws ArityMismatch when children.size() != op.arity.
  static Tree op(OperatorSymbol op, std::vector<Tree> children);
  static Tree bracket(Tree left, Tree right);
  static Tree slot();

  Kind kind() const noexcept;
  const Generator& generator() const;
  const OperatorSymbol& op() const;
  /// Operator arguments, or {left, right} for a bracket.
  std::span<const Tree> children() const;

  std::size_t slot_count() const noexcept;

  /// The associative word read off the leaves; `slot_word` replaces the slot.
  /// Throws std::logic_error when a slot is present and no word is given.
  OmegaWord flatten(const OmegaWord* slot_word = nullptr) const;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Kind kind = Kind::Leaf;
  Generator gen;
  OperatorSymbol op;
  std::vector<Tree> children;
  std::size_t slots = 0;
};

inline Tree::Kind Tree::kind() const noexcept { return node_->kind; }
inline const Generator& Tree::generator() const { return node_->gen; }
inline const OperatorSymbol& Tree::op() const { return node_->op; }
inline std::span<const Tree> Tree::children() const { return node_->children; }
inline std::size_t Tree::slot_count() const noexcept { return node_->slots; }

using NlswTree = Tree;
using MarkedTree = Tree;

/// Rotation test on the top-level prime sequence only: uv > vu for every
/// proper split.
bool is_lyndon_sequence(std::span<const Prime> primes);

/// For a Lyndon sequence of length >= 2, the start of the right factor of its
/// standard factorization: the longest proper suffix that is itself a Lyndon
/// sequence.
std::size_t standard_split(std::span<const Prime> primes);

/// True when every operator argument (recursively) is ALSW and the top-level
/// prime sequence passes the rotation test.
bool is_alsw(const OmegaWord& u);

/// The unique factorization u = c1 c2 ... ct into ALSW factors with
/// c1 <= c2 <= ... <= ct under cmp_lex. Throws NotAlsw when an operator
/// argument of u is not ALSW.
std::vector<OmegaWord> factorize(const OmegaWord& u);

/// Shirshov standard bracketing [u]. Throws NotAlsw for non-ALSW input.
NlswTree std_bracket(const OmegaWord& u);

/// A bracketing of substitute(pi, v) in which v is one intact bracketed unit,
/// represented by the slot. Throws NotAlsw when v or substitute(pi, v) is not
/// ALSW.
MarkedTree relative_bracket(const StarWord& pi, const OmegaWord& v);

/// All ALSW words of each degree 1..max_degree (index 0 is empty), sorted
/// ascending under cmp_dl.
std::vector<std::vector<OmegaWord>> alsw_by_degree(const Alphabet& alphabet, std::uint32_t max_degree);

}  // namespace lieomega

#include "lieomega/lie_poly.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lieomega {

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [u, c] : a.terms()) {
    for (const auto& [v, d] : b.terms()) out.add(u * v, c * d);
  }
  return out;
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [u, c] : a.terms()) {
    for (const auto& [v, d] : b.terms()) {
      const Coefficient cd = c * d;
      out.add(u * v, cd);
      out.add(v * u, -cd);
    }
  }
  return out;
}

namespace {

template <class Poly>
void apply_recursive(const OperatorSymbol& op, std::span<const Poly> args, std::size_t index,
                     std::vector<OmegaWord>& current, const Coefficient& coeff, Poly& out) {
  if (index == args.size()) {
    out.add(OmegaWord(Prime::apply(op, current)), coeff);
    return;
  }
  for (const auto& [w, c] : args[index].terms()) {
    current.push_back(w);
    apply_recursive(op, args, index + 1, current, coeff * c, out);
    current.pop_back();
  }
}

template <class Poly>
Poly apply_multilinear(const OperatorSymbol& op, std::span<const Poly> args) {
  if (args.size() != op.arity) {
    throw ArityMismatch("operator " + op.name + " expects " + std::to_string(op.arity) + " argument(s), got " +
                        std::to_string(args.size()));
  }
  Poly out;
  std::vector<OmegaWord> current;
  current.reserve(args.size());
  apply_recursive(op, args, 0, current, Coefficient(1), out);
  return out;
}

}  // namespace

AssocPoly apply_op(const OperatorSymbol& op, std::span<const AssocPoly> args) { return apply_multilinear(op, args); }

LiePoly apply_op(const OperatorSymbol& op, std::span<const LiePoly> args) { return apply_multilinear(op, args); }

LiePoly basis_element(const OmegaWord& u) {
  if (!is_alsw(u)) throw NotAlsw("basis elements are indexed by associative Lyndon-Shirshov words");
  return LiePoly::term(u);
}

namespace {

AssocPoly compute_expansion(const OmegaWord& u) {
  if (u.breadth() == 1) {
    const Prime& p = u[0];
    if (p.is_letter()) return AssocPoly::term(u);
    std::vector<AssocPoly> args;
    args.reserve(p.args().size());
    for (const auto& a : p.args()) args.push_back(expand_basis(a));
    return apply_op(p.op(), args);
  }
  const std::size_t m = standard_split(u.primes());
  return commutator(expand_basis(u.slice(0, m)), expand_basis(u.slice(m, u.breadth())));
}

}  // namespace

const AssocPoly& expand_basis(const OmegaWord& u) {
  thread_local std::unordered_map<OmegaWord, AssocPoly> cache;
  if (auto it = cache.find(u); it != cache.end()) return it->second;
  if (!is_alsw(u)) throw NotAlsw("only associative Lyndon-Shirshov words have a standard bracketing");
  AssocPoly expansion = compute_expansion(u);
  return cache.emplace(u, std::move(expansion)).first->second;
}

AssocPoly expand(const LiePoly& p) {
  AssocPoly out;
  for (const auto& [u, c] : p.terms()) out.add_scaled(expand_basis(u), c);
  return out;
}

LiePoly to_nlsw(const AssocPoly& q) {
  AssocPoly rest = q;
  LiePoly out;
  while (!rest.is_zero()) {
    const auto& front = *rest.terms().begin();
    const OmegaWord u = front.first;
    const Coefficient c = front.second;
    if (!is_alsw(u)) throw NotLieElement("leading word is not an associative Lyndon-Shirshov word");
    out.add(u, c);
    rest.add_scaled(expand_basis(u), -c);
  }
  return out;
}

LiePoly bracket(const LiePoly& p, const LiePoly& q) { return to_nlsw(commutator(expand(p), expand(q))); }

AssocPoly evaluate_assoc(const Tree& t, const AssocPoly* slot) {
  switch (t.kind()) {
    case Tree::Kind::Leaf:
      return AssocPoly::term(OmegaWord(Prime::letter(t.generator())));
    case Tree::Kind::Op: {
      std::vector<AssocPoly> args;
      args.reserve(t.children().size());
      for (const auto& c : t.children()) args.push_back(evaluate_assoc(c, slot));
      return apply_op(t.op(), args);
    }
    case Tree::Kind::Bracket:
      return commutator(evaluate_assoc(t.children()[0], slot), evaluate_assoc(t.children()[1], slot));
    case Tree::Kind::Slot:
      if (slot == nullptr) throw std::logic_error("evaluating a tree with an unfilled slot");
      return *slot;
  }
  throw std::logic_error("unknown tree kind");
}

LiePoly from_tree(const Tree& t, const LiePoly* slot) {
  if (slot == nullptr) return to_nlsw(evaluate_assoc(t));
  const AssocPoly expanded = expand(*slot);
  return to_nlsw(evaluate_assoc(t, &expanded));
}

std::pair<OmegaWord, Coefficient> leading(const LiePoly& p) {
  auto [w, c] = p.leading();
  return {w, c};
}

bool is_monic(const LiePoly& p) { return !p.is_zero() && p.leading().second.is_one(); }

LiePoly normalize_monic(const LiePoly& p) {
  const Coefficient& c = p.leading().second;
  if (!c.is_constant()) {
    throw NonConstantLeadingCoefficient("leading coefficient " + c.to_string() + " is not a unit of Q[l]");
  }
  Rational inv = 1 / c.constant();
  return Coefficient(inv) * p;
}

}  // namespace lieomega

#include <algorithm>
#include <stdexcept>

#include "lieomega/gsb.hpp"

namespace lieomega {

LiePoly preset_rule(PresetKind kind, const OperatorSymbol& op, const OmegaWord& u, const OmegaWord& v) {
  if (op.arity != 1) throw ArityMismatch("operator identities need a unary operator");
  const auto P = [&](const LiePoly& x) { return apply_op(op, std::span<const LiePoly>(&x, 1)); };
  const LiePoly U = basis_element(u);
  const LiePoly V = basis_element(v);
  const LiePoly pu = P(U);
  const LiePoly pv = P(V);
  const LiePoly uv = bracket(U, V);
  LiePoly f = bracket(pu, pv) - P(bracket(pu, V)) - P(bracket(U, pv));
  switch (kind) {
    case PresetKind::RotaBaxter:
      f -= Coefficient::lambda() * P(uv);
      break;
    case PresetKind::ModifiedRotaBaxter:
      f -= Coefficient::lambda() * uv;
      break;
    case PresetKind::Nijenhuis:
      f += P(P(uv));
      break;
  }
  return f;
}

RuleSet preset_rules(PresetKind kind, const Alphabet& alphabet, std::uint32_t max_degree) {
  if (alphabet.operators().size() != 1 || alphabet.operators().front().arity != 1) {
    throw std::invalid_argument("operator identities need exactly one unary operator");
  }
  const OperatorSymbol& op = alphabet.operators().front();
  RuleSet out(alphabet);
  if (max_degree < 4) return out;

  const auto alsw = alsw_by_degree(alphabet, max_degree - 3);
  std::vector<OmegaWord> words;
  for (const auto& level : alsw) words.insert(words.end(), level.begin(), level.end());

  struct Pair {
    OmegaWord lead;
    OmegaWord u;
    OmegaWord v;
  };
  std::vector<Pair> pairs;
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.degree() + v.degree() + 2 > max_degree || cmp_dl(u, v) <= 0) continue;
      const OmegaWord lead = OmegaWord(Prime::apply(op, {u})) * OmegaWord(Prime::apply(op, {v}));
      pairs.push_back(Pair{lead, u, v});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return cmp_dl(a.lead, b.lead) < 0; });
  for (const auto& p : pairs) out.add(preset_rule(kind, op, p.u, p.v));
  return out;
}

}  // namespace lieomega

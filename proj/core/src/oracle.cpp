#include <random>
#include <unordered_map>

#include "lieomega/gsb.hpp"
#include "parallel.hpp"

namespace lieomega {

std::vector<std::vector<OmegaWord>> irr_enumerate(const RuleSet& rules, std::uint32_t max_degree) {
  auto alsw = alsw_by_degree(rules.alphabet(), max_degree);
  for (auto& level : alsw) {
    std::erase_if(level, [&](const OmegaWord& u) { return find_reduction(u, rules).has_value(); });
  }
  return alsw;
}

namespace {

// Row echelon form over Q, one pivot per leading word.
class Echelon {
 public:
  void insert(AssocPoly row) {
    while (!row.is_zero()) {
      const auto& front = *row.terms().begin();
      auto it = pivots_.find(front.first);
      if (it == pivots_.end()) {
        const Rational inv = 1 / front.second.constant();
        const OmegaWord key = front.first;
        row *= Coefficient(inv);
        pivots_.emplace(key, std::move(row));
        return;
      }
      row.add_scaled(it->second, -front.second);
    }
  }
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::unordered_map<OmegaWord, AssocPoly> pivots_;
};

Rational random_lambda(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 97);
  std::uniform_int_distribution<long> den(1, 89);
  std::bernoulli_distribution negative(0.5);
  Rational r(num(rng) * (negative(rng) ? -1 : 1), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<std::size_t> dim_oracle(const RuleSet& rules, std::uint32_t max_degree, unsigned samples,
                                    std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("dim_oracle needs at least one sample");
  const auto alsw = alsw_by_degree(rules.alphabet(), max_degree);

  // Expansions of every special normal word, grouped by the degree of its
  // leading word. The slot is filled by the expansion of the rule directly.
  std::vector<std::vector<AssocPoly>> rows(max_degree + 1);
  std::vector<AssocPoly> expanded;
  for (const auto& r : rules.rules()) expanded.push_back(expand(r.poly));
  for (std::uint32_t d = 1; d <= max_degree; ++d) {
    for (const auto& u : alsw[d]) {
      for (const auto& r : rules.rules()) {
        if (r.lead.degree() > d) continue;
        for (const auto& pi : occurrences(u, r.lead)) {
          rows[d].push_back(evaluate_assoc(relative_bracket(pi, r.lead), &expanded[r.id]));
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<Rational> values;
  if (rules.lambda()) {
    values.push_back(*rules.lambda());
  } else {
    for (unsigned i = 0; i < samples; ++i) values.push_back(random_lambda(rng));
  }

  std::vector<std::vector<std::size_t>> results(values.size());
  detail::parallel_strided(values.size(), static_cast<unsigned>(values.size()), [&](std::size_t begin, std::size_t stride) {
    for (std::size_t s = begin; s < values.size(); s += stride) {
      Echelon echelon;
      std::vector<std::size_t> dims(max_degree + 1, 0);
      std::size_t words = 0;
      std::size_t previous = 0;
      for (std::uint32_t d = 1; d <= max_degree; ++d) {
        words += alsw[d].size();
        for (const auto& row : rows[d]) echelon.insert(specialize(row, values[s]));
        const std::size_t cumulative = words - echelon.rank();
        dims[d] = cumulative - previous;
        previous = cumulative;
      }
      results[s] = std::move(dims);
    }
  });
  for (std::size_t s = 1; s < results.size(); ++s) {
    if (results[s] != results[0]) {
      throw Error("dimension counts differ between lambda = " + to_string(values[0]) + " and lambda = " +
                  to_string(values[s]) + "; the samples are not generic");
    }
  }
  return results.front();
}

namespace {

AssocPoly substitute_poly(const StarWord& pi, const AssocPoly& p) {
  AssocPoly out;
  for (const auto& [w, c] : p.terms()) out.add(substitute(pi, w), c);
  return out;
}

class AssocReducer {
 public:
  AssocReducer(const RuleSet& rules, const std::vector<AssocPoly>& expanded) : rules_(rules), expanded_(expanded) {}

  AssocPoly reduce(const AssocPoly& h) {
    AssocPoly rest = h;
    AssocPoly out;
    while (!rest.is_zero()) {
      const auto& front = *rest.terms().begin();
      const OmegaWord u = front.first;
      const Coefficient c = front.second;
      const AssocPoly* rewrite = lookup(u);
      if (rewrite != nullptr) {
        rest.add_scaled(*rewrite, -c);
      } else {
        out.add(u, c);
        rest.erase(u);
      }
    }
    return out;
  }

 private:
  const AssocPoly* lookup(const OmegaWord& u) {
    auto it = cache_.find(u);
    if (it == cache_.end()) {
      std::optional<AssocPoly> value;
      if (auto red = find_reduction(u, rules_)) value = substitute_poly(red->pi, expanded_[red->rule]);
      it = cache_.emplace(u, std::move(value)).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  const RuleSet& rules_;
  const std::vector<AssocPoly>& expanded_;
  std::unordered_map<OmegaWord, std::optional<AssocPoly>> cache_;
};

}  // namespace

std::vector<AssocCompositionReport> assoc_check(const RuleSet& rules, std::uint32_t max_degree, unsigned threads) {
  rules.require_monic();
  const auto ambs = all_ambiguities(rules, max_degree);
  std::vector<std::optional<AssocCompositionReport>> slots(ambs.size());
  detail::parallel_strided(ambs.size(), threads, [&](std::size_t begin, std::size_t stride) {
    std::vector<AssocPoly> expanded;
    for (const auto& r : rules.rules()) expanded.push_back(expand(r.poly));
    AssocReducer reducer(rules, expanded);
    for (std::size_t i = begin; i < ambs.size(); i += stride) {
      const auto& amb = ambs[i];
      const AssocPoly& ff = expanded[amb.f];
      const AssocPoly& fg = expanded[amb.g];
      AssocPoly h = amb.kind == AmbiguityKind::Intersection
                        ? ff * AssocPoly::term(*amb.a) - AssocPoly::term(*amb.b) * fg
                        : ff - substitute_poly(*amb.pi, fg);
      AssocPoly nf = reducer.reduce(h);
      const bool trivial = nf.is_zero();
      slots[i] = AssocCompositionReport{amb, std::move(h), std::move(nf), trivial};
    }
  });
  return detail::unwrap(std::move(slots));
}

}  // namespace lieomega

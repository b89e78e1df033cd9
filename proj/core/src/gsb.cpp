#include "lieomega/gsb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "parallel.hpp"

namespace lieomega {

RuleSet::RuleSet(Alphabet alphabet, std::optional<Rational> lambda)
    : alphabet_(std::move(alphabet)), lambda_(std::move(lambda)) {}

std::size_t RuleSet::add(const LiePoly& poly) {
  const OmegaWord lead = poly.leading().first;
  const std::size_t id = rules_.size();
  rules_.push_back(Rule{poly, lead, id});
  lead_index_.try_emplace(lead, id);
  max_lead_degree_ = std::max(max_lead_degree_, lead.degree());
  max_lead_breadth_ = std::max(max_lead_breadth_, lead.breadth());
  return id;
}

RuleSet RuleSet::specialized(const Rational& value) const {
  RuleSet out(alphabet_, value);
  for (const auto& r : rules_) out.add(specialize(r.poly, value));
  return out;
}

std::optional<std::size_t> RuleSet::rule_with_lead(const OmegaWord& w) const {
  auto it = lead_index_.find(w);
  if (it == lead_index_.end()) return std::nullopt;
  return it->second;
}

void RuleSet::require_monic() const {
  for (const auto& r : rules_) {
    if (!is_monic(r.poly)) {
      throw NonMonicRule("rule " + std::to_string(r.id) + " has leading coefficient " +
                         r.poly.leading().second.to_string());
    }
  }
}

namespace {

void smallest_rule_in(const OmegaWord& w, const RuleSet& rules, std::optional<std::size_t>& best) {
  auto ps = w.primes();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::uint32_t deg = 0;
    for (std::size_t j = i; j < ps.size() && j - i < rules.max_lead_breadth(); ++j) {
      deg += ps[j].degree();
      if (deg > rules.max_lead_degree()) break;
      if (auto id = rules.rule_with_lead(w.slice(i, j + 1)); id && (!best || *id < *best)) best = id;
    }
  }
  for (const auto& p : ps) {
    if (p.is_letter() || p.degree() <= 1) continue;
    for (const auto& a : p.args()) smallest_rule_in(a, rules, best);
  }
}

}  // namespace

std::optional<Reduction> find_reduction(const OmegaWord& w, const RuleSet& rules) {
  if (rules.empty()) return std::nullopt;
  std::optional<std::size_t> best;
  smallest_rule_in(w, rules, best);
  if (!best) return std::nullopt;
  auto occ = occurrences(w, rules[*best].lead);
  return Reduction{*best, std::move(occ.front())};
}

LiePoly special_normal_word(const StarWord& pi, const Rule& s) {
  const MarkedTree t = relative_bracket(pi, s.lead);
  LiePoly out = from_tree(t, &s.poly);
  const OmegaWord host = substitute(pi, s.lead);
  if (out.is_zero() || !(out.leading().first == host) || !(out.leading().second == s.poly.leading().second)) {
    throw std::logic_error("special normal word does not lead with the substituted word");
  }
  return out;
}

std::vector<Ambiguity> ambiguities(const Rule& f, const Rule& g) {
  std::vector<Ambiguity> out;
  for (auto& ov : overlaps(f.lead, g.lead)) {
    out.push_back(Ambiguity{AmbiguityKind::Intersection, f.id, g.id, ov.w, ov.a, ov.b, std::nullopt});
  }
  for (auto& pi : occurrences(f.lead, g.lead)) {
    if (f.id == g.id && pi.is_bare()) continue;
    out.push_back(Ambiguity{AmbiguityKind::Inclusion, f.id, g.id, f.lead, std::nullopt, std::nullopt, std::move(pi)});
  }
  return out;
}

std::vector<Ambiguity> all_ambiguities(const RuleSet& rules, std::uint32_t max_degree) {
  std::vector<Ambiguity> out;
  for (const auto& f : rules.rules()) {
    if (f.lead.degree() > max_degree) continue;
    for (const auto& g : rules.rules()) {
      if (g.lead.degree() > max_degree) continue;
      for (auto& amb : ambiguities(f, g)) {
        if (amb.w.degree() <= max_degree) out.push_back(std::move(amb));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Ambiguity& x, const Ambiguity& y) {
    if (auto c = cmp_dl(x.w, y.w); c != 0) return c < 0;
    return std::tuple(x.f, x.g, x.kind) < std::tuple(y.f, y.g, y.kind);
  });
  return out;
}

LiePoly composition(const Rule& f, const Rule& g, const Ambiguity& amb) {
  if (amb.kind == AmbiguityKind::Intersection) {
    const StarWord right = StarWord::surround({}, amb.a->primes());
    const StarWord left = StarWord::surround(amb.b->primes(), {});
    return special_normal_word(right, f) - special_normal_word(left, g);
  }
  return f.poly - special_normal_word(*amb.pi, g);
}

const Reducer::Entry& Reducer::lookup(const OmegaWord& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  Entry e;
  e.rewrite = find_reduction(w, rules_);
  if (e.rewrite) e.word = special_normal_word(e.rewrite->pi, rules_[e.rewrite->rule]);
  return cache_.emplace(w, std::move(e)).first->second;
}

LiePoly Reducer::reduce(const LiePoly& h, std::vector<ReductionStep>* trace) {
  rules_.require_monic();
  LiePoly rest = h;
  LiePoly out;
  while (!rest.is_zero()) {
    const auto& front = *rest.terms().begin();
    const OmegaWord u = front.first;
    const Coefficient c = front.second;
    const Entry& e = lookup(u);
    if (trace != nullptr) trace->push_back(ReductionStep{u, e.rewrite});
    if (e.rewrite) {
      rest.add_scaled(e.word, -c);
    } else {
      out.add(u, c);
      rest.erase(u);
    }
  }
  return out;
}

LiePoly reduce(const LiePoly& h, const RuleSet& rules) { return Reducer(rules).reduce(h); }

std::vector<CompositionReport> check_gsb(const RuleSet& rules, std::uint32_t max_degree, unsigned threads) {
  rules.require_monic();
  const auto ambs = all_ambiguities(rules, max_degree);
  std::vector<std::optional<CompositionReport>> slots(ambs.size());
  detail::parallel_strided(ambs.size(), threads, [&](std::size_t begin, std::size_t stride) {
    Reducer reducer(rules);
    for (std::size_t i = begin; i < ambs.size(); i += stride) {
      const auto& amb = ambs[i];
      LiePoly h = composition(rules[amb.f], rules[amb.g], amb);
      LiePoly nf = reducer.reduce(h);
      const bool trivial = nf.is_zero();
      slots[i] = CompositionReport{amb, std::move(h), std::move(nf), trivial};
    }
  });
  return detail::unwrap(std::move(slots));
}

namespace {

bool same_context(const Ambiguity& x, const Ambiguity& y) {
  return x.kind == y.kind && x.f == y.f && x.g == y.g && x.w == y.w && x.a == y.a && x.b == y.b && x.pi == y.pi;
}

RuleSet rebuild(const RuleSet& like, std::vector<LiePoly> polys) {
  std::sort(polys.begin(), polys.end(),
            [](const LiePoly& x, const LiePoly& y) { return cmp_dl(x.leading().first, y.leading().first) < 0; });
  RuleSet out(like.alphabet(), like.lambda());
  for (const auto& p : polys) out.add(p);
  return out;
}

// Drops rules that reduce to zero modulo the others and replaces the rest by
// their monic normal forms. Returns whether anything changed.
bool inter_reduce(RuleSet& rules) {
  std::vector<LiePoly> polys;
  for (const auto& r : rules.rules()) polys.push_back(r.poly);
  bool any = false;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      RuleSet others(rules.alphabet(), rules.lambda());
      for (std::size_t j = 0; j < polys.size(); ++j) {
        if (j != i) others.add(polys[j]);
      }
      LiePoly h = reduce(polys[i], others);
      if (h == polys[i]) continue;
      changed = any = true;
      if (h.is_zero()) {
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
      } else {
        polys[i] = normalize_monic(h);
      }
    }
  }
  if (any) rules = rebuild(rules, std::move(polys));
  return any;
}

}  // namespace

RuleSet complete(const RuleSet& rules, std::uint32_t max_degree) {
  rules.require_monic();
  RuleSet work = rules;
  std::map<std::tuple<std::size_t, std::size_t, AmbiguityKind>, std::vector<Ambiguity>> seen;
  while (true) {
    bool added = false;
    Reducer reducer(work);
    for (const auto& amb : all_ambiguities(work, max_degree)) {
      auto& bucket = seen[{amb.f, amb.g, amb.kind}];
      if (std::any_of(bucket.begin(), bucket.end(), [&](const Ambiguity& x) { return same_context(x, amb); })) continue;
      bucket.push_back(amb);
      LiePoly h = reducer.reduce(composition(work[amb.f], work[amb.g], amb));
      if (h.is_zero()) continue;
      work.add(normalize_monic(h));
      added = true;
      break;
    }
    if (added) continue;
    if (!inter_reduce(work)) break;
    // Rule ids were renumbered.
    seen.clear();
  }
  return work;
}

}  // namespace lieomega

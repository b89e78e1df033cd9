#include "report.hpp"

#include "lieomega/syntax.hpp"

namespace lieomega::report {

namespace {

const char* kind_name(AmbiguityKind k) { return k == AmbiguityKind::Intersection ? "intersection" : "inclusion"; }

}  // namespace

Json poly_to_json(const LiePoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) {
    out.push_back({{"coefficient", c.to_string()}, {"tree", to_string(std_bracket(w))}});
  }
  return out;
}

LiePoly poly_from_json(const Json& j, const Alphabet& alphabet) {
  LiePoly out;
  for (const auto& term : j) {
    const OmegaWord w = parse_tree(term.at("tree").get<std::string>(), alphabet).flatten();
    out.add(w, parse_coefficient(term.at("coefficient").get<std::string>()));
  }
  return out;
}

Json assoc_to_json(const AssocPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"coefficient", c.to_string()}, {"word", to_string(w)}});
  return out;
}

Json ambiguity_to_json(const Ambiguity& amb) {
  Json out;
  out["kind"] = kind_name(amb.kind);
  out["f"] = amb.f;
  out["g"] = amb.g;
  out["w"] = to_string(amb.w);
  if (amb.kind == AmbiguityKind::Intersection) {
    out["a"] = to_string(*amb.a);
    out["b"] = to_string(*amb.b);
  } else {
    out["pi"] = to_string(*amb.pi);
  }
  return out;
}

Ambiguity ambiguity_from_json(const Json& j, const Alphabet& alphabet) {
  const std::string kind = j.at("kind").get<std::string>();
  Ambiguity amb{kind == "intersection" ? AmbiguityKind::Intersection : AmbiguityKind::Inclusion,
                j.at("f").get<std::size_t>(),
                j.at("g").get<std::size_t>(),
                parse_word(j.at("w").get<std::string>(), alphabet),
                std::nullopt,
                std::nullopt,
                std::nullopt};
  if (amb.kind == AmbiguityKind::Intersection) {
    amb.a = parse_word(j.at("a").get<std::string>(), alphabet);
    amb.b = parse_word(j.at("b").get<std::string>(), alphabet);
  } else {
    amb.pi = parse_star_word(j.at("pi").get<std::string>(), alphabet);
  }
  return amb;
}

Json composition_to_json(const CompositionReport& r) {
  Json out{{"type", "composition"}};
  out.update(ambiguity_to_json(r.ambiguity));
  out["trivial"] = r.trivial;
  out["composition"] = poly_to_json(r.composition);
  out["normal_form"] = poly_to_json(r.normal_form);
  return out;
}

CompositionReport composition_from_json(const Json& j, const Alphabet& alphabet) {
  return CompositionReport{ambiguity_from_json(j, alphabet), poly_from_json(j.at("composition"), alphabet),
                           poly_from_json(j.at("normal_form"), alphabet), j.at("trivial").get<bool>()};
}

Json composition_to_json(const AssocCompositionReport& r) {
  Json out{{"type", "composition"}};
  out.update(ambiguity_to_json(r.ambiguity));
  out["trivial"] = r.trivial;
  out["composition"] = assoc_to_json(r.composition);
  out["normal_form"] = assoc_to_json(r.normal_form);
  return out;
}

Json rule_to_json(const Rule& r) {
  return Json{{"type", "rule"}, {"id", r.id}, {"lead", to_string(r.lead)}, {"poly", to_string(r.poly)}};
}

Json basis_to_json(std::size_t degree, const std::vector<OmegaWord>& words, bool count_only) {
  Json out{{"type", "basis"}, {"degree", degree}, {"count", words.size()}};
  if (!count_only) {
    Json list = Json::array();
    for (const auto& w : words) list.push_back(to_string(std_bracket(w)));
    out["words"] = std::move(list);
  }
  return out;
}

Json dimension_to_json(std::size_t degree, std::size_t dim) {
  return Json{{"type", "dimension"}, {"degree", degree}, {"dim", dim}};
}

}  // namespace lieomega::report

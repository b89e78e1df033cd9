#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "lieomega/gsb.hpp"
#include "lieomega/syntax.hpp"
#include "report.hpp"

namespace lieomega::cli {

namespace {

struct Options {
  std::string gens;
  std::string ops = "P:1";
  std::string lambda = "symbolic";
  std::uint32_t max_deg = 6;
  std::string preset;
  std::string rules_file;
  bool json = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  std::string word;
  std::string poly;
  bool count_only = false;
  unsigned samples = 3;
  std::uint64_t seed = 20160101;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Alphabet make_alphabet(const Options& o) {
  const auto gens = split(o.gens, ',');
  if (gens.empty()) throw std::invalid_argument("--gens needs at least one generator");
  std::vector<std::pair<std::string, std::uint32_t>> ops;
  for (const auto& spec : split(o.ops, ',')) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
      ops.emplace_back(spec, 1);
      continue;
    }
    const std::string arity = spec.substr(colon + 1);
    if (arity.empty() || arity.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad arity in operator spec '" + spec + "'");
    }
    ops.emplace_back(spec.substr(0, colon), static_cast<std::uint32_t>(std::stoul(arity)));
  }
  return Alphabet(gens, ops);
}

std::optional<Rational> lambda_value(const Options& o) {
  if (o.lambda == "symbolic") return std::nullopt;
  return parse_rational(o.lambda);
}

RuleSet make_rules(const Options& o, const Alphabet& alphabet) {
  RuleSet rules(alphabet);
  if (!o.preset.empty()) {
    const PresetKind kind = o.preset == "rb"    ? PresetKind::RotaBaxter
                            : o.preset == "mrb" ? PresetKind::ModifiedRotaBaxter
                                                : PresetKind::Nijenhuis;
    rules = preset_rules(kind, alphabet, o.max_deg);
  }
  if (!o.rules_file.empty()) {
    std::ifstream in(o.rules_file);
    if (!in) throw std::invalid_argument("cannot read rule file " + o.rules_file);
    std::stringstream text;
    text << in.rdbuf();
    for (const auto& p : parse_rules(text.str(), alphabet)) rules.add(p);
  }
  if (auto value = lambda_value(o)) rules = rules.specialized(*value);
  return rules;
}

void emit(std::ostream& out, const report::Json& j) { out << j.dump() << '\n'; }

int cmd_bracket(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const OmegaWord u = parse_word(o.word, alphabet);
  const Tree t = std_bracket(u);
  const AssocPoly e = expand_basis(u);
  if (o.json) {
    emit(out, report::Json{{"type", "bracket"},
                           {"word", to_string(u)},
                           {"tree", to_string(t)},
                           {"degree", u.degree()},
                           {"breadth", u.breadth()},
                           {"depth", u.depth()},
                           {"expansion", report::assoc_to_json(e)}});
    return kOk;
  }
  out << to_string(t) << '\n';
  out << "deg " << u.degree() << "  bre " << u.breadth() << "  dep " << u.depth() << '\n';
  out << "expansion: " << to_string(e) << '\n';
  return kOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const RuleSet rules = make_rules(o, alphabet);
  LiePoly p = parse_poly(o.poly, alphabet);
  if (auto value = lambda_value(o)) p = specialize(p, *value);
  const LiePoly nf = reduce(p, rules);
  if (o.json) {
    emit(out, report::Json{{"type", "normal_form"},
                           {"input", report::poly_to_json(p)},
                           {"normal_form", report::poly_to_json(nf)}});
  } else {
    out << to_string(nf) << '\n';
  }
  return kOk;
}

template <class Reports>
int print_checks(const Options& o, const RuleSet& rules, const Reports& reports, std::ostream& out) {
  std::size_t nontrivial = 0;
  for (const auto& r : reports) {
    nontrivial += r.trivial ? 0 : 1;
    if (o.json) {
      emit(out, report::composition_to_json(r));
      continue;
    }
    const auto& a = r.ambiguity;
    out << (r.trivial ? "trivial     " : "NONTRIVIAL  ")
        << (a.kind == AmbiguityKind::Intersection ? "intersection" : "inclusion   ") << "  f=" << a.f << " g=" << a.g
        << "  w = " << to_string(a.w) << '\n';
    if (!r.trivial) out << "    normal form: " << to_string(r.normal_form) << '\n';
  }
  if (o.json) {
    emit(out, report::Json{{"type", "summary"},
                           {"rules", rules.size()},
                           {"max_degree", o.max_deg},
                           {"compositions", reports.size()},
                           {"nontrivial", nontrivial}});
  } else {
    out << rules.size() << " rules, " << reports.size() << " compositions up to degree " << o.max_deg << ", "
        << nontrivial << " nontrivial\n";
  }
  return nontrivial == 0 ? kOk : kNontrivial;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const RuleSet rules = make_rules(o, alphabet);
  return print_checks(o, rules, check_gsb(rules, o.max_deg, o.threads), out);
}

int cmd_assoc_check(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const RuleSet rules = make_rules(o, alphabet);
  return print_checks(o, rules, assoc_check(rules, o.max_deg, o.threads), out);
}

int cmd_complete(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const RuleSet rules = make_rules(o, alphabet);
  const RuleSet done = complete(rules, o.max_deg);
  if (o.json) {
    for (const auto& r : done.rules()) emit(out, report::rule_to_json(r));
    emit(out, report::Json{{"type", "summary"}, {"input_rules", rules.size()}, {"rules", done.size()}});
    return kOk;
  }
  out << "# " << done.size() << " rules (input had " << rules.size() << "), complete up to degree " << o.max_deg
      << '\n';
  for (const auto& r : done.rules()) out << to_string(r.poly) << '\n';
  return kOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const RuleSet rules = make_rules(o, alphabet);
  const auto irr = irr_enumerate(rules, o.max_deg);
  for (std::size_t d = 1; d < irr.size(); ++d) {
    if (o.json) {
      emit(out, report::basis_to_json(d, irr[d], o.count_only));
      continue;
    }
    out << "degree " << d << ": " << irr[d].size() << '\n';
    if (!o.count_only) {
      for (const auto& w : irr[d]) out << "  " << to_string(std_bracket(w)) << '\n';
    }
  }
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Alphabet alphabet = make_alphabet(o);
  const RuleSet rules = make_rules(o, alphabet);
  const auto dims = dim_oracle(rules, o.max_deg, o.samples, o.seed);
  for (std::size_t d = 1; d < dims.size(); ++d) {
    if (o.json) {
      emit(out, report::dimension_to_json(d, dims[d]));
    } else {
      out << "degree " << d << ": " << dims[d] << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gröbner–Shirshov bases for free Lie Omega-algebras", "lieomega"};
  app.require_subcommand(1);
  app.add_option("--gens", o.gens, "generators, greatest first (e.g. x2,x1)");
  app.add_option("--ops", o.ops, "operators as name:arity, greatest first")->capture_default_str();
  app.add_option("--lambda", o.lambda, "'symbolic' or a rational value")->capture_default_str();
  app.add_option("--max-deg", o.max_deg, "degree bound")->check(CLI::Range(1u, 64u))->capture_default_str();
  app.add_option("--preset", o.preset, "operator identity")->check(CLI::IsMember({"rb", "mrb", "nij"}));
  app.add_option("--rules", o.rules_file, "rule file, one polynomial per line");
  app.add_flag("--json", o.json, "JSON lines on stdout");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 1024u));

  auto* bracket = app.add_subcommand("bracket", "standard bracketing and expansion of a word");
  bracket->add_option("--word", o.word, "an associative Lyndon-Shirshov word")->required();
  auto* normalize = app.add_subcommand("normalize", "normal form of a polynomial modulo the rules");
  normalize->add_option("--poly", o.poly, "a Lie polynomial")->required();
  auto* check = app.add_subcommand("check-gsb", "reduce every composition up to --max-deg");
  auto* assoc = app.add_subcommand("assoc-check", "the same check in the associative algebra");
  auto* comp = app.add_subcommand("complete", "add nontrivial compositions until none remain");
  auto* basis = app.add_subcommand("basis", "Irr(S) by degree");
  basis->add_flag("--count", o.count_only, "counts only");
  auto* oracle = app.add_subcommand("oracle", "quotient dimensions by exact rank");
  oracle->add_option("--samples", o.samples, "lambda specializations")->check(CLI::Range(1u, 64u))->capture_default_str();
  oracle->add_option("--seed", o.seed, "random seed")->capture_default_str();
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  std::vector<std::string> argv_store{"lieomega"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool needs_rules = normalize->parsed() || check->parsed() || assoc->parsed() || comp->parsed();
  if (needs_rules && o.preset.empty() && o.rules_file.empty()) {
    err << "error: this command needs --preset or --rules\n";
    return kUsage;
  }

  try {
    if (bracket->parsed()) return cmd_bracket(o, out);
    if (normalize->parsed()) return cmd_normalize(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (assoc->parsed()) return cmd_assoc_check(o, out);
    if (comp->parsed()) return cmd_complete(o, out);
    if (basis->parsed()) return cmd_basis(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lieomega::cli

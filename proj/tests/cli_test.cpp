#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "report.hpp"
#include "test_support.hpp"

namespace lieomega {
namespace {

using report::Json;
using testing::W;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lieomega_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, Bracket) {
  const Outcome r = run({"bracket", "--gens", "x2,x1", "--word", "x2 x1 x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "((x2 x1) x1)");
  EXPECT_NE(r.out.find("expansion: {x2 x1 x1} - 2*{x1 x2 x1} + {x1 x1 x2}"), std::string::npos);
}

TEST(Cli, BracketExampleWord) {
  const Outcome r = run({"bracket", "--gens", "x2,x1", "--ops", "w3:3,w2:2,w1:1", "--word",
                     "w3(x2 x1 x1, x1, w1(x2 x2 x1)) x2 x1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = json_lines(r.out).at(0);
  EXPECT_EQ(j["tree"], "(w3(((x2 x1) x1), x1, w1((x2 (x2 x1)))) (x2 x1))");
  EXPECT_EQ(j["degree"], 11);
  EXPECT_EQ(j["breadth"], 3);
  EXPECT_EQ(j["depth"], 2);
}

TEST(Cli, CheckGsbJson) {
  const Outcome r = run({"check-gsb", "--preset", "rb", "--gens", "x", "--max-deg", "6", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) EXPECT_TRUE(lines[i]["trivial"].get<bool>());
  EXPECT_EQ(lines.back()["type"], "summary");
  EXPECT_EQ(lines.back()["nontrivial"], 0);
}

TEST(Cli, CheckGsbFindsNontrivial) {
  const RuleSet perturbed = testing::perturbed_rules(testing::letters(3), 6);
  std::string rules;
  for (const auto& r : perturbed.rules()) rules += to_string(r.poly) + "\n";
  const std::string path = temp_file("perturbed.txt", rules);
  for (const char* cmd : {"check-gsb", "assoc-check"}) {
    const Outcome r = run({cmd, "--gens", "x3,x2,x1", "--rules", path, "--max-deg", "6"});
    EXPECT_EQ(r.code, 1) << cmd;
    EXPECT_NE(r.out.find("NONTRIVIAL"), std::string::npos);
    EXPECT_NE(r.out.find("1 nontrivial"), std::string::npos);
  }
}

TEST(Cli, JsonIdenticalAcrossThreads) {
  const std::vector<std::string> base = {"check-gsb", "--preset", "nij", "--gens", "x2,x1", "--max-deg", "8", "--json"};
  auto with = [&](const char* n) {
    auto args = base;
    args.insert(args.end(), {"--threads", n});
    return run(args);
  };
  const Outcome one = with("1");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, with("3").out);
  EXPECT_EQ(one.out, with("8").out);
}

TEST(Cli, CompositionRecordsRoundTrip) {
  const Outcome r = run({"check-gsb", "--preset", "mrb", "--gens", "x2,x1", "--max-deg", "7", "--json"});
  ASSERT_EQ(r.code, 0);
  const Alphabet a = testing::letters(2);
  const RuleSet s = preset_rules(PresetKind::ModifiedRotaBaxter, a, 7);
  const auto reports = check_gsb(s, 7);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), reports.size() + 1);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const CompositionReport back = report::composition_from_json(lines[i], a);
    EXPECT_EQ(back.ambiguity.w, reports[i].ambiguity.w);
    EXPECT_EQ(back.ambiguity.kind, reports[i].ambiguity.kind);
    EXPECT_EQ(back.composition, reports[i].composition);
    EXPECT_EQ(back.normal_form, reports[i].normal_form);
    EXPECT_EQ(report::composition_to_json(back).dump(), lines[i].dump());
  }
}

TEST(Cli, PolyJsonRoundTrip) {
  const Alphabet a = testing::letters(2);
  testing::Random rnd(9);
  const auto pool = testing::alsw_upto(a, 6);
  for (int i = 0; i < 100; ++i) {
    const LiePoly p = rnd.lie_poly(pool, 5);
    ASSERT_EQ(report::poly_from_json(Json::parse(report::poly_to_json(p).dump()), a), p);
  }
}

TEST(Cli, BasisCountMatchesOracle) {
  const Outcome basis = run({"basis", "--preset", "nij", "--gens", "x", "--max-deg", "4", "--count"});
  const Outcome oracle = run({"oracle", "--preset", "nij", "--gens", "x", "--max-deg", "4"});
  EXPECT_EQ(basis.code, 0);
  EXPECT_EQ(oracle.code, 0);
  EXPECT_EQ(basis.out, oracle.out);
  EXPECT_EQ(basis.out, "degree 1: 1\ndegree 2: 1\ndegree 3: 2\ndegree 4: 4\n");

  const Outcome bj = run({"basis", "--preset", "rb", "--gens", "x2,x1", "--max-deg", "7", "--count", "--json"});
  const Outcome oj = run({"oracle", "--preset", "rb", "--gens", "x2,x1", "--max-deg", "7", "--json"});
  const auto b = json_lines(bj.out), o = json_lines(oj.out);
  ASSERT_EQ(b.size(), 7u);
  ASSERT_EQ(o.size(), 7u);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i]["count"], o[i]["dim"]);
}

TEST(Cli, Normalize) {
  const Outcome r = run({"normalize", "--preset", "rb", "--gens", "x2,x1", "--poly", "(P(x2) P(x1))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "P((P(x2) x1)) - P((P(x1) x2)) + l*P((x2 x1))\n");
  const Outcome s = run({"normalize", "--preset", "rb", "--gens", "x2,x1", "--lambda", "-1/2", "--poly", "(P(x2) P(x1))"});
  EXPECT_EQ(s.out, "P((P(x2) x1)) - P((P(x1) x2)) - 1/2*P((x2 x1))\n");
}

TEST(Cli, CompleteOutputIsARulesFile) {
  const RuleSet perturbed = testing::perturbed_rules(testing::letters(3), 6);
  std::string rules;
  for (const auto& r : perturbed.rules()) rules += to_string(r.poly) + "\n";
  const std::string in = temp_file("complete_in.txt", rules);
  const Outcome c = run({"complete", "--gens", "x3,x2,x1", "--rules", in, "--max-deg", "6"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.rfind("# 106 rules", 0), 0u);
  const std::string out = temp_file("complete_out.txt", c.out);
  const Outcome check = run({"check-gsb", "--gens", "x3,x2,x1", "--rules", out, "--max-deg", "6"});
  EXPECT_EQ(check.code, 0) << check.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check-gsb", "--gens", "x"}).code, 2);
  EXPECT_EQ(run({"check-gsb", "--gens", "x", "--preset", "xyz"}).code, 2);
  EXPECT_EQ(run({"check-gsb", "--gens", "x", "--preset", "rb", "--max-deg", "0"}).code, 2);
  EXPECT_EQ(run({"basis", "--gens", "x,x", "--max-deg", "3"}).code, 2);
  EXPECT_EQ(run({"basis", "--gens", "l", "--max-deg", "3"}).code, 2);
  EXPECT_EQ(run({"check-gsb", "--gens", "x", "--rules", "/nonexistent/rules.txt"}).code, 2);

  const Outcome parse = run({"bracket", "--gens", "x", "--word", "P(x,"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("offset 4"), std::string::npos) << parse.err;

  const Outcome not_alsw = run({"bracket", "--gens", "x2,x1", "--word", "x1 x2"});
  EXPECT_EQ(not_alsw.code, 2);

  const std::string path = temp_file("nonmonic.txt", "2*(x2 x1)\n");
  const Outcome nonmonic = run({"check-gsb", "--gens", "x2,x1", "--rules", path});
  EXPECT_EQ(nonmonic.code, 2);
  EXPECT_FALSE(nonmonic.err.empty());

  const std::string bad_line = temp_file("badline.txt", "x1\n(x2\n");
  const Outcome bl = run({"check-gsb", "--gens", "x2,x1", "--rules", bad_line});
  EXPECT_EQ(bl.code, 2);
  EXPECT_NE(bl.err.find("line 2"), std::string::npos) << bl.err;
}

}  // namespace
}  // namespace lieomega

#include <gtest/gtest.h>

#include <sstream>

#include "mvstate/commands.hpp"

namespace mvstate {
namespace {

using nlohmann::json;

struct Result {
  int code;
  json report;
  std::string text;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = cli::run(args, out);
  Result r{code, json(), out.str()};
  r.report = json::parse(r.text);
  return r;
}

const char* kA2Violation =
    R"({"domain":"M2","codomain":"M2","table":[[[0],[0]],[[1],[2]],[[2],[2]]]})";

TEST(Cli, StateEnumerate) {
  const auto r = run({"state-enumerate", "--domain", "M1*M1", "--codomain", "M2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["status"], "ok");
  EXPECT_EQ(r.report["payload"]["count"], 3);
  EXPECT_EQ(r.report["payload"]["atom_values"], json::parse("[[[0],[2]],[[1],[1]],[[2],[0]]]"));
}

TEST(Cli, UniversalVerify) {
  const auto r = run({"universal-verify", "--domain", "M1*M1", "--codomain", "M2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["payload"]["status"], "bijection");
  EXPECT_EQ(r.report["payload"]["cardinalities"]["states"], 3);
  EXPECT_EQ(r.report["payload"]["cardinalities"]["dual_homs"], 3);
}

TEST(Cli, StateCheckReportsWitness) {
  const auto r = run({"state-check", "--state", kA2Violation});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report["status"], "fail");
  EXPECT_EQ(r.report["payload"]["axioms"]["witness"], json::parse("[[1]]"));
  EXPECT_TRUE(r.report["payload"]["agree"].get<bool>());
  const auto ok = run({"state-check", "--state", R"({"domain":"M1*M1","codomain":"M2","atom_values":[[1],[1]]})"});
  EXPECT_EQ(ok.code, 0);
}

TEST(Cli, StateExtend) {
  const auto ok = run({"state-extend", "--domain", "M1*M1", "--codomain", "M2", "--atom-values", "[[1],[1]]"});
  EXPECT_EQ(ok.code, 0);
  const auto bad = run({"state-extend", "--domain", "M2", "--codomain", "M4", "--atom-values", "[[1]]"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.report["payload"]["sum"], json::parse("[2]"));
}

TEST(Cli, StateHarness) {
  const auto r = run({"state-harness", "--domain", "M2", "--codomain", "M2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["payload"]["functions"], 27);
  EXPECT_EQ(r.report["payload"]["states"], 1);
  EXPECT_EQ(run({"state-harness", "--domain", "M8", "--codomain", "M8"}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
  const auto r = run({"state-enumerate", "--domain", "M0*M2", "--codomain", "M2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["status"], "error");
  EXPECT_NE(r.report["error"].get<std::string>().find(">= 1"), std::string::npos);
  EXPECT_EQ(run({"state-enumerate", "--domain", "M2"}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"state-check", "--state", "{not json"}).code, 2);
  EXPECT_EQ(run({"state-check", "--state", R"({"domain":"M2","codomain":"M2","table":[[[0],[0]]]})"}).code, 2);
  EXPECT_EQ(run({"geometry", "regular", "--simplex", R"([["0"],["1"],["1/2"]])"}).code, 2);
}

TEST(Cli, AlgebraCheck) {
  const auto r = run({"algebra-check", "--algebra", "M2*M3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["payload"]["size"], 12);
  EXPECT_EQ(r.report["payload"]["multiplicities"], json::parse("[2,3]"));
  EXPECT_EQ(r.report["payload"]["radical"], json::parse("[[0,0]]"));
  const auto id = run({"algebra-check", "--algebra", "M2", "--identity", "x (+) x = x"});
  EXPECT_EQ(id.code, 1);
  EXPECT_EQ(id.report["payload"]["identity"]["witness"]["x"], json::parse("[1]"));
  const auto sub = run({"algebra-check", "--algebra", "M2*M6", "--generators", "[[1,3]]"});
  EXPECT_EQ(sub.report["payload"]["subalgebra"]["signature"], "M2");
  EXPECT_EQ(run({"algebra-check", "--algebra", "M2", "--identity", "x (+) = x"}).code, 2);
}

TEST(Cli, Geometry) {
  const auto d = run({"geometry", "den", "--point", R"(["1/2","1/3"])"});
  EXPECT_EQ(d.report["payload"]["den"], 6);
  EXPECT_EQ(run({"geometry", "regular", "--simplex", R"([["0"],["1"]])"}).code, 0);
  const auto irr = run({"geometry", "regular", "--simplex", R"([["1/3"],["2/3"]])"});
  EXPECT_EQ(irr.code, 1);
  EXPECT_FALSE(irr.report["payload"]["regular"].get<bool>());
  const auto pts = run({"geometry", "points", "--k", "M1*M1", "--t", "2"});
  EXPECT_EQ(pts.report["payload"]["points"], json::parse(R"([["0/1","1/1"],["1/2","1/2"],["1/1","0/1"]])"));
}

TEST(Cli, RoundTripAndAffineCompare) {
  const auto r = run({"roundtrip", "gamma-xi", "--algebra", "M2*M3", "--codomain", "M6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["payload"]["phi_checked"], 12);
  EXPECT_EQ(r.report["payload"]["epsilon_checked"], 21 * 21);
  EXPECT_EQ(r.report["payload"]["states_checked"], 2);
  const auto a = run({"affine-compare", "--algebra", "M2*M3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(a.report["payload"]["agree"].get<bool>());
}

TEST(Cli, DualMapAndChain) {
  const auto d = run({"dual-map", "--hom", R"({"domain":"M2","codomain":"M2*M6","atom_images":[[1,3]]})"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.report["payload"]["dual_map"], json::parse("[0,0]"));
  EXPECT_EQ(d.report["payload"]["upsilon"]["alpha"]["matrix"], json::parse("[[1,3]]"));
  const auto bad = run({"dual-map", "--hom", R"({"domain":"M2","codomain":"M2","atom_images":[[2]]})"});
  EXPECT_EQ(bad.code, 1);
  const auto c = run({"chain-check", "--chain",
                      R"({"algebras":["M1","M2","M2*M6"],"maps":[{"atom_images":[[2]]},{"atom_images":[[1,3]]}]})"});
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(c.report["payload"]["ok"].get<bool>());
  const auto nc = run({"chain-check", "--chain", R"({"algebras":["M1*M1","M1"],"maps":[{"atom_images":[[1],[0]]}]})"});
  EXPECT_EQ(nc.code, 1);
}

TEST(Cli, UniversalBuildRoundTrips) {
  const auto r = run({"universal-build", "--algebra", "M1*M2"});
  EXPECT_EQ(r.code, 0);
  const auto u = io::universal_from_json(r.report["payload"]);
  EXPECT_EQ(u.source, FiniteMvAlgebra({1, 2}));
  EXPECT_EQ(run({"universal-build", "--algebra", "T"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> invocations{
      {"state-enumerate", "--domain", "M2*M3", "--codomain", "M6*M2"},
      {"universal-verify", "--domain", "M1*M1*M1", "--codomain", "M3*M2"},
      {"state-harness", "--domain", "M3", "--codomain", "M8", "--sample"},
      {"geometry", "points", "--k", "M1*M2*M3", "--t", "6"}};
  for (const auto& args : invocations) EXPECT_EQ(run(args).text, run(args).text);
}

TEST(Serialization, RoundTrips) {
  const FiniteMvAlgebra A({1, 2}), N({2, 4});
  for (const auto& s : enumerate_states(A, N)) {
    EXPECT_EQ(io::state_from_json(io::to_json(s)), s);
    EXPECT_EQ(io::state_from_json(io::to_json(s, true)), s);
  }
  const auto bad = io::state_from_json(json::parse(kA2Violation));
  EXPECT_EQ(io::state_from_json(io::to_json(bad)), bad);
  for (const auto& h : enumerate_homomorphisms(A, N)) EXPECT_EQ(io::hom_from_json(io::to_json(h)), h);
  EXPECT_EQ(io::algebra_from_json(io::to_json(A)), A);
  const auto pts = points_with_denominator_dividing({1, 2, 3}, 6);
  for (const auto& p : pts) EXPECT_EQ(io::point_from_json(io::to_json(p)), p);
  const auto simplex = delta_k({2, 3});
  EXPECT_EQ(io::simplex_from_json(io::to_json(simplex)), simplex);
  const auto f = make_affine_map({{1, 3}}, {0}, delta_k({2, 6}));
  EXPECT_EQ(io::affine_from_json(io::to_json(f)), f);
  for (const auto& e : {XiElement{epsilon(N, {3, -5})}, XiElement{XiVector{{3, -5}, {2, 4}}}})
    EXPECT_TRUE(xi_equal(io::xi_from_json(N, io::to_json(e)), e));
}

}  // namespace
}  // namespace mvstate

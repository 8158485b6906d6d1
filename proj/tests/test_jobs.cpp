#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rcurves/jobs.hpp"

using rcurves::jobs::RunOptions;
using rcurves::jobs::run_jobs_text;
using Json = nlohmann::ordered_json;

namespace {

Json parse_output(const std::string& text) { return Json::parse(text); }

}  // namespace

TEST_CASE("splitting job emits the canonical document for the line in the plane") {
  auto r = run_jobs_text(
      R"({"command":"splitting","field":"Q","payload":{"ambient":"P:2","map":[[1,0],[0,1],[0,0]]}})");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"splitting\":[2,1],\"h0\":5,\"h1\":0,\"c1_beta\":3,\"free\":true,\"very_free\":true,"
        "\"gw_rigid\":false,\"expected_dim\":5,\"tangent_dim_direct\":5,"
        "\"verdict\":\"smooth_of_dim_5\"}\n");
}

TEST_CASE("splitting job accepts object ambients, hypersurfaces and rational strings") {
  // Line inside the hyperplane x2 = 0: the restricted tangent bundle is the
  // tangent bundle of the hyperplane itself.
  auto hyperplane = run_jobs_text(
      R"({"command":"splitting","payload":{
            "hypersurface":{"ambient":{"P":2},"degree":1,"terms":[{"exp":[0,0,1],"c":1}]},
            "map":[[1,0],[0,1],[0,0]]}})");
  CHECK(hyperplane.exit_code == 0);
  auto doc = parse_output(hyperplane.output);
  CHECK(doc.at("splitting") == Json::array({2}));
  CHECK(doc.at("h0") == 3);
  CHECK(doc.at("tangent_dim_direct") == 3);

  // The conic (1/2) x0 x2 - (1/2) x1^2 parametrized by itself: coefficient
  // strings parse exactly, and the tangent bundle of the image curve is
  // O(2).
  auto conic = run_jobs_text(
      R"({"command":"splitting","payload":{
            "ambient":{"P":2},
            "hypersurface":{"ambient":{"P":2},"degree":2,
                            "terms":[{"exp":[1,0,1],"c":"1/2"},{"exp":[0,2,0],"c":"-1/2"}]},
            "map":{"blocks":[[[1,0,0],[0,1,0],[0,0,1]]]}}})");
  CHECK(conic.exit_code == 0);
  doc = parse_output(conic.output);
  CHECK(doc.at("splitting") == Json::array({2}));
  CHECK(doc.at("h0") == 3);
  CHECK(doc.at("c1_beta") == 2);
  CHECK(doc.at("tangent_dim_direct") == 3);
  CHECK(doc.at("very_free") == true);
}

TEST_CASE("formulas jobs evaluate by name") {
  auto r = run_jobs_text(
      R"({"command":"formulas","payload":{"name":"gw_expected_dim","c1_beta":2,"dimX":3,"g":0,"codims":[2,2]}})");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{\"value\":0}\n");

  r = run_jobs_text(
      R"({"command":"formulas","payload":{"name":"mor_dim_projective","n":3,"d":2}})");
  CHECK(parse_output(r.output).at("value") == 11);

  r = run_jobs_text(
      R"({"command":"formulas","payload":{"name":"mor_refined_bound","c1_beta":4,"dimX":3,"g":2,"h1L":1,"h1Le":0}})");
  CHECK(parse_output(r.output).at("value") == 2);

  r = run_jobs_text(R"({"command":"formulas","payload":{"name":"no_such_formula"}})");
  CHECK(r.exit_code == 2);
  CHECK(parse_output(r.output).at("error").at("kind") == "UnknownFormula");
}

TEST_CASE("hirzebruch jobs cover the class arithmetic") {
  auto r = run_jobs_text(
      R"({"command":"hirzebruch","payload":{"op":"intersect","e":2,"c1":[1,0],"c2":[1,0]}})");
  CHECK(r.output == "{\"value\":-2}\n");

  r = run_jobs_text(
      R"({"command":"hirzebruch","payload":{"op":"transport_to_f0","e":4,"c":[1,2]}})");
  CHECK(r.output == "{\"e\":0,\"class\":[1,0]}\n");

  r = run_jobs_text(R"({"command":"hirzebruch","payload":{"op":"canonical_class","e":2}})");
  CHECK(r.output == "{\"e\":2,\"class\":[-2,-4]}\n");

  r = run_jobs_text(R"({"command":"hirzebruch","payload":{"op":"cover_moduli_dim","k":3}})");
  CHECK(r.output == "{\"value\":4}\n");

  r = run_jobs_text(
      R"({"command":"hirzebruch","payload":{"op":"through_points_dim","e":4,"c":[1,4],"m":2}})");
  CHECK(r.output == "{\"value\":3}\n");

  r = run_jobs_text(R"({"command":"hirzebruch","payload":{"op":"is_effective","e":0,"c":[1,-1]}})");
  CHECK(r.output == "{\"value\":false}\n");
}

TEST_CASE("lines job enumerates the quadric rulings over GF(3)") {
  auto r = run_jobs_text(
      R"({"command":"lines","field":"Fp:3","payload":{
            "hypersurface":{"ambient":{"P":3},"degree":2,
                            "terms":[{"exp":[1,0,0,1],"c":1},{"exp":[0,1,1,0],"c":-1}]}}})");
  CHECK(r.exit_code == 0);
  auto doc = parse_output(r.output);
  CHECK(doc.at("expected_dim") == 1);
  CHECK(doc.at("count") == 8);
  CHECK(doc.at("note") == "GF(3)-rational lines only");
  REQUIRE(doc.at("lines").size() == 8);
  for (const auto& rec : doc.at("lines")) {
    CHECK(rec.at("splitting") == Json::array({2, 0}));
    CHECK(rec.at("h0") == 4);
    CHECK(rec.at("fano_tangent_dim") == 1);
    CHECK(rec.at("unobstructed") == true);
    CHECK(rec.at("matrix").size() == 2);
  }
  // Records arrive sorted by matrix; spot-check the first ruling line.
  CHECK(doc.at("lines").at(0).at("matrix") == Json::parse("[[0,0,1,0],[0,0,0,1]]"));

  auto budget = run_jobs_text(
      R"({"command":"lines","field":"Fp:101","payload":{
            "hypersurface":{"ambient":{"P":3},"degree":2,
                            "terms":[{"exp":[1,0,0,1],"c":1},{"exp":[0,1,1,0],"c":-1}]},
            "budget":100}})");
  CHECK(budget.exit_code == 3);
  CHECK(parse_output(budget.output).at("error").at("kind") == "BudgetExceeded");

  auto rational = run_jobs_text(R"({"command":"lines","payload":{}})");
  CHECK(rational.exit_code == 2);
  CHECK(parse_output(rational.output).at("error").at("kind") == "BadField");
}

TEST_CASE("error taxonomy maps to exit codes") {
  auto not_on = run_jobs_text(
      R"({"command":"splitting","payload":{
            "hypersurface":{"ambient":{"P":2},"degree":1,"terms":[{"exp":[0,0,1],"c":1}]},
            "map":[[1,0],[0,1],[1,1]]}})");
  CHECK(not_on.exit_code == 3);
  CHECK(parse_output(not_on.output).at("error").at("kind") == "NotOnHypersurface");

  auto bad_json = run_jobs_text("{\"command\": ");
  CHECK(bad_json.exit_code == 2);
  CHECK(parse_output(bad_json.output).at("error").at("kind") == "BadJson");

  auto bad_command = run_jobs_text(R"({"command":"draw"})");
  CHECK(bad_command.exit_code == 2);
  CHECK(parse_output(bad_command.output).at("error").at("kind") == "BadCommand");

  auto mismatch = run_jobs_text(
      R"({"command":"splitting","payload":{
            "ambient":{"P":3},
            "hypersurface":{"ambient":{"P":2},"degree":1,"terms":[{"exp":[0,0,1],"c":1}]},
            "map":[[1,0],[0,1],[0,0]]}})");
  CHECK(mismatch.exit_code == 2);
  CHECK(parse_output(mismatch.output).at("error").at("kind") == "ArityMismatch");

  auto degenerate = run_jobs_text(
      R"({"command":"splitting","payload":{"ambient":"P:2","map":[[0,0],[0,0],[0,0]]}})");
  CHECK(degenerate.exit_code == 3);
  CHECK(parse_output(degenerate.output).at("error").at("kind") == "NotBasepointFree");
}

TEST_CASE("batch arrays preserve order and report the worst severity") {
  const std::string ok = R"({"command":"formulas","payload":{"name":"mor_dim_projective","n":1,"d":1}})";
  const std::string precondition = R"({"command":"splitting","payload":{
      "hypersurface":{"ambient":{"P":2},"degree":1,"terms":[{"exp":[0,0,1],"c":1}]},
      "map":[[1,0],[0,1],[1,1]]}})";
  const std::string invalid = R"({"command":"formulas","payload":{"name":"nope"}})";

  auto both = run_jobs_text("[" + ok + "," + precondition + "]");
  CHECK(both.exit_code == 3);
  auto docs = parse_output(both.output);
  REQUIRE(docs.is_array());
  CHECK(docs.at(0).at("value") == 3);
  CHECK(docs.at(1).at("error").at("kind") == "NotOnHypersurface");

  auto worst = run_jobs_text("[" + precondition + "," + invalid + "]");
  CHECK(worst.exit_code == 2);

  // Batch output does not depend on the worker count.
  const std::string batch = "[" + ok + "," + invalid + "," + ok + "," + precondition + "]";
  RunOptions serial;
  RunOptions sharded;
  sharded.parallel = 3;
  auto a = run_jobs_text(batch, serial);
  auto b = run_jobs_text(batch, sharded);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);

  CHECK(run_jobs_text("[]").output == "[]\n");
  CHECK(run_jobs_text("[]").exit_code == 0);
}

TEST_CASE("selfcheck runs its seeded and grid suites clean") {
  RunOptions opts;
  opts.parallel = 4;
  auto r = run_jobs_text(R"({"command":"selfcheck","seed":7})", opts);
  CHECK(r.exit_code == 0);
  auto doc = parse_output(r.output);
  CHECK(doc.at("checks_run") == 13254);
  CHECK(doc.at("failures") == 0);

  auto wrong_field = run_jobs_text(R"({"command":"selfcheck","field":"Q"})");
  CHECK(wrong_field.exit_code == 2);
  CHECK(parse_output(wrong_field.output).at("error").at("kind") == "BadField");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpslab/campaign.hpp"
#include "qpslab/conventions.hpp"
#include "qpslab/random.hpp"

using namespace qpslab;

namespace {

CampaignConfig config(const std::string& suite, const std::string& group = "sl2", std::size_t samples = 4) {
  CampaignConfig c;
  c.suite = suite;
  c.group = group;
  c.samples = samples;
  c.seed = 42;
  return c;
}

json without_timestamp(const VerificationReport& r) {
  json j = r.to_json("t");
  j.erase("timestamp");
  return j;
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  const GroupContext ctx = GroupContext::from_name("sl3");
  SplitMix64 rng(3);
  for (int k = 0; k < 10; ++k) {
    const Mat<Exact> m = random_point(ctx, SampleKind::G, rng).m;
    CHECK(exact_matrix_from_json(matrix_to_json(m)) == m);
    const json j = json::parse(matrix_to_json(m).dump());
    CHECK(exact_matrix_from_json(j) == m);
    const Mat<Float> f = cast_matrix<Float>(m);
    CHECK(approx_equal(float_matrix_from_json(matrix_to_json(f)), f));
  }
  const json gauss = json::parse(R"({"rows":1,"cols":2,"entries":[["1/2","-3"],7]})");
  const Mat<Exact> g = exact_matrix_from_json(gauss);
  CHECK(g(0, 0) == Exact(mpq_class(1, 2), mpq_class(-3)));
  CHECK(g(0, 1) == Exact(7));
}

TEST_CASE("malformed matrix JSON") {
  CHECK_THROWS_AS(exact_matrix_from_json(json::parse(R"({"rows":2,"cols":2,"entries":[1,2,3]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[0.5]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":["x/y"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_matrix_from_json(json::parse(R"([1,2])")), std::invalid_argument);
}

TEST_CASE("group element JSON validation") {
  const GroupContext sl2 = GroupContext::from_name("sl2");
  const GroupContext gl2 = GroupContext::from_name("gl2");
  const json id = json::parse(R"({"group":"sl2","rows":2,"cols":2,"entries":[1,0,0,1]})");
  CHECK(group_element_from_json(sl2, id).m == Mat<Exact>::identity(2));
  CHECK_THROWS_WITH_AS(group_element_from_json(gl2, id), doctest::Contains("wrong group tag"), std::invalid_argument);
  const json singular = json::parse(R"({"rows":2,"cols":2,"entries":[1,2,2,4]})");
  CHECK_THROWS_WITH_AS(group_element_from_json(gl2, singular), doctest::Contains("not invertible"),
                       std::invalid_argument);
  const json det2 = json::parse(R"({"rows":2,"cols":2,"entries":[2,0,0,1]})");
  CHECK_NOTHROW(group_element_from_json(gl2, det2));
  CHECK_THROWS_AS(group_element_from_json(sl2, det2), std::invalid_argument);
  const GroupElement<Exact> e = group_element_from_json(gl2, det2);
  CHECK(group_tag(group_element_to_json(e)) == "gl2");
}

TEST_CASE("point JSON") {
  const GroupContext ctx = GroupContext::from_name("sl2");
  SplitMix64 rng(8);
  const auto g = random_point(ctx, SampleKind::G, rng).m;
  const auto b = random_point(ctx, SampleKind::B, rng).m;
  const GSPoint<Exact> p = make_gs_point(ctx, g, b);
  const GSPoint<Exact> q = gs_point_from_json(ctx, json::parse(point_to_json(p).dump()));
  CHECK(q.g == p.g);
  CHECK(q.b == p.b);
  json bad = point_to_json(p);
  bad["b"] = matrix_to_json(g);
  if (!ctx.in_borel(g)) CHECK_THROWS_AS(gs_point_from_json(ctx, bad), std::invalid_argument);
  const DoublePoint<Exact> d{g, b};
  const DoublePoint<Exact> d2 = double_point_from_json(ctx, point_to_json(d));
  CHECK(d2.a == g);
  CHECK(d2.b == b);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(config("pairing").validate());
  CHECK_THROWS_AS(config("nosuch").validate(), ConfigError);
  CHECK_THROWS_AS(config("pairing", "so3").validate(), ConfigError);
  auto c = config("pairing");
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = config("pairing");
  c.backend = "double";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  TestHooks h;
  CHECK_THROWS_AS(apply_hook(h, "nope"), ConfigError);
  apply_hook(h, "omega-sign");
  CHECK(hook_names(h) == std::vector<std::string>{"omega-sign"});
}

TEST_CASE("cartan-dirac campaign on sl2") {
  auto c = config("cartan-dirac", "sl2", 10);
  const auto r = run_suite(c);
  std::size_t lagrangian = 0, closure = 0;
  for (const auto& rec : r.records) {
    lagrangian += rec.check == "lagrangian";
    closure += rec.check == "closure";
  }
  CHECK(lagrangian == 10);
  CHECK(closure == 10);
  CHECK(r.ok());
  CHECK(r.failed() == r.total() - r.passed());
}

TEST_CASE("gs-theorem1 campaign on sl2") { CHECK(run_suite(config("gs-theorem1", "sl2", 6)).ok()); }

TEST_CASE("corrupted sigma fails the kernel lemma with witnesses") {
  auto c = config("lemma-kernel");
  apply_hook(c.hooks, "sigma-sign");
  const auto r = run_suite(c);
  CHECK(r.failed() > 0);
  for (const auto& rec : r.records)
    if (!rec.passed) CHECK_FALSE(rec.witness.empty());
}

TEST_CASE("reports are deterministic and ordered by point") {
  for (const std::string suite : {"double", "gs-theorem1", "weyl-fiber"}) {
    auto c = config(suite, "sl2", 6);
    if (suite == "weyl-fiber") c.backend = "float";
    const json a = without_timestamp(run_suite(c));
    const json b = without_timestamp(run_suite(c));
    CHECK(a.dump() == b.dump());
    c.jobs = 3;
    json p = without_timestamp(run_suite(c));
    CHECK(p["config"]["jobs"] == 3);
    p["config"]["jobs"] = 1;
    CHECK(p.dump() == a.dump());
    std::size_t last = 0;
    for (const auto& rec : a["records"]) {
      CHECK(rec["index"].get<std::size_t>() >= last);
      last = rec["index"];
    }
  }
  auto c = config("pairing");
  const json a = without_timestamp(run_suite(c));
  c.seed = 43;
  CHECK(a.dump() != without_timestamp(run_suite(c)).dump());
}

TEST_CASE("report schema") {
  const json j = run_suite(config("regact", "sl2", 2)).to_json(utc_timestamp());
  CHECK(j["schema"] == "qpslab/1");
  CHECK(j["config"]["suite"] == "regact");
  CHECK(j["summary"]["total"] == j["records"].size());
  CHECK(j["convention_ledger"]["hash"] == convention_ledger_hash());
  CHECK(j["convention_ledger"]["entries"].size() == convention_ledger().size());
  CHECK(j["timestamp"].get<std::string>().size() == 20);
  for (const auto& rec : j["records"]) {
    CHECK(rec.contains("point"));
    CHECK(rec["point"].contains("g"));
    CHECK(rec["point"].contains("b"));
  }
}

TEST_CASE("forced sample points") {
  const auto r = run_suite(config("regact", "sl3", 2));
  const GroupContext ctx = GroupContext::from_name("sl3");
  const Mat<Exact> b0 = exact_matrix_from_json(r.records[0].point["b"]);
  for (std::size_t i = 0; i < 3; ++i) CHECK(b0(i, i) == Exact(1));
  const Mat<Exact> b1 = exact_matrix_from_json(r.records.back().point["b"]);
  std::size_t repeated = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) repeated += b1(i, i) == b1(j, j);
  CHECK(repeated > 0);
}

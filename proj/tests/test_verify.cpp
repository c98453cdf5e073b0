#include <set>
#include <stdexcept>

#include "altdesc/kernels.hpp"
#include "altdesc/verify.hpp"
#include "test_helpers.hpp"

using namespace altdesc;
using namespace altdesc::verify;

namespace {

CheckParams range(int lo, int hi) {
  CheckParams p;
  p.n_min = lo;
  p.n_max = hi;
  return p;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("catalog") {
  const std::vector<std::string> expected{
      "L1",  "L2",         "pan1",       "pan2",      "Qi1",      "eqL",           "lemma21",
      "my1", "my2",        "A1",         "A2",        "hof1",     "hof2",          "che",
      "p6",  "bminus_egf", "euler_egf",  "snake_egf", "dub_2nEn", "key",           "beta_partition",
      "reciprocal",        "rec_prop",   "rec_diff",  "b_n0_snake"};
  CHECK(catalog() == expected);
  CHECK(in_catalog("che"));
  CHECK_FALSE(in_catalog("nosuch"));
  CHECK_THROWS_AS(run("nosuch", range(1, 2), Context{}), std::invalid_argument);
  CHECK_THROWS_AS(default_params("nosuch", Profile::quick), std::invalid_argument);
}

TEST_CASE("profiles") {
  CHECK(default_params("pan1", Profile::quick).n_max == 6);
  CHECK(default_params("pan1", Profile::full).n_max == 8);
  CHECK(default_params("pan2", Profile::quick).n_max == 5);
  CHECK(default_params("pan2", Profile::full).n_max == 7);
  CHECK(default_params("key", Profile::full).n_max == 6);
  const CheckParams s = default_params("che", Profile::full);
  CHECK(s.kind == ParamKind::series_order);
  CHECK(s.n_max == 12);
  CHECK(s.x_order == 14);
  CHECK(default_params("my2", Profile::quick).n_min == 0);
  CHECK(parse_profile("full") == Profile::full);
  CHECK_FALSE(parse_profile("slow").has_value());
}

TEST_CASE("individual checks pass") {
  const Context ctx;
  CHECK(run("pan1", range(1, 7), ctx).status == Status::pass);
  CHECK(run("my2", range(0, 6), ctx).status == Status::pass);
  CHECK(run("rec_prop", range(1, 6), ctx).status == Status::pass);
  CHECK(run("lemma21", range(1, 6), ctx).status == Status::pass);
  CHECK(run("rec_diff", range(1, 25), ctx).status == Status::pass);
}

TEST_CASE("quick profile passes in catalog order") {
  const auto results = run_all(Profile::quick, Context{});
  REQUIRE(results.size() == 25);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].id);
    CHECK(results[i].id == catalog()[i]);
    CHECK(results[i].status == Status::pass);
    CHECK_FALSE(results[i].witness.has_value());
  }
  CHECK(all_passed(results));
}

TEST_CASE("ranges past the bound are skipped") {
  const Context ctx;
  const IdentityCheck c = run("my1", range(1, 9), ctx);
  CHECK(c.status == Status::skipped);
  CHECK(c.params.n_max == 9);
  CHECK(run("pan2", range(1, 8), ctx).status == Status::skipped);
  Context raised;
  raised.bounds = {9, 7};
  CHECK(run("my1", range(1, 9), raised).status == Status::pass);
  CHECK(all_passed({c}));
}

TEST_CASE("series checks switch to formula routes past the bounds") {
  Context ctx;
  ctx.bounds = {4, 3};
  CheckParams p;
  p.n_max = 9;
  for (const char* id : {"che", "p6", "bminus_egf", "euler_egf", "snake_egf"}) {
    CAPTURE(id);
    const IdentityCheck c = run(id, p, ctx);
    CHECK(c.status == Status::pass);
    CHECK(c.params.x_order == x_order_for(9));
  }
}

TEST_CASE("a perturbed Q_3 fails my2 at n = 3") {
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    Context ctx;
    ctx.mutation = Mutation{'Q', 3, k, 1};
    const IdentityCheck c = run("my2", range(0, 6), ctx);
    REQUIRE(c.status == Status::fail);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->n == 3);
  }
}

TEST_CASE("a perturbed P_3 fails my1 with a witness") {
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    Context ctx;
    ctx.mutation = Mutation{'P', 3, k, 1};
    const IdentityCheck c = run("my1", range(1, 6), ctx);
    REQUIRE(c.status == Status::fail);
    CHECK(c.witness->n == 3);
    CHECK(run("hof1", default_params("hof1", Profile::quick), ctx).status == Status::fail);
    // che reads P_n only past the type A bound
    CHECK(run("che", default_params("che", Profile::quick), ctx).status == Status::pass);
    ctx.bounds.type_a = 2;
    CHECK(run("che", default_params("che", Profile::quick), ctx).status == Status::fail);
  }
}

TEST_CASE("reports") {
  Context ctx;
  ctx.mutation = Mutation{'Q', 3, 1, 1};
  std::vector<IdentityCheck> results{run("my2", range(0, 4), ctx), run("L1", range(1, 3), ctx),
                                     run("che", default_params("che", Profile::quick), ctx),
                                     run("my1", range(1, 9), ctx)};
  CHECK_FALSE(all_passed(results));
  const ReportMeta meta{"quick", {}, std::nullopt};
  const nlohmann::json doc = report_json(results, meta);
  CHECK(doc["version"] == 1);
  CHECK_FALSE(doc.contains("header"));
  REQUIRE(doc["checks"].size() == 4);
  CHECK(doc["checks"][0]["status"] == "fail");
  CHECK(doc["checks"][0]["witness"]["n"] == 3);
  CHECK(doc["checks"][1]["witness"].is_null());
  CHECK(doc["checks"][2]["params"]["x_order"] == 10);
  CHECK(doc["checks"][3]["status"] == "skipped");
  CHECK(doc["summary"]["fail"] == 1);
  CHECK(doc["summary"]["pass"] == 2);
  CHECK(doc["summary"]["skipped"] == 1);

  const ReportMeta stamped{"quick", {}, std::string("2000-01-01T00:00:00Z")};
  CHECK(report_json(results, stamped)["header"]["generated"] == "2000-01-01T00:00:00Z");
  const std::string text = report_text(results, meta);
  CHECK(text.find("FAIL my2") != std::string::npos);
  CHECK(text.find("SKIP my1") != std::string::npos);
  CHECK(text.find("2 passed, 1 failed, 1 skipped") != std::string::npos);
  CHECK(report_text(results, stamped).rfind("# altdesc verify", 0) == 0);
}

TEST_CASE("reports are stable across thread counts") {
  const int saved = kernel_threads();
  const ReportMeta meta{"quick", {}, std::nullopt};
  set_kernel_threads(1);
  const std::string one = report_json(run_all(Profile::quick, Context{}), meta).dump();
  set_kernel_threads(4);
  const std::string four = report_json(run_all(Profile::quick, Context{}), meta).dump();
  set_kernel_threads(saved);
  CHECK(one == four);
}

}

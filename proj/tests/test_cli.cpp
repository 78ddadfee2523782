#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "braidcheck/matrix_json.hpp"
#include "braidcheck/suite.hpp"

using namespace braidcheck;

TEST_CASE("braiding and g-matrix specification parsing") {
    CHECK(resolve_braiding("dj_hecke:2").kind == SymmetryKind::Hecke);
    CHECK(resolve_braiding("superflip:1,1").N() == 2);
    CHECK_THROWS_AS(resolve_braiding("file:/nonexistent.json"), ValidationError);
    CHECK(resolve_gmatrix("id", 2) == TensorOp::identity(2, 1));
    TensorOp d = resolve_gmatrix("diag:1,3", 2);
    CHECK(d.at(1, 1) == Scalar(3));
    CHECK_THROWS_AS(resolve_gmatrix("diag:1", 2), ValidationError);
    CHECK_THROWS_AS(resolve_gmatrix("mystery", 2), ValidationError);
    CHECK_THROWS_AS(parse_kind("elliptic"), ValidationError);
}

TEST_CASE("matrix files loaded from disk feed the braiding resolver") {
    std::string path = "braidcheck_test_matrix.json";
    save_tensorop(catalog("uq_sl11").op, path);
    Braiding b = resolve_braiding("file:" + path);
    CHECK(b.kind == SymmetryKind::Hecke);
    CHECK(b.op == catalog("uq_sl11").op);
    // a non-braiding matrix is rejected at load time
    TensorOp bad = TensorOp::flip(2);
    bad.at(0, 1) += Scalar(1);
    save_tensorop(bad, path);
    CHECK_THROWS_AS(resolve_braiding("file:" + path), ValidationError);
    std::remove(path.c_str());
}

TEST_CASE("suite reports") {
    SUBCASE("pass/fail/inconclusive aggregation and exit codes") {
        CheckReport rep;
        rep.suite = "demo";
        CHECK(rep.exit_code() == 0); // empty suite is a valid pass
        rep.checks.push_back(CheckResult::pass("a"));
        CHECK(rep.overall() == Status::Pass);
        rep.checks.push_back(CheckResult::inconclusive("b"));
        CHECK(rep.overall() == Status::Inconclusive);
        CHECK(rep.exit_code() == 2);
        rep.checks.push_back(CheckResult::fail("c"));
        CHECK(rep.overall() == Status::Fail);
        CHECK(rep.exit_code() == 1);
    }
    SUBCASE("JSON schema basics") {
        CheckReport rep;
        rep.suite = "demo";
        auto j = rep.to_json();
        CHECK(j["schema"] == "braidcheck-report/1");
        CHECK(j["checks"].is_array());
        CHECK(emit_report(rep, "text").find("demo") != std::string::npos);
        CHECK_THROWS_AS(emit_report(rep, "yaml"), ValidationError);
    }
    SUBCASE("failing checks carry entry witnesses") {
        TensorOp bad = TensorOp::flip(2);
        bad.at(0, 1) += Scalar(1);
        CheckReport rep = run_braiding_suite({bad, SymmetryKind::Involutive, "perturbed"});
        CHECK(rep.overall() == Status::Fail);
        bool witnessed = false;
        for (const auto& c : rep.checks)
            if (c.details.contains("witness")) witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
    SuiteOptions opt;
    opt.seed = 11;
    opt.points = 4;
    CheckReport a = run_baxter_suite(catalog("dj_hecke:2"), RKind::Trigonometric, opt);
    CheckReport b = run_baxter_suite(catalog("dj_hecke:2"), RKind::Trigonometric, opt);
    CHECK(emit_report(a, "json") == emit_report(b, "json"));
    opt.seed = 12;
    CheckReport c = run_baxter_suite(catalog("dj_hecke:2"), RKind::Trigonometric, opt);
    CHECK(a.overall() == c.overall());
}

TEST_CASE("certificate replay flag re-verifies embedded certificates") {
    SuiteOptions opt;
    opt.K = 2;
    opt.k = 1;
    opt.p = 1;
    opt.bound_a = 1;
    opt.bound_b = 1;
    opt.replay = true;
    CheckReport rep = run_bethe_suite(catalog("flip:2"), catalog("flip:2"), RKind::Rational, opt);
    CHECK(rep.overall() == Status::Pass);
    bool replayed = false;
    for (const auto& cj : rep.checks.at(0).details["coefficients"])
        if (cj.contains("replayed") && cj["replayed"].get<bool>()) replayed = true;
    CHECK(replayed);
}

TEST_CASE("config-file entry point") {
    json cfg;
    cfg["command"] = "compat";
    cfg["R"] = "uq_sl11";
    cfg["F"] = "superflip:1,1";
    CHECK(run_from_config(cfg).overall() == Status::Pass);
    // scalars are strings in the core grammar
    json qkz;
    qkz["command"] = "qkz";
    qkz["R"] = "dj_hecke:2";
    qkz["F"] = "flip:2";
    qkz["kind"] = "trig";
    qkz["q"] = "5/2";
    qkz["p_shift"] = "2";
    qkz["kappa"] = "3";
    qkz["g"] = "diag:1,3";
    qkz["points"] = 3;
    qkz["seed"] = 5;
    CHECK(run_from_config(qkz).overall() == Status::Pass);
    // unknown keys are rejected
    json bad = cfg;
    bad["mystery_knob"] = 1;
    CHECK_THROWS_AS(run_from_config(bad), ValidationError);
    CHECK_THROWS_AS(run_from_config(json::object()), ValidationError);
    json badrat = qkz;
    badrat["q"] = "1/0";
    CHECK_THROWS_AS(run_from_config(badrat), ParseError);
}

TEST_CASE("symbolic trigonometric runs default to two seeded q points") {
    SuiteOptions opt;
    opt.K = 1;
    opt.k = 1;
    opt.p = 1;
    opt.bound_a = 1;
    opt.bound_b = 1;
    opt.keep_certificates = true;
    Braiding dj = catalog("dj_hecke:2");
    CheckReport rep = run_bethe_suite(dj, dj, RKind::Trigonometric, opt); // no --q
    CHECK(rep.overall() == Status::Pass);
    // each nonzero verified coefficient carries one certificate per q point
    int nontrivial = 0;
    for (const auto& cj : rep.checks.at(0).details["coefficients"])
        if (cj.contains("certificates") && cj["terms"].get<int>() > 0) {
            CHECK(cj["certificates"].size() == 2);
            ++nontrivial;
        }
    CHECK(nontrivial > 0);
}

TEST_CASE("worker cap honors the environment variable") {
    CHECK(worker_count() >= 1);
    std::vector<std::function<CheckResult()>> jobs;
    for (int i = 0; i < 4; ++i)
        jobs.push_back([i] { return CheckResult::pass("job" + std::to_string(i)); });
    auto results = run_parallel(std::move(jobs));
    REQUIRE(results.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(results[static_cast<std::size_t>(i)].name == "job" + std::to_string(i));
}

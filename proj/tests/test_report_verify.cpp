#include "doctest.h"

#include "nilreg/verify.hpp"

using namespace nilreg;

namespace {
nlohmann::json without_time(const VerificationReport& r) {
    auto j = r.to_json();
    j.erase("elapsed_ms");
    return j;
}
}  // namespace

TEST_CASE("report json") {
    VerificationReport r;
    r.check = "demo";
    r.parameters = {{"n", 3}};
    r.candidates_examined = 5;
    auto j = r.to_json();
    CHECK(j["status"] == "pass");
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(j.contains("witness"));
    r.fail_with({{"w", "q"}});
    r.fail_with({{"w", "second"}});
    CHECK(r.witness->at("w") == "q");
    auto back = VerificationReport::from_json(r.to_json());
    CHECK(back.status == Status::fail);
    CHECK(back.witness == r.witness);
    CHECK(back.candidates_examined == 5);
    CHECK(status_from_string("exhausted") == Status::exhausted);
    CHECK_THROWS(status_from_string("maybe"));
}

TEST_CASE("every listed check runs") {
    RunConfig cfg;
    cfg.max_len = 4;
    cfg.trials = 50;
    for (const auto& name : check_names()) {
        auto rep = run_check(name, cfg);
        CHECK_MESSAGE(rep.ok(), name);
        CHECK(rep.check == name);
    }
    CHECK_THROWS_AS(run_check("nope", cfg), std::invalid_argument);
}

TEST_CASE("same seed, same report") {
    RunConfig cfg;
    cfg.trials = 200;
    cfg.seed = 99;
    for (const char* name : {"tau-forms", "primeness", "determinant", "confluence"}) {
        auto a = run_check(name, cfg);
        auto b = run_check(name, cfg);
        CHECK(without_time(a).dump() == without_time(b).dump());
    }
    cfg.workers = 3;
    RunConfig serial = cfg;
    serial.workers = 1;
    CHECK(without_time(run_check("tau-forms", cfg)).dump() == without_time(run_check("tau-forms", serial)).dump());
    CHECK(without_time(run_check("unit-regular-search", cfg)).dump() ==
          without_time(run_check("unit-regular-search", serial)).dump());
}

TEST_CASE("presentation R through the config") {
    RunConfig cfg;
    cfg.presentation = PresentationKind::R;
    CHECK(cfg.system().describe() == "R(m=2)");
    cfg.max_len = 6;
    CHECK(run_check("confluence", cfg).ok());
    CHECK_THROWS_AS(run_check("separativity", cfg), std::invalid_argument);
}

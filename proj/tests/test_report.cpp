#include "doctest.h"
#include <array>
#include <thread>

#include "json.hpp"

#include "coact/fixtures.hpp"
#include "coact/localization.hpp"

using namespace coact;

TEST_CASE("pass reports serialize with the stable schema and no witnesses") {
    CheckReport rep = check_bialgebra(fixtures::kc2());
    rep.check_name = "bialgebra";
    rep.timing_ms = 0.0;
    CHECK(emit_json(rep) ==
          "{\n  \"check\": \"bialgebra\",\n  \"status\": \"pass\",\n  \"witnesses\": [],\n  \"timing_ms\": 0.0\n}\n");
}

TEST_CASE("fail reports carry both sides of the violated equation") {
    BialgebraData broken = fixtures::kc2();
    broken.coalgebra.counit.at(0, 1) = Scalar(0); // eps(g) = 0 breaks the counit law
    CheckReport rep = check_bialgebra(broken);
    REQUIRE(!rep.passed());
    auto j = nlohmann::json::parse(emit_json(rep));
    CHECK(j["status"] == "fail");
    REQUIRE(!j["witnesses"].empty());
    CHECK(j["witnesses"][0].contains("object"));
    CHECK(j["witnesses"][0].contains("indices"));
    CHECK(j["witnesses"][0]["lhs"] != j["witnesses"][0]["rhs"]);
}

TEST_CASE("scalars serialize as exact p/q strings") {
    CoactionData rho = fixtures::kc2_self();
    Vec e{Scalar(1, 2), Scalar(1, 2)};
    auto loc = localize_central_idempotent(rho.source, e);
    FindimCompatibility compat = check_compatibility(rho, *loc.loc);
    std::string body = emit_json(compat.report);
    CHECK(body.find("1/2") != std::string::npos);
    CHECK(nlohmann::json::parse(body)["status"] == "incompatible");
}

TEST_CASE("emitted JSON re-serializes identically (fixpoint)") {
    std::vector<CheckReport> reports;
    reports.push_back(check_bialgebra(fixtures::kc2()));
    reports.push_back(check_algebra(fixtures::two_point()));
    for (auto& r : reports) r.timing_ms = 1.25;
    std::string once = emit_json(reports);
    auto parsed = nlohmann::ordered_json::parse(once);
    CHECK(parsed.dump(2) + "\n" == once);
}

TEST_CASE("exit-code semantics are a function of report statuses") {
    CheckReport pass = check_algebra(fixtures::two_point());
    CHECK(pass.passed());
    StructureConstantAlgebra bad = fixtures::two_point();
    bad.mult.at(0, 0) = Scalar(0);
    CheckReport fail = check_algebra(bad);
    CHECK(!fail.passed());
    CHECK(fail.status == CheckStatus::fail);
}

TEST_CASE("independent checks are safe to run concurrently") {
    std::vector<std::thread> workers;
    std::array<bool, 8> ok{};
    for (std::size_t t = 0; t < ok.size(); ++t)
        workers.emplace_back([&ok, t] {
            CoactionData rho = fixtures::prod();
            auto loc = localize_central_idempotent(rho.source, unit_vec(4, 0, Field::rationals()));
            FindimCompatibility compat = check_compatibility(rho, *loc.loc);
            ok[t] = check_bialgebra(fixtures::kc2()).passed() && compat.compatible();
        });
    for (auto& w : workers) w.join();
    for (bool b : ok) CHECK(b);
}

#include <catch_amalgamated.hpp>

#include "sgsphere/pipeline.hpp"

using namespace sgsphere;

TEST_CASE("full pipeline at n = 2")
{
    const auto reports = run_verify(2, 2, parse_stages("all"));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].stages.size() == all_stages().size());
    for (const auto& s : reports[0].stages)
    {
        INFO(s.name << ": " << s.error);
        CHECK(s.passed);
    }
}

TEST_CASE("n = 1 reports the tetrahedron special case")
{
    const auto reports = run_verify(1, 1, parse_stages("sphere-only"));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].passed());
    const auto it = std::find_if(reports[0].stages.begin(), reports[0].stages.end(),
                                 [](const StageResult& s) { return s.name == "topology"; });
    REQUIRE(it != reports[0].stages.end());
    CHECK(it->metrics["surface"]["is_sphere"] == true);
    CHECK(it->metrics.contains("special_case"));
}

TEST_CASE("n = 2..5 all stages pass")
{
    const auto reports = run_verify(2, 5, parse_stages("all"));
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports)
    {
        INFO("n = " << r.n);
        CHECK(r.passed());
    }
}

TEST_CASE("stage parsing")
{
    CHECK(parse_stages("all").size() == all_stages().size());
    CHECK(parse_stages("graph,ring") == std::set<std::string>{"graph", "ring"});
    CHECK_THROWS(parse_stages("graph,nonsense"));
    CHECK_THROWS(parse_stages(","));
    CHECK_THROWS(run_verify(3, 2, parse_stages("all")));
}

TEST_CASE("a single late stage builds its own dependencies")
{
    const auto reports = run_verify(3, 3, parse_stages("identity"));
    REQUIRE(reports[0].stages.size() == 1);
    CHECK(reports[0].stages[0].passed);
}

TEST_CASE("reports are reproducible without timings")
{
    const auto a = to_json(run_verify(2, 3, parse_stages("all"))).dump();
    const auto b = to_json(run_verify(2, 3, parse_stages("all"))).dump();
    CHECK(a == b);
    CHECK(a.find("seconds") == std::string::npos);
    CHECK(to_json(run_verify(2, 2, parse_stages("graph")), true).dump().find("seconds") != std::string::npos);
}

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "sgsphere/io.hpp"
#include "sgsphere/pipeline.hpp"

using namespace sgsphere;

namespace {

std::size_t count_lines_containing(const std::string& text, const std::string& needle)
{
    std::istringstream in(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line))
        count += line.find(needle) != std::string::npos;
    return count;
}

} // namespace

TEST_CASE("OFF export of the n = 2 polytope")
{
    const auto rc = build_ring_complex(2);
    const auto off = render(realize_polytope(rc.complex, default_outer_face(rc.layout)), ExportFormat::Off);
    std::istringstream in(off);
    std::string header;
    std::size_t v = 0, f = 0, e = 0;
    in >> header >> v >> f >> e;
    CHECK(header == "OFF");
    CHECK(v == 9);
    CHECK(f == 14);
    CHECK(e == 21);
    double x;
    for (std::size_t i = 0; i < 3 * v; ++i)
        REQUIRE(in >> x);
    for (std::size_t i = 0; i < f; ++i)
    {
        int three, a, b, c;
        REQUIRE(in >> three >> a >> b >> c);
        CHECK(three == 3);
        CHECK((a >= 0 && b >= 0 && c >= 0 && a < 9 && b < 9 && c < 9));
    }
}

TEST_CASE("DOT export of SG(2,2)")
{
    const auto dot = render(SchrijverGraph(2, 2), ExportFormat::Dot);
    CHECK(count_lines_containing(dot, " -- ") == 18);
    CHECK(count_lines_containing(dot, ";") - 18 == 9);
    CHECK(dot.rfind("graph SG {", 0) == 0);
}

TEST_CASE("JSON export carries labeled faces")
{
    const auto j = Json::parse(render(build_M(2).pipeline, ExportFormat::Json));
    CHECK(j["f_vector"] == Json({17, 45, 30}));
    CHECK(j["facets"].size() == 30);
    bool has_mid = false, has_b = false;
    for (const auto& v : j["vertices"])
    {
        has_mid = has_mid || v.get<std::string>().rfind("mid(", 0) == 0;
        has_b = has_b || v == "b_odd";
    }
    CHECK(has_mid);
    CHECK(has_b);
}

TEST_CASE("label strings")
{
    CHECK(to_string(VertexLabel{StableSet{1, 3, 5}}) == "1.3.5");
    CHECK(to_string(VertexLabel{make_midpoint(StableSet{3, 5}, StableSet{1, 3})}) == "mid(1.3|3.5)");
    CHECK(to_string(VertexLabel{Barycenter{Parity::Even}}) == "b_even");
    CHECK(to_string(VertexLabel{make_flag({StableSet{1, 5}, StableSet{1, 3}})}) == "flag(1.3|1.5)");
}

TEST_CASE("export errors")
{
    CHECK_THROWS(render(Exportable{}, ExportFormat::Json));
    CHECK_THROWS(render(build_ring_complex(2).complex, ExportFormat::Off));
    CHECK_THROWS(render(SchrijverGraph(2, 2), ExportFormat::Off));
    CHECK_THROWS(parse_format("svg"));
    CHECK_THROWS(write_file("/nonexistent-dir/x.off", "OFF"));
}

TEST_CASE("JSON output is byte-identical across runs")
{
    const auto a = render(neighborhood_complex(SchrijverGraph(3, 2)), ExportFormat::Json);
    const auto b = render(neighborhood_complex(SchrijverGraph(3, 2)), ExportFormat::Json);
    CHECK(a == b);
}

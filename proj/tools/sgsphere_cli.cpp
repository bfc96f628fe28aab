// Command-line front end: build, collapse, verify, export, realize.
#include <CLI11.hpp>

#include <iostream>

#include "sgsphere/sgsphere.hpp"

using namespace sgsphere;

namespace {

constexpr int kLargeN = 5;

void require_n(int n, int lowest, bool allow_large)
{
    if (n < lowest)
        throw std::invalid_argument("n must be >= " + std::to_string(lowest));
    if (n > kLargeN && !allow_large)
        throw std::invalid_argument("n > " + std::to_string(kLargeN) + " needs --large");
}

Exportable select(int n, const std::string& what)
{
    if (what == "graph")
        return SchrijverGraph(n, 2);
    if (what == "ncomplex")
        return neighborhood_complex(SchrijverGraph(n, 2));
    if (what == "sphere")
        return build_ring_complex(n).complex;
    if (what == "M")
        return build_M(n).pipeline;
    if (what == "polytope")
    {
        const auto rc = build_ring_complex(n);
        return realize_polytope(rc.complex, default_outer_face(rc.layout));
    }
    return std::monostate{};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Neighborhood complexes of stable Kneser graphs SG(n,2) and their sphere structure"};
    app.require_subcommand(1);
    bool large = false;
    app.add_flag("--large", large, "allow n > 5");

    int n = 2, k = 2, n_min = 2, n_max = 5;
    std::string stages = "all", json_out, what, format = "json", out_path;
    bool timings = false;

    auto* build = app.add_subcommand("build-graph", "print SG(n,k) as JSON");
    build->add_option("n", n)->required();
    build->add_option("-k", k, "ground set excess (2n+k elements)");

    auto* collapse = app.add_subcommand("collapse", "run the global Morse matching and collapse N(SG(n,2))");
    collapse->add_option("n", n)->required();

    auto* verify = app.add_subcommand("verify", "verify every stage for each n in a range");
    verify->add_option("n_min", n_min)->required();
    verify->add_option("n_max", n_max)->required();
    verify->add_option("--stages", stages, "all, sphere-only, or a comma list");
    verify->add_option("--json", json_out, "write the report to this file");
    verify->add_flag("--timings", timings, "include wall-clock seconds per stage");

    auto* exp = app.add_subcommand("export", "write one object to a file");
    exp->add_option("n", n)->required();
    exp->add_option("--what", what)->required()->check(CLI::IsMember({"graph", "ncomplex", "sphere", "M", "polytope"}));
    exp->add_option("--format", format)->check(CLI::IsMember({"json", "off", "dot"}));
    exp->add_option("-o", out_path)->required();

    auto* realize = app.add_subcommand("realize", "write a convex realization of the ring sphere as OFF");
    realize->add_option("n", n)->required();
    realize->add_option("-o", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*build)
        {
            require_n(n, 1, large);
            if (k < 0)
                throw std::invalid_argument("k must be >= 0");
            std::cout << to_json(SchrijverGraph(n, k)).dump(2) << '\n';
            return 0;
        }
        if (*collapse)
        {
            require_n(n, 1, large);
            const auto pm = build_global_matching(n);
            const auto c = collapse_to_critical(pm.complex, pm.matching);
            const auto surface = surface_check(c.critical);
            Json out = {{"n", n},
                        {"input_f_vector", pm.complex.f_vector()},
                        {"audit", to_json(pm.audit)},
                        {"morse", to_json(c.report)},
                        {"critical_complex", to_json(c.critical)},
                        {"surface", to_json(surface)}};
            std::cout << out.dump(2) << '\n';
            return surface.is_sphere ? 0 : 1;
        }
        if (*verify)
        {
            require_n(n_max, 1, large);
            const auto reports = run_verify(n_min, n_max, parse_stages(stages));
            const Json j = to_json(reports, timings);
            if (!json_out.empty())
                write_file(json_out, j.dump(2) + "\n");
            for (const auto& r : reports)
                for (const auto& s : r.stages)
                    std::cout << "n=" << r.n << ' ' << s.name << ' ' << (s.passed ? "PASS" : "FAIL")
                              << (s.error.empty() ? "" : " (" + s.error + ")") << '\n';
            const bool ok = j["passed"].get<bool>();
            std::cout << (ok ? "all stages passed" : "some stages failed") << '\n';
            return ok ? 0 : 1;
        }
        if (*exp)
        {
            require_n(n, what == "graph" || what == "ncomplex" ? 1 : 2, large);
            write_file(out_path, render(select(n, what), parse_format(format)));
            return 0;
        }
        if (*realize)
        {
            require_n(n, 2, large);
            const auto rc = build_ring_complex(n);
            const auto r = realize_polytope(rc.complex, default_outer_face(rc.layout));
            write_file(out_path, to_off(r));
            std::cout << "convexity margin " << r.margin << '\n';
            return 0;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

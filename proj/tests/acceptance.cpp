// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "sgsphere/sgsphere.hpp"

using namespace sgsphere;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Criterion
{
    std::string id;
    std::string title;
    std::function<bool(std::ostringstream&)> check;
};

bool ac1(std::ostringstream& note)
{
    const auto start = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 8; ++n)
    {
        const SchrijverGraph g(n, 2);
        std::size_t tight = 0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            tight += g.tightness(static_cast<int>(v)) == Tightness::Tight;
        const auto u = static_cast<std::size_t>(n);
        ok = ok && g.vertex_count() == (u + 1) * (u + 1) && tight == 2 * (u + 1) &&
             g.vertex_count() - tight == u * u - 1;
    }
    const double t = seconds_since(start);
    note << "n=1..8, " << t << " s";
    return ok && t < 1.0;
}

bool ac2(std::ostringstream& note)
{
    bool ok = true;
    for (int n = 2; n <= 8; ++n)
    {
        PipelineState st(n);
        ok = ok && stages::graph(st).first;
    }
    note << "n=2..8";
    return ok;
}

bool ac3(std::ostringstream& note)
{
    bool ok = true;
    double worst = 0;
    for (int n = 2; n <= 5; ++n)
    {
        const auto start = Clock::now();
        try
        {
            const auto pm = build_global_matching(n);
            const auto cert = verify_acyclicity(pm.matching, pm.poset);
            const auto& a = pm.audit;
            // collapse_to_critical throws unless the critical faces form a subcomplex
            const auto c = collapse_to_critical(pm.complex, pm.matching);
            ok = ok && cert.acyclic && a.unmatched_outside_a == 0 && a.order_preserving && a.pairs_within_fibers &&
                 a.shared_faces > 0 && c.report.euler_input == c.report.euler_critical_cells;
        }
        catch (const std::exception& e)
        {
            note << "n=" << n << ": " << e.what() << "; ";
            ok = false;
        }
        const double t = seconds_since(start);
        worst = std::max(worst, t);
        ok = ok && t < 30.0;
    }
    note << "n=2..5, slowest " << worst << " s";
    return ok;
}

bool ac4(std::ostringstream& note)
{
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
    {
        const auto pm = build_global_matching(n);
        const auto critical = collapse_to_critical(pm.complex, pm.matching).critical;
        const auto ring = build_ring_complex(n).complex;
        ok = ok && complexes_identical(critical, ring) && ring.f_vector() == ring_f_vector(n);
    }
    note << "n=2..5";
    return ok;
}

bool ac5(std::ostringstream& note)
{
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
    {
        const auto ring = build_ring_complex(n).complex;
        ok = ok && surface_check(ring).is_sphere && homology(ring).matches_betti({1, 0, 1}) &&
             homology(neighborhood_complex(SchrijverGraph(n, 2))).matches_betti({1, 0, 1});
    }
    note << "n=2..5";
    return ok;
}

bool ac6(std::ostringstream& note)
{
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
    {
        const auto rc = build_ring_complex(n);
        const auto r = steinitz_check(rc.complex, rc.rotation);
        ok = ok && r.planar_rotation && r.min_connectivity >= 3 && r.passed();
    }
    double margin = 1.0;
    for (int n = 2; n <= 4; ++n)
    {
        const auto rc = build_ring_complex(n);
        try
        {
            margin = std::min(margin, realize_polytope(rc.complex, default_outer_face(rc.layout)).margin);
        }
        catch (const std::exception& e)
        {
            note << e.what() << "; ";
            ok = false;
        }
    }
    note << "Steinitz n=2..5, min convexity margin n=2..4 " << margin;
    return ok && margin > 1e-9;
}

bool ac7(std::ostringstream& note)
{
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
    {
        try
        {
            const auto m = build_M(n);
            const auto rs = rotation_from_surface(m.pipeline);
            const auto surface = surface_check(m.pipeline);
            ok = ok && verify_automorphisms(SchrijverGraph(n, 2)).passed(2 * n + 2) &&
                 complexes_identical(m.pipeline, m.direct) && check_invariance(m.pipeline, n).invariant() &&
                 surface.is_sphere && surface.euler == 2 && rs && steinitz_check(m.pipeline, *rs).passed();
        }
        catch (const std::exception& e)
        {
            note << "n=" << n << ": " << e.what() << "; ";
            ok = false;
        }
    }
    note << "n=2..5";
    return ok;
}

bool ac8(std::ostringstream& note)
{
    bool ok = true;
    for (int n = 3; n <= 5; ++n)
    {
        const auto rc = build_ring_complex(n);
        const auto w = check_element(rc.complex, DihedralElement{2 * n + 2, 2, false});
        ok = ok && !w.invariant && w.violating_facet.has_value();
        if (w.violating_facet)
        {
            note << "n=" << n << " {";
            for (std::size_t i = 0; i < w.violating_facet->size(); ++i)
                note << (i ? " " : "") << to_string((*w.violating_facet)[i]);
            note << "} -> {";
            for (std::size_t i = 0; i < w.image->size(); ++i)
                note << (i ? " " : "") << to_string((*w.image)[i]);
            note << "}; ";
        }
    }
    return ok;
}

bool ac9(std::ostringstream& note)
{
    // cyclic matching on the boundary of a triangle
    const Complex tri = Complex::from_facets({{point(1), point(2)}, {point(2), point(3)}, {point(1), point(3)}});
    const FacePoset p = face_poset(tri);
    auto id = [&](std::initializer_list<int> vs) {
        LabeledSimplex s;
        for (int v : vs)
            s.push_back(point(v));
        return *tri.find(s);
    };
    AcyclicMatching m(tri.face_count());
    m.add(p, id({1}), id({1, 2}));
    m.add(p, id({2}), id({2, 3}));
    m.add(p, id({3}), id({1, 3}));
    const bool cyclic_rejected = !verify_acyclicity(m, p).acyclic;

    Adjacency c5(5);
    std::vector<Eigen::Vector2d> pos;
    for (int i = 0; i < 5; ++i)
    {
        c5[static_cast<std::size_t>(i)] = {(i + 4) % 5, (i + 1) % 5};
        std::sort(c5[static_cast<std::size_t>(i)].begin(), c5[static_cast<std::size_t>(i)].end());
        pos.emplace_back(std::cos(2 * M_PI * i / 5), std::sin(2 * M_PI * i / 5));
    }
    const auto c5_report = steinitz_check(c5, rotation_from_plane(c5, pos));
    const bool c5_rejected = !c5_report.three_connected && !c5_report.passed();

    const bool n22_rejected = !surface_check(neighborhood_complex(SchrijverGraph(2, 2))).is_sphere;
    note << "cyclic matching " << (cyclic_rejected ? "rejected" : "accepted") << ", C5 connectivity "
         << c5_report.min_connectivity << ", N(SG(2,2)) " << (n22_rejected ? "not a surface" : "a sphere");
    return cyclic_rejected && c5_rejected && n22_rejected;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", "vertex counts", ac1},
        {"AC2", "degree facts", ac2},
        {"AC3", "Morse certification", ac3},
        {"AC4", "sphere identity", ac4},
        {"AC5", "topology", ac5},
        {"AC6", "Steinitz and convex realization", ac6},
        {"AC7", "equivariance of M", ac7},
        {"AC8", "non-invariance witness", ac8},
        {"AC9", "negative controls", ac9},
    };
    int failed = 0;
    for (const auto& c : criteria)
    {
        std::ostringstream note;
        bool ok = false;
        try
        {
            ok = c.check(note);
        }
        catch (const std::exception& e)
        {
            note << "exception: " << e.what();
        }
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << c.id << ' ' << c.title << " [" << note.str() << "]" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}

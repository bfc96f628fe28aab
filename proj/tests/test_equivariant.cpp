#include <catch_amalgamated.hpp>

#include "sgsphere/equivariant.hpp"
#include "sgsphere/planarity.hpp"
#include "sgsphere/ring_sphere.hpp"
#include "sgsphere/surface.hpp"

using namespace sgsphere;

TEST_CASE("group action on labels")
{
    const DihedralElement r1{6, 1, false};
    CHECK(apply_group(r1, StableSet{1, 3}) == StableSet{2, 4});
    const DihedralElement s{6, 0, true};
    CHECK(apply_group(s, StableSet{1, 4}) == StableSet{3, 6});
    const DihedralElement e{6, 0, false};
    for (const VertexLabel& l : std::vector<VertexLabel>{StableSet{1, 4}, make_midpoint(StableSet{1, 3}, StableSet{1, 5}),
                                                         Barycenter{Parity::Even}, make_flag({StableSet{1, 3}, StableSet{3, 5}})})
        CHECK(apply_group(e, l) == l);
    CHECK(apply_group(r1, VertexLabel{Barycenter{Parity::Odd}}) == VertexLabel{Barycenter{Parity::Even}});
    CHECK(apply_group(DihedralElement{6, 2, false}, VertexLabel{Barycenter{Parity::Odd}}) ==
          VertexLabel{Barycenter{Parity::Odd}});
    CHECK(apply_group(r1, VertexLabel{make_midpoint(StableSet{1, 3}, StableSet{1, 5})}) ==
          VertexLabel{make_midpoint(StableSet{2, 4}, StableSet{2, 6})});
}

TEST_CASE("dihedral relations on the permutation representation")
{
    for (int n = 1; n <= 5; ++n)
    {
        const int m = 2 * n + 2;
        const DihedralElement e{m, 0, false}, r{m, 1, false}, s{m, 0, true};
        DihedralElement power = e;
        for (int i = 0; i < m; ++i)
        {
            if (i > 0)
                CHECK(power != e);
            power = compose(r, power);
        }
        CHECK(power == e);
        CHECK(compose(s, s) == e);
        CHECK(compose(compose(s, r), s) == DihedralElement{m, m - 1, false});
        CHECK(dihedral_group(m).size() == static_cast<std::size_t>(2 * m));
    }
}

TEST_CASE("reflection fixes no odd/even assignment when its offset is odd")
{
    // i -> 7 - i on [6] sends 1 to 6
    CHECK(DihedralElement{6, 0, true}.reverses_parity());
    CHECK_FALSE(DihedralElement{6, 1, true}.reverses_parity());
}

TEST_CASE("dihedral elements are graph automorphisms")
{
    for (int n = 1; n <= 5; ++n)
    {
        const auto r = verify_automorphisms(SchrijverGraph(n, 2));
        CHECK(r.passed(2 * n + 2));
    }
    const auto r2 = verify_automorphisms(SchrijverGraph(2, 2));
    CHECK(r2.elements == 12);
    CHECK(r2.distinct_permutations == 12);
    CHECK(verify_automorphisms(SchrijverGraph(3, 2)).elements == 16);
}

TEST_CASE("the action preserves tightness and sends outer neighbors to outer neighbors")
{
    for (int n = 2; n <= 5; ++n)
    {
        const SchrijverGraph g(n, 2);
        for (const auto& e : dihedral_group(2 * n + 2))
            for (const auto& alpha : g.vertices())
            {
                const StableSet image = apply_group(e, alpha);
                CHECK(classify(image, n, 2) == classify(alpha, n, 2));
                auto mapped = neighbor_profile(g, alpha).outer;
                for (auto& b : mapped)
                    b = apply_group(e, b);
                std::sort(mapped.begin(), mapped.end());
                CHECK(mapped == neighbor_profile(g, image).outer);
            }
    }
}

TEST_CASE("M for n = 2 and 3")
{
    const auto m2 = build_M(2);
    CHECK(m2.pipeline.f_vector() == std::vector<std::size_t>{17, 45, 30});
    CHECK(euler_characteristic(m2.pipeline) == 2);
    CHECK(m2.psi_report.acyclicity.acyclic);
    CHECK(m2.psi_unmatched_nonzero == 0);
    CHECK(build_M(3).pipeline.f_vector() == std::vector<std::size_t>{26, 72, 48});
    CHECK_THROWS(build_M(1));
}

TEST_CASE("M: pipeline equals direct, sphere, Steinitz, invariant; n = 2..5")
{
    for (int n = 2; n <= 5; ++n)
    {
        const auto m = build_M(n);
        CHECK(complexes_identical(m.pipeline, m.direct));
        const auto u = static_cast<std::size_t>(n);
        CHECK(m.pipeline.f_vector()[2] == 2 * u * u + 8 * u + 6);
        CHECK(m.pipeline.vertex_count() == (u + 1) * (u + 1) + 2 * (u + 1) + 2);
        CHECK(surface_check(m.pipeline).is_sphere);
        const auto rs = rotation_from_surface(m.pipeline);
        REQUIRE(rs.has_value());
        CHECK(steinitz_check(m.pipeline, *rs).passed());
        CHECK(check_invariance(m.pipeline, n).invariant());
        // the intermediate still holds both n-simplices
        CHECK(m.collapsed.dimension() == n);
    }
}

TEST_CASE("M for n = 6 is still a sphere")
{
    const auto m = build_M(6);
    CHECK(surface_check(m.pipeline).is_sphere);
    CHECK(check_invariance(m.pipeline, 6).invariant());
}

TEST_CASE("the ring sphere is not dihedral-invariant for n >= 3")
{
    for (int n = 3; n <= 5; ++n)
    {
        const auto rc = build_ring_complex(n);
        const auto w = check_element(rc.complex, DihedralElement{2 * n + 2, 2, false});
        CHECK_FALSE(w.invariant);
        REQUIRE(w.violating_facet.has_value());
        CHECK_FALSE(rc.complex.contains(*w.image));
        CHECK_FALSE(check_invariance(rc.complex, n).invariant());
    }
    // the anchor {1,3,5} meets a cap diagonal, its image {3,5,7} does not
    const auto rc = build_ring_complex(3);
    const auto adj = one_skeleton(rc.complex);
    const auto deg = [&](const StableSet& s) { return adj[static_cast<std::size_t>(*rc.complex.vertex_index(s))].size(); };
    CHECK(deg(StableSet{1, 3, 5}) != deg(StableSet{3, 5, 7}));
}

TEST_CASE("n = 2 ring sphere: invariant under all 12 elements")
{
    CHECK(check_invariance(build_ring_complex(2).complex, 2).invariant());
}

TEST_CASE("the identity leaves any complex invariant")
{
    const auto k = build_ring_complex(4).complex;
    CHECK(check_element(k, DihedralElement{10, 0, false}).invariant);
}

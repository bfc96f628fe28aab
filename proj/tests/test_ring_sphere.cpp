#include <catch_amalgamated.hpp>

#include "sgsphere/morse.hpp"
#include "sgsphere/phi.hpp"
#include "sgsphere/ring_sphere.hpp"
#include "sgsphere/surface.hpp"

using namespace sgsphere;

TEST_CASE("rings for n = 2")
{
    const auto layout = ring_partition(2);
    REQUIRE(layout.rings.size() == 3);
    CHECK(layout.rings[0] == std::vector<StableSet>{{1, 3}, {1, 5}, {3, 5}});
    CHECK(layout.rings[1] == std::vector<StableSet>{{1, 4}, {2, 5}, {3, 6}});
    CHECK(layout.rings[2] == std::vector<StableSet>{{2, 4}, {2, 6}, {4, 6}});
}

TEST_CASE("rings for n = 3 start at the anchor formula")
{
    const auto layout = ring_partition(3);
    CHECK(layout.rings[0].size() == 4);
    CHECK(layout.rings[0].front() == StableSet{1, 3, 5});
    CHECK(layout.rings[3].front() == StableSet{2, 4, 6});
    CHECK(layout.rings[1].front() == StableSet{1, 3, 6});
}

TEST_CASE("rings: size n+1, ⊖2 successor, P_0 and P_n are the tight sets")
{
    for (int n = 2; n <= 7; ++n)
    {
        const auto layout = ring_partition(n);
        const int m = 2 * n + 2;
        for (std::size_t i = 0; i < layout.rings.size(); ++i)
        {
            const auto& ring = layout.rings[i];
            CHECK(ring.size() == static_cast<std::size_t>(n + 1));
            for (std::size_t j = 0; j < ring.size(); ++j)
            {
                CHECK(count_even(ring[j]) == i);
                CHECK(rotate(ring[j], -2, m) == ring[(j + 1) % ring.size()]);
                const bool tight = classify(ring[j], n, 2) == Tightness::Tight;
                CHECK(tight == (i == 0 || i == static_cast<std::size_t>(n)));
            }
        }
    }
}

TEST_CASE("n = 1 has no ring construction")
{
    CHECK_THROWS(ring_partition(1));
    CHECK_THROWS(build_ring_complex(1));
}

TEST_CASE("common neighbors: unique, given by the formula, and commuting with ⊖2")
{
    for (int n = 2; n <= 7; ++n)
    {
        const auto layout = ring_partition(n);
        const int m = 2 * n + 2;
        for (int i = 0; i < n; ++i)
        {
            const auto& ring = layout.rings[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < ring.size(); ++j)
            {
                const StableSet pi = common_ring_neighbor(layout, ring[j], i + 1);
                // brute force over every stable set of the upper ring
                std::size_t hits = 0;
                for (const auto& cand : layout.rings[static_cast<std::size_t>(i + 1)])
                    hits += intersection_size(cand, ring[j]) == static_cast<std::size_t>(n - 1) &&
                            intersection_size(cand, rotate(ring[j], -2, m)) == static_cast<std::size_t>(n - 1);
                CHECK(hits == 1);
                if (i > 0)
                    CHECK(common_neighbor_formula(ring[j], n, true) == pi);
                const StableSet next = common_ring_neighbor(layout, rotate(ring[j], -2, m), i + 1);
                CHECK(next == rotate(pi, -2, m));
            }
        }
        for (int i = 1; i <= n; ++i)
            for (const auto& beta : layout.rings[static_cast<std::size_t>(i)])
            {
                const StableSet down = common_ring_neighbor(layout, beta, i - 1);
                if (i < n)
                    CHECK(common_neighbor_formula(beta, n, false) == down);
            }
    }
}

TEST_CASE("ring complex f-vectors match the closed forms")
{
    CHECK(build_ring_complex(2).complex.f_vector() == std::vector<std::size_t>{9, 21, 14});
    CHECK(build_ring_complex(3).complex.f_vector() == std::vector<std::size_t>{16, 42, 28});
    for (int n = 2; n <= 7; ++n)
    {
        const auto f = build_ring_complex(n).complex.f_vector();
        const auto u = static_cast<std::size_t>(n);
        CHECK(f == std::vector<std::size_t>{(u + 1) * (u + 1), 3 * (u * u + 2 * u - 1), 2 * u * u + 4 * u - 2});
    }
}

TEST_CASE("ring complex is a sphere whose cap diagonals leave the anchors")
{
    for (int n = 2; n <= 6; ++n)
    {
        const auto rc = build_ring_complex(n);
        CHECK(surface_check(rc.complex).is_sphere);
        CHECK(rc.layout.cap_diagonals.size() == static_cast<std::size_t>(2 * (n - 2)));
        for (const auto& [a, b] : rc.layout.cap_diagonals)
            CHECK((a == rc.layout.anchors.front() || a == rc.layout.anchors.back()));
        CHECK(rc.layout.anchors.front() == rc.layout.rings.front().front());
    }
}

TEST_CASE("the ring complex is the Morse-critical complex")
{
    for (int n = 2; n <= 5; ++n)
    {
        const auto pm = build_global_matching(n);
        const auto critical = collapse_to_critical(pm.complex, pm.matching).critical;
        CHECK(complexes_identical(build_ring_complex(n).complex, critical));
    }
}

TEST_CASE("complexes_identical compares labels, not shapes")
{
    const Complex k = build_ring_complex(2).complex;
    CHECK(complexes_identical(k, k));
    const Complex tetra = neighborhood_complex(SchrijverGraph(1, 2));
    CHECK_FALSE(complexes_identical(k, tetra));
    CHECK_FALSE(complexes_identical(build_ring_complex(2).complex, build_ring_complex(3).complex));
}

TEST_CASE("the drawing puts vertices on the unit sphere")
{
    const auto rc = build_ring_complex(4);
    for (const auto& p : rc.positions)
        CHECK(p.norm() == Catch::Approx(1.0).epsilon(1e-12));
}

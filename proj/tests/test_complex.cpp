#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sgsphere/complex.hpp"
#include "sgsphere/surface.hpp"

using namespace sgsphere;

namespace {

Complex simplex_boundary(int d)
{
    std::vector<LabeledSimplex> facets;
    for (int skip = 1; skip <= d + 1; ++skip)
    {
        LabeledSimplex f;
        for (int v = 1; v <= d + 1; ++v)
            if (v != skip)
                f.push_back(point(v));
        facets.push_back(f);
    }
    return Complex::from_facets(facets);
}

} // namespace

TEST_CASE("faces of N(SG(n,2)) match a subset scan")
{
    for (int n = 1; n <= 3; ++n)
    {
        const Complex k = neighborhood_complex(SchrijverGraph(n, 2));
        const auto counts = oracle::neighborhood_face_counts(n);
        const auto f = k.f_vector();
        REQUIRE(f.size() == counts.size());
        for (const auto& [d, c] : counts)
            CHECK(f[static_cast<std::size_t>(d)] == c);
    }
}

TEST_CASE("N(SG(1,2)) is the boundary of the tetrahedron")
{
    const Complex k = neighborhood_complex(SchrijverGraph(1, 2));
    CHECK(k.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(k.labeled_facets() == simplex_boundary(3).labeled_facets());
}

TEST_CASE("from_facets absorbs non-maximal inputs")
{
    const Complex k = Complex::from_facets({{point(1), point(2), point(3)}, {point(1), point(2)}, {point(4)}});
    CHECK(k.f_vector() == std::vector<std::size_t>{4, 3, 1});
    CHECK(k.facets().size() == 2);
    CHECK_FALSE(k.is_pure());
    CHECK(k.dimension() == 2);
}

TEST_CASE("from_faces requires downward closure")
{
    CHECK_THROWS(Complex::from_faces({{point(1), point(2)}}));
    CHECK_NOTHROW(Complex::from_faces({{point(1)}, {point(2)}, {point(1), point(2)}}));
}

TEST_CASE("face poset covers are codimension one")
{
    const Complex k = simplex_boundary(3);
    const FacePoset p = face_poset(k);
    CHECK(p.size() == 14);
    // 6 edges x 2 + 4 triangles x 3
    CHECK(p.cover_count == 24);
    for (std::size_t f = 0; f < p.size(); ++f)
        for (int lower : p.boundary[f])
            CHECK(k.face(lower).size() + 1 == k.faces()[f].size());
}

TEST_CASE("Euler characteristic of spheres alternates")
{
    for (int d = 1; d <= 5; ++d)
        CHECK(euler_characteristic(simplex_boundary(d)) == (d % 2 == 0 ? 0 : 2));
}

TEST_CASE("barycentric subdivision of a d-simplex")
{
    for (int d = 0; d <= 4; ++d)
    {
        std::vector<StableSet> sigma;
        for (int v = 1; v <= d + 1; ++v)
            sigma.push_back(StableSet{v});
        const Complex sd = barycentric_subdivision(sigma);
        long factorial = 1;
        for (int i = 2; i <= d + 1; ++i)
            factorial *= i;
        CHECK(sd.facets().size() == static_cast<std::size_t>(factorial));
        CHECK(sd.vertex_count() == static_cast<std::size_t>((1 << (d + 1)) - 1));
        CHECK(euler_characteristic(sd) == 1);
    }
    const Complex tri = barycentric_subdivision({StableSet{1}, StableSet{2}, StableSet{3}});
    CHECK(tri.f_vector() == std::vector<std::size_t>{7, 12, 6});
    CHECK_THROWS(barycentric_subdivision({}));
}

TEST_CASE("surface recognition")
{
    CHECK(surface_check(simplex_boundary(3)).is_sphere);
    CHECK_FALSE(surface_check(simplex_boundary(2)).is_sphere);
    CHECK_FALSE(surface_check(simplex_boundary(4)).is_sphere);
    // two tetrahedron boundaries glued at a vertex: links fail
    std::vector<LabeledSimplex> facets;
    for (const auto& f : simplex_boundary(3).labeled_facets())
        facets.push_back(f);
    for (const auto& f : simplex_boundary(3).labeled_facets())
    {
        LabeledSimplex g;
        for (const auto& l : f)
        {
            const int v = std::get<StableSet>(l)[0];
            g.push_back(point(v == 1 ? 1 : v + 10));
        }
        facets.push_back(g);
    }
    const auto r = surface_check(Complex::from_facets(facets));
    CHECK_FALSE(r.is_sphere);
    CHECK_FALSE(r.vertex_links_are_cycles);
}

TEST_CASE("N(SG(2,2)) is not a surface")
{
    const auto r = surface_check(neighborhood_complex(SchrijverGraph(2, 2)));
    CHECK_FALSE(r.is_sphere);
    CHECK_FALSE(r.pure_2d);
}

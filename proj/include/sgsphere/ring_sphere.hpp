/**
 * The concentric-ring triangulation of the sphere on the stable n-sets of
 * [2n + 2].
 *
 * Ring P_i holds the stable sets with exactly i even elements.  Each ring is
 * a cycle under α ↦ α ⊖ 2, which is also its lexicographic order.  The caps
 * P_0 and P_n are fanned from their lex-first vertex, and each annulus between
 * P_i and P_{i+1} is triangulated by joining sets that share n - 1 elements.
 */
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "complex.hpp"
#include "morse.hpp"
#include "planarity.hpp"

namespace sgsphere {

struct RingLayout
{
    int n = 0;
    /// rings[i] = P_i in lexicographic order; rings[i][j + 1] = rings[i][j] ⊖ 2.
    std::vector<std::vector<StableSet>> rings;
    std::vector<StableSet> anchors;
    std::vector<std::pair<StableSet, StableSet>> cap_diagonals;
    std::vector<std::pair<StableSet, StableSet>> inter_ring_edges;
};

inline std::string ring_error(const std::string& what) { return "ring construction: " + what; }

/// Splits the stable n-sets of [2n + 2] into rings and checks the ⊖2 cycle structure.
inline RingLayout ring_partition(int n)
{
    if (n < 2)
        throw std::invalid_argument("ring_partition: n must be >= 2");
    const int m = 2 * n + 2;
    RingLayout layout;
    layout.n = n;
    layout.rings.resize(static_cast<std::size_t>(n + 1));
    for (const auto& s : enumerate_stable_sets(n, 2))
        layout.rings[count_even(s)].push_back(s);

    for (int i = 0; i <= n; ++i)
    {
        auto& ring = layout.rings[static_cast<std::size_t>(i)];
        if (ring.size() != static_cast<std::size_t>(n + 1))
            throw VerificationError(ring_error("P_" + std::to_string(i) + " has " + std::to_string(ring.size()) +
                                               " elements"));
        // enumerate_stable_sets is lex ordered, so each ring already is
        for (std::size_t j = 0; j < ring.size(); ++j)
            if (rotate(ring[j], -2, m) != ring[(j + 1) % ring.size()])
                throw VerificationError(ring_error("lex order of P_" + std::to_string(i) +
                                                   " is not the ⊖2 cycle at " + ring[j].to_string()));
        // α⁰ = {1, 3, ..., 2(n-i)-1, 2(n-i)+2, ..., 2n}
        std::vector<int> first;
        for (int t = 1; t <= n - i; ++t)
            first.push_back(2 * t - 1);
        for (int e = 2 * (n - i) + 2; e <= 2 * n; e += 2)
            first.push_back(e);
        if (StableSet(first) != ring.front())
            throw VerificationError(ring_error("lex-first element of P_" + std::to_string(i) + " is " +
                                               ring.front().to_string()));
        layout.anchors.push_back(ring.front());
    }
    return layout;
}

/**
 * The unique π ∈ P_target with |α ∩ π| = |(α ⊖ 2) ∩ π| = n - 1, for α in an
 * adjacent ring.  Throws unless exactly one candidate exists.
 */
inline StableSet common_ring_neighbor(const RingLayout& layout, const StableSet& alpha, int target)
{
    const int n = layout.n;
    const StableSet next = rotate(alpha, -2, 2 * n + 2);
    std::vector<StableSet> hits;
    for (const auto& pi : layout.rings.at(static_cast<std::size_t>(target)))
        if (intersection_size(alpha, pi) == static_cast<std::size_t>(n - 1) &&
            intersection_size(next, pi) == static_cast<std::size_t>(n - 1))
            hits.push_back(pi);
    if (hits.size() != 1)
        throw VerificationError(ring_error(std::to_string(hits.size()) + " common neighbors of " +
                                           alpha.to_string() + " and " + next.to_string() + " in P_" +
                                           std::to_string(target)));
    return hits.front();
}

/// Closed-form common neighbor of α, α ⊖ 2 (loose α) in the ring above (`upward`) or below.
inline StableSet common_neighbor_formula(const StableSet& alpha, int n, bool upward)
{
    const StableSet next = rotate(alpha, -2, 2 * n + 2);
    if (upward)
        return set_union(set_intersection(odd_part(alpha), odd_part(next)), set_union(even_part(alpha), even_part(next)));
    return set_union(set_intersection(even_part(alpha), even_part(next)), set_union(odd_part(alpha), odd_part(next)));
}

struct RingComplex
{
    RingLayout layout;
    Complex complex;
    /// Drawing on the unit sphere, by complex vertex index.
    std::vector<Eigen::Vector3d> positions;
    RotationSystem rotation;
};

/**
 * Builds the ring triangulation and the rotation system of its drawing.
 *
 * The drawing puts P_i on a circle of latitude with P_0 near the south pole
 * and P_n near the north pole.  Ring entry j of P_i sits at longitude
 * 2πj/(n+1) + iπ/(n+1), i.e. midway between the two vertices of P_{i-1} it
 * is joined to.  Edges are great-circle arcs.
 */
inline RingComplex build_ring_complex(int n)
{
    RingComplex rc;
    rc.layout = ring_partition(n);
    auto& layout = rc.layout;
    const auto& rings = layout.rings;
    const std::size_t len = static_cast<std::size_t>(n + 1);
    const int m = 2 * n + 2;

    std::vector<LabeledSimplex> facets;
    for (std::size_t cap : {std::size_t{0}, static_cast<std::size_t>(n)})
    {
        const auto& ring = rings[cap];
        for (std::size_t r = 1; r + 1 < len; ++r)
            facets.push_back({ring[0], ring[r], ring[r + 1]});
        for (std::size_t r = 2; r + 1 < len; ++r)
            layout.cap_diagonals.emplace_back(ring[0], ring[r]);
    }

    for (int i = 0; i < n; ++i)
    {
        const auto& lower = rings[static_cast<std::size_t>(i)];
        const auto& upper = rings[static_cast<std::size_t>(i + 1)];
        for (std::size_t j = 0; j < len; ++j)
        {
            const StableSet up = common_ring_neighbor(layout, lower[j], i + 1);
            const StableSet down = common_ring_neighbor(layout, upper[j], i);

            // cyclic labeling: upper[j] sits between lower[j] and lower[j+1]
            if (up != upper[j])
                throw VerificationError(ring_error("common upper neighbor of " + lower[j].to_string() + " is " +
                                                   up.to_string() + ", expected " + upper[j].to_string()));
            if (down != lower[(j + 1) % len])
                throw VerificationError(ring_error("common lower neighbor of " + upper[j].to_string() + " is " +
                                                   down.to_string()));
            if (i > 0 && common_neighbor_formula(lower[j], n, true) != up)
                throw VerificationError(ring_error("upward formula fails at " + lower[j].to_string()));
            if (i + 1 < n && common_neighbor_formula(upper[j], n, false) != down)
                throw VerificationError(ring_error("downward formula fails at " + upper[j].to_string()));
            if (i == 0)
            {
                // tight case: π = (α ∩ (α ⊖ 2)) ∪ {p}
                const StableSet shared = set_intersection(lower[j], rotate(lower[j], -2, m));
                if (set_intersection(shared, up) != shared)
                    throw VerificationError(ring_error("tight upward neighbor does not extend α ∩ (α ⊖ 2)"));
            }

            facets.push_back({lower[j], lower[(j + 1) % len], up});
            facets.push_back({upper[j], upper[(j + 1) % len], down});
            layout.inter_ring_edges.emplace_back(lower[j], up);
            layout.inter_ring_edges.emplace_back(lower[(j + 1) % len], up);
        }
    }
    rc.complex = Complex::from_facets(facets);

    rc.positions.resize(rc.complex.vertex_count());
    const double pi = std::numbers::pi;
    for (int i = 0; i <= n; ++i)
    {
        const double polar = pi * (i + 1) / (n + 2);
        for (std::size_t j = 0; j < len; ++j)
        {
            const double lon = 2.0 * pi * static_cast<double>(j) / (n + 1) + i * pi / (n + 1);
            const int v = *rc.complex.vertex_index(rings[static_cast<std::size_t>(i)][j]);
            rc.positions[static_cast<std::size_t>(v)] =
                Eigen::Vector3d(std::sin(polar) * std::cos(lon), std::sin(polar) * std::sin(lon), -std::cos(polar));
        }
    }
    rc.rotation = rotation_from_sphere(one_skeleton(rc.complex), rc.positions);
    return rc;
}

/// Identical facet sets under the identity labeling (not up to isomorphism).
inline bool complexes_identical(const Complex& a, const Complex& b)
{
    return a.vertices() == b.vertices() && a.labeled_facets() == b.labeled_facets();
}

} // namespace sgsphere

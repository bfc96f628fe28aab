/**
 * Convex realization of a triangulated 2-sphere.
 *
 * A Tutte embedding with unit interior stresses gives a planar equilibrium
 * drawing.  The stresses on the three outer edges are solved for so that the
 * boundary vertices are in equilibrium too, and the Maxwell–Cremona lift of
 * the stressed drawing is a convex polyhedral surface.
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "complex.hpp"
#include "morse.hpp"
#include "planarity.hpp"

namespace sgsphere {

struct PolytopeRealization
{
    std::vector<VertexLabel> labels;
    /// Coordinates by complex vertex index.
    std::vector<Eigen::Vector3d> coords;
    /// Triangles as vertex indices, oriented with outward normals.
    std::vector<std::array<int, 3>> facets;
    /// Unit outward normal and offset: normal · x <= offset on the polytope.
    std::vector<std::pair<Eigen::Vector3d, double>> planes;
    std::array<int, 3> outer{};
    std::vector<Eigen::Vector2d> tutte;
    /// Min over facets of the distance of the farthest-in non-incident vertex, over the diameter.
    double margin = 0.0;
    double lift_residual = 0.0;
    double equilibrium_residual = 0.0;
};

namespace detail {

inline double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

inline Eigen::Vector2d perp(const Eigen::Vector2d& d) { return {-d.y(), d.x()}; }

} // namespace detail

/**
 * Realizes a triangulated sphere as a convex polytope.  `outer` selects the
 * triangle pinned to the plane z = 0; the first triangle is used otherwise.
 * Throws VerificationError when the lift fails to be strictly convex at
 * relative tolerance `tolerance`.
 */
inline PolytopeRealization realize_polytope(const Complex& k, const std::optional<LabeledSimplex>& outer = {},
                                            double tolerance = 1e-9)
{
    if (k.dimension() != 2 || !k.is_pure())
        throw std::invalid_argument("realize_polytope: not a pure 2-dimensional complex");
    const std::size_t nv = k.vertex_count();
    auto [tlo, thi] = k.dimension_range(2);
    std::vector<std::array<int, 3>> tris;
    for (int t = tlo; t < thi; ++t)
        tris.push_back({k.face(t)[0], k.face(t)[1], k.face(t)[2]});

    std::size_t outer_id = 0;
    if (outer)
    {
        auto id = k.find(*outer);
        if (!id || k.face(*id).dimension() != 2)
            throw std::invalid_argument("realize_polytope: outer face is not a triangle of the complex");
        outer_id = static_cast<std::size_t>(*id - tlo);
    }
    const auto boundary = tris[outer_id];

    PolytopeRealization r;
    r.labels = k.vertices();
    r.outer = boundary;

    // Tutte embedding
    const Adjacency adj = one_skeleton(k);
    std::vector<int> slot(nv, -1);
    std::vector<int> interior;
    for (std::size_t v = 0; v < nv; ++v)
        if (std::find(boundary.begin(), boundary.end(), static_cast<int>(v)) == boundary.end())
        {
            slot[v] = static_cast<int>(interior.size());
            interior.push_back(static_cast<int>(v));
        }
    std::vector<Eigen::Vector2d> p(nv, Eigen::Vector2d::Zero());
    for (std::size_t b = 0; b < 3; ++b)
    {
        const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(b) / 3;
        p[static_cast<std::size_t>(boundary[b])] = {std::cos(angle), std::sin(angle)};
    }
    const Eigen::Index ni = static_cast<Eigen::Index>(interior.size());
    if (ni > 0)
    {
        Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(ni, ni);
        Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(ni, 2);
        for (Eigen::Index i = 0; i < ni; ++i)
        {
            const int v = interior[static_cast<std::size_t>(i)];
            for (int w : adj[static_cast<std::size_t>(v)])
            {
                lap(i, i) += 1.0;
                if (slot[static_cast<std::size_t>(w)] >= 0)
                    lap(i, slot[static_cast<std::size_t>(w)]) -= 1.0;
                else
                    rhs.row(i) += p[static_cast<std::size_t>(w)].transpose();
            }
        }
        const Eigen::MatrixXd sol = lap.partialPivLu().solve(rhs);
        for (Eigen::Index i = 0; i < ni; ++i)
            p[static_cast<std::size_t>(interior[static_cast<std::size_t>(i)])] = sol.row(i).transpose();
    }
    r.tutte = p;

    // stresses: 1 inside, outer three solved from equilibrium at the boundary
    auto key = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    std::map<std::pair<int, int>, double> stress;
    for (std::size_t v = 0; v < nv; ++v)
        for (int w : adj[v])
            stress[key(static_cast<int>(v), w)] = 1.0;
    const std::array<std::pair<int, int>, 3> outer_edges = {key(boundary[0], boundary[1]), key(boundary[1], boundary[2]),
                                                            key(boundary[2], boundary[0])};
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(6, 3);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(6);
    for (std::size_t b = 0; b < 3; ++b)
    {
        const int v = boundary[b];
        for (int w : adj[static_cast<std::size_t>(v)])
        {
            const Eigen::Vector2d d = p[static_cast<std::size_t>(w)] - p[static_cast<std::size_t>(v)];
            auto it = std::find(outer_edges.begin(), outer_edges.end(), key(v, w));
            if (it != outer_edges.end())
                a.block<2, 1>(static_cast<Eigen::Index>(2 * b), it - outer_edges.begin()) += d;
            else
                rhs.segment<2>(static_cast<Eigen::Index>(2 * b)) -= d;
        }
    }
    const Eigen::Vector3d outer_stress = a.colPivHouseholderQr().solve(rhs);
    for (std::size_t e = 0; e < 3; ++e)
        stress[outer_edges[e]] = outer_stress[static_cast<Eigen::Index>(e)];
    for (std::size_t v = 0; v < nv; ++v)
    {
        Eigen::Vector2d force = Eigen::Vector2d::Zero();
        for (int w : adj[v])
            force += stress[key(static_cast<int>(v), w)] * (p[static_cast<std::size_t>(w)] - p[v]);
        r.equilibrium_residual = std::max(r.equilibrium_residual, force.norm());
    }

    // Maxwell–Cremona lift: each triangle carries the affine height z = g·x + c
    std::map<std::pair<int, int>, std::vector<std::size_t>> edge_faces;
    for (std::size_t f = 0; f < tris.size(); ++f)
        for (std::size_t i = 0; i < 3; ++i)
            edge_faces[key(tris[f][i], tris[f][(i + 1) % 3])].push_back(f);
    for (const auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            throw std::invalid_argument("realize_polytope: complex is not a closed surface");

    auto third = [&](std::size_t f, std::pair<int, int> e) {
        for (int v : tris[f])
            if (v != e.first && v != e.second)
                return v;
        throw std::logic_error("realize_polytope: degenerate triangle");
    };
    // +1 if face f lies left of the directed edge i -> j in the drawing
    std::function<double(std::size_t, int, int)> side = [&](std::size_t f, int i, int j) -> double {
        if (f == outer_id)
        {
            auto fs = edge_faces[key(i, j)];
            return -side(fs[0] == f ? fs[1] : fs[0], i, j);
        }
        const int w = third(f, key(i, j));
        const auto& pi = p[static_cast<std::size_t>(i)];
        return detail::cross2(p[static_cast<std::size_t>(j)] - pi, p[static_cast<std::size_t>(w)] - pi) > 0 ? 1.0
                                                                                                              : -1.0;
    };

    std::vector<std::optional<Eigen::Vector2d>> grad(tris.size());
    std::vector<double> offset(tris.size(), 0.0);
    grad[outer_id] = Eigen::Vector2d::Zero();
    std::queue<std::size_t> queue;
    queue.push(outer_id);
    while (!queue.empty())
    {
        const std::size_t f = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < 3; ++i)
        {
            const int u = tris[f][i];
            const int v = tris[f][(i + 1) % 3];
            const auto& fs = edge_faces[key(u, v)];
            const std::size_t g = fs[0] == f ? fs[1] : fs[0];
            if (grad[g])
                continue;
            const Eigen::Vector2d d = p[static_cast<std::size_t>(v)] - p[static_cast<std::size_t>(u)];
            grad[g] = *grad[f] + side(g, u, v) * stress[key(u, v)] * detail::perp(d);
            // continuity along the shared edge fixes the constant term
            offset[g] = grad[f]->dot(p[static_cast<std::size_t>(u)]) + offset[f] - grad[g]->dot(p[static_cast<std::size_t>(u)]);
            queue.push(g);
        }
    }

    std::vector<std::optional<double>> height(nv);
    for (std::size_t f = 0; f < tris.size(); ++f)
    {
        if (!grad[f])
            throw VerificationError("realize_polytope: dual graph is disconnected");
        for (int v : tris[f])
        {
            const double z = grad[f]->dot(p[static_cast<std::size_t>(v)]) + offset[f];
            auto& h = height[static_cast<std::size_t>(v)];
            if (h)
                r.lift_residual = std::max(r.lift_residual, std::abs(*h - z));
            else
                h = z;
        }
    }

    double zmin = 0.0, zmax = 0.0, xy = 0.0;
    for (std::size_t v = 0; v < nv; ++v)
    {
        zmin = std::min(zmin, *height[v]);
        zmax = std::max(zmax, *height[v]);
        for (std::size_t w = 0; w < v; ++w)
            xy = std::max(xy, (p[v] - p[w]).norm());
    }
    const double scale = zmax > zmin ? xy / (zmax - zmin) : 1.0;
    r.coords.resize(nv);
    for (std::size_t v = 0; v < nv; ++v)
        r.coords[v] = {p[v].x(), p[v].y(), *height[v] * scale};

    double diameter = 0.0;
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (std::size_t v = 0; v < nv; ++v)
    {
        centroid += r.coords[v] / static_cast<double>(nv);
        for (std::size_t w = 0; w < v; ++w)
            diameter = std::max(diameter, (r.coords[v] - r.coords[w]).norm());
    }

    r.margin = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < tris.size(); ++f)
    {
        auto tri = tris[f];
        const auto& q0 = r.coords[static_cast<std::size_t>(tri[0])];
        Eigen::Vector3d normal =
            (r.coords[static_cast<std::size_t>(tri[1])] - q0).cross(r.coords[static_cast<std::size_t>(tri[2])] - q0);
        if (normal.norm() <= tolerance * diameter * diameter)
            throw VerificationError("realize_polytope: degenerate facet " + to_string(r.labels[static_cast<std::size_t>(tri[0])]));
        normal.normalize();
        if (normal.dot(centroid - q0) > 0)
        {
            normal = -normal;
            std::swap(tri[1], tri[2]);
        }
        const double off = normal.dot(q0);
        for (std::size_t v = 0; v < nv; ++v)
        {
            if (std::find(tri.begin(), tri.end(), static_cast<int>(v)) != tri.end())
                continue;
            const double depth = (off - normal.dot(r.coords[v])) / diameter;
            r.margin = std::min(r.margin, depth);
            if (depth <= tolerance)
            {
                std::string facet;
                for (int u : tri)
                    facet += (facet.empty() ? "" : " ") + to_string(r.labels[static_cast<std::size_t>(u)]);
                throw VerificationError("realize_polytope: vertex " + to_string(r.labels[v]) +
                                        " is not strictly inside facet {" + facet + "} (relative depth " +
                                        std::to_string(depth) + ")");
            }
        }
        r.facets.push_back(tri);
        r.planes.emplace_back(normal, off);
    }
    return r;
}

} // namespace sgsphere

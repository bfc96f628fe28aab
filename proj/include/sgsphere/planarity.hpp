/**
 * Rotation systems, face tracing, and the two graph conditions of Steinitz's
 * theorem: planarity and 3-connectivity.
 */
#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "complex.hpp"

namespace sgsphere {

using Adjacency = std::vector<std::vector<int>>;

/// Counterclockwise cyclic order of neighbors at every vertex.
struct RotationSystem
{
    std::vector<std::vector<int>> ccw;

    /// Neighbor preceding `u` in the cyclic order at `v`.
    int predecessor(int v, int u) const
    {
        const auto& order = ccw.at(static_cast<std::size_t>(v));
        auto it = std::find(order.begin(), order.end(), u);
        if (it == order.end())
            throw std::invalid_argument("RotationSystem: not a neighbor");
        return it == order.begin() ? order.back() : *std::prev(it);
    }
};

inline std::size_t edge_count(const Adjacency& adj)
{
    std::size_t twice = 0;
    for (const auto& row : adj)
        twice += row.size();
    return twice / 2;
}

/// Rotation read off a straight-line drawing in the plane.
inline RotationSystem rotation_from_plane(const Adjacency& adj, const std::vector<Eigen::Vector2d>& pos)
{
    RotationSystem rs;
    rs.ccw.resize(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
    {
        std::vector<std::pair<double, int>> by_angle;
        for (int w : adj[v])
        {
            Eigen::Vector2d d = pos[static_cast<std::size_t>(w)] - pos[v];
            by_angle.emplace_back(std::atan2(d.y(), d.x()), w);
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (const auto& [angle, w] : by_angle)
            rs.ccw[v].push_back(w);
    }
    return rs;
}

/**
 * Rotation read off a geodesic drawing on the unit sphere, counterclockwise
 * as seen from outside.  The initial direction of the great-circle arc from
 * p to q is the tangential component of q - p.
 */
inline RotationSystem rotation_from_sphere(const Adjacency& adj, const std::vector<Eigen::Vector3d>& pos)
{
    RotationSystem rs;
    rs.ccw.resize(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
    {
        const Eigen::Vector3d p = pos[v].normalized();
        Eigen::Vector3d helper = std::abs(p.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
        const Eigen::Vector3d e1 = helper.cross(p).normalized();
        const Eigen::Vector3d e2 = p.cross(e1);
        std::vector<std::pair<double, int>> by_angle;
        for (int w : adj[v])
        {
            Eigen::Vector3d d = pos[static_cast<std::size_t>(w)] - pos[v];
            d -= d.dot(p) * p;
            by_angle.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), w);
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (const auto& [angle, w] : by_angle)
            rs.ccw[v].push_back(w);
    }
    return rs;
}

/**
 * Coherently orient the triangles of a closed surface and read the rotation
 * at each vertex from the oriented link.  Returns nullopt when the surface is
 * not orientable or a link is not a single cycle.
 */
inline std::optional<RotationSystem> rotation_from_surface(const Complex& k)
{
    auto [tlo, thi] = k.dimension_range(2);
    if (thi == tlo)
        return std::nullopt;
    std::map<std::pair<int, int>, std::vector<int>> edge_triangles;
    for (int t = tlo; t < thi; ++t)
    {
        const auto& s = k.face(t);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                edge_triangles[{s[i], s[j]}].push_back(t);
    }

    std::map<int, std::array<int, 3>> oriented;
    for (int start = tlo; start < thi; ++start)
    {
        if (oriented.count(start))
            continue;
        const auto& s0 = k.face(start);
        oriented[start] = {s0[0], s0[1], s0[2]};
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty())
        {
            int t = queue.front();
            queue.pop();
            const auto tri = oriented[t];
            for (std::size_t i = 0; i < 3; ++i)
            {
                int a = tri[i], b = tri[(i + 1) % 3];
                for (int u : edge_triangles[{std::min(a, b), std::max(a, b)}])
                {
                    if (u == t)
                        continue;
                    const auto& su = k.face(u);
                    int c = su[0] + su[1] + su[2] - a - b;
                    std::array<int, 3> want{b, a, c};
                    auto it = oriented.find(u);
                    if (it == oriented.end())
                    {
                        oriented[u] = want;
                        queue.push(u);
                        continue;
                    }
                    // same cyclic order as `want`?
                    const auto& have = it->second;
                    bool same = false;
                    for (std::size_t r = 0; r < 3; ++r)
                        if (have[r] == want[0] && have[(r + 1) % 3] == want[1])
                            same = true;
                    if (!same)
                        return std::nullopt;
                }
            }
        }
    }

    std::vector<std::map<int, int>> successor(k.vertex_count());
    for (const auto& [t, tri] : oriented)
        for (std::size_t i = 0; i < 3; ++i)
            successor[static_cast<std::size_t>(tri[i])][tri[(i + 1) % 3]] = tri[(i + 2) % 3];

    RotationSystem rs;
    rs.ccw.resize(k.vertex_count());
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
    {
        const auto& succ = successor[v];
        if (succ.empty())
            return std::nullopt;
        int first = succ.begin()->first;
        int cur = first;
        do
        {
            rs.ccw[v].push_back(cur);
            auto it = succ.find(cur);
            if (it == succ.end() || rs.ccw[v].size() > succ.size())
                return std::nullopt;
            cur = it->second;
        } while (cur != first);
        if (rs.ccw[v].size() != succ.size())
            return std::nullopt;
    }
    return rs;
}

/// Faces of the embedding: dart u->v is followed by v->pred_v(u).
inline std::vector<std::vector<int>> trace_faces(const Adjacency& adj, const RotationSystem& rs)
{
    std::set<std::pair<int, int>> unused;
    for (std::size_t v = 0; v < adj.size(); ++v)
    {
        if (rs.ccw.at(v).size() != adj[v].size())
            throw std::invalid_argument("trace_faces: rotation does not match adjacency");
        for (int w : adj[v])
            unused.insert({static_cast<int>(v), w});
    }
    std::vector<std::vector<int>> faces;
    while (!unused.empty())
    {
        auto [u0, v0] = *unused.begin();
        std::vector<int> face;
        int u = u0, v = v0;
        do
        {
            unused.erase({u, v});
            face.push_back(u);
            int w = rs.predecessor(v, u);
            u = v;
            v = w;
        } while (!(u == u0 && v == v0));
        faces.push_back(std::move(face));
    }
    return faces;
}

inline std::size_t component_count(const Adjacency& adj)
{
    std::vector<int> comp(adj.size(), -1);
    std::size_t count = 0;
    for (std::size_t s = 0; s < adj.size(); ++s)
    {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = static_cast<int>(count);
        while (!stack.empty())
        {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(w)] < 0)
                {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(count);
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

/// Second opinion on planarity, independent of any rotation system.
inline bool boyer_myrvold_planar(const Adjacency& adj)
{
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (int w : adj[v])
            if (static_cast<std::size_t>(w) > v)
                boost::add_edge(v, static_cast<std::size_t>(w), g);
    return boost::boyer_myrvold_planarity_test(g);
}

/**
 * Maximum number of internally vertex-disjoint s-t paths (a direct edge
 * counts as one path), by unit-capacity augmenting paths on the
 * vertex-split digraph.
 */
inline int local_connectivity(const Adjacency& adj, int s, int t)
{
    const int n = static_cast<int>(adj.size());
    // node 2v = v_in, 2v + 1 = v_out
    struct Arc
    {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(2 * n));
    auto add_arc = [&](int a, int b, int cap) {
        out[static_cast<std::size_t>(a)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[static_cast<std::size_t>(b)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    const int big = n + 1;
    for (int v = 0; v < n; ++v)
        add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (int v = 0; v < n; ++v)
        for (int w : adj[static_cast<std::size_t>(v)])
            add_arc(2 * v + 1, 2 * w, 1);

    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> via(static_cast<std::size_t>(2 * n));
    while (true)
    {
        std::fill(via.begin(), via.end(), -1);
        std::queue<int> queue;
        queue.push(source);
        via[static_cast<std::size_t>(source)] = -2;
        while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1)
        {
            int x = queue.front();
            queue.pop();
            for (int a : out[static_cast<std::size_t>(x)])
            {
                const auto& arc = arcs[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1)
                {
                    via[static_cast<std::size_t>(arc.to)] = a;
                    queue.push(arc.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(sink)] == -1)
            break;
        for (int x = sink; x != source;)
        {
            int a = via[static_cast<std::size_t>(x)];
            arcs[static_cast<std::size_t>(a)].cap -= 1;
            arcs[static_cast<std::size_t>(a ^ 1)].cap += 1;
            x = arcs[static_cast<std::size_t>(a ^ 1)].to;
        }
        ++flow;
    }
    return flow;
}

struct ConnectivityResult
{
    int minimum = 0;
    int witness_s = -1;
    int witness_t = -1;
};

/// Minimum local connectivity over all vertex pairs.
inline ConnectivityResult all_pairs_connectivity(const Adjacency& adj)
{
    ConnectivityResult r;
    r.minimum = std::numeric_limits<int>::max();
    const int n = static_cast<int>(adj.size());
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
        {
            int c = local_connectivity(adj, s, t);
            if (c < r.minimum)
            {
                r.minimum = c;
                r.witness_s = s;
                r.witness_t = t;
            }
        }
    if (n < 2)
        r.minimum = 0;
    return r;
}

struct SteinitzReport
{
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    long euler = 0;
    bool simple = false;
    bool planar_rotation = false;
    bool planar_boyer_myrvold = false;
    std::optional<bool> faces_match_triangles;
    int min_connectivity = 0;
    bool three_connected = false;

    bool passed() const
    {
        return simple && planar_rotation && planar_boyer_myrvold && three_connected &&
               faces_match_triangles.value_or(true);
    }
};

/**
 * Steinitz conditions for a graph with a given rotation system.  Planarity is
 * certified by V - E + F = 1 + C on the traced faces; 3-connectivity by
 * Menger's criterion over every vertex pair.
 */
inline SteinitzReport steinitz_check(const Adjacency& adj, const RotationSystem& rs)
{
    SteinitzReport r;
    r.vertices = adj.size();
    r.edges = edge_count(adj);
    r.simple = true;
    for (std::size_t v = 0; v < adj.size(); ++v)
    {
        std::set<int> distinct(adj[v].begin(), adj[v].end());
        if (distinct.size() != adj[v].size() || distinct.count(static_cast<int>(v)))
            r.simple = false;
    }
    const auto faces = trace_faces(adj, rs);
    r.faces = faces.size();
    r.euler = static_cast<long>(r.vertices) - static_cast<long>(r.edges) + static_cast<long>(r.faces);
    r.planar_rotation = r.euler == 1 + static_cast<long>(component_count(adj));
    r.planar_boyer_myrvold = boyer_myrvold_planar(adj);
    r.min_connectivity = all_pairs_connectivity(adj).minimum;
    r.three_connected = r.vertices >= 4 && r.min_connectivity >= 3;
    return r;
}

/// As above, additionally checking that the traced faces are exactly the triangles of `k`.
inline SteinitzReport steinitz_check(const Complex& k, const RotationSystem& rs)
{
    const Adjacency adj = one_skeleton(k);
    SteinitzReport r = steinitz_check(adj, rs);
    if (k.dimension() == 2)
    {
        std::set<std::vector<int>> traced;
        for (auto face : trace_faces(adj, rs))
        {
            std::sort(face.begin(), face.end());
            traced.insert(face);
        }
        std::set<std::vector<int>> triangles;
        auto [lo, hi] = k.dimension_range(2);
        for (int t = lo; t < hi; ++t)
            triangles.insert(k.face(t).vertices());
        r.faces_match_triangles = traced == triangles;
    }
    return r;
}

} // namespace sgsphere

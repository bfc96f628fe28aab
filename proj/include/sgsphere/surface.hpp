/**
 * Closed-surface recognition for 2-dimensional complexes.
 */
#pragma once

#include <string>
#include <vector>

#include "complex.hpp"

namespace sgsphere {

struct SurfaceReport
{
    bool pure_2d = false;
    bool edges_in_two_triangles = false;
    bool connected = false;
    bool vertex_links_are_cycles = false;
    long euler = 0;
    bool is_sphere = false;
    std::vector<std::string> issues;
};

namespace detail {

inline bool is_connected(const std::vector<std::vector<int>>& adj)
{
    if (adj.empty())
        return false;
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty())
    {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)])
            {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == adj.size();
}

} // namespace detail

inline SurfaceReport surface_check(const Complex& k)
{
    SurfaceReport report;
    report.euler = euler_characteristic(k);

    report.pure_2d = k.dimension() == 2 && k.is_pure();
    if (!report.pure_2d)
        report.issues.push_back("not a pure 2-dimensional complex (dimension " +
                                std::to_string(k.dimension()) + ")");

    const FacePoset poset = face_poset(k);
    auto [elo, ehi] = k.dimension_range(1);
    report.edges_in_two_triangles = ehi > elo;
    for (int e = elo; e < ehi; ++e)
    {
        std::size_t triangles = 0;
        for (int up : poset.coboundary[static_cast<std::size_t>(e)])
            if (k.face(up).dimension() == 2)
                ++triangles;
        if (triangles != 2)
        {
            report.edges_in_two_triangles = false;
            report.issues.push_back("edge " + std::to_string(e) + " lies in " + std::to_string(triangles) +
                                    " triangles");
            break;
        }
    }

    report.connected = detail::is_connected(one_skeleton(k));
    if (!report.connected)
        report.issues.push_back("1-skeleton is disconnected");

    // link of v: edges {a, b} from triangles {v, a, b}; must be connected and 2-regular
    std::vector<std::vector<std::vector<int>>> links(k.vertex_count());
    auto [tlo, thi] = k.dimension_range(2);
    for (int t = tlo; t < thi; ++t)
    {
        const auto& tri = k.face(t);
        for (std::size_t i = 0; i < 3; ++i)
        {
            auto& link = links[static_cast<std::size_t>(tri[i])];
            if (link.empty())
                link.resize(k.vertex_count());
            int a = tri[(i + 1) % 3];
            int b = tri[(i + 2) % 3];
            link[static_cast<std::size_t>(a)].push_back(b);
            link[static_cast<std::size_t>(b)].push_back(a);
        }
    }
    report.vertex_links_are_cycles = k.vertex_count() > 0;
    for (std::size_t v = 0; v < k.vertex_count() && report.vertex_links_are_cycles; ++v)
    {
        const auto& link = links[v];
        std::vector<std::vector<int>> compact;
        std::vector<int> remap(k.vertex_count(), -1);
        for (std::size_t w = 0; w < link.size(); ++w)
            if (!link[w].empty())
            {
                remap[w] = static_cast<int>(compact.size());
                compact.emplace_back();
            }
        bool ok = !compact.empty();
        for (std::size_t w = 0; w < link.size() && ok; ++w)
        {
            if (link[w].empty())
                continue;
            if (link[w].size() != 2)
                ok = false;
            for (int x : link[w])
                compact[static_cast<std::size_t>(remap[w])].push_back(remap[static_cast<std::size_t>(x)]);
        }
        if (ok)
            ok = detail::is_connected(compact);
        if (!ok)
        {
            report.vertex_links_are_cycles = false;
            report.issues.push_back("link of vertex " + to_string(k.label(static_cast<int>(v))) +
                                    " is not a single cycle");
        }
    }

    report.is_sphere = report.pure_2d && report.edges_in_two_triangles && report.connected &&
                       report.vertex_links_are_cycles && report.euler == 2;
    if (report.pure_2d && report.euler != 2)
        report.issues.push_back("Euler characteristic " + std::to_string(report.euler) + " != 2");
    return report;
}

} // namespace sgsphere

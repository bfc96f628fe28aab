/**
 * Stable Kneser graphs SG_{n,k} and the neighbor structure of SG_{n,2}.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stable_set.hpp"

namespace sgsphere {

/**
 * The stable Kneser (Schrijver) graph SG_{n,k}: vertices are the stable
 * n-subsets of [2n + k] in lexicographic order, edges join disjoint sets.
 *
 * Vertices are addressed by their index in `vertices()`; adjacency lists are
 * sorted, so neighbors also come out in lexicographic order.
 */
class SchrijverGraph
{
  public:
    SchrijverGraph(int n, int k) : n_(n), k_(k), vertices_(enumerate_stable_sets(n, k))
    {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            index_.emplace(vertices_[i], static_cast<int>(i));
        adjacency_.resize(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j)
                if (disjoint(vertices_[i], vertices_[j]))
                {
                    adjacency_[i].push_back(static_cast<int>(j));
                    adjacency_[j].push_back(static_cast<int>(i));
                    ++edge_count_;
                }
        for (auto& row : adjacency_)
            std::sort(row.begin(), row.end());
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int ground_size() const { return 2 * n_ + k_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<StableSet>& vertices() const { return vertices_; }
    const StableSet& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& neighbors(int i) const { return adjacency_.at(static_cast<std::size_t>(i)); }

    std::optional<int> index_of(const StableSet& s) const
    {
        auto it = index_.find(s);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    int require_index(const StableSet& s) const
    {
        auto idx = index_of(s);
        if (!idx)
            throw std::invalid_argument("SchrijverGraph: " + s.to_string() + " is not a vertex");
        return *idx;
    }

    bool adjacent(int a, int b) const
    {
        const auto& row = neighbors(a);
        return std::binary_search(row.begin(), row.end(), b);
    }

    Tightness tightness(int i) const { return classify(vertex(i), n_, k_); }

  private:
    int n_;
    int k_;
    std::vector<StableSet> vertices_;
    std::map<StableSet, int> index_;
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

inline SchrijverGraph build_graph(int n, int k) { return SchrijverGraph(n, k); }

/// Data attached to a tight vertex of SG_{n,2}.
struct TightNeighborData
{
    StableSet eta;        ///< the unique outer neighbor
    int p = 0;            ///< element of eta with the parity of the tight vertex
    StableSet flank_low;  ///< eta with p replaced by p - 1
    StableSet flank_high; ///< eta with p replaced by p + 1
};

struct NeighborProfile
{
    std::vector<StableSet> immediate;
    std::vector<StableSet> outer;
    std::vector<StableSet> other;
    std::optional<TightNeighborData> tight;
};

/// The ⊕1-rotation orbit of s.
inline std::vector<StableSet> rotation_orbit(const StableSet& s, int m)
{
    std::vector<StableSet> orbit;
    for (int j = 0; j < m; ++j)
        orbit.push_back(rotate(s, j, m));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

/**
 * Outer neighbors: some element moves by +2, every other element by +1, and
 * the result must be a neighbor.
 */
inline std::vector<StableSet> shift_form_outer_neighbors(const SchrijverGraph& g, const StableSet& alpha)
{
    const int m = g.ground_size();
    const int index = g.require_index(alpha);
    std::vector<StableSet> out;
    for (std::size_t i = 0; i < alpha.size(); ++i)
    {
        std::vector<int> shifted;
        for (std::size_t t = 0; t < alpha.size(); ++t)
            shifted.push_back(wrap(alpha[t] + (t == i ? 2 : 1), m));
        std::sort(shifted.begin(), shifted.end());
        if (std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end())
            continue;
        StableSet beta(std::move(shifted));
        auto bi = g.index_of(beta);
        if (bi && g.adjacent(index, *bi))
            out.push_back(beta);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/**
 * Split the neighbors of `alpha` in SG_{n,2} into immediate neighbors
 * (α ⊕ 1 and α ⊖ 1), outer neighbors (shift form), and the rest.  Only
 * tight-tight edges land in `other`.  A tight vertex with a unique outer
 * neighbor also gets eta and the two flanking sets.
 */
inline NeighborProfile neighbor_profile(const SchrijverGraph& g, const StableSet& alpha)
{
    if (g.k() != 2)
        throw std::invalid_argument("neighbor_profile: only defined for k = 2");
    const int m = g.ground_size();
    const int index = g.require_index(alpha);
    const StableSet up = rotate(alpha, 1, m);
    const StableSet down = rotate(alpha, -1, m);
    const auto outer = shift_form_outer_neighbors(g, alpha);

    NeighborProfile profile;
    for (int nb : g.neighbors(index))
    {
        const auto& beta = g.vertex(nb);
        if (beta == up || beta == down)
            profile.immediate.push_back(beta);
        else if (std::binary_search(outer.begin(), outer.end(), beta))
            profile.outer.push_back(beta);
        else
            profile.other.push_back(beta);
    }

    if (g.tightness(index) == Tightness::Tight)
    {
        if (profile.outer.size() != 1)
            throw std::logic_error("neighbor_profile: tight vertex " + alpha.to_string() + " has " +
                                   std::to_string(profile.outer.size()) + " outer neighbors");
        TightNeighborData data;
        data.eta = profile.outer.front();
        const int parity = alpha[0] % 2;
        int found = 0;
        for (int x : data.eta.elements())
            if (x % 2 == parity)
            {
                data.p = x;
                ++found;
            }
        if (found != 1)
            throw std::logic_error("neighbor_profile: eta of " + alpha.to_string() +
                                   " does not have exactly one element of matching parity");
        auto replace_p = [&](int with) {
            std::vector<int> e;
            for (int x : data.eta.elements())
                e.push_back(x == data.p ? wrap(with, m) : x);
            return StableSet(std::move(e));
        };
        data.flank_low = replace_p(data.p - 1);
        data.flank_high = replace_p(data.p + 1);
        profile.tight = data;
    }
    return profile;
}

} // namespace sgsphere

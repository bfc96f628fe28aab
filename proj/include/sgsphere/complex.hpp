/**
 * Finite abstract simplicial complexes with explicitly stored faces.
 *
 * A `Complex` keeps its vertex labels sorted, so vertex indices (and hence
 * face ids) are canonical for a given vertex set.  Faces are ordered by
 * dimension, then lexicographically by vertex indices; the empty face is not
 * stored.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kneser.hpp"
#include "labels.hpp"

namespace sgsphere {

/// A nonempty face given by sorted vertex indices into some complex.
class Simplex
{
  public:
    Simplex() = default;
    explicit Simplex(std::vector<int> vertices) : v_(std::move(vertices))
    {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }
    Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    int dimension() const { return static_cast<int>(v_.size()) - 1; }
    bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }
    int operator[](std::size_t i) const { return v_[i]; }

    bool is_subset_of(const Simplex& other) const
    {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    Simplex without(int x) const
    {
        std::vector<int> out;
        out.reserve(v_.size());
        for (int y : v_)
            if (y != x)
                out.push_back(y);
        return Simplex(std::move(out));
    }

    Simplex with(int x) const
    {
        auto out = v_;
        out.push_back(x);
        return Simplex(std::move(out));
    }

    /// Dimension first, then lexicographic.
    std::strong_ordering operator<=>(const Simplex& other) const
    {
        if (auto c = v_.size() <=> other.v_.size(); c != 0)
            return c;
        return v_ <=> other.v_;
    }
    bool operator==(const Simplex&) const = default;

  private:
    std::vector<int> v_;
};

using LabeledSimplex = std::vector<VertexLabel>;

class Complex
{
  public:
    Complex() = default;

    /// Downward closure of the given facets; non-maximal inputs are absorbed.
    static Complex from_facets(const std::vector<LabeledSimplex>& facets)
    {
        Complex c;
        c.init_vertices(facets);
        std::set<Simplex> faces;
        for (const auto& facet : facets)
        {
            Simplex s = c.to_indices(facet);
            if (s.size() == 0)
                throw std::invalid_argument("Complex::from_facets: empty facet");
            if (s.size() > 24)
                throw std::invalid_argument("Complex::from_facets: facet too large to expand");
            const std::uint32_t full = (std::uint32_t{1} << s.size()) - 1;
            for (std::uint32_t mask = 1; mask <= full; ++mask)
            {
                std::vector<int> sub;
                for (std::size_t b = 0; b < s.size(); ++b)
                    if (mask & (std::uint32_t{1} << b))
                        sub.push_back(s[b]);
                faces.emplace(std::move(sub));
            }
        }
        c.finish(std::vector<Simplex>(faces.begin(), faces.end()));
        return c;
    }

    /// A complex from an explicit face list, which must be downward closed.
    static Complex from_faces(const std::vector<LabeledSimplex>& faces)
    {
        Complex c;
        c.init_vertices(faces);
        std::set<Simplex> set;
        for (const auto& f : faces)
        {
            Simplex s = c.to_indices(f);
            if (s.size() == 0)
                throw std::invalid_argument("Complex::from_faces: empty face");
            set.insert(std::move(s));
        }
        for (const auto& s : set)
            if (s.size() > 1)
                for (int v : s.vertices())
                    if (!set.count(s.without(v)))
                        throw std::invalid_argument("Complex::from_faces: face set is not downward closed");
        c.finish(std::vector<Simplex>(set.begin(), set.end()));
        return c;
    }

    const std::vector<VertexLabel>& vertices() const { return labels_; }
    std::size_t vertex_count() const { return labels_.size(); }
    const VertexLabel& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }

    std::optional<int> vertex_index(const VertexLabel& label) const
    {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label)
            return std::nullopt;
        return static_cast<int>(it - labels_.begin());
    }

    const std::vector<Simplex>& faces() const { return faces_; }
    std::size_t face_count() const { return faces_.size(); }
    const Simplex& face(int id) const { return faces_.at(static_cast<std::size_t>(id)); }

    std::optional<int> find(const Simplex& s) const
    {
        auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
        if (it == faces_.end() || *it != s)
            return std::nullopt;
        return static_cast<int>(it - faces_.begin());
    }

    std::optional<int> find(const LabeledSimplex& labeled) const
    {
        std::vector<int> idx;
        for (const auto& l : labeled)
        {
            auto v = vertex_index(l);
            if (!v)
                return std::nullopt;
            idx.push_back(*v);
        }
        return find(Simplex(std::move(idx)));
    }

    bool contains(const LabeledSimplex& labeled) const { return find(labeled).has_value(); }

    /// Ids of inclusion-maximal faces, in face order.
    const std::vector<int>& facets() const { return facets_; }

    int dimension() const { return faces_.empty() ? -1 : faces_.back().dimension(); }

    /// Face counts by dimension, (f_0, f_1, ...).
    std::vector<std::size_t> f_vector() const
    {
        std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
        for (const auto& s : faces_)
            ++f[static_cast<std::size_t>(s.dimension())];
        return f;
    }

    /// Ids of faces of the given dimension form a contiguous range.
    std::pair<int, int> dimension_range(int d) const
    {
        auto lo = std::partition_point(faces_.begin(), faces_.end(),
                                       [d](const Simplex& s) { return s.dimension() < d; });
        auto hi = std::partition_point(lo, faces_.end(), [d](const Simplex& s) { return s.dimension() <= d; });
        return {static_cast<int>(lo - faces_.begin()), static_cast<int>(hi - faces_.begin())};
    }

    LabeledSimplex labels_of(const Simplex& s) const
    {
        LabeledSimplex out;
        for (int v : s.vertices())
            out.push_back(label(v));
        return out;
    }

    /// Facets as sorted label lists, for comparisons across complexes.
    std::set<LabeledSimplex> labeled_facets() const
    {
        std::set<LabeledSimplex> out;
        for (int id : facets_)
            out.insert(labels_of(face(id)));
        return out;
    }

    /// All facets have the top dimension.
    bool is_pure() const
    {
        for (int id : facets_)
            if (face(id).dimension() != dimension())
                return false;
        return true;
    }

  private:
    void init_vertices(const std::vector<LabeledSimplex>& simplices)
    {
        for (const auto& s : simplices)
            for (const auto& l : s)
                labels_.push_back(l);
        std::sort(labels_.begin(), labels_.end());
        labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    }

    Simplex to_indices(const LabeledSimplex& labeled) const
    {
        std::vector<int> idx;
        idx.reserve(labeled.size());
        for (const auto& l : labeled)
            idx.push_back(*vertex_index(l));
        Simplex s(std::move(idx));
        if (s.size() != labeled.size())
            throw std::invalid_argument("Complex: repeated vertex in a simplex");
        return s;
    }

    void finish(std::vector<Simplex> faces)
    {
        faces_ = std::move(faces);
        std::vector<bool> has_coface(faces_.size(), false);
        for (const auto& s : faces_)
            if (s.size() > 1)
                for (int v : s.vertices())
                    has_coface[static_cast<std::size_t>(*find(s.without(v)))] = true;
        for (std::size_t i = 0; i < faces_.size(); ++i)
            if (!has_coface[i])
                facets_.push_back(static_cast<int>(i));
    }

    std::vector<VertexLabel> labels_;
    std::vector<Simplex> faces_;
    std::vector<int> facets_;
};

/// Labels a vertex of a generic test or example complex by the 1-set {i}.
inline VertexLabel point(int i) { return StableSet{i}; }

/// Face poset without the empty face; covers are codimension-1 inclusions.
struct FacePoset
{
    /// boundary[f] = ids of the codimension-1 faces of f.
    std::vector<std::vector<int>> boundary;
    /// coboundary[f] = ids of the faces having f as a codimension-1 face.
    std::vector<std::vector<int>> coboundary;
    std::size_t cover_count = 0;

    std::size_t size() const { return boundary.size(); }

    bool covers(int lower, int upper) const
    {
        const auto& b = boundary.at(static_cast<std::size_t>(upper));
        return std::find(b.begin(), b.end(), lower) != b.end();
    }
};

inline FacePoset face_poset(const Complex& k)
{
    FacePoset p;
    p.boundary.resize(k.face_count());
    p.coboundary.resize(k.face_count());
    for (std::size_t id = 0; id < k.face_count(); ++id)
    {
        const auto& s = k.faces()[id];
        if (s.size() < 2)
            continue;
        for (int v : s.vertices())
        {
            int sub = *k.find(s.without(v));
            p.boundary[id].push_back(sub);
            p.coboundary[static_cast<std::size_t>(sub)].push_back(static_cast<int>(id));
            ++p.cover_count;
        }
    }
    for (auto& row : p.boundary)
        std::sort(row.begin(), row.end());
    for (auto& row : p.coboundary)
        std::sort(row.begin(), row.end());
    return p;
}

inline long euler_characteristic(const Complex& k)
{
    long chi = 0;
    const auto f = k.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
    return chi;
}

/// Lovász's neighborhood complex: facets are the maximal neighborhoods.
inline Complex neighborhood_complex(const SchrijverGraph& g)
{
    std::vector<LabeledSimplex> facets;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
    {
        const auto& nbrs = g.neighbors(static_cast<int>(v));
        if (nbrs.empty())
            throw std::invalid_argument("neighborhood_complex: graph has an isolated vertex");
        LabeledSimplex sigma;
        for (int u : nbrs)
            sigma.push_back(g.vertex(u));
        facets.push_back(std::move(sigma));
    }
    return Complex::from_facets(facets);
}

/// Undirected 1-skeleton adjacency (sorted neighbor lists) over vertex indices.
inline std::vector<std::vector<int>> one_skeleton(const Complex& k)
{
    std::vector<std::vector<int>> adj(k.vertex_count());
    auto [lo, hi] = k.dimension_range(1);
    for (int id = lo; id < hi; ++id)
    {
        const auto& e = k.face(id);
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());
    return adj;
}

/**
 * Barycentric subdivision of a single simplex with vertices `sigma`.  The
 * subdivision's vertices are Flag labels of nonempty subsets; its faces are
 * chains of subsets under inclusion, so the facets are the maximal chains.
 */
inline Complex barycentric_subdivision(const std::vector<StableSet>& sigma)
{
    std::vector<StableSet> base(sigma);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (base.empty())
        throw std::invalid_argument("barycentric_subdivision: empty simplex");
    if (base.size() > 9)
        throw std::invalid_argument("barycentric_subdivision: simplex too large");

    std::vector<std::size_t> order(base.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<LabeledSimplex> facets;
    // maximal chains correspond to orderings in which vertices are added
    do
    {
        LabeledSimplex chain;
        std::vector<StableSet> prefix;
        for (std::size_t i : order)
        {
            prefix.push_back(base[i]);
            chain.push_back(make_flag(prefix));
        }
        facets.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
    return Complex::from_facets(facets);
}

} // namespace sgsphere

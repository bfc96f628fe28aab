/**
 * The dihedral action on [2n+2], the subdivided sphere M(SG_{n,2}), and
 * invariance checks of complexes under the induced action on labels.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "kneser.hpp"
#include "labels.hpp"
#include "morse.hpp"
#include "phi.hpp"

namespace sgsphere {

/// i ↦ i + shift, or i ↦ (m + 1 - i) + shift when reflected; all mod m.
struct DihedralElement
{
    int m = 0;
    int shift = 0;
    bool reflected = false;

    int apply(int i) const { return wrap((reflected ? m + 1 - i : i) + shift, m); }

    /// True when odd elements are sent to even ones.
    bool reverses_parity() const { return apply(1) % 2 == 0; }

    std::vector<int> permutation() const
    {
        std::vector<int> p;
        for (int i = 1; i <= m; ++i)
            p.push_back(apply(i));
        return p;
    }

    std::string to_string() const
    {
        return (reflected ? "reflect+" : "rotate+") + std::to_string(shift);
    }

    auto operator<=>(const DihedralElement&) const = default;
    bool operator==(const DihedralElement&) const = default;
};

/// All 2m elements of the dihedral group on [m], rotations first.
inline std::vector<DihedralElement> dihedral_group(int m)
{
    if (m < 3)
        throw std::invalid_argument("dihedral_group: m must be >= 3");
    std::vector<DihedralElement> out;
    for (bool reflected : {false, true})
        for (int s = 0; s < m; ++s)
            out.push_back({m, s, reflected});
    return out;
}

/// g ∘ h, identified by its action on [m].
inline DihedralElement compose(const DihedralElement& g, const DihedralElement& h)
{
    if (g.m != h.m)
        throw std::invalid_argument("compose: ground sets differ");
    const auto target = [&] {
        std::vector<int> p;
        for (int i = 1; i <= g.m; ++i)
            p.push_back(g.apply(h.apply(i)));
        return p;
    }();
    for (const auto& e : dihedral_group(g.m))
        if (e.permutation() == target)
            return e;
    throw std::logic_error("compose: result is not dihedral");
}

inline StableSet apply_group(const DihedralElement& g, const StableSet& s)
{
    std::vector<int> out;
    for (int x : s.elements())
        out.push_back(g.apply(x));
    return StableSet(std::move(out));
}

inline VertexLabel apply_group(const DihedralElement& g, const VertexLabel& label)
{
    struct Visitor
    {
        const DihedralElement& g;
        VertexLabel operator()(const StableSet& s) const { return apply_group(g, s); }
        VertexLabel operator()(const Midpoint& mp) const
        {
            return make_midpoint(apply_group(g, mp.first), apply_group(g, mp.second));
        }
        VertexLabel operator()(const Barycenter& b) const
        {
            if (!g.reverses_parity())
                return b;
            return Barycenter{b.parity == Parity::Odd ? Parity::Even : Parity::Odd};
        }
        VertexLabel operator()(const Flag& f) const
        {
            std::vector<StableSet> members;
            for (const auto& s : f.members)
                members.push_back(apply_group(g, s));
            return make_flag(std::move(members));
        }
    };
    return std::visit(Visitor{g}, label);
}

inline LabeledSimplex apply_group(const DihedralElement& g, const LabeledSimplex& s)
{
    LabeledSimplex out;
    for (const auto& l : s)
        out.push_back(apply_group(g, l));
    std::sort(out.begin(), out.end());
    return out;
}

struct AutomorphismReport
{
    std::size_t elements = 0;
    std::size_t distinct_permutations = 0;
    bool closed_under_composition = false;
    bool preserves_stability = false;
    bool preserves_adjacency = false;

    bool passed(int m) const
    {
        return elements == static_cast<std::size_t>(2 * m) && distinct_permutations == elements &&
               closed_under_composition && preserves_stability && preserves_adjacency;
    }
};

/// The dihedral group acts on SG_{n,k} by graph automorphisms.
inline AutomorphismReport verify_automorphisms(const SchrijverGraph& g)
{
    const int m = g.ground_size();
    const auto group = dihedral_group(m);
    AutomorphismReport r;
    r.elements = group.size();
    std::set<std::vector<int>> perms;
    for (const auto& e : group)
        perms.insert(e.permutation());
    r.distinct_permutations = perms.size();

    r.closed_under_composition = true;
    for (const auto& a : group)
        for (const auto& b : group)
        {
            std::vector<int> p;
            for (int i = 1; i <= m; ++i)
                p.push_back(a.apply(b.apply(i)));
            if (!perms.count(p))
                r.closed_under_composition = false;
        }

    r.preserves_stability = true;
    r.preserves_adjacency = true;
    for (const auto& e : group)
    {
        std::vector<int> image(g.vertex_count());
        std::set<int> hit;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
        {
            auto idx = g.index_of(apply_group(e, g.vertex(static_cast<int>(v))));
            if (!idx)
            {
                r.preserves_stability = false;
                break;
            }
            image[v] = *idx;
            hit.insert(*idx);
        }
        if (!r.preserves_stability || hit.size() != g.vertex_count())
        {
            r.preserves_stability = false;
            continue;
        }
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
                if (g.adjacent(static_cast<int>(u), static_cast<int>(v)) != g.adjacent(image[u], image[v]))
                    r.preserves_adjacency = false;
    }
    return r;
}

struct OrbitEntry
{
    DihedralElement element;
    bool invariant = false;
    std::optional<LabeledSimplex> violating_facet;
    std::optional<LabeledSimplex> image;
};

struct OrbitReport
{
    std::vector<OrbitEntry> entries;

    bool invariant() const
    {
        return !entries.empty() &&
               std::all_of(entries.begin(), entries.end(), [](const OrbitEntry& e) { return e.invariant; });
    }
};

/// Whether `e` maps every facet of `k` to a facet; the first violation otherwise.
inline OrbitEntry check_element(const Complex& k, const DihedralElement& e)
{
    const auto facets = k.labeled_facets();
    OrbitEntry entry{e, true, std::nullopt, std::nullopt};
    for (const auto& f : facets)
    {
        auto image = apply_group(e, f);
        if (!facets.count(image))
        {
            entry.invariant = false;
            entry.violating_facet = f;
            entry.image = std::move(image);
            break;
        }
    }
    return entry;
}

inline OrbitReport check_invariance(const Complex& k, int n)
{
    OrbitReport r;
    for (const auto& e : dihedral_group(2 * n + 2))
        r.entries.push_back(check_element(k, e));
    return r;
}

/// Fiber of Ψ: Zero, OneOdd or OneEven.
using PsiValue = QElement::Kind;

struct MConstruction
{
    int n = 0;
    /// After the B_α and C_α collapses, before subdivision.
    Complex collapsed;
    std::vector<std::size_t> collapsed_f_vector;
    /// Caps barycentrically subdivided and η-triangles split.
    Complex subdivided;
    std::vector<PsiValue> psi;
    bool psi_order_preserving = false;
    std::size_t psi_unmatched_nonzero = 0;
    MorseReport psi_report;
    Complex pipeline;
    Complex direct;
};

inline VertexLabel subdivision_vertex(const Flag& flag, std::size_t cap_size)
{
    if (flag.members.size() == 1)
        return flag.members.front();
    if (flag.members.size() == 2)
        return make_midpoint(flag.members[0], flag.members[1]);
    if (flag.members.size() == cap_size)
        return Barycenter{parity_of(flag.members.front())};
    return flag;
}

/// Facet list of M(SG_{n,2}) written down from its description.
inline Complex build_M_direct(int n)
{
    if (n < 2)
        throw std::invalid_argument("build_M: n must be >= 2");
    const SchrijverGraph g(n, 2);
    const PhiMap phi(g);
    std::vector<LabeledSimplex> facets;
    for (int parity : {1, 0})
    {
        std::vector<StableSet> cap;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (g.tightness(static_cast<int>(v)) == Tightness::Tight && g.vertex(static_cast<int>(v))[0] % 2 == parity)
                cap.push_back(g.vertex(static_cast<int>(v)));
        const Barycenter b{parity == 1 ? Parity::Odd : Parity::Even};
        for (std::size_t i = 0; i < cap.size(); ++i)
        {
            const auto& next = cap[(i + 1) % cap.size()];
            const Midpoint mid = make_midpoint(cap[i], next);
            facets.push_back({cap[i], mid, b});
            facets.push_back({next, mid, b});
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
    {
        const auto& f = phi.frame(static_cast<int>(v));
        if (f.tight)
        {
            const auto& lo = g.vertex(f.v_j());
            const auto& hi = g.vertex(f.v_j_next());
            const Midpoint mid = make_midpoint(lo, hi);
            facets.push_back({lo, mid, g.vertex(f.eta)});
            facets.push_back({hi, mid, g.vertex(f.eta)});
        }
        else
        {
            facets.push_back({g.vertex(f.a), g.vertex(f.c), g.vertex(f.b)});
            facets.push_back({g.vertex(f.a), g.vertex(f.c), g.vertex(f.d)});
        }
    }
    for (auto& facet : facets)
        std::sort(facet.begin(), facet.end());
    return Complex::from_facets(facets);
}

/**
 * M(SG_{n,2}) through the collapse pipeline, cross-checked against the
 * direct facet list.  Throws VerificationError when the two disagree or any
 * matching fails its certificate.
 */
inline MConstruction build_M(int n)
{
    if (n < 2)
        throw std::invalid_argument("build_M: n must be >= 2");
    MConstruction out;
    out.n = n;

    const PhiMatching pm = build_global_matching(n, FiberSelection{true, false, true});
    const auto first = collapse_to_critical(pm.complex, pm.matching);
    out.collapsed = first.critical;
    out.collapsed_f_vector = out.collapsed.f_vector();
    const SchrijverGraph& g = pm.graph;

    std::array<std::vector<StableSet>, 2> caps;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.tightness(static_cast<int>(v)) == Tightness::Tight)
            caps[static_cast<std::size_t>(g.vertex(static_cast<int>(v))[0] % 2)].push_back(g.vertex(static_cast<int>(v)));
    const std::size_t cap_size = static_cast<std::size_t>(n + 1);

    std::vector<LabeledSimplex> facets;
    for (const auto& cap : caps)
    {
        if (!out.collapsed.contains(LabeledSimplex(cap.begin(), cap.end())))
            throw VerificationError("build_M: a cap simplex did not survive the collapse");
        const Complex sd = barycentric_subdivision(cap);
        for (const auto& f : sd.labeled_facets())
        {
            LabeledSimplex relabeled;
            for (const auto& l : f)
                relabeled.push_back(subdivision_vertex(std::get<Flag>(l), cap_size));
            std::sort(relabeled.begin(), relabeled.end());
            facets.push_back(std::move(relabeled));
        }
    }
    for (const auto& f : out.collapsed.labeled_facets())
    {
        if (f.size() == cap_size && (f == LabeledSimplex(caps[0].begin(), caps[0].end()) ||
                                     f == LabeledSimplex(caps[1].begin(), caps[1].end())))
            continue;
        // a same-parity tight pair inside another facet is a cap edge and must be split
        std::vector<std::pair<StableSet, StableSet>> cap_edges;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
            {
                const auto& x = std::get<StableSet>(f[i]);
                const auto& y = std::get<StableSet>(f[j]);
                if (classify(x, n, 2) == Tightness::Tight && classify(y, n, 2) == Tightness::Tight &&
                    x[0] % 2 == y[0] % 2)
                    cap_edges.emplace_back(x, y);
            }
        if (cap_edges.empty())
        {
            facets.push_back(f);
            continue;
        }
        if (cap_edges.size() != 1)
            throw VerificationError("build_M: facet with several cap edges survived the collapse");
        const auto& [x, y] = cap_edges.front();
        const Midpoint mid = make_midpoint(x, y);
        for (const auto& keep : {x, y})
        {
            LabeledSimplex half;
            for (const auto& l : f)
            {
                const auto& s = std::get<StableSet>(l);
                if (s == keep || (s != x && s != y))
                    half.push_back(s);
            }
            half.push_back(mid);
            std::sort(half.begin(), half.end());
            facets.push_back(std::move(half));
        }
    }
    out.subdivided = Complex::from_facets(facets);

    // Ψ: faces of a subdivided cap lying in no {v^m, mid, b} go to 1 of that cap
    std::array<std::set<LabeledSimplex>, 2> zero_triangles;
    for (std::size_t parity = 0; parity < 2; ++parity)
    {
        const auto& cap = caps[parity];
        const Barycenter b{parity == 1 ? Parity::Odd : Parity::Even};
        for (std::size_t i = 0; i < cap.size(); ++i)
        {
            const auto& next = cap[(i + 1) % cap.size()];
            const Midpoint mid = make_midpoint(cap[i], next);
            for (const auto& end : {cap[i], next})
            {
                LabeledSimplex t{end, mid, b};
                std::sort(t.begin(), t.end());
                zero_triangles[parity].insert(std::move(t));
            }
        }
    }
    auto cap_of = [&](const VertexLabel& l) -> int {
        if (const auto* s = std::get_if<StableSet>(&l))
            return classify(*s, n, 2) == Tightness::Tight ? (*s)[0] % 2 : -1;
        if (const auto* mp = std::get_if<Midpoint>(&l))
            return classify(mp->first, n, 2) == Tightness::Tight && classify(mp->second, n, 2) == Tightness::Tight &&
                           mp->first[0] % 2 == mp->second[0] % 2
                       ? mp->first[0] % 2
                       : -1;
        if (const auto* b = std::get_if<Barycenter>(&l))
            return b->parity == Parity::Odd ? 1 : 0;
        return std::get<Flag>(l).members.front()[0] % 2;
    };

    const Complex& k = out.subdivided;
    const FacePoset poset = face_poset(k);
    out.psi.reserve(k.face_count());
    for (const auto& s : k.faces())
    {
        const LabeledSimplex labels = k.labels_of(s);
        const int parity = cap_of(labels.front());
        bool in_cap = parity >= 0;
        for (const auto& l : labels)
            in_cap = in_cap && cap_of(l) == parity;
        PsiValue value = PsiValue::Zero;
        if (in_cap)
        {
            const auto& zeros = zero_triangles[static_cast<std::size_t>(parity)];
            const bool inside = std::any_of(zeros.begin(), zeros.end(), [&](const LabeledSimplex& t) {
                return std::includes(t.begin(), t.end(), labels.begin(), labels.end());
            });
            if (!inside)
                value = parity == 1 ? PsiValue::OneOdd : PsiValue::OneEven;
        }
        out.psi.push_back(value);
    }

    out.psi_order_preserving = true;
    for (std::size_t upper = 0; upper < poset.size(); ++upper)
        for (int lower : poset.boundary[upper])
        {
            const PsiValue a = out.psi[static_cast<std::size_t>(lower)];
            const PsiValue b = out.psi[upper];
            if (a != b && a != PsiValue::Zero)
                out.psi_order_preserving = false;
        }
    if (!out.psi_order_preserving)
        throw VerificationError("build_M: Ψ is not order preserving");

    AcyclicMatching matching(k.face_count());
    for (std::size_t id = 0; id < k.face_count(); ++id)
    {
        if (out.psi[id] == PsiValue::Zero)
            continue;
        const Barycenter b{out.psi[id] == PsiValue::OneOdd ? Parity::Odd : Parity::Even};
        const int bv = *k.vertex_index(b);
        const auto& s = k.faces()[id];
        if (s.contains(bv))
            continue;
        auto coface = k.find(s.with(bv));
        if (!coface || out.psi[static_cast<std::size_t>(*coface)] != out.psi[id])
            throw VerificationError("build_M: Ψ partner leaves its fiber");
        matching.add(poset, static_cast<int>(id), *coface);
    }
    for (std::size_t id = 0; id < k.face_count(); ++id)
        if (out.psi[id] != PsiValue::Zero && !matching.is_matched(static_cast<int>(id)))
            ++out.psi_unmatched_nonzero;
    if (out.psi_unmatched_nonzero != 0)
        throw VerificationError("build_M: Ψ matching is not perfect on the 1 fibers");

    auto second = collapse_to_critical(k, matching);
    out.psi_report = second.report;
    out.pipeline = std::move(second.critical);
    out.direct = build_M_direct(n);
    if (out.pipeline.labeled_facets() != out.direct.labeled_facets())
        throw VerificationError("build_M: pipeline and direct constructions differ");
    return out;
}

} // namespace sgsphere

/**
 * The poset map Φ from the face poset of N(SG_{n,2}) to Q(n,2), and the
 * fiberwise matchings whose union collapses N(SG_{n,2}) onto Φ⁻¹(A).
 *
 * Φ is evaluated facet by facet: a face is mapped through θ_α for every loose
 * facet Σ_α containing it and through φ_α for every tight one, and all of
 * those values must agree.  Disagreement is reported as a VerificationError.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "complex.hpp"
#include "kneser.hpp"
#include "morse.hpp"

namespace sgsphere {

/// Elements of Q(n,2) together with the two-chain target {0 < 1_o, 0 < 1_e} used for the caps.
struct QElement
{
    enum class Kind
    {
        A,
        B,
        BLoose, ///< B_α for a loose α
        CTight, ///< C_α for a tight α
        Zero,
        OneOdd,
        OneEven
    };

    Kind kind = Kind::A;
    StableSet alpha;

    static QElement a() { return {Kind::A, {}}; }
    static QElement b() { return {Kind::B, {}}; }
    static QElement b_loose(StableSet s) { return {Kind::BLoose, std::move(s)}; }
    static QElement c_tight(StableSet s) { return {Kind::CTight, std::move(s)}; }

    auto operator<=>(const QElement&) const = default;
    bool operator==(const QElement&) const = default;

    std::string to_string() const
    {
        switch (kind)
        {
        case Kind::A: return "A";
        case Kind::B: return "B";
        case Kind::BLoose: return "B[" + alpha.to_string() + "]";
        case Kind::CTight: return "C[" + alpha.to_string() + "]";
        case Kind::Zero: return "0";
        case Kind::OneOdd: return "1_o";
        case Kind::OneEven: return "1_e";
        }
        return "?";
    }
};

/// The partial order of Q(n,2) and of {0, 1_o, 1_e}.
inline bool q_leq(const QElement& x, const QElement& y)
{
    using K = QElement::Kind;
    if (x == y)
        return true;
    switch (x.kind)
    {
    case K::A: return y.kind == K::B || y.kind == K::BLoose || y.kind == K::CTight;
    case K::B: return y.kind == K::CTight;
    case K::Zero: return y.kind == K::OneOdd || y.kind == K::OneEven;
    default: return false;
    }
}

/**
 * Named vertices of one facet Σ_γ (graph indices).
 *
 * Loose γ: a is the lex-first immediate neighbor, c the other one, b and d
 * the outer neighbors.  Tight γ: v[0..n] are the opposite-parity tight
 * neighbors in lex order, eta the remaining neighbor, and {v[j], v[j+1]}
 * (indices mod n+1) the pair obtained from eta by moving p to p∓1.
 */
struct FacetFrame
{
    int center = -1;
    bool tight = false;
    std::vector<int> members;

    int a = -1, b = -1, c = -1, d = -1;

    std::vector<int> v;
    int eta = -1;
    int p = 0;
    std::size_t j = 0;

    int v_j() const { return v.at(j); }
    int v_j_next() const { return v.at((j + 1) % v.size()); }
};

class PhiMap
{
  public:
    explicit PhiMap(const SchrijverGraph& g) : graph_(g)
    {
        if (g.k() != 2)
            throw std::invalid_argument("PhiMap: only defined for k = 2");
        const int m = g.ground_size();
        for (int lex_first_parity = 0; lex_first_parity < 2; ++lex_first_parity)
            first_tight_[lex_first_parity] = -1;
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
        {
            const int idx = static_cast<int>(i);
            if (g.tightness(idx) != Tightness::Tight)
                continue;
            auto& slot = first_tight_[static_cast<std::size_t>(g.vertex(idx)[0] % 2)];
            if (slot < 0)
                slot = idx;
        }

        for (std::size_t i = 0; i < g.vertex_count(); ++i)
        {
            const int idx = static_cast<int>(i);
            const StableSet& alpha = g.vertex(idx);
            FacetFrame f;
            f.center = idx;
            f.members = g.neighbors(idx);
            f.tight = g.tightness(idx) == Tightness::Tight;
            if (!f.tight)
            {
                const auto profile = neighbor_profile(g, alpha);
                if (profile.immediate.size() != 2 || profile.outer.size() != 2)
                    throw VerificationError("PhiMap: loose vertex " + alpha.to_string() +
                                            " does not have 2 immediate and 2 outer neighbors");
                f.a = g.require_index(profile.immediate[0]);
                f.c = g.require_index(profile.immediate[1]);
                f.b = g.require_index(profile.outer[0]);
                f.d = g.require_index(profile.outer[1]);
            }
            else
            {
                const int parity = alpha[0] % 2;
                for (int nb : f.members)
                {
                    const auto& beta = g.vertex(nb);
                    if (g.tightness(nb) == Tightness::Tight && beta[0] % 2 != parity)
                        f.v.push_back(nb);
                    else if (f.eta < 0)
                        f.eta = nb;
                    else
                        throw VerificationError("PhiMap: tight vertex " + alpha.to_string() +
                                                " has more than one outer neighbor");
                }
                if (f.eta < 0 || f.v.size() != static_cast<std::size_t>(g.n() + 1))
                    throw VerificationError("PhiMap: unexpected neighborhood of tight vertex " + alpha.to_string());
                const StableSet& eta = g.vertex(f.eta);
                int same_parity = 0;
                for (int x : eta.elements())
                    if (x % 2 == parity)
                    {
                        f.p = x;
                        ++same_parity;
                    }
                if (same_parity != 1)
                    throw VerificationError("PhiMap: eta of " + alpha.to_string() + " has no unique element p");
                auto replaced = [&](int with) {
                    std::vector<int> e;
                    for (int x : eta.elements())
                        e.push_back(x == f.p ? wrap(with, m) : x);
                    return g.require_index(StableSet(std::move(e)));
                };
                const int low = replaced(f.p - 1);
                const int high = replaced(f.p + 1);
                auto pos = [&](int vertex) {
                    auto it = std::find(f.v.begin(), f.v.end(), vertex);
                    if (it == f.v.end())
                        throw VerificationError("PhiMap: flank of " + alpha.to_string() + " is not a tight neighbor");
                    return static_cast<std::size_t>(it - f.v.begin());
                };
                f.j = pos(low);
                if (pos(high) != (f.j + 1) % f.v.size())
                    throw VerificationError("PhiMap: flanks of " + alpha.to_string() +
                                            " are not cyclically consecutive in lex order");
            }
            frames_.push_back(std::move(f));
        }
    }

    const SchrijverGraph& graph() const { return graph_; }
    const FacetFrame& frame(int vertex) const { return frames_.at(static_cast<std::size_t>(vertex)); }

    /// Lex-first tight set of the given parity (0 = even, 1 = odd): the shared v¹ of that class.
    int first_tight(int parity) const { return first_tight_.at(static_cast<std::size_t>(parity)); }

    /// Centers γ whose facet Σ_γ contains every vertex of x.
    std::vector<int> containing_facets(const std::vector<int>& x) const
    {
        std::vector<int> common = graph_.neighbors(x.at(0));
        for (std::size_t i = 1; i < x.size() && !common.empty(); ++i)
        {
            std::vector<int> next;
            const auto& nb = graph_.neighbors(x[i]);
            std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
            common = std::move(next);
        }
        return common;
    }

    /// θ_α or φ_α of x on a single facet; x must be a sorted subset of the facet.
    QElement facet_value(const FacetFrame& f, const std::vector<int>& x) const
    {
        auto has = [&](int vertex) { return std::binary_search(x.begin(), x.end(), vertex); };
        if (!f.tight)
            return (has(f.b) && has(f.d)) ? QElement::b_loose(graph_.vertex(f.center)) : QElement::a();

        if (x.size() == 1)
            return QElement::a();
        if (has(f.eta))
        {
            for (int vertex : x)
                if (vertex != f.eta && vertex != f.v_j() && vertex != f.v_j_next())
                    return QElement::c_tight(graph_.vertex(f.center));
            return QElement::a();
        }
        // x lies in the polygon {v[0..n]}: A on its boundary cycle and the fan from v[0]
        std::vector<std::size_t> pos;
        for (int vertex : x)
            pos.push_back(static_cast<std::size_t>(std::find(f.v.begin(), f.v.end(), vertex) - f.v.begin()));
        std::sort(pos.begin(), pos.end());
        if (pos.size() == 2 && (pos[0] == 0 || pos[1] == pos[0] + 1))
            return QElement::a();
        if (pos.size() == 3 && pos[0] == 0 && pos[1] >= 1 && pos[2] == pos[1] + 1)
            return QElement::a();
        return QElement::b();
    }

    /// Φ(x): the common value over every facet containing x.
    QElement value(const std::vector<int>& x) const
    {
        const auto centers = containing_facets(x);
        if (centers.empty())
            throw std::invalid_argument("PhiMap::value: not a face of the neighborhood complex");
        QElement result = facet_value(frame(centers[0]), x);
        for (std::size_t i = 1; i < centers.size(); ++i)
        {
            QElement other = facet_value(frame(centers[i]), x);
            if (other != result)
                throw VerificationError("Phi is not well defined on a face shared by Sigma_" +
                                        graph_.vertex(centers[0]).to_string() + " (" + result.to_string() +
                                        ") and Sigma_" + graph_.vertex(centers[i]).to_string() + " (" +
                                        other.to_string() + ")");
        }
        return result;
    }

  private:
    const SchrijverGraph& graph_;
    std::vector<FacetFrame> frames_;
    std::array<int, 2> first_tight_{-1, -1};
};

/// Φ of a face given by its stable sets; builds SG_{n,2} on the fly.
inline QElement phi_value(const std::vector<StableSet>& x, int n)
{
    const SchrijverGraph g(n, 2);
    const PhiMap phi(g);
    std::vector<int> idx;
    for (const auto& s : x)
        idx.push_back(g.require_index(s));
    std::sort(idx.begin(), idx.end());
    return phi.value(idx);
}

/// Which Φ-fibers receive their matching.
struct FiberSelection
{
    bool loose_b = true;  ///< B_α fibers
    bool shared_b = true; ///< the B fiber (faces of the two pole simplices)
    bool tight_c = true;  ///< C_α fibers
};

struct FiberAudit
{
    std::size_t faces_a = 0;
    std::size_t faces_b = 0;
    std::size_t faces_b_loose = 0;
    std::size_t faces_c_tight = 0;
    std::size_t unmatched_outside_a = 0;
    std::size_t shared_faces = 0; ///< faces lying in two or more facets, all checked for agreement
    bool order_preserving = false;
    bool pairs_within_fibers = false;
};

struct PhiMatching
{
    SchrijverGraph graph;
    Complex complex;
    FacePoset poset;
    std::vector<QElement> values; ///< Φ per face id
    AcyclicMatching matching;
    FiberAudit audit;
};

/**
 * Build N(SG_{n,2}), evaluate Φ on every face, and match each selected fiber:
 * x ↔ x ∪ {a} on B_α, x ↔ x ∪ {v¹} on B, x ↔ x ∪ {v^j} on C_α.  The A fiber
 * stays unmatched.
 */
inline PhiMatching build_global_matching(int n, FiberSelection selection = {})
{
    if (n < 1)
        throw std::invalid_argument("build_global_matching: n must be >= 1");
    PhiMatching out{SchrijverGraph(n, 2), {}, {}, {}, {}, {}};
    out.complex = neighborhood_complex(out.graph);
    out.poset = face_poset(out.complex);
    const PhiMap phi(out.graph);

    // complex vertex ids coincide with graph indices: both are the stable sets in lex order
    if (out.complex.vertex_count() != out.graph.vertex_count())
        throw VerificationError("build_global_matching: N(SG) does not use every vertex");
    for (std::size_t i = 0; i < out.graph.vertex_count(); ++i)
        if (std::get<StableSet>(out.complex.label(static_cast<int>(i))) != out.graph.vertex(static_cast<int>(i)))
            throw VerificationError("build_global_matching: vertex order mismatch");

    using K = QElement::Kind;
    auto& audit = out.audit;
    out.values.reserve(out.complex.face_count());
    for (const auto& s : out.complex.faces())
    {
        out.values.push_back(phi.value(s.vertices()));
        if (phi.containing_facets(s.vertices()).size() >= 2)
            ++audit.shared_faces;
        switch (out.values.back().kind)
        {
        case K::A: ++audit.faces_a; break;
        case K::B: ++audit.faces_b; break;
        case K::BLoose: ++audit.faces_b_loose; break;
        case K::CTight: ++audit.faces_c_tight; break;
        default: break;
        }
    }

    audit.order_preserving = true;
    for (std::size_t upper = 0; upper < out.poset.size(); ++upper)
        for (int lower : out.poset.boundary[upper])
            if (!q_leq(out.values[static_cast<std::size_t>(lower)], out.values[upper]))
                audit.order_preserving = false;

    out.matching = AcyclicMatching(out.complex.face_count());
    audit.pairs_within_fibers = true;
    for (std::size_t id = 0; id < out.complex.face_count(); ++id)
    {
        const auto& s = out.complex.faces()[id];
        const QElement& q = out.values[id];
        int partner_vertex = -1;
        switch (q.kind)
        {
        case K::BLoose:
            if (selection.loose_b)
                partner_vertex = phi.frame(out.graph.require_index(q.alpha)).a;
            break;
        case K::B:
            if (selection.shared_b)
                partner_vertex = phi.first_tight(out.graph.vertex(s[0])[0] % 2);
            break;
        case K::CTight:
            if (selection.tight_c)
                partner_vertex = phi.frame(out.graph.require_index(q.alpha)).v_j();
            break;
        default: break;
        }
        if (partner_vertex < 0 || s.contains(partner_vertex))
            continue;
        auto coface = out.complex.find(s.with(partner_vertex));
        if (!coface)
            throw VerificationError("build_global_matching: partner of a " + q.to_string() + " face is not a face");
        if (out.values[static_cast<std::size_t>(*coface)] != q)
            audit.pairs_within_fibers = false;
        out.matching.add(out.poset, static_cast<int>(id), *coface);
    }

    for (std::size_t id = 0; id < out.complex.face_count(); ++id)
        if (out.values[id].kind != K::A && !out.matching.is_matched(static_cast<int>(id)))
            ++audit.unmatched_outside_a;
    return out;
}

} // namespace sgsphere

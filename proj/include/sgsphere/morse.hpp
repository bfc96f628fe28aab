/**
 * Discrete Morse theory on face posets: partial matchings, acyclicity, and
 * collapse onto the critical subcomplex.
 */
#pragma once

#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"

namespace sgsphere {

/// A Morse-theoretic failure that must be surfaced, not repaired.
class VerificationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/**
 * A partial matching on the cover relation of a face poset.  Pairs are
 * (face, coface) ids where the coface has exactly one more vertex.
 */
class AcyclicMatching
{
  public:
    AcyclicMatching() = default;
    explicit AcyclicMatching(std::size_t face_count) : partner_(face_count, -1) {}

    /// Adds a pair; rejects non-covers and faces that are already matched.
    void add(const FacePoset& poset, int face, int coface)
    {
        if (!poset.covers(face, coface))
            throw std::invalid_argument("AcyclicMatching: pair is not a cover relation");
        if (partner_.at(static_cast<std::size_t>(face)) >= 0 || partner_.at(static_cast<std::size_t>(coface)) >= 0)
            throw std::invalid_argument("AcyclicMatching: face matched twice");
        partner_[static_cast<std::size_t>(face)] = coface;
        partner_[static_cast<std::size_t>(coface)] = face;
        pairs_.emplace_back(face, coface);
    }

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    std::size_t face_count() const { return partner_.size(); }

    bool is_matched(int face) const { return partner_.at(static_cast<std::size_t>(face)) >= 0; }
    int partner(int face) const { return partner_.at(static_cast<std::size_t>(face)); }

  private:
    std::vector<int> partner_;
    std::vector<std::pair<int, int>> pairs_;
};

struct AcyclicityCertificate
{
    bool acyclic = false;
    /// Faces that could not be ordered, i.e. lie on or behind a directed cycle.
    std::size_t unresolved = 0;
    std::size_t nodes = 0;
    std::size_t arcs = 0;
};

/**
 * Acyclicity of a matching: Hasse arcs point down, matched arcs point up,
 * and the resulting digraph must have no directed cycle.  Decided by Kahn's
 * elimination over the whole digraph.
 */
inline AcyclicityCertificate verify_acyclicity(const AcyclicMatching& m, const FacePoset& p)
{
    if (m.face_count() != p.size())
        throw std::invalid_argument("verify_acyclicity: matching and poset sizes differ");
    AcyclicityCertificate cert;
    cert.nodes = p.size();
    std::vector<std::vector<int>> out(p.size());
    std::vector<std::size_t> indegree(p.size(), 0);
    for (std::size_t upper = 0; upper < p.size(); ++upper)
        for (int lower : p.boundary[upper])
        {
            const bool matched = m.partner(lower) == static_cast<int>(upper);
            int from = matched ? lower : static_cast<int>(upper);
            int to = matched ? static_cast<int>(upper) : lower;
            out[static_cast<std::size_t>(from)].push_back(to);
            ++indegree[static_cast<std::size_t>(to)];
            ++cert.arcs;
        }
    std::queue<int> ready;
    for (std::size_t v = 0; v < p.size(); ++v)
        if (indegree[v] == 0)
            ready.push(static_cast<int>(v));
    std::size_t removed = 0;
    while (!ready.empty())
    {
        int v = ready.front();
        ready.pop();
        ++removed;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indegree[static_cast<std::size_t>(w)] == 0)
                ready.push(w);
    }
    cert.unresolved = p.size() - removed;
    cert.acyclic = cert.unresolved == 0;
    return cert;
}

struct MorseReport
{
    /// c_i: critical faces per dimension.
    std::vector<std::size_t> critical;
    std::size_t matched_pairs = 0;
    AcyclicityCertificate acyclicity;
    long euler_input = 0;
    long euler_critical_cells = 0;
    std::size_t collapse_steps = 0;
};

struct CollapseResult
{
    Complex critical;
    MorseReport report;
    /// Elementary collapses in execution order, as (free face, coface) ids of the input.
    std::vector<std::pair<int, int>> sequence;
};

/**
 * Collapse `k` along an acyclic matching onto its critical faces.
 *
 * The critical faces must form a subcomplex.  The collapse is then executed
 * one elementary step at a time: a pair (σ, τ) is removed only once τ is
 * maximal and σ has τ as its sole remaining coface.
 */
inline CollapseResult collapse_to_critical(const Complex& k, const AcyclicMatching& m)
{
    const FacePoset p = face_poset(k);
    CollapseResult result;
    result.report.acyclicity = verify_acyclicity(m, p);
    if (!result.report.acyclicity.acyclic)
        throw VerificationError("collapse_to_critical: matching is not acyclic");

    result.report.critical.assign(static_cast<std::size_t>(std::max(k.dimension() + 1, 0)), 0);
    std::vector<LabeledSimplex> critical_faces;
    for (std::size_t id = 0; id < k.face_count(); ++id)
    {
        if (m.is_matched(static_cast<int>(id)))
            continue;
        ++result.report.critical[static_cast<std::size_t>(k.faces()[id].dimension())];
        for (int lower : p.boundary[id])
            if (m.is_matched(lower))
                throw VerificationError("collapse_to_critical: critical faces do not form a subcomplex");
        critical_faces.push_back(k.labels_of(k.faces()[id]));
    }
    result.report.matched_pairs = m.size();
    result.report.euler_input = euler_characteristic(k);
    for (std::size_t d = 0; d < result.report.critical.size(); ++d)
        result.report.euler_critical_cells +=
            (d % 2 == 0 ? 1 : -1) * static_cast<long>(result.report.critical[d]);

    // elementary collapses
    std::vector<std::size_t> live_cofaces(k.face_count());
    std::vector<bool> alive(k.face_count(), true);
    for (std::size_t id = 0; id < k.face_count(); ++id)
        live_cofaces[id] = p.coboundary[id].size();

    std::queue<std::pair<int, int>> ready;
    auto consider = [&](int face) {
        // face is the lower member of its pair and may now be free
        const int up = m.partner(face);
        if (up < 0 || !alive[static_cast<std::size_t>(face)] || k.face(up).size() < k.face(face).size())
            return;
        if (live_cofaces[static_cast<std::size_t>(up)] == 0 && live_cofaces[static_cast<std::size_t>(face)] == 1)
            ready.emplace(face, up);
    };
    for (const auto& [face, coface] : m.pairs())
        consider(face);

    while (!ready.empty())
    {
        auto [face, coface] = ready.front();
        ready.pop();
        if (!alive[static_cast<std::size_t>(face)])
            continue;
        if (live_cofaces[static_cast<std::size_t>(coface)] != 0 || live_cofaces[static_cast<std::size_t>(face)] != 1)
            throw VerificationError("collapse_to_critical: pair not free at removal time");
        alive[static_cast<std::size_t>(face)] = false;
        alive[static_cast<std::size_t>(coface)] = false;
        result.sequence.emplace_back(face, coface);
        for (int removed : {coface, face})
            for (int lower : p.boundary[static_cast<std::size_t>(removed)])
            {
                if (!alive[static_cast<std::size_t>(lower)])
                    continue;
                --live_cofaces[static_cast<std::size_t>(lower)];
                if (m.is_matched(lower))
                {
                    consider(lower);
                    // lower may be the upper member of a pair whose lower face just became free
                    const int partner = m.partner(lower);
                    if (k.face(partner).size() < k.face(lower).size())
                        consider(partner);
                }
            }
    }
    result.report.collapse_steps = result.sequence.size();
    if (result.sequence.size() != m.size())
        throw VerificationError("collapse_to_critical: collapse stalled after " +
                                std::to_string(result.sequence.size()) + " of " + std::to_string(m.size()) +
                                " pairs");

    result.critical = Complex::from_faces(critical_faces);
    return result;
}

} // namespace sgsphere

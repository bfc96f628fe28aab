/**
 * End-to-end verification of the sphere constructions for a range of n.
 *
 * Stages run in a fixed order and share artifacts through a lazy cache, so
 * selecting a late stage builds whatever it depends on.  A stage that throws
 * is recorded as failed with the exception text; later stages still run.
 */
#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equivariant.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "kneser.hpp"
#include "morse.hpp"
#include "phi.hpp"
#include "planarity.hpp"
#include "realization.hpp"
#include "ring_sphere.hpp"
#include "surface.hpp"

namespace sgsphere {

inline const std::vector<std::string>& all_stages()
{
    static const std::vector<std::string> stages = {"graph",    "ncomplex", "matching", "acyclicity",
                                                    "collapse", "ring",     "identity", "topology",
                                                    "steinitz", "realize",  "M",        "invariance"};
    return stages;
}

/// "all", "sphere-only", or a comma-separated list of stage names.
inline std::set<std::string> parse_stages(const std::string& selection)
{
    if (selection.empty() || selection == "all")
        return {all_stages().begin(), all_stages().end()};
    if (selection == "sphere-only")
        return {"graph", "ncomplex", "matching", "acyclicity", "collapse", "ring", "identity", "topology"};
    std::set<std::string> out;
    std::stringstream in(selection);
    std::string name;
    while (std::getline(in, name, ','))
    {
        if (std::find(all_stages().begin(), all_stages().end(), name) == all_stages().end())
            throw std::invalid_argument("unknown stage '" + name + "'");
        out.insert(name);
    }
    if (out.empty())
        throw std::invalid_argument("no stages selected");
    return out;
}

struct StageResult
{
    std::string name;
    bool passed = false;
    Json metrics = Json::object();
    std::string error;
    double seconds = 0.0;
};

struct VerificationReport
{
    int n = 0;
    std::vector<StageResult> stages;

    bool passed() const
    {
        return !stages.empty() &&
               std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.passed; });
    }
};

/// Closed-form f-vector of the ring sphere.
inline std::vector<std::size_t> ring_f_vector(int n)
{
    const auto u = static_cast<std::size_t>(n);
    return {(u + 1) * (u + 1), 3 * (u * u + 2 * u - 1), 2 * u * u + 4 * u - 2};
}

/// The cap triangle of P_n at the even anchor, used as the outer face.
inline LabeledSimplex default_outer_face(const RingLayout& layout)
{
    const auto& cap = layout.rings.back();
    LabeledSimplex t{cap[0], cap[1], cap[2]};
    std::sort(t.begin(), t.end());
    return t;
}

/// Artifacts shared between the stages of one n.
class PipelineState
{
  public:
    explicit PipelineState(int n) : n_(n) {}

    int n() const { return n_; }

    const SchrijverGraph& graph()
    {
        if (!graph_)
            graph_.emplace(n_, 2);
        return *graph_;
    }
    const PhiMatching& matching()
    {
        if (!matching_)
            matching_.emplace(build_global_matching(n_));
        return *matching_;
    }
    const CollapseResult& collapse()
    {
        if (!collapse_)
            collapse_.emplace(collapse_to_critical(matching().complex, matching().matching));
        return *collapse_;
    }
    const RingComplex& ring()
    {
        if (!ring_)
            ring_.emplace(build_ring_complex(n_));
        return *ring_;
    }
    const MConstruction& m_complex()
    {
        if (!m_)
            m_.emplace(build_M(n_));
        return *m_;
    }

  private:
    int n_;
    std::optional<SchrijverGraph> graph_;
    std::optional<PhiMatching> matching_;
    std::optional<CollapseResult> collapse_;
    std::optional<RingComplex> ring_;
    std::optional<MConstruction> m_;
};

namespace stages {

using Outcome = std::pair<bool, Json>;

inline Outcome graph(PipelineState& st)
{
    const int n = st.n();
    const auto& g = st.graph();
    std::size_t tight = 0, loose_deg4 = 0, tight_one_outer = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
    {
        const int i = static_cast<int>(v);
        if (g.tightness(i) == Tightness::Tight)
        {
            ++tight;
            if (n >= 2 && neighbor_profile(g, g.vertex(i)).outer.size() == 1)
                ++tight_one_outer;
        }
        else if (g.neighbors(i).size() == 4)
        {
            const auto p = neighbor_profile(g, g.vertex(i));
            if (p.immediate.size() == 2 && p.outer.size() == 2)
                ++loose_deg4;
        }
    }
    const std::size_t loose = g.vertex_count() - tight;
    bool bipartite = true;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
        {
            const int a = static_cast<int>(u), b = static_cast<int>(v);
            if (g.tightness(a) == Tightness::Tight && g.tightness(b) == Tightness::Tight)
                bipartite = bipartite && g.adjacent(a, b) == (g.vertex(a)[0] % 2 != g.vertex(b)[0] % 2);
        }
    const auto un = static_cast<std::size_t>(n);
    const bool ok = g.vertex_count() == (un + 1) * (un + 1) && tight == 2 * (un + 1) && loose == un * un - 1 &&
                    loose_deg4 == loose && (n < 2 || (tight_one_outer == tight && bipartite));
    return {ok,
            {{"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"tight", tight},
             {"loose", loose},
             {"loose_degree_4", loose_deg4},
             {"tight_with_one_outer", tight_one_outer},
             {"tights_complete_bipartite", bipartite}}};
}

inline Outcome ncomplex(PipelineState& st)
{
    const Complex k = neighborhood_complex(st.graph());
    const bool ok = k.facets().size() <= st.graph().vertex_count();
    return {ok, {{"f_vector", k.f_vector()}, {"facets", k.facets().size()}, {"euler", euler_characteristic(k)}}};
}

inline Outcome matching(PipelineState& st)
{
    const auto& pm = st.matching();
    const auto& a = pm.audit;
    const bool ok = a.order_preserving && a.pairs_within_fibers && a.unmatched_outside_a == 0;
    return {ok, {{"matched_pairs", pm.matching.size()}, {"audit", to_json(a)}}};
}

inline Outcome acyclicity(PipelineState& st)
{
    const auto cert = verify_acyclicity(st.matching().matching, st.matching().poset);
    return {cert.acyclic, to_json(cert)};
}

inline Outcome collapse(PipelineState& st)
{
    const auto& c = st.collapse();
    const auto f = c.critical.f_vector();
    const bool euler_ok = c.report.euler_input == c.report.euler_critical_cells;
    const bool ok = euler_ok && (st.n() < 2 || f == ring_f_vector(st.n()));
    return {ok, {{"critical_f_vector", f}, {"report", to_json(c.report)}}};
}

inline Outcome ring(PipelineState& st)
{
    const auto& rc = st.ring();
    const auto f = rc.complex.f_vector();
    return {f == ring_f_vector(st.n()),
            {{"f_vector", f}, {"expected", ring_f_vector(st.n())}, {"cap_diagonals", rc.layout.cap_diagonals.size()}}};
}

inline Outcome identity(PipelineState& st)
{
    const bool same = complexes_identical(st.ring().complex, st.collapse().critical);
    return {same, {{"identical", same}}};
}

inline Outcome topology(PipelineState& st)
{
    const int n = st.n();
    const auto full = homology(st.matching().complex);
    const bool full_ok = full.matches_betti({1, 0, 1});
    if (n == 1)
    {
        // N(SG_{1,2}) is the boundary of the tetrahedron
        const auto& k = st.matching().complex;
        const auto surface = surface_check(k);
        const bool ok = surface.is_sphere && k.f_vector() == std::vector<std::size_t>{4, 6, 4} && full_ok;
        return {ok, {{"special_case", "boundary of tetrahedron"}, {"surface", to_json(surface)}, {"homology", to_json(full)}}};
    }
    const auto surface = surface_check(st.ring().complex);
    const auto h = homology(st.ring().complex);
    const bool ok = surface.is_sphere && h.matches_betti({1, 0, 1}) && full_ok;
    return {ok,
            {{"surface", to_json(surface)}, {"homology_ring", to_json(h)}, {"homology_neighborhood_complex", to_json(full)}}};
}

inline Outcome steinitz(PipelineState& st)
{
    const auto r = steinitz_check(st.ring().complex, st.ring().rotation);
    return {r.passed(), to_json(r)};
}

inline Outcome realize(PipelineState& st)
{
    const auto r = realize_polytope(st.ring().complex, default_outer_face(st.ring().layout));
    return {r.margin > 1e-9,
            {{"convexity_margin", r.margin},
             {"facets_checked", r.facets.size()},
             {"lift_residual", r.lift_residual},
             {"equilibrium_residual", r.equilibrium_residual}}};
}

inline Outcome m_complex(PipelineState& st)
{
    const auto& m = st.m_complex();
    const auto surface = surface_check(m.pipeline);
    const auto rs = rotation_from_surface(m.pipeline);
    const auto steinitz = rs ? std::optional(steinitz_check(m.pipeline, *rs)) : std::nullopt;
    const bool ok = complexes_identical(m.pipeline, m.direct) && surface.is_sphere && steinitz && steinitz->passed() &&
                    m.psi_report.acyclicity.acyclic;
    Json metrics = {{"f_vector", m.pipeline.f_vector()},
                    {"collapsed_f_vector", m.collapsed_f_vector},
                    {"subdivided_f_vector", m.subdivided.f_vector()},
                    {"psi", to_json(m.psi_report)},
                    {"pipeline_equals_direct", complexes_identical(m.pipeline, m.direct)},
                    {"surface", to_json(surface)}};
    if (steinitz)
        metrics["steinitz"] = to_json(*steinitz);
    return {ok, metrics};
}

inline Outcome invariance(PipelineState& st)
{
    const int n = st.n();
    const auto autos = verify_automorphisms(st.graph());
    const auto orbit = check_invariance(st.m_complex().pipeline, n);
    const auto ring_orbit = check_invariance(st.ring().complex, n);
    const OrbitEntry witness = check_element(st.ring().complex, DihedralElement{2 * n + 2, 2, false});
    // n = 2 has no cap diagonals, so no asymmetry is expected there
    const bool witness_ok = n == 2 || (!witness.invariant && witness.violating_facet.has_value());
    Json w = {{"element", witness.element.to_string()}, {"invariant", witness.invariant}};
    if (witness.violating_facet)
    {
        w["violating_facet"] = labels_json(*witness.violating_facet);
        w["image"] = labels_json(*witness.image);
    }
    const bool ok = autos.passed(2 * n + 2) && orbit.invariant() && witness_ok;
    return {ok,
            {{"automorphisms",
              {{"elements", autos.elements},
               {"distinct_permutations", autos.distinct_permutations},
               {"closed_under_composition", autos.closed_under_composition},
               {"preserve_stability", autos.preserves_stability},
               {"preserve_adjacency", autos.preserves_adjacency}}},
             {"M_invariant", orbit.invariant()},
             {"ring_invariant", ring_orbit.invariant()},
             {"ring_rotation_by_2", w}}};
}

} // namespace stages

/// Stages that apply at this n.  n = 1 only supports the tetrahedron special case.
inline bool stage_applies(const std::string& name, int n)
{
    if (n >= 2)
        return true;
    return name == "graph" || name == "ncomplex" || name == "matching" || name == "acyclicity" ||
           name == "collapse" || name == "topology";
}

inline VerificationReport verify_one(int n, const std::set<std::string>& selected)
{
    static const std::map<std::string, std::function<stages::Outcome(PipelineState&)>> table = {
        {"graph", stages::graph},       {"ncomplex", stages::ncomplex},   {"matching", stages::matching},
        {"acyclicity", stages::acyclicity}, {"collapse", stages::collapse}, {"ring", stages::ring},
        {"identity", stages::identity}, {"topology", stages::topology},   {"steinitz", stages::steinitz},
        {"realize", stages::realize},   {"M", stages::m_complex},         {"invariance", stages::invariance}};
    VerificationReport report;
    report.n = n;
    PipelineState state(n);
    for (const auto& name : all_stages())
    {
        if (!selected.count(name) || !stage_applies(name, n))
            continue;
        StageResult result;
        result.name = name;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            auto [ok, metrics] = table.at(name)(state);
            result.passed = ok;
            result.metrics = std::move(metrics);
        }
        catch (const std::exception& e)
        {
            result.passed = false;
            result.error = e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.stages.push_back(std::move(result));
    }
    return report;
}

/// One report per n in [n_min, n_max], computed concurrently and returned in order.
inline std::vector<VerificationReport> run_verify(int n_min, int n_max, const std::set<std::string>& selected)
{
    if (n_min < 1 || n_max < n_min)
        throw std::invalid_argument("run_verify: need 1 <= n_min <= n_max");
    std::vector<std::future<VerificationReport>> jobs;
    for (int n = n_min; n <= n_max; ++n)
        jobs.push_back(std::async(std::launch::async, verify_one, n, selected));
    std::vector<VerificationReport> out;
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

/// Wall-clock times are left out unless asked for, so that reports stay reproducible.
inline Json to_json(const std::vector<VerificationReport>& reports, bool include_timings = false)
{
    Json runs = Json::array();
    bool all = true;
    for (const auto& r : reports)
    {
        Json stages = Json::array();
        for (const auto& s : r.stages)
        {
            Json j = {{"stage", s.name}, {"passed", s.passed}, {"metrics", s.metrics}};
            if (!s.error.empty())
                j["error"] = s.error;
            if (include_timings)
                j["seconds"] = s.seconds;
            stages.push_back(std::move(j));
        }
        runs.push_back({{"n", r.n}, {"passed", r.passed()}, {"stages", stages}});
        all = all && r.passed();
    }
    return {{"passed", all}, {"runs", runs}};
}

} // namespace sgsphere

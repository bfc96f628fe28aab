/**
 * Serialization: JSON reports and exports, OFF meshes, and DOT graphs.
 *
 * JSON objects keep insertion order and doubles are written by the JSON
 * library's shortest round-trip formatter, so identical inputs produce
 * byte-identical output.
 */
#pragma once

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "complex.hpp"
#include "equivariant.hpp"
#include "homology.hpp"
#include "kneser.hpp"
#include "morse.hpp"
#include "phi.hpp"
#include "planarity.hpp"
#include "realization.hpp"
#include "surface.hpp"

namespace sgsphere {

using Json = nlohmann::ordered_json;

inline Json labels_json(const LabeledSimplex& s)
{
    Json out = Json::array();
    for (const auto& l : s)
        out.push_back(to_string(l));
    return out;
}

inline Json to_json(const SchrijverGraph& g)
{
    Json vertices = Json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"label", g.vertex(static_cast<int>(v)).to_string()},
                            {"tight", g.tightness(static_cast<int>(v)) == Tightness::Tight}});
    Json edges = Json::array();
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (int w : g.neighbors(static_cast<int>(u)))
            if (static_cast<int>(u) < w)
                edges.push_back({u, w});
    return {{"n", g.n()}, {"k", g.k()}, {"vertices", vertices}, {"edges", edges}};
}

inline Json to_json(const Complex& k)
{
    Json vertices = Json::array();
    for (const auto& l : k.vertices())
        vertices.push_back(to_string(l));
    Json faces = Json::array();
    for (const auto& s : k.faces())
        faces.push_back(s.vertices());
    Json facets = Json::array();
    for (int id : k.facets())
        facets.push_back(labels_json(k.labels_of(k.face(id))));
    return {{"vertices", vertices},
            {"f_vector", k.f_vector()},
            {"euler", euler_characteristic(k)},
            {"facets", facets},
            {"faces", faces}};
}

inline Json to_json(const PolytopeRealization& r)
{
    Json vertices = Json::array();
    for (std::size_t v = 0; v < r.coords.size(); ++v)
        vertices.push_back({{"label", to_string(r.labels[v])},
                            {"xyz", {r.coords[v].x(), r.coords[v].y(), r.coords[v].z()}}});
    Json facets = Json::array();
    for (std::size_t f = 0; f < r.facets.size(); ++f)
    {
        const auto& [normal, offset] = r.planes[f];
        facets.push_back({{"vertices", r.facets[f]},
                          {"normal", {normal.x(), normal.y(), normal.z()}},
                          {"offset", offset}});
    }
    return {{"vertices", vertices},
            {"facets", facets},
            {"outer", r.outer},
            {"convexity_margin", r.margin},
            {"lift_residual", r.lift_residual},
            {"equilibrium_residual", r.equilibrium_residual}};
}

inline Json to_json(const AcyclicityCertificate& c)
{
    return {{"acyclic", c.acyclic}, {"unresolved", c.unresolved}, {"nodes", c.nodes}, {"arcs", c.arcs}};
}

inline Json to_json(const MorseReport& r)
{
    return {{"critical", r.critical},
            {"matched_pairs", r.matched_pairs},
            {"acyclicity", to_json(r.acyclicity)},
            {"euler_input", r.euler_input},
            {"euler_critical_cells", r.euler_critical_cells},
            {"collapse_steps", r.collapse_steps}};
}

inline Json to_json(const FiberAudit& a)
{
    return {{"faces_A", a.faces_a},
            {"faces_B", a.faces_b},
            {"faces_B_alpha", a.faces_b_loose},
            {"faces_C_alpha", a.faces_c_tight},
            {"unmatched_outside_A", a.unmatched_outside_a},
            {"shared_faces_checked", a.shared_faces},
            {"order_preserving", a.order_preserving},
            {"pairs_within_fibers", a.pairs_within_fibers}};
}

inline Json to_json(const OrbitReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries)
    {
        Json entry = {{"element", e.element.to_string()}, {"invariant", e.invariant}};
        if (e.violating_facet)
        {
            entry["violating_facet"] = labels_json(*e.violating_facet);
            entry["image"] = labels_json(*e.image);
        }
        entries.push_back(std::move(entry));
    }
    return {{"invariant", r.invariant()}, {"elements", entries}};
}

inline Json to_json(const SurfaceReport& r)
{
    return {{"is_sphere", r.is_sphere},
            {"pure_2d", r.pure_2d},
            {"edges_in_two_triangles", r.edges_in_two_triangles},
            {"connected", r.connected},
            {"vertex_links_are_cycles", r.vertex_links_are_cycles},
            {"euler", r.euler},
            {"issues", r.issues}};
}

inline Json to_json(const HomologyProfile& h)
{
    Json torsion = Json::array();
    for (const auto& t : h.torsion)
    {
        Json row = Json::array();
        for (const auto& x : t)
            row.push_back(x.str());
        torsion.push_back(std::move(row));
    }
    return {{"betti", h.betti}, {"torsion", torsion}};
}

inline Json to_json(const SteinitzReport& r)
{
    Json out = {{"vertices", r.vertices},
                {"edges", r.edges},
                {"faces", r.faces},
                {"euler", r.euler},
                {"simple", r.simple},
                {"planar_rotation", r.planar_rotation},
                {"planar_boyer_myrvold", r.planar_boyer_myrvold},
                {"min_connectivity", r.min_connectivity},
                {"three_connected", r.three_connected}};
    if (r.faces_match_triangles)
        out["faces_match_triangles"] = *r.faces_match_triangles;
    out["passed"] = r.passed();
    return out;
}

enum class ExportFormat
{
    Json,
    Off,
    Dot
};

inline ExportFormat parse_format(const std::string& s)
{
    if (s == "json")
        return ExportFormat::Json;
    if (s == "off")
        return ExportFormat::Off;
    if (s == "dot")
        return ExportFormat::Dot;
    throw std::invalid_argument("unknown export format '" + s + "'");
}

/// Something to export; monostate is the empty selection.
using Exportable = std::variant<std::monostate, SchrijverGraph, Complex, PolytopeRealization>;

inline std::string to_off(const PolytopeRealization& r)
{
    const std::size_t edges = 3 * r.facets.size() / 2;
    std::ostringstream out;
    out << "OFF\n" << r.coords.size() << ' ' << r.facets.size() << ' ' << edges << '\n';
    char buf[96];
    for (const auto& c : r.coords)
    {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", c.x(), c.y(), c.z());
        out << buf;
    }
    for (const auto& f : r.facets)
        out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    return out.str();
}

inline std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

inline std::string to_dot(const std::vector<std::string>& names, const Adjacency& adj, const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (const auto& v : names)
        out << "  " << dot_quote(v) << ";\n";
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (int w : adj[u])
            if (static_cast<int>(u) < w)
                out << "  " << dot_quote(names[u]) << " -- " << dot_quote(names[static_cast<std::size_t>(w)]) << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string render(const Exportable& object, ExportFormat format)
{
    if (std::holds_alternative<std::monostate>(object))
        throw std::invalid_argument("export: nothing selected");

    if (format == ExportFormat::Json)
        return std::visit(
                   [](const auto& o) -> Json {
                       if constexpr (std::is_same_v<std::decay_t<decltype(o)>, std::monostate>)
                           return {};
                       else
                           return to_json(o);
                   },
                   object)
                   .dump(2) +
               "\n";

    if (format == ExportFormat::Off)
    {
        if (const auto* r = std::get_if<PolytopeRealization>(&object))
            return to_off(*r);
        throw std::invalid_argument("export: OFF needs coordinates; only a polytope realization has them");
    }

    std::vector<std::string> names;
    if (const auto* g = std::get_if<SchrijverGraph>(&object))
    {
        for (const auto& v : g->vertices())
            names.push_back(v.to_string());
        Adjacency adj;
        for (std::size_t v = 0; v < g->vertex_count(); ++v)
            adj.push_back(g->neighbors(static_cast<int>(v)));
        return to_dot(names, adj, "SG");
    }
    if (const auto* k = std::get_if<Complex>(&object))
    {
        for (const auto& l : k->vertices())
            names.push_back(to_string(l));
        return to_dot(names, one_skeleton(*k), "skeleton");
    }
    const auto& r = std::get<PolytopeRealization>(object);
    for (const auto& l : r.labels)
        names.push_back(to_string(l));
    Adjacency adj(r.labels.size());
    for (const auto& f : r.facets)
        for (std::size_t i = 0; i < 3; ++i)
        {
            const int a = f[i];
            const int b = f[(i + 1) % 3];
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
    for (auto& row : adj)
    {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return to_dot(names, adj, "polytope");
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace sgsphere

/**
 * Vertex labels for the complexes built here: plain stable sets, edge
 * midpoints and cap barycenters introduced by subdivision, and generic flag
 * vertices of a barycentric subdivision.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "stable_set.hpp"

namespace sgsphere {

/// Midpoint of the edge between two distinct stable sets; `first < second`.
struct Midpoint
{
    StableSet first;
    StableSet second;

    auto operator<=>(const Midpoint&) const = default;
    bool operator==(const Midpoint&) const = default;
};

enum class Parity
{
    Odd,
    Even
};

struct Barycenter
{
    Parity parity = Parity::Odd;

    auto operator<=>(const Barycenter&) const = default;
    bool operator==(const Barycenter&) const = default;
};

/// Vertex of a barycentric subdivision: a nonempty set of original vertices, sorted.
struct Flag
{
    std::vector<StableSet> members;

    auto operator<=>(const Flag&) const = default;
    bool operator==(const Flag&) const = default;
};

using VertexLabel = std::variant<StableSet, Midpoint, Barycenter, Flag>;

inline Midpoint make_midpoint(StableSet a, StableSet b)
{
    if (a == b)
        throw std::invalid_argument("make_midpoint: endpoints must differ");
    if (b < a)
        std::swap(a, b);
    return Midpoint{std::move(a), std::move(b)};
}

inline Flag make_flag(std::vector<StableSet> members)
{
    if (members.empty())
        throw std::invalid_argument("make_flag: empty flag");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Flag{std::move(members)};
}

inline Parity parity_of(const StableSet& tight) { return tight[0] % 2 == 0 ? Parity::Even : Parity::Odd; }

/// Canonical string: "1.3.5", "mid(1.3|3.5)", "b_odd", "flag(1.3|1.5)".
inline std::string to_string(const VertexLabel& label)
{
    struct Visitor
    {
        std::string operator()(const StableSet& s) const { return s.to_string(); }
        std::string operator()(const Midpoint& m) const
        {
            return "mid(" + m.first.to_string() + "|" + m.second.to_string() + ")";
        }
        std::string operator()(const Barycenter& b) const
        {
            return b.parity == Parity::Odd ? "b_odd" : "b_even";
        }
        std::string operator()(const Flag& f) const
        {
            std::string out = "flag(";
            for (std::size_t i = 0; i < f.members.size(); ++i)
            {
                if (i)
                    out += '|';
                out += f.members[i].to_string();
            }
            return out + ")";
        }
    };
    return std::visit(Visitor{}, label);
}

} // namespace sgsphere

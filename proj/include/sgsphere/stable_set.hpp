/**
 * Stable n-subsets of the cyclic ground set [2n + k].
 *
 * Ground elements are 1-based; all arithmetic on elements is taken modulo the
 * ground size m = 2n + k and mapped back into [1, m] (so 0 becomes m).
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgsphere {

/// Reduce an arbitrary integer to its representative in [1, m].
inline int wrap(int x, int m)
{
    int r = (x - 1) % m;
    if (r < 0)
        r += m;
    return r + 1;
}

/**
 * A sorted, duplicate-free set of ground elements.
 *
 * The type does not carry the ground size; stability is a property checked
 * against a given m with `is_stable`.  Everything produced by
 * `enumerate_stable_sets` and `rotate` is stable by construction.
 */
class StableSet
{
  public:
    StableSet() = default;

    explicit StableSet(std::vector<int> elements) : elems_(std::move(elements))
    {
        std::sort(elems_.begin(), elems_.end());
        if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
            throw std::invalid_argument("StableSet: duplicate element");
    }

    StableSet(std::initializer_list<int> elements) : StableSet(std::vector<int>(elements)) {}

    const std::vector<int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    int operator[](std::size_t i) const { return elems_[i]; }

    bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

    /// Lexicographic order on the sorted element tuples.
    auto operator<=>(const StableSet&) const = default;
    bool operator==(const StableSet&) const = default;

    /// Canonical dotted form, e.g. "1.3.5".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < elems_.size(); ++i)
        {
            if (i)
                out += '.';
            out += std::to_string(elems_[i]);
        }
        return out;
    }

  private:
    std::vector<int> elems_;
};

/// True iff `s` has no two cyclically adjacent elements of [m].
inline bool is_stable(const StableSet& s, int m)
{
    const auto& e = s.elements();
    for (int x : e)
        if (x < 1 || x > m)
            return false;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i + 1] == e[i] + 1)
            return false;
    // {1, m} is the wrap-around adjacency; a 1-element set over [m] is always stable.
    if (e.size() >= 2 && e.front() == 1 && e.back() == m)
        return false;
    return true;
}

/// Elementwise shift by j modulo m, re-sorted.
inline StableSet rotate(const StableSet& s, int j, int m)
{
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s.elements())
        out.push_back(wrap(x + j, m));
    return StableSet(std::move(out));
}

inline std::size_t intersection_size(const StableSet& a, const StableSet& b)
{
    std::size_t count = 0;
    auto i = a.elements().begin();
    auto j = b.elements().begin();
    while (i != a.elements().end() && j != b.elements().end())
    {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
        {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

inline bool disjoint(const StableSet& a, const StableSet& b) { return intersection_size(a, b) == 0; }

inline StableSet set_union(const StableSet& a, const StableSet& b)
{
    std::vector<int> out;
    std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                   std::back_inserter(out));
    return StableSet(std::move(out));
}

inline StableSet set_intersection(const StableSet& a, const StableSet& b)
{
    std::vector<int> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(out));
    return StableSet(std::move(out));
}

inline StableSet odd_part(const StableSet& s)
{
    std::vector<int> out;
    for (int x : s.elements())
        if (x % 2 != 0)
            out.push_back(x);
    return StableSet(std::move(out));
}

inline StableSet even_part(const StableSet& s)
{
    std::vector<int> out;
    for (int x : s.elements())
        if (x % 2 == 0)
            out.push_back(x);
    return StableSet(std::move(out));
}

inline std::size_t count_even(const StableSet& s) { return even_part(s).size(); }

/**
 * All stable n-subsets of [2n + k] in lexicographic order.
 *
 * Generated by a depth-first walk that never places two consecutive
 * elements, then filtered for the {1, 2n + k} wrap-around pair.
 */
inline std::vector<StableSet> enumerate_stable_sets(int n, int k)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_stable_sets: n must be >= 1");
    if (k < 0)
        throw std::invalid_argument("enumerate_stable_sets: k must be >= 0");
    const int m = 2 * n + k;

    std::vector<StableSet> out;
    std::vector<int> current;
    current.reserve(n);
    auto walk = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == n)
        {
            if (!(n >= 2 && current.front() == 1 && current.back() == m))
                out.emplace_back(current);
            return;
        }
        const int remaining = n - static_cast<int>(current.size());
        // each remaining element needs a gap of one after it
        for (int x = next; x + 2 * (remaining - 1) <= m; ++x)
        {
            current.push_back(x);
            self(self, x + 2);
            current.pop_back();
        }
    };
    walk(walk, 1);
    return out;
}

enum class Tightness
{
    Tight,
    Loose
};

/// Tight iff s = {i, i+2, ..., i+2(n-1)} mod 2n + k for some i.
inline Tightness classify(const StableSet& s, int n, int k)
{
    const int m = 2 * n + k;
    for (int i = 1; i <= m; ++i)
    {
        std::vector<int> candidate;
        candidate.reserve(n);
        for (int t = 0; t < n; ++t)
            candidate.push_back(wrap(i + 2 * t, m));
        std::sort(candidate.begin(), candidate.end());
        if (std::adjacent_find(candidate.begin(), candidate.end()) != candidate.end())
            continue;
        if (candidate == s.elements())
            return Tightness::Tight;
    }
    return Tightness::Loose;
}

} // namespace sgsphere

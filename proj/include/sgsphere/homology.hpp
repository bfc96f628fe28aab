/**
 * Integral simplicial homology through Smith normal form of boundary
 * matrices, computed over arbitrary-precision integers.
 *
 * Boundary matrices of the complexes handled here are very sparse and almost
 * entirely eliminable with ±1 pivots.  Those pivots are taken first (each is
 * a unit invariant factor); whatever survives is reduced by a dense Smith
 * normal form.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <vector>

#include "complex.hpp"

namespace sgsphere {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix.
struct SparseIntMatrix
{
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, BigInt>> columns;

    SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    void set(int r, int c, BigInt value)
    {
        if (value == 0)
            columns[static_cast<std::size_t>(c)].erase(r);
        else
            columns[static_cast<std::size_t>(c)][r] = std::move(value);
    }
};

namespace detail {

/// Nonzero diagonal of the Smith normal form of a dense matrix, each entry positive.
inline std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<BigInt> diag;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    {
        // smallest nonzero entry of the trailing block becomes the pivot
        auto bring_min_to_pivot = [&]() -> bool {
            bool found = false;
            std::size_t bi = t, bj = t;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < best))
                    {
                        best = abs(a[i][j]);
                        bi = i;
                        bj = j;
                        found = true;
                    }
            if (!found)
                return false;
            std::swap(a[t], a[bi]);
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a[i][t], a[i][bj]);
            return true;
        };

        if (!bring_min_to_pivot())
            break;

        while (true)
        {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i)
            {
                if (a[i][t] == 0)
                    continue;
                BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j)
            {
                if (a[t][j] == 0)
                    continue;
                BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    dirty = true;
            }
            if (dirty)
            {
                // a remainder smaller than the pivot exists in row or column t
                BigInt best = abs(a[t][t]);
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < best)
                    {
                        best = abs(a[i][t]);
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < best)
                    {
                        best = abs(a[t][j]);
                        bi = t;
                        bj = j;
                    }
                std::swap(a[t], a[bi]);
                for (std::size_t i = 0; i < rows; ++i)
                    std::swap(a[i][t], a[i][bj]);
                continue;
            }
            // divisibility: the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0)
                    {
                        for (std::size_t jj = t; jj < cols; ++jj)
                            a[t][jj] += a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

} // namespace detail

/**
 * Nonzero invariant factors of `m` in divisibility order.  Unit factors come
 * first; the rank is the length of the result.
 */
inline std::vector<BigInt> invariant_factors(SparseIntMatrix m)
{
    std::vector<std::set<int>> row_index(static_cast<std::size_t>(m.rows));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)])
            row_index[static_cast<std::size_t>(r)].insert(c);

    std::vector<bool> col_alive(static_cast<std::size_t>(m.cols), true);
    std::size_t unit_pivots = 0;

    bool progress = true;
    while (progress)
    {
        progress = false;
        for (int c = 0; c < m.cols; ++c)
        {
            auto& col = m.columns[static_cast<std::size_t>(c)];
            if (!col_alive[static_cast<std::size_t>(c)] || col.empty())
                continue;
            int pivot_row = -1;
            std::size_t best_fill = 0;
            for (const auto& [r, v] : col)
                if (v == 1 || v == -1)
                {
                    std::size_t fill = row_index[static_cast<std::size_t>(r)].size();
                    if (pivot_row < 0 || fill < best_fill)
                    {
                        pivot_row = r;
                        best_fill = fill;
                    }
                }
            if (pivot_row < 0)
                continue;

            const BigInt unit = col.at(pivot_row);
            const std::vector<int> others(row_index[static_cast<std::size_t>(pivot_row)].begin(),
                                          row_index[static_cast<std::size_t>(pivot_row)].end());
            for (int c2 : others)
            {
                if (c2 == c)
                    continue;
                auto& target = m.columns[static_cast<std::size_t>(c2)];
                const BigInt factor = target.at(pivot_row) * unit;
                for (const auto& [r, v] : col)
                {
                    BigInt updated = target.count(r) ? BigInt(target[r] - factor * v) : BigInt(-factor * v);
                    if (updated == 0)
                    {
                        target.erase(r);
                        row_index[static_cast<std::size_t>(r)].erase(c2);
                    }
                    else
                    {
                        target[r] = std::move(updated);
                        row_index[static_cast<std::size_t>(r)].insert(c2);
                    }
                }
            }
            for (const auto& [r, v] : col)
                row_index[static_cast<std::size_t>(r)].erase(c);
            col.clear();
            col_alive[static_cast<std::size_t>(c)] = false;
            ++unit_pivots;
            progress = true;
        }
    }

    std::vector<int> live_rows;
    for (int r = 0; r < m.rows; ++r)
        if (!row_index[static_cast<std::size_t>(r)].empty())
            live_rows.push_back(r);
    std::vector<int> live_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!m.columns[static_cast<std::size_t>(c)].empty())
            live_cols.push_back(c);

    std::vector<BigInt> factors(unit_pivots, BigInt(1));
    if (!live_rows.empty() && !live_cols.empty())
    {
        std::map<int, std::size_t> row_pos;
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            row_pos[live_rows[i]] = i;
        std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& [r, v] : m.columns[static_cast<std::size_t>(live_cols[j])])
                dense[row_pos.at(r)][j] = v;
        for (auto& d : detail::dense_smith_diagonal(std::move(dense)))
            factors.push_back(std::move(d));
    }
    return factors;
}

/// Boundary map from d-faces (columns) to (d-1)-faces (rows), d >= 1.
inline SparseIntMatrix boundary_matrix(const Complex& k, int d)
{
    auto [lo, hi] = k.dimension_range(d);
    auto [rlo, rhi] = k.dimension_range(d - 1);
    SparseIntMatrix m(rhi - rlo, hi - lo);
    for (int id = lo; id < hi; ++id)
    {
        const auto& s = k.face(id);
        for (std::size_t i = 0; i < s.size(); ++i)
        {
            int row = *k.find(s.without(s[i])) - rlo;
            m.set(row, id - lo, BigInt(i % 2 == 0 ? 1 : -1));
        }
    }
    return m;
}

struct HomologyProfile
{
    std::vector<long> betti;
    std::vector<std::vector<BigInt>> torsion;

    long betti_number(std::size_t d) const { return d < betti.size() ? betti[d] : 0; }

    bool torsion_free() const
    {
        for (const auto& t : torsion)
            if (!t.empty())
                return false;
        return true;
    }

    /// True iff H_d = Z for d in `dims` and zero otherwise, with no torsion.
    bool matches_betti(const std::vector<long>& expected) const
    {
        if (!torsion_free())
            return false;
        for (std::size_t d = 0; d < std::max(expected.size(), betti.size()); ++d)
            if (betti_number(d) != (d < expected.size() ? expected[d] : 0))
                return false;
        return true;
    }
};

inline HomologyProfile homology(const Complex& k)
{
    HomologyProfile h;
    const int top = k.dimension();
    if (top < 0)
        return h;
    const auto f = k.f_vector();
    // factors[d] = invariant factors of the boundary out of dimension d
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top + 2));
    for (int d = 1; d <= top; ++d)
        factors[static_cast<std::size_t>(d)] = invariant_factors(boundary_matrix(k, d));

    for (int d = 0; d <= top; ++d)
    {
        const long rank_out = static_cast<long>(factors[static_cast<std::size_t>(d)].size());
        const long rank_in = static_cast<long>(factors[static_cast<std::size_t>(d + 1)].size());
        h.betti.push_back(static_cast<long>(f[static_cast<std::size_t>(d)]) - rank_out - rank_in);
        std::vector<BigInt> tors;
        for (const auto& x : factors[static_cast<std::size_t>(d + 1)])
            if (x > 1)
                tors.push_back(x);
        h.torsion.push_back(std::move(tors));
    }
    return h;
}

} // namespace sgsphere

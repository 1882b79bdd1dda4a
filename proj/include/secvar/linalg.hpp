#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "secvar/errors.hpp"
#include "secvar/field.hpp"

namespace secvar {

// Dense row-major matrix over any element type.
template <class T>
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const T& fill) : rows(r), cols(c), data(r * c, fill) {}

    T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
};

template <class T>
Mat<T> transpose(const Mat<T>& m, const T& fill) {
    Mat<T> out(m.cols, m.rows, fill);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

// Row-echelon rank over a field context. First-nonzero pivot scan keeps the
// elimination order, and therefore every downstream report, reproducible.
template <class Ctx>
std::size_t rank(const Ctx& f, Mat<typename Ctx::Elem> m) {
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
        std::size_t piv = m.rows;
        for (std::size_t i = rk; i < m.rows; ++i) {
            if (!f.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        }
        if (piv == m.rows) continue;
        m.swap_rows(rk, piv);
        const auto scale = f.inv(m.at(rk, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(rk, j) = f.mul(m.at(rk, j), scale);
        for (std::size_t i = rk + 1; i < m.rows; ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            const auto factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

// Leftmost column set whose count x count block on the pivot rows is
// invertible; exactly the echelon pivot columns.
template <class Ctx>
std::vector<std::size_t> choose_pivot_columns(const Ctx& f, const Mat<typename Ctx::Elem>& m,
                                              std::size_t count) {
    if (count > m.rows)
        throw RankDeficient("asked for " + std::to_string(count) + " pivots from " +
                            std::to_string(m.rows) + " rows");
    Mat<typename Ctx::Elem> w = m;
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < w.cols && pivots.size() < count; ++col) {
        std::size_t piv = w.rows;
        for (std::size_t i = rk; i < w.rows; ++i) {
            if (!f.is_zero(w.at(i, col))) {
                piv = i;
                break;
            }
        }
        if (piv == w.rows) continue;
        w.swap_rows(rk, piv);
        const auto scale = f.inv(w.at(rk, col));
        for (std::size_t j = col; j < w.cols; ++j) w.at(rk, j) = f.mul(w.at(rk, j), scale);
        for (std::size_t i = rk + 1; i < w.rows; ++i) {
            if (f.is_zero(w.at(i, col))) continue;
            const auto factor = w.at(i, col);
            for (std::size_t j = col; j < w.cols; ++j)
                w.at(i, j) = f.sub(w.at(i, j), f.mul(factor, w.at(rk, j)));
        }
        pivots.push_back(col);
        ++rk;
    }
    if (pivots.size() < count)
        throw RankDeficient("matrix rank " + std::to_string(pivots.size()) +
                            " is below the requested " + std::to_string(count));
    return pivots;
}

// Gauss-Jordan solve of the pivot block through jet arithmetic: returns
// the non-pivot columns of inverse(n_J) * n, i.e. the affine chart of the
// row space around the plane spanned by n. Rows come back aligned with
// pivot_cols order; the pivot block itself reduces to the identity and is
// dropped from the result.
template <class Ring>
Mat<Jet<Ring>> chart_normalize(const JetCtx<Ring>& jets, Mat<Jet<Ring>> n,
                               std::span<const std::size_t> pivot_cols) {
    if (pivot_cols.size() != n.rows)
        throw ShapeMismatch("need one pivot column per row: " + std::to_string(pivot_cols.size()) +
                            " pivots, " + std::to_string(n.rows) + " rows");
    for (std::size_t c : pivot_cols)
        if (c >= n.cols) throw IndexOutOfRange("pivot column " + std::to_string(c) + " out of range");

    for (std::size_t step = 0; step < pivot_cols.size(); ++step) {
        const std::size_t col = pivot_cols[step];
        std::size_t piv = n.rows;
        for (std::size_t i = step; i < n.rows; ++i) {
            if (jets.is_unit(n.at(i, col))) {
                piv = i;
                break;
            }
        }
        if (piv == n.rows)
            throw SingularPivotBlock("no invertible pivot in column " + std::to_string(col));
        n.swap_rows(step, piv);
        const auto scale = jets.inv(n.at(step, col));
        for (std::size_t j = 0; j < n.cols; ++j) n.at(step, j) = jets.mul(n.at(step, j), scale);
        for (std::size_t i = 0; i < n.rows; ++i) {
            if (i == step || jets.is_zero(n.at(i, col))) continue;
            const auto factor = n.at(i, col);
            for (std::size_t j = 0; j < n.cols; ++j)
                n.at(i, j) = jets.sub(n.at(i, j), jets.mul(factor, n.at(step, j)));
        }
    }

    std::vector<bool> is_pivot(n.cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    Mat<Jet<Ring>> out(n.rows, n.cols - pivot_cols.size(), jets.zero());
    for (std::size_t i = 0; i < n.rows; ++i) {
        std::size_t jj = 0;
        for (std::size_t j = 0; j < n.cols; ++j)
            if (!is_pivot[j]) out.at(i, jj++) = n.at(i, j);
    }
    return out;
}

// Rank of the flattened derivative: one row per matrix entry, one column
// per jet direction. All jets must share one direction count.
template <class Ring>
std::size_t jacobian_rank(const Ring& f, const Mat<Jet<Ring>>& m) {
    if (m.data.empty()) return 0;
    const std::size_t dirs = m.data.front().partials.size();
    for (const auto& jet : m.data)
        if (jet.partials.size() != dirs)
            throw ShapeMismatch("jets disagree on direction count");
    Mat<typename Ring::Elem> flat(m.rows * m.cols, dirs, f.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            for (std::size_t d = 0; d < dirs; ++d)
                flat.at(i * m.cols + j, d) = m.at(i, j).partials[d];
    return rank(f, flat);
}

} // namespace secvar

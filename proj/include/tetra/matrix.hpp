#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tetra {

/// Dense row-major matrix over an exact field. Small-dimension workhorse
/// for module/hom computations; the big prime-field eliminations go
/// through FpMat instead.
template <class F>
struct Mat {
    using Elem = typename F::Elem;

    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, Elem fill) : rows(r), cols(c), a(r * c, fill) {}
    static Mat zero(const F& f, std::size_t r, std::size_t c) { return Mat(r, c, f.zero()); }
    static Mat identity(const F& f, std::size_t n) {
        Mat m = zero(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    bool is_zero(const F& f) const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }
};

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat<F> r = Mat<F>::zero(f, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const auto& xv = x.at(i, k);
            if (f.is_zero(xv)) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                const auto& yv = y.at(k, j);
                if (f.is_zero(yv)) continue;
                r.at(i, j) = f.add(r.at(i, j), f.mul(xv, yv));
            }
        }
    return r;
}

/// In-place row echelon. Returns rank; records pivot columns when asked.
template <class F>
std::size_t row_echelon(const F& f, Mat<F>& m, std::vector<std::size_t>* pivot_cols = nullptr)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t sel = rank;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != rank)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(rank, j));
        auto piv_inv = f.inv(m.at(rank, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), piv_inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            auto v = m.at(i, col);
            if (f.is_zero(v)) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(rank, j)));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

template <class F>
std::size_t rank_of(const F& f, Mat<F> m)
{
    return row_echelon(f, m);
}

/// Basis of the right kernel {x : m·x = 0}, one column vector per row
/// of the returned matrix.
template <class F>
Mat<F> kernel_basis(const F& f, Mat<F> m)
{
    std::vector<std::size_t> piv;
    row_echelon(f, m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::size_t nfree = m.cols - piv.size();
    Mat<F> ker = Mat<F>::zero(f, nfree, m.cols);
    std::size_t kr = 0;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_piv[fc]) continue;
        ker.at(kr, fc) = f.one();
        for (std::size_t r = 0; r < piv.size(); ++r)
            ker.at(kr, piv[r]) = f.neg(m.at(r, fc));
        ++kr;
    }
    return ker;
}

/// Solve m·x = b for one particular solution; nullopt-like via bool.
template <class F>
bool solve_linear(const F& f, Mat<F> m, std::vector<typename F::Elem> b,
                  std::vector<typename F::Elem>& x_out)
{
    std::size_t rank = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t sel = rank;
        while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != rank) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(rank, j));
            std::swap(b[sel], b[rank]);
        }
        auto piv_inv = f.inv(m.at(rank, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), piv_inv);
        b[rank] = f.mul(b[rank], piv_inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            auto v = m.at(i, col);
            if (f.is_zero(v)) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(rank, j)));
            b[i] = f.sub(b[i], f.mul(v, b[rank]));
        }
        piv.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < m.rows; ++i)
        if (!f.is_zero(b[i])) return false;
    x_out.assign(m.cols, f.zero());
    for (std::size_t r = 0; r < rank; ++r) x_out[piv[r]] = b[r];
    return true;
}

template <class F>
bool invert(const F& f, const Mat<F>& m, Mat<F>& inv_out)
{
    if (m.rows != m.cols) return false;
    std::size_t n = m.rows;
    Mat<F> aug = Mat<F>::zero(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = f.one();
    }
    if (row_echelon(f, aug) != n) return false;
    inv_out = Mat<F>::zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv_out.at(i, j) = aug.at(i, n + j);
    return true;
}

} // namespace tetra

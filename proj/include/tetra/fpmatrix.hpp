#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tetra/fp.hpp"
#include "tetra/kernels.hpp"

namespace tetra {

/// Dense matrix over F_p tuned for big rank computations. Entries live as
/// lazily-reduced uint64 accumulators: a row op does one multiply-add per
/// entry (via the dispatched axpy kernel) and reductions happen only when
/// the headroom budget runs out or a value is actually inspected.
class FpMat {
public:
    FpMat(const PrimeField& f, std::size_t rows, std::size_t cols)
        : fld_(f), p_(f.modulus()), rows_(rows), cols_(cols), a_(rows * cols, 0), dirty_(rows, 0)
    {
        // each axpy adds at most (p-1)^2 per entry
        std::uint64_t bound = (p_ - 1) * (p_ - 1);
        budget_ = bound ? (UINT64_MAX - (p_ - 1)) / bound : UINT64_MAX;
        if (budget_ == 0) throw std::invalid_argument("modulus too large for lazy reduction");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, std::uint64_t v) { a_[r * cols_ + c] = v % p_; }
    std::uint64_t get(std::size_t r, std::size_t c) const { return a_[r * cols_ + c] % p_; }

    /// Rank by Gaussian elimination. Destroys the matrix.
    std::size_t rank()
    {
        const auto& k = kernels::active();
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t sel = rows_;
            for (std::size_t r = rank; r < rows_; ++r) {
                if (a_[r * cols_ + col] % p_ != 0) { sel = r; break; }
            }
            if (sel == rows_) continue;
            swap_rows(sel, rank);
            reduce_row(rank);
            normalize_row(rank, col);
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                std::uint64_t v = a_[r * cols_ + col] % p_;
                a_[r * cols_ + col] = v;
                if (v == 0) continue;
                if (dirty_[r] + 1 > budget_) reduce_row(r);
                // row_r += (p - v) * row_rank  (pivot column becomes ≡ 0)
                k.axpy(&a_[r * cols_ + col], &a_[rank * cols_ + col], p_ - v, cols_ - col);
                ++dirty_[r];
            }
            ++rank;
        }
        return rank;
    }

private:
    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
        std::swap(dirty_[i], dirty_[j]);
    }

    void reduce_row(std::size_t r)
    {
        kernels::active().reduce(&a_[r * cols_], cols_, p_);
        dirty_[r] = 0;
    }

    void normalize_row(std::size_t r, std::size_t col)
    {
        std::uint64_t inv = fld_.inv(a_[r * cols_ + col] % p_);
        for (std::size_t c = col; c < cols_; ++c)
            a_[r * cols_ + c] = (a_[r * cols_ + c] % p_) * inv % p_;
        dirty_[r] = 0;
    }

    PrimeField fld_;
    std::uint64_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
    std::vector<std::uint64_t> dirty_;
    std::uint64_t budget_;
};

/// Sparse triple list -> rank over F_p via FpMat.
struct SparseEntry {
    std::uint32_t row;
    std::uint32_t col;
    std::uint64_t val;
};

inline std::size_t sparse_rank_fp(const PrimeField& f, std::size_t rows, std::size_t cols,
                                  const std::vector<SparseEntry>& entries)
{
    FpMat m(f, rows, cols);
    for (const auto& e : entries) m.set(e.row, e.col, e.val);
    return m.rank();
}

} // namespace tetra

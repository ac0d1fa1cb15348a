#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "firlab/error.hpp"

namespace firlab {

/// Arithmetic in the prime field F_p, p a small prime.
inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + b) % p; }
inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return (a + p - b % p) % p; }
inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    a %= p;
    while (n) {
        if (n & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        n >>= 1;
    }
    return r;
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DivisionByZeroError("inverse of 0 in F_" + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

/// Dense matrix over F_p.  Row-major; entries are reduced representatives.
class MatFp {
public:
    MatFp(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place reduction to reduced row echelon form.  Returns the pivot
    /// column of each pivot row, in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && at(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(piv, c));
            const std::uint32_t inv = fp_inv(at(row, col), p_);
            for (std::size_t c = col; c < cols_; ++c) at(row, c) = fp_mul(at(row, c), inv, p_);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0) continue;
                const std::uint32_t f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) = fp_sub(at(r, c), fp_mul(f, at(row, c), p_), p_);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        MatFp tmp(*this);
        return tmp.rref().size();
    }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// Basis of the kernel {x : A x = 0}, one coordinate vector per basis element.
inline std::vector<std::vector<std::uint32_t>> kernel_basis(MatFp a) {
    const std::uint32_t p = a.p();
    const std::size_t n = a.cols();
    const std::vector<std::size_t> pivots = a.rref();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_neg(a.at(r, free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<std::uint32_t>> solve(const MatFp& a, const std::vector<std::uint32_t>& b) {
    const std::uint32_t p = a.p();
    MatFp aug(p, a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r] % p;
    }
    const std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<std::uint32_t> x(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

}  // namespace firlab

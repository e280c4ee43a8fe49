#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"

namespace mdsgrid {

/// Dense row-major matrix of residues mod p.
class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols, u64 p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    static ModMatrix reduce(const IntMatrix& m, u64 p) {
        ModMatrix out(m.rows(), m.cols(), p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = mpz_fdiv_ui(m(r, c).get_mpz_t(), p);
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    u64 prime() const noexcept { return p_; }
    u64& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    u64 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    u64* row(std::size_t r) { return data_.data() + r * cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    u64 p_ = 0;
    std::vector<u64> data_;
};

/// Outcome of Gaussian elimination over F_p.
struct ModEchelon {
    u64 prime = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;     // original row of each pivot, in pivot order
    std::vector<std::size_t> pivot_columns;  // original column of each pivot, in pivot order
    bool full_row_rank = false;
};

namespace detail {

struct PivotRow {
    std::size_t position = 0;  // physical row == physical pivot column
    u64 inverse = 0;
    std::vector<u64> value;  // canonical residues, indexed by physical column
    std::vector<u64> quot;   // Shoup quotients of `value`
};

inline u64 canon(u64 x, u64 p) { return x >= p ? x - p : x; }

// row[j] -= f * pivot[j] for j > pivot.position, with f = row[pos] / pivot[pos].
// Entries stay lazily reduced in [0, 2p).
inline void eliminate_with(u64* row, const PivotRow& piv, std::size_t cols, u64 p) {
    const std::size_t pos = piv.position;
    u64 lead = canon(row[pos], p);
    if (lead == 0) return;
    const u64 f = mul_mod(lead, piv.inverse, p);
    const u64 two_p = 2 * p;
    const u64* val = piv.value.data();
    const u64* quot = piv.quot.data();
    for (std::size_t j = pos + 1; j < cols; ++j) {
        u64 q = static_cast<u64>((static_cast<u128>(quot[j]) * f) >> 64);
        u64 prod = val[j] * f - q * p;  // f * val[j] mod p, in [0, 2p)
        u64 x = row[j] + two_p - prod;
        row[j] = x - (two_p & (u64{0} - static_cast<u64>(x >= two_p)));
    }
    row[pos] = 0;
}

}  // namespace detail

/// Row echelon form over F_p with column pivoting. Consumes the matrix.
/// Pivots are processed in blocks: a block of pivot rows is found first, then
/// every remaining row absorbs the whole block while it is hot in cache.
inline ModEchelon mod_echelon(ModMatrix a, std::size_t block = 12) {
    const u64 p = a.prime();
    if (p >= (u64{1} << 62)) throw ConfigurationError("prime-too-large", "lazy reduction needs p < 2^62");
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> row_id(rows), col_id(cols);
    std::iota(row_id.begin(), row_id.end(), 0);
    std::iota(col_id.begin(), col_id.end(), 0);

    std::size_t k = 0;
    std::size_t active = rows;
    std::vector<detail::PivotRow> pivots;
    while (k < active && k < cols) {
        pivots.clear();
        const std::size_t block_start = k;
        while (k < active && k < cols && k - block_start < block) {
            u64* row = a.row(k);
            for (const auto& piv : pivots) detail::eliminate_with(row, piv, cols, p);
            std::size_t c = k;
            while (c < cols && detail::canon(row[c], p) == 0) ++c;
            if (c == cols) {
                --active;
                if (k != active) {
                    std::swap_ranges(a.row(k), a.row(k) + cols, a.row(active));
                    std::swap(row_id[k], row_id[active]);
                }
                continue;
            }
            if (c != k) {
                for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, c), a(r, k));
                for (auto& piv : pivots) {
                    std::swap(piv.value[c], piv.value[k]);
                    std::swap(piv.quot[c], piv.quot[k]);
                }
                std::swap(col_id[c], col_id[k]);
            }
            detail::PivotRow piv;
            piv.position = k;
            piv.value.assign(cols, 0);
            piv.quot.assign(cols, 0);
            for (std::size_t j = k; j < cols; ++j) {
                u64 v = detail::canon(row[j], p);
                row[j] = v;
                piv.value[j] = v;
                piv.quot[j] = ShoupMultiplier(v, p).w_quot;
            }
            piv.inverse = pow_mod(row[k], p - 2, p);
            pivots.push_back(std::move(piv));
            ++k;
        }
        for (std::size_t r = k; r < active; ++r) {
            u64* row = a.row(r);
            for (const auto& piv : pivots) detail::eliminate_with(row, piv, cols, p);
        }
    }

    ModEchelon out;
    out.prime = p;
    out.rank = k;
    out.pivot_rows.assign(row_id.begin(), row_id.begin() + k);
    out.pivot_columns.assign(col_id.begin(), col_id.begin() + k);
    out.full_row_rank = (k == rows);
    return out;
}

/// Inverse of a square matrix mod p, or nullopt when singular mod p.
inline std::optional<std::vector<u64>> mod_inverse(const IntMatrix& m, u64 p) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DomainError("not-square", "mod_inverse needs a square matrix");
    const std::size_t w = 2 * n;
    std::vector<u64> a(n * w, 0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r * w + c] = mpz_fdiv_ui(m(r, c).get_mpz_t(), p);
        a[r * w + n + r] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * w + k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != k) std::swap_ranges(a.begin() + piv * w, a.begin() + piv * w + w, a.begin() + k * w);
        u64* prow = a.data() + k * w;
        u64 inv = pow_mod(prow[k], p - 2, p);
        for (std::size_t j = k; j < w; ++j) prow[j] = mul_mod(prow[j], inv, p);
        std::vector<u64> quot(w);
        for (std::size_t j = k; j < w; ++j) quot[j] = ShoupMultiplier(prow[j], p).w_quot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k) continue;
            u64* row = a.data() + r * w;
            u64 f = row[k];
            if (f == 0) continue;
            for (std::size_t j = k; j < w; ++j) {
                u64 q = static_cast<u64>((static_cast<u128>(quot[j]) * f) >> 64);
                u64 prod = detail::canon(prow[j] * f - q * p, p);
                row[j] = sub_mod(row[j], prod, p);
            }
        }
    }
    std::vector<u64> inv(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r * n + c] = a[r * w + n + c];
    return inv;
}

}  // namespace mdsgrid

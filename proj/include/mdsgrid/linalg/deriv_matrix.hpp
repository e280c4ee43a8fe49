#pragma once

#include <utility>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"
#include "mdsgrid/linalg/mod_elimination.hpp"

namespace mdsgrid {

/// Derivative orders (a, b) with a + b <= m - 1, in lexicographic order.
class DerivOrderList {
public:
    explicit DerivOrderList(long m) : m_(m) {
        if (m < 1) throw DomainError("bad-multiplicity", "multiplicity m must be >= 1");
        orders_.reserve(static_cast<std::size_t>(m * (m + 1) / 2));
        for (long a = 0; a < m; ++a)
            for (long b = 0; a + b < m; ++b) orders_.emplace_back(a, b);
    }

    long multiplicity() const noexcept { return m_; }
    std::size_t size() const noexcept { return orders_.size(); }
    const std::pair<long, long>& operator[](std::size_t i) const { return orders_[i]; }
    const std::vector<std::pair<long, long>>& orders() const noexcept { return orders_; }

private:
    long m_;
    std::vector<std::pair<long, long>> orders_;
};

inline DerivOrderList deriv_orders(long m) { return DerivOrderList(m); }

/// Number of derivative orders of total order <= m - 1.
inline long derivative_count(long m) { return m * (m + 1) / 2; }

enum class MatrixFlavor { A, B };

/// Row-per-support-point, column-per-derivative-order matrix.
///   A: entry = (i)_a (j)_b, the falling factorials, i.e. d^a_x d^b_y (x^i y^j) at (1,1)
///   B: entry = i^a j^b with 0^0 = 1
/// Entries are produced on demand so large instances can go straight to F_p.
class DerivMatrix {
public:
    DerivMatrix(MatrixFlavor flavor, SupportSet rows, long m) : flavor_(flavor), rows_(std::move(rows)), cols_(m) {
        if (rows_.empty()) throw DomainError("empty-support", "interpolation matrix needs a nonempty support");
    }

    MatrixFlavor flavor() const noexcept { return flavor_; }
    const SupportSet& rows() const noexcept { return rows_; }
    const DerivOrderList& cols() const noexcept { return cols_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_.size(); }
    long multiplicity() const noexcept { return cols_.multiplicity(); }

    Integer entry(std::size_t r, std::size_t c) const {
        const auto& pt = rows_[r];
        auto [a, b] = cols_[c];
        if (flavor_ == MatrixFlavor::A) return falling_factorial(pt.x, a) * falling_factorial(pt.y, b);
        return ipow(pt.x, static_cast<unsigned long>(a)) * ipow(pt.y, static_cast<unsigned long>(b));
    }

    IntMatrix to_int_matrix() const {
        const long m = multiplicity();
        IntMatrix out(row_count(), col_count());
        std::vector<Integer> xs(m), ys(m);
        for (std::size_t r = 0; r < row_count(); ++r) {
            const auto& pt = rows_[r];
            for (long e = 0; e < m; ++e) {
                if (flavor_ == MatrixFlavor::A) {
                    xs[e] = e == 0 ? Integer(1) : Integer(xs[e - 1] * (pt.x - (e - 1)));
                    ys[e] = e == 0 ? Integer(1) : Integer(ys[e - 1] * (pt.y - (e - 1)));
                } else {
                    xs[e] = e == 0 ? Integer(1) : Integer(xs[e - 1] * pt.x);
                    ys[e] = e == 0 ? Integer(1) : Integer(ys[e - 1] * pt.y);
                }
            }
            for (std::size_t c = 0; c < col_count(); ++c) out(r, c) = xs[cols_[c].first] * ys[cols_[c].second];
        }
        return out;
    }

    /// Entries reduced mod p without forming the integers.
    ModMatrix reduce_mod(u64 p) const {
        const long m = multiplicity();
        ModMatrix out(row_count(), col_count(), p);
        std::vector<u64> xs(m), ys(m);
        for (std::size_t r = 0; r < row_count(); ++r) {
            const auto& pt = rows_[r];
            const u64 x = mpz_fdiv_ui(pt.x.get_mpz_t(), p);
            const u64 y = mpz_fdiv_ui(pt.y.get_mpz_t(), p);
            xs[0] = ys[0] = 1;
            for (long e = 1; e < m; ++e) {
                const u64 fx = flavor_ == MatrixFlavor::A ? sub_mod(x, static_cast<u64>(e - 1) % p, p) : x;
                const u64 fy = flavor_ == MatrixFlavor::A ? sub_mod(y, static_cast<u64>(e - 1) % p, p) : y;
                xs[e] = mul_mod(xs[e - 1], fx, p);
                ys[e] = mul_mod(ys[e - 1], fy, p);
            }
            u64* row = out.row(r);
            for (std::size_t c = 0; c < col_count(); ++c) row[c] = mul_mod(xs[cols_[c].first], ys[cols_[c].second], p);
        }
        return out;
    }

private:
    MatrixFlavor flavor_;
    SupportSet rows_;
    DerivOrderList cols_;
};

inline DerivMatrix build_A(const SupportSet& s, long m) { return DerivMatrix(MatrixFlavor::A, s, m); }
inline DerivMatrix build_B(const SupportSet& s, long m) { return DerivMatrix(MatrixFlavor::B, s, m); }

}  // namespace mdsgrid

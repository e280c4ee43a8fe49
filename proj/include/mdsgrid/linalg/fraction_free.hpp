#pragma once

#include <optional>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"

namespace mdsgrid {

/// Fraction-free reduced row echelon form.
/// Every pivot equals `scale`, all other entries of a pivot column are zero,
/// and every entry is (up to sign) a minor of the input, so each update
///   m[i][j] <- (pivot * m[i][j] - m[i][c] * m[r][j]) / previous_pivot
/// divides exactly.
struct FractionFreeForm {
    IntMatrix reduced;
    std::vector<std::size_t> pivot_columns;  // pivot column of row r, r < rank
    std::size_t rank = 0;
    Integer scale = 1;
    int swap_sign = 1;
};

inline FractionFreeForm fraction_free_rref(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    FractionFreeForm out;
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            m.swap_rows(piv, r);
            out.swap_sign = -out.swap_sign;
        }
        const Integer pivot = m(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Integer lead = m(i, c);
            Integer* row = m.row(i);
            const Integer* prow = m.row(r);
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                // row[j] = (pivot * row[j] - lead * prow[j]) / prev
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
                if (lead != 0) mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), prow[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pivot;
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rank = r;
    out.scale = prev;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank_exact_value(const IntMatrix& m) { return fraction_free_rref(m).rank; }

inline Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("not-square", "determinant needs a square matrix");
    if (m.rows() == 0) return 1;
    FractionFreeForm f = fraction_free_rref(m);
    if (f.rank < m.rows()) return 0;
    return f.swap_sign * f.scale;
}

/// Divides out the content and makes the first nonzero entry positive.
inline std::vector<Integer> make_primitive(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v;
    bool flip = false;
    for (const auto& x : v) {
        if (x != 0) {
            flip = x < 0;
            break;
        }
    }
    if (flip) g = -g;
    for (auto& x : v) x = divexact(x, g);
    return v;
}

/// Integer basis of {x : m x = 0}, one primitive vector per free column.
inline std::vector<std::vector<Integer>> nullspace(const IntMatrix& m) {
    FractionFreeForm f = fraction_free_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : f.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Integer> x(m.cols(), Integer(0));
        x[free] = f.scale;
        for (std::size_t r = 0; r < f.rank; ++r) x[f.pivot_columns[r]] = -f.reduced(r, free);
        basis.push_back(make_primitive(std::move(x)));
    }
    return basis;
}

/// Integer basis of {y : y^T m = 0}.
inline std::vector<std::vector<Integer>> left_nullspace(const IntMatrix& m) { return nullspace(m.transposed()); }

/// Some x with m x = b, or nullopt when b is outside the column span.
inline std::optional<std::vector<Rational>> solve_in_column_span(const IntMatrix& m, const std::vector<Integer>& b) {
    FractionFreeForm f = fraction_free_rref(m.with_column(b));
    const std::size_t aug = m.cols();
    if (f.rank > 0 && f.pivot_columns.back() == aug) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < f.rank; ++r) x[f.pivot_columns[r]] = make_rational(f.reduced(r, aug), f.scale);
    return x;
}

}  // namespace mdsgrid

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/linalg/deriv_matrix.hpp"
#include "mdsgrid/linalg/dixon.hpp"
#include "mdsgrid/linalg/fraction_free.hpp"
#include "mdsgrid/linalg/int_matrix.hpp"
#include "mdsgrid/linalg/mod_elimination.hpp"

namespace mdsgrid {

enum class RankMethod { Modular, Exact };

inline const char* to_string(RankMethod m) { return m == RankMethod::Modular ? "modular" : "exact"; }

/// Proof object for a rank statement.
/// A modular certificate is only ever issued for full row rank; every
/// deficiency carries an exact left-kernel vector checked by multiplication.
struct RankCertificate {
    std::size_t support_size = 0;  // rows
    long m = 0;                    // multiplicity, 0 for raw matrices
    std::size_t cols = 0;
    std::size_t rank = 0;
    RankMethod method = RankMethod::Exact;
    std::optional<u64> prime;
    bool full_row_rank = false;
    std::optional<std::vector<Integer>> witness;

    /// "mod p" or "exact", for human-readable reports.
    std::string provenance() const {
        return method == RankMethod::Modular ? "mod " + std::to_string(*prime) : std::string("exact");
    }
};

struct RankMode {
    RankMethod method = RankMethod::Exact;
    u64 prime = 0;

    static RankMode modular(u64 p) { return {RankMethod::Modular, p}; }
    static RankMode exact() { return {RankMethod::Exact, 0}; }
};

/// True iff y^T m == 0.
inline bool is_left_kernel_vector(const std::vector<Integer>& y, const IntMatrix& m) {
    for (auto& v : left_multiply(y, m))
        if (v != 0) return false;
    return true;
}

/// True iff mat * c == e_idx, checked in integers after clearing denominators.
inline bool maps_to_unit(const IntMatrix& mat, const std::vector<Rational>& c, std::size_t idx) {
    if (c.size() != mat.cols()) return false;
    Integer den = 1;
    for (const auto& v : c) den = lcm(den, v.get_den());
    std::vector<Integer> scaled(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) scaled[j] = divexact(Integer(den * c[j].get_num()), c[j].get_den());
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        Integer acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (scaled[j] != 0) mpz_addmul(acc.get_mpz_t(), mat(r, j).get_mpz_t(), scaled[j].get_mpz_t());
        if (acc != (r == idx ? den : Integer(0))) return false;
    }
    return true;
}

namespace detail {

inline RankCertificate exact_certificate(const IntMatrix& mat, long m) {
    RankCertificate cert;
    cert.support_size = mat.rows();
    cert.cols = mat.cols();
    cert.m = m;
    cert.method = RankMethod::Exact;
    // rank of m^T equals rank of m, and its nullspace is the left kernel we need
    FractionFreeForm f = fraction_free_rref(mat.transposed());
    cert.rank = f.rank;
    cert.full_row_rank = f.rank == mat.rows();
    if (!cert.full_row_rank) {
        std::vector<bool> is_pivot(mat.rows(), false);
        for (auto c : f.pivot_columns) is_pivot[c] = true;
        std::size_t free = 0;
        while (is_pivot[free]) ++free;
        std::vector<Integer> y(mat.rows(), Integer(0));
        y[free] = f.scale;
        for (std::size_t r = 0; r < f.rank; ++r) y[f.pivot_columns[r]] = -f.reduced(r, free);
        y = make_primitive(std::move(y));
        if (!is_left_kernel_vector(y, mat)) {
            throw InvariantViolation("kernel-check", "exact left-kernel witness failed verification");
        }
        cert.witness = std::move(y);
    }
    return cert;
}

inline RankCertificate modular_certificate(const ModEchelon& ech, std::size_t rows, std::size_t cols, long m) {
    RankCertificate cert;
    cert.support_size = rows;
    cert.cols = cols;
    cert.m = m;
    cert.rank = ech.rank;
    cert.method = RankMethod::Modular;
    cert.prime = ech.prime;
    cert.full_row_rank = ech.full_row_rank;
    return cert;
}

}  // namespace detail

/// Rank of an integer matrix. Modular mode gives a lower bound for the
/// rational rank; it is the rational rank when it reaches the row count.
/// Exact mode attaches a verified left-kernel vector whenever rank < rows.
inline RankCertificate rank(const IntMatrix& mat, RankMode mode, const PrimeConfig& config = PrimeConfig::defaults()) {
    if (mat.rows() == 0 || mat.cols() == 0) throw DomainError("empty-matrix", "rank needs a nonempty matrix");
    if (mode.method == RankMethod::Exact) return detail::exact_certificate(mat, 0);
    config.require_admissible(mode.prime);
    ModEchelon ech = mod_echelon(ModMatrix::reduce(mat, mode.prime));
    return detail::modular_certificate(ech, mat.rows(), mat.cols(), 0);
}

inline RankCertificate rank(const DerivMatrix& mat, RankMode mode, const PrimeConfig& config = PrimeConfig::defaults()) {
    if (mode.method == RankMethod::Exact) return detail::exact_certificate(mat.to_int_matrix(), mat.multiplicity());
    config.require_admissible(mode.prime);
    ModEchelon ech = mod_echelon(mat.reduce_mod(mode.prime));
    return detail::modular_certificate(ech, mat.row_count(), mat.col_count(), mat.multiplicity());
}

/// Basis of {y : y^T mat = 0}; empty iff the rows are independent.
inline std::vector<std::vector<Integer>> left_kernel_exact(const IntMatrix& mat) {
    if (mat.rows() == 0) throw DomainError("empty-matrix", "left_kernel_exact needs a nonempty matrix");
    return left_nullspace(mat);
}

inline std::vector<std::vector<Integer>> left_kernel_exact(const DerivMatrix& mat) {
    return left_kernel_exact(mat.to_int_matrix());
}

struct EmptinessResult {
    bool empty = false;
    RankCertificate certificate;
};

/// Options for the certified-rank protocol: up to `modular_attempts` primes
/// from the configured list are tried before falling back to exact elimination.
struct ProtocolOptions {
    PrimeConfig primes = PrimeConfig::defaults();
    std::size_t modular_attempts = 1;
};

/// |dH - mE| is empty iff B(s, m) has full row rank.
/// A full-rank result is certified by the first prime that reaches it; a
/// deficient result always comes from exact elimination with a witness, whose
/// entries are the coefficients of a section with multiplicity >= m at e.
inline EmptinessResult linear_system_empty(const SupportSet& s, long m, const ProtocolOptions& opts = {}) {
    if (m < 1) throw DomainError("bad-multiplicity", "multiplicity m must be >= 1");
    if (s.empty()) {
        // no sections at all: the 0 x R matrix has full row rank trivially
        RankCertificate cert;
        cert.m = m;
        cert.cols = static_cast<std::size_t>(derivative_count(m));
        cert.full_row_rank = true;
        return {true, std::move(cert)};
    }
    DerivMatrix b = build_B(s, m);
    const std::size_t attempts = std::min(opts.modular_attempts, opts.primes.primes.size());
    for (std::size_t i = 0; i < attempts; ++i) {
        RankCertificate cert = rank(b, RankMode::modular(opts.primes.primes[i]), opts.primes);
        if (cert.full_row_rank) return {true, std::move(cert)};
    }
    RankCertificate cert = rank(b, RankMode::exact());
    return {cert.full_row_rank, std::move(cert)};
}

/// Some c with mat * c = e_idx, or nullopt when e_idx is not in the column span.
/// Uses p-adic lifting on a modular pivot basis when mat has full row rank mod
/// the first configured prime, exact elimination otherwise. Always verified.
inline std::optional<std::vector<Rational>> solve_unit_column(const IntMatrix& mat, std::size_t idx,
                                                              const ProtocolOptions& opts = {}) {
    if (idx >= mat.rows()) {
        throw DomainError("index-out-of-range", "row index " + std::to_string(idx) + " >= " + std::to_string(mat.rows()));
    }
    std::vector<Integer> e(mat.rows(), Integer(0));
    e[idx] = 1;
    std::optional<std::vector<Rational>> c;
    const u64 p = opts.primes.primes.front();
    ModEchelon ech = mod_echelon(ModMatrix::reduce(mat, p));
    if (ech.full_row_rank) {
        IntMatrix square = mat.select_columns(ech.pivot_columns);
        auto part = dixon_solve(square, e, p);
        if (!part) throw InvariantViolation("dixon-singular", "pivot minor singular mod the prime that selected it");
        c.emplace(mat.cols(), Rational(0));
        for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) (*c)[ech.pivot_columns[k]] = (*part)[k];
    } else {
        // Pivot minor mod p is invertible over Q; a solution of the minor that
        // also satisfies every other row is a solution. Otherwise decide exactly.
        std::vector<Integer> e_sub;
        for (std::size_t r : ech.pivot_rows) e_sub.push_back(e[r]);
        IntMatrix minor = mat.select_columns(ech.pivot_columns).select_rows(ech.pivot_rows);
        std::optional<std::vector<Rational>> part;
        if (!ech.pivot_rows.empty()) part = dixon_solve(minor, e_sub, p);
        if (part) {
            c.emplace(mat.cols(), Rational(0));
            for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) (*c)[ech.pivot_columns[k]] = (*part)[k];
        }
        if (!c || !maps_to_unit(mat, *c, idx)) c = solve_in_column_span(mat, e);
    }
    if (c && !maps_to_unit(mat, *c, idx)) {
        throw InvariantViolation("separation-check", "separation vector failed exact verification");
    }
    return c;
}

/// Coefficients c over deriv_orders(m) of f = sum c_(a,b) x^a y^b, degree <= m-1,
/// vanishing at every point of s except s[idx] where f = 1; nullopt if none exists.
inline std::optional<std::vector<Rational>> separating_polynomial(const SupportSet& s, long m, std::size_t idx,
                                                                  const ProtocolOptions& opts = {}) {
    if (idx >= s.size()) {
        throw DomainError("index-out-of-range", "row index " + std::to_string(idx) + " >= " + std::to_string(s.size()));
    }
    return solve_unit_column(build_B(s, m).to_int_matrix(), idx, opts);
}

/// Decides whether a separating polynomial exists without producing it.
/// Returns the certificate deciding the question: e_idx is in the column span
/// iff rank [B | e_idx] = rank B; full row rank mod a prime settles "yes".
struct SeparationDecision {
    bool separable = false;
    RankCertificate certificate;
};

inline SeparationDecision separation_exists(const SupportSet& s, long m, std::size_t idx,
                                            const ProtocolOptions& opts = {}) {
    if (idx >= s.size()) {
        throw DomainError("index-out-of-range", "row index " + std::to_string(idx) + " >= " + std::to_string(s.size()));
    }
    EmptinessResult er = linear_system_empty(s, m, opts);
    if (er.empty) return {true, std::move(er.certificate)};
    // Deficient: separable iff every left-kernel vector vanishes at idx.
    bool separable = true;
    for (const auto& y : left_kernel_exact(build_B(s, m))) {
        if (y[idx] != 0) {
            separable = false;
            er.certificate.witness = y;
            break;
        }
    }
    return {separable, std::move(er.certificate)};
}

}  // namespace mdsgrid

#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/linalg/interpolation.hpp"
#include "mdsgrid/util/parallel.hpp"

namespace mdsgrid {

/// Pairwise coprime positive weights, sorted ascending.
struct Triple {
    Integer a, b, c;

    std::array<Integer, 3> sorted() const { return {a, b, c}; }
    Integer product() const { return a * b * c; }
    Integer sum() const { return a + b + c; }
    friend bool operator==(const Triple& x, const Triple& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
    std::string to_string() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }
};

inline Triple validate_triple(const Integer& a, const Integer& b, const Integer& c) {
    try {
        require_wpp_weights(a, b, c);
    } catch (const DomainError& e) {
        throw ValidationError(e.code(), e.what());
    }
    std::array<Integer, 3> w{a, b, c};
    std::sort(w.begin(), w.end());
    return {w[0], w[1], w[2]};
}

enum class Status { MDS, NOT_MDS, UNKNOWN };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::MDS: return "MDS";
        case Status::NOT_MDS: return "NOT_MDS";
        default: return "UNKNOWN";
    }
}

struct RuleHit {
    std::string name;
    std::string citation;
    Status implies;
    std::optional<long> parameter;  // m for the Goto-Nishida-Watanabe families
};

namespace detail {

inline bool same_weights(const Triple& t, const Integer& x, const Integer& y, const Integer& z) {
    std::array<Integer, 3> w{x, y, z};
    std::sort(w.begin(), w.end());
    return t.a == w[0] && t.b == w[1] && t.c == w[2];
}

inline std::array<Integer, 3> gnw_family_1(const Integer& m) { return {7 * m - 3, 5 * m * m - 2 * m, 8 * m - 3}; }
inline std::array<Integer, 3> gnw_family_2(const Integer& m) { return {7 * m - 10, 5 * m * m - 7 * m + 1, 8 * m - 3}; }

inline bool gnw_family_1_admissible(const Integer& m) { return m >= 4 && m % 3 != 0; }

inline bool gnw_family_2_admissible(const Integer& m) {
    Integer r = m % 59;
    if (r < 0) r += 59;
    return m >= 5 && Integer(7 * m - 10) % 3 != 0 && r != 52;  // 52 = -7 mod 59
}

// m values for which the family matches t, found two ways: solving 8m - 3 = w
// for each weight w, and scanning m while 5m^2 - 7m + 1 stays <= max weight.
template <typename Family, typename Admissible>
std::vector<long> gnw_matches(const Triple& t, Family family, Admissible admissible) {
    std::vector<long> found;
    for (const auto& w : t.sorted()) {
        if (Integer(w + 3) % 8 != 0) continue;
        Integer m = (w + 3) / 8;
        auto f = family(m);
        if (admissible(m) && same_weights(t, f[0], f[1], f[2])) found.push_back(m.get_si());
    }
    for (Integer m = 1; 5 * m * m - 7 * m + 1 <= t.c; ++m) {
        auto f = family(m);
        if (admissible(m) && same_weights(t, f[0], f[1], f[2])) found.push_back(m.get_si());
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace detail

inline const std::array<std::array<long, 3>, 5>& gk_list() {
    static const std::array<std::array<long, 3>, 5> list{{{7, 15, 26}, {7, 17, 22}, {10, 13, 21}, {11, 13, 19}, {12, 13, 17}}};
    return list;
}

/// Every rule of the catalogue that matches t, in catalogue order.
inline std::vector<RuleHit> apply_rules(const Triple& t) {
    std::vector<RuleHit> hits;
    const Integer s = t.sum();
    if (s * s > t.product()) {
        hits.push_back({"minus_K_big", "Cutkosky: -K = (a+b+c)H - E is big when (a+b+c)^2 > abc", Status::MDS, {}});
    }
    if (t.a <= 4) {
        hits.push_back({"min_weight_le_4", "Cutkosky: a weight <= 4 forces (a+b+c)^2 > abc", Status::MDS, {}});
    }
    if (t.a == 6 || t.b == 6 || t.c == 6) {
        hits.push_back({"srinivasan_6bc", "Srinivasan: (6,b,c) for any b, c", Status::MDS, {}});
    }
    if (detail::same_weights(t, 5, 77, 101)) {
        hits.push_back({"srinivasan_5_77_101", "Srinivasan: (5,77,101)", Status::MDS, {}});
    }
    for (long m : detail::gnw_matches(t, detail::gnw_family_1, detail::gnw_family_1_admissible)) {
        hits.push_back({"gnw_family_1",
                        "Goto-Nishida-Watanabe: (7m-3, 5m^2-2m, 8m-3), m >= 4, 3 does not divide m; m = " + std::to_string(m),
                        Status::NOT_MDS, m});
    }
    for (long m : detail::gnw_matches(t, detail::gnw_family_2, detail::gnw_family_2_admissible)) {
        hits.push_back({"gnw_family_2",
                        "Goto-Nishida-Watanabe: (7m-10, 5m^2-7m+1, 8m-3), m >= 5, 3 does not divide 7m-10, "
                        "m != -7 mod 59; m = " + std::to_string(m),
                        Status::NOT_MDS, m});
    }
    for (const auto& g : gk_list()) {
        if (detail::same_weights(t, g[0], g[1], g[2])) {
            hits.push_back({"gk_list", "Gonzalez-Karu: (7,15,26), (7,17,22), (10,13,21), (11,13,19), (12,13,17)",
                            Status::NOT_MDS, {}});
        }
    }
    return hits;
}

/// An effective class dH - mE with abc m^2 > d^2, certified by an exact
/// section (left-kernel vector of B over the degree-d support).
struct NegativeClass {
    long d = 0;
    long m = 0;
    RankCertificate certificate;
};

/// Full-row-rank certificate for one degree without a hit.
struct DegreeCertificate {
    long d = 0;
    RankCertificate certificate;
};

struct NegativeClassSearch {
    long depth = 0;
    std::vector<NegativeClass> hits;
    std::vector<DegreeCertificate> empty_certificates;
};

/// Tests |dH - m_min(d) E| for d = 1..depth. One test per d suffices: any
/// effective negative class dH - mE has m >= m_min(d), and a section vanishing
/// to order m at e also vanishes to order m_min(d).
inline NegativeClassSearch find_negative_classes(const Triple& t, long depth, unsigned threads = 1,
                                                 const ProtocolOptions& opts = {}) {
    if (depth < 1) throw DomainError("bad-depth", "search depth must be >= 1");
    auto results = parallel_map(static_cast<std::size_t>(depth), threads, [&](std::size_t i) {
        const Integer d(static_cast<long>(i + 1));
        long m = m_min(t.a, t.b, t.c, d).get_si();
        EmptinessResult er = linear_system_empty(support_from_wpp(t.a, t.b, t.c, d), m, opts);
        return std::make_pair(m, std::move(er));
    });
    NegativeClassSearch out;
    out.depth = depth;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto& [m, er] = results[i];
        if (er.empty) {
            out.empty_certificates.push_back({static_cast<long>(i + 1), std::move(er.certificate)});
        } else {
            if (!er.certificate.witness) throw InvariantViolation("missing-witness", "nonempty system without witness");
            out.hits.push_back({static_cast<long>(i + 1), m, std::move(er.certificate)});
        }
    }
    return out;
}

struct Verdict {
    Triple triple;
    Status status = Status::UNKNOWN;
    std::string characteristic = "0";
    std::vector<RuleHit> rules_fired;
    std::vector<NegativeClass> negative_classes;
    std::optional<long> no_negative_class_up_to;
    std::vector<DegreeCertificate> search_certificates;
};

struct ClassifyOptions {
    long search_depth = 50;
    unsigned threads = 1;
    ProtocolOptions protocol;
};

inline Verdict classify(const Triple& t, const ClassifyOptions& opts = {}) {
    Verdict v;
    v.triple = t;
    v.rules_fired = apply_rules(t);
    bool mds = false, not_mds = false;
    for (const auto& h : v.rules_fired) {
        mds |= h.implies == Status::MDS;
        not_mds |= h.implies == Status::NOT_MDS;
    }
    if (mds && not_mds) {
        throw InvariantViolation("rule-conflict", "MDS and NOT_MDS rules both fire for " + t.to_string());
    }
    if (mds) {
        v.status = Status::MDS;
    } else if (not_mds) {
        v.status = Status::NOT_MDS;
    } else if (opts.search_depth > 0) {
        NegativeClassSearch s = find_negative_classes(t, opts.search_depth, opts.threads, opts.protocol);
        v.negative_classes = std::move(s.hits);
        v.search_certificates = std::move(s.empty_certificates);
        if (v.negative_classes.empty()) v.no_negative_class_up_to = opts.search_depth;
    }
    return v;
}

/// Valid triples a <= b <= c with a + b + c <= sum_max, in lexicographic order.
inline std::vector<Triple> triples_up_to(long sum_max) {
    std::vector<Triple> out;
    for (long a = 1; 3 * a <= sum_max; ++a)
        for (long b = a; a + 2 * b <= sum_max; ++b)
            for (long c = b; a + b + c <= sum_max; ++c)
                if (std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1) out.push_back({a, b, c});
    return out;
}

}  // namespace mdsgrid

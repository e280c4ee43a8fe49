#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/exact/prime_field.hpp"
#include "mdsgrid/gk/criterion.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/linalg/deriv_matrix.hpp"
#include "mdsgrid/linalg/interpolation.hpp"
#include "mdsgrid/wpp/classify.hpp"

namespace mdsgrid {

// Arbitrary-precision values are emitted as strings; counts, indices and
// degrees as JSON numbers.
using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

inline Json json_of(const Integer& x) { return x.get_str(); }
inline Json json_of(const Rational& x) { return to_string(x); }
inline Json json_of(const LatticePoint& p) { return Json::array({to_int64(p.x), to_int64(p.y)}); }

inline Json json_of(const PrimeConfig& c) {
    Json a = Json::array();
    for (auto p : c.primes) a.push_back(p);
    return a;
}

inline Json tool_header(const PrimeConfig& primes) {
    return Json{{"name", "mdsgrid"}, {"version", kVersion}, {"primes", json_of(primes)}};
}

/// The prime that certified a result, or "exact".
inline Json json_of_provenance(const RankCertificate& c) {
    return c.method == RankMethod::Modular ? Json(*c.prime) : Json("exact");
}

inline Json json_of(const RankCertificate& c) {
    Json j{{"support_size", c.support_size}, {"m", c.m}, {"cols", c.cols}, {"rank", c.rank},
           {"method", to_string(c.method)}};
    if (c.prime) j["prime"] = *c.prime;
    j["full_row_rank"] = c.full_row_rank;
    if (c.witness) {
        Json w = Json::array();
        for (const auto& x : *c.witness) w.push_back(json_of(x));
        j["witness"] = std::move(w);
    }
    return j;
}

/// Nonzero witness entries paired with the support point they multiply.
inline Json json_section(const std::vector<Integer>& coeffs, const SupportSet& s) {
    Json a = Json::array();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        a.push_back(Json{{"point", json_of(s[i])}, {"coeff", json_of(coeffs[i])}});
    }
    return a;
}

/// Polynomial sum c_(a,b) x^a y^b over deriv_orders(m), nonzero terms only.
inline Json json_polynomial(const std::vector<Rational>& c, long m) {
    DerivOrderList orders(m);
    Json a = Json::array();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        a.push_back(Json{{"x_exp", orders[k].first}, {"y_exp", orders[k].second}, {"coeff", json_of(c[k])}});
    }
    return a;
}

inline Json json_of(const RuleHit& h) {
    Json j{{"name", h.name}, {"cite", h.citation}, {"implies", to_string(h.implies)}};
    if (h.parameter) j["m"] = *h.parameter;
    return j;
}

inline Json json_of(const Verdict& v) {
    Json j;
    j["triple"] = Json::array({to_int64(v.triple.a), to_int64(v.triple.b), to_int64(v.triple.c)});
    j["status"] = to_string(v.status);
    j["characteristic"] = v.characteristic;
    Json rules = Json::array();
    for (const auto& h : v.rules_fired) rules.push_back(json_of(h));
    j["rules"] = std::move(rules);
    Json neg = Json::array();
    for (const auto& nc : v.negative_classes) {
        neg.push_back(Json{{"d", nc.d}, {"m", nc.m}, {"certificate", json_of(nc.certificate)}});
    }
    j["negative_classes"] = std::move(neg);
    if (v.no_negative_class_up_to) {
        j["no_negative_class_up_to"] = *v.no_negative_class_up_to;
        Json primes = Json::array();
        for (const auto& c : v.search_certificates) primes.push_back(json_of_provenance(c.certificate));
        j["search_certified_by"] = std::move(primes);
    }
    return j;
}

inline Json json_of(const GkReport& r) {
    return Json{{"setup_ok", r.setup_ok},
                {"w", json_of(r.w)},
                {"width", json_of(r.width)},
                {"slopes", Json::array({json_of(r.slopes[0]), json_of(r.slopes[1]), json_of(r.slopes[2])})},
                {"n", json_of(r.n)},
                {"right_count", json_of(r.right_count)},
                {"ns2_integral", r.ns2_integral},
                {"criterion_holds", r.criterion_holds},
                {"sheared_s2", json_of(r.sheared_s2)},
                {"sheared_s2_is_one_plus_inverse_n", r.sheared_s2_is_one_plus_inverse_n}};
}

inline Json json_of(const WitnessCurve& w, const WitnessVerification& v) {
    Json coeffs = Json::array();
    for (const auto& c : w.curve_coeffs) coeffs.push_back(json_of(c));
    return Json{{"d", json_of(w.normalization.d)},
                {"n", json_of(w.normalization.n)},
                {"alpha", json_of(w.normalization.alpha)},
                {"beta", json_of(w.normalization.beta)},
                {"curve_coeffs", std::move(coeffs)},
                {"vertical_lines", Json::array({json_of(w.vertical_from), json_of(w.vertical_to)})},
                {"total_degree", w.total_degree},
                {"expected_degree", v.expected_degree},
                {"points_checked", v.points_checked},
                {"leftmost", json_of(v.leftmost)},
                {"value_at_leftmost", json_of(v.value_at_leftmost)},
                {"violations", v.violations},
                {"verified", v.passed()}};
}

}  // namespace mdsgrid

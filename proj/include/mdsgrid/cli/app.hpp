#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdsgrid/errors.hpp"
#include "mdsgrid/exact/integer.hpp"
#include "mdsgrid/gk/criterion.hpp"
#include "mdsgrid/io/json.hpp"
#include "mdsgrid/lattice/support.hpp"
#include "mdsgrid/lattice/triangle.hpp"
#include "mdsgrid/linalg/interpolation.hpp"
#include "mdsgrid/util/parallel.hpp"
#include "mdsgrid/wpp/classify.hpp"

namespace mdsgrid::cli {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

inline std::vector<Integer> parse_integer_list(const std::string& text, std::size_t expected, const char* what) {
    auto parts = split(text, ',');
    if (expected && parts.size() != expected) {
        throw ValidationError("bad-list", std::string(what) + " expects " + std::to_string(expected) +
                                              " comma-separated integers, got '" + text + "'");
    }
    std::vector<Integer> out;
    for (const auto& p : parts) out.push_back(parse_integer(p));
    return out;
}

inline long to_long_checked(const Integer& x, const char* what) {
    if (!x.fits_slong_p()) throw ValidationError("out-of-range", std::string(what) + " is out of range");
    return x.get_si();
}

/// Renders a JSON document as indented "key: value" lines.
inline void render_human(const Json& j, std::ostream& out, int indent = 0) {
    const std::string pad(indent, ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [&](const Json& v) {
        if (!v.is_array()) return false;
        for (const auto& e : v)
            if (e.is_structured()) return false;
        return true;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (!v.is_structured()) {
            out << pad << it.key() << ": " << scalar(v) << "\n";
        } else if (flat(v)) {
            out << pad << it.key() << ":";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << scalar(v[i]);
            out << "\n";
        } else if (v.is_object()) {
            out << pad << it.key() << ":\n";
            render_human(v, out, indent + 2);
        } else {
            out << pad << it.key() << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i].is_object()) {
                    out << pad << "  - [" << i << "]\n";
                    render_human(v[i], out, indent + 4);
                } else {
                    out << pad << "  - " << v[i].dump() << "\n";
                }
            }
        }
    }
}

struct GlobalOptions {
    bool json = false;
    unsigned threads = default_thread_count();
    std::optional<u64> seed;
    std::size_t attempts = 1;

    ProtocolOptions protocol() const {
        ProtocolOptions p;
        p.primes = seed ? PrimeConfig::with_seed(*seed) : PrimeConfig::defaults();
        p.modular_attempts = attempts;
        return p;
    }
};

/// Support given either as --wpp a,b,c,d or as --triangle SPEC --dilate q.
struct SupportSpec {
    std::string wpp;
    std::string triangle;
    std::string dilate = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--wpp", wpp, "weights and degree a,b,c,d");
        cmd->add_option("--triangle", triangle, "triangle x,y;x,y;x,y");
        cmd->add_option("--dilate", dilate, "dilation factor q for --triangle");
    }

    std::pair<SupportSet, Json> build() const {
        if (wpp.empty() == triangle.empty()) {
            throw ValidationError("support-source", "give exactly one of --wpp or --triangle");
        }
        if (!wpp.empty()) {
            auto v = parse_integer_list(wpp, 4, "--wpp");
            try {
                validate_triple(v[0], v[1], v[2]);
                if (v[3] < 0) throw ValidationError("negative-degree", "degree must be nonnegative");
                return {support_from_wpp(v[0], v[1], v[2], v[3]),
                        Json{{"wpp", Json::array({v[0].get_str(), v[1].get_str(), v[2].get_str()})}, {"d", v[3].get_str()}}};
            } catch (const DomainError& e) {
                throw ValidationError(e.code(), e.what());
            }
        }
        Triangle t = parse_triangle(triangle);
        Integer q = parse_integer(dilate);
        if (q < 1) throw ValidationError("bad-dilation", "--dilate must be >= 1");
        return {enumerate_points(t, q), Json{{"triangle", format_triangle(t)}, {"dilate", q.get_str()}}};
    }
};

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"mdsgrid: certified interpolation and classification tools for blow-ups of toric surfaces"};
        app.require_subcommand(1);
        app.fallthrough();
        app.set_version_flag("--version", std::string("mdsgrid ") + kVersion);
        app.add_flag("--json", g_.json, "emit JSON");
        app.add_option("--threads", g_.threads, "worker threads")->check(CLI::PositiveNumber);
        app.add_option("--seed", seed_text_, "seed for extra randomized primes appended to the fixed list");
        app.add_option("--attempts", g_.attempts, "primes tried before exact elimination")->check(CLI::PositiveNumber);

        // classify
        std::string ca, cb, cc;
        long depth = 50;
        auto* classify_cmd = app.add_subcommand("classify", "classify Bl_e P(a,b,c)");
        classify_cmd->add_option("a", ca)->required();
        classify_cmd->add_option("b", cb)->required();
        classify_cmd->add_option("c", cc)->required();
        classify_cmd->add_option("--search-depth", depth, "negative-class search depth (0 = none)");

        // empty
        SupportSpec empty_support;
        long empty_m = 0;
        auto* empty_cmd = app.add_subcommand("empty", "decide emptiness of |dH - mE|");
        empty_support.attach(empty_cmd);
        empty_cmd->add_option("--m", empty_m, "multiplicity")->required();

        // separate
        SupportSpec sep_support;
        long sep_m = 0;
        std::string sep_point;
        bool sep_leftmost = false, sep_no_witness = false;
        auto* sep_cmd = app.add_subcommand("separate", "find a polynomial separating one support point");
        sep_support.attach(sep_cmd);
        sep_cmd->add_option("--m", sep_m, "multiplicity (degree bound m-1)")->required();
        auto* point_opt = sep_cmd->add_option("--point", sep_point, "point i,j");
        auto* left_opt = sep_cmd->add_flag("--leftmost", sep_leftmost, "use the lexicographically first point");
        point_opt->excludes(left_opt);
        sep_cmd->add_flag("--no-witness", sep_no_witness, "decide only, without producing coefficients");

        // gk-check
        std::string gk_triangle, gk_d;
        auto* gk_cmd = app.add_subcommand("gk-check", "evaluate the Gonzalez-Karu criterion and verify witnesses");
        gk_cmd->add_option("--triangle", gk_triangle, "triangle x,y;x,y;x,y")->required();
        gk_cmd->add_option("--d", gk_d, "comma-separated dilations (default: two smallest admissible)");

        // negcurve
        std::string na, nb, nc;
        long max_d = 0;
        auto* neg_cmd = app.add_subcommand("negcurve", "search effective negative classes dH - mE");
        neg_cmd->add_option("a", na)->required();
        neg_cmd->add_option("b", nb)->required();
        neg_cmd->add_option("c", nc)->required();
        neg_cmd->add_option("--max-d", max_d, "largest degree d")->required();

        // question1170
        long q = 0;
        std::string degree = "m-1";
        bool allow_large = false;
        auto* q_cmd = app.add_subcommand("question1170", "interpolation question for the triangle (0,0),(10,40),(36,27)");
        q_cmd->add_option("--q", q, "dilation q")->required();
        q_cmd->add_option("--degree", degree, "degree bound: m-1, m, or both")
            ->check(CLI::IsMember({"m-1", "m", "both"}));
        q_cmd->add_flag("--allow-large", allow_large, "permit q >= 4");

        // scan
        long sum_max = 0;
        long scan_depth = 50;
        std::string csv_path;
        auto* scan_cmd = app.add_subcommand("scan", "classify all triples with a+b+c <= S");
        scan_cmd->add_option("--sum-max", sum_max, "largest a+b+c")->required();
        scan_cmd->add_option("--search-depth", scan_depth, "negative-class search depth for UNKNOWN triples");
        scan_cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e, out_, err_);
            return code == 0 ? 0 : 2;
        }

        try {
            if (!seed_text_.empty()) {
                Integer s = parse_integer(seed_text_);
                if (s < 0 || !s.fits_ulong_p()) throw ValidationError("bad-seed", "--seed must be a 64-bit unsigned integer");
                g_.seed = s.get_ui();
            }
            Json doc;
            doc["tool"] = tool_header(g_.protocol().primes);
            int status = 0;
            if (*classify_cmd) {
                status = cmd_classify(doc, ca, cb, cc, depth);
            } else if (*empty_cmd) {
                status = cmd_empty(doc, empty_support, empty_m);
            } else if (*sep_cmd) {
                if (sep_point.empty() && !sep_leftmost) throw ValidationError("missing-point", "give --point i,j or --leftmost");
                status = cmd_separate(doc, sep_support, sep_m, sep_point, sep_no_witness);
            } else if (*gk_cmd) {
                status = cmd_gk(doc, gk_triangle, gk_d);
            } else if (*neg_cmd) {
                status = cmd_negcurve(doc, na, nb, nc, max_d);
            } else if (*q_cmd) {
                status = cmd_question(doc, q, degree, allow_large);
            } else if (*scan_cmd) {
                return cmd_scan(sum_max, scan_depth, csv_path);
            }
            emit(doc);
            return status;
        } catch (const InvariantViolation& e) {
            err_ << "internal invariant violated [" << e.code() << "]: " << e.what() << "\n";
            return 3;
        } catch (const Error& e) {
            err_ << "error [" << e.code() << "]: " << e.what() << "\n";
            return 2;
        }
    }

private:
    void emit(const Json& doc) {
        if (g_.json) {
            out_ << doc.dump(2) << "\n";
        } else {
            render_human(doc, out_);
        }
    }

    static void require_multiplicity(long m) {
        if (m < 1) throw ValidationError("bad-multiplicity", "--m must be >= 1");
    }

    int cmd_classify(Json& doc, const std::string& a, const std::string& b, const std::string& c, long depth) {
        if (depth < 0) throw ValidationError("bad-depth", "--search-depth must be >= 0");
        Triple t = validate_triple(parse_integer(a), parse_integer(b), parse_integer(c));
        ClassifyOptions opts;
        opts.search_depth = depth;
        opts.threads = g_.threads;
        opts.protocol = g_.protocol();
        doc["command"] = "classify";
        Json verdict = json_of(classify(t, opts));
        for (auto& [k, v] : verdict.items()) doc[k] = v;
        return 0;
    }

    int cmd_empty(Json& doc, const SupportSpec& spec, long m) {
        require_multiplicity(m);
        auto [s, source] = spec.build();
        EmptinessResult r = linear_system_empty(s, m, g_.protocol());
        doc["command"] = "empty";
        doc["support"] = source;
        doc["support_size"] = s.size();
        doc["m"] = m;
        doc["cols"] = derivative_count(m);
        doc["empty"] = r.empty;
        doc["certified_by"] = json_of_provenance(r.certificate);
        doc["certificate"] = json_of(r.certificate);
        if (r.certificate.witness) doc["section"] = json_section(*r.certificate.witness, s);
        return 0;
    }

    int cmd_separate(Json& doc, const SupportSpec& spec, long m, const std::string& point, bool no_witness) {
        require_multiplicity(m);
        auto [s, source] = spec.build();
        if (s.empty()) throw ValidationError("empty-support", "the support has no lattice points");
        std::size_t idx = s.leftmost_index();
        if (!point.empty()) {
            auto ij = parse_integer_list(point, 2, "--point");
            auto found = s.index_of(LatticePoint{ij[0], ij[1]});
            if (!found) throw ValidationError("point-not-in-support", "point " + point + " is not in the support");
            idx = *found;
        }
        doc["command"] = "separate";
        doc["support"] = source;
        doc["support_size"] = s.size();
        doc["m"] = m;
        doc["degree_bound"] = m - 1;
        doc["point"] = json_of(s[idx]);
        doc["index"] = idx;
        std::optional<std::vector<Rational>> c;
        if (!no_witness) c = separating_polynomial(s, m, idx, g_.protocol());
        if (c) {
            doc["separable"] = true;
            doc["certified_by"] = "exact";
            doc["polynomial"] = json_polynomial(*c, m);
            return 0;
        }
        SeparationDecision dec = separation_exists(s, m, idx, g_.protocol());
        if (!no_witness && dec.separable) {
            throw InvariantViolation("separation-disagree", "exact solve and rank test disagree");
        }
        doc["separable"] = dec.separable;
        doc["certified_by"] = json_of_provenance(dec.certificate);
        doc["certificate"] = json_of(dec.certificate);
        if (!dec.separable && dec.certificate.witness) doc["obstruction"] = json_section(*dec.certificate.witness, s);
        return 0;
    }

    int cmd_gk(Json& doc, const std::string& spec, const std::string& d_list) {
        Triangle t = parse_triangle(spec);
        std::vector<Integer> ds;
        if (d_list.empty()) {
            auto two = smallest_admissible_dilations(t);
            ds.assign(two.begin(), two.end());
        } else {
            ds = parse_integer_list(d_list, 0, "--d");
            for (const auto& d : ds)
                if (d < 1) throw ValidationError("bad-dilation", "--d entries must be >= 1");
        }
        GkReport report;
        try {
            report = gk_criterion(t);
        } catch (const DomainError& e) {
            throw ValidationError(e.code(), e.what());
        }
        doc["command"] = "gk-check";
        doc["triangle"] = format_triangle(t);
        doc["report"] = json_of(report);
        Json witnesses = Json::array();
        int status = 0;
        for (const auto& d : ds) {
            try {
                auto [curve, check] = gk_witness_report(t, d);
                witnesses.push_back(json_of(curve, check));
                if (!check.passed()) status = 3;
            } catch (const InvariantViolation&) {
                throw;
            } catch (const DomainError& e) {
                witnesses.push_back(Json{{"d", d.get_str()}, {"error", e.code()}, {"message", e.what()}});
            }
        }
        doc["witnesses"] = std::move(witnesses);
        if (status == 3) err_ << "internal invariant violated [witness-verification]: see report\n";
        return status;
    }

    int cmd_negcurve(Json& doc, const std::string& a, const std::string& b, const std::string& c, long max_d) {
        if (max_d < 1) throw ValidationError("bad-depth", "--max-d must be >= 1");
        Triple t = validate_triple(parse_integer(a), parse_integer(b), parse_integer(c));
        NegativeClassSearch s = find_negative_classes(t, max_d, g_.threads, g_.protocol());
        doc["command"] = "negcurve";
        doc["triple"] = Json::array({to_int64(t.a), to_int64(t.b), to_int64(t.c)});
        doc["max_d"] = max_d;
        Json hits = Json::array();
        for (const auto& h : s.hits) {
            SupportSet sup = support_from_wpp(t.a, t.b, t.c, h.d);
            hits.push_back(Json{{"d", h.d},
                                {"m", h.m},
                                {"support_size", sup.size()},
                                {"certified_by", json_of_provenance(h.certificate)},
                                {"certificate", json_of(h.certificate)},
                                {"section", json_section(*h.certificate.witness, sup)}});
        }
        doc["hits"] = std::move(hits);
        Json empties = Json::array();
        for (const auto& e : s.empty_certificates) {
            empties.push_back(Json{{"d", e.d}, {"m", e.certificate.m}, {"support_size", e.certificate.support_size},
                                   {"certified_by", json_of_provenance(e.certificate)}});
        }
        doc["empty"] = std::move(empties);
        return 0;
    }

    int cmd_question(Json& doc, long q, const std::string& degree, bool allow_large) {
        if (q < 1) throw ValidationError("bad-dilation", "--q must be >= 1");
        if (q >= 4 && !allow_large) throw ValidationError("needs-allow-large", "q >= 4 needs --allow-large");
        const Triangle delta = parse_triangle("0,0;10,40;36,27");
        SupportSet s = enumerate_points(delta, q);
        SupportSet w = support_from_wpp(9, 10, 13, Integer(1170 * q));
        const Integer Q(q);
        const Integer ehrhart = 585 * Q * Q + 16 * Q + 1;
        if (Integer(static_cast<unsigned long>(s.size())) != ehrhart || w.size() != s.size()) {
            throw InvariantViolation("support-count", "triangle, weighted and Ehrhart counts disagree");
        }
        const long mq = to_long_checked(Integer(isqrt(Integer(1170 * Q * Q)) + 1), "m_q");
        doc["command"] = "question1170";
        doc["q"] = q;
        doc["triangle"] = format_triangle(delta);
        doc["support_size"] = s.size();
        doc["wpp_support_size"] = w.size();
        doc["ehrhart_count"] = ehrhart.get_str();
        doc["m_q"] = mq;
        std::vector<long> multiplicities;
        if (degree == "m-1" || degree == "both") multiplicities.push_back(mq);
        if (degree == "m" || degree == "both") multiplicities.push_back(mq + 1);
        Json runs = Json::array();
        for (long m : multiplicities) {
            EmptinessResult r = linear_system_empty(s, m, g_.protocol());
            runs.push_back(Json{{"degree_bound", m - 1},
                                {"m", m},
                                {"rows", s.size()},
                                {"cols", derivative_count(m)},
                                {"empty", r.empty},
                                {"every_point_separable", r.empty},
                                {"certified_by", json_of_provenance(r.certificate)},
                                {"certificate", json_of(r.certificate)}});
        }
        doc["runs"] = std::move(runs);
        return 0;
    }

    int cmd_scan(long sum_max, long depth, const std::string& csv_path) {
        if (sum_max < 3) throw ValidationError("bad-sum", "--sum-max must be >= 3");
        if (depth < 0) throw ValidationError("bad-depth", "--search-depth must be >= 0");
        std::vector<Triple> triples = triples_up_to(sum_max);
        ProtocolOptions protocol = g_.protocol();
        auto verdicts = parallel_map(triples.size(), g_.threads, [&](std::size_t i) {
            ClassifyOptions opts;
            opts.search_depth = depth;
            opts.protocol = protocol;
            return classify(triples[i], opts);
        });
        std::ostringstream csv;
        csv << "a,b,c,status,first_rule,neg_d,neg_m\n";
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& v : verdicts) {
            ++counts[static_cast<int>(v.status)];
            csv << v.triple.a << "," << v.triple.b << "," << v.triple.c << "," << to_string(v.status) << ","
                << (v.rules_fired.empty() ? "" : v.rules_fired.front().name) << ",";
            if (!v.negative_classes.empty()) csv << v.negative_classes.front().d << "," << v.negative_classes.front().m;
            else csv << ",";
            csv << "\n";
        }
        if (csv_path.empty()) {
            out_ << "# mdsgrid " << kVersion << " primes";
            for (auto p : protocol.primes.primes) out_ << " " << p;
            out_ << "\n" << csv.str();
            return 0;
        }
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw ValidationError("csv-path", "cannot write " + csv_path);
        f << csv.str();
        Json doc;
        doc["tool"] = tool_header(protocol.primes);
        doc["command"] = "scan";
        doc["sum_max"] = sum_max;
        doc["search_depth"] = depth;
        doc["triples"] = triples.size();
        doc["mds"] = counts[0];
        doc["not_mds"] = counts[1];
        doc["unknown"] = counts[2];
        doc["csv"] = csv_path;
        emit(doc);
        return 0;
    }

    std::ostream& out_;
    std::ostream& err_;
    GlobalOptions g_;
    std::string seed_text_;
};

/// Entry point shared by the tool and the tests. Exit codes: 0 success,
/// 2 invalid input, 3 internal invariant violation.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return Runner(out, err).run(argc, argv);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"mdsgrid"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mdsgrid::cli

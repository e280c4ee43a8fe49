#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mdsgrid/exact/integer.hpp"

namespace mdsgrid {

/// Polynomial in Q[x, y], sparse, keyed by (deg_x, deg_y). No zero terms are stored.
class BivariatePolynomial {
public:
    using Exponent = std::pair<long, long>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rational& c) {
        BivariatePolynomial p;
        p.add_term(0, 0, c);
        return p;
    }
    static BivariatePolynomial monomial(long i, long j, const Rational& c = 1) {
        BivariatePolynomial p;
        p.add_term(i, j, c);
        return p;
    }
    /// u*x + v*y + w
    static BivariatePolynomial linear(const Rational& u, const Rational& v, const Rational& w) {
        BivariatePolynomial p;
        p.add_term(1, 0, u);
        p.add_term(0, 1, v);
        p.add_term(0, 0, w);
        return p;
    }

    void add_term(long i, long j, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Rational coefficient(long i, long j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BivariatePolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) { return a *= s; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return out;
    }
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a.terms_ == b.terms_; }

    Rational evaluate(const Integer& x, const Integer& y) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) acc += c * ipow(x, e.first) * ipow(y, e.second);
        return acc;
    }

    /// Evaluator for many points: clears denominators once and works in Z.
    class Evaluator {
    public:
        explicit Evaluator(const BivariatePolynomial& p) {
            for (const auto& [e, c] : p.terms_) den_ = lcm(den_, c.get_den());
            for (const auto& [e, c] : p.terms_) {
                terms_.push_back({e.first, e.second, divexact(Integer(c.get_num() * den_), c.get_den())});
                max_x_ = std::max(max_x_, e.first);
                max_y_ = std::max(max_y_, e.second);
            }
        }

        Rational operator()(const Integer& x, const Integer& y) const {
            std::vector<Integer> px(max_x_ + 1), py(max_y_ + 1);
            px[0] = py[0] = 1;
            for (long i = 1; i <= max_x_; ++i) px[i] = px[i - 1] * x;
            for (long j = 1; j <= max_y_; ++j) py[j] = py[j - 1] * y;
            Integer acc = 0;
            for (const auto& t : terms_) acc += t.coeff * px[t.i] * py[t.j];
            return make_rational(acc, den_);
        }

    private:
        struct Term {
            long i, j;
            Integer coeff;
        };
        std::vector<Term> terms_;
        Integer den_ = 1;
        long max_x_ = 0, max_y_ = 0;
    };

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            Rational a = abs(c);
            bool unit = a == 1 && (e.first || e.second);
            if (!unit) s += mdsgrid::to_string(a);
            if (e.first) s += std::string(unit ? "" : "*") + "x" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
            if (e.second) {
                s += std::string(unit && !e.first ? "" : "*") + "y" + (e.second > 1 ? "^" + std::to_string(e.second) : "");
            }
        }
        return s;
    }

private:
    std::map<Exponent, Rational> terms_;
};

/// binom(l, k) = l (l-1) ... (l-k+1) / k! for a polynomial l, k >= 0.
inline BivariatePolynomial binomial_polynomial(const BivariatePolynomial& l, long k) {
    BivariatePolynomial out = BivariatePolynomial::constant(1);
    for (long t = 0; t < k; ++t) {
        out = out * (l + BivariatePolynomial::constant(-t));
        out *= make_rational(Integer(1), Integer(t + 1));
    }
    return out;
}

}  // namespace mdsgrid

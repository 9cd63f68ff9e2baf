#pragma once

// Shared helpers for the unit tests: printers for Catch2, small series
// constructors and hand-rolled random generators.

#include "gforest/exact_ring.hpp"
#include "gforest/power_series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

namespace Catch {
template <>
struct StringMaker<gforest::BivarPoly> {
    static std::string convert(const gforest::BivarPoly& p) { return p.is_zero() ? "0" : gforest::to_string(p); }
};
template <>
struct StringMaker<gforest::TruncSeries> {
    static std::string convert(const gforest::TruncSeries& s) {
        std::string out = "[";
        for (int i = 0; i <= s.order(); ++i) {
            if (i) out += ", ";
            out += StringMaker<gforest::BivarPoly>::convert(s[i]);
        }
        return out + "] order " + std::to_string(s.order());
    }
};
template <>
struct StringMaker<gforest::Rational> {
    static std::string convert(const gforest::Rational& r) { return r.get_str(); }
};
template <>
struct StringMaker<gforest::BigInt> {
    static std::string convert(const gforest::BigInt& r) { return r.get_str(); }
};
} // namespace Catch

namespace testing {

using namespace gforest;

/// Series with integer coefficients given lowest first, padded with zeros.
inline TruncSeries ints(const std::vector<long>& c, int order) {
    std::vector<BivarPoly> p;
    for (long v : c) p.emplace_back(v);
    return TruncSeries::polynomial(p, order);
}

/// a + b q + c y ... from explicit (coef, dy, dq) triples.
inline BivarPoly poly(std::initializer_list<std::tuple<long, int, int>> terms) {
    std::vector<Term> t;
    for (const auto& [c, dy, dq] : terms) t.push_back(Term{dy, dq, Rational(c)});
    return BivarPoly::from_terms(t);
}

inline BivarPoly Y() { return BivarPoly::y(); }
inline BivarPoly Q() { return BivarPoly::q(); }

/// Deterministic source of small random objects.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational() {
        const long num = uniform(-9, 9);
        const long den = uniform(1, 5);
        return make_rational(num, den);
    }

    BivarPoly poly(int max_terms = 4, int max_deg = 3) {
        std::vector<Term> t;
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i) t.push_back(Term{uniform(0, max_deg), uniform(0, max_deg), rational()});
        return BivarPoly::from_terms(t);
    }

    /// Random series whose x^0 coefficient is `c0` (or random when unset).
    TruncSeries series(int order, const BivarPoly* c0 = nullptr) {
        TruncSeries s(order);
        for (int i = 0; i <= order; ++i) s.coeff(i) = poly(3, 2);
        if (c0) s.coeff(0) = *c0;
        return s;
    }

    /// f = c x + ... with c a nonzero rational, suitable for reversion.
    TruncSeries revertible(int order) {
        TruncSeries s = series(order);
        s.coeff(0) = BivarPoly();
        Rational c = 0;
        while (c == 0) c = rational();
        s.coeff(1) = BivarPoly(c);
        return s;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace testing

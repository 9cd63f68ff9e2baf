#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gforest {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Histogram keyed by (helicity k, mom-dimension r).
using StatHistogram = std::map<std::pair<int, int>, BigInt>;

Rational make_rational(const BigInt& num, const BigInt& den);
bool is_integer(const Rational& r);

/// One monomial coef * y^dy * q^dq.
struct Term {
    int dy = 0;
    int dq = 0;
    Rational coef;
};

/// Sparse polynomial in y and q with rational coefficients.
///
/// Terms are kept sorted by (dq, dy) ascending with no zero coefficients, so
/// two polynomials are equal exactly when their term lists are equal.
class BivarPoly {
public:
    BivarPoly() = default;
    BivarPoly(long c);  // NOLINT(google-explicit-constructor)
    BivarPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static BivarPoly monomial(const Rational& c, int dy, int dq);
    static BivarPoly y() { return monomial(1, 1, 0); }
    static BivarPoly q() { return monomial(1, 0, 1); }
    /// Builds from unsorted terms; duplicates are summed and zeros dropped.
    static BivarPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// True when every coefficient has denominator 1.
    bool is_integral() const;
    /// True when the polynomial is a rational constant (possibly zero).
    bool is_constant() const;
    Rational coefficient(int dy, int dq) const;
    Rational constant_term() const { return coefficient(0, 0); }
    int max_dy() const;
    int max_dq() const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const BivarPoly& o);
    BivarPoly& operator*=(const Rational& c);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
    friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b);
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    /// Substitutes q := v; the result has only dq == 0 terms.
    BivarPoly eval_q(const Rational& v) const;
    /// Substitutes y := v; the result has only dy == 0 terms.
    BivarPoly eval_y(const Rational& v) const;
    /// Coefficient of y^dy as a polynomial in q (dy of the result is 0).
    BivarPoly y_slice(int dy) const;

private:
    std::vector<Term> terms_;
};

BivarPoly pow(const BivarPoly& p, unsigned e);

/// Canonical text form: terms by decreasing q-degree, then decreasing
/// y-degree, e.g. "q^4+4q^3+10q^2+12q+6" or "y^2q^2+yq^2".
std::string to_string(const BivarPoly& p);
std::string to_string(const Rational& r);

/// LaTeX form: "q^{10}+7 q^9+...".
std::string to_latex(const BivarPoly& p);

/// [{"dy":..,"dq":..,"num":"..","den":".."}, ...] in storage order; numbers
/// are strings so they survive JSON readers without big integers.
std::string to_json(const BivarPoly& p);

} // namespace gforest

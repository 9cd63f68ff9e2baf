#pragma once

#include "gforest/exact_ring.hpp"

#include <vector>

namespace gforest {

/// Power series in x with BivarPoly coefficients, known for x^0..x^order.
///
/// Binary operations on series of different orders truncate to the smaller
/// order; nothing ever claims precision beyond what its inputs carry.
class TruncSeries {
public:
    explicit TruncSeries(int order = 0);
    TruncSeries(int order, std::vector<BivarPoly> coeffs);

    static TruncSeries zero(int order) { return TruncSeries(order); }
    static TruncSeries constant(const BivarPoly& c, int order);
    /// c * x^power (zero if power > order)
    static TruncSeries monomial(const BivarPoly& c, int power, int order);
    static TruncSeries x(int order) { return monomial(1L, 1, order); }
    /// Expansion of a polynomial in x given by its coefficient list.
    static TruncSeries polynomial(const std::vector<BivarPoly>& coeffs, int order);

    int order() const { return order_; }
    /// [x^i]; zero for i beyond the stored coefficients is NOT implied, so
    /// requesting i > order throws order_exceeded.
    const BivarPoly& operator[](int i) const;
    BivarPoly& coeff(int i);
    const std::vector<BivarPoly>& coeffs() const { return coeffs_; }

    TruncSeries truncated(int order) const;
    bool is_zero() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const BivarPoly& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const BivarPoly& c) { return a *= c; }
    friend TruncSeries operator*(const BivarPoly& c, TruncSeries a) { return a *= c; }

    /// Throws order_mismatch unless both orders agree.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    int order_;
    std::vector<BivarPoly> coeffs_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }

/// a / b. [x^0]b must be a nonzero rational constant.
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_inverse(const TruncSeries& b);

TruncSeries series_pow(const TruncSeries& a, unsigned e);
TruncSeries derivative(const TruncSeries& a);

/// x * a; gains one order of precision.
TruncSeries shift_up(const TruncSeries& a);
/// a / x; requires [x^0]a == 0 and loses one order of precision.
TruncSeries shift_down(const TruncSeries& a);

/// outer(inner(x)), truncated to the smaller order. Requires [x^0]inner == 0.
TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner);

/// Compositional inverse by Newton iteration with precision doubling.
/// Requires [x^0]f == 0 and [x^1]f a nonzero rational constant.
TruncSeries series_reversion(const TruncSeries& f);

/// [x^n] (C^<-1>)^k evaluated as (k/n) [x^(n-k)] (x/C)^n, without forming
/// the reversion.
BivarPoly lagrange_coefficient(const TruncSeries& c, int n, int k);

} // namespace gforest

#include "gforest/power_series.hpp"

#include "gforest/error.hpp"

#include <algorithm>
#include <string>

namespace gforest {

namespace {

Rational unit_inverse(const BivarPoly& c, const char* what) {
    if (!c.is_constant() || c.is_zero()) {
        throw non_unit_constant_term(std::string(what) + " is not a nonzero rational constant: " +
                                     to_string(c));
    }
    return Rational(1) / c.constant_term();
}

} // namespace

TruncSeries::TruncSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("negative series order");
}

TruncSeries::TruncSeries(int order, std::vector<BivarPoly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("negative series order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::constant(const BivarPoly& c, int order) { return monomial(c, 0, order); }

TruncSeries TruncSeries::monomial(const BivarPoly& c, int power, int order) {
    TruncSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

TruncSeries TruncSeries::polynomial(const std::vector<BivarPoly>& coeffs, int order) {
    TruncSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s.coeffs_[i] = coeffs[i];
    return s;
}

const BivarPoly& TruncSeries::operator[](int i) const {
    if (i < 0 || i > order_) {
        throw order_exceeded("coefficient x^" + std::to_string(i) + " requested from a series of order " +
                             std::to_string(order_));
    }
    return coeffs_[i];
}

BivarPoly& TruncSeries::coeff(int i) {
    if (i < 0 || i > order_) {
        throw order_exceeded("coefficient x^" + std::to_string(i) + " requested from a series of order " +
                             std::to_string(order_));
    }
    return coeffs_[i];
}

TruncSeries TruncSeries::truncated(int order) const {
    if (order > order_) {
        throw order_exceeded("cannot extend a series of order " + std::to_string(order_) + " to " +
                             std::to_string(order));
    }
    return TruncSeries(order, std::vector<BivarPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BivarPoly& p) { return p.is_zero(); });
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int i = 0; i <= order_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const BivarPoly& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) {
        throw order_mismatch("comparing series of orders " + std::to_string(a.order_) + " and " +
                             std::to_string(b.order_));
    }
    return a.coeffs_ == b.coeffs_;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            out.coeff(i + j) += a[i] * b[j];
        }
    }
    return out;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    const Rational inv0 = unit_inverse(b[0], "[x^0] of the divisor");
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
        BivarPoly acc = a[i];
        for (int j = 1; j <= i; ++j) {
            if (b[j].is_zero() || out[i - j].is_zero()) continue;
            acc -= b[j] * out[i - j];
        }
        out.coeff(i) = acc * inv0;
    }
    return out;
}

TruncSeries series_inverse(const TruncSeries& b) {
    return series_div(TruncSeries::constant(1L, b.order()), b);
}

TruncSeries series_pow(const TruncSeries& a, unsigned e) {
    TruncSeries result = TruncSeries::constant(1L, a.order());
    TruncSeries base = a;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

TruncSeries derivative(const TruncSeries& a) {
    if (a.order() == 0) return TruncSeries(0);
    TruncSeries out(a.order() - 1);
    for (int i = 1; i <= a.order(); ++i) out.coeff(i - 1) = a[i] * Rational(i);
    return out;
}

TruncSeries shift_up(const TruncSeries& a) {
    std::vector<BivarPoly> cs;
    cs.reserve(a.coeffs().size() + 1);
    cs.emplace_back();
    cs.insert(cs.end(), a.coeffs().begin(), a.coeffs().end());
    return TruncSeries(a.order() + 1, std::move(cs));
}

TruncSeries shift_down(const TruncSeries& a) {
    if (!a[0].is_zero()) throw nonzero_constant_term("cannot divide by x: [x^0] = " + to_string(a[0]));
    if (a.order() == 0) throw order_exceeded("dividing an order-0 series by x leaves no known coefficients");
    return TruncSeries(a.order() - 1, std::vector<BivarPoly>(a.coeffs().begin() + 1, a.coeffs().end()));
}

TruncSeries series_compose(const TruncSeries& outer, const TruncSeries& inner) {
    if (!inner[0].is_zero()) {
        throw nonzero_constant_term("inner series of a composition has [x^0] = " + to_string(inner[0]));
    }
    const int n = std::min(outer.order(), inner.order());
    const TruncSeries in = inner.truncated(n);
    TruncSeries result = TruncSeries::constant(outer[n], n);
    for (int i = n - 1; i >= 0; --i) {
        result = result * in;
        result.coeff(0) += outer[i];
    }
    return result;
}

TruncSeries series_reversion(const TruncSeries& f) {
    if (!f[0].is_zero()) throw not_invertible("series to invert has [x^0] = " + to_string(f[0]));
    const int n = f.order();
    if (n == 0) return TruncSeries(0);
    Rational inv1;
    try {
        inv1 = unit_inverse(f[1], "[x^1] of the series to invert");
    } catch (const non_unit_constant_term& e) {
        throw not_invertible(e.what());
    }

    TruncSeries g = TruncSeries::monomial(BivarPoly(inv1), 1, n);
    int prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        const TruncSeries ft = f.truncated(prec);
        const TruncSeries gt = g.truncated(prec);
        const TruncSeries residual = series_compose(ft, gt) - TruncSeries::x(prec);
        const TruncSeries slope = series_compose(derivative(ft), gt.truncated(prec - 1));
        const TruncSeries step = shift_up(series_div(shift_down(residual), slope));
        g = TruncSeries(n, (gt - step).coeffs());
    }
    return g;
}

BivarPoly lagrange_coefficient(const TruncSeries& c, int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("lagrange_coefficient needs n >= k >= 1");
    if (!c[0].is_zero()) throw not_invertible("series to invert has [x^0] = " + to_string(c[0]));
    try {
        unit_inverse(c[1], "[x^1] of the series to invert");
    } catch (const non_unit_constant_term& e) {
        throw not_invertible(e.what());
    }
    const int need = n - k;
    if (need > c.order() - 1) {
        throw order_exceeded("lagrange_coefficient needs C to order " + std::to_string(need + 1) + ", have " +
                             std::to_string(c.order()));
    }
    const TruncSeries x_over_c = series_inverse(shift_down(c).truncated(need));
    return series_pow(x_over_c, static_cast<unsigned>(n))[need] * make_rational(k, n);
}

} // namespace gforest

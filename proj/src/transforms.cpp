#include "gforest/transforms.hpp"

#include "gforest/error.hpp"

#include <string>

namespace gforest::transforms {

WeightFunction WeightFunction::tabulated(int min_degree, std::map<int, BivarPoly> values) {
    WeightFunction w;
    w.min_degree_ = min_degree;
    for (auto& [n, v] : values) {
        if (n >= min_degree && !v.is_zero()) w.values_.emplace(n, std::move(v));
    }
    return w;
}

WeightFunction WeightFunction::closed_form(int min_degree, TruncSeries series) {
    WeightFunction w;
    w.min_degree_ = min_degree;
    for (int i = 0; i < min_degree && i <= series.order(); ++i) series.coeff(i) = BivarPoly();
    w.series_ = std::move(series);
    return w;
}

BivarPoly WeightFunction::operator()(int n) const {
    if (n < min_degree_) return {};
    if (series_) return (*series_)[n];
    auto it = values_.find(n);
    return it == values_.end() ? BivarPoly() : it->second;
}

TruncSeries WeightFunction::series(int order) const {
    if (series_) return series_->truncated(order);
    TruncSeries s(order);
    for (const auto& [n, v] : values_) {
        if (n <= order) s.coeff(n) = v;
    }
    return s;
}

TruncSeries speicher_transform(const TruncSeries& F) {
    if (F[0] != BivarPoly(1L)) throw invalid_weight("speicher_transform needs [x^0]F = 1, got " + to_string(F[0]));
    // x / F known through x^(N+1); its reversion is x H_NC.
    const TruncSeries x_over_f = shift_up(series_inverse(F));
    return shift_down(series_reversion(x_over_f));
}

TruncSeries speicher_transform(const WeightFunction& f, int order) {
    TruncSeries F = f.series(order);
    F.coeff(0) = BivarPoly(1L);
    return speicher_transform(F);
}

TruncSeries tree_transform(const TruncSeries& F) {
    for (int i = 0; i < 3 && i <= F.order(); ++i) {
        if (!F[i].is_zero()) {
            throw invalid_weight("tree weight series has nonzero [x^" + std::to_string(i) + "] = " + to_string(F[i]));
        }
    }
    if (F.order() < 2) throw order_exceeded("tree_transform needs a weight series of order >= 2");
    // F / x is known through x^(N-1); so is its reversion, and x times it gives H through x^N.
    const TruncSeries inner = TruncSeries::x(F.order() - 1) - shift_down(F);
    return shift_up(series_reversion(inner));
}

TruncSeries tree_transform(const WeightFunction& f, int order) {
    TruncSeries F = f.series(order);
    for (int i = 0; i < 3 && i <= order; ++i) F.coeff(i) = BivarPoly();
    return tree_transform(F);
}

TruncSeries dissection_transform(const TruncSeries& F) { return tree_transform(F); }

TruncSeries forest_transform(const TruncSeries& F, const BivarPoly& h1) {
    TruncSeries block = tree_transform(F);
    block.coeff(0) += BivarPoly(1L);
    block.coeff(1) += h1;
    return speicher_transform(block);
}

TruncSeries forest_transform(const WeightFunction& g, int order) {
    TruncSeries F = g.series(order);
    for (int i = 0; i < 3 && i <= order; ++i) F.coeff(i) = BivarPoly();
    return forest_transform(F, g(1));
}

BigInt tree_type_count(int n, const std::vector<int>& r) {
    if (n < 2) return 0;
    long weighted = 0;
    long total = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0) return 0;
        weighted += static_cast<long>(r[i]) * static_cast<long>(i + 1);  // degree i+3 contributes (deg - 2)
        total += r[i];
    }
    if (weighted != n - 2) return 0;
    BigInt num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n + total - 2));
    BigInt den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n - 1));
    for (int ri : r) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ri));
        den *= f;
    }
    return num / den;
}

} // namespace gforest::transforms

#include "gforest/genfun.hpp"

#include "gforest/error.hpp"
#include "gforest/transforms.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace gforest::genfun {

namespace {

const BivarPoly Y = BivarPoly::y();
const BivarPoly Q = BivarPoly::q();

BivarPoly yq_power(int dy, int dq) { return BivarPoly::monomial(1, dy, dq); }

// (1 + c x) as a series
TruncSeries linear(const BivarPoly& c, int order) {
    return TruncSeries::polynomial({BivarPoly(1L), c}, order);
}

// e(d) = (-1)^(d-1), the weight that collapses each all-white or all-black
// subtree class to a single contribution.
long alternating_sign(int d) { return (d % 2 == 1) ? 1 : -1; }

BivarPoly vertex_weight(bool plabic, int d) {
    BivarPoly w = yq_power(0, d - 2) * (BivarPoly(1L) + yq_power(d - 2, 0)) * Rational(alternating_sign(d));
    if (!plabic) {
        for (int k = 2; k <= d - 2; ++k) w += yq_power(k - 1, 2 * d - 5);
    }
    return w;
}

} // namespace

bool is_tree(GFKind kind) { return kind == GFKind::PlabicTree || kind == GFKind::GrassTree; }

bool is_plabic(GFKind kind) { return kind == GFKind::PlabicTree || kind == GFKind::PlabicForest; }

GFKind tree_kind(GFKind kind) { return is_plabic(kind) ? GFKind::PlabicTree : GFKind::GrassTree; }

std::string_view to_string(GFKind kind) {
    switch (kind) {
    case GFKind::PlabicTree: return "plabic-tree";
    case GFKind::PlabicForest: return "plabic-forest";
    case GFKind::GrassTree: return "grass-tree";
    case GFKind::GrassForest: return "grass-forest";
    }
    return "?";
}

GFKind parse_kind(std::string_view name) {
    for (GFKind k : {GFKind::PlabicTree, GFKind::PlabicForest, GFKind::GrassTree, GFKind::GrassForest}) {
        if (to_string(k) == name) return k;
    }
    throw config_error("unknown kind '" + std::string(name) + "'");
}

TruncSeries build_C(GFKind kind, int order) {
    if (!is_tree(kind)) throw std::invalid_argument("build_C takes a tree kind");
    if (order < 1) throw std::invalid_argument("build_C needs order >= 1");
    TruncSeries num(order);
    TruncSeries den = linear(Q, order) * linear(Y * Q, order);
    if (is_plabic(kind)) {
        // x (1 - q^2 x^2 y)
        num = TruncSeries::polynomial({BivarPoly(), BivarPoly(1L), BivarPoly(), -yq_power(1, 2)}, order);
    } else {
        // x (1 - x(1+y)q^2 - x^2 y q^2 (1+q-q^2) - x^4 y^2 q^5 (1+q))
        num = TruncSeries::polynomial({BivarPoly(),
                                       BivarPoly(1L),
                                       -((BivarPoly(1L) + Y) * yq_power(0, 2)),
                                       -(yq_power(1, 2) * (BivarPoly(1L) + Q - yq_power(0, 2))),
                                       BivarPoly(),
                                       -(yq_power(2, 5) * (BivarPoly(1L) + Q))},
                                      order);
        den = den * linear(-yq_power(0, 2), order) * linear(-yq_power(1, 2), order);
    }
    return series_div(num, den);
}

TruncSeries build_tree_gf(GFKind kind, int order) {
    if (order < 1) throw std::invalid_argument("build_tree_gf needs order >= 1");
    const TruncSeries c_inv = series_reversion(build_C(tree_kind(kind), order));
    TruncSeries inner = c_inv * (Y * Q);
    inner.coeff(0) += BivarPoly(1L) + Y;
    return shift_up(inner).truncated(order);
}

TruncSeries build_tree_gf_via_weights(GFKind kind, int order) {
    if (order < 3) throw std::invalid_argument("build_tree_gf_via_weights needs order >= 3");
    std::map<int, BivarPoly> weights;
    for (int d = 3; d <= order; ++d) weights.emplace(d, vertex_weight(is_plabic(kind), d));
    const TruncSeries h = transforms::tree_transform(transforms::WeightFunction::tabulated(3, weights), order);
    TruncSeries g = h * (Y * Q);
    g.coeff(1) += BivarPoly(1L) + Y;
    return g;
}

TruncSeries build_forest_gf(GFKind kind, int order) {
    if (order < 1) throw std::invalid_argument("build_forest_gf needs order >= 1");
    TruncSeries one_plus_tree = build_tree_gf(tree_kind(kind), order + 1);
    one_plus_tree.coeff(0) += BivarPoly(1L);
    const TruncSeries r = shift_up(series_inverse(one_plus_tree)).truncated(order + 1);
    return shift_down(series_reversion(r));
}

TruncSeries build_series(GFKind kind, int order) {
    return is_tree(kind) ? build_tree_gf(kind, order) : build_forest_gf(kind, order);
}

StatHistogram forest_gf_via_lagrange(GFKind kind, int n) {
    if (n < 1) throw std::invalid_argument("forest_gf_via_lagrange needs n >= 1");
    TruncSeries base = build_tree_gf(tree_kind(kind), n);
    base.coeff(0) += BivarPoly(1L);
    const BivarPoly top = series_pow(base, static_cast<unsigned>(n + 1))[n];
    StatHistogram out;
    const BigInt divisor = n + 1;
    for (const auto& t : top.terms()) {
        if (!is_integer(t.coef) || !mpz_divisible_p(t.coef.get_num_mpz_t(), divisor.get_mpz_t())) {
            throw integrality_violation("[x^" + std::to_string(n) + "] (1+G_tree)^" + std::to_string(n + 1) +
                                        " has coefficient " + t.coef.get_str() + " at y^" + std::to_string(t.dy) +
                                        " q^" + std::to_string(t.dq) + ", not divisible by " + divisor.get_str());
        }
        out[{t.dy, t.dq}] = BigInt(t.coef.get_num() / divisor);
    }
    return out;
}

StatHistogram extract_counts(const TruncSeries& series, int n) {
    StatHistogram out;
    for (const auto& t : series[n].terms()) {
        const std::string where = "[x^" + std::to_string(n) + " y^" + std::to_string(t.dy) + " q^" +
                                  std::to_string(t.dq) + "]";
        if (!is_integer(t.coef)) throw integrality_violation(where + " = " + t.coef.get_str() + " is not an integer");
        if (sgn(t.coef) < 0) throw integrality_violation(where + " = " + t.coef.get_str() + " is negative");
        if (t.dy > n) throw integrality_violation(where + " has helicity above n");
        out[{t.dy, t.dq}] = t.coef.get_num();
    }
    return out;
}

BivarPoly coefficient(const TruncSeries& series, int n, int k) {
    BivarPoly p = series[n].y_slice(k);
    if (!p.is_integral()) {
        throw integrality_violation("[x^" + std::to_string(n) + " y^" + std::to_string(k) + "] = " + to_string(p) +
                                    " is not integral");
    }
    return p;
}

Rational euler_characteristic(const TruncSeries& grass_forest, int n, int k) {
    if (k < 2 || k > n - 2) throw std::invalid_argument("euler_characteristic needs 2 <= k <= n-2");
    return grass_forest[n].y_slice(k).eval_q(-1).constant_term();
}

Rational euler_characteristic(int n, int k) {
    return euler_characteristic(build_forest_gf(GFKind::GrassForest, n), n, k);
}

} // namespace gforest::genfun

#pragma once

// Noncrossing-partition, planar-tree and planar-forest analogues of the
// Exponential Formula. Each transform maps the generating function of a
// per-block (or per-internal-vertex) weight to the generating function of the
// aggregate structures.

#include "gforest/exact_ring.hpp"
#include "gforest/power_series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gforest::transforms {

/// A weight on block sizes or vertex degrees, either tabulated or given as a
/// closed-form series F(x) = sum f(n) x^n.
class WeightFunction {
public:
    static WeightFunction tabulated(int min_degree, std::map<int, BivarPoly> values);
    static WeightFunction closed_form(int min_degree, TruncSeries series);

    int min_degree() const { return min_degree_; }
    /// f(n); zero below min_degree.
    BivarPoly operator()(int n) const;
    /// sum_{n >= min_degree} f(n) x^n through x^order.
    TruncSeries series(int order) const;

private:
    int min_degree_ = 1;
    std::map<int, BivarPoly> values_;
    std::optional<TruncSeries> series_;
};

/// H_NC with x H_NC = (x / F)^<-1>. Requires [x^0]F == 1.
TruncSeries speicher_transform(const TruncSeries& F);
TruncSeries speicher_transform(const WeightFunction& f, int order);

/// H_tree = x^2 + sum_{n>=3} h(n) x^n with H_tree / x = (x - F / x)^<-1>.
/// F must vanish below x^3.
TruncSeries tree_transform(const TruncSeries& F);
TruncSeries tree_transform(const WeightFunction& f, int order);

/// Same formula as tree_transform, read as a sum over polygon dissections.
TruncSeries dissection_transform(const TruncSeries& F);

/// H_forest with x H_forest = (x / (1 + h1 x + H_tree))^<-1>.
TruncSeries forest_transform(const TruncSeries& F, const BivarPoly& h1);
TruncSeries forest_transform(const WeightFunction& g, int order);

/// Number of series-reduced planar trees on n leaves with r[i] internal
/// vertices of degree i (r indexed from degree 3, so r[0] counts degree 3).
/// Returns 0 when the type vector is inconsistent with n.
BigInt tree_type_count(int n, const std::vector<int>& r);

} // namespace gforest::transforms

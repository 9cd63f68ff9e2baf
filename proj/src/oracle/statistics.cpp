#include "gforest/oracle.hpp"

#include "gforest/error.hpp"

#include <map>
#include <string>

namespace gforest::oracle {

void for_each_grass_object(int n, genfun::GFKind kind, const DecorateOptions& opts,
                           const std::function<void(const GrassForest&)>& visit) {
    const auto decorate = [&](const PlanarForest& f) { decorate_grassmannian(f, opts, visit); };
    if (genfun::is_tree(kind)) {
        for_each_tree(n, decorate);
    } else {
        for_each_forest(n, true, decorate);
    }
}

StatHistogram count_by_statistics(int n, genfun::GFKind kind, const CountOptions& opts) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::map<std::pair<int, int>, std::uint64_t> counts;
    std::uint64_t visited = 0;
    const DecorateOptions decorate{opts.contracted_only, genfun::is_plabic(kind)};
    for_each_grass_object(n, kind, decorate, [&](const GrassForest& g) {
        if (++visited > opts.budget) {
            throw budget_exceeded("enumeration of " + std::string(genfun::to_string(kind)) + " objects on " +
                                  std::to_string(n) + " boundary vertices exceeded the budget of " +
                                  std::to_string(opts.budget));
        }
        const int r = opts.mom_dimension_override ? opts.mom_dimension_override(g) : mom_dimension(g);
        ++counts[{helicity(g), r}];
    });
    StatHistogram out;
    for (const auto& [key, c] : counts) out[key] = BigInt(static_cast<unsigned long>(c));
    return out;
}

namespace {

BivarPoly vertex_product(const GrassForest& g, const transforms::WeightFunction& f) {
    BivarPoly w(1L);
    for (int v = g.n; v < g.vertex_count(); ++v) {
        w *= f(g.degree(v));
        if (w.is_zero()) break;
    }
    return w;
}

} // namespace

BivarPoly nc_weighted_sum(int n, const transforms::WeightFunction& f) {
    BivarPoly total;
    for_each_nc_partition(n, [&](const NCPartition& p) {
        BivarPoly w(1L);
        for (const auto& b : p.blocks) w *= f(static_cast<int>(b.size()));
        total += w;
    });
    return total;
}

BivarPoly tree_weighted_sum(int n, const transforms::WeightFunction& f) {
    BivarPoly total;
    for_each_tree(n, [&](const PlanarForest& t) { total += vertex_product(to_graph(t), f); });
    return total;
}

BivarPoly forest_weighted_sum(int n, const transforms::WeightFunction& g) {
    BivarPoly total;
    for_each_forest(n, true, [&](const PlanarForest& f) { total += vertex_product(to_graph(f), g); });
    return total;
}

} // namespace gforest::oracle

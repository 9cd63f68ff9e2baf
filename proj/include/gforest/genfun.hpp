#pragma once

// Generating functions for contracted plabic and Grassmannian trees and
// forests, graded by boundary size (x), helicity (y) and mom-dimension (q).

#include "gforest/exact_ring.hpp"
#include "gforest/power_series.hpp"

#include <string>
#include <string_view>

namespace gforest::genfun {

enum class GFKind { PlabicTree, PlabicForest, GrassTree, GrassForest };

inline constexpr int default_order = 14;

bool is_tree(GFKind kind);
bool is_plabic(GFKind kind);
/// The tree kind of the same family (PlabicForest -> PlabicTree).
GFKind tree_kind(GFKind kind);
std::string_view to_string(GFKind kind);
/// Accepts "plabic-tree", "plabic-forest", "grass-tree", "grass-forest".
GFKind parse_kind(std::string_view name);

/// The rational function C(x,y,q) of the family, expanded through x^order.
/// Only tree kinds are accepted.
TruncSeries build_C(GFKind kind, int order);

/// x (1 + y + y q C^<-1>(x,y,q)) through x^order.
TruncSeries build_tree_gf(GFKind kind, int order);

/// Same series assembled from the per-degree vertex weights through the tree
/// transform instead of the closed form of C.
TruncSeries build_tree_gf_via_weights(GFKind kind, int order);

/// Forest series with x G_forest = (x / (1 + G_tree))^<-1>, exact through x^order.
TruncSeries build_forest_gf(GFKind kind, int order);

/// Tree or forest series according to the kind.
TruncSeries build_series(GFKind kind, int order);

/// [x^n] of the forest series computed as (1/(n+1)) [x^n] (1 + G_tree)^(n+1).
/// Throws integrality_violation if the division is not exact.
StatHistogram forest_gf_via_lagrange(GFKind kind, int n);

/// [x^n] of a counting series as a (k, r) histogram. Asserts integral and
/// nonnegative coefficients with 0 <= k <= n.
StatHistogram extract_counts(const TruncSeries& series, int n);

/// [x^n y^k] as a polynomial in q (integrality asserted).
BivarPoly coefficient(const TruncSeries& series, int n, int k);

/// [x^n y^k] G_forest(x, y, -1) for 2 <= k <= n-2.
Rational euler_characteristic(int n, int k);
Rational euler_characteristic(const TruncSeries& grass_forest, int n, int k);

} // namespace gforest::genfun

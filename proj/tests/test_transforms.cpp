#include "support.hpp"

#include "gforest/error.hpp"
#include "gforest/oracle.hpp"
#include "gforest/transforms.hpp"

#include <algorithm>
#include <functional>
#include <map>

using namespace testing;
using namespace gforest::transforms;

namespace {

WeightFunction constant_weight(int min_degree, long value, int max_degree = 20) {
    std::map<int, BivarPoly> v;
    for (int d = min_degree; d <= max_degree; ++d) v[d] = BivarPoly(value);
    return WeightFunction::tabulated(min_degree, v);
}

WeightFunction alternating(int max_degree = 20) {
    std::map<int, BivarPoly> v;
    for (int d = 3; d <= max_degree; ++d) v[d] = BivarPoly(d % 2 ? 1L : -1L);
    return WeightFunction::tabulated(3, v);
}

WeightFunction random_weight(Gen& g, int min_degree, int max_degree) {
    std::map<int, BivarPoly> v;
    for (int d = min_degree; d <= max_degree; ++d) {
        if (g.uniform(0, 2) > 0) v[d] = g.poly(2, 2);
    }
    return WeightFunction::tabulated(min_degree, v);
}

const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
const long little_schroeder[] = {1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859};  // s_1..

} // namespace

TEST_CASE("speicher_transform", "[transforms]") {
    CHECK(speicher_transform(TruncSeries::constant(1L, 8)) == TruncSeries::constant(1L, 8));

    const TruncSeries h = speicher_transform(constant_weight(1, 1), 10);
    for (int n = 0; n <= 10; ++n) CHECK(h[n] == BivarPoly(catalan[n]));

    const TruncSeries ones = speicher_transform(ints({1, 1}, 9));
    for (int n = 0; n <= 9; ++n) CHECK(ones[n] == BivarPoly(1L));
    for (int n = 0; n <= 6; ++n) {
        CHECK(oracle::nc_weighted_sum(n, WeightFunction::tabulated(1, {{1, BivarPoly(1L)}})) == BivarPoly(1L));
    }

    CHECK_THROWS_AS(speicher_transform(ints({2, 1}, 4)), invalid_weight);
}

TEST_CASE("tree_transform", "[transforms]") {
    const TruncSeries h = tree_transform(constant_weight(3, 1), 12);
    CHECK(h[2] == BivarPoly(1L));
    for (int n = 3; n <= 12; ++n) CHECK(h[n] == BivarPoly(little_schroeder[n - 2]));

    const TruncSeries binary = tree_transform(TruncSeries::monomial(1L, 3, 10));
    for (int n = 3; n <= 10; ++n) CHECK(binary[n] == BivarPoly(catalan[n - 2]));

    const TruncSeries e = tree_transform(alternating(), 12);
    for (int n = 3; n <= 12; ++n) CHECK(e[n] == BivarPoly(1L));

    CHECK_THROWS_AS(tree_transform(ints({0, 0, 1}, 6)), invalid_weight);
    CHECK_THROWS_AS(tree_transform(ints({1}, 6)), invalid_weight);
}

TEST_CASE("forest_transform", "[transforms]") {
    // F = 0, h1 = 0: forests made of 2-leaf edges only, i.e. noncrossing perfect matchings.
    const TruncSeries edges = forest_transform(TruncSeries(10), BivarPoly());
    CHECK(edges[0] == BivarPoly(1L));
    CHECK(edges[1].is_zero());
    CHECK(edges[2] == BivarPoly(1L));
    CHECK(edges[3].is_zero());
    CHECK(edges[4] == BivarPoly(2L));
    CHECK(edges[6] == BivarPoly(5L));

    // F = 0, h1 = 1: partial noncrossing matchings (Motzkin numbers).
    const TruncSeries motzkin = forest_transform(TruncSeries(8), BivarPoly(1L));
    const long m[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    for (int n = 0; n <= 8; ++n) CHECK(motzkin[n] == BivarPoly(m[n]));

    // Alternating weight with h1 = 1 against the forest oracle.
    std::map<int, BivarPoly> v{{1, BivarPoly(1L)}};
    for (int d = 3; d <= 12; ++d) v[d] = BivarPoly(d % 2 ? 1L : -1L);
    const WeightFunction ew = WeightFunction::tabulated(1, v);
    const TruncSeries h = forest_transform(ew, 8);
    for (int n = 1; n <= 8; ++n) CHECK(h[n] == oracle::forest_weighted_sum(n, ew));
}

TEST_CASE("forest transform factors through the tree and NC transforms", "[transforms][property]") {
    Gen g(20);
    for (int i = 0; i < 10; ++i) {
        const WeightFunction w = random_weight(g, 3, 10);
        const BivarPoly h1 = g.poly(2, 2);
        TruncSeries block = tree_transform(w, 10);
        block.coeff(0) += BivarPoly(1L);
        block.coeff(1) += h1;
        CHECK(forest_transform(w.series(10), h1) == speicher_transform(block));
    }
}

TEST_CASE("transforms agree with the definitional sums", "[transforms][property][oracle]") {
    Gen g(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int max_n = trial < 2 ? 9 : 7;
        const WeightFunction nc = random_weight(g, 1, max_n);
        const TruncSeries h_nc = speicher_transform(nc, max_n);
        for (int n = 1; n <= max_n; ++n) CHECK(h_nc[n] == oracle::nc_weighted_sum(n, nc));

        const WeightFunction tw = random_weight(g, 3, max_n);
        const TruncSeries h_tree = tree_transform(tw, max_n);
        for (int n = 3; n <= max_n; ++n) CHECK(h_tree[n] == oracle::tree_weighted_sum(n, tw));

        std::map<int, BivarPoly> fv{{1, g.poly(2, 2)}};
        for (int d = 3; d <= max_n; ++d) fv[d] = tw(d);
        const WeightFunction fw = WeightFunction::tabulated(1, fv);
        const TruncSeries h_forest = forest_transform(fw, max_n);
        for (int n = 1; n <= max_n; ++n) CHECK(h_forest[n] == oracle::forest_weighted_sum(n, fw));
    }
}

TEST_CASE("dissection_transform", "[transforms]") {
    const TruncSeries all = dissection_transform(constant_weight(3, 1).series(9));
    CHECK(all[4] == BivarPoly(3L));
    CHECK(all[5] == BivarPoly(11L));
    for (int n = 3; n <= 8; ++n) {
        CHECK(all[n] == BivarPoly(static_cast<long>(oracle::enumerate_dissections(n).size())));
    }

    const TruncSeries tri = dissection_transform(TruncSeries::monomial(1L, 3, 9));
    for (int n = 3; n <= 8; ++n) {
        long triangulations = 0;
        for (const auto& d : oracle::enumerate_dissections(n)) {
            const auto sizes = d.polygon_sizes();
            triangulations += std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 3; });
        }
        CHECK(tri[n] == BivarPoly(triangulations));
        CHECK(tri[n] == BivarPoly(catalan[n - 2]));
    }

    // f(n) = t^n with t played by y: tracks total polygon size.
    std::map<int, BivarPoly> v;
    for (int d = 3; d <= 9; ++d) v[d] = BivarPoly::monomial(1, d, 0);
    const WeightFunction marker = WeightFunction::tabulated(3, v);
    const TruncSeries h = dissection_transform(marker.series(9));
    for (int n = 3; n <= 6; ++n) CHECK(h[n] == oracle::dissection_weighted_sum(n, marker));
}

TEST_CASE("tree_type_count", "[transforms]") {
    CHECK(tree_type_count(5, {3, 0, 0}) == 5);
    CHECK(tree_type_count(5, {1, 1, 0}) == 5);
    CHECK(tree_type_count(5, {0, 0, 1}) == 1);
    CHECK(tree_type_count(9, {2, 1, 1, 0, 0, 0, 0}) == 495);
    CHECK(tree_type_count(3, {1}) == 1);
    CHECK(tree_type_count(5, {1, 0, 0}) == 0);
}

TEST_CASE("tree_type_count sums to the little Schroeder numbers", "[transforms][property]") {
    for (int n = 3; n <= 10; ++n) {
        // every vector (r_3..r_n) with sum r_i (i-2) = n-2
        BigInt total = 0;
        std::vector<int> r(static_cast<std::size_t>(n - 2), 0);
        const std::function<void(std::size_t, int)> walk = [&](std::size_t idx, int remaining) {
            if (idx == r.size()) {
                if (remaining == 0) total += tree_type_count(n, r);
                return;
            }
            const int step = static_cast<int>(idx) + 1;
            for (int c = 0; c * step <= remaining; ++c) {
                r[idx] = c;
                walk(idx + 1, remaining - c * step);
            }
            r[idx] = 0;
        };
        walk(0, n - 2);
        CHECK(total == little_schroeder[n - 2]);
    }
}

TEST_CASE("oracle trees grouped by type match tree_type_count", "[transforms][oracle]") {
    for (int n = 3; n <= 9; ++n) {
        std::map<std::vector<int>, long> by_type;
        for (const auto& t : oracle::enumerate_trees(n)) ++by_type[oracle::tree_type(t)];
        for (const auto& [r, c] : by_type) CHECK(tree_type_count(n, r) == c);
    }
}

TEST_CASE("dissections and trees share type counts", "[transforms][oracle]") {
    for (int n = 3; n <= 8; ++n) {
        std::map<std::vector<int>, long> trees;
        std::map<std::vector<int>, long> dissections;
        for (const auto& t : oracle::enumerate_trees(n)) ++trees[oracle::tree_type(t)];
        for (const auto& d : oracle::enumerate_dissections(n)) ++dissections[d.type()];
        CHECK(trees == dissections);
    }
}

#include "support.hpp"

#include "gforest/error.hpp"
#include "gforest/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>

using namespace testing;
using namespace gforest::oracle;
using gforest::genfun::GFKind;

namespace {

// Every set partition of [n] via restricted growth strings, independent of
// the noncrossing generator.
std::vector<NCPartition> all_set_partitions(int n) {
    std::vector<NCPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    const std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            NCPartition p{n, std::vector<std::vector<int>>(static_cast<std::size_t>(blocks))};
            for (int e = 0; e < n; ++e) p.blocks[rgs[e]].push_back(e + 1);
            out.push_back(p);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

// Walks around a tree keeping it on the right; returns boundary labels in
// the order met. A planar embedding meets them in increasing cyclic order.
std::vector<int> contour(const GrassForest& g, int start) {
    std::vector<int> seen;
    int prev = start;
    int cur = g.adj[start][0];
    seen.push_back(start + 1);
    for (int guard = 0; guard < 4 * g.vertex_count(); ++guard) {
        if (g.is_boundary(cur)) {
            if (cur == start) break;
            seen.push_back(cur + 1);
            std::swap(prev, cur);
            continue;
        }
        const auto& ring = g.adj[cur];
        const auto pos = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), prev) - ring.begin());
        prev = cur;
        cur = ring[(pos + 1) % ring.size()];
    }
    return seen;
}

GrassForest random_decorated(Gen& g, const std::vector<PlanarForest>& shapes) {
    GrassForest f = to_graph(shapes[static_cast<std::size_t>(g.uniform(0, static_cast<int>(shapes.size()) - 1))]);
    for (int v = f.n; v < f.vertex_count(); ++v) {
        const int d = f.degree(v);
        if (d == 1) {
            f.helicity[v] = g.uniform(0, 1);
        } else {
            // lean towards white and black so contractible edges are common
            const int pick = g.uniform(0, 3);
            f.helicity[v] = pick == 0 ? 1 : pick == 1 ? d - 1 : g.uniform(1, d - 1);
        }
    }
    return f;
}

PlanarForest single_tree(int n, const std::vector<int>& arity) {
    std::vector<int> block;
    for (int i = 1; i <= n; ++i) block.push_back(i);
    return PlanarForest{NCPartition{n, {block}}, {SchroederTree{arity}}};
}

GrassForest decorated(const PlanarForest& f, const std::vector<int>& h) {
    GrassForest g = to_graph(f);
    for (std::size_t i = 0; i < h.size(); ++i) g.helicity[g.n + i] = h[i];
    return g;
}

const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
const long little_schroeder[] = {1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049};

} // namespace

TEST_CASE("noncrossing partitions", "[oracle]") {
    CHECK(enumerate_nc_partitions(3).size() == 5);
    CHECK(enumerate_nc_partitions(4).size() == 14);
    const auto empty = enumerate_nc_partitions(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].blocks.empty());
    for (int n = 0; n <= 10; ++n) CHECK(enumerate_nc_partitions(n).size() == static_cast<std::size_t>(catalan[n]));
}

TEST_CASE("noncrossing partitions agree with filtered set partitions", "[oracle][property]") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<std::vector<int>>> brute;
        for (const auto& p : all_set_partitions(n)) {
            if (is_noncrossing(p)) brute.insert(p.blocks);
        }
        std::set<std::vector<std::vector<int>>> generated;
        for (const auto& p : enumerate_nc_partitions(n)) {
            CHECK(is_noncrossing(p));
            CHECK(generated.insert(p.blocks).second);
        }
        CHECK(generated == brute);
    }
    CHECK(all_set_partitions(4).size() == 15);
    CHECK_FALSE(is_noncrossing(NCPartition{4, {{1, 3}, {2, 4}}}));
}

TEST_CASE("series-reduced planar trees", "[oracle]") {
    CHECK(enumerate_trees(4).size() == 3);
    CHECK(enumerate_trees(5).size() == 11);
    const auto two = enumerate_trees(2);
    REQUIRE(two.size() == 1);
    CHECK(to_graph(two[0]).vertex_count() == 2);
    for (int n = 2; n <= 10; ++n) CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(little_schroeder[n - 2]));
}

TEST_CASE("tree graphs are series-reduced and planar", "[oracle][property]") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> shapes;
        for (const auto& t : enumerate_trees(n)) {
            const GrassForest g = to_graph(t);
            CHECK(g.vertex_count() - 1 == [&] {
                int edges = 0;
                for (const auto& ring : g.adj) edges += static_cast<int>(ring.size());
                return edges / 2;
            }());
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (g.is_boundary(v)) {
                    CHECK(g.degree(v) == 1);
                } else if (n > 1) {
                    CHECK(g.degree(v) >= 3);
                }
            }
            if (n >= 2) {
                std::vector<int> expected(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) expected[i] = i + 1;
                CHECK(contour(g, 0) == expected);
            }
            GrassForest white = g;
            for (int v = g.n; v < g.vertex_count(); ++v) white.helicity[v] = 1;
            CHECK(shapes.insert(canonical_encoding(white)).second);
        }
    }
}

TEST_CASE("planar forests", "[oracle]") {
    CHECK(enumerate_forests(2, true).size() == 2);
    CHECK(enumerate_forests(3, true).size() == 5);
    CHECK(enumerate_forests(0, true).size() == 1);
    CHECK(enumerate_forests(3, false).size() == 1);
    CHECK(enumerate_forests(4, false).size() == 3 + 2);
    for (int n = 1; n <= 7; ++n) {
        for (const auto& f : enumerate_forests(n, true)) {
            const GrassForest g = to_graph(f);
            const auto comps = components(g);
            CHECK(comps.size() == f.partition.blocks.size());
            for (const auto& c : comps) {
                if (c.size() < 2) continue;
                CHECK(contour(g, c.front() - 1) == c);
            }
        }
    }
}

TEST_CASE("decorations", "[oracle]") {
    int count = 0;
    decorate_grassmannian(single_tree(3, {2, 0, 0}), {}, [&](const GrassForest&) { ++count; });
    CHECK(count == 2);

    count = 0;
    int plabic = 0;
    decorate_grassmannian(single_tree(4, {3, 0, 0, 0}), {}, [&](const GrassForest&) { ++count; });
    decorate_grassmannian(single_tree(4, {3, 0, 0, 0}), {true, true}, [&](const GrassForest&) { ++plabic; });
    CHECK(count == 3);
    CHECK(plabic == 2);

    // two adjacent trivalent vertices
    const PlanarForest two = single_tree(4, {2, 0, 2, 0, 0});
    int all = 0;
    int contracted = 0;
    decorate_grassmannian(two, {false, false}, [&](const GrassForest&) { ++all; });
    decorate_grassmannian(two, {true, false}, [&](const GrassForest& g) {
        ++contracted;
        CHECK(is_contracted(g));
    });
    CHECK(all == 4);
    CHECK(contracted == 2);
}

TEST_CASE("helicity", "[oracle]") {
    const PlanarForest star = single_tree(3, {2, 0, 0});
    CHECK(helicity(decorated(star, {1})) == 1);
    CHECK(helicity(decorated(star, {2})) == 2);

    for (int n = 1; n <= 6; ++n) {
        NCPartition p{n, {}};
        for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
        const PlanarForest leaves{p, std::vector<SchroederTree>(static_cast<std::size_t>(n))};
        CHECK(helicity(decorated(leaves, std::vector<int>(static_cast<std::size_t>(n), 1))) == n);
        CHECK(helicity(decorated(leaves, std::vector<int>(static_cast<std::size_t>(n), 0))) == 0);
    }
}

TEST_CASE("helicity of a tree is 1 + sum (h(v) - 1)", "[oracle][property]") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            decorate_grassmannian(t, {false, false}, [&](const GrassForest& g) {
                int sum = 1;
                for (int v = g.n; v < g.vertex_count(); ++v) sum += g.helicity[v] - 1;
                CHECK(helicity(g) == sum);
                CHECK(helicity(g) >= 0);
                CHECK(helicity(g) <= n);
            });
        }
    }
}

TEST_CASE("mom_dimension", "[oracle]") {
    CHECK(mom_dimension(decorated(enumerate_trees(1)[0], {0})) == 0);
    CHECK(mom_dimension(decorated(enumerate_trees(1)[0], {1})) == 0);
    CHECK(mom_dimension(to_graph(enumerate_trees(2)[0])) == 1);
    CHECK(mom_dimension(decorated(single_tree(3, {2, 0, 0}), {1})) == 2);
    CHECK(mom_dimension(decorated(single_tree(4, {3, 0, 0, 0}), {2})) == 4);
    CHECK(vertex_mom_dimension(decorated(single_tree(4, {3, 0, 0, 0}), {2}), 4) == 4);
}

TEST_CASE("contract_move", "[oracle]") {
    const GrassForest ww = decorated(single_tree(4, {2, 0, 2, 0, 0}), {1, 1});
    REQUIRE(contractible_edges(ww).size() == 1);
    const auto [u, v] = contractible_edges(ww).front();
    const GrassForest merged = contract_move(ww, u, v);
    CHECK(merged.vertex_count() == 5);
    CHECK(merged.degree(4) == 4);
    CHECK(merged.is_white(4));
    CHECK(mom_dimension(ww) == 3);
    CHECK(mom_dimension(merged) == 3);
    CHECK(helicity(ww) == 1);
    CHECK(helicity(merged) == 1);
    CHECK(canonical_encoding(merged) == canonical_encoding(decorated(single_tree(4, {3, 0, 0, 0}), {1})));

    const GrassForest wb = decorated(single_tree(4, {2, 0, 2, 0, 0}), {1, 2});
    CHECK_THROWS_AS(contract_move(wb, 4, 5), gforest::invalid_move);
    const GrassForest generic = decorated(single_tree(5, {2, 0, 3, 0, 0, 0}), {1, 2});
    CHECK_THROWS_AS(contract_move(generic, 5, 6), gforest::invalid_move);
    CHECK_THROWS_AS(contract_move(ww, 0, 4), gforest::invalid_move);
    CHECK_THROWS_AS(contract_move(ww, 4, 4), gforest::invalid_move);
}

TEST_CASE("statistics survive random contraction moves", "[oracle][property]") {
    Gen g(30);
    int moves = 0;
    for (int n = 3; n <= 8; ++n) {
        const auto shapes = enumerate_forests(n, true);
        for (int trial = 0; trial < 600; ++trial) {
            GrassForest f = random_decorated(g, shapes);
            const int h = helicity(f);
            const int r = mom_dimension(f);
            for (;;) {
                const auto edges = contractible_edges(f);
                if (edges.empty()) break;
                const auto [u, v] = edges[static_cast<std::size_t>(g.uniform(0, static_cast<int>(edges.size()) - 1))];
                f = contract_move(f, u, v);
                ++moves;
                CHECK(helicity(f) == h);
                CHECK(mom_dimension(f) == r);
            }
            CHECK(is_contracted(f));
        }
    }
    CHECK(moves >= 1000);
}

TEST_CASE("contracted forests are one per refinement class", "[oracle][property]") {
    for (GFKind kind : {GFKind::GrassForest, GFKind::GrassTree, GFKind::PlabicForest}) {
        for (int n = 1; n <= 7; ++n) {
            std::map<std::string, std::pair<int, int>> classes;
            for_each_grass_object(n, kind, {false, gforest::genfun::is_plabic(kind)}, [&](const GrassForest& g) {
                const GrassForest c = fully_contract(g);
                classes.emplace(canonical_encoding(c), std::make_pair(helicity(c), mom_dimension(c)));
            });
            StatHistogram from_classes;
            for (const auto& [code, stats] : classes) from_classes[stats] += 1;

            std::set<std::string> contracted;
            for_each_grass_object(n, kind, {true, gforest::genfun::is_plabic(kind)}, [&](const GrassForest& g) {
                CHECK(contracted.insert(canonical_encoding(g)).second);
            });
            CHECK(contracted.size() == classes.size());
            CHECK(from_classes == count_by_statistics(n, kind));
        }
    }
}

TEST_CASE("count_by_statistics", "[oracle]") {
    const auto f4 = count_by_statistics(4, GFKind::GrassForest);
    const long row4[] = {6, 12, 10, 4, 1};
    for (int r = 0; r <= 4; ++r) CHECK(f4.at({2, r}) == row4[r]);

    CHECK(count_by_statistics(3, GFKind::GrassTree) == StatHistogram{{{1, 2}, 1}, {{2, 2}, 1}});

    const auto f5 = count_by_statistics(5, GFKind::GrassForest);
    const long row5[] = {10, 30, 40, 30, 15, 5, 1};
    for (int r = 0; r <= 6; ++r) CHECK(f5.at({2, r}) == row5[r]);

    CountOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(count_by_statistics(6, GFKind::GrassForest, tight), gforest::budget_exceeded);
}

TEST_CASE("polygon dissections", "[oracle]") {
    CHECK(enumerate_dissections(3).size() == 1);
    CHECK(enumerate_dissections(4).size() == 3);
    CHECK(enumerate_dissections(5).size() == 11);
    for (int n = 3; n <= 9; ++n) {
        CHECK(enumerate_dissections(n).size() == static_cast<std::size_t>(little_schroeder[n - 2]));
    }
    const Dissection d{6, {{1, 3}, {1, 4}}};
    CHECK(d.polygon_sizes() == std::vector<int>{3, 3, 4});
    CHECK(d.type() == std::vector<int>{2, 1, 0, 0});
}

TEST_CASE("dissections match a brute force over diagonal subsets", "[oracle][property]") {
    for (int n = 3; n <= 7; ++n) {
        std::vector<std::pair<int, int>> diagonals;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 2; j <= n; ++j) {
                if (!(i == 1 && j == n)) diagonals.emplace_back(i, j);
            }
        }
        std::size_t brute = 0;
        for (unsigned mask = 0; mask < (1U << diagonals.size()); ++mask) {
            bool ok = true;
            for (std::size_t a = 0; a < diagonals.size() && ok; ++a) {
                for (std::size_t b = a + 1; b < diagonals.size() && ok; ++b) {
                    if (!((mask >> a) & 1U) || !((mask >> b) & 1U)) continue;
                    const auto [p, q] = diagonals[a];
                    const auto [r, s] = diagonals[b];
                    const bool r_inside = p < r && r < q;
                    const bool s_inside = p < s && s < q;
                    if ((r_inside && s > q) || (s_inside && r < p)) ok = false;
                }
            }
            brute += ok;
        }
        CHECK(enumerate_dissections(n).size() == brute);
    }
}

TEST_CASE("json lines", "[oracle]") {
    const GrassForest g = decorated(single_tree(3, {2, 0, 0}), {1});
    const auto j = nlohmann::json::parse(to_json_line(g));
    CHECK(j["n"] == 3);
    CHECK(j["helicity"] == 1);
    CHECK(j["mom_dimension"] == 2);
    CHECK(j["internal"].size() == 1);
    CHECK(j["internal"][0]["clockwise"] == nlohmann::json::array({"b1", "b2", "b3"}));
    CHECK(to_json_line(g).find('\n') == std::string::npos);
}

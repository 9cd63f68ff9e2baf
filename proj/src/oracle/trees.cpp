#include "gforest/oracle.hpp"

#include <map>
#include <stdexcept>

namespace gforest::oracle {

int SchroederTree::leaves() const {
    int count = 0;
    for (int a : arity) count += (a == 0);
    return count;
}

int SchroederTree::internal_count() const { return static_cast<int>(arity.size()) - leaves(); }

namespace {

using TreeTable = std::map<int, std::vector<SchroederTree>>;

const std::vector<SchroederTree>& trees_with_leaves(int m, TreeTable& memo);

// Appends every ordered sequence of subtrees whose leaf counts sum to `remaining`
// using exactly `slots` subtrees.
void fill_children(int remaining, int slots, std::vector<int>& prefix, std::vector<SchroederTree>& out,
                   TreeTable& memo) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(SchroederTree{prefix});
        return;
    }
    for (int first = 1; first <= remaining - (slots - 1); ++first) {
        for (const auto& sub : trees_with_leaves(first, memo)) {
            const std::size_t saved = prefix.size();
            prefix.insert(prefix.end(), sub.arity.begin(), sub.arity.end());
            fill_children(remaining - first, slots - 1, prefix, out, memo);
            prefix.resize(saved);
        }
    }
}

const std::vector<SchroederTree>& trees_with_leaves(int m, TreeTable& memo) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    std::vector<SchroederTree> out;
    if (m == 1) {
        out.push_back(SchroederTree{{0}});
    } else {
        for (int children = 2; children <= m; ++children) {
            std::vector<int> prefix{children};
            fill_children(m, children, prefix, out, memo);
        }
    }
    return memo.emplace(m, std::move(out)).first->second;
}

int add_vertex(GrassForest& g) {
    g.adj.emplace_back();
    g.helicity.push_back(-1);
    return g.vertex_count() - 1;
}

void link(GrassForest& g, int parent, int child) {
    g.adj[parent].push_back(child);
    g.adj[child].push_back(parent);
}

// Builds the subtree rooted at preorder position pos below `parent`; returns
// the position after it. Leaves consume boundary labels from the block.
std::size_t build_subtree(GrassForest& g, const SchroederTree& t, std::size_t pos, int parent,
                          const std::vector<int>& block, std::size_t& next_leaf) {
    const int a = t.arity.at(pos);
    if (a == 0) {
        link(g, parent, block.at(next_leaf++) - 1);
        return pos + 1;
    }
    const int v = add_vertex(g);
    link(g, parent, v);
    std::size_t p = pos + 1;
    for (int c = 0; c < a; ++c) p = build_subtree(g, t, p, v, block, next_leaf);
    return p;
}

} // namespace

std::vector<SchroederTree> enumerate_schroeder_trees(int leaves) {
    if (leaves < 1) throw std::invalid_argument("a Schroeder tree needs at least one leaf");
    TreeTable memo;
    return trees_with_leaves(leaves, memo);
}

void for_each_tree(int n, const std::function<void(const PlanarForest&)>& visit) {
    if (n < 1) throw std::invalid_argument("a tree needs at least one boundary vertex");
    std::vector<int> block(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) block[i] = i + 1;
    PlanarForest f{NCPartition{n, {block}}, {SchroederTree{}}};
    if (n == 1) {
        visit(f);
        return;
    }
    for (const auto& t : enumerate_schroeder_trees(n - 1)) {
        f.trees[0] = t;
        visit(f);
    }
}

std::vector<PlanarForest> enumerate_trees(int n) {
    std::vector<PlanarForest> out;
    for_each_tree(n, [&](const PlanarForest& f) { out.push_back(f); });
    return out;
}

void for_each_forest(int n, bool allow_singletons, const std::function<void(const PlanarForest&)>& visit) {
    TreeTable memo;
    const SchroederTree singleton{};
    for_each_nc_partition(n, [&](const NCPartition& p) {
        std::vector<const std::vector<SchroederTree>*> choices;
        for (const auto& b : p.blocks) {
            if (b.size() == 1) {
                if (!allow_singletons) return;
                choices.push_back(nullptr);
            } else {
                choices.push_back(&trees_with_leaves(static_cast<int>(b.size()) - 1, memo));
            }
        }
        PlanarForest f{p, std::vector<SchroederTree>(p.blocks.size())};
        std::vector<std::size_t> index(p.blocks.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < index.size(); ++i) {
                f.trees[i] = choices[i] ? (*choices[i])[index[i]] : singleton;
            }
            visit(f);
            std::size_t i = 0;
            for (; i < index.size(); ++i) {
                const std::size_t size = choices[i] ? choices[i]->size() : 1;
                if (++index[i] < size) break;
                index[i] = 0;
            }
            if (i == index.size()) break;
        }
    });
}

std::vector<PlanarForest> enumerate_forests(int n, bool allow_singletons) {
    std::vector<PlanarForest> out;
    for_each_forest(n, allow_singletons, [&](const PlanarForest& f) { out.push_back(f); });
    return out;
}

GrassForest to_graph(const PlanarForest& forest) {
    GrassForest g;
    g.n = forest.n();
    g.adj.resize(static_cast<std::size_t>(g.n));
    g.helicity.assign(static_cast<std::size_t>(g.n), -1);
    for (std::size_t b = 0; b < forest.partition.blocks.size(); ++b) {
        const auto& block = forest.partition.blocks[b];
        const int first = block.front() - 1;
        if (block.size() == 1) {
            link(g, first, add_vertex(g));
            continue;
        }
        const SchroederTree& t = forest.trees.at(b);
        if (t.leaves() != static_cast<int>(block.size()) - 1) {
            throw std::invalid_argument("Schroeder tree does not match its block size");
        }
        std::size_t next_leaf = 1;
        if (block.size() == 2) {
            link(g, first, block[1] - 1);
            continue;
        }
        // Root: neighbours are the smallest leaf followed by the subtrees in order.
        const int root = add_vertex(g);
        link(g, first, root);
        std::size_t p = 1;
        for (int c = 0; c < t.arity.at(0); ++c) p = build_subtree(g, t, p, root, block, next_leaf);
    }
    return g;
}

std::vector<int> tree_type(const PlanarForest& tree) {
    const GrassForest g = to_graph(tree);
    std::vector<int> r(static_cast<std::size_t>(std::max(0, g.n - 2)), 0);
    for (int v = g.n; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d >= 3) ++r.at(static_cast<std::size_t>(d - 3));
    }
    return r;
}

} // namespace gforest::oracle

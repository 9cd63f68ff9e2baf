#pragma once

// Exhaustive enumeration of noncrossing partitions, Schroeder trees,
// series-reduced planar forests, Grassmannian decorations and polygon
// dissections. Everything here works from the combinatorial definitions
// and never touches a generating function, so it can serve as ground truth.

#include "gforest/exact_ring.hpp"
#include "gforest/genfun.hpp"
#include "gforest/transforms.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gforest::oracle {

inline constexpr std::uint64_t default_budget = 100'000'000;

// ---------------------------------------------------------------------------
// Noncrossing partitions

/// Partition of [n]; blocks hold 1-based labels in increasing order and are
/// sorted by their smallest element.
struct NCPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const NCPartition&, const NCPartition&) = default;
};

bool is_noncrossing(const NCPartition& p);
void for_each_nc_partition(int n, const std::function<void(const NCPartition&)>& visit);
std::vector<NCPartition> enumerate_nc_partitions(int n);

// ---------------------------------------------------------------------------
// Schroeder trees and planar forests

/// Rooted ordered tree in preorder; each entry is the number of children of
/// that node (0 for a leaf, otherwise at least 2).
struct SchroederTree {
    std::vector<int> arity;

    int leaves() const;
    int internal_count() const;
    friend bool operator==(const SchroederTree&, const SchroederTree&) = default;
};

std::vector<SchroederTree> enumerate_schroeder_trees(int leaves);

/// Series-reduced planar forest on boundary vertices 1..n: a noncrossing
/// partition plus, for each block of size m >= 2, a Schroeder tree on m-1
/// leaves (the tree left after deleting the block's smallest leaf). Blocks of
/// size 1 carry an empty tree and become boundary leaves.
struct PlanarForest {
    NCPartition partition;
    std::vector<SchroederTree> trees;

    int n() const { return partition.n; }
};

/// All of T_n: planar forests with a single block.
void for_each_tree(int n, const std::function<void(const PlanarForest&)>& visit);
std::vector<PlanarForest> enumerate_trees(int n);

void for_each_forest(int n, bool allow_singletons, const std::function<void(const PlanarForest&)>& visit);
std::vector<PlanarForest> enumerate_forests(int n, bool allow_singletons);

// ---------------------------------------------------------------------------
// Grassmannian forests

/// Embedded forest with helicity-decorated internal vertices.
///
/// Vertices 0..n-1 are the boundary vertices b_1..b_n; internal vertices
/// follow. adj[v] lists neighbours in clockwise order. helicity[v] is -1 for
/// boundary vertices.
struct GrassForest {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> helicity;

    int vertex_count() const { return static_cast<int>(adj.size()); }
    bool is_boundary(int v) const { return v < n; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_boundary_leaf(int v) const { return !is_boundary(v) && degree(v) == 1; }
    bool is_white(int v) const;
    bool is_black(int v) const;
    bool is_generic(int v) const;
};

/// Undecorated graph of a planar forest (helicities -1).
GrassForest to_graph(const PlanarForest& forest);

struct DecorateOptions {
    bool contracted_only = true;
    bool plabic_only = false;
};

/// Every helicity assignment with 1 <= h(v) <= deg(v)-1 (h in {0,1} for
/// boundary leaves), optionally restricted to contracted or plabic ones.
void decorate_grassmannian(const PlanarForest& forest, const DecorateOptions& opts,
                           const std::function<void(const GrassForest&)>& visit);

/// sum (h(v) - deg(v)/2) + n/2
int helicity(const GrassForest& g);

/// Sum over trees of n_T - 1 (n_T <= 2) or 1 + sum (m(v) - 1).
int mom_dimension(const GrassForest& g);
int vertex_mom_dimension(const GrassForest& g, int v);

/// No two adjacent white vertices and no two adjacent black vertices.
bool is_contracted(const GrassForest& g);
bool is_plabic(const GrassForest& g);

/// Contracts the edge u-v between two white or two black internal vertices.
/// The merged vertex keeps the colour and has degree deg(u)+deg(v)-2.
GrassForest contract_move(const GrassForest& g, int u, int v);

/// Edges whose endpoints are both white or both black.
std::vector<std::pair<int, int>> contractible_edges(const GrassForest& g);

/// Applies contraction moves until none remain.
GrassForest fully_contract(const GrassForest& g);

/// Structural encoding: equal strings iff the embedded decorated forests are
/// equal up to renaming internal vertices.
std::string canonical_encoding(const GrassForest& g);

/// One JSON object (single line) describing the forest and its statistics.
std::string to_json_line(const GrassForest& g);

/// Boundary labels (1-based) of each connected component.
std::vector<std::vector<int>> components(const GrassForest& g);

// ---------------------------------------------------------------------------
// Histograms and definitional sums

struct CountOptions {
    bool contracted_only = true;
    std::uint64_t budget = default_budget;
    /// Replaces mom_dimension when set; used to inject faults in tests.
    std::function<int(const GrassForest&)> mom_dimension_override;
};

/// Histogram over (helicity, mom-dimension) of every decorated tree or forest
/// on n boundary vertices of the given family.
StatHistogram count_by_statistics(int n, genfun::GFKind kind, const CountOptions& opts = {});

/// Calls visit on each decorated tree or forest of the family.
void for_each_grass_object(int n, genfun::GFKind kind, const DecorateOptions& opts,
                           const std::function<void(const GrassForest&)>& visit);

/// sum over NC_n of prod f(#B)
BivarPoly nc_weighted_sum(int n, const transforms::WeightFunction& f);
/// sum over T_n of prod f(deg v)
BivarPoly tree_weighted_sum(int n, const transforms::WeightFunction& f);
/// sum over F_n of prod g(deg v); singleton components weigh g(1)
BivarPoly forest_weighted_sum(int n, const transforms::WeightFunction& g);

/// (r_3, ..., r_n): internal vertices of each degree
std::vector<int> tree_type(const PlanarForest& tree);

// ---------------------------------------------------------------------------
// Polygon dissections

struct Dissection {
    int n = 0;
    std::vector<std::pair<int, int>> diagonals;  // 1-based, first < second

    /// Vertex counts of the polygons of the subdivision.
    std::vector<int> polygon_sizes() const;
    /// (m_3, ..., m_n)
    std::vector<int> type() const;
};

void for_each_dissection(int n, const std::function<void(const Dissection&)>& visit);
std::vector<Dissection> enumerate_dissections(int n);
BivarPoly dissection_weighted_sum(int n, const transforms::WeightFunction& f);

} // namespace gforest::oracle

#pragma once

// Decorated permutations: trip permutations of Grassmannian forests, direct
// sums, amalgamation, cyclic rotation and separable permutations.

#include "gforest/exact_ring.hpp"
#include "gforest/oracle.hpp"

#include <map>
#include <string>
#include <vector>

namespace gforest::perm {

enum class Decoration { None, Black, White };

/// One-line notation; images are 1-based. decorations[i] is set exactly for
/// the fixed points.
struct DecoratedPermutation {
    std::vector<int> images;
    std::vector<Decoration> decorations;

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images.at(static_cast<std::size_t>(i - 1)); }

    /// Undecorated permutation; throws on fixed points.
    static DecoratedPermutation plain(std::vector<int> images);

    friend auto operator<=>(const DecoratedPermutation&, const DecoratedPermutation&) = default;
};

/// Checks the permutation and decoration invariants.
bool is_valid(const DecoratedPermutation& w);

/// Follows every trip under the rule "enter through a_i, leave through
/// a_{i+h(v)}". Fixed points come from boundary leaves: black for h=0,
/// white for h=1.
DecoratedPermutation trip_permutation(const oracle::GrassForest& g);

/// Positions i with w^{-1}(i) > i, plus white fixed points.
int antiexcedances(const DecoratedPermutation& w);
int descents(const std::vector<int>& images);

DecoratedPermutation direct_sum(const DecoratedPermutation& s, const DecoratedPermutation& t);

/// Glues letter n_s of s to letter 1 of t. Letters 2..n_t of t become
/// n_s..n_s+n_t-2. Throws size_too_small when either side has < 2 letters.
DecoratedPermutation amalgamation(const DecoratedPermutation& s, const DecoratedPermutation& t);

/// cyc(w)(i) = w(i-1)+1 mod n, decorations move with their letters.
DecoratedPermutation cyclic_rotation(const DecoratedPermutation& w);

/// (k+1,...,n,1,...,k); for n=1, k=0 gives a black and k=1 a white fixed point.
DecoratedPermutation pi(int k, int n);

/// Avoids 2413 and 3142 (naive scan over 4-subsets).
bool is_separable(const std::vector<int>& images);

inline constexpr int separable_max_n = 10;

/// Histogram of separable permutations of [n] by descents, or by the
/// positions i with w^{-1}(i) > i when by_descents is false.
std::map<int, BigInt> enumerate_separable(int n, bool by_descents = true, int max_n = separable_max_n);

struct GradedPermutation {
    DecoratedPermutation perm;
    int mom_dimension = 0;
};

inline constexpr int closure_max_n = 10;

/// Closure of the stars pi(k,m), (1) and (2,1) under amalgamation and cyclic
/// rotation, restricted to n letters. Sorted by permutation.
std::vector<GradedPermutation> enumerate_grass_tree_permutations(int n, int max_n = closure_max_n);

/// Closure of the tree permutations under direct sum and cyclic rotation.
std::vector<GradedPermutation> enumerate_grass_forest_permutations(int n, int max_n = closure_max_n);

/// (antiexcedances, mom-dimension) histogram.
StatHistogram histogram(const std::vector<GradedPermutation>& perms);

/// "(2,3,1)"; fixed points are written _i (black) or ^i (white).
std::string to_string(const DecoratedPermutation& w);
/// {"images":[...],"decorations":{"i":"black"|"white"}}
std::string to_json(const DecoratedPermutation& w);

} // namespace gforest::perm

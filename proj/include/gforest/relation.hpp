#pragma once

// Polynomial relations P(x, y, q, G) = 0 satisfied by the generating
// functions, read from a text data file and checked by substitution.

#include "gforest/exact_ring.hpp"
#include "gforest/genfun.hpp"
#include "gforest/power_series.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace gforest::genfun {

/// Sparse polynomial in (G, x, y, q); keys are exponent tuples in that order.
using RelationPoly = std::map<std::array<int, 4>, Rational>;

struct Relation {
    std::string name;
    RelationPoly poly;
    int degree_in_g() const;
};

/// Parses an expression in x, y, q, G with integers, + - * ^, parentheses and
/// juxtaposition for multiplication, e.g. "q (q+1) G^5 - x^2 (y+1) G".
RelationPoly parse_relation_expression(std::string_view text);

/// Reads every "[name]" section of a relation data file.
std::map<std::string, Relation> load_relations(const std::filesystem::path& file);

std::filesystem::path default_data_dir();

/// Section name used for a kind, e.g. "grass-forest".
std::string relation_name(GFKind kind);

struct RelationReport {
    std::string relation;
    int order = 0;
    bool holds = false;
    int first_nonzero = -1;  // x-degree of the first nonzero residual coefficient
    BivarPoly residual;      // that coefficient
};

/// Substitutes `series` for G and returns the residual through x^order.
RelationReport check_relation(const Relation& relation, const TruncSeries& series);

/// Builds the kind's series to `order` and checks the stored relation.
RelationReport verify_algebraic_relation(GFKind kind, int order,
                                         const std::filesystem::path& data_dir = default_data_dir());

} // namespace gforest::genfun

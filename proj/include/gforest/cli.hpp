#pragma once

// Command implementations behind the gforest executable. Each returns the
// rendered output and an exit status instead of printing, so tests can call
// them directly.

#include "gforest/genfun.hpp"
#include "gforest/oracle.hpp"
#include "gforest/relation.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace gforest::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_config = 2;

enum class Format { Text, Csv, Json, LatexTable };
Format parse_format(std::string_view name);

struct CommandResult {
    std::string output;
    int status = exit_ok;
};

/// GFOREST_ORDER if set (and valid), otherwise the library default.
int default_order();

struct TableConfig {
    int n_min = 4;
    int n_max = 12;
    genfun::GFKind kind = genfun::GFKind::GrassForest;
    Format format = Format::Text;
    int order = 0;  // 0: default_order()
};

/// One row per (n,k) with 2 <= k <= floor(n/2).
CommandResult cmd_table(const TableConfig& cfg);

/// [x^n y^k] of the kind's series as a polynomial in q.
CommandResult cmd_coeff(int n, int k, genfun::GFKind kind, int order = 0);

struct CheckConfig {
    int oracle_max_n = 7;
    std::uint64_t budget = oracle::default_budget;
    int order = 0;
    std::filesystem::path data_dir = genfun::default_data_dir();
    /// Test seam: replaces the oracle's mom-dimension.
    std::function<int(const oracle::GrassForest&)> mom_dimension_override;
};

/// Runs every cross-check; one PASS/FAIL line each. Status 1 on a mismatch,
/// 2 if the enumeration budget is too small.
CommandResult cmd_check(const CheckConfig& cfg);

CommandResult cmd_euler(int n, int k, int order = 0);

/// Checks the stored relation of one kind, or of all four when kind is empty.
CommandResult cmd_relations(std::optional<genfun::GFKind> kind, int order = 12,
                            const std::filesystem::path& data_dir = genfun::default_data_dir());

enum class PermFamily { Separable, GrassTree, GrassForest };
PermFamily parse_family(std::string_view name);

struct PermsConfig {
    PermFamily family = PermFamily::Separable;
    int n = 4;
    bool by_descents = true;  // otherwise by antiexcedances
    bool list = false;        // print every permutation instead of a histogram
    Format format = Format::Text;
};

CommandResult cmd_perms(const PermsConfig& cfg);

} // namespace gforest::cli

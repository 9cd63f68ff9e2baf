#include "gforest/cli.hpp"

#include "gforest/error.hpp"
#include "gforest/permutations.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace gforest::cli {

using genfun::GFKind;

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "latex-table") return Format::LatexTable;
    throw config_error("unknown format '" + std::string(name) + "'");
}

PermFamily parse_family(std::string_view name) {
    if (name == "separable") return PermFamily::Separable;
    if (name == "grass-tree") return PermFamily::GrassTree;
    if (name == "grass-forest") return PermFamily::GrassForest;
    throw config_error("unknown permutation family '" + std::string(name) + "'");
}

int default_order() {
    const char* env = std::getenv("GFOREST_ORDER");
    if (!env || !*env) return genfun::default_order;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000) throw config_error("GFOREST_ORDER must be a positive integer");
    return static_cast<int>(v);
}

namespace {

int resolve_order(int order, int needed) {
    const int o = order > 0 ? order : default_order();
    if (o < needed) {
        throw config_error("order " + std::to_string(o) + " is below the requested n=" + std::to_string(needed));
    }
    return o;
}

std::string big(const BigInt& v) { return v.get_str(); }

// q-coefficients of a polynomial in q, lowest degree first.
std::vector<BigInt> q_coefficients(const BivarPoly& p) {
    std::vector<BigInt> out(static_cast<std::size_t>(std::max(0, p.max_dq() + 1)));
    for (const auto& t : p.terms()) out[static_cast<std::size_t>(t.dq)] = t.coef.get_num();
    return out;
}

// First (n,k,r) where two histograms disagree, or "".
std::string first_difference(int n, const StatHistogram& expected, const StatHistogram& got) {
    std::map<std::pair<int, int>, std::pair<BigInt, BigInt>> all;
    for (const auto& [key, v] : expected) all[key].first = v;
    for (const auto& [key, v] : got) all[key].second = v;
    for (const auto& [key, v] : all) {
        if (v.first != v.second) {
            return "(n,k,r)=(" + std::to_string(n) + "," + std::to_string(key.first) + "," +
                   std::to_string(key.second) + "): expected " + big(v.first) + ", got " + big(v.second);
        }
    }
    return "";
}

StatHistogram to_histogram(const std::map<int, BigInt>& by_k) {
    StatHistogram out;
    for (const auto& [k, c] : by_k) out[{k, 0}] = c;
    return out;
}

class Report {
public:
    void pass(const std::string& name) { out_ << "PASS " << name << '\n'; }
    void fail(const std::string& name, const std::string& why) {
        out_ << "FAIL " << name << ": " << why << '\n';
        status_ = std::max(status_, exit_mismatch);
    }
    void config(const std::string& name, const std::string& why) {
        out_ << "FAIL " << name << ": " << why << '\n';
        status_ = exit_config;
    }
    // Runs body; it returns "" on success or a description of the mismatch.
    void run(const std::string& name, const std::function<std::string()>& body) {
        try {
            const std::string why = body();
            if (why.empty()) {
                pass(name);
            } else {
                fail(name, why);
            }
        } catch (const budget_exceeded& e) {
            config(name, e.what());
        } catch (const config_error& e) {
            config(name, e.what());
        } catch (const std::exception& e) {
            fail(name, e.what());
        }
    }
    CommandResult result() const { return {out_.str(), status_}; }

private:
    std::ostringstream out_;
    int status_ = exit_ok;
};

std::map<std::pair<int, int>, std::string> read_golden(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw config_error("cannot open " + file.string());
    std::map<std::pair<int, int>, std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        int n = 0;
        int k = 0;
        char tail[2] = {};
        if (std::sscanf(line.c_str(), "(%d,%d)%1c", &n, &k, tail) != 3) throw config_error("bad golden row: " + line);
        rows[{n, k}] = line;
    }
    return rows;
}

// CSV gets RFC-4180 line ends; text is space separated.
struct Delimiters {
    explicit Delimiters(Format f) : sep(f == Format::Csv ? "," : " "), eol(f == Format::Csv ? "\r\n" : "\n") {}
    const char* sep;
    const char* eol;
};

std::string table_row_text(int n, int k, const BivarPoly& p) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ") " + to_string(p);
}

} // namespace

CommandResult cmd_table(const TableConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw config_error("need 1 <= n-min <= n-max");
    const int order = resolve_order(cfg.order, cfg.n_max);
    const TruncSeries series = genfun::build_series(cfg.kind, order);

    struct Row {
        int n, k;
        BivarPoly poly;
    };
    std::vector<Row> rows;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int k = 2; k <= n / 2; ++k) rows.push_back({n, k, genfun::coefficient(series, n, k)});
    }

    std::ostringstream out;
    switch (cfg.format) {
    case Format::Text:
        for (const auto& r : rows) out << table_row_text(r.n, r.k, r.poly) << '\n';
        break;
    case Format::LatexTable:
        for (const auto& r : rows) {
            out << "$(" << r.n << ',' << r.k << ")$ & $" << to_latex(r.poly) << "$ \\\\\n";
        }
        break;
    case Format::Csv:
        out << "n,k,r,count\r\n";
        for (const auto& r : rows) {
            const auto c = q_coefficients(r.poly);
            for (std::size_t d = 0; d < c.size(); ++d) {
                if (c[d] != 0) out << r.n << ',' << r.k << ',' << d << ',' << big(c[d]) << "\r\n";
            }
        }
        break;
    case Format::Json: {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            j.push_back({{"n", r.n}, {"k", r.k}, {"kind", genfun::to_string(cfg.kind)}, {"poly", to_string(r.poly)},
                         {"terms", nlohmann::json::parse(to_json(r.poly))}});
        }
        out << j.dump(1) << '\n';
        break;
    }
    }
    return {out.str(), exit_ok};
}

CommandResult cmd_coeff(int n, int k, GFKind kind, int order) {
    if (n < 0 || k < 0 || k > n) throw config_error("need 0 <= k <= n");
    const TruncSeries series = genfun::build_series(kind, resolve_order(order, n));
    return {to_string(genfun::coefficient(series, n, k)) + "\n", exit_ok};
}

CommandResult cmd_euler(int n, int k, int order) {
    if (n < 0 || k < 0 || k > n) throw config_error("need 0 <= k <= n");
    const TruncSeries series = genfun::build_series(GFKind::GrassForest, resolve_order(order, n));
    return {to_string(genfun::euler_characteristic(series, n, k)) + "\n", exit_ok};
}

CommandResult cmd_relations(std::optional<GFKind> kind, int order, const std::filesystem::path& data_dir) {
    std::vector<GFKind> kinds;
    if (kind) {
        kinds.push_back(*kind);
    } else {
        kinds = {GFKind::PlabicTree, GFKind::PlabicForest, GFKind::GrassTree, GFKind::GrassForest};
    }
    Report report;
    for (GFKind k : kinds) {
        report.run("relation " + std::string(genfun::to_string(k)) + " through x^" + std::to_string(order),
                   [&]() -> std::string {
                       const auto r = genfun::verify_algebraic_relation(k, order, data_dir);
                       if (r.holds) return "";
                       return "residual at x^" + std::to_string(r.first_nonzero) + " is " + to_string(r.residual);
                   });
    }
    return report.result();
}

CommandResult cmd_check(const CheckConfig& cfg) {
    if (cfg.oracle_max_n < 1) throw config_error("oracle-max-n must be positive");
    if (cfg.budget == 0) throw config_error("budget must be positive");
    const int order = resolve_order(cfg.order, cfg.oracle_max_n);
    const int small = std::min(order, 12);
    Report report;

    const GFKind kinds[] = {GFKind::PlabicTree, GFKind::PlabicForest, GFKind::GrassTree, GFKind::GrassForest};
    std::map<GFKind, TruncSeries> series;
    for (GFKind kind : kinds) series.emplace(kind, genfun::build_series(kind, order));
    const TruncSeries& forest = series.at(GFKind::GrassForest);

    for (GFKind kind : kinds) {
        report.run("oracle " + std::string(genfun::to_string(kind)) + " n<=" + std::to_string(cfg.oracle_max_n),
                   [&]() -> std::string {
                       oracle::CountOptions opts;
                       opts.budget = cfg.budget;
                       opts.mom_dimension_override = cfg.mom_dimension_override;
                       for (int n = 1; n <= cfg.oracle_max_n; ++n) {
                           const auto diff = first_difference(n, genfun::extract_counts(series.at(kind), n),
                                                              oracle::count_by_statistics(n, kind, opts));
                           if (!diff.empty()) return diff;
                       }
                       return "";
                   });
    }

    for (GFKind kind : {GFKind::PlabicForest, GFKind::GrassForest}) {
        report.run("lagrange " + std::string(genfun::to_string(kind)) + " n<=" + std::to_string(order),
                   [&]() -> std::string {
                       for (int n = 1; n <= order; ++n) {
                           const auto diff = first_difference(n, genfun::extract_counts(series.at(kind), n),
                                                              genfun::forest_gf_via_lagrange(kind, n));
                           if (!diff.empty()) return diff;
                       }
                       return "";
                   });
    }

    for (GFKind kind : kinds) {
        report.run("relation " + std::string(genfun::to_string(kind)) + " through x^" + std::to_string(small),
                   [&]() -> std::string {
                       const auto r = genfun::check_relation(
                           genfun::load_relations(cfg.data_dir / "relations.txt").at(genfun::relation_name(kind)),
                           series.at(kind).truncated(small));
                       if (r.holds) return "";
                       return "residual at x^" + std::to_string(r.first_nonzero) + " is " + to_string(r.residual);
                   });
    }

    report.run("euler characteristic n<=" + std::to_string(small), [&]() -> std::string {
        for (int n = 4; n <= small; ++n) {
            for (int k = 2; k <= n - 2; ++k) {
                const Rational e = genfun::euler_characteristic(forest, n, k);
                if (e != 1) return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") gives " + to_string(e);
            }
        }
        return "";
    });

    report.run("zero-dimensional count n<=" + std::to_string(small), [&]() -> std::string {
        for (int n = 4; n <= small; ++n) {
            BigInt binom = 1;
            for (int k = 1; k <= n - 2; ++k) {
                binom = binom * (n - k + 1) / k;
                if (k < 2) continue;
                const Rational c = genfun::coefficient(forest, n, k).coefficient(0, 0);
                if (c != Rational(binom)) {
                    return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") gives " + to_string(c);
                }
            }
        }
        return "";
    });

    if (order >= 14) {
        report.run("stored table 4<=n<=12", [&]() -> std::string {
            const auto golden = read_golden(cfg.data_dir / "forest_table.txt");
            std::size_t rows = 0;
            for (int n = 4; n <= 12; ++n) {
                for (int k = 2; k <= n / 2; ++k, ++rows) {
                    const auto it = golden.find({n, k});
                    const std::string line = table_row_text(n, k, genfun::coefficient(forest, n, k));
                    if (it == golden.end()) return "no golden row for (" + std::to_string(n) + "," + std::to_string(k) + ")";
                    if (it->second != line) return "row differs: " + line;
                }
            }
            if (rows != golden.size()) return "golden file has extra rows";
            return "";
        });
    }

    report.run("antiexcedances equal helicity n<=" + std::to_string(cfg.oracle_max_n), [&]() -> std::string {
        std::string why;
        for (int n = 1; n <= cfg.oracle_max_n && why.empty(); ++n) {
            oracle::for_each_grass_object(n, GFKind::GrassForest, {}, [&](const oracle::GrassForest& g) {
                if (!why.empty()) return;
                const auto w = perm::trip_permutation(g);
                if (perm::antiexcedances(w) != oracle::helicity(g)) {
                    why = oracle::canonical_encoding(g) + " has trip permutation " + perm::to_string(w);
                }
            });
        }
        return why;
    });

    const int perm_n = std::min(cfg.oracle_max_n, 7);
    report.run("grassmannian tree permutations n<=" + std::to_string(perm_n), [&]() -> std::string {
        for (int n = 1; n <= perm_n; ++n) {
            const auto diff = first_difference(n, genfun::extract_counts(series.at(GFKind::GrassTree), n),
                                               perm::histogram(perm::enumerate_grass_tree_permutations(n)));
            if (!diff.empty()) return diff;
        }
        return "";
    });

    const int sep_n = std::min({cfg.oracle_max_n, perm::separable_max_n, order});
    report.run("separable permutations by descents n<=" + std::to_string(sep_n), [&]() -> std::string {
        const TruncSeries at_one = series.at(GFKind::PlabicTree);
        for (int n = 2; n <= sep_n; ++n) {
            StatHistogram expected;
            for (int k = 1; k <= n; ++k) {
                const Rational c = genfun::coefficient(at_one, n, k).eval_q(1).constant_term();
                if (c != 0) expected[{k - 1, 0}] = c.get_num();
            }
            const auto diff = first_difference(n, expected, to_histogram(perm::enumerate_separable(n - 1)));
            if (!diff.empty()) return diff;
        }
        return "";
    });

    return report.result();
}

CommandResult cmd_perms(const PermsConfig& cfg) {
    std::ostringstream out;
    if (cfg.family == PermFamily::Separable) {
        if (cfg.list) throw config_error("--list is only available for the Grassmannian families");
        const auto hist = perm::enumerate_separable(cfg.n, cfg.by_descents);
        const char* label = cfg.by_descents ? "descents" : "antiexcedances";
        if (cfg.format == Format::Json) {
            nlohmann::json j = nlohmann::json::object();
            for (const auto& [k, c] : hist) j[std::to_string(k)] = big(c);
            out << nlohmann::json{{"n", cfg.n}, {"by", label}, {"counts", j}}.dump() << '\n';
        } else {
            const Delimiters d(cfg.format);
            out << label << d.sep << "count" << d.eol;
            for (const auto& [k, c] : hist) out << k << d.sep << big(c) << d.eol;
        }
        return {out.str(), exit_ok};
    }
    if (cfg.by_descents) throw config_error("Grassmannian permutations are graded by antiexcedances");
    const auto perms = cfg.family == PermFamily::GrassTree ? perm::enumerate_grass_tree_permutations(cfg.n)
                                                           : perm::enumerate_grass_forest_permutations(cfg.n);
    if (cfg.list) {
        for (const auto& g : perms) {
            if (cfg.format == Format::Json) {
                auto j = nlohmann::json::parse(perm::to_json(g.perm));
                j["antiexcedances"] = perm::antiexcedances(g.perm);
                j["mom_dimension"] = g.mom_dimension;
                out << j.dump() << '\n';
            } else {
                out << perm::to_string(g.perm) << ' ' << perm::antiexcedances(g.perm) << ' ' << g.mom_dimension << '\n';
            }
        }
        return {out.str(), exit_ok};
    }
    const auto hist = perm::histogram(perms);
    if (cfg.format == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& [key, c] : hist) j.push_back({{"k", key.first}, {"r", key.second}, {"count", big(c)}});
        out << j.dump() << '\n';
    } else {
        const Delimiters d(cfg.format);
        out << "antiexcedances" << d.sep << "mom_dimension" << d.sep << "count" << d.eol;
        for (const auto& [key, c] : hist) out << key.first << d.sep << key.second << d.sep << big(c) << d.eol;
    }
    return {out.str(), exit_ok};
}

} // namespace gforest::cli

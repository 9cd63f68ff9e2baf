// Command-line front end. Exit status: 0 ok, 1 mathematical mismatch,
// 2 configuration error.

#include "gforest/cli.hpp"
#include "gforest/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace gforest;

int emit(const cli::CommandResult& r, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << r.output;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw config_error("cannot write " + out_path);
        f << r.output;
    }
    return r.status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts of contracted Grassmannian and plabic trees and forests"};
    app.require_subcommand(1);

    std::string kind = "grass-forest";
    std::string format = "text";
    std::string out_path;
    int order = 0;

    cli::TableConfig table;
    auto* t = app.add_subcommand("table", "q-polynomials [x^n y^k] for 2 <= k <= n/2");
    t->add_option("--n-min", table.n_min, "smallest n")->capture_default_str();
    t->add_option("--n-max", table.n_max, "largest n")->capture_default_str();
    t->add_option("--kind", kind, "plabic-tree|plabic-forest|grass-tree|grass-forest")->capture_default_str();
    t->add_option("--format", format, "text|csv|json|latex-table")->capture_default_str();
    t->add_option("--order", order, "series order (default 14 or GFOREST_ORDER)");
    t->add_option("--out", out_path, "write to a file instead of stdout");

    int n = 4;
    int k = 2;
    auto* c = app.add_subcommand("coeff", "[x^n y^k] as a polynomial in q");
    c->add_option("--n", n)->required();
    c->add_option("--k", k)->required();
    c->add_option("--kind", kind)->capture_default_str();
    c->add_option("--order", order);

    cli::CheckConfig check;
    auto* ck = app.add_subcommand("check", "run every cross-check");
    ck->add_option("--oracle-max-n", check.oracle_max_n, "largest n for brute-force enumeration")->capture_default_str();
    ck->add_option("--budget", check.budget, "maximum objects per enumeration")->capture_default_str();
    ck->add_option("--order", order);

    auto* e = app.add_subcommand("euler", "[x^n y^k] G_forest(x,y,-1)");
    e->add_option("--n", n)->required();
    e->add_option("--k", k)->required();
    e->add_option("--order", order);

    std::string rel_kind;
    int rel_order = 12;
    auto* r = app.add_subcommand("relations", "check the stored algebraic relations");
    r->add_option("--kind", rel_kind, "one kind (default: all)");
    r->add_option("--order", rel_order)->capture_default_str();

    cli::PermsConfig perms;
    std::string family = "separable";
    std::string by;
    auto* p = app.add_subcommand("perms", "permutation enumeration");
    p->add_option("--family", family, "separable|grass-tree|grass-forest")->capture_default_str();
    p->add_option("--n", perms.n)->capture_default_str();
    p->add_option("--by", by, "descents|antiexcedances");
    p->add_flag("--list", perms.list, "print every permutation");
    p->add_option("--format", format, "text|csv|json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : cli::exit_config;
    }

    try {
        if (*t) {
            table.kind = genfun::parse_kind(kind);
            table.format = cli::parse_format(format);
            table.order = order;
            return emit(cli::cmd_table(table), out_path);
        }
        if (*c) return emit(cli::cmd_coeff(n, k, genfun::parse_kind(kind), order), "");
        if (*ck) {
            check.order = order;
            return emit(cli::cmd_check(check), "");
        }
        if (*e) return emit(cli::cmd_euler(n, k, order), "");
        if (*r) {
            std::optional<genfun::GFKind> which;
            if (!rel_kind.empty()) which = genfun::parse_kind(rel_kind);
            return emit(cli::cmd_relations(which, rel_order), "");
        }
        if (*p) {
            perms.family = cli::parse_family(family);
            perms.format = cli::parse_format(format);
            if (by.empty()) by = perms.family == cli::PermFamily::Separable ? "descents" : "antiexcedances";
            if (by != "descents" && by != "antiexcedances") throw config_error("--by must be descents or antiexcedances");
            perms.by_descents = by == "descents";
            return emit(cli::cmd_perms(perms), "");
        }
    } catch (const config_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return cli::exit_config;
    } catch (const budget_exceeded& err) {
        std::cerr << "error: " << err.what() << '\n';
        return cli::exit_config;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return cli::exit_mismatch;
    }
    return cli::exit_ok;
}

#include "gforest/relation.hpp"

#include "gforest/error.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gforest::genfun {

namespace {

using Key = std::array<int, 4>;

void add_into(RelationPoly& acc, const Key& k, const Rational& c) {
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

RelationPoly add(RelationPoly a, const RelationPoly& b, int sign) {
    for (const auto& [k, c] : b) add_into(a, k, sign > 0 ? c : Rational(-c));
    return a;
}

RelationPoly mul(const RelationPoly& a, const RelationPoly& b) {
    RelationPoly out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            add_into(out, Key{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]}, ca * cb);
        }
    }
    return out;
}

RelationPoly constant(const Rational& c) {
    RelationPoly p;
    if (sgn(c) != 0) p[Key{0, 0, 0, 0}] = c;
    return p;
}

// Recursive-descent parser; juxtaposed factors multiply.
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RelationPoly parse() {
        RelationPoly p = expression();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw relation_parse_error(msg + " at offset " + std::to_string(pos_) + " near '" +
                                   std::string(s_.substr(pos_, 20)) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RelationPoly expression() {
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = s_[pos_++] == '-' ? -1 : 1;
        RelationPoly acc = add(RelationPoly{}, term(), sign);
        while (peek() == '+' || peek() == '-') {
            sign = s_[pos_++] == '-' ? -1 : 1;
            acc = add(std::move(acc), term(), sign);
        }
        return acc;
    }

    static bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' || c == 'q' || c == 'G';
    }

    RelationPoly term() {
        RelationPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = mul(acc, factor());
            } else if (starts_factor(c)) {
                acc = mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    RelationPoly factor() {
        RelationPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            unsigned e = integer();
            RelationPoly r = constant(1);
            for (unsigned i = 0; i < e; ++i) r = mul(r, base);
            return r;
        }
        return base;
    }

    unsigned integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }

    RelationPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RelationPoly inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rational(BigInt(std::string(s_.substr(start, pos_ - start)))));
        }
        Key k{0, 0, 0, 0};
        switch (c) {
        case 'G': k[0] = 1; break;
        case 'x': k[1] = 1; break;
        case 'y': k[2] = 1; break;
        case 'q': k[3] = 1; break;
        default: fail("expected a factor");
        }
        ++pos_;
        RelationPoly p;
        p[k] = 1;
        return p;
    }
};

} // namespace

int Relation::degree_in_g() const {
    int d = 0;
    for (const auto& [k, c] : poly) d = std::max(d, k[0]);
    return d;
}

RelationPoly parse_relation_expression(std::string_view text) { return Parser(text).parse(); }

std::map<std::string, Relation> load_relations(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw config_error("cannot open relation file " + file.string());
    std::map<std::string, std::string> bodies;
    std::string current;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line[first] == '[') {
            auto close = line.find(']', first);
            if (close == std::string::npos) throw relation_parse_error("unterminated section header: " + line);
            current = line.substr(first + 1, close - first - 1);
            bodies[current];
            continue;
        }
        if (current.empty()) throw relation_parse_error("expression outside a section: " + line);
        bodies[current] += line + ' ';
    }
    std::map<std::string, Relation> out;
    for (const auto& [name, body] : bodies) {
        try {
            out.emplace(name, Relation{name, parse_relation_expression(body)});
        } catch (const relation_parse_error& e) {
            throw relation_parse_error("[" + name + "]: " + e.what());
        }
    }
    return out;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("GFOREST_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return GFOREST_DATA_DIR;
}

std::string relation_name(GFKind kind) { return std::string(to_string(kind)); }

RelationReport check_relation(const Relation& relation, const TruncSeries& series) {
    const int order = series.order();
    std::map<int, TruncSeries> coeffs;  // G-power -> coefficient series in x
    for (const auto& [k, c] : relation.poly) {
        auto [it, inserted] = coeffs.try_emplace(k[0], order);
        if (k[1] <= order) it->second.coeff(k[1]) += BivarPoly::monomial(c, k[2], k[3]);
    }
    TruncSeries total(order);
    TruncSeries power = TruncSeries::constant(1L, order);
    int reached = 0;
    for (const auto& [g, c] : coeffs) {
        while (reached < g) {
            power = power * series;
            ++reached;
        }
        total += c * power;
    }
    RelationReport report;
    report.relation = relation.name;
    report.order = order;
    report.holds = true;
    for (int i = 0; i <= order; ++i) {
        if (!total[i].is_zero()) {
            report.holds = false;
            report.first_nonzero = i;
            report.residual = total[i];
            break;
        }
    }
    return report;
}

RelationReport verify_algebraic_relation(GFKind kind, int order, const std::filesystem::path& data_dir) {
    const auto relations = load_relations(data_dir / "relations.txt");
    auto it = relations.find(relation_name(kind));
    if (it == relations.end()) throw config_error("no stored relation for " + relation_name(kind));
    return check_relation(it->second, build_series(kind, order));
}

} // namespace gforest::genfun

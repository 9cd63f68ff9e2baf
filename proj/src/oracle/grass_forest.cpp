#include "gforest/oracle.hpp"

#include "gforest/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace gforest::oracle {

bool GrassForest::is_white(int v) const { return !is_boundary(v) && degree(v) >= 3 && helicity[v] == 1; }

bool GrassForest::is_black(int v) const {
    return !is_boundary(v) && degree(v) >= 3 && helicity[v] == degree(v) - 1;
}

bool GrassForest::is_generic(int v) const {
    return !is_boundary(v) && degree(v) >= 3 && helicity[v] > 1 && helicity[v] < degree(v) - 1;
}

namespace {

bool same_colour(const GrassForest& g, int u, int v) {
    return (g.is_white(u) && g.is_white(v)) || (g.is_black(u) && g.is_black(v));
}

class Decorator {
public:
    Decorator(const GrassForest& base, const DecorateOptions& opts, const std::function<void(const GrassForest&)>& visit)
        : g_(base), opts_(opts), visit_(visit) {}

    void run() { assign(g_.n); }

private:
    GrassForest g_;
    const DecorateOptions& opts_;
    const std::function<void(const GrassForest&)>& visit_;

    // Internal vertices are numbered so that each one's tree-parent precedes
    // it, but conflicts are checked against every earlier neighbour anyway.
    bool conflicts(int v) const {
        for (int u : g_.adj[v]) {
            if (u < v && !g_.is_boundary(u) && same_colour(g_, u, v)) return true;
        }
        return false;
    }

    void try_value(int v, int h) {
        g_.helicity[v] = h;
        if (!opts_.contracted_only || !conflicts(v)) assign(v + 1);
    }

    void assign(int v) {
        if (v == g_.vertex_count()) {
            visit_(g_);
            return;
        }
        const int d = g_.degree(v);
        if (d == 1) {
            try_value(v, 0);
            try_value(v, 1);
        } else if (opts_.plabic_only) {
            try_value(v, 1);
            try_value(v, d - 1);
        } else {
            for (int h = 1; h <= d - 1; ++h) try_value(v, h);
        }
        g_.helicity[v] = -1;
    }
};

} // namespace

void decorate_grassmannian(const PlanarForest& forest, const DecorateOptions& opts,
                           const std::function<void(const GrassForest&)>& visit) {
    Decorator(to_graph(forest), opts, visit).run();
}

int helicity(const GrassForest& g) {
    int twice = g.n;
    for (int v = g.n; v < g.vertex_count(); ++v) twice += 2 * g.helicity[v] - g.degree(v);
    if (twice % 2 != 0) throw std::logic_error("helicity is not an integer");
    return twice / 2;
}

int vertex_mom_dimension(const GrassForest& g, int v) {
    const int d = g.degree(v);
    return g.is_generic(v) ? 2 * d - 4 : d - 1;
}

std::vector<std::vector<int>> components(const GrassForest& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> out;
    for (int b = 0; b < g.n; ++b) {
        if (seen[b]) continue;
        std::vector<int> labels;
        std::vector<int> stack{b};
        seen[b] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (g.is_boundary(v)) labels.push_back(v + 1);
            for (int u : g.adj[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(labels.begin(), labels.end());
        out.push_back(std::move(labels));
    }
    return out;
}

int mom_dimension(const GrassForest& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    int total = 0;
    for (int b = 0; b < g.n; ++b) {
        if (seen[b]) continue;
        int boundary = 0;
        int internal_sum = 0;
        std::vector<int> stack{b};
        seen[b] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (g.is_boundary(v)) {
                ++boundary;
            } else {
                internal_sum += vertex_mom_dimension(g, v) - 1;
            }
            for (int u : g.adj[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        total += boundary <= 2 ? boundary - 1 : 1 + internal_sum;
    }
    return total;
}

bool is_contracted(const GrassForest& g) { return contractible_edges(g).empty(); }

bool is_plabic(const GrassForest& g) {
    for (int v = g.n; v < g.vertex_count(); ++v) {
        if (g.is_generic(v)) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> contractible_edges(const GrassForest& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = g.n; u < g.vertex_count(); ++u) {
        for (int v : g.adj[u]) {
            if (v > u && same_colour(g, u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

GrassForest contract_move(const GrassForest& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v) {
        throw invalid_move("vertex out of range");
    }
    const auto pu = std::find(g.adj[u].begin(), g.adj[u].end(), v);
    if (pu == g.adj[u].end()) throw invalid_move("vertices are not adjacent");
    if (!same_colour(g, u, v)) throw invalid_move("contraction needs two white or two black internal vertices");
    const bool white = g.is_white(u);

    // Neighbours of u after v, then neighbours of v after u, both clockwise.
    std::vector<int> merged;
    const auto rotate_after = [&](int a, int b) {
        const auto& ring = g.adj[a];
        const auto pos = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), b) - ring.begin());
        for (std::size_t i = 1; i < ring.size(); ++i) merged.push_back(ring[(pos + i) % ring.size()]);
    };
    rotate_after(u, v);
    rotate_after(v, u);

    GrassForest out = g;
    out.adj[u] = merged;
    out.helicity[u] = white ? 1 : static_cast<int>(merged.size()) - 1;
    for (int w : g.adj[v]) {
        if (w == u) continue;
        std::replace(out.adj[w].begin(), out.adj[w].end(), v, u);
    }
    out.adj.erase(out.adj.begin() + v);
    out.helicity.erase(out.helicity.begin() + v);
    for (auto& ring : out.adj) {
        for (int& w : ring) {
            if (w > v) --w;
        }
    }
    return out;
}

GrassForest fully_contract(const GrassForest& g) {
    GrassForest cur = g;
    for (;;) {
        const auto edges = contractible_edges(cur);
        if (edges.empty()) return cur;
        cur = contract_move(cur, edges.front().first, edges.front().second);
    }
}

namespace {

void encode_from(const GrassForest& g, int v, int parent, std::string& out) {
    if (g.is_boundary(v)) {
        out += 'b' + std::to_string(v + 1);
        if (parent >= 0) return;
        // start of a component: descend into the single neighbour
        out += '-';
        encode_from(g, g.adj[v][0], v, out);
        return;
    }
    out += '(' + std::to_string(g.helicity[v]) + '/' + std::to_string(g.degree(v));
    const auto& ring = g.adj[v];
    const auto pos = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), parent) - ring.begin());
    for (std::size_t i = 1; i < ring.size(); ++i) {
        out += ' ';
        encode_from(g, ring[(pos + i) % ring.size()], v, out);
    }
    out += ')';
}

} // namespace

std::string canonical_encoding(const GrassForest& g) {
    std::string out = std::to_string(g.n) + ':';
    for (const auto& comp : components(g)) {
        out += '[';
        encode_from(g, comp.front() - 1, -1, out);
        out += ']';
    }
    return out;
}

std::string to_json_line(const GrassForest& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["helicity"] = helicity(g);
    j["mom_dimension"] = mom_dimension(g);
    j["components"] = components(g);
    auto& verts = j["internal"] = nlohmann::json::array();
    for (int v = g.n; v < g.vertex_count(); ++v) {
        nlohmann::json adj = nlohmann::json::array();
        for (int u : g.adj[v]) adj.push_back(g.is_boundary(u) ? "b" + std::to_string(u + 1) : "v" + std::to_string(u - g.n));
        verts.push_back({{"id", "v" + std::to_string(v - g.n)}, {"h", g.helicity[v]}, {"clockwise", adj}});
    }
    j["encoding"] = canonical_encoding(g);
    return j.dump();
}

} // namespace gforest::oracle

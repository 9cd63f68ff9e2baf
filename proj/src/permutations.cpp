#include "gforest/permutations.hpp"

#include "gforest/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gforest::perm {

DecoratedPermutation DecoratedPermutation::plain(std::vector<int> images) {
    DecoratedPermutation w{std::move(images), {}};
    w.decorations.assign(w.images.size(), Decoration::None);
    if (!is_valid(w)) throw std::invalid_argument("not a fixed-point-free permutation: " + to_string(w));
    return w;
}

bool is_valid(const DecoratedPermutation& w) {
    const auto n = w.images.size();
    if (w.decorations.size() != n) return false;
    std::vector<char> hit(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = w.images[i];
        if (v < 1 || v > static_cast<int>(n) || hit[v]) return false;
        hit[v] = 1;
        const bool fixed = v == static_cast<int>(i) + 1;
        if (fixed != (w.decorations[i] != Decoration::None)) return false;
    }
    return true;
}

DecoratedPermutation trip_permutation(const oracle::GrassForest& g) {
    DecoratedPermutation w;
    w.images.resize(static_cast<std::size_t>(g.n));
    w.decorations.assign(static_cast<std::size_t>(g.n), Decoration::None);
    for (int b = 0; b < g.n; ++b) {
        if (g.adj[b].size() != 1) throw std::invalid_argument("boundary vertex of degree other than 1");
        int prev = b;
        int cur = g.adj[b][0];
        while (!g.is_boundary(cur)) {
            const auto& ring = g.adj[cur];
            const int d = static_cast<int>(ring.size());
            const int i = static_cast<int>(std::find(ring.begin(), ring.end(), prev) - ring.begin());
            prev = cur;
            cur = ring[static_cast<std::size_t>((i + g.helicity[cur]) % d)];
        }
        w.images[b] = cur + 1;
        if (cur == b) {
            const int leaf = g.adj[b][0];
            w.decorations[b] = g.helicity[leaf] == 0 ? Decoration::Black : Decoration::White;
        }
    }
    return w;
}

int antiexcedances(const DecoratedPermutation& w) {
    const int n = w.n();
    std::vector<int> inverse(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) inverse[w(i)] = i;
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        if (inverse[i] > i || w.decorations[i - 1] == Decoration::White) ++count;
    }
    return count;
}

int descents(const std::vector<int>& images) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) count += images[i] > images[i + 1];
    return count;
}

DecoratedPermutation direct_sum(const DecoratedPermutation& s, const DecoratedPermutation& t) {
    DecoratedPermutation w = s;
    for (int j = 1; j <= t.n(); ++j) {
        w.images.push_back(t(j) + s.n());
        w.decorations.push_back(t.decorations[j - 1]);
    }
    return w;
}

DecoratedPermutation amalgamation(const DecoratedPermutation& s, const DecoratedPermutation& t) {
    const int ns = s.n();
    const int nt = t.n();
    if (ns < 2 || nt < 2) throw size_too_small("amalgamation needs at least two letters on each side");
    const int n = ns + nt - 2;
    DecoratedPermutation w;
    w.images.resize(static_cast<std::size_t>(n));
    w.decorations.assign(static_cast<std::size_t>(n), Decoration::None);

    // Letters of the result: 1..ns-1 from s, ns..n from t's letters 2..nt.
    const auto from_t = [&](int j) { return j + ns - 2; };
    for (int i = 1; i <= n; ++i) {
        bool in_s = i < ns;
        int out = in_s ? s(i) : t(i - ns + 2);
        // Walk across the glued edge (s's letter ns, t's letter 1) until the
        // trip leaves through an unglued letter.
        for (int guard = 0;; ++guard) {
            if (guard > 2) throw std::invalid_argument("amalgamation trip does not terminate");
            if (in_s && out == ns) {
                in_s = false;
                out = t(1);
            } else if (!in_s && out == 1) {
                in_s = true;
                out = s(ns);
            } else {
                break;
            }
        }
        const int image = in_s ? out : from_t(out);
        w.images[i - 1] = image;
        if (image == i) {
            const Decoration d = i < ns ? s.decorations[i - 1] : t.decorations[i - ns + 1];
            if (d == Decoration::None) throw std::invalid_argument("amalgamation creates an undecorated fixed point");
            w.decorations[i - 1] = d;
        }
    }
    return w;
}

DecoratedPermutation cyclic_rotation(const DecoratedPermutation& w) {
    const int n = w.n();
    DecoratedPermutation out;
    out.images.resize(static_cast<std::size_t>(n));
    out.decorations.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int src = i == 1 ? n : i - 1;
        out.images[i - 1] = w(src) % n + 1;
        out.decorations[i - 1] = w.decorations[src - 1];
    }
    return out;
}

DecoratedPermutation pi(int k, int n) {
    if (n == 1) {
        if (k != 0 && k != 1) throw std::invalid_argument("pi(k,1) needs k in {0,1}");
        return DecoratedPermutation{{1}, {k == 0 ? Decoration::Black : Decoration::White}};
    }
    if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("pi(k,n) needs 1 <= k <= n-1");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[i] = (i + k) % n + 1;
    return DecoratedPermutation::plain(std::move(images));
}

bool is_separable(const std::vector<int>& w) {
    const std::size_t n = w.size();
    // 2413: positions a<b<c<d with w[c] < w[a] < w[d] < w[b]
    // 3142: positions a<b<c<d with w[b] < w[d] < w[a] < w[c]
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (w[c] < w[a] && w[a] < w[d] && w[d] < w[b]) return false;
                    if (w[b] < w[d] && w[d] < w[a] && w[a] < w[c]) return false;
                }
            }
        }
    }
    return true;
}

std::map<int, BigInt> enumerate_separable(int n, bool by_descents, int max_n) {
    if (n < 0) throw std::invalid_argument("negative n");
    if (n > max_n) {
        throw budget_exceeded("separable enumeration is limited to n <= " + std::to_string(max_n));
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::map<int, unsigned long> counts;
    do {
        if (!is_separable(w)) continue;
        int stat = 0;
        if (by_descents) {
            stat = descents(w);
        } else {
            for (int i = 0; i < n; ++i) {
                const int pos = static_cast<int>(std::find(w.begin(), w.end(), i + 1) - w.begin());
                stat += pos > i;
            }
        }
        ++counts[stat];
    } while (std::next_permutation(w.begin(), w.end()));
    std::map<int, BigInt> out;
    for (const auto& [k, c] : counts) out[k] = BigInt(c);
    return out;
}

namespace {

using Level = std::map<DecoratedPermutation, int>;

void insert_checked(Level& level, const DecoratedPermutation& w, int dim) {
    const auto [it, fresh] = level.emplace(w, dim);
    if (!fresh && it->second != dim) {
        throw std::logic_error("permutation " + to_string(w) + " reached with mom-dimensions " +
                               std::to_string(it->second) + " and " + std::to_string(dim));
    }
}

void close_under_rotation(Level& level) {
    std::vector<std::pair<DecoratedPermutation, int>> queue(level.begin(), level.end());
    while (!queue.empty()) {
        auto [w, dim] = std::move(queue.back());
        queue.pop_back();
        auto r = cyclic_rotation(w);
        if (!level.count(r)) queue.emplace_back(r, dim);
        insert_checked(level, r, dim);
    }
}

int star_dimension(int k, int m) { return (k == 1 || k == m - 1) ? m - 1 : 2 * m - 4; }

std::vector<Level> tree_levels(int n) {
    std::vector<Level> levels(static_cast<std::size_t>(std::max(n, 2)) + 1);
    levels[1].emplace(pi(0, 1), 0);
    levels[1].emplace(pi(1, 1), 0);
    levels[2].emplace(pi(1, 2), 1);
    for (int m = 3; m <= n; ++m) {
        Level& level = levels[m];
        for (int k = 1; k <= m - 1; ++k) insert_checked(level, pi(k, m), star_dimension(k, m));
        for (int a = 3; a <= m - 1; ++a) {
            const int b = m + 2 - a;
            for (const auto& [s, ds] : levels[a]) {
                for (const auto& [t, dt] : levels[b]) insert_checked(level, amalgamation(s, t), ds + dt - 1);
            }
        }
        close_under_rotation(level);
    }
    return levels;
}

std::vector<GradedPermutation> flatten(const Level& level) {
    std::vector<GradedPermutation> out;
    out.reserve(level.size());
    for (const auto& [w, dim] : level) out.push_back({w, dim});
    return out;
}

void check_size(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("need at least one letter");
    if (n > max_n) throw budget_exceeded("permutation closure is limited to n <= " + std::to_string(max_n));
}

} // namespace

std::vector<GradedPermutation> enumerate_grass_tree_permutations(int n, int max_n) {
    check_size(n, max_n);
    return flatten(tree_levels(n)[n]);
}

std::vector<GradedPermutation> enumerate_grass_forest_permutations(int n, int max_n) {
    check_size(n, max_n);
    std::vector<Level> forests = tree_levels(n);
    for (int m = 2; m <= n; ++m) {
        Level& level = forests[m];
        for (int a = 1; a <= m - 1; ++a) {
            for (const auto& [s, ds] : forests[a]) {
                for (const auto& [t, dt] : forests[m - a]) insert_checked(level, direct_sum(s, t), ds + dt);
            }
        }
        close_under_rotation(level);
    }
    return flatten(forests[n]);
}

StatHistogram histogram(const std::vector<GradedPermutation>& perms) {
    std::map<std::pair<int, int>, unsigned long> counts;
    for (const auto& g : perms) ++counts[{antiexcedances(g.perm), g.mom_dimension}];
    StatHistogram out;
    for (const auto& [key, c] : counts) out[key] = BigInt(c);
    return out;
}

std::string to_string(const DecoratedPermutation& w) {
    std::string out = "(";
    for (int i = 1; i <= w.n(); ++i) {
        if (i > 1) out += ',';
        const Decoration d = i - 1 < static_cast<int>(w.decorations.size()) ? w.decorations[i - 1] : Decoration::None;
        if (d == Decoration::Black) out += '_';
        if (d == Decoration::White) out += '^';
        out += std::to_string(w(i));
    }
    return out + ')';
}

std::string to_json(const DecoratedPermutation& w) {
    nlohmann::json j;
    j["images"] = w.images;
    j["decorations"] = nlohmann::json::object();
    for (int i = 1; i <= w.n(); ++i) {
        const Decoration d = w.decorations[i - 1];
        if (d != Decoration::None) j["decorations"][std::to_string(i)] = d == Decoration::Black ? "black" : "white";
    }
    return j.dump();
}

} // namespace gforest::perm

#include "gforest/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gforest::oracle {

namespace {

bool crosses(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    const auto [p, q] = a;
    const auto [r, s] = b;
    return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

// Splits the polygon `verts` (cyclic, increasing labels) along any diagonal
// with both ends on it, recursing into the two halves.
void split(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& diagonals, std::vector<int>& out) {
    for (const auto& [a, b] : diagonals) {
        const auto ia = std::find(verts.begin(), verts.end(), a);
        const auto ib = std::find(verts.begin(), verts.end(), b);
        if (ia == verts.end() || ib == verts.end()) continue;
        const auto gap = ib - ia;
        // a side of the current polygon is not a diagonal of it
        if (gap == 1 || gap == static_cast<std::ptrdiff_t>(verts.size()) - 1) continue;
        std::vector<int> inner(ia, ib + 1);
        std::vector<int> outer(verts.begin(), ia + 1);
        outer.insert(outer.end(), ib, verts.end());
        split(inner, diagonals, out);
        split(outer, diagonals, out);
        return;
    }
    out.push_back(static_cast<int>(verts.size()));
}

} // namespace

std::vector<int> Dissection::polygon_sizes() const {
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[i] = i + 1;
    std::vector<int> out;
    split(verts, diagonals, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Dissection::type() const {
    std::vector<int> m(static_cast<std::size_t>(std::max(0, n - 2)), 0);
    for (int s : polygon_sizes()) ++m.at(static_cast<std::size_t>(s - 3));
    return m;
}

void for_each_dissection(int n, const std::function<void(const Dissection&)>& visit) {
    if (n < 3) throw std::invalid_argument("a polygon needs at least three vertices");
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 2; j <= n; ++j) {
            if (!(i == 1 && j == n)) all.emplace_back(i, j);
        }
    }
    Dissection d{n, {}};
    const std::function<void(std::size_t)> extend = [&](std::size_t from) {
        visit(d);
        for (std::size_t i = from; i < all.size(); ++i) {
            const bool ok = std::none_of(d.diagonals.begin(), d.diagonals.end(),
                                         [&](const auto& e) { return crosses(e, all[i]); });
            if (!ok) continue;
            d.diagonals.push_back(all[i]);
            extend(i + 1);
            d.diagonals.pop_back();
        }
    };
    extend(0);
}

std::vector<Dissection> enumerate_dissections(int n) {
    std::vector<Dissection> out;
    for_each_dissection(n, [&](const Dissection& d) { out.push_back(d); });
    return out;
}

BivarPoly dissection_weighted_sum(int n, const transforms::WeightFunction& f) {
    BivarPoly total;
    for_each_dissection(n, [&](const Dissection& d) {
        BivarPoly w(1L);
        for (int s : d.polygon_sizes()) w *= f(s);
        total += w;
    });
    return total;
}

} // namespace gforest::oracle

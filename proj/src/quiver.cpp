// gammaq — exact computations with derived preprojective algebras of quivers
//
// Copyright (c) 2026 the gammaq authors
// SPDX-License-Identifier: MIT

#include "gammaq/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gammaq {

Quiver::Quiver(std::vector<int> vertices, std::vector<Arrow> arrows,
               std::string name)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)),
      name_(std::move(name)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw ConfigError("duplicate vertex in quiver");
    if (vertices_.empty())
        throw ConfigError("quiver must have at least one vertex");

    std::set<std::string> ids;
    for (const Arrow& a : arrows_) {
        if (a.id.empty())
            throw ConfigError("arrow with empty id");
        if (!ids.insert(a.id).second)
            throw ConfigError("duplicate arrow id '" + a.id + "'");
        if (!has_vertex(a.from) || !has_vertex(a.to))
            throw ConfigError("arrow '" + a.id + "' references unknown vertex");
        if (a.from == a.to)
            throw ConfigError("arrow '" + a.id + "' is a loop; loops are not allowed");
    }

    // Acyclicity via Kahn's algorithm.
    std::map<int, int> indeg;
    for (int v : vertices_) indeg[v] = 0;
    for (const Arrow& a : arrows_) ++indeg[a.to];
    std::vector<int> queue;
    for (auto& [v, d] : indeg)
        if (d == 0) queue.push_back(v);
    std::size_t seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (const Arrow& a : arrows_)
            if (a.from == v && --indeg[a.to] == 0) queue.push_back(a.to);
    }
    if (seen != vertices_.size())
        throw ConfigError("quiver has an oriented cycle");
}

bool Quiver::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Quiver::arrows_between(int i, int j) const {
    int n = 0;
    for (const Arrow& a : arrows_)
        if ((a.from == i && a.to == j) || (a.from == j && a.to == i)) ++n;
    return n;
}

namespace {

std::vector<int> range1(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return v;
}

Arrow arr(int from, int to) {
    return Arrow{"a" + std::to_string(from) + "_" + std::to_string(to), from, to};
}

} // namespace

Quiver Quiver::type_a(int n) {
    if (n < 1) throw ConfigError("A_n needs n >= 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back(arr(i, i + 1));
    return Quiver(range1(n), std::move(arrows), "A" + std::to_string(n));
}

Quiver Quiver::type_d(int n) {
    if (n < 4) throw ConfigError("D_n needs n >= 4");
    std::vector<Arrow> arrows;
    arrows.push_back(arr(1, 3));
    arrows.push_back(arr(2, 3));
    for (int i = 3; i < n; ++i) arrows.push_back(arr(i, i + 1));
    return Quiver(range1(n), std::move(arrows), "D" + std::to_string(n));
}

Quiver Quiver::type_e(int n) {
    if (n < 6 || n > 8) throw ConfigError("E_n needs n in {6, 7, 8}");
    std::vector<Arrow> arrows;
    for (int i = 1; i + 1 <= n - 1; ++i) arrows.push_back(arr(i, i + 1));
    arrows.push_back(arr(n, 3));
    return Quiver(range1(n), std::move(arrows), "E" + std::to_string(n));
}

Quiver Quiver::kronecker(int m) {
    if (m < 1) throw ConfigError("Kronecker quiver needs m >= 1 arrows");
    std::vector<Arrow> arrows;
    for (int k = 1; k <= m; ++k)
        arrows.push_back(Arrow{"a" + std::to_string(k), 1, 2});
    return Quiver({1, 2}, std::move(arrows), "Kronecker(" + std::to_string(m) + ")");
}

} // namespace gammaq

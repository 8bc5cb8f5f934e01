#include "proofleg/digraph.hpp"

#include <algorithm>

#include "proofleg/errors.hpp"

namespace proofleg {

Digraph build_digraph(int n, std::vector<std::pair<int, int>> arcs) {
    if (n < 0) fail(Errc::OutOfRangeVertex, "negative vertex count");
    for (auto [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n)
            fail(Errc::OutOfRangeVertex,
                 "arc (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Digraph{n, std::move(arcs)};
}

std::vector<std::vector<int>> out_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
    for (auto [u, v] : g.arcs) adj[static_cast<std::size_t>(u)].push_back(v);
    return adj;
}

std::vector<std::vector<int>> in_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
    for (auto [u, v] : g.arcs) adj[static_cast<std::size_t>(v)].push_back(u);
    return adj;
}

namespace {

// Iterative colouring DFS; on finding a back arc returns the cycle.
std::optional<std::vector<int>> cycle_search(const Digraph& g) {
    auto adj = out_adjacency(g);
    std::vector<int> colour(static_cast<std::size_t>(g.n) + 1, 0); // 0 white, 1 grey, 2 black
    std::vector<int> parent(static_cast<std::size_t>(g.n) + 1, 0);
    for (int s = 1; s <= g.n; ++s) {
        if (colour[static_cast<std::size_t>(s)] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        colour[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            auto& out = adj[static_cast<std::size_t>(u)];
            if (next == out.size()) {
                colour[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
                continue;
            }
            int v = out[next++];
            if (colour[static_cast<std::size_t>(v)] == 1) {
                std::vector<int> cycle{v};
                for (int w = u; w != v; w = parent[static_cast<std::size_t>(w)]) cycle.push_back(w);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;
            }
            if (colour[static_cast<std::size_t>(v)] == 0) {
                colour[static_cast<std::size_t>(v)] = 1;
                parent[static_cast<std::size_t>(v)] = u;
                stack.emplace_back(v, 0);
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> find_cycle(const Digraph& g) {
    return cycle_search(g);
}

bool is_acyclic(const Digraph& g) {
    return !cycle_search(g).has_value();
}

} // namespace proofleg

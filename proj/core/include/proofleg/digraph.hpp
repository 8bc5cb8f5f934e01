#ifndef PROOFLEG_DIGRAPH_HPP
#define PROOFLEG_DIGRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace proofleg {

// Plain directed graph over vertices 1..n. Cycles and self-loops are
// permitted; arcs are kept sorted and deduplicated.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

// Validates vertex ranges, sorts and deduplicates the arc list.
Digraph build_digraph(int n, std::vector<std::pair<int, int>> arcs);

std::vector<std::vector<int>> out_adjacency(const Digraph& g);
std::vector<std::vector<int>> in_adjacency(const Digraph& g);

bool is_acyclic(const Digraph& g);

// Some directed cycle as a vertex sequence v1, ..., vk (with an arc vk -> v1),
// or nullopt when the graph is acyclic.
std::optional<std::vector<int>> find_cycle(const Digraph& g);

} // namespace proofleg

#endif

#ifndef PROOFLEG_TESTS_FIXTURES_HPP
#define PROOFLEG_TESTS_FIXTURES_HPP

// Shared example graphs and brute-force oracles. The oracles deliberately
// avoid the library's algorithms: orders come from filtering raw
// permutations, so any agreement with the enumeration or the solvers is
// meaningful.

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "proofleg/graph.hpp"

namespace fixtures {

using proofleg::ProofGraph;

// Six steps, one binder, arc 1->5 both a reference and a variable arc.
inline ProofGraph fig2() {
    return proofleg::build_graph(
        6, {{1, 5}, {2, 5}, {3, 4}, {4, 6}, {5, 6}},
        {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

// The 17-step field proof.
inline ProofGraph fig6() {
    std::vector<std::pair<int, int>> refs = {
        {2, 10}, {2, 12}, {2, 15}, {2, 16}, {3, 5},   {4, 8},
        {5, 7},  {6, 10}, {7, 9},  {8, 12}, {9, 11},  {10, 15},
        {11, 13}, {12, 14}, {13, 15}, {14, 16}, {15, 17}, {16, 17}};
    std::vector<std::pair<int, int>> vars;
    for (int k = 2; k <= 16; ++k) vars.push_back({1, k});
    return proofleg::build_graph(17, refs, vars);
}

// Seven steps, two binders, arc 5->6 both a reference and a variable arc.
inline ProofGraph fig11() {
    return proofleg::build_graph(
        7, {{1, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {6, 7}},
        {{1, 6}, {2, 4}, {2, 5}, {5, 6}});
}

// The then-maximizing order of fig6 used throughout the docs.
inline std::vector<int> tau_fig8() {
    return {1, 3, 5, 7, 9, 11, 13, 6, 2, 10, 15, 4, 8, 12, 14, 16, 17};
}

// Every topological order of g, by filtering all permutations. Fine for
// n <= 8.
inline std::vector<std::vector<int>> brute_force_orders(const ProofGraph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> pos(perm.size() + 1, 0);
        for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        bool ok = true;
        for (const proofleg::Arc& a : g.arcs())
            if (pos[static_cast<std::size_t>(a.tail)] >= pos[static_cast<std::size_t>(a.head)]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Random DAG whose vertex ids are deliberately not in topological order:
// arcs are sampled on ranks i < j and then renamed by a random permutation.
inline ProofGraph random_dag(std::mt19937& rng, int n, double ref_p, double var_p) {
    std::vector<int> name(static_cast<std::size_t>(n));
    std::iota(name.begin(), name.end(), 1);
    std::shuffle(name.begin(), name.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> refs;
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::pair<int, int> a{name[static_cast<std::size_t>(i)], name[static_cast<std::size_t>(j)]};
            const bool r = coin(rng) < ref_p;
            const bool v = coin(rng) < var_p;
            if (r) refs.push_back(a);
            if (v) vars.push_back(a);
        }
    return proofleg::build_graph(n, refs, vars);
}

} // namespace fixtures

#endif

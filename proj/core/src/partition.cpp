#include "proofleg/partition.hpp"

#include <algorithm>
#include <numeric>

#include "proofleg/errors.hpp"

namespace proofleg {

std::vector<int> PathPartition::block_of(int n) const {
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b]) {
            if (v >= 1 && v <= n) owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    return owner;
}

namespace {

PathPartition runs_by(const ProofGraph& g, const TopoOrder& t, bool refs_only) {
    PathPartition p;
    for (int rank = 1; rank <= t.size(); ++rank) {
        int v = t.vertex_at(rank);
        bool linked = false;
        if (rank > 1) {
            int prev = t.vertex_at(rank - 1);
            linked = refs_only ? g.has_reference_arc(prev, v) : g.has_arc(prev, v);
        }
        if (!linked) p.blocks.emplace_back();
        p.blocks.back().push_back(v);
    }
    return p;
}

// Owner array after checking p covers 1..n exactly once.
std::vector<int> checked_owner(const ProofGraph& g, const PathPartition& p, Errc code) {
    int n = g.vertex_count();
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    int covered = 0;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].empty()) fail(code, "empty block");
        for (int v : p.blocks[b]) {
            if (v < 1 || v > n) fail(code, "vertex " + std::to_string(v) + " out of range");
            if (owner[static_cast<std::size_t>(v)] != -1)
                fail(code, "vertex " + std::to_string(v) + " in two blocks");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
            ++covered;
        }
    }
    if (covered != n) fail(code, "covers " + std::to_string(covered) + " of " + std::to_string(n));
    return owner;
}

} // namespace

PathPartition reasoning_partition(const ProofGraph& g, const TopoOrder& t) {
    return runs_by(g, t, true);
}

PathPartition path_partition_over_all_arcs(const ProofGraph& g, const TopoOrder& t) {
    return runs_by(g, t, false);
}

int cross_reference_count(const ProofGraph& g, const PathPartition& p) {
    auto owner = checked_owner(g, p, Errc::NotAPartition);
    int cross = 0;
    for (const Arc& a : g.arcs()) {
        if (!a.is_reference) continue;
        if (owner[static_cast<std::size_t>(a.tail)] != owner[static_cast<std::size_t>(a.head)])
            ++cross;
    }
    return cross;
}

Digraph quotient(const ProofGraph& g, const PathPartition& p) {
    auto owner = checked_owner(g, p, Errc::NotAPartition);
    std::vector<std::pair<int, int>> arcs;
    for (const Arc& a : g.arcs()) {
        int bi = owner[static_cast<std::size_t>(a.tail)];
        int bj = owner[static_cast<std::size_t>(a.head)];
        if (bi != bj) arcs.emplace_back(bi + 1, bj + 1);
    }
    return build_digraph(p.block_count(), std::move(arcs));
}

HCheck is_h_partition(const ProofGraph& g, const PathPartition& p) {
    int n = g.vertex_count();
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
    int covered = 0;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].empty()) return {false, "empty block"};
        for (int v : p.blocks[b]) {
            if (v < 1 || v > n) return {false, "vertex " + std::to_string(v) + " out of range"};
            if (owner[static_cast<std::size_t>(v)] != -1)
                return {false, "vertex " + std::to_string(v) + " in two blocks"};
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
            ++covered;
        }
    }
    if (covered != n)
        return {false, "covers " + std::to_string(covered) + " of " + std::to_string(n) + " vertices"};
    for (const auto& block : p.blocks) {
        for (std::size_t i = 0; i + 1 < block.size(); ++i) {
            if (!g.has_arc(block[i], block[i + 1]))
                return {false, "no arc (" + std::to_string(block[i]) + "," +
                                   std::to_string(block[i + 1]) + ") inside a block"};
        }
    }
    if (!is_acyclic(quotient(g, p))) return {false, "quotient has a cycle"};
    return {};
}

TopoOrder order_from_partition(const ProofGraph& g, const PathPartition& p) {
    // Validate everything except quotient acyclicity first so the two error
    // conditions stay distinguishable.
    {
        int n = g.vertex_count();
        std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
        int covered = 0;
        for (std::size_t b = 0; b < p.blocks.size(); ++b) {
            if (p.blocks[b].empty()) fail(Errc::NotHPartition, "empty block");
            for (int v : p.blocks[b]) {
                if (v < 1 || v > n)
                    fail(Errc::NotHPartition, "vertex " + std::to_string(v) + " out of range");
                if (owner[static_cast<std::size_t>(v)] != -1)
                    fail(Errc::NotHPartition, "vertex " + std::to_string(v) + " in two blocks");
                owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
                ++covered;
            }
        }
        if (covered != n)
            fail(Errc::NotHPartition,
                 "covers " + std::to_string(covered) + " of " + std::to_string(n) + " vertices");
        for (const auto& block : p.blocks) {
            for (std::size_t i = 0; i + 1 < block.size(); ++i) {
                if (!g.has_arc(block[i], block[i + 1]))
                    fail(Errc::NotHPartition, "no arc (" + std::to_string(block[i]) + "," +
                                                  std::to_string(block[i + 1]) + ") inside a block");
            }
        }
    }

    Digraph q = quotient(g, p);
    auto adj = out_adjacency(q);
    std::vector<int> indeg(static_cast<std::size_t>(q.n) + 1, 0);
    for (auto [u, v] : q.arcs) ++indeg[static_cast<std::size_t>(v)];

    std::vector<int> min_id(static_cast<std::size_t>(q.n) + 1, 0);
    for (int b = 1; b <= q.n; ++b)
        min_id[static_cast<std::size_t>(b)] =
            *std::min_element(p.blocks[static_cast<std::size_t>(b) - 1].begin(),
                              p.blocks[static_cast<std::size_t>(b) - 1].end());

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> emitted(static_cast<std::size_t>(q.n) + 1, 0);
    for (int step = 0; step < q.n; ++step) {
        int pick = 0;
        for (int b = 1; b <= q.n; ++b) {
            if (emitted[static_cast<std::size_t>(b)] || indeg[static_cast<std::size_t>(b)] != 0)
                continue;
            if (pick == 0 || min_id[static_cast<std::size_t>(b)] < min_id[static_cast<std::size_t>(pick)])
                pick = b;
        }
        if (pick == 0) fail(Errc::QuotientCyclic, "no block available");
        emitted[static_cast<std::size_t>(pick)] = 1;
        for (int v : p.blocks[static_cast<std::size_t>(pick) - 1]) order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(pick)]) --indeg[static_cast<std::size_t>(w)];
    }
    return TopoOrder::of(g, order);
}

std::optional<std::vector<int>> hamiltonian_path_of(const ProofGraph& g,
                                                    const std::vector<int>& vertices) {
    if (vertices.empty()) return std::nullopt;
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    if (sorted.front() < 1 || sorted.back() > g.vertex_count()) return std::nullopt;

    // A DAG has a Hamiltonian path iff its (then unique) topological order
    // links every consecutive pair, so one greedy pass settles it.
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : sorted) in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : sorted)
        for (int w : g.all_out(v))
            if (in_set[static_cast<std::size_t>(w)]) ++indeg[static_cast<std::size_t>(w)];

    std::vector<int> path;
    std::vector<char> done(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t step = 0; step < sorted.size(); ++step) {
        int pick = 0;
        for (int v : sorted) {
            if (done[static_cast<std::size_t>(v)] || indeg[static_cast<std::size_t>(v)] != 0) continue;
            pick = v;
            break;
        }
        if (pick == 0) return std::nullopt;
        done[static_cast<std::size_t>(pick)] = 1;
        path.push_back(pick);
        for (int w : g.all_out(pick))
            if (in_set[static_cast<std::size_t>(w)]) --indeg[static_cast<std::size_t>(w)];
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_arc(path[i], path[i + 1])) return std::nullopt;
    return path;
}

} // namespace proofleg

#ifndef PROOFLEG_PARTITION_HPP
#define PROOFLEG_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "proofleg/digraph.hpp"
#include "proofleg/graph.hpp"

namespace proofleg {

// A partition of the vertex set into blocks, each stored as the vertex
// sequence of a directed path.
struct PathPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    // block index (0-based) per vertex; -1 for vertices not covered
    std::vector<int> block_of(int n) const;
};

// The maximal runs of consecutive ranks linked by reference arcs, listed in
// increasing order of first rank. Every linearization induces one.
PathPartition reasoning_partition(const ProofGraph& g, const TopoOrder& t);

// Same construction over all arcs instead of reference arcs only.
PathPartition path_partition_over_all_arcs(const ProofGraph& g, const TopoOrder& t);

// Reference arcs whose endpoints lie in different blocks of p. Accepts any
// partition of the vertex set (NotAPartition otherwise).
int cross_reference_count(const ProofGraph& g, const PathPartition& p);

// The quotient digraph of p over all arcs of g: block i -> block j (1-based)
// iff i != j and some arc runs from block i to block j.
Digraph quotient(const ProofGraph& g, const PathPartition& p);

struct HCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// True iff p partitions the vertex set, every stored block sequence is a
// directed path of g, and the quotient is acyclic.
HCheck is_h_partition(const ProofGraph& g, const PathPartition& p);

// Concatenates the block paths of a valid partition in a topological order
// of the quotient (ties broken by smallest contained vertex id). Throws
// NotHPartition or QuotientCyclic. The result never uses more maximal paths
// than p has blocks.
TopoOrder order_from_partition(const ProofGraph& g, const PathPartition& p);

// The unique directed path through exactly the given vertices, or nullopt.
std::optional<std::vector<int>> hamiltonian_path_of(const ProofGraph& g,
                                                    const std::vector<int>& vertices);

} // namespace proofleg

#endif

#ifndef PROOFLEG_REDUCTIONS_HPP
#define PROOFLEG_REDUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "proofleg/digraph.hpp"
#include "proofleg/graph.hpp"
#include "proofleg/partition.hpp"

namespace proofleg {

// Simple undirected graph over vertices 1..n; edges normalized (u < v),
// sorted, deduplicated. Self-loops are rejected (SelfLoopInInput).
struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

UndirectedGraph build_undirected(int n, std::vector<std::pair<int, int>> edges);

// Vertex layout shared by the vertex-cover reductions: source vertex v maps
// to the pair (v,0), (v,1).
struct PairRoleMap {
    int source_n = 0;
    int id(int v, int bit) const { return 2 * (v - 1) + bit + 1; }
    std::pair<int, int> role(int id) const { return {(id - 1) / 2 + 1, (id - 1) % 2}; }
};

// --- vertex cover to feedback arc set ----------------------------------

struct VcToFasResult {
    Digraph instance;
    PairRoleMap roles;
};

// (v,0) -> (v,1) for every vertex; (u,1) -> (v,0) and (v,1) -> (u,0) for
// every edge. Every vertex of the result has in-degree 1 or out-degree 1,
// and the minimum feedback arc set size equals the minimum cover size.
VcToFasResult vc_to_fas(const UndirectedGraph& g);

// Exact minimum vertex cover; lexicographically smallest among the optima.
// Brute force, guarded by ScaleCapExceeded for n > 20.
std::vector<int> solve_vc_exact(const UndirectedGraph& g);

// Exact minimum feedback arc set via ordering dynamic programming (back
// arcs of an optimal permutation, self-loops always included). Guarded by
// ScaleCapExceeded for n > 22.
std::vector<std::pair<int, int>> solve_fas_exact(const Digraph& g);

// --- feedback arc set to acyclic Hamiltonian-path partition --------------

// Id layout of the partition instance D: the (m+1) x (m+1) grid gadget of
// source vertex v occupies ids (v-1)(m+1)^2 + i(m+1) + j + 1; the glue
// vertex of the k-th source arc follows the cells at n(m+1)^2 + k.
struct GadgetCoords {
    int source_n = 0; // source vertices (gadget count)
    int m = 0;        // source arcs (grid side is m+1)
    std::vector<std::pair<int, int>> arc_of_number; // 1-based arc numbering e
    std::vector<int> number_of_arc_flat; // index tail*(n+1)+head -> number, 0 if absent

    int cells_per_gadget() const { return (m + 1) * (m + 1); }
    int cell(int v, int i, int j) const {
        return (v - 1) * cells_per_gadget() + i * (m + 1) + j + 1;
    }
    int glue(int k) const { return source_n * cells_per_gadget() + k; }
    bool is_glue(int id) const { return id > source_n * cells_per_gadget(); }
    int glue_number(int id) const { return id - source_n * cells_per_gadget(); }
    // (v, i, j) of a cell id
    std::tuple<int, int, int> cell_role(int id) const;
    int arc_number(int tail, int head) const;
};

struct FasToAhpResult {
    ProofGraph dag; // all arcs flagged as reference
    GadgetCoords coords;
    long long offset = 0; // n * (m + 1); min partition size = offset + min FAS
};

// The bare (m+1) x (m+1) grid gadget together with its coordinate map
// (single gadget, no glue vertices).
FasToAhpResult build_gadget(int m);

// Builds the partition instance D for a digraph in which every vertex has
// in-degree 1 or out-degree 1 (DegreePreconditionViolated otherwise;
// SelfLoopInInput for self-loops). `e` optionally fixes the arc numbering;
// by default arcs are numbered in lexicographic (tail, head) order.
FasToAhpResult fas_to_ahp(const Digraph& g,
                          const std::optional<std::vector<std::pair<int, int>>>& e = std::nullopt);

// The canonical partition associated with a feedback arc set F: glue-led
// gadget rows for surviving arcs, bare rows otherwise, and one singleton
// per arc of F. Size n(m+1) + |F|. Throws NotFeedbackArcSet.
PathPartition partition_from_fas(const Digraph& source, const FasToAhpResult& d,
                                 const std::vector<std::pair<int, int>>& fas);

enum class Orientation { LeftOriented, RightOriented, NotWellOriented };

// How partition p cuts the gadget of source vertex v: LeftOriented when the
// traces of p on the gadget are exactly its rows, RightOriented for its
// columns.
Orientation gadget_orientation(const FasToAhpResult& d, const PathPartition& p, int v);

struct NormalizeStats {
    int gadgets_rewritten = 0;
    int blocks_split = 0;
};

// Rewrites every gadget that is not well oriented into a row or column
// family of no larger size, splitting off an incident glue vertex when the
// rewrite would close a quotient cycle. The result is a valid partition,
// no larger than p, with every gadget well oriented; gadgets already well
// oriented are left untouched.
PathPartition normalize_orientation(const FasToAhpResult& d, const PathPartition& p,
                                    NormalizeStats* stats = nullptr);

// Reads a feedback arc set of the source digraph off a partition whose
// gadgets are all well oriented: the arcs whose glue vertices form
// singleton blocks. Throws GadgetNotWellOriented.
std::vector<std::pair<int, int>> fas_from_partition(const Digraph& source,
                                                    const FasToAhpResult& d,
                                                    const PathPartition& p);

// --- vertex cover to the label-count problem -----------------------------

struct VcToMil5Result {
    ProofGraph instance;
    PairRoleMap roles;
};

// Reference arc (v,0) -> (v,1) for every vertex, variable arcs
// (v,0) -> (u,1) and (u,0) -> (v,1) for every edge. The minimum plain label
// count equals the minimum cover size.
VcToMil5Result vc_to_mil5(const UndirectedGraph& g);

// Order whose plain label set has at most |cover| elements: cover pairs
// become singletons, the rest stay adjacent. Throws NotACover.
TopoOrder cover_to_order(const UndirectedGraph& g, const VcToMil5Result& inst,
                         const std::vector<int>& cover);

// The cover read off a linearization of the reduction instance.
std::vector<int> order_to_cover(const UndirectedGraph& g, const VcToMil5Result& inst,
                                const TopoOrder& t);

} // namespace proofleg

#endif

#ifndef PROOFLEG_GRAPH_HPP
#define PROOFLEG_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace proofleg {

// One arc of an abstract proof graph. An arc may carry both flags at once
// (one step both cites another and uses a constant it introduced).
struct Arc {
    int tail = 0;
    int head = 0;
    bool is_reference = false;
    bool is_variable = false;
};

// Immutable DAG over vertices 1..n modelling a proof script: vertices are
// reasoning steps, reference arcs are uses of earlier statements, variable
// arcs connect a step introducing a variable to the steps mentioning it.
class ProofGraph {
public:
    ProofGraph() = default;

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int reference_arc_count() const { return reference_arc_count_; }

    // Sorted by (tail, head); at most one Arc per ordered pair.
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<int>& ref_out(int v) const { return ref_out_[v]; }
    const std::vector<int>& ref_in(int v) const { return ref_in_[v]; }
    const std::vector<int>& var_out(int v) const { return var_out_[v]; }
    const std::vector<int>& var_in(int v) const { return var_in_[v]; }
    const std::vector<int>& all_out(int v) const { return all_out_[v]; }
    const std::vector<int>& all_in(int v) const { return all_in_[v]; }

    bool has_reference_arc(int tail, int head) const;
    bool has_variable_arc(int tail, int head) const;
    bool has_arc(int tail, int head) const;

    friend ProofGraph build_graph(int n,
                                  const std::vector<std::pair<int, int>>& reference_arcs,
                                  const std::vector<std::pair<int, int>>& variable_arcs);

private:
    int n_ = 0;
    int reference_arc_count_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> ref_out_, ref_in_;
    std::vector<std::vector<int>> var_out_, var_in_;
    std::vector<std::vector<int>> all_out_, all_in_;
};

// Builds a proof graph from arc lists. A pair appearing in both lists yields
// a single arc carrying both flags. Throws OutOfRangeVertex, SelfLoop, or
// CycleDetected (with a witness cycle in the message).
ProofGraph build_graph(int n,
                       const std::vector<std::pair<int, int>>& reference_arcs,
                       const std::vector<std::pair<int, int>>& variable_arcs);

// A topological sorting of a proof graph, held both as rank -> vertex and
// vertex -> rank (ranks are 1-based).
class TopoOrder {
public:
    TopoOrder() = default;

    // Validates that `vertex_order` is a permutation of 1..n compatible with
    // every arc; throws OrderNotTopological or OutOfRangeVertex otherwise.
    static TopoOrder of(const ProofGraph& g, const std::vector<int>& vertex_order);

    // The unique lexicographically smallest topological sorting.
    static TopoOrder lexicographic_smallest(const ProofGraph& g);

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    int vertex_at(int rank) const { return order_[rank - 1]; }
    int position(int v) const { return position_[v]; }
    const std::vector<int>& positions() const { return position_; }

private:
    std::vector<int> order_;
    std::vector<int> position_; // indexed by vertex, entry 0 unused
};

// True when some reference arc <v,u> is shortcut by a reference path from
// v to u of length at least two.
bool has_e1_shortcut(const ProofGraph& g);

} // namespace proofleg

#endif

#include "proofleg/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "proofleg/digraph.hpp"
#include "proofleg/errors.hpp"

namespace proofleg {

namespace {

std::string arc_text(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

bool ProofGraph::has_reference_arc(int tail, int head) const {
    const auto& out = ref_out_[static_cast<std::size_t>(tail)];
    return std::binary_search(out.begin(), out.end(), head);
}

bool ProofGraph::has_variable_arc(int tail, int head) const {
    const auto& out = var_out_[static_cast<std::size_t>(tail)];
    return std::binary_search(out.begin(), out.end(), head);
}

bool ProofGraph::has_arc(int tail, int head) const {
    const auto& out = all_out_[static_cast<std::size_t>(tail)];
    return std::binary_search(out.begin(), out.end(), head);
}

ProofGraph build_graph(int n,
                       const std::vector<std::pair<int, int>>& reference_arcs,
                       const std::vector<std::pair<int, int>>& variable_arcs) {
    if (n < 0) fail(Errc::OutOfRangeVertex, "negative vertex count");

    std::map<std::pair<int, int>, std::pair<bool, bool>> merged;
    auto add = [&](const std::pair<int, int>& a, bool ref) {
        auto [u, v] = a;
        if (u < 1 || u > n || v < 1 || v > n)
            fail(Errc::OutOfRangeVertex, "arc " + arc_text(u, v) + " with n=" + std::to_string(n));
        if (u == v) fail(Errc::SelfLoop, "arc " + arc_text(u, v));
        auto& flags = merged[a];
        (ref ? flags.first : flags.second) = true;
    };
    for (const auto& a : reference_arcs) add(a, true);
    for (const auto& a : variable_arcs) add(a, false);

    std::vector<std::pair<int, int>> plain;
    plain.reserve(merged.size());
    for (const auto& [a, flags] : merged) plain.push_back(a);
    Digraph d = build_digraph(n, plain);
    if (auto cycle = find_cycle(d)) {
        std::string text = "cycle";
        for (int v : *cycle) text += " " + std::to_string(v);
        fail(Errc::CycleDetected, text);
    }

    ProofGraph g;
    g.n_ = n;
    auto sz = static_cast<std::size_t>(n) + 1;
    g.ref_out_.resize(sz);
    g.ref_in_.resize(sz);
    g.var_out_.resize(sz);
    g.var_in_.resize(sz);
    g.all_out_.resize(sz);
    g.all_in_.resize(sz);
    for (const auto& [a, flags] : merged) {
        auto [u, v] = a;
        auto [is_ref, is_var] = flags;
        g.arcs_.push_back(Arc{u, v, is_ref, is_var});
        if (is_ref) {
            ++g.reference_arc_count_;
            g.ref_out_[static_cast<std::size_t>(u)].push_back(v);
            g.ref_in_[static_cast<std::size_t>(v)].push_back(u);
        }
        if (is_var) {
            g.var_out_[static_cast<std::size_t>(u)].push_back(v);
            g.var_in_[static_cast<std::size_t>(v)].push_back(u);
        }
        g.all_out_[static_cast<std::size_t>(u)].push_back(v);
        g.all_in_[static_cast<std::size_t>(v)].push_back(u);
    }
    // map iteration is (tail, head)-sorted, so out lists are sorted already;
    // in lists need a pass.
    for (auto& in : g.ref_in_) std::sort(in.begin(), in.end());
    for (auto& in : g.var_in_) std::sort(in.begin(), in.end());
    for (auto& in : g.all_in_) std::sort(in.begin(), in.end());
    return g;
}

TopoOrder TopoOrder::of(const ProofGraph& g, const std::vector<int>& vertex_order) {
    int n = g.vertex_count();
    if (static_cast<int>(vertex_order.size()) != n)
        fail(Errc::OrderNotTopological,
             "length " + std::to_string(vertex_order.size()) + " for n=" + std::to_string(n));
    TopoOrder t;
    t.order_ = vertex_order;
    t.position_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int rank = 1; rank <= n; ++rank) {
        int v = vertex_order[static_cast<std::size_t>(rank) - 1];
        if (v < 1 || v > n) fail(Errc::OutOfRangeVertex, "vertex " + std::to_string(v));
        if (t.position_[static_cast<std::size_t>(v)] != 0)
            fail(Errc::OrderNotTopological, "vertex " + std::to_string(v) + " repeated");
        t.position_[static_cast<std::size_t>(v)] = rank;
    }
    for (const Arc& a : g.arcs()) {
        if (t.position_[static_cast<std::size_t>(a.tail)] >= t.position_[static_cast<std::size_t>(a.head)])
            fail(Errc::OrderNotTopological, "arc " + arc_text(a.tail, a.head) + " inverted");
    }
    return t;
}

TopoOrder TopoOrder::lexicographic_smallest(const ProofGraph& g) {
    int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : g.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
    // min-heap behaviour via a sorted "ready" set; n stays small enough that
    // repeated linear scans would also do, but keep it tidy.
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>());
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : g.all_out(v)) {
            if (--indeg[static_cast<std::size_t>(w)] == 0) {
                ready.push_back(w);
                std::push_heap(ready.begin(), ready.end(), std::greater<>());
            }
        }
    }
    return of(g, order);
}

bool has_e1_shortcut(const ProofGraph& g) {
    int n = g.vertex_count();
    // reach[v] = vertices reachable from v by reference paths of length >= 1.
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n) + 1,
                                         std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    TopoOrder t = TopoOrder::lexicographic_smallest(g);
    for (int rank = n; rank >= 1; --rank) {
        int v = t.vertex_at(rank);
        auto& rv = reach[static_cast<std::size_t>(v)];
        for (int w : g.ref_out(v)) {
            rv[static_cast<std::size_t>(w)] = 1;
            const auto& rw = reach[static_cast<std::size_t>(w)];
            for (int x = 1; x <= n; ++x) rv[static_cast<std::size_t>(x)] |= rw[static_cast<std::size_t>(x)];
        }
    }
    for (const Arc& a : g.arcs()) {
        if (!a.is_reference) continue;
        for (int w : g.ref_out(a.tail)) {
            if (w == a.head) continue;
            if (reach[static_cast<std::size_t>(w)][static_cast<std::size_t>(a.head)]) return true;
        }
    }
    return false;
}

} // namespace proofleg

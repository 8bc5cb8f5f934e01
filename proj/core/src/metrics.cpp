#include "proofleg/metrics.hpp"

#include <algorithm>

#include "proofleg/partition.hpp"

namespace proofleg {

std::vector<int> then_step_set(const ProofGraph& g, const TopoOrder& t) {
    std::vector<int> out;
    for (int rank = 2; rank <= t.size(); ++rank) {
        int u = t.vertex_at(rank);
        int prev = t.vertex_at(rank - 1);
        if (g.has_reference_arc(prev, u)) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<long long, int> distance_metrics(const ProofGraph& g, const TopoOrder& t) {
    long long sum = 0;
    int max = 0;
    for (const Arc& a : g.arcs()) {
        if (!a.is_reference) continue;
        int d = t.position(a.head) - t.position(a.tail);
        sum += d;
        max = std::max(max, d);
    }
    return {sum, max};
}

std::vector<int> label_set(const ProofGraph& g, const TopoOrder& t, LabelRule rule) {
    std::vector<int> out;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto& cited = g.ref_out(v);
        if (cited.empty()) continue;
        bool needs = false;
        for (int u : cited) {
            if (t.position(u) - t.position(v) > 1) {
                needs = true;
                break;
            }
        }
        if (!needs && rule == LabelRule::Miz && !g.var_out(v).empty()) needs = true;
        if (needs) out.push_back(v);
    }
    return out;
}

LinearizationMetrics compute_metrics(const ProofGraph& g, const TopoOrder& t) {
    LinearizationMetrics m;
    m.then_count = static_cast<int>(then_step_set(g, t).size());
    PathPartition p = reasoning_partition(g, t);
    m.path_count = p.block_count();
    m.cross_ref_count = cross_reference_count(g, p);
    auto [sum, max] = distance_metrics(g, t);
    m.sum_distance = sum;
    m.max_distance = max;
    m.label_count_plain = static_cast<int>(label_set(g, t, LabelRule::Plain).size());
    m.label_count_miz = static_cast<int>(label_set(g, t, LabelRule::Miz).size());
    return m;
}

} // namespace proofleg

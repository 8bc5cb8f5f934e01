#ifndef PROOFLEG_METRICS_HPP
#define PROOFLEG_METRICS_HPP

#include <vector>

#include "proofleg/graph.hpp"

namespace proofleg {

// Which reasoning steps must carry a label under a given linearization.
//  Plain: steps cited across a gap (some reference arc spans distance > 1).
//  Miz:   additionally steps that both cite and introduce (a reference arc
//         out of v together with a variable arc out of v), matching Mizar's
//         rule that a "consider" whose statement is used later needs a label.
enum class LabelRule { Plain, Miz };

// All per-linearization legibility measures in one struct. The JSON output
// of the command line tool mirrors these field names verbatim.
struct LinearizationMetrics {
    int then_count = 0;
    int path_count = 0;
    int cross_ref_count = 0;
    long long sum_distance = 0;
    int max_distance = 0;
    int label_count_plain = 0;
    int label_count_miz = 0;
};

// Vertices u with a reference in-neighbour at rank t(u) - 1 ("then" steps).
std::vector<int> then_step_set(const ProofGraph& g, const TopoOrder& t);

// (sum, max) of t(head) - t(tail) over all reference arcs.
std::pair<long long, int> distance_metrics(const ProofGraph& g, const TopoOrder& t);

// Vertices requiring a label under the given rule, ascending by vertex id.
std::vector<int> label_set(const ProofGraph& g, const TopoOrder& t, LabelRule rule);

LinearizationMetrics compute_metrics(const ProofGraph& g, const TopoOrder& t);

} // namespace proofleg

#endif

#include "proofleg/mil5.hpp"

#include <algorithm>
#include <vector>

#include "proofleg/errors.hpp"
#include "proofleg/metrics.hpp"
#include "proofleg/partition.hpp"

namespace proofleg {

// A cited step avoids its label only by sitting directly before its citing
// step, which is possible at all only when the citation is unique and the
// step introduces nothing (otherwise the label is forced). Those candidates
// have exactly one out-arc, so gluing each chosen candidate to its citing
// step yields chains whose quotient cycles would lift to cycles of g; the
// quotient therefore stays acyclic and every chain is realizable at once.
// What remains is a per-step conflict: of several candidates citing into the
// same step only one can sit in front, the rest are forced labels too.
Mil5Result mil5_miz_polynomial(const ProofGraph& g) {
    int n = g.vertex_count();
    std::vector<char> labelled(static_cast<std::size_t>(n) + 1, 0);
    long long label_count = 0;

    // forced by degrees: several citations, or citation plus introduction
    for (int v = 1; v <= n; ++v) {
        int od1 = static_cast<int>(g.ref_out(v).size());
        int odvar = static_cast<int>(g.var_out(v).size());
        if (od1 >= 2 || (od1 >= 1 && odvar >= 1)) {
            labelled[static_cast<std::size_t>(v)] = 1;
            ++label_count;
        }
    }

    // forced by conflicts: per citing step, the smallest unlabelled
    // candidate wins the adjacent slot
    std::vector<int> next(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> chained_in(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int partner = 0;
        for (int u : g.ref_in(v)) {
            if (labelled[static_cast<std::size_t>(u)]) continue;
            if (partner == 0) {
                partner = u; // ref_in is ascending, so the first is smallest
            } else {
                labelled[static_cast<std::size_t>(u)] = 1;
                ++label_count;
            }
        }
        if (partner != 0) {
            next[static_cast<std::size_t>(partner)] = v;
            chained_in[static_cast<std::size_t>(v)] = 1;
        }
    }

    PathPartition p;
    for (int v = 1; v <= n; ++v) {
        if (chained_in[static_cast<std::size_t>(v)]) continue;
        p.blocks.emplace_back();
        for (int w = v; w != 0; w = next[static_cast<std::size_t>(w)])
            p.blocks.back().push_back(w);
    }

    Mil5Result r;
    r.label_count = label_count;
    r.witness = n == 0 ? TopoOrder::of(g, {}) : order_from_partition(g, p);
    if (static_cast<long long>(label_set(g, r.witness, LabelRule::Miz).size()) != label_count)
        fail(Errc::InternalInvariantViolation, "witness misses the computed label count");
    return r;
}

} // namespace proofleg

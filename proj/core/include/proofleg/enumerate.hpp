#ifndef PROOFLEG_ENUMERATE_HPP
#define PROOFLEG_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "proofleg/graph.hpp"

namespace proofleg {

// Visits every topological sorting of g exactly once, in lexicographic
// order by vertex id, and returns how many were visited. The callback may
// be empty. Throws EnumerationCapExceeded as soon as the count would pass
// `cap`; graphs with more than 64 vertices are rejected (ScaleCapExceeded).
std::uint64_t enumerate_topo_orders(
    const ProofGraph& g,
    const std::function<void(const std::vector<int>&)>& visit,
    std::optional<std::uint64_t> cap = std::nullopt);

// Counting-only variant. With threads > 1 the search fans out over the
// choice of first vertex; the total is independent of the schedule.
std::uint64_t count_topo_orders(const ProofGraph& g,
                                std::optional<std::uint64_t> cap = std::nullopt,
                                int threads = 1);

} // namespace proofleg

#endif

#ifndef PROOFLEG_SOLVER_HPP
#define PROOFLEG_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "proofleg/graph.hpp"
#include "proofleg/metrics.hpp"
#include "proofleg/partition.hpp"

namespace proofleg {

// The five legibility criteria, all minimized over topological sortings.
// ThenPaths counts maximal reference-linked runs (minimizing it maximizes
// "then" steps); LabelsPlain / LabelsMiz count required labels under the
// corresponding rule.
enum class Criterion {
    ThenPaths,
    CrossRefs,
    MaxDistance,
    SumDistance,
    LabelsPlain,
    LabelsMiz,
};

const char* criterion_name(Criterion c);

enum class SolveMode {
    Exhaustive,     // enumerate everything; exact optimum count
    BranchAndBound, // dynamic programming over down-sets / pruned search
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct OptResult {
    long long best_value = 0;
    TopoOrder witness; // lexicographically smallest optimal order
    std::optional<std::uint64_t> optima_count; // exhaustive mode only
    std::uint64_t explored = 0; // orders or search nodes examined
    std::vector<long long> values; // witness values, one per criterion
};

// Value of a single criterion under a fixed linearization.
long long evaluate(const ProofGraph& g, const TopoOrder& t, Criterion c);

// Exact minimum of one criterion over all topological sortings. Both modes
// return the same best_value and the same witness; only Exhaustive counts
// the optima. Throws EnumerationCapExceeded when the search would pass cap.
OptResult solve_exact(const ProofGraph& g, Criterion c,
                      SolveMode mode = SolveMode::Exhaustive,
                      std::uint64_t cap = kDefaultEnumerationCap,
                      int threads = 1);

// Lexicographic optimization: minimizes cs[0], then cs[1] among its optima,
// and so on. Always exhaustive. `values` holds the optimal vector.
OptResult solve_lexicographic(const ProofGraph& g, const std::vector<Criterion>& cs,
                              std::uint64_t cap = kDefaultEnumerationCap,
                              int threads = 1);

// True iff the minimum of c is at most bound.
bool decide(const ProofGraph& g, Criterion c, long long bound,
            std::uint64_t cap = kDefaultEnumerationCap);

struct AhpResult {
    long long best_size = 0; // minimum number of blocks
    PathPartition witness;
    std::optional<std::uint64_t> order_optima; // optimal orders, exhaustive only
    // Distinct partitions induced by optimal orders (exhaustive only;
    // collection stops past kAhpPartitionLimit distinct ones).
    std::optional<std::vector<PathPartition>> optimal_partitions;
    std::uint64_t explored = 0;
};

inline constexpr std::size_t kAhpPartitionLimit = 1024;

// Minimum acyclic Hamiltonian-path partition of a DAG, computed over all
// arcs of g (reference or not). Minimizing maximal-path count over the
// linearizations attains the partition optimum.
AhpResult solve_ahp(const ProofGraph& g,
                    SolveMode mode = SolveMode::Exhaustive,
                    std::uint64_t cap = kDefaultEnumerationCap,
                    int threads = 1);

} // namespace proofleg

#endif

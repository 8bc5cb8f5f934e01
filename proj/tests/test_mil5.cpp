#include <doctest.h>

#include <random>
#include <vector>

#include "proofleg/metrics.hpp"
#include "proofleg/mil5.hpp"
#include "proofleg/solver.hpp"

#include "fixtures.hpp"

using namespace proofleg;

TEST_CASE("three labels suffice for the 17-step proof") {
    const Mil5Result r = mil5_miz_polynomial(fixtures::fig6());
    CHECK(r.label_count == 3);
    CHECK(label_set(fixtures::fig6(), r.witness, LabelRule::Miz) ==
          std::vector<int>{2, 13, 16});
    CHECK(r.witness.order() ==
          std::vector<int>{1, 2, 3, 5, 7, 9, 11, 13, 4, 8, 12, 14, 16, 6, 10, 15, 17});
}

TEST_CASE("polynomial algorithm equals exhaustive search on small graphs") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 150; ++round) {
        const ProofGraph g =
            fixtures::random_dag(rng, 3 + round % 5, 0.4, round % 3 ? 0.25 : 0.0);
        const Mil5Result fast = mil5_miz_polynomial(g);
        const OptResult slow = solve_exact(g, Criterion::LabelsMiz, SolveMode::Exhaustive);
        CHECK(fast.label_count == slow.best_value);
        // the witness really attains the reported count
        CHECK(static_cast<long long>(label_set(g, fast.witness, LabelRule::Miz).size()) ==
              fast.label_count);
    }
}

TEST_CASE("edge shapes") {
    // no reference arcs: nothing is cited, nothing needs a label
    const ProofGraph loose = build_graph(4, {}, {{1, 2}, {3, 4}});
    CHECK(mil5_miz_polynomial(loose).label_count == 0);

    // a pure chain can be rendered with a single run of "then" steps
    const ProofGraph chain = build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, {});
    CHECK(mil5_miz_polynomial(chain).label_count == 0);

    // a vertex cited twice is labelled under every order
    const ProofGraph fork = build_graph(3, {{1, 2}, {1, 3}}, {});
    CHECK(mil5_miz_polynomial(fork).label_count == 1);

    // citing and binding at once forces a label too
    const ProofGraph bind = build_graph(3, {{1, 2}}, {{1, 3}});
    CHECK(mil5_miz_polynomial(bind).label_count == 1);

    CHECK(mil5_miz_polynomial(build_graph(1, {}, {})).label_count == 0);
}

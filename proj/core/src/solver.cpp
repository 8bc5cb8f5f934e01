#include "proofleg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <set>
#include <thread>
#include <unordered_map>

#include "proofleg/errors.hpp"

namespace proofleg {

const char* criterion_name(Criterion c) {
    switch (c) {
    case Criterion::ThenPaths: return "then-paths";
    case Criterion::CrossRefs: return "cross-refs";
    case Criterion::MaxDistance: return "max-distance";
    case Criterion::SumDistance: return "sum-distance";
    case Criterion::LabelsPlain: return "labels-plain";
    case Criterion::LabelsMiz: return "labels-miz";
    }
    return "unknown";
}

namespace {

void check_scale(const ProofGraph& g) {
    if (g.vertex_count() > 64)
        fail(Errc::ScaleCapExceeded,
             "optimization limited to 64 vertices, got " + std::to_string(g.vertex_count()));
}

// ---- shared per-graph tables -------------------------------------------

struct Tables {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> pred;     // all in-neighbours as bits
    std::vector<std::uint64_t> ref_out;  // reference out-neighbours as bits
    std::vector<std::uint64_t> all_out;  // all out-neighbours as bits
    std::vector<int> od1;                // reference out-degree
    std::vector<int> odvar;              // variable out-degree
};

Tables make_tables(const ProofGraph& g) {
    Tables t;
    t.n = g.vertex_count();
    t.full = t.n == 64 ? ~0ull : (1ull << t.n) - 1;
    auto sz = static_cast<std::size_t>(t.n) + 1;
    t.pred.assign(sz, 0);
    t.ref_out.assign(sz, 0);
    t.all_out.assign(sz, 0);
    t.od1.assign(sz, 0);
    t.odvar.assign(sz, 0);
    for (const Arc& a : g.arcs()) {
        t.pred[static_cast<std::size_t>(a.head)] |= 1ull << (a.tail - 1);
        t.all_out[static_cast<std::size_t>(a.tail)] |= 1ull << (a.head - 1);
        if (a.is_reference) {
            t.ref_out[static_cast<std::size_t>(a.tail)] |= 1ull << (a.head - 1);
            ++t.od1[static_cast<std::size_t>(a.tail)];
        }
        if (a.is_variable) ++t.odvar[static_cast<std::size_t>(a.tail)];
    }
    return t;
}

// ---- leaf evaluation from a raw order ----------------------------------

long long value_at(const ProofGraph& g, const std::vector<int>& order,
                   const std::vector<int>& pos, Criterion c) {
    int n = g.vertex_count();
    switch (c) {
    case Criterion::ThenPaths: {
        int paths = 0;
        for (int r = 0; r < n; ++r)
            if (r == 0 || !g.has_reference_arc(order[static_cast<std::size_t>(r) - 1],
                                               order[static_cast<std::size_t>(r)]))
                ++paths;
        return paths;
    }
    case Criterion::CrossRefs: {
        std::vector<int> blk(static_cast<std::size_t>(n) + 1, 0);
        int blocks = 0;
        for (int r = 0; r < n; ++r) {
            int v = order[static_cast<std::size_t>(r)];
            if (r == 0 || !g.has_reference_arc(order[static_cast<std::size_t>(r) - 1], v)) ++blocks;
            blk[static_cast<std::size_t>(v)] = blocks;
        }
        long long cross = 0;
        for (const Arc& a : g.arcs())
            if (a.is_reference && blk[static_cast<std::size_t>(a.tail)] != blk[static_cast<std::size_t>(a.head)])
                ++cross;
        return cross;
    }
    case Criterion::MaxDistance: {
        long long best = 0;
        for (const Arc& a : g.arcs())
            if (a.is_reference)
                best = std::max<long long>(best, pos[static_cast<std::size_t>(a.head)] -
                                                     pos[static_cast<std::size_t>(a.tail)]);
        return best;
    }
    case Criterion::SumDistance: {
        long long sum = 0;
        for (const Arc& a : g.arcs())
            if (a.is_reference)
                sum += pos[static_cast<std::size_t>(a.head)] - pos[static_cast<std::size_t>(a.tail)];
        return sum;
    }
    case Criterion::LabelsPlain:
    case Criterion::LabelsMiz: {
        long long labels = 0;
        for (int v = 1; v <= n; ++v) {
            const auto& cited = g.ref_out(v);
            if (cited.empty()) continue;
            bool needs = false;
            for (int u : cited)
                if (pos[static_cast<std::size_t>(u)] - pos[static_cast<std::size_t>(v)] > 1) {
                    needs = true;
                    break;
                }
            if (!needs && c == Criterion::LabelsMiz && !g.var_out(v).empty()) needs = true;
            if (needs) ++labels;
        }
        return labels;
    }
    }
    return 0;
}

// ---- exhaustive scan -----------------------------------------------------

struct ScanAgg {
    long long best = LLONG_MAX;
    std::uint64_t optima = 0;
    std::vector<int> witness;
    std::uint64_t leaves = 0;
};

// Enumerates every topological sorting (vertex ids ascending at each step,
// hence lexicographic), optionally with a forced first vertex, and reduces
// with `leaf`. Throws past the leaf cap.
void scan_orders(const ProofGraph& g, int forced_first, std::uint64_t cap,
                 std::uint64_t& leaves,
                 const std::function<void(const std::vector<int>&, const std::vector<int>&)>& leaf) {
    int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : g.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);

    std::function<void()> rec = [&]() {
        if (static_cast<int>(order.size()) == n) {
            if (leaves >= cap)
                fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " orders");
            ++leaves;
            leaf(order, pos);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (indeg[static_cast<std::size_t>(v)] != 0) continue;
            if (order.empty() && forced_first != 0 && v != forced_first) continue;
            indeg[static_cast<std::size_t>(v)] = -1;
            order.push_back(v);
            pos[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
            for (int w : g.all_out(v)) --indeg[static_cast<std::size_t>(w)];
            rec();
            for (int w : g.all_out(v)) ++indeg[static_cast<std::size_t>(w)];
            order.pop_back();
            pos[static_cast<std::size_t>(v)] = 0;
            indeg[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec();
}

ScanAgg scan_criterion(const ProofGraph& g, Criterion c, int forced_first, std::uint64_t cap) {
    ScanAgg agg;
    scan_orders(g, forced_first, cap, agg.leaves,
                [&](const std::vector<int>& order, const std::vector<int>& pos) {
                    long long v = value_at(g, order, pos, c);
                    if (v < agg.best) {
                        agg.best = v;
                        agg.optima = 1;
                        agg.witness = order;
                    } else if (v == agg.best) {
                        ++agg.optima;
                    }
                });
    return agg;
}

// Runs one scan task per admissible first vertex on `threads` workers and
// merges in ascending first-vertex order, which keeps the result identical
// to the single-threaded scan.
std::vector<ScanAgg> fan_out(const ProofGraph& g, std::uint64_t cap, int threads,
                             const std::function<ScanAgg(int, std::uint64_t)>& task) {
    int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : g.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
    std::vector<int> sources;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) sources.push_back(v);

    std::vector<ScanAgg> results(sources.size());
    std::vector<std::exception_ptr> errors(sources.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= sources.size()) return;
            try {
                results[i] = task(sources[i], cap);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int k = std::max(1, std::min<int>(threads, static_cast<int>(sources.size())));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

ScanAgg merge_scans(const std::vector<ScanAgg>& parts, std::uint64_t cap) {
    ScanAgg total;
    for (const auto& part : parts) {
        total.leaves += part.leaves;
        if (part.best < total.best) {
            total.best = part.best;
            total.optima = part.optima;
            total.witness = part.witness;
        } else if (part.best == total.best) {
            total.optima += part.optima;
        }
    }
    if (total.leaves > cap)
        fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " orders");
    return total;
}

// ---- bonus dynamic programme over (down-set, last) ----------------------
//
// Criteria of the form  base - (number of adjacent pairs earning a bonus)
// admit an exact dynamic programme over the pair (placed set, last placed):
// ThenPaths, LabelsPlain, LabelsMiz, and maximal-path count over all arcs.

struct BonusDp {
    const Tables* t = nullptr;
    // bonus_mask[u]: heads v such that placing v directly after u earns one.
    std::vector<std::uint64_t> bonus_mask;
    std::uint64_t cap = 0;
    std::uint64_t states = 0;
    // memo[last][placed-mask] -> best bonus count for the remainder
    std::vector<std::unordered_map<std::uint64_t, int>> memo;

    int solve(std::uint64_t placed, int last) {
        if (placed == t->full) return 0;
        auto& m = memo[static_cast<std::size_t>(last)];
        if (auto it = m.find(placed); it != m.end()) return it->second;
        if (++states > cap)
            fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " states");
        int best = -1;
        std::uint64_t lastBonus = last == 0 ? 0 : bonus_mask[static_cast<std::size_t>(last)];
        for (int v = 1; v <= t->n; ++v) {
            std::uint64_t bit = 1ull << (v - 1);
            if (placed & bit) continue;
            if ((t->pred[static_cast<std::size_t>(v)] & ~placed) != 0) continue;
            int gain = (lastBonus & bit) ? 1 : 0;
            best = std::max(best, gain + solve(placed | bit, v));
        }
        if (best < 0) best = 0; // unreachable on a DAG, placate the compiler
        m.emplace(placed, best);
        return best;
    }

    std::vector<int> reconstruct() {
        std::vector<int> order;
        std::uint64_t placed = 0;
        int last = 0;
        int want = solve(0, 0);
        while (placed != t->full) {
            std::uint64_t lastBonus = last == 0 ? 0 : bonus_mask[static_cast<std::size_t>(last)];
            for (int v = 1; v <= t->n; ++v) {
                std::uint64_t bit = 1ull << (v - 1);
                if (placed & bit) continue;
                if ((t->pred[static_cast<std::size_t>(v)] & ~placed) != 0) continue;
                int gain = (lastBonus & bit) ? 1 : 0;
                if (gain + solve(placed | bit, v) == want) {
                    order.push_back(v);
                    placed |= bit;
                    last = v;
                    want -= gain;
                    break;
                }
            }
        }
        return order;
    }
};

BonusDp make_bonus_dp(const Tables& t, Criterion c, std::uint64_t cap) {
    BonusDp dp;
    dp.t = &t;
    dp.cap = cap;
    dp.memo.resize(static_cast<std::size_t>(t.n) + 1);
    dp.bonus_mask.assign(static_cast<std::size_t>(t.n) + 1, 0);
    for (int u = 1; u <= t.n; ++u) {
        switch (c) {
        case Criterion::ThenPaths:
            dp.bonus_mask[static_cast<std::size_t>(u)] = t.ref_out[static_cast<std::size_t>(u)];
            break;
        case Criterion::LabelsPlain:
            if (t.od1[static_cast<std::size_t>(u)] == 1)
                dp.bonus_mask[static_cast<std::size_t>(u)] = t.ref_out[static_cast<std::size_t>(u)];
            break;
        case Criterion::LabelsMiz:
            if (t.od1[static_cast<std::size_t>(u)] == 1 && t.odvar[static_cast<std::size_t>(u)] == 0)
                dp.bonus_mask[static_cast<std::size_t>(u)] = t.ref_out[static_cast<std::size_t>(u)];
            break;
        default:
            break;
        }
    }
    return dp;
}

long long bonus_base(const Tables& t, Criterion c) {
    switch (c) {
    case Criterion::ThenPaths:
        return t.n;
    case Criterion::LabelsPlain:
    case Criterion::LabelsMiz: {
        long long cited = 0;
        for (int v = 1; v <= t.n; ++v)
            if (t.od1[static_cast<std::size_t>(v)] > 0) ++cited;
        return cited;
    }
    default:
        return 0;
    }
}

// ---- sum-of-distances dynamic programme over down-sets ------------------
//
// The sum of reference-arc spans telescopes into the sum, over all proper
// prefixes, of the number of reference arcs leaving the prefix, so the
// optimum only needs the placed set, not the arrangement inside it.

struct SumDp {
    const Tables* t = nullptr;
    std::uint64_t cap = 0;
    std::uint64_t states = 0;
    std::unordered_map<std::uint64_t, long long> memo;

    long long cut(std::uint64_t placed) const {
        long long c = 0;
        std::uint64_t rest = placed;
        while (rest) {
            int v = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            c += std::popcount(t->ref_out[static_cast<std::size_t>(v)] & ~placed);
        }
        return c;
    }

    long long solve(std::uint64_t placed) {
        if (placed == t->full) return 0;
        if (auto it = memo.find(placed); it != memo.end()) return it->second;
        if (++states > cap)
            fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " states");
        long long best = LLONG_MAX;
        for (int v = 1; v <= t->n; ++v) {
            std::uint64_t bit = 1ull << (v - 1);
            if (placed & bit) continue;
            if ((t->pred[static_cast<std::size_t>(v)] & ~placed) != 0) continue;
            best = std::min(best, solve(placed | bit));
        }
        best += cut(placed);
        memo.emplace(placed, best);
        return best;
    }

    std::vector<int> reconstruct() {
        std::vector<int> order;
        std::uint64_t placed = 0;
        while (placed != t->full) {
            long long want = solve(placed) - cut(placed);
            for (int v = 1; v <= t->n; ++v) {
                std::uint64_t bit = 1ull << (v - 1);
                if (placed & bit) continue;
                if ((t->pred[static_cast<std::size_t>(v)] & ~placed) != 0) continue;
                if (solve(placed | bit) == want) {
                    order.push_back(v);
                    placed |= bit;
                    break;
                }
            }
        }
        return order;
    }
};

// ---- pruned search for max-distance and cross-references ----------------

struct DfsCommon {
    const ProofGraph* g = nullptr;
    int n = 0;
    std::uint64_t cap = 0;
    std::uint64_t nodes = 0;

    void count_node() {
        if (++nodes > cap)
            fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " nodes");
    }
};

// Minimal max reference-arc span. The bound combines the largest span among
// closed arcs with the forced span of the oldest still-open tail.
struct MaxDistDfs : DfsCommon {
    std::vector<int> indeg, order, pos, open_out;
    long long best = LLONG_MAX;
    std::vector<int> best_order;
    bool lex_pass = false; // second pass: first leaf matching best wins
    bool done = false;

    void init(const ProofGraph& graph) {
        g = &graph;
        n = graph.vertex_count();
        indeg.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const Arc& a : graph.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
        pos.assign(static_cast<std::size_t>(n) + 1, 0);
        open_out.assign(static_cast<std::size_t>(n) + 1, 0);
        order.clear();
        order.reserve(static_cast<std::size_t>(n));
    }

    long long open_bound() const {
        int oldest = 0;
        for (int u = 1; u <= n; ++u)
            if (pos[static_cast<std::size_t>(u)] > 0 && open_out[static_cast<std::size_t>(u)] > 0 &&
                (oldest == 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(oldest)]))
                oldest = u;
        if (oldest == 0) return 0;
        return static_cast<long long>(order.size()) + 1 - pos[static_cast<std::size_t>(oldest)];
    }

    void run(long long closed_max) {
        if (done) return;
        count_node();
        if (static_cast<int>(order.size()) == n) {
            if (lex_pass) {
                if (closed_max <= best) {
                    best_order = order;
                    done = true;
                }
            } else if (closed_max < best) {
                best = closed_max;
            }
            return;
        }
        for (int v = 1; v <= n && !done; ++v) {
            if (indeg[static_cast<std::size_t>(v)] != 0) continue;
            long long new_closed = closed_max;
            int p = static_cast<int>(order.size()) + 1;
            for (int u : g->ref_in(v))
                new_closed = std::max(new_closed, static_cast<long long>(p - pos[static_cast<std::size_t>(u)]));
            // place
            indeg[static_cast<std::size_t>(v)] = -1;
            order.push_back(v);
            pos[static_cast<std::size_t>(v)] = p;
            for (int u : g->ref_in(v)) --open_out[static_cast<std::size_t>(u)];
            open_out[static_cast<std::size_t>(v)] = static_cast<int>(g->ref_out(v).size());
            for (int w : g->all_out(v)) --indeg[static_cast<std::size_t>(w)];

            long long lb = std::max(new_closed, open_bound());
            bool cut = lex_pass ? lb > best : lb >= best;
            if (!cut) run(new_closed);

            for (int w : g->all_out(v)) ++indeg[static_cast<std::size_t>(w)];
            open_out[static_cast<std::size_t>(v)] = 0;
            for (int u : g->ref_in(v)) ++open_out[static_cast<std::size_t>(u)];
            pos[static_cast<std::size_t>(v)] = 0;
            order.pop_back();
            indeg[static_cast<std::size_t>(v)] = 0;
        }
    }
};

// Minimal cross-references. Bound: cross arcs already closed plus open arcs
// whose tail's run is no longer the live one (those cannot end internal).
struct CrossDfs : DfsCommon {
    std::vector<int> indeg, order, pos, blk;
    std::vector<int> open_by_block;
    int total_open = 0;
    int cur_block = 0;
    int blocks = 0;
    long long best = LLONG_MAX;
    std::vector<int> best_order;
    bool lex_pass = false;
    bool done = false;

    void init(const ProofGraph& graph) {
        g = &graph;
        n = graph.vertex_count();
        indeg.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const Arc& a : graph.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
        pos.assign(static_cast<std::size_t>(n) + 1, 0);
        blk.assign(static_cast<std::size_t>(n) + 1, 0);
        open_by_block.assign(static_cast<std::size_t>(n) + 2, 0);
        total_open = 0;
        cur_block = 0;
        blocks = 0;
        order.clear();
        order.reserve(static_cast<std::size_t>(n));
    }

    void run(long long cross) {
        if (done) return;
        count_node();
        if (static_cast<int>(order.size()) == n) {
            if (lex_pass) {
                if (cross <= best) {
                    best_order = order;
                    done = true;
                }
            } else if (cross < best) {
                best = cross;
            }
            return;
        }
        for (int v = 1; v <= n && !done; ++v) {
            if (indeg[static_cast<std::size_t>(v)] != 0) continue;
            int prev = order.empty() ? 0 : order.back();
            bool extends = prev != 0 && g->has_reference_arc(prev, v);
            int saved_cur = cur_block;
            int saved_blocks = blocks;
            if (!extends) cur_block = ++blocks;
            blk[static_cast<std::size_t>(v)] = cur_block;

            long long new_cross = cross;
            for (int u : g->ref_in(v)) {
                --open_by_block[static_cast<std::size_t>(blk[static_cast<std::size_t>(u)])];
                --total_open;
                if (blk[static_cast<std::size_t>(u)] != cur_block) ++new_cross;
            }
            int opened = static_cast<int>(g->ref_out(v).size());
            open_by_block[static_cast<std::size_t>(cur_block)] += opened;
            total_open += opened;

            indeg[static_cast<std::size_t>(v)] = -1;
            order.push_back(v);
            pos[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
            for (int w : g->all_out(v)) --indeg[static_cast<std::size_t>(w)];

            long long lb = new_cross + total_open - open_by_block[static_cast<std::size_t>(cur_block)];
            bool cut = lex_pass ? lb > best : lb >= best;
            if (!cut) run(new_cross);

            for (int w : g->all_out(v)) ++indeg[static_cast<std::size_t>(w)];
            pos[static_cast<std::size_t>(v)] = 0;
            order.pop_back();
            indeg[static_cast<std::size_t>(v)] = 0;
            open_by_block[static_cast<std::size_t>(cur_block)] -= opened;
            total_open -= opened;
            for (int u : g->ref_in(v)) {
                ++open_by_block[static_cast<std::size_t>(blk[static_cast<std::size_t>(u)])];
                ++total_open;
            }
            blk[static_cast<std::size_t>(v)] = 0;
            cur_block = saved_cur;
            blocks = saved_blocks;
        }
    }
};

OptResult from_scan(const ProofGraph& g, const ScanAgg& agg) {
    OptResult r;
    r.best_value = agg.best;
    r.witness = TopoOrder::of(g, agg.witness);
    r.optima_count = agg.optima;
    r.explored = agg.leaves;
    r.values = {agg.best};
    return r;
}

OptResult solve_branch_and_bound(const ProofGraph& g, Criterion c, std::uint64_t cap) {
    Tables t = make_tables(g);
    OptResult r;
    switch (c) {
    case Criterion::ThenPaths:
    case Criterion::LabelsPlain:
    case Criterion::LabelsMiz: {
        BonusDp dp = make_bonus_dp(t, c, cap);
        int bonus = dp.solve(0, 0);
        r.best_value = bonus_base(t, c) - bonus;
        r.witness = TopoOrder::of(g, dp.reconstruct());
        r.explored = dp.states;
        break;
    }
    case Criterion::SumDistance: {
        SumDp dp;
        dp.t = &t;
        dp.cap = cap;
        r.best_value = dp.solve(0);
        r.witness = TopoOrder::of(g, dp.reconstruct());
        r.explored = dp.states;
        break;
    }
    case Criterion::MaxDistance: {
        MaxDistDfs dfs;
        dfs.cap = cap;
        dfs.init(g);
        dfs.best = evaluate(g, TopoOrder::lexicographic_smallest(g), c);
        dfs.run(0);
        dfs.init(g); // keeps node budget and best
        dfs.lex_pass = true;
        dfs.done = false;
        dfs.run(0);
        r.best_value = dfs.best;
        r.witness = TopoOrder::of(g, dfs.best_order);
        r.explored = dfs.nodes;
        break;
    }
    case Criterion::CrossRefs: {
        CrossDfs dfs;
        dfs.cap = cap;
        dfs.init(g);
        dfs.best = evaluate(g, TopoOrder::lexicographic_smallest(g), c);
        dfs.run(0);
        dfs.init(g);
        dfs.lex_pass = true;
        dfs.done = false;
        dfs.run(0);
        r.best_value = dfs.best;
        r.witness = TopoOrder::of(g, dfs.best_order);
        r.explored = dfs.nodes;
        break;
    }
    }
    r.values = {r.best_value};
    return r;
}

} // namespace

long long evaluate(const ProofGraph& g, const TopoOrder& t, Criterion c) {
    std::vector<int> order = t.order();
    return value_at(g, order, t.positions(), c);
}

OptResult solve_exact(const ProofGraph& g, Criterion c, SolveMode mode, std::uint64_t cap,
                      int threads) {
    check_scale(g);
    if (g.vertex_count() == 0) {
        OptResult r;
        r.witness = TopoOrder::of(g, {});
        r.optima_count = mode == SolveMode::Exhaustive ? std::optional<std::uint64_t>(1)
                                                       : std::nullopt;
        r.explored = mode == SolveMode::Exhaustive ? 1 : 0;
        r.values = {0};
        return r;
    }
    if (mode == SolveMode::BranchAndBound) return solve_branch_and_bound(g, c, cap);
    if (threads <= 1) return from_scan(g, scan_criterion(g, c, 0, cap));
    auto parts = fan_out(g, cap, threads, [&](int first, std::uint64_t budget) {
        return scan_criterion(g, c, first, budget);
    });
    return from_scan(g, merge_scans(parts, cap));
}

OptResult solve_lexicographic(const ProofGraph& g, const std::vector<Criterion>& cs,
                              std::uint64_t cap, int threads) {
    check_scale(g);
    if (cs.empty()) fail(Errc::InternalInvariantViolation, "no criteria given");
    if (g.vertex_count() == 0) {
        OptResult r;
        r.witness = TopoOrder::of(g, {});
        r.optima_count = 1;
        r.explored = 1;
        r.values.assign(cs.size(), 0);
        return r;
    }

    struct TupleAgg {
        std::vector<long long> best;
        std::uint64_t optima = 0;
        std::vector<int> witness;
        std::uint64_t leaves = 0;
    };
    auto scan_tuple = [&](int first, std::uint64_t budget) {
        TupleAgg agg;
        scan_orders(g, first, budget, agg.leaves,
                    [&](const std::vector<int>& order, const std::vector<int>& pos) {
                        std::vector<long long> vals(cs.size());
                        for (std::size_t i = 0; i < cs.size(); ++i)
                            vals[i] = value_at(g, order, pos, cs[i]);
                        if (agg.best.empty() || vals < agg.best) {
                            agg.best = vals;
                            agg.optima = 1;
                            agg.witness = order;
                        } else if (vals == agg.best) {
                            ++agg.optima;
                        }
                    });
        return agg;
    };

    TupleAgg total;
    if (threads <= 1) {
        total = scan_tuple(0, cap);
    } else {
        int n = g.vertex_count();
        std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
        for (const Arc& a : g.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
        std::vector<int> sources;
        for (int v = 1; v <= n; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) sources.push_back(v);
        std::vector<TupleAgg> results(sources.size());
        std::vector<std::exception_ptr> errors(sources.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= sources.size()) return;
                try {
                    results[i] = scan_tuple(sources[i], cap);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        int k = std::max(1, std::min<int>(threads, static_cast<int>(sources.size())));
        std::vector<std::thread> pool;
        for (int i = 0; i < k; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (const auto& part : results) {
            total.leaves += part.leaves;
            if (part.best.empty()) continue;
            if (total.best.empty() || part.best < total.best) {
                total.best = part.best;
                total.optima = part.optima;
                total.witness = part.witness;
            } else if (part.best == total.best) {
                total.optima += part.optima;
            }
        }
        if (total.leaves > cap)
            fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " orders");
    }

    OptResult r;
    r.best_value = total.best.front();
    r.witness = TopoOrder::of(g, total.witness);
    r.optima_count = total.optima;
    r.explored = total.leaves;
    r.values = total.best;
    return r;
}

bool decide(const ProofGraph& g, Criterion c, long long bound, std::uint64_t cap) {
    return solve_exact(g, c, SolveMode::BranchAndBound, cap).best_value <= bound;
}

AhpResult solve_ahp(const ProofGraph& g, SolveMode mode, std::uint64_t cap, int threads) {
    check_scale(g);
    int n = g.vertex_count();
    AhpResult r;
    if (n == 0) {
        r.best_size = 0;
        if (mode == SolveMode::Exhaustive) {
            r.order_optima = 1;
            r.optimal_partitions = std::vector<PathPartition>{PathPartition{}};
            r.explored = 1;
        }
        return r;
    }

    if (mode == SolveMode::BranchAndBound) {
        Tables t = make_tables(g);
        BonusDp dp;
        dp.t = &t;
        dp.cap = cap;
        dp.memo.resize(static_cast<std::size_t>(t.n) + 1);
        dp.bonus_mask = t.all_out;
        int bonus = dp.solve(0, 0);
        r.best_size = n - bonus;
        TopoOrder order = TopoOrder::of(g, dp.reconstruct());
        r.witness = path_partition_over_all_arcs(g, order);
        r.explored = dp.states;
        return r;
    }

    struct AhpAgg {
        long long best = LLONG_MAX;
        std::uint64_t optima = 0;
        std::vector<int> witness_order;
        std::set<std::vector<std::vector<int>>> partitions;
        bool overflow = false;
        std::uint64_t leaves = 0;
    };
    auto canonical = [](const PathPartition& p) {
        std::vector<std::vector<int>> rep = p.blocks;
        std::sort(rep.begin(), rep.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.front() < b.front();
                  });
        return rep;
    };
    auto scan_ahp = [&](int first, std::uint64_t budget) {
        AhpAgg agg;
        scan_orders(g, first, budget, agg.leaves,
                    [&](const std::vector<int>& order, const std::vector<int>&) {
                        long long paths = 0;
                        for (std::size_t i = 0; i < order.size(); ++i)
                            if (i == 0 || !g.has_arc(order[i - 1], order[i])) ++paths;
                        if (paths < agg.best) {
                            agg.best = paths;
                            agg.optima = 1;
                            agg.witness_order = order;
                            agg.partitions.clear();
                            agg.overflow = false;
                        } else if (paths != agg.best) {
                            return;
                        } else {
                            ++agg.optima;
                        }
                        if (agg.overflow) return;
                        PathPartition p;
                        for (std::size_t i = 0; i < order.size(); ++i) {
                            if (i == 0 || !g.has_arc(order[i - 1], order[i])) p.blocks.emplace_back();
                            p.blocks.back().push_back(order[i]);
                        }
                        agg.partitions.insert(canonical(p));
                        if (agg.partitions.size() > kAhpPartitionLimit) agg.overflow = true;
                    });
        return agg;
    };

    AhpAgg total;
    if (threads <= 1) {
        total = scan_ahp(0, cap);
    } else {
        std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
        for (const Arc& a : g.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
        std::vector<int> sources;
        for (int v = 1; v <= n; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) sources.push_back(v);
        std::vector<AhpAgg> results(sources.size());
        std::vector<std::exception_ptr> errors(sources.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= sources.size()) return;
                try {
                    results[i] = scan_ahp(sources[i], cap);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        int k = std::max(1, std::min<int>(threads, static_cast<int>(sources.size())));
        std::vector<std::thread> pool;
        for (int i = 0; i < k; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& part : results) {
            total.leaves += part.leaves;
            if (part.best < total.best) {
                total.best = part.best;
                total.optima = part.optima;
                total.witness_order = part.witness_order;
                total.partitions = std::move(part.partitions);
                total.overflow = part.overflow;
            } else if (part.best == total.best) {
                total.optima += part.optima;
                total.overflow = total.overflow || part.overflow;
                if (!total.overflow) {
                    total.partitions.insert(part.partitions.begin(), part.partitions.end());
                    if (total.partitions.size() > kAhpPartitionLimit) total.overflow = true;
                }
            }
        }
        if (total.leaves > cap)
            fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(cap) + " orders");
    }

    r.best_size = total.best;
    TopoOrder order = TopoOrder::of(g, total.witness_order);
    r.witness = path_partition_over_all_arcs(g, order);
    r.order_optima = total.optima;
    r.explored = total.leaves;
    if (!total.overflow) {
        std::vector<PathPartition> out;
        for (const auto& rep : total.partitions) out.push_back(PathPartition{rep});
        r.optimal_partitions = std::move(out);
    }
    return r;
}

} // namespace proofleg

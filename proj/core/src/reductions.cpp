#include "proofleg/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <tuple>

#include "proofleg/errors.hpp"

namespace proofleg {

namespace {

std::string arc_text(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

bool is_feedback_arc_set(const Digraph& g, const std::vector<std::pair<int, int>>& fas) {
    std::set<std::pair<int, int>> cut(fas.begin(), fas.end());
    std::vector<std::pair<int, int>> rest;
    for (auto a : g.arcs)
        if (!cut.count(a)) rest.push_back(a);
    return is_acyclic(build_digraph(g.n, std::move(rest)));
}

} // namespace

UndirectedGraph build_undirected(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) fail(Errc::OutOfRangeVertex, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            fail(Errc::OutOfRangeVertex, "edge " + arc_text(u, v) + " with n=" + std::to_string(n));
        if (u == v) fail(Errc::SelfLoopInInput, "edge " + arc_text(u, v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return UndirectedGraph{n, std::move(edges)};
}

// --- vertex cover to feedback arc set ----------------------------------

VcToFasResult vc_to_fas(const UndirectedGraph& g) {
    VcToFasResult r;
    r.roles.source_n = g.n;
    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v <= g.n; ++v) arcs.emplace_back(r.roles.id(v, 0), r.roles.id(v, 1));
    for (auto [u, v] : g.edges) {
        arcs.emplace_back(r.roles.id(u, 1), r.roles.id(v, 0));
        arcs.emplace_back(r.roles.id(v, 1), r.roles.id(u, 0));
    }
    r.instance = build_digraph(2 * g.n, std::move(arcs));
    return r;
}

std::vector<int> solve_vc_exact(const UndirectedGraph& g) {
    if (g.n > 20)
        fail(Errc::ScaleCapExceeded, "cover search limited to 20 vertices, got " + std::to_string(g.n));
    std::vector<int> chosen;
    std::vector<char> in_cover(static_cast<std::size_t>(g.n) + 1, 0);
    auto covers = [&]() {
        for (auto [u, v] : g.edges)
            if (!in_cover[static_cast<std::size_t>(u)] && !in_cover[static_cast<std::size_t>(v)])
                return false;
        return true;
    };
    // ascending size, then lexicographic within a size: the first hit is the
    // lexicographically smallest minimum cover
    std::function<bool(int, int)> pick = [&](int from, int left) {
        if (left == 0) return covers();
        for (int v = from; v <= g.n - left + 1; ++v) {
            chosen.push_back(v);
            in_cover[static_cast<std::size_t>(v)] = 1;
            if (pick(v + 1, left - 1)) return true;
            in_cover[static_cast<std::size_t>(v)] = 0;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 0; k <= g.n; ++k)
        if (pick(1, k)) return chosen;
    fail(Errc::InternalInvariantViolation, "no cover found"); // V always covers
}

std::vector<std::pair<int, int>> solve_fas_exact(const Digraph& g) {
    if (g.n > 22)
        fail(Errc::ScaleCapExceeded,
             "feedback search limited to 22 vertices, got " + std::to_string(g.n));
    std::vector<std::pair<int, int>> fas;
    std::vector<std::uint32_t> out_mask(static_cast<std::size_t>(g.n) + 1, 0);
    for (auto [u, v] : g.arcs) {
        if (u == v)
            fas.emplace_back(u, v); // no ordering saves a self-loop
        else
            out_mask[static_cast<std::size_t>(u)] |= 1u << (v - 1);
    }

    if (g.n > 0) {
        std::uint32_t full = g.n == 32 ? ~0u : (1u << g.n) - 1;
        std::vector<int> f(static_cast<std::size_t>(full) + 1, 0);
        for (std::uint32_t s = 1; s <= full; ++s) {
            int best = INT32_MAX;
            std::uint32_t rest = s;
            while (rest) {
                int v = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                std::uint32_t without = s & ~(1u << (v - 1));
                int cost = f[without] + std::popcount(out_mask[static_cast<std::size_t>(v)] & without);
                best = std::min(best, cost);
            }
            f[s] = best;
        }
        // rebuild one optimal ordering, smallest vertex first on ties
        std::vector<int> perm;
        std::uint32_t s = full;
        while (s) {
            std::uint32_t rest = s;
            while (rest) {
                int v = std::countr_zero(rest) + 1;
                rest &= rest - 1;
                std::uint32_t without = s & ~(1u << (v - 1));
                if (f[s] == f[without] + std::popcount(out_mask[static_cast<std::size_t>(v)] & without)) {
                    perm.push_back(v);
                    s = without;
                    break;
                }
            }
        }
        std::reverse(perm.begin(), perm.end());
        std::vector<int> pos(static_cast<std::size_t>(g.n) + 1, 0);
        for (std::size_t i = 0; i < perm.size(); ++i)
            pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i) + 1;
        for (auto [u, v] : g.arcs)
            if (u != v && pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                fas.emplace_back(u, v);
    }
    std::sort(fas.begin(), fas.end());
    return fas;
}

// --- feedback arc set to acyclic Hamiltonian-path partition --------------

std::tuple<int, int, int> GadgetCoords::cell_role(int id) const {
    int cpg = cells_per_gadget();
    int v = (id - 1) / cpg + 1;
    int rem = (id - 1) % cpg;
    return {v, rem / (m + 1), rem % (m + 1)};
}

int GadgetCoords::arc_number(int tail, int head) const {
    if (tail < 1 || tail > source_n || head < 1 || head > source_n) return 0;
    return number_of_arc_flat[static_cast<std::size_t>(tail) * (source_n + 1) + head];
}

namespace {

// Grid arcs of one gadget: each cell steps right and down.
void add_grid_arcs(const GadgetCoords& c, int v, std::vector<std::pair<int, int>>& arcs) {
    for (int i = 0; i <= c.m; ++i) {
        for (int j = 0; j <= c.m; ++j) {
            if (j < c.m) arcs.emplace_back(c.cell(v, i, j), c.cell(v, i, j + 1));
            if (i < c.m) arcs.emplace_back(c.cell(v, i, j), c.cell(v, i + 1, j));
        }
    }
}

} // namespace

FasToAhpResult build_gadget(int m) {
    if (m < 0) fail(Errc::OutOfRangeVertex, "negative gadget size");
    FasToAhpResult r;
    r.coords.source_n = 1;
    r.coords.m = m;
    r.coords.arc_of_number.assign(1, {0, 0}); // slot 0 unused, no arcs
    r.coords.number_of_arc_flat.assign(4, 0);
    std::vector<std::pair<int, int>> arcs;
    add_grid_arcs(r.coords, 1, arcs);
    r.dag = build_graph(r.coords.cells_per_gadget(), arcs, {});
    r.offset = m + 1;
    return r;
}

FasToAhpResult fas_to_ahp(const Digraph& g,
                          const std::optional<std::vector<std::pair<int, int>>>& e) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n) + 1);
    std::vector<int> indeg(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<int> outdeg(static_cast<std::size_t>(g.n) + 1, 0);
    for (auto [u, v] : g.arcs) {
        if (u == v) fail(Errc::SelfLoopInInput, "arc " + arc_text(u, v));
        ++outdeg[static_cast<std::size_t>(u)];
        ++indeg[static_cast<std::size_t>(v)];
    }
    for (int v = 1; v <= g.n; ++v)
        if (indeg[static_cast<std::size_t>(v)] != 1 && outdeg[static_cast<std::size_t>(v)] != 1)
            fail(Errc::DegreePreconditionViolated,
                 "vertex " + std::to_string(v) + " has in-degree " +
                     std::to_string(indeg[static_cast<std::size_t>(v)]) + " and out-degree " +
                     std::to_string(outdeg[static_cast<std::size_t>(v)]));

    int m = static_cast<int>(g.arcs.size());
    FasToAhpResult r;
    r.coords.source_n = g.n;
    r.coords.m = m;
    r.coords.arc_of_number.assign(static_cast<std::size_t>(m) + 1, {0, 0});
    r.coords.number_of_arc_flat.assign(static_cast<std::size_t>(g.n + 1) * (g.n + 1), 0);

    std::vector<std::pair<int, int>> numbering = e ? *e : g.arcs;
    if (static_cast<int>(numbering.size()) != m)
        fail(Errc::OutOfRangeVertex,
             "arc numbering has " + std::to_string(numbering.size()) + " entries for " +
                 std::to_string(m) + " arcs");
    std::set<std::pair<int, int>> seen;
    std::set<std::pair<int, int>> all(g.arcs.begin(), g.arcs.end());
    for (int k = 1; k <= m; ++k) {
        auto a = numbering[static_cast<std::size_t>(k) - 1];
        if (!all.count(a))
            fail(Errc::OutOfRangeVertex, "numbered arc " + arc_text(a.first, a.second) + " not in the digraph");
        if (!seen.insert(a).second)
            fail(Errc::OutOfRangeVertex, "arc " + arc_text(a.first, a.second) + " numbered twice");
        r.coords.arc_of_number[static_cast<std::size_t>(k)] = a;
        r.coords.number_of_arc_flat[static_cast<std::size_t>(a.first) * (g.n + 1) + a.second] = k;
    }

    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v <= g.n; ++v) add_grid_arcs(r.coords, v, arcs);
    for (int k = 1; k <= m; ++k) {
        auto [tail, head] = r.coords.arc_of_number[static_cast<std::size_t>(k)];
        arcs.emplace_back(r.coords.glue(k), r.coords.cell(tail, k, 0));
        arcs.emplace_back(r.coords.glue(k), r.coords.cell(head, 0, k));
    }
    r.dag = build_graph(g.n * r.coords.cells_per_gadget() + m, arcs, {});
    r.offset = static_cast<long long>(g.n) * (m + 1);
    return r;
}

PathPartition partition_from_fas(const Digraph& source, const FasToAhpResult& d,
                                 const std::vector<std::pair<int, int>>& fas) {
    std::set<std::pair<int, int>> all(source.arcs.begin(), source.arcs.end());
    for (auto a : fas)
        if (!all.count(a))
            fail(Errc::NotFeedbackArcSet, arc_text(a.first, a.second) + " is not an arc");
    if (!is_feedback_arc_set(source, fas))
        fail(Errc::NotFeedbackArcSet, "a cycle survives the removal");

    std::set<int> dropped;
    for (auto a : fas) dropped.insert(d.coords.arc_number(a.first, a.second));

    const auto& c = d.coords;
    PathPartition p;
    for (int v = 1; v <= c.source_n; ++v) {
        for (int i = 0; i <= c.m; ++i) {
            p.blocks.emplace_back();
            auto& row = p.blocks.back();
            if (i >= 1) {
                auto [tail, head] = c.arc_of_number[static_cast<std::size_t>(i)];
                if (tail == v && !dropped.count(i)) row.push_back(c.glue(i));
            }
            for (int j = 0; j <= c.m; ++j) row.push_back(c.cell(v, i, j));
        }
    }
    for (int k = 1; k <= c.m; ++k)
        if (dropped.count(k)) p.blocks.push_back({c.glue(k)});
    return p;
}

Orientation gadget_orientation(const FasToAhpResult& d, const PathPartition& p, int v) {
    const auto& c = d.coords;
    int cpg = c.cells_per_gadget();
    int lo = (v - 1) * cpg + 1, hi = v * cpg;

    std::vector<std::vector<int>> traces;
    for (const auto& block : p.blocks) {
        std::vector<int> trace;
        for (int id : block)
            if (id >= lo && id <= hi) trace.push_back(id);
        if (!trace.empty()) traces.push_back(std::move(trace));
    }
    if (static_cast<int>(traces.size()) != c.m + 1) return Orientation::NotWellOriented;

    auto matches = [&](bool rows) {
        std::vector<char> seen(static_cast<std::size_t>(c.m) + 1, 0);
        for (const auto& trace : traces) {
            if (static_cast<int>(trace.size()) != c.m + 1) return false;
            auto [tv, ti, tj] = c.cell_role(trace.front());
            (void)tv;
            int fixed = rows ? ti : tj;
            for (int k = 0; k <= c.m; ++k) {
                int want = rows ? c.cell(v, fixed, k) : c.cell(v, k, fixed);
                if (trace[static_cast<std::size_t>(k)] != want) return false;
            }
            if (seen[static_cast<std::size_t>(fixed)]) return false;
            seen[static_cast<std::size_t>(fixed)] = 1;
        }
        return true;
    };
    if (matches(true)) return Orientation::LeftOriented;
    if (matches(false)) return Orientation::RightOriented;
    return Orientation::NotWellOriented;
}

namespace {

bool quotient_is_acyclic(const ProofGraph& g, const std::vector<std::vector<int>>& blocks) {
    PathPartition p;
    p.blocks = blocks;
    return is_acyclic(quotient(g, p));
}

} // namespace

PathPartition normalize_orientation(const FasToAhpResult& d, const PathPartition& p,
                                    NormalizeStats* stats) {
    if (auto check = is_h_partition(d.dag, p); !check)
        fail(Errc::NotHPartition, check.reason);

    const auto& c = d.coords;
    std::vector<std::vector<int>> blocks = p.blocks;
    NormalizeStats local;

    for (int u = 1; u <= c.source_n; ++u) {
        PathPartition cur;
        cur.blocks = blocks;
        if (gadget_orientation(d, cur, u) != Orientation::NotWellOriented) continue;
        std::size_t before = blocks.size();

        int cpg = c.cells_per_gadget();
        int lo = (u - 1) * cpg + 1, hi = u * cpg;
        std::vector<std::vector<int>> kept;
        std::vector<int> out_glues, in_glues; // arc numbers found in removed blocks
        for (auto& block : blocks) {
            bool touches = std::any_of(block.begin(), block.end(),
                                       [&](int id) { return id >= lo && id <= hi; });
            if (!touches) {
                kept.push_back(std::move(block));
                continue;
            }
            for (int id : block) {
                if (!c.is_glue(id)) continue;
                int k = c.glue_number(id);
                auto [tail, head] = c.arc_of_number[static_cast<std::size_t>(k)];
                if (tail == u) out_glues.push_back(k);
                if (head == u) in_glues.push_back(k);
            }
        }
        std::sort(out_glues.begin(), out_glues.end());
        std::sort(in_glues.begin(), in_glues.end());

        // rows put the in-glues out of a job, columns the out-glues; pick
        // whichever strands fewer, rows on a tie
        bool rows = in_glues.size() <= out_glues.size();
        blocks = std::move(kept);
        for (int f = 0; f <= c.m; ++f) {
            std::vector<int> block;
            if (rows) {
                if (std::binary_search(out_glues.begin(), out_glues.end(), f))
                    block.push_back(c.glue(f));
                for (int j = 0; j <= c.m; ++j) block.push_back(c.cell(u, f, j));
            } else {
                if (std::binary_search(in_glues.begin(), in_glues.end(), f))
                    block.push_back(c.glue(f));
                for (int i = 0; i <= c.m; ++i) block.push_back(c.cell(u, i, f));
            }
            blocks.push_back(std::move(block));
        }
        for (int k : rows ? in_glues : out_glues) blocks.push_back({c.glue(k)});
        ++local.gadgets_rewritten;

        // gluing rows (or columns) back in may close a quotient cycle
        // through an absorbed glue; stranding glues one by one reopens it
        while (!quotient_is_acyclic(d.dag, blocks)) {
            std::vector<int> candidates;
            for (int k = 1; k <= c.m; ++k) {
                auto [tail, head] = c.arc_of_number[static_cast<std::size_t>(k)];
                if (head == u) candidates.push_back(k);
            }
            for (int k = 1; k <= c.m; ++k) {
                auto [tail, head] = c.arc_of_number[static_cast<std::size_t>(k)];
                if (tail == u && head != u) candidates.push_back(k);
            }
            bool split = false;
            for (int k : candidates) {
                int id = c.glue(k);
                for (auto& block : blocks) {
                    if (block.size() >= 2 && block.front() == id) {
                        std::vector<int> rest(block.begin() + 1, block.end());
                        block.resize(1);
                        blocks.push_back(std::move(rest));
                        split = true;
                        break;
                    }
                }
                if (split) break;
            }
            if (!split)
                fail(Errc::InternalInvariantViolation,
                     "quotient stays cyclic with every incident glue stranded");
            ++local.blocks_split;
        }

        if (blocks.size() > before)
            fail(Errc::InternalInvariantViolation,
                 "rewriting gadget " + std::to_string(u) + " grew the partition");
    }

    PathPartition out;
    out.blocks = std::move(blocks);
    if (auto check = is_h_partition(d.dag, out); !check)
        fail(Errc::InternalInvariantViolation, "normalization broke the partition: " + check.reason);
    if (stats) *stats = local;
    return out;
}

std::vector<std::pair<int, int>> fas_from_partition(const Digraph& source,
                                                    const FasToAhpResult& d,
                                                    const PathPartition& p) {
    if (auto check = is_h_partition(d.dag, p); !check)
        fail(Errc::NotHPartition, check.reason);
    const auto& c = d.coords;
    for (int v = 1; v <= c.source_n; ++v)
        if (gadget_orientation(d, p, v) == Orientation::NotWellOriented)
            fail(Errc::GadgetNotWellOriented, "gadget " + std::to_string(v));

    std::vector<std::pair<int, int>> fas;
    for (const auto& block : p.blocks)
        if (block.size() == 1 && c.is_glue(block.front()))
            fas.push_back(c.arc_of_number[static_cast<std::size_t>(c.glue_number(block.front()))]);
    std::sort(fas.begin(), fas.end());
    if (!is_feedback_arc_set(source, fas))
        fail(Errc::NotFeedbackArcSet, "stranded glues do not break every cycle");
    return fas;
}

// --- vertex cover to the label-count problem -----------------------------

VcToMil5Result vc_to_mil5(const UndirectedGraph& g) {
    VcToMil5Result r;
    r.roles.source_n = g.n;
    std::vector<std::pair<int, int>> refs, vars;
    for (int v = 1; v <= g.n; ++v) refs.emplace_back(r.roles.id(v, 0), r.roles.id(v, 1));
    for (auto [u, v] : g.edges) {
        vars.emplace_back(r.roles.id(u, 0), r.roles.id(v, 1));
        vars.emplace_back(r.roles.id(v, 0), r.roles.id(u, 1));
    }
    r.instance = build_graph(2 * g.n, refs, vars);
    return r;
}

TopoOrder cover_to_order(const UndirectedGraph& g, const VcToMil5Result& inst,
                         const std::vector<int>& cover) {
    std::vector<char> in_cover(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v : cover) {
        if (v < 1 || v > g.n) fail(Errc::OutOfRangeVertex, "vertex " + std::to_string(v));
        in_cover[static_cast<std::size_t>(v)] = 1;
    }
    for (auto [u, v] : g.edges)
        if (!in_cover[static_cast<std::size_t>(u)] && !in_cover[static_cast<std::size_t>(v)])
            fail(Errc::NotACover, "edge " + arc_text(u, v) + " uncovered");

    // split cover pairs around the non-cover pairs, which stay adjacent
    std::vector<int> order;
    for (int v = 1; v <= g.n; ++v)
        if (in_cover[static_cast<std::size_t>(v)]) order.push_back(inst.roles.id(v, 0));
    for (int v = 1; v <= g.n; ++v) {
        if (in_cover[static_cast<std::size_t>(v)]) continue;
        order.push_back(inst.roles.id(v, 0));
        order.push_back(inst.roles.id(v, 1));
    }
    for (int v = 1; v <= g.n; ++v)
        if (in_cover[static_cast<std::size_t>(v)]) order.push_back(inst.roles.id(v, 1));
    return TopoOrder::of(inst.instance, order);
}

std::vector<int> order_to_cover(const UndirectedGraph& g, const VcToMil5Result& inst,
                                const TopoOrder& t) {
    std::vector<int> cover;
    for (int v = 1; v <= g.n; ++v)
        if (t.position(inst.roles.id(v, 1)) - t.position(inst.roles.id(v, 0)) > 1)
            cover.push_back(v);
    return cover;
}

} // namespace proofleg

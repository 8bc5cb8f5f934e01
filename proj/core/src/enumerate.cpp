#include "proofleg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "proofleg/errors.hpp"

namespace proofleg {

namespace {

struct EnumState {
    const ProofGraph* g = nullptr;
    std::vector<int> indeg;
    std::vector<int> prefix;
    std::uint64_t count = 0;
    std::optional<std::uint64_t> cap;
    const std::function<void(const std::vector<int>&)>* visit = nullptr;

    void recurse() {
        int n = g->vertex_count();
        if (static_cast<int>(prefix.size()) == n) {
            if (cap && count >= *cap)
                fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(*cap) + " orders");
            ++count;
            if (*visit) (*visit)(prefix);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (indeg[static_cast<std::size_t>(v)] != 0) continue;
            take(v);
            recurse();
            untake(v);
        }
    }

    void take(int v) {
        indeg[static_cast<std::size_t>(v)] = -1; // mark placed
        prefix.push_back(v);
        for (int w : g->all_out(v)) --indeg[static_cast<std::size_t>(w)];
    }

    void untake(int v) {
        for (int w : g->all_out(v)) ++indeg[static_cast<std::size_t>(w)];
        prefix.pop_back();
        indeg[static_cast<std::size_t>(v)] = 0;
    }
};

std::vector<int> initial_indegrees(const ProofGraph& g) {
    std::vector<int> indeg(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (const Arc& a : g.arcs()) ++indeg[static_cast<std::size_t>(a.head)];
    return indeg;
}

void check_scale(const ProofGraph& g) {
    if (g.vertex_count() > 64)
        fail(Errc::ScaleCapExceeded,
             "enumeration limited to 64 vertices, got " + std::to_string(g.vertex_count()));
}

// Counting without a callback, cancellable; used by the parallel counter.
std::uint64_t count_from(const ProofGraph& g, std::vector<int>& indeg, int placed,
                         std::optional<std::uint64_t> cap, std::uint64_t& counted,
                         std::atomic<bool>* overflow) {
    int n = g.vertex_count();
    if (placed == n) {
        ++counted;
        if (cap && counted > *cap) {
            if (overflow) overflow->store(true, std::memory_order_relaxed);
            return counted;
        }
        return counted;
    }
    for (int v = 1; v <= n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] != 0) continue;
        if (overflow && overflow->load(std::memory_order_relaxed)) return counted;
        indeg[static_cast<std::size_t>(v)] = -1;
        for (int w : g.all_out(v)) --indeg[static_cast<std::size_t>(w)];
        count_from(g, indeg, placed + 1, cap, counted, overflow);
        for (int w : g.all_out(v)) ++indeg[static_cast<std::size_t>(w)];
        indeg[static_cast<std::size_t>(v)] = 0;
    }
    return counted;
}

} // namespace

std::uint64_t enumerate_topo_orders(const ProofGraph& g,
                                    const std::function<void(const std::vector<int>&)>& visit,
                                    std::optional<std::uint64_t> cap) {
    check_scale(g);
    EnumState st;
    st.g = &g;
    st.indeg = initial_indegrees(g);
    st.prefix.reserve(static_cast<std::size_t>(g.vertex_count()));
    st.cap = cap;
    st.visit = &visit;
    st.recurse();
    return st.count;
}

std::uint64_t count_topo_orders(const ProofGraph& g, std::optional<std::uint64_t> cap,
                                int threads) {
    check_scale(g);
    int n = g.vertex_count();
    if (n == 0) return 1;
    auto indeg0 = initial_indegrees(g);
    std::vector<int> sources;
    for (int v = 1; v <= n; ++v)
        if (indeg0[static_cast<std::size_t>(v)] == 0) sources.push_back(v);

    if (threads <= 1 || sources.size() <= 1) {
        std::uint64_t counted = 0;
        std::atomic<bool> overflow{false};
        count_from(g, indeg0, 0, cap, counted, &overflow);
        if (cap && counted > *cap)
            fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(*cap) + " orders");
        return counted;
    }

    // One task per admissible first vertex; totals merge by addition, so the
    // result does not depend on thread scheduling.
    std::vector<std::uint64_t> partial(sources.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> overflow{false};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= sources.size()) return;
            if (overflow.load(std::memory_order_relaxed)) return;
            int v = sources[i];
            auto indeg = indeg0;
            indeg[static_cast<std::size_t>(v)] = -1;
            for (int w : g.all_out(v)) --indeg[static_cast<std::size_t>(w)];
            std::uint64_t counted = 0;
            count_from(g, indeg, 1, cap, counted, &overflow);
            partial[i] = counted;
        }
    };
    std::vector<std::thread> pool;
    int k = std::min<int>(threads, static_cast<int>(sources.size()));
    pool.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::uint64_t total = 0;
    for (std::uint64_t c : partial) total += c;
    if (cap && (overflow.load() || total > *cap))
        fail(Errc::EnumerationCapExceeded, "more than " + std::to_string(*cap) + " orders");
    return total;
}

} // namespace proofleg

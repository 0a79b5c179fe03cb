#include "cwham/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cwham::oracle {

namespace {

std::vector<uint32_t> adjacency_masks(const LabeledGraph& g, bool out_direction) {
    std::vector<uint32_t> adj(static_cast<size_t>(g.n()), 0);
    for (auto [u, v] : g.edges) {
        if (g.mode == Mode::undirected) {
            adj[static_cast<size_t>(u)] |= 1u << v;
            adj[static_cast<size_t>(v)] |= 1u << u;
        } else if (out_direction) {
            adj[static_cast<size_t>(u)] |= 1u << v;
        } else {
            adj[static_cast<size_t>(v)] |= 1u << u;
        }
    }
    return adj;
}

}  // namespace

std::optional<std::vector<int>> brute_force_hc(const LabeledGraph& g) {
    int n = g.n();
    if (n > 18) throw Error(Errc::too_large, "brute_force_hc handles at most 18 vertices");
    if (n < 3) return std::nullopt;

    std::vector<uint32_t> out = adjacency_masks(g, true);
    uint32_t full = (1u << n) - 1;

    // reach[mask][last]: path from 0 over exactly `mask`, ending at `last`
    std::vector<std::vector<bool>> reach(static_cast<size_t>(full) + 1,
                                         std::vector<bool>(static_cast<size_t>(n), false));
    reach[1][0] = true;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1)) continue;
        for (int last = 0; last < n; ++last) {
            if (!reach[mask][static_cast<size_t>(last)]) continue;
            uint32_t candidates = out[static_cast<size_t>(last)] & ~mask;
            while (candidates) {
                int next = std::countr_zero(candidates);
                candidates &= candidates - 1;
                reach[mask | (1u << next)][static_cast<size_t>(next)] = true;
            }
        }
    }

    int closing = -1;
    for (int last = 1; last < n; ++last) {
        if (reach[full][static_cast<size_t>(last)] && (out[static_cast<size_t>(last)] & 1u)) {
            closing = last;
            break;
        }
    }
    if (closing < 0) return std::nullopt;

    // walk the table backwards to recover the cycle
    std::vector<int> rev{closing};
    uint32_t mask = full;
    int last = closing;
    while (last != 0) {
        uint32_t prev_mask = mask & ~(1u << last);
        for (int prev = 0; prev < n; ++prev) {
            if (!reach[prev_mask][static_cast<size_t>(prev)]) continue;
            if (!(out[static_cast<size_t>(prev)] & (1u << last))) continue;
            rev.push_back(prev);
            mask = prev_mask;
            last = prev;
            break;
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

long count_hc_permutations(const LabeledGraph& g) {
    int n = g.n();
    if (n > 8) throw Error(Errc::too_large, "permutation sweep handles at most 8 vertices");
    if (n < 3) return 0;
    std::vector<int> perm(static_cast<size_t>(n) - 1);
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        // fix vertex 0 first to quotient out rotations
        if (g.mode == Mode::undirected && perm.front() > perm.back()) continue;  // reflections
        std::vector<int> cyc{0};
        cyc.insert(cyc.end(), perm.begin(), perm.end());
        if (verify_cycle(g, cyc)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool enumerate_trail_exists(const ColoredMultigraph& g) {
    size_t m = g.edges.size();
    if (m > 10) throw Error(Errc::too_large, "trail enumeration handles at most 10 edges");
    if (m == 0) return true;

    std::vector<bool> used(m, false);
    Color first_color = Color::red;
    int start = 0;

    // try every unused edge leaving `cur` whose color differs from `last`
    auto dfs = [&](auto&& self, int cur, Color last, size_t remaining) -> bool {
        if (remaining == 0) return cur == start && last != first_color;
        for (size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            const auto& e = g.edges[i];
            if (e.color == last) continue;
            int next = -1;
            if (e.u == cur) next = e.v;
            else if (!g.directed && e.v == cur) next = e.u;
            else continue;
            used[i] = true;
            if (self(self, next, e.color, remaining - 1)) return true;
            used[i] = false;
        }
        return false;
    };

    for (size_t i = 0; i < m; ++i) {
        const auto& e = g.edges[i];
        first_color = e.color;
        used[i] = true;
        start = e.u;
        if (dfs(dfs, e.v, e.color, m - 1)) return true;
        if (!g.directed && e.u != e.v) {
            start = e.v;
            if (dfs(dfs, e.u, e.color, m - 1)) return true;
        }
        used[i] = false;
    }
    return false;
}

bool verify_cycle(const LabeledGraph& g, const std::vector<int>& cycle) {
    int n = g.n();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

}  // namespace cwham::oracle

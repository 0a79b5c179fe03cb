#pragma once

#include <optional>
#include <vector>

#include "cwham/cmgraph.hpp"
#include "cwham/kexpr.hpp"

namespace cwham::oracle {

// Held-Karp bitmask DP, undirected and directed. Returns one Hamiltonian
// cycle (vertex indices) or nothing. Throws Errc::too_large above n = 18.
std::optional<std::vector<int>> brute_force_hc(const LabeledGraph& g);

// Permutation sweep used as the oracle's own cross-check; n <= 8. Counts
// distinct Hamiltonian cycles (undirected: up to rotation and reflection;
// directed: up to rotation).
long count_hc_permutations(const LabeledGraph& g);

// Exhaustive search over edge orderings respecting alternation and the
// closed-wrap color rule. Throws Errc::too_large above 10 edges.
bool enumerate_trail_exists(const ColoredMultigraph& g);

// True iff the sequence lists every vertex exactly once and consecutive
// pairs (including the wrap) are edges/arcs of g.
bool verify_cycle(const LabeledGraph& g, const std::vector<int>& cycle);

}  // namespace cwham::oracle

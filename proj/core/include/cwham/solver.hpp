#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cwham/cmgraph.hpp"
#include "cwham/kexpr.hpp"

namespace cwham {

// An edge subset of a host labeled graph inducing vertex-disjoint paths.
// Besides the edge ids it carries a path-end index so endpoint queries and
// signature recomputation stay cheap during the DP:
//   undirected: `ends` has one (end, other_end) entry per path end vertex;
//               an isolated vertex v appears once as (v, v).
//   directed:   `ends` maps path end -> start, `starts` maps start -> end;
//               trivial paths appear once in each.
// Both indexes are sorted by their first component.
struct PartialSolution {
    std::vector<uint32_t> edges;  // sorted host edge ids
    std::vector<std::pair<int32_t, int32_t>> ends;
    std::vector<std::pair<int32_t, int32_t>> starts;

    // One (a, b) pair per maximal path: undirected with a <= b, directed as
    // (start, end). Isolated vertices appear as (v, v).
    std::vector<std::pair<int, int>> paths() const;
    size_t path_count() const;
};

// Builds the path-end index for an explicit edge subset; validates the
// vertex-disjoint-paths invariants (degree caps, acyclicity) and throws
// Errc::bad_parameters on violation.
PartialSolution partial_from_edges(const LabeledGraph& h, const std::vector<uint32_t>& edge_ids);

// The equivalence-class key of an auxiliary multigraph: per-slot degrees plus
// the canonical component partition. Directed signatures carry out- and
// in-degree vectors separately.
struct Signature {
    std::vector<int> degrees;      // undirected degree, or out-degree
    std::vector<int> degrees_in;   // directed only
    std::vector<int> partition;    // entry s-1: smallest slot of s's component

    std::vector<int32_t> key() const;
    bool operator==(const Signature&) const = default;
};

// Auxiliary multigraph of a partial solution: one all-red edge per maximal
// path joining the slots of its end labels; equal labels give a loop.
ColoredMultigraph aux_multigraph(const LabeledGraph& h, const PartialSolution& p);

// Signature of an all-red multigraph.
Signature signature(const ColoredMultigraph& aux);

// Signature of aux_multigraph(h, p), computed directly from the path-end
// index. Matches signature(aux_multigraph(h, p)).
Signature signature_of(const LabeledGraph& h, const PartialSolution& p);

// One representative per distinct key, first arrival kept. Iteration order is
// insertion order, which the DP keeps deterministic.
class RepSet {
public:
    struct Entry {
        std::vector<int32_t> key;
        PartialSolution sol;
    };

    bool insert(std::vector<int32_t> key, PartialSolution sol);
    bool contains(const std::vector<int32_t>& key) const;
    const PartialSolution* find(const std::vector<int32_t>& key) const;

    const std::vector<Entry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    size_t insertions() const { return insertions_; }

private:
    std::vector<Entry> entries_;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;
    size_t insertions_ = 0;
};

// reduce_H: one representative per signature class of `a`, keeping the first
// element in iteration order.
RepSet reduce(const LabeledGraph& h, const std::vector<PartialSolution>& a);

// All extensions of p by one i-j edge of h whose endpoints are ends of two
// distinct maximal paths. Candidate edges are scanned in edge-id order.
std::vector<PartialSolution> plus_ij(const LabeledGraph& h, const PartialSolution& p, int i, int j);

// Per-operation transfer steps over materialized graphs. The engine inside
// solve() runs the same logic against its incremental state.
RepSet step_leaf(const LabeledGraph& h);
RepSet step_rho(const LabeledGraph& h, const RepSet& a);
// h = d (+) f; a_f's ids refer to f's own numbering and are offset here.
RepSet step_union(const LabeledGraph& h, const LabeledGraph& d, const RepSet& a_d, const RepSet& a_f);
// h = eta_{i,j}(d); the first d_edge_count edges of h are d's. Throws
// Errc::not_irredundant when d already has i-j edges.
RepSet step_eta(const LabeledGraph& h, int i, int j, size_t d_edge_count, const RepSet& a_d);

// Theorem-style acceptance test at h = eta_{i,j}(d) with V(h) = V(G): some
// representative whose aux degrees vanish outside {i, j} and agree (and are
// positive) on i and j.
std::optional<PartialSolution> final_check(const LabeledGraph& h, int i, int j, const RepSet& a_d);

// Turns a partial solution accepted by final_check into a Hamiltonian cycle
// via an alternating Eulerian trail on its aux multigraph plus blue i-j
// edges. The result is validated before returning; failure throws
// Errc::internal.
std::vector<int> extract_cycle(const LabeledGraph& h, int i, int j, const PartialSolution& p);

struct Witness {
    int node = -1;  // AST index of the eta/arc node that accepted
    int i = 0, j = 0;
};

struct SolveStats {
    int n = 0;
    int k = 0;
    int nodes = 0;
    size_t max_repset = 0;
    size_t reduce_calls = 0;
    int64_t elapsed_ms = 0;
    // |A_H| per AST node id; zero for nodes not reached (early accept stops
    // the traversal).
    std::vector<size_t> states_per_node;
};

struct SolveResult {
    bool hamiltonian = false;
    std::optional<std::vector<int>> cycle;  // vertex indices in leaf order
    std::optional<Witness> witness;
    SolveStats stats;
};

struct SolveOptions {
    bool certificate = false;
    // Replace reduce by the identity map (dedupe on exact edge sets only).
    // Exponential; meant for cross-checking the representative engine.
    bool exhaustive_reduce = false;
};

// Bottom-up DP over an irredundant undirected expression. Returns not
// Hamiltonian immediately for fewer than 3 vertices or a disconnected graph.
SolveResult solve(const CwExpr& expr, const SolveOptions& opt = {});

// Lemma-style cap on signature classes; the engine asserts it after every
// reduce in representative mode.
double repset_bound(int n, int k);

}  // namespace cwham

#pragma once

#include <string>
#include <vector>

#include "cwham/errors.hpp"

namespace cwham {

enum class Color : uint8_t { red, blue };

// Multigraph on slot-vertices 1..k. Loops and parallel edges are allowed;
// edges are distinguished by dense ids in insertion order. In directed mode
// (u, v) is an arc from u to v.
struct ColoredMultigraph {
    int k = 0;
    bool directed = false;

    struct Edge {
        int id;
        int u, v;  // undirected edges keep u <= v; u == v is a loop
        Color color;
    };
    std::vector<Edge> edges;

    ColoredMultigraph() = default;
    ColoredMultigraph(int slots, bool dir = false) : k(slots), directed(dir) {}

    int add_edge(int u, int v, Color c);
    bool empty() const { return edges.empty(); }
};

struct ColorDegrees {
    int rdeg = 0, bdeg = 0;                      // undirected; loops count twice
    int rdeg_out = 0, rdeg_in = 0;               // directed
    int bdeg_out = 0, bdeg_in = 0;
};

// Per-slot degree records, indexed 1..k (entry 0 unused).
std::vector<ColorDegrees> color_degrees(const ColoredMultigraph& g);

// Connected components over all k slots, singletons included. Directed mode
// uses weak connectivity. Components are sorted by their smallest slot.
std::vector<std::vector<int>> components(const ColoredMultigraph& g);

// Canonical component encoding: entry s-1 holds the smallest slot index of
// the component containing slot s.
std::vector<int> component_partition(const ColoredMultigraph& g);

// Disjoint union on the same slot set; colors are preserved and b's edges are
// re-identified after a's. Throws Errc::mismatched_k.
ColoredMultigraph merge(const ColoredMultigraph& a, const ColoredMultigraph& b);

// True iff a closed trail exists that uses every edge once with strictly
// alternating colors (including across the wrap). Conditions: at most one
// component carries edges, and per-slot color degrees balance (undirected:
// rdeg = bdeg; directed: bdeg+ = rdeg- and bdeg- = rdeg+). Edgeless graphs
// qualify trivially.
bool trail_exists(const ColoredMultigraph& g);

// Closed alternating trail: slots has one more entry than edge_ids and
// slots.front() == slots.back().
struct Trail {
    std::vector<int> slots;
    std::vector<int> edge_ids;
    bool empty() const { return edge_ids.empty(); }
};

// Builds a trail by greedy extension, preferring edges whose removal keeps
// the remainder completable. Starts at the lowest-index non-isolated slot
// with a red first edge. Throws Errc::no_trail if trail_exists fails.
Trail find_trail(const ColoredMultigraph& g);

// Re-walks a trail against g: every edge id used exactly once, consecutive
// edges share their slot, colors alternate, and the wrap pair alternates too.
bool trail_is_valid(const ColoredMultigraph& g, const Trail& t);

// Edge-list format, one edge per line:
//   COLOR u v        (undirected; u == v is a loop)
//   COLOR u -> v     (directed)
// COLOR is "red" or "blue"; slots are positive integers. k is the largest
// slot mentioned. '#' or ';' starts a comment line.
ColoredMultigraph parse_edge_list(const std::string& text, bool directed);

std::string trail_to_string(const ColoredMultigraph& g, const Trail& t);

}  // namespace cwham

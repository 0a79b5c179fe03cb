#include "cwham/cmgraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cwham {

namespace {

// Plain union-find over slots 1..k.
struct SlotUF {
    std::vector<int> parent;
    explicit SlotUF(int k) : parent(static_cast<size_t>(k) + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

Color flip(Color c) { return c == Color::red ? Color::blue : Color::red; }

// Feasibility of extending an open alternating trail. The remainder (minus
// nothing) must keep all its edges in one component that contains both the
// trail's start and the current head.
struct TrailState {
    const ColoredMultigraph& g;
    std::vector<bool> used;
    int remaining;

    explicit TrailState(const ColoredMultigraph& g_)
        : g(g_), used(g_.edges.size(), false), remaining(static_cast<int>(g_.edges.size())) {}

    bool feasible(int head, int start) const {
        if (remaining == 0) return head == start;
        if (g.directed) return feasible_directed(head, start);
        SlotUF uf(g.k);
        std::vector<int> deg(static_cast<size_t>(g.k) + 1, 0);
        int root = -1;
        for (const auto& e : g.edges) {
            if (used[static_cast<size_t>(e.id)]) continue;
            uf.join(e.u, e.v);
            deg[static_cast<size_t>(e.u)]++;
            deg[static_cast<size_t>(e.v)]++;
            root = e.u;
        }
        root = uf.find(root);
        for (const auto& e : g.edges) {
            if (used[static_cast<size_t>(e.id)]) continue;
            if (uf.find(e.u) != root) return false;  // a second non-trivial component
        }
        if (deg[static_cast<size_t>(head)] == 0 || uf.find(head) != root) return false;
        if (deg[static_cast<size_t>(start)] == 0 || uf.find(start) != root) return false;
        return true;
    }

    // Directed remainder must condense to a chain of strongly connected
    // components C1 -> ... -> Ct with exactly one arc between consecutive
    // components, head in C1 and start in Ct.
    bool feasible_directed(int head, int start) const {
        std::vector<int> deg(static_cast<size_t>(g.k) + 1, 0);
        for (const auto& e : g.edges) {
            if (used[static_cast<size_t>(e.id)]) continue;
            deg[static_cast<size_t>(e.u)]++;
            deg[static_cast<size_t>(e.v)]++;
        }
        if (deg[static_cast<size_t>(head)] == 0 || deg[static_cast<size_t>(start)] == 0) return false;

        // Tarjan over active slots.
        std::vector<std::vector<int>> out(static_cast<size_t>(g.k) + 1);
        for (const auto& e : g.edges)
            if (!used[static_cast<size_t>(e.id)]) out[static_cast<size_t>(e.u)].push_back(e.v);

        std::vector<int> comp(static_cast<size_t>(g.k) + 1, -1), low(static_cast<size_t>(g.k) + 1, 0),
            num(static_cast<size_t>(g.k) + 1, -1);
        std::vector<int> stack;
        std::vector<bool> on_stack(static_cast<size_t>(g.k) + 1, false);
        int counter = 0, ncomp = 0;

        struct Frame { int v; size_t next; };
        for (int s = 1; s <= g.k; ++s) {
            if (deg[static_cast<size_t>(s)] == 0 || num[static_cast<size_t>(s)] >= 0) continue;
            std::vector<Frame> dfs{{s, 0}};
            num[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = counter++;
            stack.push_back(s);
            on_stack[static_cast<size_t>(s)] = true;
            while (!dfs.empty()) {
                Frame& f = dfs.back();
                auto& adj = out[static_cast<size_t>(f.v)];
                if (f.next < adj.size()) {
                    int w = adj[f.next++];
                    if (num[static_cast<size_t>(w)] < 0) {
                        num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                        stack.push_back(w);
                        on_stack[static_cast<size_t>(w)] = true;
                        dfs.push_back({w, 0});
                    } else if (on_stack[static_cast<size_t>(w)]) {
                        low[static_cast<size_t>(f.v)] =
                            std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
                    }
                } else {
                    if (low[static_cast<size_t>(f.v)] == num[static_cast<size_t>(f.v)]) {
                        while (true) {
                            int w = stack.back();
                            stack.pop_back();
                            on_stack[static_cast<size_t>(w)] = false;
                            comp[static_cast<size_t>(w)] = ncomp;
                            if (w == f.v) break;
                        }
                        ++ncomp;
                    }
                    int v = f.v;
                    dfs.pop_back();
                    if (!dfs.empty())
                        low[static_cast<size_t>(dfs.back().v)] =
                            std::min(low[static_cast<size_t>(dfs.back().v)], low[static_cast<size_t>(v)]);
                }
            }
        }

        // Tarjan emits components in reverse topological order; a chain must
        // run head -> ... -> start, i.e. comp numbers descending from head.
        std::vector<int> cross(static_cast<size_t>(ncomp), 0);
        for (const auto& e : g.edges) {
            if (used[static_cast<size_t>(e.id)]) continue;
            int cu = comp[static_cast<size_t>(e.u)], cv = comp[static_cast<size_t>(e.v)];
            if (cu == cv) continue;
            if (cu != cv + 1) return false;  // not between consecutive chain elements
            cross[static_cast<size_t>(cv)]++;
        }
        for (int c = 0; c + 1 < ncomp; ++c)
            if (cross[static_cast<size_t>(c)] != 1) return false;
        if (comp[static_cast<size_t>(head)] != ncomp - 1) return false;
        if (comp[static_cast<size_t>(start)] != 0) return false;
        return true;
    }
};

}  // namespace

int ColoredMultigraph::add_edge(int u, int v, Color c) {
    if (u < 1 || v < 1 || u > k || v > k)
        throw Error(Errc::bad_parameters, "slot out of range [1," + std::to_string(k) + "]");
    if (!directed && u > v) std::swap(u, v);
    int id = static_cast<int>(edges.size());
    edges.push_back({id, u, v, c});
    return id;
}

std::vector<ColorDegrees> color_degrees(const ColoredMultigraph& g) {
    std::vector<ColorDegrees> deg(static_cast<size_t>(g.k) + 1);
    for (const auto& e : g.edges) {
        ColorDegrees& du = deg[static_cast<size_t>(e.u)];
        ColorDegrees& dv = deg[static_cast<size_t>(e.v)];
        if (g.directed) {
            if (e.color == Color::red) {
                du.rdeg_out++;
                dv.rdeg_in++;
            } else {
                du.bdeg_out++;
                dv.bdeg_in++;
            }
        } else {
            // e.u == e.v naturally contributes twice
            if (e.color == Color::red) {
                du.rdeg++;
                dv.rdeg++;
            } else {
                du.bdeg++;
                dv.bdeg++;
            }
        }
    }
    return deg;
}

std::vector<int> component_partition(const ColoredMultigraph& g) {
    SlotUF uf(g.k);
    for (const auto& e : g.edges) uf.join(e.u, e.v);
    std::vector<int> part(static_cast<size_t>(g.k));
    for (int s = 1; s <= g.k; ++s) part[static_cast<size_t>(s) - 1] = uf.find(s);
    return part;
}

std::vector<std::vector<int>> components(const ColoredMultigraph& g) {
    std::vector<int> part = component_partition(g);
    std::vector<std::vector<int>> comps;
    for (int s = 1; s <= g.k; ++s) {
        if (part[static_cast<size_t>(s) - 1] == s) comps.emplace_back();
    }
    // part values are smallest members, so grouping keeps components sorted
    std::vector<int> index(static_cast<size_t>(g.k) + 1, -1);
    int next = 0;
    for (int s = 1; s <= g.k; ++s) {
        int rep = part[static_cast<size_t>(s) - 1];
        if (rep == s) index[static_cast<size_t>(rep)] = next++;
        comps[static_cast<size_t>(index[static_cast<size_t>(rep)])].push_back(s);
    }
    return comps;
}

ColoredMultigraph merge(const ColoredMultigraph& a, const ColoredMultigraph& b) {
    if (a.k != b.k || a.directed != b.directed)
        throw Error(Errc::mismatched_k, "merge needs matching slot counts and modes");
    ColoredMultigraph out(a.k, a.directed);
    out.edges = a.edges;
    for (const auto& e : b.edges) out.add_edge(e.u, e.v, e.color);
    return out;
}

bool trail_exists(const ColoredMultigraph& g) {
    if (g.edges.empty()) return true;
    std::vector<ColorDegrees> deg = color_degrees(g);
    for (int s = 1; s <= g.k; ++s) {
        const ColorDegrees& d = deg[static_cast<size_t>(s)];
        if (g.directed) {
            if (d.bdeg_out != d.rdeg_in || d.bdeg_in != d.rdeg_out) return false;
        } else {
            if (d.rdeg != d.bdeg) return false;
        }
    }
    SlotUF uf(g.k);
    for (const auto& e : g.edges) uf.join(e.u, e.v);
    int root = uf.find(g.edges.front().u);
    for (const auto& e : g.edges)
        if (uf.find(e.u) != root) return false;
    return true;
}

Trail find_trail(const ColoredMultigraph& g) {
    if (!trail_exists(g)) throw Error(Errc::no_trail, "no alternating Eulerian trail");
    Trail t;
    if (g.edges.empty()) return t;

    std::vector<std::vector<int>> incident(static_cast<size_t>(g.k) + 1);
    for (const auto& e : g.edges) {
        incident[static_cast<size_t>(e.u)].push_back(e.id);
        if (!g.directed && e.v != e.u) incident[static_cast<size_t>(e.v)].push_back(e.id);
    }

    int start = 0;
    for (int s = 1; s <= g.k && start == 0; ++s)
        if (!incident[static_cast<size_t>(s)].empty()) start = s;

    TrailState state(g);
    int cur = start;
    Color want = Color::red;
    t.slots.push_back(cur);
    for (int step = 0; step < static_cast<int>(g.edges.size()); ++step) {
        bool advanced = false;
        for (int id : incident[static_cast<size_t>(cur)]) {
            if (state.used[static_cast<size_t>(id)]) continue;
            const auto& e = g.edges[static_cast<size_t>(id)];
            if (e.color != want) continue;
            if (g.directed && e.u != cur) continue;
            int head = e.u == cur ? e.v : e.u;
            state.used[static_cast<size_t>(id)] = true;
            state.remaining--;
            if (state.feasible(head, start)) {
                t.edge_ids.push_back(id);
                t.slots.push_back(head);
                cur = head;
                want = flip(want);
                advanced = true;
                break;
            }
            state.used[static_cast<size_t>(id)] = false;
            state.remaining++;
        }
        if (!advanced) throw Error(Errc::internal, "trail extension stalled");
    }
    return t;
}

bool trail_is_valid(const ColoredMultigraph& g, const Trail& t) {
    if (t.edge_ids.empty()) return t.slots.size() <= 1 && g.edges.empty();
    if (t.slots.size() != t.edge_ids.size() + 1) return false;
    if (t.slots.front() != t.slots.back()) return false;
    std::vector<bool> seen(g.edges.size(), false);
    for (size_t i = 0; i < t.edge_ids.size(); ++i) {
        int id = t.edge_ids[i];
        if (id < 0 || id >= static_cast<int>(g.edges.size()) || seen[static_cast<size_t>(id)]) return false;
        seen[static_cast<size_t>(id)] = true;
        const auto& e = g.edges[static_cast<size_t>(id)];
        int from = t.slots[i], to = t.slots[i + 1];
        if (g.directed) {
            if (e.u != from || e.v != to) return false;
        } else {
            bool fwd = e.u == from && e.v == to;
            bool rev = e.v == from && e.u == to;
            if (!fwd && !rev) return false;
        }
        Color prev = g.edges[static_cast<size_t>(t.edge_ids[i == 0 ? t.edge_ids.size() - 1 : i - 1])].color;
        if (prev == e.color) return false;  // includes the wrap pair
    }
    for (bool b : seen)
        if (!b) return false;
    return true;
}

ColoredMultigraph parse_edge_list(const std::string& text, bool directed) {
    struct Row { Color c; int u, v; };
    std::vector<Row> rows;
    int maxslot = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string color;
        if (!(ls >> color)) continue;
        if (color[0] == '#' || color[0] == ';') continue;
        Color c;
        if (color == "red") c = Color::red;
        else if (color == "blue") c = Color::blue;
        else throw Error(Errc::syntax, "line " + std::to_string(lineno) + ": color must be red or blue");
        int u, v;
        if (!(ls >> u)) throw Error(Errc::syntax, "line " + std::to_string(lineno) + ": missing endpoint");
        if (directed) {
            std::string arrow;
            if (!(ls >> arrow >> v) || arrow != "->")
                throw Error(Errc::syntax, "line " + std::to_string(lineno) + ": expected 'u -> v'");
        } else if (!(ls >> v)) {
            throw Error(Errc::syntax, "line " + std::to_string(lineno) + ": missing endpoint");
        }
        if (u < 1 || v < 1) throw Error(Errc::syntax, "line " + std::to_string(lineno) + ": slots start at 1");
        rows.push_back({c, u, v});
        maxslot = std::max({maxslot, u, v});
    }
    ColoredMultigraph g(maxslot, directed);
    for (const Row& r : rows) g.add_edge(r.u, r.v, r.c);
    return g;
}

std::string trail_to_string(const ColoredMultigraph& g, const Trail& t) {
    if (t.empty()) return "(empty trail)";
    std::string out = "v" + std::to_string(t.slots[0]);
    for (size_t i = 0; i < t.edge_ids.size(); ++i) {
        const auto& e = g.edges[static_cast<size_t>(t.edge_ids[i])];
        out += e.color == Color::red ? " -red- " : " -blue- ";
        out += "v" + std::to_string(t.slots[i + 1]);
    }
    return out;
}

}  // namespace cwham

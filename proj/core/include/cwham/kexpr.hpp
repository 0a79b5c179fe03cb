#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cwham/errors.hpp"

namespace cwham {

enum class Mode { undirected, directed };

// Clique-width operations. `uni` is the disjoint union (union is a keyword).
enum class Op : uint8_t { leaf, rho, eta, arc, uni };

struct ExprNode {
    Op op;
    int a = 0, b = 0;         // leaf: a = label; rho: a -> b; eta/arc: class pair (a, b)
    int child = -1;           // unary child / left operand of a union
    int right = -1;           // right operand of a union
    std::string name;         // leaf vertex name
    int leaf_index = -1;      // dense index in left-to-right leaf order
};

// Abstract syntax tree of a k-expression. Nodes are stored in a flat pool;
// `root` indexes into it. Immutable after construction.
struct CwExpr {
    Mode mode = Mode::undirected;
    std::vector<ExprNode> nodes;
    int root = -1;
    int leaf_count = 0;

    const ExprNode& node(int id) const { return nodes[static_cast<size_t>(id)]; }
    int size() const { return static_cast<int>(nodes.size()); }

    // Children-before-parents order; left subtree of a union comes first.
    std::vector<int> postorder() const;
};

// The value of a (sub)expression: vertices in leaf order, one label each,
// and a simple edge/arc set.
struct LabeledGraph {
    Mode mode = Mode::undirected;
    int k = 0;
    std::vector<std::string> names;          // index -> leaf name
    std::vector<int> labels;                 // index -> label in [k]
    std::vector<std::pair<int, int>> edges;  // undirected: first < second

    int n() const { return static_cast<int>(names.size()); }
    bool has_edge(int u, int v) const;
    std::vector<int> class_vertices(int label) const;

    std::unordered_set<uint64_t> adjacency;  // packed endpoint pairs, filled by evaluate
    void index_edges();
};

// Grammar: '(' 'v' INT IDENT ')' | '(' 'rho' INT INT expr ')'
//        | '(' 'eta' INT INT expr ')' | '(' 'arc' INT INT expr ')'
//        | '(' 'union' expr expr ')'
// ';' starts a comment to end of line.
CwExpr parse(const std::string& text, Mode mode);

// Canonical printer; parse(to_text(e)) reproduces e.
std::string to_text(const CwExpr& e);

// Maximum label mentioned by any node.
int width(const CwExpr& e);

// Evaluate to the labeled graph. Total on well-formed input: a redundant
// eta/arc simply contributes fewer (possibly zero) new edges.
LabeledGraph evaluate(const CwExpr& e);

enum class EtaStatus { clean, fully_redundant, partially_redundant };

struct EtaReport {
    int node = -1;
    int i = 0, j = 0;
    EtaStatus status = EtaStatus::clean;
    long existing_pairs = 0;  // class pairs already adjacent below this node
    long possible_pairs = 0;  // |class_i| * |class_j|
};

struct IrredundancyReport {
    std::vector<EtaReport> flagged;  // non-clean eta/arc nodes, in postorder
    bool clean() const { return flagged.empty(); }
    bool has_partially_redundant() const;
};

IrredundancyReport check_irredundant(const CwExpr& e);

// Drops fully-redundant eta/arc nodes. Throws Errc::partially_redundant when
// a node adds some but not all of its class pairs; such expressions must be
// repaired by the caller.
CwExpr normalize(const CwExpr& e);

}  // namespace cwham

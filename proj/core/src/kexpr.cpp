#include "cwham/kexpr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace cwham {

namespace {

inline uint64_t pack_pair(int u, int v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

struct Token {
    enum Kind { lparen, rparen, word, end } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_blanks();
        if (pos_ >= text_.size()) return {Token::end, "", pos_};
        char c = text_[pos_];
        if (c == '(') return {Token::lparen, "(", pos_++};
        if (c == ')') return {Token::rparen, ")", pos_++};
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start)
            throw Error(Errc::syntax, "unexpected character '" + std::string(1, c) +
                                          "' at offset " + std::to_string(start), start);
        return {Token::word, text_.substr(start, pos_ - start), start};
    }

private:
    void skip_blanks() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, Mode mode) : lexer_(text), mode_(mode) { advance(); }

    CwExpr run() {
        CwExpr e;
        e.mode = mode_;
        e.root = parse_expr(e);
        expect(Token::end, "end of input");
        e.leaf_count = next_leaf_;
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (cur_.kind != k)
            throw Error(Errc::syntax,
                        "expected " + std::string(what) + " at offset " + std::to_string(cur_.pos) +
                            ", got '" + (cur_.kind == Token::end ? "<eof>" : cur_.text) + "'",
                        cur_.pos);
    }

    std::string take_word(const char* what) {
        expect(Token::word, what);
        std::string w = cur_.text;
        advance();
        return w;
    }

    int take_label() {
        size_t at = cur_.pos;
        std::string w = take_word("label");
        for (char c : w)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(Errc::syntax, "expected label at offset " + std::to_string(at), at);
        long v = std::stol(w);
        if (v < 1)
            throw Error(Errc::syntax, "labels start at 1 (offset " + std::to_string(at) + ")", at);
        return static_cast<int>(v);
    }

    int parse_expr(CwExpr& e) {
        expect(Token::lparen, "'('");
        advance();
        size_t op_pos = cur_.pos;
        std::string op = take_word("operator");
        int id;
        if (op == "v") {
            int label = take_label();
            size_t name_pos = cur_.pos;
            std::string name = take_word("vertex name");
            if (!seen_names_.insert(name).second)
                throw Error(Errc::duplicate_vertex, "vertex name '" + name + "' reused at offset " +
                                                        std::to_string(name_pos), name_pos);
            ExprNode node;
            node.op = Op::leaf;
            node.a = label;
            node.name = std::move(name);
            node.leaf_index = next_leaf_++;
            id = push(e, std::move(node));
        } else if (op == "rho" || op == "eta" || op == "arc") {
            if (op == "eta" && mode_ == Mode::directed)
                throw Error(Errc::wrong_mode_operator,
                            "eta is undirected-only (offset " + std::to_string(op_pos) + ")", op_pos);
            if (op == "arc" && mode_ == Mode::undirected)
                throw Error(Errc::wrong_mode_operator,
                            "arc is directed-only (offset " + std::to_string(op_pos) + ")", op_pos);
            int i = take_label();
            int j = take_label();
            if (i == j)
                throw Error(Errc::equal_labels, op + " needs two distinct labels (offset " +
                                                    std::to_string(op_pos) + ")", op_pos);
            int child = parse_expr(e);
            ExprNode node;
            node.op = op == "rho" ? Op::rho : (op == "eta" ? Op::eta : Op::arc);
            node.a = i;
            node.b = j;
            node.child = child;
            id = push(e, std::move(node));
        } else if (op == "union") {
            int left = parse_expr(e);
            int right = parse_expr(e);
            ExprNode node;
            node.op = Op::uni;
            node.child = left;
            node.right = right;
            id = push(e, std::move(node));
        } else {
            throw Error(Errc::syntax, "unknown operator '" + op + "' at offset " +
                                          std::to_string(op_pos), op_pos);
        }
        expect(Token::rparen, "')'");
        advance();
        return id;
    }

    static int push(CwExpr& e, ExprNode&& n) {
        e.nodes.push_back(std::move(n));
        return static_cast<int>(e.nodes.size()) - 1;
    }

    Lexer lexer_;
    Mode mode_;
    Token cur_{Token::end, "", 0};
    std::unordered_set<std::string> seen_names_;
    int next_leaf_ = 0;
};

// Leaf ranges are contiguous because leaves are indexed left to right; each
// node's graph owns exactly the vertices [lo, hi).
struct Ranges {
    std::vector<int> lo, hi;
};

Ranges leaf_ranges(const CwExpr& e, const std::vector<int>& order) {
    Ranges r;
    r.lo.assign(e.nodes.size(), 0);
    r.hi.assign(e.nodes.size(), 0);
    for (int id : order) {
        const ExprNode& nd = e.node(id);
        size_t u = static_cast<size_t>(id);
        if (nd.op == Op::leaf) {
            r.lo[u] = nd.leaf_index;
            r.hi[u] = nd.leaf_index + 1;
        } else if (nd.op == Op::uni) {
            r.lo[u] = r.lo[static_cast<size_t>(nd.child)];
            r.hi[u] = r.hi[static_cast<size_t>(nd.right)];
        } else {
            r.lo[u] = r.lo[static_cast<size_t>(nd.child)];
            r.hi[u] = r.hi[static_cast<size_t>(nd.child)];
        }
    }
    return r;
}

// Bottom-up graph walk shared by evaluate and check_irredundant. `on_eta` sees
// the class lists before the edges of that node are inserted.
template <typename EtaFn>
LabeledGraph walk(const CwExpr& e, EtaFn on_eta) {
    LabeledGraph g;
    g.mode = e.mode;
    g.k = width(e);
    g.names.resize(static_cast<size_t>(e.leaf_count));
    g.labels.assign(static_cast<size_t>(e.leaf_count), 0);

    auto order = e.postorder();
    Ranges r = leaf_ranges(e, order);

    for (int id : order) {
        const ExprNode& nd = e.node(id);
        int lo = r.lo[static_cast<size_t>(id)], hi = r.hi[static_cast<size_t>(id)];
        switch (nd.op) {
            case Op::leaf:
                g.names[static_cast<size_t>(nd.leaf_index)] = nd.name;
                g.labels[static_cast<size_t>(nd.leaf_index)] = nd.a;
                break;
            case Op::rho:
                for (int v = lo; v < hi; ++v)
                    if (g.labels[static_cast<size_t>(v)] == nd.a) g.labels[static_cast<size_t>(v)] = nd.b;
                break;
            case Op::eta:
            case Op::arc: {
                std::vector<int> ci, cj;
                for (int v = lo; v < hi; ++v) {
                    if (g.labels[static_cast<size_t>(v)] == nd.a) ci.push_back(v);
                    if (g.labels[static_cast<size_t>(v)] == nd.b) cj.push_back(v);
                }
                long existing = 0;
                for (int u : ci)
                    for (int v : cj) {
                        int x = u, y = v;
                        if (nd.op == Op::eta && x > y) std::swap(x, y);
                        if (g.adjacency.count(pack_pair(x, y))) {
                            ++existing;
                        } else {
                            g.adjacency.insert(pack_pair(x, y));
                            g.edges.emplace_back(x, y);
                        }
                    }
                on_eta(id, nd, existing, static_cast<long>(ci.size()) * static_cast<long>(cj.size()));
                break;
            }
            case Op::uni:
                break;
        }
    }
    return g;
}

}  // namespace

std::vector<int> CwExpr::postorder() const {
    std::vector<int> out;
    out.reserve(nodes.size());
    if (root < 0) return out;
    // (node, children emitted yet?)
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        const ExprNode& nd = node(id);
        if (expanded || nd.op == Op::leaf) {
            out.push_back(id);
            continue;
        }
        stack.emplace_back(id, true);
        if (nd.op == Op::uni) stack.emplace_back(nd.right, false);
        stack.emplace_back(nd.child, false);
    }
    return out;
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (mode == Mode::undirected && u > v) std::swap(u, v);
    if (adjacency.empty() && !edges.empty()) {
        // graph built by hand without index_edges()
        return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
    }
    return adjacency.count(pack_pair(u, v)) > 0;
}

std::vector<int> LabeledGraph::class_vertices(int label) const {
    std::vector<int> out;
    for (int v = 0; v < n(); ++v)
        if (labels[static_cast<size_t>(v)] == label) out.push_back(v);
    return out;
}

void LabeledGraph::index_edges() {
    adjacency.clear();
    for (auto [u, v] : edges) {
        if (mode == Mode::undirected && u > v) std::swap(u, v);
        adjacency.insert(pack_pair(u, v));
    }
}

CwExpr parse(const std::string& text, Mode mode) { return Parser(text, mode).run(); }

std::string to_text(const CwExpr& e) {
    std::string out;
    // Explicit stack: generated expressions nest a few levels per vertex.
    struct Frame { int node; int stage; };
    std::vector<Frame> stack{{e.root, 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        const ExprNode& nd = e.node(f.node);
        if (f.stage == 0) {
            switch (nd.op) {
                case Op::leaf:
                    out += "(v " + std::to_string(nd.a) + " " + nd.name + ")";
                    stack.pop_back();
                    continue;
                case Op::rho: out += "(rho "; break;
                case Op::eta: out += "(eta "; break;
                case Op::arc: out += "(arc "; break;
                case Op::uni: out += "(union "; break;
            }
            if (nd.op != Op::uni) out += std::to_string(nd.a) + " " + std::to_string(nd.b) + " ";
            f.stage = 1;
            stack.push_back({nd.child, 0});
        } else if (f.stage == 1 && nd.op == Op::uni) {
            out += " ";
            f.stage = 2;
            stack.push_back({nd.right, 0});
        } else {
            out += ")";
            stack.pop_back();
        }
    }
    return out;
}

int width(const CwExpr& e) {
    int w = 0;
    for (const ExprNode& nd : e.nodes) {
        w = std::max(w, nd.a);
        if (nd.op != Op::leaf && nd.op != Op::uni) w = std::max(w, nd.b);
    }
    return w;
}

LabeledGraph evaluate(const CwExpr& e) {
    return walk(e, [](int, const ExprNode&, long, long) {});
}

bool IrredundancyReport::has_partially_redundant() const {
    return std::any_of(flagged.begin(), flagged.end(), [](const EtaReport& r) {
        return r.status == EtaStatus::partially_redundant;
    });
}

IrredundancyReport check_irredundant(const CwExpr& e) {
    IrredundancyReport report;
    walk(e, [&](int id, const ExprNode& nd, long existing, long possible) {
        if (existing == 0) return;  // clean, including empty classes
        EtaReport r;
        r.node = id;
        r.i = nd.a;
        r.j = nd.b;
        r.existing_pairs = existing;
        r.possible_pairs = possible;
        r.status = existing == possible ? EtaStatus::fully_redundant : EtaStatus::partially_redundant;
        report.flagged.push_back(r);
    });
    return report;
}

CwExpr normalize(const CwExpr& e) {
    IrredundancyReport report = check_irredundant(e);
    std::unordered_map<int, EtaStatus> status;
    for (const EtaReport& r : report.flagged) {
        if (r.status == EtaStatus::partially_redundant)
            throw Error(Errc::partially_redundant,
                        "eta/arc node " + std::to_string(r.node) + " (" + std::to_string(r.i) + "," +
                            std::to_string(r.j) + ") adds only part of its class pairs");
        status[r.node] = r.status;
    }

    CwExpr out;
    out.mode = e.mode;
    out.leaf_count = e.leaf_count;
    std::vector<int> remap(e.nodes.size(), -1);
    for (int id : e.postorder()) {
        const ExprNode& nd = e.node(id);
        if ((nd.op == Op::eta || nd.op == Op::arc) && status.count(id)) {
            remap[static_cast<size_t>(id)] = remap[static_cast<size_t>(nd.child)];  // splice out
            continue;
        }
        ExprNode copy = nd;
        if (nd.op != Op::leaf) copy.child = remap[static_cast<size_t>(nd.child)];
        if (nd.op == Op::uni) copy.right = remap[static_cast<size_t>(nd.right)];
        out.nodes.push_back(std::move(copy));
        remap[static_cast<size_t>(id)] = static_cast<int>(out.nodes.size()) - 1;
    }
    out.root = remap[static_cast<size_t>(e.root)];
    return out;
}

}  // namespace cwham

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cwham {

enum class Errc {
    syntax,                // malformed expression text
    duplicate_vertex,      // leaf name used twice
    wrong_mode_operator,   // eta in directed mode / arc in undirected mode
    equal_labels,          // i == j in rho/eta/arc
    partially_redundant,   // normalize cannot repair this node
    not_irredundant,       // solver fed a redundant eta/arc
    mismatched_k,          // multigraph merge with different slot counts
    no_trail,              // find_trail precondition violated
    too_large,             // oracle size cap exceeded
    bad_parameters,        // generator / API misuse
    internal,              // invariant violation; signals a bug
};

struct Error : std::runtime_error {
    Errc code;
    std::size_t pos;  // byte offset into the source text, when meaningful

    Error(Errc c, const std::string& msg, std::size_t p = 0)
        : std::runtime_error(msg), code(c), pos(p) {}
};

}  // namespace cwham

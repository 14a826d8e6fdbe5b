#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scatspec/term.hpp"

namespace scatspec {

enum class NodeLabel : std::uint8_t { One, Plus, Omega, OmegaStar };

std::string label_text(NodeLabel label);  // "1", "+", "w", "w*"

// The labelled ordered rooted tree view of a canonical term: a leaf for One,
// a +-node whose outgoing edges carry iota indices 0..k for a finite sum,
// and an omega/omega*-node with a single block subtree for an (empty-prefix)
// omega-sum. Nodes are stored in BFS order.
struct SigmaTree {
    struct Node {
        NodeLabel label = NodeLabel::One;
        std::vector<std::uint32_t> children;
        // Structure data of the corresponding subterm, precomputed for the
        // oracle's interval tests.
        std::optional<std::uint64_t> subterm_size;
        TailDescriptor subterm_tails;
    };

    std::vector<Node> nodes;  // empty for the Zero term; node 0 is the root

    bool empty() const { return nodes.empty(); }
    unsigned height() const;  // vertices on a longest root-to-leaf branch
};

SigmaTree sigma_tree(const ChainTerm& term);

// An (n,sigma)-type: the BFS-renumbered tree induced by the branches of
// sigma hit by an n-point embedding, with omega-edge labels erased and iota
// labels kept. Vertex ids coincide with BFS order; leaves are labelled 1.
struct TypeTree {
    struct Node {
        NodeLabel label = NodeLabel::One;
        std::vector<std::uint32_t> children;
        std::vector<std::uint32_t> iota;  // parallel to children, +-nodes only
    };

    std::vector<Node> nodes;

    static TypeTree leaf();
    // Grafts child types under a fresh root and renumbers in BFS order.
    // iota must be given exactly for Plus roots.
    static TypeTree compose(NodeLabel root, const std::vector<TypeTree>& children,
                            const std::vector<std::uint32_t>& iota = {});

    unsigned leaf_count() const;
    unsigned height() const;
    bool bfs_numbered() const;

    int cmp(const TypeTree& other) const;
    bool operator==(const TypeTree& other) const { return cmp(other) == 0; }
    bool operator<(const TypeTree& other) const { return cmp(other) < 0; }

    // Compact text form, e.g. "+(i0:w(1,1),i2:1)".
    std::string text() const;
};

// Out-degrees of the omega/omega*-labelled vertices in BFS order.
std::vector<unsigned> omega_outdegrees(const TypeTree& type);

// The complete duplicate-free list of (n,sigma)-types realizable in the
// chain the term denotes, for n >= 1. The Zero term realizes none.
std::vector<TypeTree> enumerate_types(const ChainTerm& term, unsigned n);

std::size_t count_types(const ChainTerm& term, unsigned n);

}  // namespace scatspec

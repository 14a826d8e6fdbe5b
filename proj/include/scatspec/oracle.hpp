#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "scatspec/term.hpp"
#include "scatspec/types.hpp"

namespace scatspec {

// Finite prefix materialization of a term: every empty-prefix omega-sum
// contributes its first N blocks (omega*: last N), recursively. Positions
// are listed in chain order; each carries its root-to-leaf path through the
// sigma-tree with concrete block indices at omega/omega*-nodes and iota
// indices at +-nodes.
struct FiniteExpansion {
    struct Step {
        std::uint32_t node;  // sigma-tree node the step leaves
        std::uint32_t edge;  // iota index at Plus, block index at omega kinds
        auto operator<=>(const Step&) const = default;
    };
    using Address = std::vector<Step>;

    SigmaTree sigma;
    unsigned depth = 0;
    std::vector<Address> addresses;

    std::size_t size() const { return addresses.size(); }
};

FiniteExpansion expand(const ChainTerm& term, unsigned depth);

// The type of the embedding selecting the given positions: the induced
// subtree of the sigma-tree, BFS-renumbered, omega-edge labels erased.
TypeTree classify_embedding(const FiniteExpansion& exp, const std::vector<std::size_t>& points);

// Types realized by all n-subsets of the depth-N expansion.
std::set<TypeTree> realized_types(const ChainTerm& term, unsigned n, unsigned depth);

// Whether the interval between two expansion positions is finite in the
// denoted (infinite) chain, decided structurally from subterm sizes. This
// is the term-level theta-class test.
bool interval_finite_by_structure(const FiniteExpansion& exp, std::size_t a, std::size_t b);

// Number of distinct joint order patterns of tuples of strictly increasing
// sequences of lengths m over a ground set {1..ground}, by exhaustive
// enumeration. Stable once ground >= sum(m).
std::uint64_t brute_pattern_count(const std::vector<unsigned>& m, unsigned ground);

// True iff every k-coloring of the n-subsets of {1..N} admits a
// monochromatic m-subset. Exhaustive; guarded to desk scale
// (C(N,n)*log2(k) <= 24). The default entry point splits the coloring
// space across threads; the serial variant is the reference.
bool ramsey_check(unsigned N, unsigned n, unsigned k, unsigned m);
bool ramsey_check_serial(unsigned N, unsigned n, unsigned k, unsigned m);

enum class WitnessVerdict : std::uint8_t { Holds, Fails, Inconclusive };

// Lower-bound check at scale N for the family omega + r (and its reverse):
// colors n-subsets of the expansion by their tail type and tests whether
// every block-respecting copy of the depth-(N-1) expansion realizes at
// least t colors.
WitnessVerdict witness_lower_bound(const ChainTerm& term, unsigned n, unsigned t, unsigned N);

}  // namespace scatspec

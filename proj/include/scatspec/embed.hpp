#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "scatspec/term.hpp"

namespace scatspec {

enum class Outcome : std::uint8_t { Yes, Unknown };

// Verdict of the sound-but-incomplete embeddability check. Yes carries the
// chain of rule names that certified it; Unknown never asserts
// non-embeddability.
struct EmbedVerdict {
    Outcome outcome = Outcome::Unknown;
    std::vector<std::string> trace;

    bool yes() const { return outcome == Outcome::Yes; }
};

struct EmbedOptions {
    // Bound on R6/R9 unrolling of omega-sum targets into finite block runs.
    unsigned unroll_depth = 4;
    // Overall recursion budget; exhaustion yields Unknown, never an error.
    unsigned max_depth = 256;
};

// Sound check for "a embeds into b". Inputs are canonicalized internally.
EmbedVerdict embeds(const ChainTerm& a, const ChainTerm& b, const EmbedOptions& opts = {});

// Yes iff both embeds directions are Yes.
EmbedVerdict equivalent(const ChainTerm& a, const ChainTerm& b, const EmbedOptions& opts = {});

// A cofinite restriction of block index sets: the finitely many indices to
// drop from every omega/omega*-sum. Iota-labelled (finite sum) children are
// always kept.
struct RestrictionSpec {
    std::set<std::uint32_t> dropped;
};

// Applies the restriction uniformly to every omega-sum node of the term as
// given: prefix entries whose block index is dropped are removed; indices
// addressing the constant tail are a no-op. The result is canonical.
ChainTerm restrict_term(const ChainTerm& term, const RestrictionSpec& spec);

// Per omega-sum-node verdicts for the grammar condition that block chains
// embed forward: p_0 into p_1 into ... into the repeat.
struct IncreasingReport {
    struct Entry {
        std::string path;  // child indices from the root, "/"-separated
        Outcome holds = Outcome::Yes;
    };
    std::vector<Entry> entries;

    bool all_hold() const;
};

IncreasingReport check_increasing(const ChainTerm& term, const EmbedOptions& opts = {});

// Checks the restriction-equivalence guarantee: term and its restriction
// embed into each other.
EmbedVerdict lemma_eq_check(const ChainTerm& term, const RestrictionSpec& spec,
                            const EmbedOptions& opts = {});

}  // namespace scatspec

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scatspec {

enum class TermKind : std::uint8_t { Zero, One, FinSum, OmegaSum, OmegaStarSum };

// A countable scattered chain of finite rank, as a finite syntactic term.
//
//   Zero          -- the empty chain
//   One           -- the one-element chain
//   FinSum        -- A_0 + ... + A_k (k >= 1)
//   OmegaSum      -- sum over k in omega of B_k, where B_k runs through a
//                    finite prefix and then repeats a fixed block forever
//   OmegaStarSum  -- the same blocks indexed by omega*; the block with the
//                    largest index is leftmost, so prefix[0] is the
//                    RIGHTMOST block of the chain
//
// Values are immutable; all operations below are pure.
class ChainTerm {
public:
    static ChainTerm zero();
    static ChainTerm one();
    // The finite chain with n points (Zero / One / FinSum of n Ones).
    static ChainTerm finite(std::uint64_t n);
    // Requires at least two summands.
    static ChainTerm fin_sum(std::vector<ChainTerm> parts);
    // Requires a repeat block with a nonempty denotation.
    static ChainTerm omega_sum(std::vector<ChainTerm> prefix, ChainTerm repeat);
    static ChainTerm omega_star_sum(std::vector<ChainTerm> prefix, ChainTerm repeat);

    TermKind kind() const noexcept { return kind_; }
    bool is_omega_kind() const noexcept {
        return kind_ == TermKind::OmegaSum || kind_ == TermKind::OmegaStarSum;
    }

    // FinSum summands.
    const std::vector<ChainTerm>& children() const;
    // Omega-sum views: parts_ stores prefix entries followed by the repeat.
    std::span<const ChainTerm> prefix() const;
    const ChainTerm& repeat() const;

    int cmp(const ChainTerm& other) const;
    bool operator==(const ChainTerm& other) const { return cmp(other) == 0; }
    bool operator!=(const ChainTerm& other) const { return cmp(other) != 0; }
    bool operator<(const ChainTerm& other) const { return cmp(other) < 0; }

    std::size_t node_count() const;

private:
    ChainTerm(TermKind kind, std::vector<ChainTerm> parts)
        : kind_(kind), parts_(std::move(parts)) {}

    TermKind kind_ = TermKind::Zero;
    std::vector<ChainTerm> parts_;
};

enum class Tail : std::uint8_t { Fin, Inf };

// Finiteness of the two ends of a chain: `right == Fin` means some final
// segment {b : b >= x} is finite; symmetric on the left. Drives the
// condensation fusion rules at summand boundaries.
struct TailDescriptor {
    Tail left = Tail::Fin;
    Tail right = Tail::Fin;

    TailDescriptor swapped() const { return {right, left}; }
    bool operator==(const TailDescriptor&) const = default;
};

// Parses a chain expression. Grammar:
//   term   := sum
//   sum    := atom ("+" atom)*
//   atom   := "0" | "1" | NAT | "w[" blocks "]" | "w*[" blocks "]"
//           | "w^(" signs ")" | "rev(" term ")" | "(" term ")"
//   blocks := term (";" term)*      -- last entry is the repeat block
//   signs  := ("+"|"-") ("," ("+"|"-"))*
// NAT >= 2 is finite-chain sugar; "rev" and "w^" expand eagerly.
// Throws ParseError with a position on malformed input.
ChainTerm parse(std::string_view text);

// Prints a term so that parse(print(t)) == t structurally.
std::string print(const ChainTerm& term);

// Rewrites to canonical form denoting an order-isomorphic chain: no Zero
// children, no FinSum nested in FinSum, single-summand sums collapsed, and
// omega-sum prefixes hoisted out so every omega-sum has an empty prefix.
ChainTerm canonicalize(const ChainTerm& term);

// The reversed chain; an involution swapping the two omega-sum kinds.
ChainTerm reverse(const ChainTerm& term);

// End finiteness of the denoted chain.
TailDescriptor tails(const ChainTerm& term);

// Cardinality of the denoted chain when finite.
std::optional<std::uint64_t> size_if_finite(const ChainTerm& term);

// True for canonical terms denoting a finite chain (Zero, One, sums of One).
bool is_finite_chain(const ChainTerm& term);

namespace detail {
// Sum combinator used by rewrite steps: flattens FinSum parts, drops parts
// with empty denotation, and collapses empty/singleton sums. Does not
// recurse into the parts.
ChainTerm normalized_sum(std::vector<ChainTerm> parts);
}  // namespace detail

}  // namespace scatspec

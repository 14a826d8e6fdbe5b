#include "scatspec/condense.hpp"

#include <utility>

#include "scatspec/errors.hpp"

namespace scatspec {

namespace {

// Removes the maximal point. Requires a chain whose right tail is finite
// (so a maximal point exists).
ChainTerm drop_last(const ChainTerm& term) {
    switch (term.kind()) {
        case TermKind::One:
            return ChainTerm::zero();
        case TermKind::FinSum: {
            std::vector<ChainTerm> parts = term.children();
            parts.back() = drop_last(parts.back());
            return detail::normalized_sum(std::move(parts));
        }
        case TermKind::OmegaStarSum: {
            // Only the rightmost block loses its maximum; omega*-many full
            // blocks remain to the left.
            ChainTerm rest = drop_last(term.repeat());
            return detail::normalized_sum(
                {ChainTerm::omega_star_sum({}, term.repeat()), std::move(rest)});
        }
        default:
            throw DomainError("no-max", "chain has no maximal point");
    }
}

ChainTerm drop_first(const ChainTerm& term) { return reverse(drop_last(reverse(term))); }

ChainTerm condense_canonical(const ChainTerm& term) {
    // (a) finite chains collapse to a point.
    if (is_finite_chain(term)) {
        if (term.kind() == TermKind::Zero)
            throw DomainError("empty-chain", "cannot condense the empty chain");
        return ChainTerm::one();
    }
    switch (term.kind()) {
        case TermKind::FinSum: {
            // (b) condense summands; adjacent boundary classes fuse exactly
            // when the facing tails are both finite. Fusions compose along
            // runs because the merged point is the new rightmost class.
            const auto& parts = term.children();
            ChainTerm acc = condense_canonical(parts[0]);
            for (std::size_t i = 1; i < parts.size(); ++i) {
                ChainTerm next = condense_canonical(parts[i]);
                bool fuse = tails(parts[i - 1]).right == Tail::Fin &&
                            tails(parts[i]).left == Tail::Fin;
                if (fuse) {
                    // Spell the merged boundary class as an explicit middle
                    // point; reverse(drop_last(x)) == drop_first(reverse(x))
                    // makes this spelling reverse-equivariant.
                    acc = detail::normalized_sum({drop_last(std::move(acc)), ChainTerm::one(),
                                                  drop_first(next)});
                } else {
                    acc = detail::normalized_sum({std::move(acc), std::move(next)});
                }
            }
            return acc;
        }
        case TermKind::OmegaSum: {
            const ChainTerm& block = term.repeat();
            // (c) finitely many points per block: one theta-class in total.
            if (is_finite_chain(block)) return ChainTerm::one();
            TailDescriptor bt = tails(block);
            // (d) no fusion across block boundaries.
            if (bt.right == Tail::Inf || bt.left == Tail::Inf)
                return ChainTerm::omega_sum({}, condense_canonical(block));
            // (e) both facing tails finite: the last class of each block
            // fuses with the first class of the next. fin(block) has at
            // least two points here (an infinite chain with two finite
            // tails is not a single theta-class).
            ChainTerm fb = condense_canonical(block);
            ChainTerm middle = drop_first(drop_last(fb));
            ChainTerm rep = detail::normalized_sum({std::move(middle), ChainTerm::one()});
            return detail::normalized_sum(
                {ChainTerm::one(), ChainTerm::omega_sum({}, std::move(rep))});
        }
        case TermKind::OmegaStarSum:
            // (f) by reversal symmetry of the theta relation.
            return reverse(condense_canonical(reverse(term)));
        default:
            throw DomainError("internal", "unexpected term kind in condensation");
    }
}

}  // namespace

ChainTerm fin_condense(const ChainTerm& term) {
    ChainTerm t = canonicalize(term);
    if (t.kind() == TermKind::Zero)
        throw DomainError("empty-chain", "cannot condense the empty chain");
    return canonicalize(condense_canonical(t));
}

std::vector<ChainTerm> condensation_steps(const ChainTerm& term) {
    ChainTerm t = canonicalize(term);
    if (t.kind() == TermKind::Zero)
        throw DomainError("empty-chain", "cannot condense the empty chain");
    std::vector<ChainTerm> steps{t};
    while (steps.back().kind() != TermKind::One) {
        steps.push_back(fin_condense(steps.back()));
        if (steps.size() > 10000)
            throw DomainError("internal", "condensation failed to terminate");
    }
    return steps;
}

unsigned fc_rank(const ChainTerm& term) {
    return static_cast<unsigned>(condensation_steps(term).size() - 1);
}

unsigned hausdorff_rank(const ChainTerm& term) { return fc_rank(term); }

}  // namespace scatspec

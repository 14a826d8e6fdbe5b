#include "scatspec/embed.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "scatspec/errors.hpp"

namespace scatspec {

namespace {

using TermPair = std::pair<ChainTerm, ChainTerm>;

struct Search {
    EmbedOptions opts;
    std::map<TermPair, EmbedVerdict> memo;
    std::set<TermPair> in_progress;

    // Concatenation of m copies of the block, canonicalized.
    ChainTerm unrolled(const ChainTerm& block, unsigned m) const {
        std::vector<ChainTerm> parts(m, block);
        return canonicalize(detail::normalized_sum(std::move(parts)));
    }

    EmbedVerdict yes(std::string rule, std::vector<std::string> inner = {}) const {
        EmbedVerdict v;
        v.outcome = Outcome::Yes;
        v.trace.push_back(std::move(rule));
        for (auto& r : inner) v.trace.push_back(std::move(r));
        return v;
    }

    EmbedVerdict run(const ChainTerm& a, const ChainTerm& b, unsigned depth) {
        if (depth > opts.max_depth) return {};
        TermPair key{a, b};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (!in_progress.insert(key).second) return {};
        EmbedVerdict v = rules(a, b, depth);
        if (!v.yes()) {
            // R8: every rule may also be applied to the reversed pair.
            EmbedVerdict r = rules(reverse(a), reverse(b), depth);
            if (r.yes()) v = yes("R8", std::move(r.trace));
        }
        in_progress.erase(key);
        memo.emplace(std::move(key), v);
        return v;
    }

    EmbedVerdict rules(const ChainTerm& a, const ChainTerm& b, unsigned depth) {
        // R1: structural equality.
        if (a == b) return yes("R1");
        auto sa = size_if_finite(a);
        auto sb = size_if_finite(b);
        // R2: the empty chain embeds anywhere; a point embeds in any
        // nonempty chain.
        if (sa == std::uint64_t{0}) return yes("R2");
        if (a.kind() == TermKind::One && sb != std::uint64_t{0}) return yes("R2");
        // R3: a finite chain embeds in anything at least as large.
        if (sa && (!sb || *sb >= *sa)) return yes("R3");

        // R4: finite sums via a strictly increasing child assignment.
        if (a.kind() == TermKind::FinSum && b.kind() == TermKind::FinSum) {
            if (auto v = match_children(a.children(), b.children(), depth); v.yes())
                return yes("R4", std::move(v.trace));
        }
        // R5: blockwise, for matching sum kinds.
        if (a.is_omega_kind() && a.kind() == b.kind()) {
            if (auto v = run(a.repeat(), b.repeat(), depth + 1); v.yes())
                return yes("R5", std::move(v.trace));
        }
        // R6: into a bounded unrolling of the target's blocks.
        if (b.is_omega_kind() && b.prefix().empty()) {
            for (unsigned m = 1; m <= opts.unroll_depth; ++m) {
                if (auto v = run(a, unrolled(b.repeat(), m), depth + 1); v.yes())
                    return yes("R6", std::move(v.trace));
            }
        }
        // R7: into a single summand of the target.
        if (b.kind() == TermKind::FinSum) {
            for (const auto& bj : b.children()) {
                if (auto v = run(a, bj, depth + 1); v.yes()) return yes("R7", std::move(v.trace));
            }
        }
        // R9: prefix absorption. A sum ending in an omega-sum embeds in an
        // omega-sum target if the leading summands fit in finitely many
        // blocks and the tail embeds in the (isomorphic) shifted target.
        if (a.kind() == TermKind::FinSum && b.kind() == TermKind::OmegaSum &&
            b.prefix().empty()) {
            std::vector<ChainTerm> lead(a.children().begin(), a.children().end() - 1);
            ChainTerm head = detail::normalized_sum(std::move(lead));
            if (auto tail = run(a.children().back(), b, depth + 1); tail.yes()) {
                for (unsigned m = 1; m <= opts.unroll_depth; ++m) {
                    if (auto v = run(head, unrolled(b.repeat(), m), depth + 1); v.yes())
                        return yes("R9", std::move(v.trace));
                }
            }
        }
        return {};
    }

    EmbedVerdict match_children(const std::vector<ChainTerm>& as, const std::vector<ChainTerm>& bs,
                                unsigned depth) {
        // match(i, j): can as[i..] be assigned to bs[j..] order-preservingly.
        std::vector<std::vector<int>> cache(as.size() + 1,
                                            std::vector<int>(bs.size() + 1, -1));
        auto match = [&](auto&& self, std::size_t i, std::size_t j) -> bool {
            if (i == as.size()) return true;
            if (as.size() - i > bs.size() - j) return false;
            int& slot = cache[i][j];
            if (slot >= 0) return slot != 0;
            bool ok = (run(as[i], bs[j], depth + 1).yes() && self(self, i + 1, j + 1)) ||
                      self(self, i, j + 1);
            slot = ok ? 1 : 0;
            return ok;
        };
        if (match(match, 0, 0)) return yes("R4-map");
        return {};
    }
};

}  // namespace

EmbedVerdict embeds(const ChainTerm& a, const ChainTerm& b, const EmbedOptions& opts) {
    Search s{opts, {}, {}};
    return s.run(canonicalize(a), canonicalize(b), 0);
}

EmbedVerdict equivalent(const ChainTerm& a, const ChainTerm& b, const EmbedOptions& opts) {
    EmbedVerdict fwd = embeds(a, b, opts);
    if (!fwd.yes()) return {};
    EmbedVerdict bwd = embeds(b, a, opts);
    if (!bwd.yes()) return {};
    EmbedVerdict v;
    v.outcome = Outcome::Yes;
    v.trace.push_back("forward:");
    v.trace.insert(v.trace.end(), fwd.trace.begin(), fwd.trace.end());
    v.trace.push_back("backward:");
    v.trace.insert(v.trace.end(), bwd.trace.begin(), bwd.trace.end());
    return v;
}

ChainTerm restrict_term(const ChainTerm& term, const RestrictionSpec& spec) {
    switch (term.kind()) {
        case TermKind::Zero:
        case TermKind::One:
            return term;
        case TermKind::FinSum: {
            // Iota-labelled children are always kept.
            std::vector<ChainTerm> parts;
            parts.reserve(term.children().size());
            for (const auto& c : term.children()) parts.push_back(restrict_term(c, spec));
            return canonicalize(detail::normalized_sum(std::move(parts)));
        }
        case TermKind::OmegaSum:
        case TermKind::OmegaStarSum: {
            std::vector<ChainTerm> prefix;
            for (std::size_t k = 0; k < term.prefix().size(); ++k) {
                if (spec.dropped.contains(static_cast<std::uint32_t>(k))) continue;
                prefix.push_back(restrict_term(term.prefix()[k], spec));
            }
            // Dropped indices at or beyond the prefix address the constant
            // tail; removing finitely many repeats is a no-op.
            ChainTerm rep = restrict_term(term.repeat(), spec);
            ChainTerm result = term.kind() == TermKind::OmegaSum
                                   ? ChainTerm::omega_sum(std::move(prefix), std::move(rep))
                                   : ChainTerm::omega_star_sum(std::move(prefix), std::move(rep));
            return canonicalize(result);
        }
    }
    return term;  // unreachable
}

namespace {

void check_increasing_walk(const ChainTerm& term, const std::string& path,
                           const EmbedOptions& opts, IncreasingReport& report) {
    if (term.kind() == TermKind::FinSum) {
        for (std::size_t i = 0; i < term.children().size(); ++i)
            check_increasing_walk(term.children()[i], path + "/" + std::to_string(i), opts,
                                  report);
        return;
    }
    if (!term.is_omega_kind()) return;
    Outcome holds = Outcome::Yes;
    auto prefix = term.prefix();
    for (std::size_t k = 0; k + 1 <= prefix.size(); ++k) {
        const ChainTerm& next = (k + 1 < prefix.size()) ? prefix[k + 1] : term.repeat();
        if (!embeds(prefix[k], next, opts).yes()) {
            holds = Outcome::Unknown;
            break;
        }
    }
    report.entries.push_back({path, holds});
    for (std::size_t k = 0; k < prefix.size(); ++k)
        check_increasing_walk(prefix[k], path + "/" + std::to_string(k), opts, report);
    check_increasing_walk(term.repeat(), path + "/" + std::to_string(prefix.size()), opts,
                          report);
}

}  // namespace

bool IncreasingReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.holds == Outcome::Yes; });
}

IncreasingReport check_increasing(const ChainTerm& term, const EmbedOptions& opts) {
    IncreasingReport report;
    check_increasing_walk(term, "", opts, report);
    return report;
}

namespace {

// The shift argument behind the restriction-equivalence guarantee: block i
// of an omega-sum maps to the i-th kept block, whose index v_i >= i, and
// B_i embeds there by chaining the one-step facts B_j into B_{j+1} that the
// increasing condition certifies. Unknown anywhere aborts the route.
bool forward_shift(const ChainTerm& term, const RestrictionSpec& spec, const EmbedOptions& opts) {
    switch (term.kind()) {
        case TermKind::Zero:
        case TermKind::One:
            return true;
        case TermKind::FinSum: {
            for (const auto& c : term.children())
                if (!forward_shift(c, spec, opts)) return false;
            return true;
        }
        case TermKind::OmegaSum:
        case TermKind::OmegaStarSum: {
            auto prefix = term.prefix();
            auto block = [&](std::size_t j) -> const ChainTerm& {
                return j < prefix.size() ? prefix[j] : term.repeat();
            };
            std::vector<std::size_t> kept;
            for (std::size_t j = 0; j < prefix.size(); ++j)
                if (!spec.dropped.contains(static_cast<std::uint32_t>(j))) kept.push_back(j);
            for (std::size_t i = 0; i < prefix.size(); ++i) {
                std::size_t target = i < kept.size() ? kept[i] : prefix.size() + (i - kept.size());
                for (std::size_t j = i; j < target; ++j)
                    if (!embeds(block(j), block(j + 1), opts).yes()) return false;
                if (!forward_shift(block(target), spec, opts)) return false;
            }
            return forward_shift(term.repeat(), spec, opts);
        }
    }
    return false;  // unreachable
}

}  // namespace

EmbedVerdict lemma_eq_check(const ChainTerm& term, const RestrictionSpec& spec,
                            const EmbedOptions& opts) {
    ChainTerm restricted = restrict_term(term, spec);
    EmbedVerdict backward = embeds(restricted, term, opts);
    if (backward.yes() && forward_shift(term, spec, opts)) {
        EmbedVerdict v;
        v.outcome = Outcome::Yes;
        v.trace.push_back("forward: lemma-eq-shift");
        v.trace.push_back("backward:");
        v.trace.insert(v.trace.end(), backward.trace.begin(), backward.trace.end());
        return v;
    }
    return equivalent(term, restricted, opts);
}

}  // namespace scatspec

#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "scatspec/embed.hpp"
#include "scatspec/oracle.hpp"
#include "scatspec/term.hpp"

using namespace scatspec;

TEST_CASE("embeds: certified examples") {
    CHECK(embeds(parse("w[1]"), parse("w*[1] + w[1]")).yes());
    CHECK(embeds(parse("w[1]"), parse("w[w[1]]")).yes());
    CHECK(embeds(parse("1 + w[1]"), parse("w[1]")).yes());
    CHECK(embeds(parse("w*[1] + 1"), parse("w*[1]")).yes());
    CHECK(embeds(parse("5"), parse("w[1]")).yes());
    CHECK(embeds(parse("0"), parse("1")).yes());
    CHECK(embeds(parse("w[1] + w[1]"), parse("w[w[1]]")).yes());
    CHECK(embeds(parse("w[1] + 2"), parse("w[1] + 3")).yes());
}

TEST_CASE("embeds: soundness on non-embeddable pairs") {
    // these must never come back Yes
    CHECK(!embeds(parse("w[1] + 1"), parse("w[1]")).yes());
    CHECK(!embeds(parse("w[1]"), parse("w*[1]")).yes());
    CHECK(!embeds(parse("w[1]"), parse("5")).yes());
    CHECK(!embeds(parse("w*[1] + w[1]"), parse("w[1]")).yes());
    CHECK(!embeds(parse("w[w[1]]"), parse("w[1]")).yes());
    CHECK(!embeds(parse("3"), parse("2")).yes());
}

TEST_CASE("embeds: complete on finite chains") {
    // for finite denotations embeddability is exactly size comparison
    std::mt19937 rng(501);
    auto finite_terms = testgen::corpus(200, 2, 47);
    for (std::size_t i = 0; i + 1 < finite_terms.size(); i += 2) {
        auto sa = size_if_finite(finite_terms[i]);
        auto sb = size_if_finite(finite_terms[i + 1]);
        if (!sa || !sb) continue;
        CAPTURE(print(finite_terms[i]));
        CAPTURE(print(finite_terms[i + 1]));
        CHECK(embeds(finite_terms[i], finite_terms[i + 1]).yes() == (*sa <= *sb));
    }
}

TEST_CASE("embeds: exhausted budgets yield Unknown, never an exception") {
    EmbedOptions tight;
    tight.max_depth = 0;
    CHECK(!embeds(parse("w[1]"), parse("w*[1] + w[1]"), tight).yes());
    CHECK(embeds(parse("w[1]"), parse("w[1]"), tight).yes());  // R1 needs no recursion

    // five omega-blocks need an unrolling of four; three is not enough
    EmbedOptions shallow;
    shallow.unroll_depth = 3;
    ChainTerm five = parse("w[1]+w[1]+w[1]+w[1]+w[1]");
    CHECK(embeds(five, parse("w[w[1]]")).yes());
    CHECK(!embeds(five, parse("w[w[1]]"), shallow).yes());
}

TEST_CASE("equivalent: examples") {
    CHECK(equivalent(parse("1 + w[1]"), parse("w[1]")).yes());
    CHECK(!equivalent(parse("w[1]"), parse("w*[1]")).yes());
    for (const auto& t : testgen::corpus(60, 2, 3)) {
        CAPTURE(print(t));
        CHECK(equivalent(t, t).yes());
    }
}

TEST_CASE("embeds: reversal invariance") {
    auto terms = testgen::corpus(40, 2, 11);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
        const auto& a = terms[i];
        const auto& b = terms[i + 1];
        CAPTURE(print(a));
        CAPTURE(print(b));
        CHECK(embeds(a, b).yes() == embeds(reverse(a), reverse(b)).yes());
    }
}

TEST_CASE("embeds: Yes verdicts pass the finite-size audit") {
    // If a truly embeds in b then every truncation of a fits inside some
    // truncation of b; the greedy order embedding exists iff the sizes fit.
    auto terms = testgen::corpus(120, 2, 17);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
        ChainTerm a = canonicalize(terms[i]);
        ChainTerm b = canonicalize(terms[i + 1]);
        if (a.node_count() + b.node_count() > 6) continue;
        if (!embeds(a, b).yes()) continue;
        CAPTURE(print(a));
        CAPTURE(print(b));
        for (unsigned N : {3u, 5u}) {
            std::size_t need = expand(a, N).size();
            bool fits = false;
            for (unsigned Np = N; Np <= 12 && !fits; ++Np) fits = expand(b, Np).size() >= need;
            CHECK(fits);
        }
    }
}

TEST_CASE("restrict: examples") {
    RestrictionSpec drop012{{0, 1, 2}};
    CHECK(restrict_term(parse("w[1]"), drop012) == parse("w[1]"));
    CHECK(restrict_term(parse("w[3; 1]"), RestrictionSpec{{0}}) == parse("w[1]"));
    CHECK(restrict_term(parse("w[1] + 2"), RestrictionSpec{{5}}) == canonicalize(parse("w[1] + 2")));
    CHECK(restrict_term(parse("w[1; 2; w[1]]"), RestrictionSpec{{1}}) ==
          canonicalize(parse("w[1; w[1]]")));
    // restriction reaches omega-sums on every level, with the same index set
    CHECK(restrict_term(parse("w[w[3; 1]]"), RestrictionSpec{{0}}) == parse("w[w[1]]"));
}

TEST_CASE("restrict: identity and embedding back") {
    std::mt19937 rng(123);
    for (const auto& t : testgen::corpus(150, 3, 29)) {
        CAPTURE(print(t));
        CHECK(restrict_term(t, RestrictionSpec{}) == canonicalize(t));
        RestrictionSpec spec;
        std::uniform_int_distribution<int> idx(0, 3);
        for (int j = 0; j < 2; ++j) spec.dropped.insert(static_cast<std::uint32_t>(idx(rng)));
        CHECK(embeds(restrict_term(t, spec), t).yes());
    }
}

TEST_CASE("check_increasing: per-node verdicts") {
    CHECK(check_increasing(parse("w[1; w[1]]")).all_hold());
    CHECK(!check_increasing(parse("w[w[1]; 1]")).all_hold());
    CHECK(check_increasing(parse("w[5]")).all_hold());
    CHECK(check_increasing(parse("w[1]")).all_hold());
    auto report = check_increasing(parse("w[1; w[1]] + w[w[1]; 1]"));
    REQUIRE(report.entries.size() >= 2);
    CHECK(report.entries[0].holds == Outcome::Yes);
    CHECK(!report.all_hold());
}

TEST_CASE("lemma_eq_check: restriction equivalence") {
    CHECK(lemma_eq_check(parse("w[1]"), RestrictionSpec{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}).yes());
    CHECK(lemma_eq_check(parse("w[w[1]]"), RestrictionSpec{{1, 3}}).yes());
    CHECK(lemma_eq_check(parse("w[1; w[1]]"), RestrictionSpec{{0}}).yes());
    CHECK(lemma_eq_check(parse("w[1; 2; w[1]]"), RestrictionSpec{{0, 1}}).yes());
    CHECK(lemma_eq_check(parse("w*[1; w*[1]]"), RestrictionSpec{{0}}).yes());
}

TEST_CASE("lemma_eq_check: certified increasing condition forces Yes") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> idx(0, 3);
    unsigned certified = 0;
    for (const auto& t : testgen::corpus(250, 3, 63)) {
        if (!check_increasing(t).all_hold()) continue;
        ++certified;
        RestrictionSpec spec;
        for (int j = 0; j < 2; ++j) spec.dropped.insert(static_cast<std::uint32_t>(idx(rng)));
        CAPTURE(print(t));
        CHECK(lemma_eq_check(t, spec).yes());
    }
    CHECK(certified > 50);  // the generator must exercise the guarantee
}

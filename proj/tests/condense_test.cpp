#include <doctest.h>

#include <map>

#include "gen.hpp"
#include "scatspec/condense.hpp"
#include "scatspec/errors.hpp"
#include "scatspec/oracle.hpp"
#include "scatspec/term.hpp"

using namespace scatspec;

namespace {

// Oracle route: the interval between two expansion positions is finite iff
// the number of positions between them (matched by address) stabilizes as
// the depth grows.
struct StabilizedClasses {
    std::vector<FiniteExpansion> exps;  // depths 5, 10, 20

    explicit StabilizedClasses(const ChainTerm& t) {
        for (unsigned depth : {5u, 10u, 20u}) exps.push_back(expand(t, depth));
    }

    std::size_t locate(const FiniteExpansion& exp, const FiniteExpansion::Address& addr) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp.addresses[i] == addr) return i;
        REQUIRE(false);
        return 0;
    }

    bool interval_stable(std::size_t a, std::size_t b) const {
        const auto& base = exps.front();
        std::size_t gap0 = b - a;
        for (std::size_t e = 1; e < exps.size(); ++e) {
            std::size_t ia = locate(exps[e], base.addresses[a]);
            std::size_t ib = locate(exps[e], base.addresses[b]);
            if (ib - ia != gap0) return false;
        }
        return true;
    }

    // Classes are intervals, so merging stable consecutive pairs suffices.
    std::vector<std::size_t> classes() const {
        std::vector<std::size_t> cls(exps.front().size(), 0);
        std::size_t current = 0;
        for (std::size_t i = 1; i < cls.size(); ++i) {
            if (!interval_stable(i - 1, i)) ++current;
            cls[i] = current;
        }
        return cls;
    }
};

}  // namespace

TEST_CASE("fin_condense: rewrite examples") {
    CHECK(fin_condense(parse("w*[1] + w[1]")) == ChainTerm::one());
    CHECK(fin_condense(parse("w[1] + w[1]")) == ChainTerm::finite(2));
    CHECK(fin_condense(parse("w[1 + w*[1] + w[1] + 1]")) ==
          ChainTerm::fin_sum({ChainTerm::one(), ChainTerm::omega_sum({}, ChainTerm::finite(2))}));
    CHECK(fin_condense(parse("7")) == ChainTerm::one());
    CHECK(fin_condense(parse("1 + w[1]")) == ChainTerm::one());
    CHECK(fin_condense(parse("w[5]")) == ChainTerm::one());
    CHECK(fin_condense(parse("w[w[1]]")) == parse("w[1]"));
    CHECK_THROWS_AS(fin_condense(ChainTerm::zero()), DomainError);
}

TEST_CASE("fc_rank: goldens") {
    CHECK(fc_rank(ChainTerm::one()) == 0);
    CHECK(fc_rank(parse("w[1]")) == 1);
    CHECK(fc_rank(parse("w*[1]")) == 1);
    CHECK(fc_rank(parse("w*[1] + w[1]")) == 1);
    CHECK(fc_rank(parse("w[1] + w[1]")) == 2);
    CHECK(fc_rank(parse("w[1] + w*[1]")) == 2);
    std::string nested = "1";
    for (unsigned k = 1; k <= 5; ++k) {
        nested = "w[" + nested + "]";
        CHECK(fc_rank(parse(nested)) == k);
    }
    CHECK(fc_rank(parse("w[w*[1]]")) == 2);  // sum over omega of omega*
    CHECK_THROWS_AS(fc_rank(ChainTerm::zero()), DomainError);
}

TEST_CASE("hausdorff_rank: alias examples") {
    CHECK(hausdorff_rank(parse("w*[1]")) == 1);
    CHECK(hausdorff_rank(parse("w^(-,+)")) == 2);
    CHECK(hausdorff_rank(parse("1 + w[1]")) == 1);
}

TEST_CASE("condensation_steps ends at One and decrements rank") {
    for (const auto& raw : testgen::corpus(120, 3, 40)) {
        ChainTerm t = canonicalize(raw);
        if (t.kind() == TermKind::Zero) continue;
        CAPTURE(print(t));
        auto steps = condensation_steps(t);
        CHECK(steps.back() == ChainTerm::one());
        CHECK(steps.size() == fc_rank(t) + 1);
        for (std::size_t i = 0; i + 1 < steps.size(); ++i)
            CHECK(fc_rank(steps[i]) == fc_rank(t) - i);
    }
}

TEST_CASE("fin_condense: reverse equivariance") {
    for (const auto& raw : testgen::corpus(150, 3, 41)) {
        ChainTerm t = canonicalize(raw);
        if (t.kind() == TermKind::Zero) continue;
        CAPTURE(print(t));
        CHECK(fin_condense(reverse(t)) == canonicalize(reverse(fin_condense(t))));
        CHECK(fc_rank(reverse(t)) == fc_rank(t));
        CHECK((fc_rank(t) == 0) == (t == ChainTerm::one()));
    }
}

TEST_CASE("fin_condense: palindromic terms condense to palindromes") {
    for (const auto& raw : testgen::corpus(100, 2, 55)) {
        ChainTerm half = canonicalize(raw);
        if (half.kind() == TermKind::Zero) continue;
        for (ChainTerm pal :
             {canonicalize(ChainTerm::fin_sum({half, reverse(half)})),
              canonicalize(ChainTerm::fin_sum({half, ChainTerm::one(), reverse(half)}))}) {
            REQUIRE(reverse(pal) == pal);
            CAPTURE(print(pal));
            CHECK(reverse(fin_condense(pal)) == fin_condense(pal));
        }
    }
}

TEST_CASE("rank agreement on isomorphic rewrite pairs") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"1 + w[1]", "w[1]"},        {"2 + w[1]", "w[1]"},
        {"w*[1] + 1", "w*[1]"},      {"w*[1] + w[1]", "w*[1] + 1 + w[1]"},
        {"w[1] + w[1]", "1 + w[1] + w[1]"},
    };
    for (const auto& [a, b] : pairs) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(fc_rank(parse(a)) == fc_rank(parse(b)));
    }
}

TEST_CASE("theta classes: term-level fusion refines into the oracle classes") {
    for (const char* text : {"w*[1] + w[1]", "w[1] + w[1]", "w[1 + w*[1] + w[1] + 1]",
                             "1 + w*[1] + w[1] + 1", "w[w[1]]", "w[2] + 3", "w[w*[1]]"}) {
        ChainTerm t = canonicalize(parse(text));
        CAPTURE(text);
        StabilizedClasses oracle(t);
        FiniteExpansion exp = expand(t, 5);
        auto cls = oracle.classes();
        for (std::size_t a = 0; a < exp.size(); ++a) {
            for (std::size_t b = a + 1; b < exp.size(); ++b) {
                if (interval_finite_by_structure(exp, a, b)) CHECK(cls[a] == cls[b]);
            }
        }
    }
}

TEST_CASE("theta classes: refinement holds on generated terms") {
    unsigned checked = 0;
    for (const auto& raw : testgen::corpus(60, 2, 91)) {
        ChainTerm t = canonicalize(raw);
        if (t.kind() == TermKind::Zero) continue;
        FiniteExpansion probe = expand(t, 5);
        if (probe.size() > 40) continue;  // keep the pairwise scan cheap
        ++checked;
        CAPTURE(print(t));
        StabilizedClasses oracle(t);
        auto cls = oracle.classes();
        for (std::size_t a = 0; a < probe.size(); ++a)
            for (std::size_t b = a + 1; b < probe.size(); ++b)
                if (interval_finite_by_structure(probe, a, b)) CHECK(cls[a] == cls[b]);
    }
    CHECK(checked > 20);
}

TEST_CASE("theta classes: visible class counts match the condensed term") {
    // When fin_condense(t) is a finite chain, the expansion splits into
    // exactly that many classes.
    std::map<std::string, std::size_t> cases = {
        {"w*[1] + w[1]", 1}, {"w[1] + w[1]", 2}, {"7", 1}, {"1 + w[1]", 1}, {"w[1] + w*[1]", 2},
    };
    for (const auto& [text, expected] : cases) {
        CAPTURE(text);
        StabilizedClasses oracle(parse(text));
        auto cls = oracle.classes();
        CHECK(cls.back() + 1 == expected);
    }
}

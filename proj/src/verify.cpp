#include "scatspec/verify.hpp"

#include <algorithm>
#include <sstream>

#include "scatspec/condense.hpp"
#include "scatspec/embed.hpp"
#include "scatspec/oracle.hpp"
#include "scatspec/ramsey.hpp"
#include "scatspec/term.hpp"
#include "scatspec/types.hpp"

namespace scatspec {

namespace {

const std::vector<std::string> kExactFamily = {
    "1", "5", "w[1]", "w*[1]", "w[1]+1", "w[1]+2", "w[1]+3", "1+w*[1]", "3+w*[1]",
};

const std::vector<std::string> kBoundFamily = {
    "w[1]+w[1]", "w*[1]+w[1]", "w[w[1]]", "w[1]+w*[1]", "w^(-,+)", "w[2]", "w[1+w[1]]",
};

CheckResult rank_goldens() {
    std::vector<std::pair<std::string, unsigned>> goldens = {
        {"w[1]", 1}, {"w*[1]", 1}, {"w*[1]+w[1]", 1}, {"w[1]+w[1]", 2},
        {"w[1]+w*[1]", 2}, {"w^(-,+)", 2},
    };
    std::string nested = "1";
    for (unsigned k = 1; k <= 5; ++k) {
        nested = "w[" + nested + "]";
        goldens.emplace_back(nested, k);
    }
    for (const auto& [text, expected] : goldens) {
        unsigned got = fc_rank(parse(text));
        if (got != expected)
            return {"rank-goldens", false,
                    text + ": expected " + std::to_string(expected) + ", got " + std::to_string(got)};
    }
    return {"rank-goldens", true, std::to_string(goldens.size()) + " golden ranks"};
}

CheckResult spectrum_reversal() {
    std::vector<std::string> corpus = kExactFamily;
    corpus.insert(corpus.end(), kBoundFamily.begin(), kBoundFamily.end());
    for (const auto& text : corpus) {
        ChainTerm t = parse(text);
        auto size = size_if_finite(t);
        unsigned n_max = size ? static_cast<unsigned>(std::min<std::uint64_t>(*size, 3)) : 3;
        auto fwd = spectrum(t, n_max);
        auto bwd = spectrum(reverse(t), n_max);
        for (std::size_t i = 0; i < fwd.size(); ++i) {
            if (fwd[i].value != bwd[i].value || fwd[i].kind != bwd[i].kind)
                return {"spectrum-reversal", false, text + ": entry " + std::to_string(i + 1) + " differs"};
        }
    }
    return {"spectrum-reversal", true, std::to_string(corpus.size()) + " terms, n <= 3"};
}

void compositions_up_to(unsigned budget, std::vector<unsigned>& cur,
                        std::vector<std::vector<unsigned>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (unsigned next = 1; next <= budget; ++next) {
        cur.push_back(next);
        compositions_up_to(budget - next, cur, out);
        cur.pop_back();
    }
}

CheckResult pattern_oracle() {
    std::vector<std::vector<unsigned>> vectors;
    std::vector<unsigned> cur;
    compositions_up_to(6, cur, vectors);
    for (const auto& m : vectors) {
        unsigned total = 0;
        for (unsigned mi : m) total += mi;
        BigInt dp = pattern_count(m);
        std::uint64_t brute = brute_pattern_count(m, total);
        if (dp != brute) {
            std::ostringstream os;
            os << "m = [";
            for (unsigned mi : m) os << mi << " ";
            os << "]: dp " << dp << " vs brute " << brute;
            return {"pattern-oracle", false, os.str()};
        }
    }
    return {"pattern-oracle", true, std::to_string(vectors.size()) + " vectors with total <= 6"};
}

CheckResult types_completeness() {
    struct Golden {
        std::string term;
        unsigned n;
        unsigned depth;
        std::size_t count;
    };
    std::vector<Golden> goldens = {
        {"w[1]", 1, 8, 1}, {"w[1]", 2, 8, 1}, {"w[w[1]]", 2, 5, 2},
        {"w[1]+2", 1, 3, 3}, {"w[1]+2", 2, 4, 4},
    };
    for (const auto& g : goldens) {
        ChainTerm t = parse(g.term);
        auto enumerated = enumerate_types(t, g.n);
        auto realized = realized_types(t, g.n, g.depth);
        if (enumerated.size() != g.count || realized.size() != g.count)
            return {"types-completeness", false,
                    g.term + " n=" + std::to_string(g.n) + ": enumerated " +
                        std::to_string(enumerated.size()) + ", realized " +
                        std::to_string(realized.size()) + ", golden " + std::to_string(g.count)};
        for (const auto& type : realized) {
            if (std::find(enumerated.begin(), enumerated.end(), type) == enumerated.end())
                return {"types-completeness", false, g.term + ": realized type missing from enumeration"};
        }
    }
    return {"types-completeness", true, std::to_string(goldens.size()) + " golden cases"};
}

CheckResult lemma_eq_corpus() {
    struct Case {
        std::string term;
        std::vector<std::uint32_t> dropped;
    };
    std::vector<Case> cases = {
        {"w[1]", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}},
        {"w[w[1]]", {1, 3}},
        {"w[1; w[1]]", {0}},
        {"w[1; 2; w[1]]", {0, 1}},
        {"w*[1; w*[1]]", {0}},
        {"w[1]+2", {5}},
        {"w[1; 1; 1]", {1}},
    };
    for (const auto& c : cases) {
        ChainTerm t = parse(c.term);
        RestrictionSpec spec;
        spec.dropped.insert(c.dropped.begin(), c.dropped.end());
        if (!check_increasing(t).all_hold())
            return {"lemma-eq", false, c.term + ": increasing condition not certified"};
        if (!lemma_eq_check(t, spec).yes())
            return {"lemma-eq", false, c.term + ": equivalence with restriction not certified"};
        if (!embeds(restrict_term(t, spec), t).yes())
            return {"lemma-eq", false, c.term + ": restriction does not embed back"};
    }
    return {"lemma-eq", true, std::to_string(cases.size()) + " restriction cases"};
}

CheckResult exact_monotone() {
    for (const auto& text : kExactFamily) {
        ChainTerm t = parse(text);
        auto size = size_if_finite(t);
        unsigned n_max = size ? static_cast<unsigned>(std::min<std::uint64_t>(*size, 4)) : 4;
        if (!check_monotone(spectrum(t, n_max)))
            return {"exact-monotone", false, text + ": exact spectrum decreases"};
    }
    return {"exact-monotone", true, std::to_string(kExactFamily.size()) + " exact-family terms"};
}

}  // namespace

std::vector<CheckResult> verify_suite() {
    return {
        rank_goldens(),       spectrum_reversal(), pattern_oracle(),
        types_completeness(), lemma_eq_corpus(),   exact_monotone(),
    };
}

}  // namespace scatspec

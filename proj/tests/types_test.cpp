#include <doctest.h>

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "scatspec/errors.hpp"
#include "scatspec/oracle.hpp"
#include "scatspec/term.hpp"
#include "scatspec/types.hpp"

using namespace scatspec;

TEST_CASE("sigma_tree: shapes") {
    SigmaTree leaf = sigma_tree(parse("1"));
    REQUIRE(leaf.nodes.size() == 1);
    CHECK(leaf.nodes[0].label == NodeLabel::One);

    // omega + 2: +-root, iota_0 -> omega node over a leaf, iota_1/iota_2 leaves
    SigmaTree s = sigma_tree(parse("w[1] + 2"));
    REQUIRE(s.nodes.size() == 5);
    CHECK(s.nodes[0].label == NodeLabel::Plus);
    REQUIRE(s.nodes[0].children.size() == 3);
    CHECK(s.nodes[s.nodes[0].children[0]].label == NodeLabel::Omega);
    CHECK(s.nodes[s.nodes[0].children[1]].label == NodeLabel::One);
    CHECK(s.nodes[s.nodes[0].children[2]].label == NodeLabel::One);
    CHECK(s.height() == 3);

    SigmaTree nested = sigma_tree(parse("w[w[1]]"));
    CHECK(nested.nodes[0].label == NodeLabel::Omega);
    CHECK(nested.height() == 3);
    CHECK(sigma_tree(parse("0")).empty());
}

TEST_CASE("enumerate_types: golden counts") {
    CHECK(count_types(parse("w[1]"), 1) == 1);
    CHECK(count_types(parse("w[1]"), 2) == 1);
    CHECK(count_types(parse("w[1]"), 3) == 1);
    CHECK(count_types(parse("w[1]"), 4) == 1);
    CHECK(count_types(parse("w[w[1]]"), 2) == 2);
    CHECK(count_types(parse("w[1] + 2"), 1) == 3);
    CHECK(count_types(parse("w[1] + 2"), 2) == 4);
    CHECK(count_types(parse("3"), 2) == 3);
    CHECK(enumerate_types(parse("0"), 2).empty());
    CHECK_THROWS_AS(enumerate_types(parse("w[1]"), 0), DomainError);
}

TEST_CASE("enumerate_types: the (omega+2, 2) types are the expected four") {
    auto types = enumerate_types(parse("w[1] + 2"), 2);
    std::set<std::string> texts;
    for (const auto& t : types) texts.insert(t.text());
    CHECK(texts == std::set<std::string>{
                       "+(i0:w(1,1))", "+(i0:w(1),i1:1)", "+(i0:w(1),i2:1)", "+(i1:1,i2:1)"});
}

TEST_CASE("omega_outdegrees: examples") {
    auto omega2 = enumerate_types(parse("w[1]"), 2);
    REQUIRE(omega2.size() == 1);
    CHECK(omega_outdegrees(omega2[0]) == std::vector<unsigned>{2});

    auto finite = enumerate_types(parse("3"), 2);
    for (const auto& t : finite) CHECK(omega_outdegrees(t).empty());

    auto nested = enumerate_types(parse("w[w[1]]"), 2);
    REQUIRE(nested.size() == 2);
    CHECK(omega_outdegrees(nested[0]) == std::vector<unsigned>{1, 2});
    CHECK(omega_outdegrees(nested[1]) == std::vector<unsigned>{2, 1, 1});
}

TEST_CASE("type invariants on generated terms") {
    for (const auto& raw : testgen::corpus(80, 2, 31)) {
        ChainTerm t = canonicalize(raw);
        if (t.kind() == TermKind::Zero) continue;
        SigmaTree sigma = sigma_tree(t);
        CAPTURE(print(t));
        const bool infinite = !size_if_finite(t).has_value();
        std::size_t prev = 0;
        for (unsigned n = 1; n <= 3; ++n) {
            auto types = enumerate_types(t, n);
            // counts are nondecreasing in n for infinite chains; finite
            // chains peak (see the dedicated case below)
            if (infinite) {
                CHECK(types.size() >= prev);
                prev = types.size();
            }
            std::set<TypeTree> dedup(types.begin(), types.end());
            CHECK(dedup.size() == types.size());
            unsigned max_height = 0;
            for (const auto& type : types) {
                CHECK(type.bfs_numbered());
                CHECK(type.leaf_count() == n);
                CHECK(type.height() <= sigma.height());
                max_height = std::max(max_height, type.height());
                for (const auto& node : type.nodes) {
                    if (node.children.empty()) CHECK(node.label == NodeLabel::One);
                    if (node.label == NodeLabel::Plus) {
                        CHECK(std::is_sorted(node.iota.begin(), node.iota.end()));
                        CHECK(std::adjacent_find(node.iota.begin(), node.iota.end()) ==
                              node.iota.end());
                    }
                }
            }
            if (!types.empty() && size_if_finite(t).value_or(n) >= n)
                CHECK(max_height == sigma.height());
        }
    }
}

TEST_CASE("type counts of finite chains follow binomials and may decrease") {
    // The nondecreasing-count observation does not extend to finite chains:
    // an m-chain has C(m, n) types, which peaks at n = m/2.
    CHECK(count_types(parse("3"), 1) == 3);
    CHECK(count_types(parse("3"), 2) == 3);
    CHECK(count_types(parse("3"), 3) == 1);
    CHECK(count_types(parse("4"), 2) == 6);
    CHECK(count_types(parse("4"), 4) == 1);
}

TEST_CASE("realized types are a subset of enumerated types, equal at depth") {
    struct Golden {
        const char* term;
        unsigned n, depth;
    };
    for (Golden g : std::initializer_list<Golden>{{"w[1]", 1, 8},
                                                  {"w[1]", 2, 8},
                                                  {"w[w[1]]", 2, 5},
                                                  {"w[1] + 2", 1, 3},
                                                  {"w[1] + 2", 2, 4}}) {
        ChainTerm t = parse(g.term);
        auto enumerated = enumerate_types(t, g.n);
        auto realized = realized_types(t, g.n, g.depth);
        CAPTURE(g.term);
        CAPTURE(g.n);
        CHECK(realized.size() == enumerated.size());
        for (const auto& type : realized)
            CHECK(std::find(enumerated.begin(), enumerated.end(), type) != enumerated.end());
    }
    // deeper points: three points in omega^2, pairs in the integers
    CHECK(count_types(parse("w[w[1]]"), 3) == 4);
    CHECK(realized_types(parse("w[w[1]]"), 3, 6).size() == 4);
    CHECK(count_types(parse("w*[1] + w[1]"), 2) == 3);
    CHECK(realized_types(parse("w*[1] + w[1]"), 2, 5).size() == 3);

    // subset even at shallow depths
    for (const auto& raw : testgen::corpus(40, 2, 77)) {
        ChainTerm t = canonicalize(raw);
        if (t.kind() == TermKind::Zero) continue;
        CAPTURE(print(t));
        auto enumerated = enumerate_types(t, 2);
        for (const auto& type : realized_types(t, 2, 3))
            CHECK(std::find(enumerated.begin(), enumerated.end(), type) != enumerated.end());
    }
}

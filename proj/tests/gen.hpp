#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scatspec/term.hpp"

// Deterministic pseudo-random raw terms (prefixes and Zero children
// allowed) for property tests.
namespace testgen {

inline scatspec::ChainTerm random_term(std::mt19937& rng, int depth) {
    using scatspec::ChainTerm;
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
    switch (pick(rng)) {
        case 0:
            return ChainTerm::zero();
        case 1:
        case 2:
            return ChainTerm::one();
        case 3: {
            std::uniform_int_distribution<int> n(2, 4);
            return ChainTerm::finite(static_cast<std::uint64_t>(n(rng)));
        }
        case 4:
        case 5: {
            std::uniform_int_distribution<int> n(2, 3);
            std::vector<ChainTerm> parts;
            for (int i = 0, k = n(rng); i < k; ++i) parts.push_back(random_term(rng, depth - 1));
            return ChainTerm::fin_sum(std::move(parts));
        }
        default: {
            std::uniform_int_distribution<int> plen(0, 2);
            std::uniform_int_distribution<int> star(0, 1);
            std::vector<ChainTerm> prefix;
            for (int i = 0, k = plen(rng); i < k; ++i) prefix.push_back(random_term(rng, depth - 1));
            ChainTerm rep = random_term(rng, depth - 1);
            if (scatspec::size_if_finite(rep) == std::uint64_t{0}) rep = ChainTerm::one();
            return star(rng) ? ChainTerm::omega_star_sum(std::move(prefix), std::move(rep))
                             : ChainTerm::omega_sum(std::move(prefix), std::move(rep));
        }
    }
}

inline std::vector<scatspec::ChainTerm> corpus(unsigned count, int depth, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<scatspec::ChainTerm> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) out.push_back(random_term(rng, depth));
    return out;
}

}  // namespace testgen

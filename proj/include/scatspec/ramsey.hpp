#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "scatspec/term.hpp"

namespace scatspec {

using BigInt = boost::multiprecision::cpp_int;

enum class SpectrumKind : std::uint8_t { Exact, UpperBound, Infinite };

// One entry of a big Ramsey spectrum: the degree of the n-point chain in the
// denoted chain, either exactly or as a certified upper bound.
struct SpectrumEntry {
    unsigned n = 0;
    BigInt value;
    SpectrumKind kind = SpectrumKind::UpperBound;
    std::string provenance;
};

BigInt binomial(unsigned n, unsigned k);

// The weak-order merge-pattern count D(s; m_0..m_{s-1}): the number of joint
// placements of s strictly increasing sequences of the given lengths into a
// common finite chain, allowing ties across (not within) sequences and
// counted over all chain lengths. Symmetric in its arguments; the empty
// list yields 1.
BigInt pattern_count(const std::vector<unsigned>& m);

// Sum over all (n,sigma)-types of the pattern count of their omega
// out-degrees; a certified upper bound for the n-th spectrum entry.
// n = 0 yields 1.
BigInt spectrum_upper(const ChainTerm& term, unsigned n);

// T(n, B + r) = sum_{j<=min(n,r)} C(r,j) * T(n-j, B), given the exact
// spectrum of B (total on 0..n, with the T(0,B) = 1 convention supplied by
// the caller).
BigInt tail_formula(const std::map<unsigned, BigInt>& spec_B, unsigned r, unsigned n);

// The n-th tangent number (the big Ramsey degree of n in the rationals),
// by the exact boustrophedon recurrence.
BigInt devlin(unsigned n);

// Spectrum entries for n = 1..n_max: exact on the closed allowlist (finite
// chains, omega, omega*, omega + r, r + omega*), otherwise the type-sum
// upper bound.
std::vector<SpectrumEntry> spectrum(const ChainTerm& term, unsigned n_max);

// True iff the exact values are nondecreasing. Rejects non-Exact entries.
bool check_monotone(const std::vector<SpectrumEntry>& entries);

}  // namespace scatspec

#include "scatspec/ramsey.hpp"

#include <algorithm>
#include <utility>

#include "scatspec/errors.hpp"
#include "scatspec/types.hpp"

namespace scatspec {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// ---------------------------------------------------------------------------
// pattern_count

namespace {

constexpr std::size_t kMaxPatternBlocks = 12;
constexpr unsigned kMaxPatternTotal = 40;

// f(remaining) = number of ways to finish: each level consumes one element
// from every block in a chosen nonempty subset of the still-active blocks.
BigInt pattern_rec(std::vector<unsigned>& rem, std::map<std::vector<unsigned>, BigInt>& memo) {
    std::vector<unsigned> key = rem;
    std::sort(key.begin(), key.end());  // the count is symmetric in the blocks
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < rem.size(); ++i)
        if (rem[i] > 0) active.push_back(i);
    if (active.empty()) return memo[key] = 1;

    BigInt total = 0;
    const std::size_t a = active.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a); ++mask) {
        for (std::size_t i = 0; i < a; ++i)
            if (mask & (std::uint64_t{1} << i)) --rem[active[i]];
        total += pattern_rec(rem, memo);
        for (std::size_t i = 0; i < a; ++i)
            if (mask & (std::uint64_t{1} << i)) ++rem[active[i]];
    }
    return memo[key] = total;
}

}  // namespace

BigInt pattern_count(const std::vector<unsigned>& m) {
    if (m.empty()) return 1;
    unsigned total = 0;
    for (unsigned mi : m) {
        if (mi == 0) throw DomainError("m-zero", "sequence lengths must be >= 1");
        total += mi;
    }
    if (m.size() > kMaxPatternBlocks)
        throw GuardError("too-many-blocks", "pattern count capped at 12 sequences");
    if (total > kMaxPatternTotal)
        throw GuardError("pattern-total", "pattern count capped at total length 40");
    std::vector<unsigned> rem = m;
    std::map<std::vector<unsigned>, BigInt> memo;
    return pattern_rec(rem, memo);
}

BigInt spectrum_upper(const ChainTerm& term, unsigned n) {
    if (n == 0) return 1;  // T(0, C) = 1 by convention
    BigInt total = 0;
    for (const TypeTree& t : enumerate_types(term, n)) total += pattern_count(omega_outdegrees(t));
    return total;
}

BigInt tail_formula(const std::map<unsigned, BigInt>& spec_B, unsigned r, unsigned n) {
    BigInt total = 0;
    for (unsigned j = 0; j <= std::min(n, r); ++j) {
        auto it = spec_B.find(n - j);
        if (it == spec_B.end())
            throw DomainError("missing-spec-entry",
                              "tail formula needs T(" + std::to_string(n - j) + ", B)");
        total += binomial(r, j) * it->second;
    }
    return total;
}

BigInt devlin(unsigned n) {
    if (n == 0) throw DomainError("n-zero", "tangent numbers start at n = 1");
    // Entringer triangle: E(i,j) = E(i,j-1) + E(i-1,i-j); the zigzag number
    // is E(i,i) and the n-th tangent number is zigzag(2n-1).
    const unsigned rows = 2 * n - 1;
    std::vector<BigInt> prev{1};
    for (unsigned i = 1; i <= rows; ++i) {
        std::vector<BigInt> row(i + 1);
        row[0] = 0;
        for (unsigned j = 1; j <= i; ++j) row[j] = row[j - 1] + prev[i - j];
        prev = std::move(row);
    }
    return prev.back();
}

// ---------------------------------------------------------------------------
// spectrum

namespace {

const std::string kProvFinite = "finite-chain";
const std::string kProvOmega = "ramsey-omega";
const std::string kProvTail = "tail-formula";
const std::string kProvBound = "type-sum-bound";

bool is_omega(const ChainTerm& t) {
    return t.kind() == TermKind::OmegaSum && t.repeat().kind() == TermKind::One;
}

// omega + r with r >= 1: FinSum[omega, One x r].
bool match_omega_plus_tail(const ChainTerm& t, unsigned& r) {
    if (t.kind() != TermKind::FinSum) return false;
    const auto& cs = t.children();
    if (!is_omega(cs[0])) return false;
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i].kind() != TermKind::One) return false;
    r = static_cast<unsigned>(cs.size() - 1);
    return true;
}

}  // namespace

std::vector<SpectrumEntry> spectrum(const ChainTerm& term, unsigned n_max) {
    ChainTerm t = canonicalize(term);
    ChainTerm rev = canonicalize(reverse(t));
    std::vector<SpectrumEntry> entries;

    if (auto size = size_if_finite(t)) {
        if (n_max > *size)
            throw DomainError("n-exceeds-finite-size",
                              "no " + std::to_string(n_max) + "-point subchains in a chain of size " +
                                  std::to_string(*size));
        for (unsigned n = 1; n <= n_max; ++n) entries.push_back({n, 1, SpectrumKind::Exact, kProvFinite});
        return entries;
    }

    if (is_omega(t) || is_omega(rev)) {
        for (unsigned n = 1; n <= n_max; ++n) entries.push_back({n, 1, SpectrumKind::Exact, kProvOmega});
        return entries;
    }

    unsigned r = 0;
    if (match_omega_plus_tail(t, r) || match_omega_plus_tail(rev, r)) {
        std::map<unsigned, BigInt> spec_omega;
        for (unsigned i = 0; i <= n_max; ++i) spec_omega[i] = 1;
        for (unsigned n = 1; n <= n_max; ++n)
            entries.push_back({n, tail_formula(spec_omega, r, n), SpectrumKind::Exact, kProvTail});
        return entries;
    }

    for (unsigned n = 1; n <= n_max; ++n)
        entries.push_back({n, spectrum_upper(t, n), SpectrumKind::UpperBound, kProvBound});
    return entries;
}

bool check_monotone(const std::vector<SpectrumEntry>& entries) {
    for (const auto& e : entries)
        if (e.kind != SpectrumKind::Exact)
            throw DomainError("mixed-kinds", "monotonicity check expects exact entries only");
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].value < entries[i - 1].value) return false;
    return true;
}

}  // namespace scatspec

#include "scatspec/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scatspec/errors.hpp"

namespace scatspec {

namespace {

constexpr std::size_t kMaxExpansionSize = 2'000'000;
constexpr std::size_t kMaxSubsetScan = 20'000'000;
constexpr unsigned kMaxRamseyGround = 20;
constexpr unsigned kGuardColoringBits = 24;

// Saturates at one past the guard so oversized inputs cannot overflow.
std::uint64_t expansion_size(const SigmaTree& sigma, std::uint32_t node, unsigned depth) {
    constexpr std::uint64_t kCap = kMaxExpansionSize + 1;
    const auto& sn = sigma.nodes[node];
    switch (sn.label) {
        case NodeLabel::One:
            return 1;
        case NodeLabel::Plus: {
            std::uint64_t total = 0;
            for (auto c : sn.children) {
                total += expansion_size(sigma, c, depth);
                if (total > kCap) return kCap;
            }
            return total;
        }
        case NodeLabel::Omega:
        case NodeLabel::OmegaStar: {
            std::uint64_t inner = expansion_size(sigma, sn.children[0], depth);
            if (inner > kCap / depth) return kCap;
            return depth * inner;
        }
    }
    return 0;
}

void expand_node(const SigmaTree& sigma, std::uint32_t node, unsigned depth,
                 FiniteExpansion::Address& path, std::vector<FiniteExpansion::Address>& out) {
    const auto& sn = sigma.nodes[node];
    switch (sn.label) {
        case NodeLabel::One:
            out.push_back(path);
            return;
        case NodeLabel::Plus:
            for (std::uint32_t i = 0; i < sn.children.size(); ++i) {
                path.push_back({node, i});
                expand_node(sigma, sn.children[i], depth, path, out);
                path.pop_back();
            }
            return;
        case NodeLabel::Omega:
            for (unsigned k = 0; k < depth; ++k) {
                path.push_back({node, k});
                expand_node(sigma, sn.children[0], depth, path, out);
                path.pop_back();
            }
            return;
        case NodeLabel::OmegaStar:
            // Leftmost block has the largest index.
            for (unsigned k = depth; k-- > 0;) {
                path.push_back({node, k});
                expand_node(sigma, sn.children[0], depth, path, out);
                path.pop_back();
            }
            return;
    }
}

}  // namespace

FiniteExpansion expand(const ChainTerm& term, unsigned depth) {
    if (depth == 0) throw DomainError("depth-zero", "expansion depth must be >= 1");
    FiniteExpansion exp;
    exp.sigma = sigma_tree(term);
    exp.depth = depth;
    if (exp.sigma.empty()) return exp;
    if (expansion_size(exp.sigma, 0, depth) > kMaxExpansionSize)
        throw GuardError("expansion-too-large", "expansion exceeds the desk-scale bound");
    FiniteExpansion::Address path;
    expand_node(exp.sigma, 0, depth, path, exp.addresses);
    return exp;
}

// ---------------------------------------------------------------------------
// classify_embedding

namespace {

// Child node of the sigma-tree entered by a step.
std::uint32_t step_target(const SigmaTree& sigma, FiniteExpansion::Step s) {
    const auto& sn = sigma.nodes[s.node];
    return sn.label == NodeLabel::Plus ? sn.children[s.edge] : sn.children[0];
}

TypeTree classify_group(const SigmaTree& sigma,
                        const std::vector<const FiniteExpansion::Address*>& addrs,
                        std::size_t level, std::uint32_t node) {
    if (addrs.size() == 1 && (*addrs[0]).size() == level) return TypeTree::leaf();
    // Group addresses by the edge taken at this level; addresses arrive in
    // chain order, which matches the induced tree's child order (ascending
    // blocks under omega, descending under omega*, ascending iota).
    std::vector<TypeTree> children;
    std::vector<std::uint32_t> iota;
    std::size_t i = 0;
    while (i < addrs.size()) {
        std::uint32_t edge = (*addrs[i])[level].edge;
        std::size_t j = i;
        std::vector<const FiniteExpansion::Address*> group;
        while (j < addrs.size() && (*addrs[j])[level].edge == edge) group.push_back(addrs[j++]);
        children.push_back(
            classify_group(sigma, group, level + 1, step_target(sigma, (*addrs[i])[level])));
        iota.push_back(edge);
        i = j;
    }
    NodeLabel label = sigma.nodes[node].label;
    if (label == NodeLabel::Plus) return TypeTree::compose(label, children, iota);
    return TypeTree::compose(label, children);  // omega-edge labels erased
}

}  // namespace

TypeTree classify_embedding(const FiniteExpansion& exp, const std::vector<std::size_t>& points) {
    if (points.empty()) throw DomainError("empty-points", "need at least one selected position");
    std::vector<const FiniteExpansion::Address*> addrs;
    addrs.reserve(points.size());
    std::size_t prev = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] >= exp.size())
            throw DomainError("point-range", "selected position out of range");
        if (i > 0 && points[i] <= prev)
            throw DomainError("point-order", "positions must be strictly increasing");
        prev = points[i];
        addrs.push_back(&exp.addresses[points[i]]);
    }
    return classify_group(exp.sigma, addrs, 0, 0);
}

std::set<TypeTree> realized_types(const ChainTerm& term, unsigned n, unsigned depth) {
    if (n == 0) throw DomainError("n-zero", "types are defined for n >= 1");
    FiniteExpansion exp = expand(term, depth);
    std::set<TypeTree> out;
    if (exp.size() < n) return out;
    // combination count guard
    double combos = 1.0;
    for (unsigned i = 0; i < n; ++i) combos *= double(exp.size() - i) / double(i + 1);
    if (combos > double(kMaxSubsetScan))
        throw GuardError("too-many-subsets", "subset scan exceeds the desk-scale bound");
    std::vector<std::size_t> pick(n);
    for (unsigned i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        out.insert(classify_embedding(exp, pick));
        // next combination: bump the rightmost index that still has room
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == exp.size() - n + (i - 1)) --i;
        if (i == 0) return out;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// ---------------------------------------------------------------------------
// interval finiteness (term-level theta test)

namespace {

bool block_finite(const SigmaTree& sigma, std::uint32_t omega_node) {
    return sigma.nodes[sigma.nodes[omega_node].children[0]].subterm_size.has_value();
}

bool child_finite(const SigmaTree& sigma, std::uint32_t plus_node, std::uint32_t edge) {
    return sigma.nodes[sigma.nodes[plus_node].children[edge]].subterm_size.has_value();
}

// Elements strictly after the addressed position, within the subtree entered
// at step `from`.
bool suffix_finite(const SigmaTree& sigma, const FiniteExpansion::Address& a, std::size_t from) {
    for (std::size_t d = from + 1; d < a.size(); ++d) {
        const auto& sn = sigma.nodes[a[d].node];
        switch (sn.label) {
            case NodeLabel::Plus:
                for (std::uint32_t e = a[d].edge + 1; e < sn.children.size(); ++e)
                    if (!child_finite(sigma, a[d].node, e)) return false;
                break;
            case NodeLabel::Omega:
                return false;  // infinitely many nonempty blocks follow
            case NodeLabel::OmegaStar:
                if (a[d].edge > 0 && !block_finite(sigma, a[d].node)) return false;
                break;
            case NodeLabel::One:
                break;
        }
    }
    return true;
}

bool prefix_finite(const SigmaTree& sigma, const FiniteExpansion::Address& a, std::size_t from) {
    for (std::size_t d = from + 1; d < a.size(); ++d) {
        const auto& sn = sigma.nodes[a[d].node];
        switch (sn.label) {
            case NodeLabel::Plus:
                for (std::uint32_t e = 0; e < a[d].edge; ++e)
                    if (!child_finite(sigma, a[d].node, e)) return false;
                break;
            case NodeLabel::Omega:
                if (a[d].edge > 0 && !block_finite(sigma, a[d].node)) return false;
                break;
            case NodeLabel::OmegaStar:
                return false;  // infinitely many nonempty blocks precede
            case NodeLabel::One:
                break;
        }
    }
    return true;
}

}  // namespace

bool interval_finite_by_structure(const FiniteExpansion& exp, std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (a == b) return true;
    const auto& pa = exp.addresses[a];
    const auto& pb = exp.addresses[b];
    std::size_t split = 0;
    while (split < pa.size() && split < pb.size() && pa[split] == pb[split]) ++split;
    const auto& sn = exp.sigma.nodes[pa[split].node];
    std::uint32_t ea = pa[split].edge;
    std::uint32_t eb = pb[split].edge;
    // Whole summands strictly between the two divergent edges.
    bool middle = true;
    switch (sn.label) {
        case NodeLabel::Plus:
            for (std::uint32_t e = ea + 1; e < eb; ++e)
                if (!child_finite(exp.sigma, pa[split].node, e)) middle = false;
            break;
        case NodeLabel::Omega:
            if (eb > ea + 1 && !block_finite(exp.sigma, pa[split].node)) middle = false;
            break;
        case NodeLabel::OmegaStar:
            // chain order descends in block index
            if (ea > eb + 1 && !block_finite(exp.sigma, pa[split].node)) middle = false;
            break;
        case NodeLabel::One:
            break;
    }
    return middle && suffix_finite(exp.sigma, pa, split) && prefix_finite(exp.sigma, pb, split);
}

// ---------------------------------------------------------------------------
// brute_pattern_count

namespace {

void pattern_tuples(const std::vector<unsigned>& m, unsigned ground, std::size_t block,
                    std::vector<std::vector<unsigned>>& current,
                    std::set<std::vector<std::vector<unsigned>>>& patterns) {
    if (block == m.size()) {
        // quotient weak order: replace values by their rank among the
        // distinct values used
        std::vector<unsigned> values;
        for (const auto& seq : current) values.insert(values.end(), seq.begin(), seq.end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::vector<std::vector<unsigned>> pattern(current.size());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (unsigned v : current[i])
                pattern[i].push_back(static_cast<unsigned>(
                    std::lower_bound(values.begin(), values.end(), v) - values.begin()));
        patterns.insert(std::move(pattern));
        return;
    }
    // all strictly increasing sequences of length m[block] over {1..ground}
    std::vector<unsigned> seq(m[block]);
    auto rec = [&](auto&& self, unsigned idx, unsigned low) -> void {
        if (idx == m[block]) {
            current.push_back(seq);
            pattern_tuples(m, ground, block + 1, current, patterns);
            current.pop_back();
            return;
        }
        for (unsigned v = low; v <= ground; ++v) {
            seq[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
}

}  // namespace

std::uint64_t brute_pattern_count(const std::vector<unsigned>& m, unsigned ground) {
    unsigned total = 0;
    for (unsigned mi : m) {
        if (mi == 0) throw DomainError("m-zero", "sequence lengths must be >= 1");
        total += mi;
    }
    if (ground > 8) throw GuardError("ground-too-large", "ground set capped at 8");
    if (ground < total)
        throw GuardError("ground-too-small", "ground set must hold all sequences");
    if (m.empty()) return 1;
    std::set<std::vector<std::vector<unsigned>>> patterns;
    std::vector<std::vector<unsigned>> current;
    pattern_tuples(m, ground, 0, current, patterns);
    return patterns.size();
}

// ---------------------------------------------------------------------------
// ramsey_check

namespace {

struct RamseyInstance {
    unsigned k = 2;
    std::uint64_t num_colorings = 1;
    std::vector<std::uint64_t> digit_pow;      // k^i per n-subset slot
    std::vector<std::vector<unsigned>> blocks; // per m-subset: its n-subset slots

    // Does this coloring contain a monochromatic m-subset?
    bool has_mono(std::uint64_t code) const {
        for (const auto& block : blocks) {
            unsigned first = static_cast<unsigned>(code / digit_pow[block[0]] % k);
            bool mono = true;
            for (std::size_t i = 1; i < block.size(); ++i) {
                if (static_cast<unsigned>(code / digit_pow[block[i]] % k) != first) {
                    mono = false;
                    break;
                }
            }
            if (mono) return true;
        }
        return false;
    }
};

std::vector<std::vector<unsigned>> subsets_of(unsigned N, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> pick(r);
    auto rec = [&](auto&& self, unsigned idx, unsigned low) -> void {
        if (idx == r) {
            out.push_back(pick);
            return;
        }
        for (unsigned v = low; v < N; ++v) {
            pick[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

RamseyInstance build_instance(unsigned N, unsigned n, unsigned k, unsigned m) {
    if (N == 0 || n == 0 || m == 0 || k == 0 || n > N || m > N || n > m)
        throw DomainError("ramsey-args", "need 1 <= n <= m <= N and k >= 1");
    if (N > kMaxRamseyGround) throw GuardError("N-too-large", "ground chain capped at 20");
    auto nsubs = subsets_of(N, n);
    // enumeration guard: k^C(N,n) <= 2^24
    double bits = double(nsubs.size()) * std::log2(double(k));
    if (bits > double(kGuardColoringBits))
        throw GuardError("coloring-space", "coloring space exceeds 2^24");

    std::map<std::vector<unsigned>, unsigned> index;
    for (unsigned i = 0; i < nsubs.size(); ++i) index[nsubs[i]] = i;

    RamseyInstance inst;
    inst.k = k;
    inst.digit_pow.resize(nsubs.size());
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < nsubs.size(); ++i) {
        inst.digit_pow[i] = p;
        p *= k;
    }
    inst.num_colorings = p;
    for (const auto& msub : subsets_of(N, m)) {
        std::vector<unsigned> slots;
        for (const auto& inner : subsets_of(m, n)) {
            std::vector<unsigned> sub(inner.size());
            for (std::size_t i = 0; i < inner.size(); ++i) sub[i] = msub[inner[i]];
            slots.push_back(index.at(sub));
        }
        inst.blocks.push_back(std::move(slots));
    }
    return inst;
}

}  // namespace

bool ramsey_check_serial(unsigned N, unsigned n, unsigned k, unsigned m) {
    RamseyInstance inst = build_instance(N, n, k, m);
    for (std::uint64_t code = 0; code < inst.num_colorings; ++code)
        if (!inst.has_mono(code)) return false;
    return true;
}

bool ramsey_check(unsigned N, unsigned n, unsigned k, unsigned m) {
    RamseyInstance inst = build_instance(N, n, k, m);
#ifdef _OPENMP
    std::atomic<bool> counterexample{false};
    const std::int64_t total = static_cast<std::int64_t>(inst.num_colorings);
#pragma omp parallel for schedule(dynamic, 4096)
    for (std::int64_t code = 0; code < total; ++code) {
        if (counterexample.load(std::memory_order_relaxed)) continue;
        if (!inst.has_mono(static_cast<std::uint64_t>(code)))
            counterexample.store(true, std::memory_order_relaxed);
    }
    return !counterexample.load();
#else
    for (std::uint64_t code = 0; code < inst.num_colorings; ++code)
        if (!inst.has_mono(code)) return false;
    return true;
#endif
}

// ---------------------------------------------------------------------------
// witness_lower_bound

namespace {

// Matches omega + r (r >= 0): FinSum[omega, One x r] or the bare omega term.
bool match_omega_plus_r(const ChainTerm& t, unsigned& r) {
    ChainTerm omega = ChainTerm::omega_sum({}, ChainTerm::one());
    if (t == omega) {
        r = 0;
        return true;
    }
    if (t.kind() != TermKind::FinSum) return false;
    const auto& cs = t.children();
    if (cs[0] != omega) return false;
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i].kind() != TermKind::One) return false;
    r = static_cast<unsigned>(cs.size() - 1);
    return true;
}

}  // namespace

WitnessVerdict witness_lower_bound(const ChainTerm& term, unsigned n, unsigned t, unsigned N) {
    ChainTerm canon = canonicalize(term);
    unsigned r = 0;
    if (!match_omega_plus_r(canon, r)) {
        ChainTerm rev = canonicalize(reverse(canon));
        if (!match_omega_plus_r(rev, r)) return WitnessVerdict::Inconclusive;
        // Colors and copies mirror exactly under reversal.
    }
    if (n == 0) throw DomainError("n-zero", "need n >= 1");
    if (N < n + r + 2) throw GuardError("scale-too-small", "need N >= n + r + 2");
    // Expansion of omega + r at depth N: omega-part positions 0..N-1, then
    // the r fixed tail points. chi_j is constant for omega, so the paper's
    // coloring reduces to the tail type im(f) over the tail points.
    const unsigned omega_small = N - 1;  // omega-part size of the depth-(N-1) copy

    // all n-subsets of a position set, colored by which tail points they hit
    auto colors_of_copy = [&](const std::vector<unsigned>& image) {
        std::set<std::vector<unsigned>> colors;
        std::vector<unsigned> pick(n);
        auto rec = [&](auto&& self, unsigned idx, unsigned low) -> void {
            if (idx == n) {
                std::vector<unsigned> tail_type;
                for (unsigned p : pick)
                    if (image[p] >= N) tail_type.push_back(image[p] - N);
                colors.insert(tail_type);
                return;
            }
            for (unsigned v = low; v < image.size(); ++v) {
                pick[idx] = v;
                self(self, idx + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
        return colors;
    };

    // every block-respecting copy: tail fixed pointwise, omega-part mapped
    // strictly increasingly into the N omega positions
    std::vector<unsigned> sel(omega_small);
    bool all_hold = true;
    auto copies = [&](auto&& self, unsigned idx, unsigned low) -> void {
        if (!all_hold) return;
        if (idx == omega_small) {
            std::vector<unsigned> image(sel.begin(), sel.end());
            for (unsigned i = 0; i < r; ++i) image.push_back(N + i);
            if (colors_of_copy(image).size() < t) all_hold = false;
            return;
        }
        for (unsigned v = low; v < N; ++v) {
            sel[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    copies(copies, 0, 0);
    return all_hold ? WitnessVerdict::Holds : WitnessVerdict::Fails;
}

}  // namespace scatspec

#include "scatspec/types.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "scatspec/errors.hpp"

namespace scatspec {

std::string label_text(NodeLabel label) {
    switch (label) {
        case NodeLabel::One: return "1";
        case NodeLabel::Plus: return "+";
        case NodeLabel::Omega: return "w";
        case NodeLabel::OmegaStar: return "w*";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// SigmaTree

namespace {

std::uint32_t build_sigma(const ChainTerm& term, SigmaTree& out) {
    SigmaTree::Node node;
    node.subterm_size = size_if_finite(term);
    node.subterm_tails = tails(term);
    switch (term.kind()) {
        case TermKind::One:
            node.label = NodeLabel::One;
            break;
        case TermKind::FinSum:
            node.label = NodeLabel::Plus;
            break;
        case TermKind::OmegaSum:
            node.label = NodeLabel::Omega;
            break;
        case TermKind::OmegaStarSum:
            node.label = NodeLabel::OmegaStar;
            break;
        case TermKind::Zero:
            throw DomainError("internal", "Zero has no sigma-tree node");
    }
    std::uint32_t id = static_cast<std::uint32_t>(out.nodes.size());
    out.nodes.push_back(std::move(node));
    // recursion reallocates out.nodes, so collect child ids first
    std::vector<std::uint32_t> kids;
    if (term.kind() == TermKind::FinSum) {
        for (const auto& c : term.children()) kids.push_back(build_sigma(c, out));
    } else if (term.is_omega_kind()) {
        kids.push_back(build_sigma(term.repeat(), out));
    }
    out.nodes[id].children = std::move(kids);
    return id;
}

}  // namespace

SigmaTree sigma_tree(const ChainTerm& term) {
    ChainTerm t = canonicalize(term);
    SigmaTree tree;
    if (t.kind() == TermKind::Zero) return tree;
    build_sigma(t, tree);
    return tree;
}

unsigned SigmaTree::height() const {
    if (nodes.empty()) return 0;
    // nodes are in DFS order but children ids are explicit; recurse.
    auto depth = [&](auto&& self, std::uint32_t id) -> unsigned {
        unsigned best = 0;
        for (auto c : nodes[id].children) best = std::max(best, self(self, c));
        return best + 1;
    };
    return depth(depth, 0);
}

// ---------------------------------------------------------------------------
// TypeTree

TypeTree TypeTree::leaf() {
    TypeTree t;
    t.nodes.push_back({NodeLabel::One, {}, {}});
    return t;
}

TypeTree TypeTree::compose(NodeLabel root, const std::vector<TypeTree>& children,
                           const std::vector<std::uint32_t>& iota) {
    // Assemble with provisional ids, then renumber by BFS.
    struct Raw {
        NodeLabel label;
        std::vector<std::uint32_t> children;
        std::vector<std::uint32_t> iota;
    };
    std::vector<Raw> raw;
    raw.push_back({root, {}, iota});
    for (const auto& child : children) {
        std::uint32_t offset = static_cast<std::uint32_t>(raw.size());
        raw[0].children.push_back(offset);
        for (const auto& n : child.nodes) {
            Raw r{n.label, n.children, n.iota};
            for (auto& c : r.children) c += offset;
            raw.push_back(std::move(r));
        }
    }
    std::vector<std::uint32_t> order(raw.size(), 0);
    std::vector<std::uint32_t> bfs;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        std::uint32_t id = queue.front();
        queue.pop_front();
        order[id] = static_cast<std::uint32_t>(bfs.size());
        bfs.push_back(id);
        for (auto c : raw[id].children) queue.push_back(c);
    }
    TypeTree out;
    out.nodes.resize(raw.size());
    for (std::uint32_t new_id = 0; new_id < bfs.size(); ++new_id) {
        const Raw& r = raw[bfs[new_id]];
        Node n{r.label, r.children, r.iota};
        for (auto& c : n.children) c = order[c];
        out.nodes[new_id] = std::move(n);
    }
    return out;
}

unsigned TypeTree::leaf_count() const {
    unsigned n = 0;
    for (const auto& node : nodes)
        if (node.children.empty()) ++n;
    return n;
}

unsigned TypeTree::height() const {
    if (nodes.empty()) return 0;
    std::vector<unsigned> depth(nodes.size(), 1);
    unsigned best = 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {  // children have larger ids
        for (auto c : nodes[i].children) depth[c] = depth[i] + 1;
        best = std::max(best, depth[i]);
    }
    return best;
}

bool TypeTree::bfs_numbered() const {
    std::uint32_t next = 1;
    for (const auto& node : nodes) {
        for (auto c : node.children) {
            if (c != next) return false;
            ++next;
        }
    }
    return next == nodes.size();
}

int TypeTree::cmp(const TypeTree& other) const {
    if (nodes.size() != other.nodes.size()) return nodes.size() < other.nodes.size() ? -1 : 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& a = nodes[i];
        const Node& b = other.nodes[i];
        if (a.label != b.label) return a.label < b.label ? -1 : 1;
        if (a.children != b.children) return a.children < b.children ? -1 : 1;
        if (a.iota != b.iota) return a.iota < b.iota ? -1 : 1;
    }
    return 0;
}

std::string TypeTree::text() const {
    auto rec = [&](auto&& self, std::uint32_t id) -> std::string {
        const Node& n = nodes[id];
        if (n.children.empty()) return "1";
        std::string s = label_text(n.label);
        s += '(';
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i > 0) s += ',';
            if (n.label == NodeLabel::Plus) s += 'i' + std::to_string(n.iota[i]) + ':';
            s += self(self, n.children[i]);
        }
        s += ')';
        return s;
    };
    return nodes.empty() ? std::string() : rec(rec, 0);
}

std::vector<unsigned> omega_outdegrees(const TypeTree& type) {
    std::vector<unsigned> out;
    for (const auto& node : type.nodes)
        if (node.label == NodeLabel::Omega || node.label == NodeLabel::OmegaStar)
            out.push_back(static_cast<unsigned>(node.children.size()));
    return out;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

class TypeEnumerator {
public:
    explicit TypeEnumerator(const SigmaTree& sigma) : sigma_(sigma) {}

    // Types of the subtree at `node` with exactly m selected leaves.
    const std::vector<TypeTree>& types(std::uint32_t node, unsigned m) {
        auto key = std::make_pair(node, m);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<TypeTree> result;
        const SigmaTree::Node& sn = sigma_.nodes[node];
        switch (sn.label) {
            case NodeLabel::One:
                if (m == 1) result.push_back(TypeTree::leaf());
                break;
            case NodeLabel::Plus:
                plus_types(sn, m, result);
                break;
            case NodeLabel::Omega:
            case NodeLabel::OmegaStar:
                omega_types(sn, m, result);
                break;
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    // Choose a subset of iota-children and a composition of m over it. The
    // iota indices of the chosen children are retained.
    void plus_types(const SigmaTree::Node& sn, unsigned m, std::vector<TypeTree>& out) {
        std::vector<TypeTree> chosen;
        std::vector<std::uint32_t> iota;
        auto rec = [&](auto&& self, std::size_t child_at, unsigned left) -> void {
            if (left == 0) {
                if (!chosen.empty()) out.push_back(TypeTree::compose(NodeLabel::Plus, chosen, iota));
                return;
            }
            if (child_at == sn.children.size()) return;
            // skip this child
            self(self, child_at + 1, left);
            // or give it 1..left leaves
            for (unsigned take = 1; take <= left; ++take) {
                for (const TypeTree& t : types(sn.children[child_at], take)) {
                    chosen.push_back(t);
                    iota.push_back(static_cast<std::uint32_t>(child_at));
                    self(self, child_at + 1, left - take);
                    chosen.pop_back();
                    iota.pop_back();
                }
            }
        };
        rec(rec, 0, m);
    }

    // Choose s >= 1 blocks and an ordered sequence of block types with leaf
    // counts composing m. With a constant repeat block every sequence is
    // realizable in either sum orientation; the sequence is recorded in
    // chain (left-to-right) order.
    void omega_types(const SigmaTree::Node& sn, unsigned m, std::vector<TypeTree>& out) {
        std::uint32_t block = sn.children[0];
        std::vector<TypeTree> seq;
        // larger first blocks first, so fewer-block types lead the list
        auto rec = [&](auto&& self, unsigned left) -> void {
            if (left == 0) {
                if (!seq.empty()) out.push_back(TypeTree::compose(sn.label, seq));
                return;
            }
            for (unsigned take = left; take >= 1; --take) {
                for (const TypeTree& t : types(block, take)) {
                    seq.push_back(t);
                    self(self, left - take);
                    seq.pop_back();
                }
            }
        };
        rec(rec, m);
    }

    const SigmaTree& sigma_;
    std::map<std::pair<std::uint32_t, unsigned>, std::vector<TypeTree>> memo_;
};

}  // namespace

std::vector<TypeTree> enumerate_types(const ChainTerm& term, unsigned n) {
    if (n == 0) throw DomainError("n-zero", "types are defined for n >= 1");
    SigmaTree sigma = sigma_tree(term);
    if (sigma.empty()) return {};
    TypeEnumerator en(sigma);
    std::vector<TypeTree> raw = en.types(0, n);
    std::vector<TypeTree> result;
    std::set<TypeTree> seen;
    for (auto& t : raw)
        if (seen.insert(t).second) result.push_back(std::move(t));
    return result;
}

std::size_t count_types(const ChainTerm& term, unsigned n) {
    return enumerate_types(term, n).size();
}

}  // namespace scatspec

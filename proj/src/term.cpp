#include "scatspec/term.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "scatspec/errors.hpp"

namespace scatspec {

namespace {
constexpr std::uint64_t kMaxFiniteLiteral = 100000;
}

ChainTerm ChainTerm::zero() { return ChainTerm(TermKind::Zero, {}); }

ChainTerm ChainTerm::one() { return ChainTerm(TermKind::One, {}); }

ChainTerm ChainTerm::finite(std::uint64_t n) {
    if (n == 0) return zero();
    if (n == 1) return one();
    std::vector<ChainTerm> ones(static_cast<std::size_t>(n), one());
    return ChainTerm(TermKind::FinSum, std::move(ones));
}

ChainTerm ChainTerm::fin_sum(std::vector<ChainTerm> parts) {
    if (parts.size() < 2)
        throw DomainError("finsum-arity", "finite sum needs at least 2 summands");
    return ChainTerm(TermKind::FinSum, std::move(parts));
}

ChainTerm ChainTerm::omega_sum(std::vector<ChainTerm> prefix, ChainTerm repeat) {
    if (size_if_finite(repeat) == std::uint64_t{0})
        throw DomainError("empty-repeat",
                          "omega-sum repeat block denotes the empty chain; write 0 instead");
    prefix.push_back(std::move(repeat));
    return ChainTerm(TermKind::OmegaSum, std::move(prefix));
}

ChainTerm ChainTerm::omega_star_sum(std::vector<ChainTerm> prefix, ChainTerm repeat) {
    if (size_if_finite(repeat) == std::uint64_t{0})
        throw DomainError("empty-repeat",
                          "omega*-sum repeat block denotes the empty chain; write 0 instead");
    prefix.push_back(std::move(repeat));
    return ChainTerm(TermKind::OmegaStarSum, std::move(prefix));
}

const std::vector<ChainTerm>& ChainTerm::children() const { return parts_; }

std::span<const ChainTerm> ChainTerm::prefix() const {
    return {parts_.data(), parts_.size() - 1};
}

const ChainTerm& ChainTerm::repeat() const { return parts_.back(); }

int ChainTerm::cmp(const ChainTerm& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_ ? -1 : 1;
    if (parts_.size() != other.parts_.size())
        return parts_.size() < other.parts_.size() ? -1 : 1;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (int c = parts_[i].cmp(other.parts_[i]); c != 0) return c;
    }
    return 0;
}

std::size_t ChainTerm::node_count() const {
    std::size_t n = 1;
    for (const auto& p : parts_) n += p.node_count();
    return n;
}

// ---------------------------------------------------------------------------
// parse

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ChainTerm run() {
        ChainTerm t = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    ChainTerm parse_sum() {
        std::vector<ChainTerm> parts;
        parts.push_back(parse_atom());
        while (true) {
            skip_ws();
            if (!eat('+')) break;
            parts.push_back(parse_atom());
        }
        if (parts.size() == 1) return std::move(parts.front());
        return ChainTerm::fin_sum(std::move(parts));
    }

    ChainTerm parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a term");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ChainTerm t = parse_sum();
            expect(')');
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_nat();
        if (c == 'w') return parse_omega();
        if (text_.substr(pos_, 3) == "rev") {
            pos_ += 3;
            skip_ws();
            expect('(');
            ChainTerm t = parse_sum();
            expect(')');
            return reverse(t);
        }
        fail("expected a term");
    }

    ChainTerm parse_nat() {
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > kMaxFiniteLiteral) fail("finite chain literal too large", start);
            ++pos_;
        }
        return ChainTerm::finite(value);
    }

    ChainTerm parse_omega() {
        std::size_t start = pos_;
        ++pos_;  // 'w'
        bool star = eat('*');
        if (!star && eat('^')) return parse_sign_power(start);
        skip_ws();
        expect('[');
        std::vector<ChainTerm> blocks;
        skip_ws();
        if (peek() == ']') fail("omega-sum needs at least one block", start);
        blocks.push_back(parse_sum());
        while (true) {
            skip_ws();
            if (!eat(';')) break;
            blocks.push_back(parse_sum());
        }
        expect(']');
        ChainTerm repeat = std::move(blocks.back());
        blocks.pop_back();
        return star ? ChainTerm::omega_star_sum(std::move(blocks), std::move(repeat))
                    : ChainTerm::omega_sum(std::move(blocks), std::move(repeat));
    }

    // "w^(s_0,...,s_{k-1})": start with w or w* per s_0, then each later
    // sign wraps the accumulated term in an omega-(resp. omega*-)sum.
    ChainTerm parse_sign_power(std::size_t start) {
        skip_ws();
        expect('(');
        std::vector<bool> plus;
        while (true) {
            skip_ws();
            if (eat('+'))
                plus.push_back(true);
            else if (eat('-'))
                plus.push_back(false);
            else
                fail("expected '+' or '-'");
            skip_ws();
            if (!eat(',')) break;
        }
        expect(')');
        if (plus.empty()) fail("w^() needs at least one sign", start);
        ChainTerm acc = ChainTerm::one();
        for (bool p : plus)
            acc = p ? ChainTerm::omega_sum({}, std::move(acc))
                    : ChainTerm::omega_star_sum({}, std::move(acc));
        return acc;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) {
        throw ParseError(message, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ChainTerm parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// print

namespace {

bool all_ones(const std::vector<ChainTerm>& parts) {
    return std::all_of(parts.begin(), parts.end(),
                       [](const ChainTerm& t) { return t.kind() == TermKind::One; });
}

void print_to(const ChainTerm& term, std::string& out, bool as_atom);

void print_blocks(const ChainTerm& term, std::string& out) {
    out += '[';
    for (std::size_t i = 0; i < term.prefix().size(); ++i) {
        print_to(term.prefix()[i], out, false);
        out += "; ";
    }
    print_to(term.repeat(), out, false);
    out += ']';
}

void print_to(const ChainTerm& term, std::string& out, bool as_atom) {
    switch (term.kind()) {
        case TermKind::Zero:
            out += '0';
            return;
        case TermKind::One:
            out += '1';
            return;
        case TermKind::FinSum: {
            if (all_ones(term.children())) {
                out += std::to_string(term.children().size());
                return;
            }
            if (as_atom) out += '(';
            for (std::size_t i = 0; i < term.children().size(); ++i) {
                if (i > 0) out += " + ";
                print_to(term.children()[i], out, true);
            }
            if (as_atom) out += ')';
            return;
        }
        case TermKind::OmegaSum:
            out += 'w';
            print_blocks(term, out);
            return;
        case TermKind::OmegaStarSum:
            out += "w*";
            print_blocks(term, out);
            return;
    }
}

}  // namespace

std::string print(const ChainTerm& term) {
    std::string out;
    print_to(term, out, false);
    return out;
}

// ---------------------------------------------------------------------------
// canonicalize / reverse / tails / size

namespace detail {

ChainTerm normalized_sum(std::vector<ChainTerm> parts) {
    std::vector<ChainTerm> flat;
    for (auto& p : parts) {
        if (size_if_finite(p) == std::uint64_t{0}) continue;
        if (p.kind() == TermKind::FinSum) {
            for (auto& c : p.children()) flat.push_back(c);
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) return ChainTerm::zero();
    if (flat.size() == 1) return std::move(flat.front());
    return ChainTerm::fin_sum(std::move(flat));
}

}  // namespace detail

ChainTerm canonicalize(const ChainTerm& term) {
    switch (term.kind()) {
        case TermKind::Zero:
        case TermKind::One:
            return term;
        case TermKind::FinSum: {
            std::vector<ChainTerm> parts;
            parts.reserve(term.children().size());
            for (const auto& c : term.children()) parts.push_back(canonicalize(c));
            return detail::normalized_sum(std::move(parts));
        }
        case TermKind::OmegaSum:
        case TermKind::OmegaStarSum: {
            const bool star = term.kind() == TermKind::OmegaStarSum;
            ChainTerm tail = star ? ChainTerm::omega_star_sum({}, canonicalize(term.repeat()))
                                  : ChainTerm::omega_sum({}, canonicalize(term.repeat()));
            std::vector<ChainTerm> kept;
            for (const auto& p : term.prefix()) {
                ChainTerm c = canonicalize(p);
                if (c.kind() != TermKind::Zero) kept.push_back(std::move(c));
            }
            if (kept.empty()) return tail;
            // Hoist the prefix: blocks closest to the repeat sit next to the
            // tail sum, which for omega* means prefix order is reversed.
            std::vector<ChainTerm> parts;
            if (star) {
                parts.push_back(std::move(tail));
                parts.insert(parts.end(), kept.rbegin(), kept.rend());
            } else {
                parts = std::move(kept);
                parts.push_back(std::move(tail));
            }
            return detail::normalized_sum(std::move(parts));
        }
    }
    return term;  // unreachable
}

ChainTerm reverse(const ChainTerm& term) {
    switch (term.kind()) {
        case TermKind::Zero:
        case TermKind::One:
            return term;
        case TermKind::FinSum: {
            std::vector<ChainTerm> parts;
            parts.reserve(term.children().size());
            for (auto it = term.children().rbegin(); it != term.children().rend(); ++it)
                parts.push_back(reverse(*it));
            return ChainTerm::fin_sum(std::move(parts));
        }
        case TermKind::OmegaSum:
        case TermKind::OmegaStarSum: {
            // Block k maps to block k of the opposite sum kind; the omega*
            // prefix convention (prefix[0] rightmost) keeps list order.
            std::vector<ChainTerm> prefix;
            prefix.reserve(term.prefix().size());
            for (const auto& p : term.prefix()) prefix.push_back(reverse(p));
            ChainTerm rep = reverse(term.repeat());
            return term.kind() == TermKind::OmegaSum
                       ? ChainTerm::omega_star_sum(std::move(prefix), std::move(rep))
                       : ChainTerm::omega_sum(std::move(prefix), std::move(rep));
        }
    }
    return term;  // unreachable
}

TailDescriptor tails(const ChainTerm& term) {
    switch (term.kind()) {
        case TermKind::Zero:
        case TermKind::One:
            return {Tail::Fin, Tail::Fin};
        case TermKind::FinSum: {
            const ChainTerm* first = nullptr;
            const ChainTerm* last = nullptr;
            for (const auto& c : term.children()) {
                if (size_if_finite(c) == std::uint64_t{0}) continue;
                if (!first) first = &c;
                last = &c;
            }
            if (!first) return {Tail::Fin, Tail::Fin};
            return {tails(*first).left, tails(*last).right};
        }
        case TermKind::OmegaSum: {
            Tail left = term.prefix().empty() ? tails(term.repeat()).left
                                              : tails(canonicalize(term)).left;
            return {left, Tail::Inf};
        }
        case TermKind::OmegaStarSum: {
            Tail right = term.prefix().empty() ? tails(term.repeat()).right
                                               : tails(canonicalize(term)).right;
            return {Tail::Inf, right};
        }
    }
    return {};  // unreachable
}

std::optional<std::uint64_t> size_if_finite(const ChainTerm& term) {
    switch (term.kind()) {
        case TermKind::Zero:
            return 0;
        case TermKind::One:
            return 1;
        case TermKind::FinSum: {
            std::uint64_t total = 0;
            for (const auto& c : term.children()) {
                auto s = size_if_finite(c);
                if (!s) return std::nullopt;
                total += *s;
            }
            return total;
        }
        case TermKind::OmegaSum:
        case TermKind::OmegaStarSum:
            // The repeat block is nonempty by construction.
            return std::nullopt;
    }
    return std::nullopt;  // unreachable
}

bool is_finite_chain(const ChainTerm& term) { return size_if_finite(term).has_value(); }

}  // namespace scatspec

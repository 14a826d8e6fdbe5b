#include "scatspec/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <optional>
#include <sstream>

#include "scatspec/condense.hpp"
#include "scatspec/embed.hpp"
#include "scatspec/errors.hpp"
#include "scatspec/oracle.hpp"
#include "scatspec/ramsey.hpp"
#include "scatspec/term.hpp"
#include "scatspec/types.hpp"
#include "scatspec/verify.hpp"

namespace scatspec::cli {

namespace {

using Json = nlohmann::ordered_json;

Json type_tree_json(const TypeTree& type, std::uint32_t id = 0) {
    const auto& node = type.nodes[id];
    Json j;
    j["label"] = label_text(node.label);
    Json children = Json::array();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        Json edge;
        edge["edge"] = node.label == NodeLabel::Plus ? Json(node.iota[i]) : Json(nullptr);
        edge["node"] = type_tree_json(type, node.children[i]);
        children.push_back(std::move(edge));
    }
    j["children"] = std::move(children);
    return j;
}

Json spectrum_entry_json(const SpectrumEntry& e) {
    Json j;
    j["n"] = e.n;
    switch (e.kind) {
        case SpectrumKind::Exact: j["kind"] = "exact"; break;
        case SpectrumKind::UpperBound: j["kind"] = "upper-bound"; break;
        case SpectrumKind::Infinite: j["kind"] = "infinite"; break;
    }
    j["value"] = e.value.str();
    j["provenance"] = e.provenance;
    return j;
}

std::string address_text(const FiniteExpansion& exp, const FiniteExpansion::Address& addr) {
    std::string s;
    for (const auto& step : addr) {
        if (!s.empty()) s += '/';
        bool plus = exp.sigma.nodes[step.node].label == NodeLabel::Plus;
        s += (plus ? 'i' : 'b');
        s += std::to_string(step.edge);
    }
    return s.empty() ? "." : s;
}

std::vector<std::string> increasing_warnings(const ChainTerm& raw) {
    std::vector<std::string> out;
    for (const auto& e : check_increasing(raw).entries) {
        if (e.holds != Outcome::Yes)
            out.push_back("increasing-condition unknown at omega-sum node '" +
                          (e.path.empty() ? std::string("/") : e.path) + "'");
    }
    return out;
}

struct Command {
    std::string name;
    Json payload;
    std::optional<std::string> input_term;
    std::vector<std::string> warnings;
};

Json finish(const Command& cmd) {
    Json body;
    body["status"] = "ok";
    body["command"] = cmd.name;
    body["input_term"] = cmd.input_term ? Json(*cmd.input_term) : Json(nullptr);
    body["payload"] = cmd.payload;
    body["warnings"] = cmd.warnings;
    return body;
}

Json error_body(const std::string& command, const std::string& code, const std::string& message) {
    Json body;
    body["status"] = "error";
    body["command"] = command;
    body["error"]["code"] = code;
    body["error"]["message"] = message;
    return body;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long v = std::stoul(item, &used);
        if (used != item.size()) throw DomainError("bad-list", "expected comma-separated naturals");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw DomainError("bad-list", "expected comma-separated naturals");
    return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
    CLI::App app{"symbolic calculator for countable scattered chains"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --seed appear after a subcommand too
    long long seed = 0;  // accepted and ignored: all computations are deterministic
    app.add_option("--seed", seed);

    std::string term_text, rhs_text, drop_text, m_text;
    unsigned opt_n = 1, opt_N = 1, opt_k = 2, opt_m = 1, opt_t = 1, opt_ground = 0;
    bool flag_steps = false, flag_list = false, flag_serial = false;

    // Each handler fills `result`; exceptions map to exit codes below.
    Command result;
    std::function<void()> action;

    auto add_term_cmd = [&](const std::string& name, const std::string& desc,
                            std::function<void(const ChainTerm&)> handler,
                            bool warn_increasing = false) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("term", term_text, "chain expression")->required();
        sub->callback([&, handler, warn_increasing, name]() {
            result.name = name;
            ChainTerm raw = parse(term_text);
            result.input_term = print(canonicalize(raw));
            if (warn_increasing) result.warnings = increasing_warnings(raw);
            handler(raw);
        });
        return sub;
    };

    add_term_cmd("parse", "parse a chain expression", [&](const ChainTerm& raw) {
        result.payload["term"] = print(raw);
        result.payload["canonical"] = print(canonicalize(raw));
    }, true);

    add_term_cmd("canon", "canonicalize a term", [&](const ChainTerm& raw) {
        result.payload["canonical"] = print(canonicalize(raw));
    }, true);

    add_term_cmd("rev", "reverse a term", [&](const ChainTerm& raw) {
        result.payload["reversed"] = print(canonicalize(reverse(raw)));
    });

    add_term_cmd("rank", "finite condensation (Hausdorff) rank", [&](const ChainTerm& raw) {
        result.payload["rank"] = fc_rank(raw);
    });

    {
        CLI::App* sub = add_term_cmd("condense", "one finite condensation step",
                                     [&](const ChainTerm& raw) {
            if (flag_steps) {
                Json steps = Json::array();
                for (const auto& s : condensation_steps(raw)) steps.push_back(print(s));
                result.payload["steps"] = std::move(steps);
            } else {
                result.payload["result"] = print(fin_condense(raw));
            }
        });
        sub->add_flag("--steps", flag_steps, "list the whole iteration to One");
    }

    auto add_pair_cmd = [&](const std::string& name, const std::string& desc, bool both_ways) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("lhs", term_text, "chain expression")->required();
        sub->add_option("rhs", rhs_text, "chain expression")->required();
        sub->callback([&, name, both_ways]() {
            result.name = name;
            ChainTerm a = parse(term_text);
            ChainTerm b = parse(rhs_text);
            result.input_term = print(canonicalize(a));
            result.payload["lhs"] = print(canonicalize(a));
            result.payload["rhs"] = print(canonicalize(b));
            EmbedVerdict v = both_ways ? equivalent(a, b) : embeds(a, b);
            result.payload["outcome"] = v.yes() ? "yes" : "unknown";
            result.payload["trace"] = v.trace;
        });
    };
    add_pair_cmd("embeds", "sound embeddability check (yes / unknown)", false);
    add_pair_cmd("equiv", "sound restriction-equivalence check", true);

    {
        CLI::App* sub = add_term_cmd("restrict", "drop omega-sum block indices",
                                     [&](const ChainTerm& raw) {
            RestrictionSpec spec;
            for (auto v : parse_uint_list(drop_text)) spec.dropped.insert(v);
            result.payload["result"] = print(restrict_term(raw, spec));
        });
        sub->add_option("--drop", drop_text, "comma-separated block indices")->required();
    }

    {
        CLI::App* sub = add_term_cmd("types", "enumerate (n,sigma)-types",
                                     [&](const ChainTerm& raw) {
            auto types = enumerate_types(raw, opt_n);
            result.payload["n"] = opt_n;
            result.payload["count"] = types.size();
            if (flag_list) {
                Json list = Json::array();
                for (const auto& t : types) {
                    Json item;
                    item["text"] = t.text();
                    item["omega_outdegrees"] = omega_outdegrees(t);
                    item["tree"] = type_tree_json(t);
                    list.push_back(std::move(item));
                }
                result.payload["types"] = std::move(list);
            }
        }, true);
        sub->add_option("--n", opt_n, "number of points")->required();
        sub->add_flag("--list", flag_list, "include the full trees");
    }

    {
        CLI::App* sub = add_term_cmd("bound", "type-sum upper bounds for T(n, .)",
                                     [&](const ChainTerm& raw) {
            Json list = Json::array();
            for (unsigned n = 1; n <= opt_n; ++n) {
                Json item;
                item["n"] = n;
                item["value"] = spectrum_upper(canonicalize(raw), n).str();
                list.push_back(std::move(item));
            }
            result.payload["bounds"] = std::move(list);
        });
        sub->add_option("--n", opt_n, "bound entries 1..n")->required();
    }

    {
        CLI::App* sub = add_term_cmd("spectrum", "big Ramsey spectrum entries",
                                     [&](const ChainTerm& raw) {
            Json list = Json::array();
            for (const auto& e : spectrum(raw, opt_n)) list.push_back(spectrum_entry_json(e));
            result.payload["entries"] = std::move(list);
        });
        sub->add_option("--n", opt_n, "entries 1..n")->required();
    }

    {
        CLI::App* sub = app.add_subcommand("devlin", "big Ramsey degree of n in the rationals");
        sub->add_option("--n", opt_n, "index in the tangent-number sequence")->required();
        sub->callback([&]() {
            result.name = "devlin";
            result.payload["n"] = opt_n;
            result.payload["value"] = devlin(opt_n).str();
        });
    }

    {
        CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
        oracle_cmd->require_subcommand(1);

        CLI::App* patterns = oracle_cmd->add_subcommand("patterns", "joint order patterns by enumeration");
        patterns->add_option("--m", m_text, "comma-separated sequence lengths")->required();
        patterns->add_option("--ground", opt_ground, "ground set size (default: sum of lengths)");
        patterns->callback([&]() {
            result.name = "oracle patterns";
            std::vector<unsigned> m;
            for (auto v : parse_uint_list(m_text)) m.push_back(v);
            unsigned ground = opt_ground;
            if (ground == 0)
                for (unsigned mi : m) ground += mi;
            result.payload["m"] = m;
            result.payload["ground"] = ground;
            result.payload["count"] = brute_pattern_count(m, ground);
            result.payload["dp_count"] = pattern_count(m).str();
        });

        CLI::App* ramsey = oracle_cmd->add_subcommand("ramsey", "exhaustive finite Ramsey check");
        ramsey->add_option("--N", opt_N, "ground chain size")->required();
        ramsey->add_option("--n", opt_n, "subset size being colored")->required();
        ramsey->add_option("--k", opt_k, "number of colors")->required();
        ramsey->add_option("--m", opt_m, "monochromatic subset size")->required();
        ramsey->add_flag("--serial", flag_serial, "use the serial reference scan");
        ramsey->callback([&]() {
            result.name = "oracle ramsey";
            bool holds = flag_serial ? ramsey_check_serial(opt_N, opt_n, opt_k, opt_m)
                                     : ramsey_check(opt_N, opt_n, opt_k, opt_m);
            result.payload["N"] = opt_N;
            result.payload["n"] = opt_n;
            result.payload["k"] = opt_k;
            result.payload["m"] = opt_m;
            result.payload["holds"] = holds;
        });

        CLI::App* witness = oracle_cmd->add_subcommand("witness", "lower-bound coloring witness");
        witness->add_option("--term", term_text, "chain expression (omega + r family)")->required();
        witness->add_option("--n", opt_n, "points per coloring")->required();
        witness->add_option("--t", opt_t, "color count to witness")->required();
        witness->add_option("--N", opt_N, "expansion depth")->required();
        witness->callback([&]() {
            result.name = "oracle witness";
            ChainTerm t = parse(term_text);
            result.input_term = print(canonicalize(t));
            WitnessVerdict v = witness_lower_bound(t, opt_n, opt_t, opt_N);
            result.payload["n"] = opt_n;
            result.payload["t"] = opt_t;
            result.payload["scale"] = opt_N;
            switch (v) {
                case WitnessVerdict::Holds: result.payload["verdict"] = "holds"; break;
                case WitnessVerdict::Fails: result.payload["verdict"] = "fails"; break;
                case WitnessVerdict::Inconclusive: result.payload["verdict"] = "inconclusive"; break;
            }
        });

        CLI::App* expand_cmd = oracle_cmd->add_subcommand("expand", "finite prefix materialization");
        expand_cmd->add_option("--term", term_text, "chain expression")->required();
        expand_cmd->add_option("--N", opt_N, "blocks per omega-sum")->required();
        expand_cmd->callback([&]() {
            result.name = "oracle expand";
            ChainTerm t = parse(term_text);
            result.input_term = print(canonicalize(t));
            FiniteExpansion exp = expand(t, opt_N);
            result.payload["depth"] = opt_N;
            result.payload["size"] = exp.size();
            Json addrs = Json::array();
            const std::size_t limit = 200;
            for (std::size_t i = 0; i < exp.size() && i < limit; ++i)
                addrs.push_back(address_text(exp, exp.addresses[i]));
            result.payload["positions"] = std::move(addrs);
            result.payload["truncated"] = exp.size() > limit;
        });

        CLI::App* realized = oracle_cmd->add_subcommand("realized", "types realized in an expansion");
        realized->add_option("--term", term_text, "chain expression")->required();
        realized->add_option("--n", opt_n, "number of points")->required();
        realized->add_option("--N", opt_N, "expansion depth")->required();
        realized->callback([&]() {
            result.name = "oracle realized";
            ChainTerm t = parse(term_text);
            result.input_term = print(canonicalize(t));
            auto types = realized_types(t, opt_n, opt_N);
            result.payload["n"] = opt_n;
            result.payload["depth"] = opt_N;
            result.payload["count"] = types.size();
            Json list = Json::array();
            for (const auto& type : types) list.push_back(type.text());
            result.payload["types"] = std::move(list);
        });
    }

    {
        CLI::App* sub = app.add_subcommand("verify-suite", "run the full invariant battery");
        sub->callback([&]() {
            result.name = "verify-suite";
            auto checks = verify_suite();
            Json list = Json::array();
            unsigned passed = 0;
            for (const auto& c : checks) {
                Json item;
                item["name"] = c.name;
                item["passed"] = c.passed;
                item["detail"] = c.detail;
                list.push_back(std::move(item));
                if (c.passed) ++passed;
            }
            result.payload["checks"] = std::move(list);
            result.payload["passed"] = passed;
            result.payload["failed"] = static_cast<unsigned>(checks.size()) - passed;
            if (passed != checks.size())
                throw DomainError("verify-failed", "invariant battery reported failures");
        });
    }

    std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants reversed
    std::string command_name = argv.empty() ? "" : argv.front();
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            CommandResult ok;
            ok.body = error_body("help", "help", app.help());
            ok.body["status"] = "ok";
            return ok;
        }
        return {1, error_body(command_name, "usage", e.what())};
    } catch (const ParseError& e) {
        return {2, error_body(command_name, e.code(), e.what())};
    } catch (const GuardError& e) {
        return {3, error_body(command_name, e.code(), e.what())};
    } catch (const DomainError& e) {
        // verify-suite failures surface the full payload alongside the error
        if (e.code() == "verify-failed") {
            Json body = finish(result);
            body["status"] = "error";
            body["error"]["code"] = e.code();
            body["error"]["message"] = e.what();
            return {2, body};
        }
        return {2, error_body(command_name, e.code(), e.what())};
    } catch (const std::exception& e) {
        return {2, error_body(command_name, "internal", e.what())};
    }
    return {0, finish(result)};
}

}  // namespace scatspec::cli

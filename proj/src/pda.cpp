#include "vword/pda.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "vword/errors.hpp"

namespace vword {

std::string_view state_name(PdaState s) {
    switch (s) {
        case PdaState::q0: return "q0";
        case PdaState::qa: return "qa";
        case PdaState::qr: return "qr";
    }
    return "?";
}

PdaState parse_state(std::string_view text) {
    if (text == "q0") return PdaState::q0;
    if (text == "qa") return PdaState::qa;
    if (text == "qr") return PdaState::qr;
    throw ParseError("unknown state: " + std::string(text));
}

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

struct TokenMap {
    GenSymbol token;
    Prm prm;  // reduced
};

// One reduced prm per input token. Canonical token order: the plain
// generators (name-sorted), then the inverses of the non-involutions —
// an involution is its own inverse, so its inverse token would only
// duplicate rows.
std::vector<TokenMap> token_maps(const GeneratorMap& gm) {
    std::vector<TokenMap> plain;
    std::vector<TokenMap> inverted;
    for (const auto& [name, prm] : gm) {
        Prm q = prm.reduced();
        Prm qi = q.inverse();
        const bool involution = equals(q, qi);
        plain.push_back({GenSymbol{name, false}, std::move(q)});
        if (!involution) inverted.push_back({GenSymbol{name, true}, std::move(qi)});
    }
    plain.insert(plain.end(), std::make_move_iterator(inverted.begin()),
                 std::make_move_iterator(inverted.end()));
    return plain;
}

// Loading row first, then per alphabet token: the qa row, the qr->qa rows
// sorted by pop, the qr->qr rows sorted by pop.
std::vector<PdaTransition> canonical_order(const std::vector<GenSymbol>& alphabet,
                                           const std::vector<PdaTransition>& rows) {
    std::vector<PdaTransition> out;
    out.reserve(rows.size());
    for (const PdaTransition& t : rows)
        if (t.from == PdaState::q0) out.push_back(t);

    auto by_pop = [](const PdaTransition& x, const PdaTransition& y) {
        return x.pop < y.pop;
    };
    for (const GenSymbol& tok : alphabet) {
        std::vector<PdaTransition> to_accept;
        std::vector<PdaTransition> rewrite;
        for (const PdaTransition& t : rows) {
            if (!t.input || !(*t.input == tok)) continue;
            if (t.from == PdaState::qa) {
                out.push_back(t);
            } else if (t.to == PdaState::qa) {
                to_accept.push_back(t);
            } else {
                rewrite.push_back(t);
            }
        }
        std::sort(to_accept.begin(), to_accept.end(), by_pop);
        std::sort(rewrite.begin(), rewrite.end(), by_pop);
        out.insert(out.end(), to_accept.begin(), to_accept.end());
        out.insert(out.end(), rewrite.begin(), rewrite.end());
    }
    return out;
}

Pda build_once(const GeneratorMap& gm, const BinaryWord& node) {
    std::vector<TokenMap> tokens = token_maps(gm);
    if (tokens.empty()) throw std::invalid_argument("generator map is empty");

    const std::string node_bits = node.bits();
    Pda p;
    p.node = node;
    p.transitions.push_back({PdaState::q0, std::nullopt, "", node_bits + "#", PdaState::qa});

    for (const TokenMap& tm : tokens) {
        p.alphabet.push_back(tm.token);
        const std::string tok = to_token(tm.token);

        bool readable = false;
        for (const auto& [d, r] : tm.prm.pairs())
            if (d.is_prefix_of(node)) readable = true;
        if (!readable)
            throw ShallowNode(tok, "no domain word of its table is a prefix of " + node.str());

        const BinaryWord image = tm.prm.apply(node);
        if (prefix_relation(image, node) != PrefixRelation::Incomparable)
            throw NodeNotMoved(tok, "[" + node.str() + "] maps to the comparable cone [" +
                                        image.str() + "]");

        // Reading the whole node address from the stack and replacing it by
        // its image is the qa row; returning onto the node restores the
        // loading stack; every table pair rewrites the stacked address.
        p.transitions.push_back(
            {PdaState::qa, tm.token, node_bits, image.bits(), PdaState::qr});
        for (const auto& [d, r] : tm.prm.pairs()) {
            if (r.is_prefix_of(node)) {
                const std::string pop = d.bits() + node.suffix_after(r).bits() + "#";
                p.transitions.push_back(
                    {PdaState::qr, tm.token, pop, node_bits + "#", PdaState::qa});
            }
            p.transitions.push_back(
                {PdaState::qr, tm.token, d.bits(), r.bits(), PdaState::qr});
        }
    }

    p.transitions = canonical_order(p.alphabet, p.transitions);
    return p;
}

}  // namespace

Pda build_word_problem_pda(const GeneratorMap& gm, const BinaryWord& node,
                           const BuildOptions& options) {
    BinaryWord current = node;
    for (int attempt = 0;; ++attempt) {
        try {
            Pda p = build_once(gm, current);
            AuditResult a = audit(p, options.audit_depth);
            if (a.shallow) throw ShallowNode(a.shallow_token, a.detail);
            return p;
        } catch (const ShallowNode&) {
            if (!options.deepen || attempt >= 16) throw;
            current = current.child('0');
        }
    }
}

Pda determinize_against_accept(const Pda& p, const BinaryWord& node) {
    std::size_t max_replacement = 0;
    for (const PdaTransition& t : p.transitions)
        max_replacement = std::max(max_replacement, t.push.size());
    const std::size_t bound = node.size() + 2 * max_replacement + 8;

    std::vector<PdaTransition> rows = p.transitions;
    auto conflicts = [&rows](const PdaTransition& row) {
        for (const PdaTransition& t : rows)
            if (t.from == PdaState::qr && t.to == PdaState::qa && t.input == row.input &&
                t.pop == row.pop + "#")
                return true;
        return false;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const PdaTransition row = rows[i];
            if (row.from != PdaState::qr || row.to != PdaState::qr || !row.input) continue;
            if (!conflicts(row)) continue;
            if (row.pop.size() + 1 > bound)
                throw NonTerminatingRefinement(
                    "conflict splitting passed pop depth " + std::to_string(bound) +
                    " at token " + to_token(*row.input));
            PdaTransition zero = row;
            PdaTransition one = row;
            zero.pop += '0';
            zero.push += '0';
            one.pop += '1';
            one.push += '1';
            rows[i] = zero;
            rows.insert(rows.begin() + i + 1, one);
            changed = true;
            break;
        }
    }

    return Pda{p.alphabet, p.node, canonical_order(p.alphabet, rows)};
}

namespace {

struct Exploration {
    std::vector<Configuration> configs;  // BFS discovery order
    std::vector<std::size_t> parent;     // index into configs; npos for the root
    std::size_t accepting = SIZE_MAX;    // first accepting configuration
    std::size_t max_frontier = 0;
};

Exploration explore(const Pda& p, const GroupWord& word) {
    for (const GenSymbol& s : word)
        if (std::find(p.alphabet.begin(), p.alphabet.end(), s) == p.alphabet.end())
            throw UnknownGenerator(to_token(s));

    Exploration ex;
    std::map<Configuration, std::size_t> index;
    std::deque<std::size_t> queue;
    auto add = [&](Configuration c, std::size_t from) {
        if (index.contains(c)) return;
        const std::size_t i = ex.configs.size();
        index.emplace(c, i);
        if (ex.accepting == SIZE_MAX && c.position == word.size() &&
            c.state == PdaState::qa)
            ex.accepting = i;
        ex.configs.push_back(std::move(c));
        ex.parent.push_back(from);
        queue.push_back(i);
    };

    add({PdaState::q0, "", 0}, SIZE_MAX);
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        const Configuration c = ex.configs[i];
        for (const PdaTransition& t : p.transitions) {
            if (t.from != c.state || !starts_with(c.stack, t.pop)) continue;
            if (t.input) {
                if (c.position < word.size() && *t.input == word[c.position])
                    add({t.to, t.push + c.stack.substr(t.pop.size()), c.position + 1}, i);
            } else {
                add({t.to, t.push + c.stack.substr(t.pop.size()), c.position}, i);
            }
        }
    }

    std::vector<std::size_t> per_position(word.size() + 1, 0);
    for (const Configuration& c : ex.configs) ++per_position[c.position];
    ex.max_frontier = *std::max_element(per_position.begin(), per_position.end());
    return ex;
}

}  // namespace

RunResult run(const Pda& p, const GroupWord& word) {
    const Exploration ex = explore(p, word);
    RunResult result;
    result.max_frontier = ex.max_frontier;
    if (ex.accepting == SIZE_MAX) return result;
    result.accepted = true;
    for (std::size_t i = ex.accepting; i != SIZE_MAX; i = ex.parent[i])
        result.path.push_back(ex.configs[i]);
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

std::vector<Configuration> final_configurations(const Pda& p, const GroupWord& word) {
    const Exploration ex = explore(p, word);
    std::vector<Configuration> out;
    for (const Configuration& c : ex.configs)
        if (c.position == word.size()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

AuditResult audit(const Pda& p, std::size_t max_len) {
    AuditResult result;
    auto note_shallow = [&](const GenSymbol& tok, const std::string& stack) {
        if (result.shallow) return;
        result.shallow = true;
        result.shallow_token = to_token(tok);
        if (result.detail.empty())
            result.detail = "stuck in qr on token " + result.shallow_token +
                            " with stack " + stack;
    };
    auto note_choice = [&](const GenSymbol& tok, PdaState st, const std::string& stack,
                           std::size_t n) {
        if (result.nondeterministic) return;
        result.nondeterministic = true;
        if (result.detail.empty())
            result.detail = std::to_string(n) + " rows apply in " +
                            std::string(state_name(st)) + " on token " + to_token(tok) +
                            " with stack " + stack;
    };

    using Cfg = std::pair<PdaState, std::string>;
    std::set<Cfg> visited;
    std::deque<std::pair<Cfg, std::size_t>> queue;  // configuration, tokens consumed
    auto add = [&](const Cfg& c, std::size_t depth) {
        if (visited.insert(c).second) queue.push_back({c, depth});
    };

    add({PdaState::q0, ""}, 0);
    while (!queue.empty()) {
        const auto [cfg, depth] = queue.front();
        queue.pop_front();
        const auto& [state, stack] = cfg;

        for (const PdaTransition& t : p.transitions)
            if (t.from == state && !t.input && starts_with(stack, t.pop))
                add({t.to, t.push + stack.substr(t.pop.size())}, depth);

        if (depth >= max_len) continue;
        for (const GenSymbol& tok : p.alphabet) {
            std::size_t applicable = 0;
            for (const PdaTransition& t : p.transitions) {
                if (t.from != state || !t.input || !(*t.input == tok)) continue;
                if (!starts_with(stack, t.pop)) continue;
                ++applicable;
                add({t.to, t.push + stack.substr(t.pop.size())}, depth + 1);
            }
            if (applicable == 0 && state == PdaState::qr) note_shallow(tok, stack);
            if (applicable > 1) note_choice(tok, state, stack, applicable);
        }
    }
    return result;
}

namespace {

using ConfigSet = std::set<std::pair<PdaState, std::string>>;

ConfigSet epsilon_closure(const Pda& p, ConfigSet configs) {
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& [state, stack] : ConfigSet(configs))
            for (const PdaTransition& t : p.transitions)
                if (t.from == state && !t.input && starts_with(stack, t.pop))
                    grew |= configs.insert({t.to, t.push + stack.substr(t.pop.size())}).second;
    }
    return configs;
}

ConfigSet step(const Pda& p, const ConfigSet& configs, const GenSymbol& tok) {
    ConfigSet next;
    for (const auto& [state, stack] : configs)
        for (const PdaTransition& t : p.transitions)
            if (t.from == state && t.input && *t.input == tok && starts_with(stack, t.pop))
                next.insert({t.to, t.push + stack.substr(t.pop.size())});
    return epsilon_closure(p, std::move(next));
}

// Depth-first sweep over all words up to max_len, extending the reachable
// configuration set and the composed prm one token at a time so shared
// prefixes are paid for once.
void sweep(const Pda& p, const std::vector<Prm>& token_prm, std::size_t max_len,
           GroupWord& word, const ConfigSet& configs, const Prm& product,
           CrossValidateReport& report) {
    bool pda_accepts = false;
    for (const auto& [state, stack] : configs)
        if (state == PdaState::qa) pda_accepts = true;
    const bool oracle_accepts = product.is_identity();

    ++report.words_checked;
    if (pda_accepts != oracle_accepts)
        report.mismatches.push_back({word, pda_accepts, oracle_accepts});

    if (word.size() >= max_len) return;
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        word.push_back(p.alphabet[i]);
        sweep(p, token_prm, max_len, word, step(p, configs, p.alphabet[i]),
              compose(product, token_prm[i]), report);
        word.pop_back();
    }
}

}  // namespace

CrossValidateReport cross_validate(const Pda& p, const GeneratorMap& gm,
                                   std::size_t max_len) {
    std::vector<Prm> token_prm;
    for (const GenSymbol& s : p.alphabet) {
        auto it = gm.find(s.base);
        if (it == gm.end()) throw UnknownGenerator(s.base);
        token_prm.push_back(s.inverted ? it->second.inverse() : it->second);
    }

    CrossValidateReport report;
    GroupWord word;
    sweep(p, token_prm, max_len, word,
          epsilon_closure(p, ConfigSet{{PdaState::q0, ""}}), Prm::identity(), report);

    std::ranges::sort(report.mismatches,
                      [](const CrossValidateMismatch& x, const CrossValidateMismatch& y) {
                          if (x.word.size() != y.word.size())
                              return x.word.size() < y.word.size();
                          return x.word < y.word;
                      });
    return report;
}

std::string serialize_table(const Pda& p) {
    std::ostringstream out;
    out << "# wp-pda v1 node=" << p.node.str() << " alphabet=";
    for (std::size_t i = 0; i < p.alphabet.size(); ++i)
        out << (i ? "," : "") << to_token(p.alphabet[i]);
    out << '\n';
    for (const PdaTransition& t : p.transitions)
        out << state_name(t.from) << '\t' << (t.input ? to_token(*t.input) : "eps")
            << '\t' << (t.pop.empty() ? "-" : t.pop) << '\t'
            << (t.push.empty() ? "-" : t.push) << '\t' << state_name(t.to) << '\n';
    return out.str();
}

namespace {

std::string parse_stack_string(const std::string& field) {
    if (field == "-") return "";
    for (std::size_t i = 0; i < field.size(); ++i) {
        const char c = field[i];
        if (c == '#' && i + 1 == field.size()) continue;
        if (c != '0' && c != '1')
            throw ParseError("bad stack string: " + field);
    }
    return field;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string f;
    while (in >> f) fields.push_back(f);
    return fields;
}

}  // namespace

Pda parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;

    std::string header;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        header = line;
        break;
    }
    constexpr std::string_view magic = "# wp-pda v1";
    if (header.substr(0, magic.size()) != magic)
        throw ParseError("missing '# wp-pda v1' header");

    Pda p;
    bool have_node = false;
    bool have_alphabet = false;
    for (const std::string& field : split_fields(header.substr(magic.size()))) {
        if (field.starts_with("node=")) {
            p.node = BinaryWord::parse(field.substr(5));
            have_node = true;
        } else if (field.starts_with("alphabet=")) {
            std::string tokens = field.substr(9);
            for (std::size_t from = 0; from <= tokens.size();) {
                std::size_t comma = tokens.find(',', from);
                if (comma == std::string::npos) comma = tokens.size();
                p.alphabet.push_back(parse_symbol(tokens.substr(from, comma - from)));
                from = comma + 1;
            }
            have_alphabet = true;
        } else {
            throw ParseError("unknown header field: " + field);
        }
    }
    if (!have_node || !have_alphabet)
        throw ParseError("header must carry node= and alphabet=");

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 5) throw ParseError("expected 5 columns: " + line);
        PdaTransition t;
        t.from = parse_state(f[0]);
        if (f[1] != "eps") t.input = parse_symbol(f[1]);
        t.pop = parse_stack_string(f[2]);
        t.push = parse_stack_string(f[3]);
        t.to = parse_state(f[4]);
        if (!t.input && t.from != PdaState::q0)
            throw ParseError("ε row outside q0: " + line);
        p.transitions.push_back(std::move(t));
    }
    return p;
}

}  // namespace vword

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vword/cantor.hpp"
#include "vword/modular.hpp"
#include "vword/words.hpp"

namespace vword {

/// q0 loads the stack, qa is the sole accepting state (stack = node·#),
/// qr rewrites the tracked cone address.
enum class PdaState { q0, qa, qr };

std::string_view state_name(PdaState s);
PdaState parse_state(std::string_view text);  // throws ParseError

/// One table row. pop is matched against the top of the stack (top-first
/// strings over {0,1,#}) and replaced by push. input is empty for the single
/// ε loading row out of q0.
struct PdaTransition {
    PdaState from;
    std::optional<GenSymbol> input;
    std::string pop;
    std::string push;
    PdaState to;

    bool operator==(const PdaTransition&) const = default;
};

/// A word-problem pushdown automaton over states {q0, qa, qr} and stack
/// alphabet {0, 1, #}; start q0, accept {qa}. Accepts a word over the input
/// alphabet iff it evaluates to the identity in the group the automaton was
/// built from. Immutable after construction.
struct Pda {
    std::vector<GenSymbol> alphabet;  // canonical order: plain tokens, then inverses
    BinaryWord node;                  // the demonstration node loaded by the ε row
    std::vector<PdaTransition> transitions;

    bool operator==(const Pda&) const = default;
};

struct BuildOptions {
    /// On a shallow node, retry with node·0 instead of failing (any extension
    /// of a demonstration node is again one).
    bool deepen = false;
    /// Input length for the post-build reachability audit.
    std::size_t audit_depth = 8;
};

/// The word-problem PDA for the subgroup the generators produce, verified
/// demonstrative at node by the caller. Alphabet: one token per generator
/// plus one per non-involution inverse. Rows, in canonical order — the ε
/// loading row, then per token: the qa row popping the node address and
/// pushing its image, the qr→qa rows restoring node·# where a table pair
/// maps back onto the node, and the qr→qr rows applying the table pairs to
/// the stacked address, the latter two groups sorted by pop string.
///
/// Throws NodeNotMoved when a token's map sends the node to a cone comparable
/// with [node]; throws ShallowNode when a token's table cannot read the node
/// address (no domain word is a prefix of node) or when the bounded
/// reachability audit finds a stuck qr configuration — unless options.deepen
/// allows rebuilding at node·0.
Pda build_word_problem_pda(const GeneratorMap& gm, const BinaryWord& node,
                           const BuildOptions& options = {});

/// Removes the accept-time choice points: any qr→qr row whose pop equals the
/// address part of a same-token qr→qa pop is split into its two one-bit
/// extensions, repeatedly, until no such conflict remains; rows are then
/// re-sorted into canonical order. The accepted language is unchanged.
/// Throws NonTerminatingRefinement past the depth bound
/// |node| + 2·(max replacement length) + 8.
Pda determinize_against_accept(const Pda& p, const BinaryWord& node);

/// A point of the simulation: state, stack (top first), input position.
struct Configuration {
    PdaState state;
    std::string stack;
    std::size_t position = 0;

    auto operator<=>(const Configuration&) const = default;
};

struct RunResult {
    bool accepted = false;
    /// One accepting path from the initial configuration, when accepted.
    std::vector<Configuration> path;
    /// Largest number of distinct configurations alive at one input position.
    std::size_t max_frontier = 0;
};

/// Breadth-first exploration of every configuration reachable on the given
/// input; accepts iff some configuration consumes the whole word in qa.
/// Tokens must belong to p.alphabet (UnknownGenerator otherwise).
RunResult run(const Pda& p, const GroupWord& word);

/// Every reachable configuration that has consumed the whole word.
std::vector<Configuration> final_configurations(const Pda& p, const GroupWord& word);

/// Findings of the bounded reachability audit over all token sequences of
/// length <= max_len.
struct AuditResult {
    bool shallow = false;           // some qr configuration has no applicable row for a token
    bool nondeterministic = false;  // some configuration admits 2+ rows for one token
    std::string shallow_token;      // token witnessing shallow, when set
    std::string detail;             // human-readable first finding

    bool clean() const { return !shallow && !nondeterministic; }
};

AuditResult audit(const Pda& p, std::size_t max_len);

struct CrossValidateMismatch {
    GroupWord word;
    bool pda_accepts = false;
    bool oracle_accepts = false;

    bool operator==(const CrossValidateMismatch&) const = default;
};

/// Exhaustive comparison of run(p, w) against is_identity(evaluate(w, gm))
/// for every word over p.alphabet with length <= max_len (the empty word
/// included); mismatches come back sorted by length then lexicographically.
struct CrossValidateReport {
    std::size_t words_checked = 0;
    std::vector<CrossValidateMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

CrossValidateReport cross_validate(const Pda& p, const GeneratorMap& gm,
                                   std::size_t max_len);

/// Header `# wp-pda v1 node=<w> alphabet=<tokens>`, then one row per line:
/// state, input token (`eps` for ε), pop, push, state — tab-separated, empty
/// pop/push rendered as `-`, rows in stored order.
std::string serialize_table(const Pda& p);

/// Parses serialize_table() output; ignores blank lines and later '#'
/// comments. Throws ParseError on malformed input.
Pda parse_table(std::string_view text);

}  // namespace vword

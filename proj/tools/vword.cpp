// Command-line front end: prefix-replacement-map algebra, the built-in
// modular-group elements, demonstration-node checks, and word-problem
// pushdown automata (build / determinize / run / validate).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vword/demonstrative.hpp"
#include "vword/elements.hpp"
#include "vword/errors.hpp"
#include "vword/modular.hpp"
#include "vword/pda.hpp"
#include "vword/prm.hpp"
#include "vword/words.hpp"

namespace {

using namespace vword;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Prm load_prm(const std::string& path) { return Prm::parse(read_input(path)); }

// --gen entries look like name=file; names are plain lowercase tokens.
GeneratorMap load_generators(const std::vector<std::string>& specs) {
    GeneratorMap gm;
    for (const std::string& spec : specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error("--gen expects name=file, got '" + spec + "'");
        const std::string name = spec.substr(0, eq);
        const GenSymbol parsed = parse_symbol(name);
        if (parsed.inverted || parsed.base != name)
            throw Error("generator name must be a plain token, got '" + name + "'");
        if (!gm.emplace(name, load_prm(spec.substr(eq + 1)).reduced()).second)
            throw Error("generator '" + name + "' given twice");
    }
    return gm;
}

// The words a demonstration check ranges over: every sequence of generator
// tokens (inverses included, involutions contributing no extra token) up to
// the cutoff, shortest first. Words longer than one letter that evaluate to
// the identity are skipped — they name the trivial element, which fixes
// every cone; single letters stay so degenerate generators are caught.
std::vector<GroupWord> demonstration_words(const GeneratorMap& gm,
                                           std::size_t max_len, Evaluator& eval) {
    std::vector<GenSymbol> tokens;
    std::vector<GenSymbol> inverses;
    for (const auto& [name, prm] : gm) {
        tokens.push_back({name, false});
        Prm q = prm.reduced();
        if (!equals(q, q.inverse())) inverses.push_back({name, true});
    }
    tokens.insert(tokens.end(), inverses.begin(), inverses.end());

    std::vector<GroupWord> out;
    std::vector<GroupWord> level{GroupWord{}};
    for (std::size_t k = 1; k <= max_len; ++k) {
        std::vector<GroupWord> next;
        for (const GroupWord& w : level)
            for (const GenSymbol& t : tokens) {
                next.push_back(w);
                next.back().push_back(t);
            }
        for (const GroupWord& w : next)
            if (w.size() == 1 || !eval.of(w).is_identity()) out.push_back(w);
        level = std::move(next);
    }
    return out;
}

void check_word_tokens(const Pda& p, const GroupWord& word) {
    for (const GenSymbol& s : word)
        if (std::find(p.alphabet.begin(), p.alphabet.end(), s) == p.alphabet.end())
            throw Error("token '" + to_token(s) + "' is not in the automaton's alphabet");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Calculator for groups of prefix replacement maps on the binary Cantor "
        "space: map algebra, the modular-group embedding, demonstration-node "
        "checks, and word-problem pushdown automata."};
    app.require_subcommand(1);
    int rc = 0;

    // ---- prm ------------------------------------------------------------
    auto* prm = app.add_subcommand("prm", "Operate on prefix replacement map tables");
    prm->require_subcommand(1);

    static std::string arg_p, arg_q, arg_word;
    static unsigned arg_max_order = 64;

    auto* prm_compose =
        prm->add_subcommand("compose", "Product of two maps, left one applied first");
    prm_compose->add_option("p", arg_p, "left map file")->required();
    prm_compose->add_option("q", arg_q, "right map file")->required();
    prm_compose->callback(
        [&] { std::cout << compose(load_prm(arg_p), load_prm(arg_q)).to_text(); });

    auto* prm_invert = prm->add_subcommand("invert", "Inverse map");
    prm_invert->add_option("p", arg_p, "map file")->required();
    prm_invert->callback([&] { std::cout << load_prm(arg_p).inverse().to_text(); });

    auto* prm_reduce = prm->add_subcommand("reduce", "Minimal table for the same map");
    prm_reduce->add_option("p", arg_p, "map file")->required();
    prm_reduce->callback([&] { std::cout << load_prm(arg_p).reduced().to_text(); });

    auto* prm_order =
        prm->add_subcommand("order", "Least power equal to the identity, if bounded");
    prm_order->add_option("p", arg_p, "map file")->required();
    prm_order->add_option("--max", arg_max_order, "largest power to try");
    prm_order->callback([&] {
        if (auto k = element_order(load_prm(arg_p), arg_max_order)) {
            std::cout << *k << '\n';
        } else {
            std::cout << '>' << arg_max_order << '\n';
            rc = 1;
        }
    });

    auto* prm_apply = prm->add_subcommand("apply", "Image of a single address");
    prm_apply->add_option("p", arg_p, "map file")->required();
    prm_apply->add_option("word", arg_word, "binary address, e for the root")->required();
    prm_apply->callback([&] {
        std::cout << load_prm(arg_p).apply(BinaryWord::parse(arg_word)).str() << '\n';
    });

    auto* prm_image = prm->add_subcommand("image", "Cone labels tiling a cone's image");
    prm_image->add_option("p", arg_p, "map file")->required();
    prm_image->add_option("word", arg_word, "binary address, e for the root")->required();
    prm_image->callback([&] {
        const auto labels = load_prm(arg_p).image_of_cone(BinaryWord::parse(arg_word));
        for (std::size_t i = 0; i < labels.size(); ++i)
            std::cout << (i ? "," : "") << labels[i].str();
        std::cout << '\n';
    });

    // ---- embed ----------------------------------------------------------
    static std::string arg_target;
    auto* embed = app.add_subcommand(
        "embed", "Print a built-in element: the order-two map a, the order-three "
                 "map b, or the shift-like map gz");
    embed->add_option("target", arg_target, "one of a, b, gz")
        ->required()
        ->check(CLI::IsMember({"a", "b", "gz"}));
    embed->callback([&] {
        if (arg_target == "a")
            std::cout << element_a().to_text();
        else if (arg_target == "b")
            std::cout << element_b().to_text();
        else
            std::cout << element_z().to_text();
    });

    // ---- demo -----------------------------------------------------------
    static std::vector<std::string> arg_gens;
    static std::string arg_node;
    static std::size_t arg_demo_max_len = 6;

    auto* demo = app.add_subcommand(
        "demo", "Check that every nontrivial word moves the node's cone fully "
                "off itself");
    demo->add_option("--gen", arg_gens, "generator as name=file (repeatable)")
        ->required();
    demo->add_option("--node", arg_node, "binary address of the candidate node")
        ->required();
    demo->add_option("--max-len", arg_demo_max_len, "word length cutoff");
    demo->callback([&] {
        const GeneratorMap gm = load_generators(arg_gens);
        const BinaryWord node = BinaryWord::parse(arg_node);
        Evaluator eval(gm);
        const std::vector<GroupWord> words =
            demonstration_words(gm, arg_demo_max_len, eval);
        DemonstrationReport report = check_demonstration_node(gm, node, words);
        report.max_len = arg_demo_max_len;  // echo the requested cutoff
        std::cout << report.str();
        rc = report.ok() ? 0 : 1;
    });

    // ---- pda ------------------------------------------------------------
    auto* pda = app.add_subcommand("pda", "Word-problem pushdown automata");
    pda->require_subcommand(1);

    static std::string arg_table = "-";
    static bool arg_deepen = false;
    static std::size_t arg_audit_depth = 8;
    static std::size_t arg_validate_max_len = 8;
    static std::vector<std::string> arg_word_parts;

    auto* pda_build = pda->add_subcommand(
        "build", "Emit the word-problem automaton for generators and a node");
    pda_build->add_option("--gen", arg_gens, "generator as name=file (repeatable)")
        ->required();
    pda_build->add_option("--node", arg_node, "demonstration node address")->required();
    pda_build->add_flag("--deepen", arg_deepen,
                        "extend the node with zeros instead of failing when too shallow");
    pda_build->add_option("--audit-depth", arg_audit_depth,
                          "input length for the post-build reachability audit");
    pda_build->callback([&] {
        const Pda p = build_word_problem_pda(load_generators(arg_gens),
                                             BinaryWord::parse(arg_node),
                                             {arg_deepen, arg_audit_depth});
        std::cout << serialize_table(p);
    });

    auto* pda_det = pda->add_subcommand(
        "determinize", "Split accept-conflicting rewrite rows until none remain");
    pda_det->add_option("table", arg_table, "table file, - for standard input");
    pda_det->add_option("--node", arg_node, "node address (defaults to the header's)");
    pda_det->callback([&] {
        const Pda p = parse_table(read_input(arg_table));
        const BinaryWord node = arg_node.empty() ? p.node : BinaryWord::parse(arg_node);
        std::cout << serialize_table(determinize_against_accept(p, node));
    });

    auto* pda_run = pda->add_subcommand("run", "Decide one input word");
    pda_run->add_option("table", arg_table, "table file, - for standard input")
        ->required();
    pda_run->add_option("word", arg_word_parts,
                        "input tokens, quoted together or as separate arguments");
    pda_run->callback([&] {
        const Pda p = parse_table(read_input(arg_table));
        std::string joined;
        for (const std::string& part : arg_word_parts) {
            joined += part;
            joined += ' ';
        }
        const GroupWord word = parse_word(joined);
        check_word_tokens(p, word);
        const RunResult r = run(p, word);
        std::cout << (r.accepted ? "ACCEPT" : "REJECT") << '\n';
        rc = r.accepted ? 0 : 1;
    });

    auto* pda_validate = pda->add_subcommand(
        "validate", "Compare the automaton against direct map composition on "
                    "every word up to a cutoff");
    pda_validate->add_option("table", arg_table, "table file, - for standard input")
        ->required();
    pda_validate->add_option("--gen", arg_gens, "generator as name=file (repeatable)")
        ->required();
    pda_validate->add_option("--max-len", arg_validate_max_len, "word length cutoff");
    pda_validate->callback([&] {
        const Pda p = parse_table(read_input(arg_table));
        const CrossValidateReport report =
            cross_validate(p, load_generators(arg_gens), arg_validate_max_len);
        std::cout << report.mismatches.size() << " mismatches\n";
        rc = report.ok() ? 0 : 1;
    });

    auto* pda_table = pda->add_subcommand(
        "table", "Parse a table and print it back in canonical form");
    pda_table->add_option("table", arg_table, "table file, - for standard input");
    pda_table->callback([&] { std::cout << serialize_table(parse_table(read_input(arg_table))); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

// lattle: analyze finite bounded lattices, run the law suite, search small
// lattices for counterexamples, and manage the built-in corpus.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 not a lattice,
// 4 proved-law failure (kernel bug).
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lattle/corpus.hpp"
#include "lattle/report.hpp"

#if defined(_WIN32)
#include <io.h>
#define LATTLE_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define LATTLE_ISATTY isatty(fileno(stdout))
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotALattice = 3;
constexpr int kExitLawFailure = 4;

bool color_enabled() {
    if (const char* v = std::getenv("LATTLE_COLOR")) return std::string_view(v) != "0";
    return LATTLE_ISATTY;
}

bool is_corpus_key(const std::string& input) {
    for (const auto& k : lattle::corpus_keys())
        if (k == input) return true;
    return false;
}

// Resolves a corpus key or a file path to a validated lattice.
lattle::Lattice load_input(const std::string& input) {
    if (is_corpus_key(input)) return lattle::build_builtin(input);
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        throw lattle::SpecParseError(lattle::SpecParseError::Kind::Syntax,
                                     "cannot read '" + input + "'", 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return lattle::Lattice::build(lattle::parse_spec(buf.str()));
}

struct CommonFlags {
    std::string format = "text";
    std::string universe = "default";
};

lattle::SubsetUniverse universe_of(const std::string& name) {
    auto u = lattle::SubsetUniverse::parse(name);
    if (!u) throw CLI::ValidationError("--universe", "unknown universe '" + name + "'");
    return *u;
}

int cmd_analyze(const std::string& input, const CommonFlags& flags) {
    lattle::Lattice L = load_input(input);
    if (flags.format == "dot") {
        std::cout << lattle::dot_graph(L);
        return kExitOk;
    }
    lattle::AnalysisReport rep = lattle::analyze(L, universe_of(flags.universe));
    if (flags.format == "json")
        std::cout << lattle::report_json(rep).dump(2) << "\n";
    else
        std::cout << lattle::report_text(rep, color_enabled());
    return rep.law_summary.fails ? kExitLawFailure : kExitOk;
}

int cmd_laws(const std::vector<std::string>& inputs, const std::string& law_id,
             const CommonFlags& flags) {
    bool any_fail = false;
    auto universe = universe_of(flags.universe);
    auto all_json = nlohmann::ordered_json::array();
    for (const auto& input : inputs) {
        lattle::Lattice L = load_input(input);
        std::vector<lattle::LawVerdict> verdicts;
        if (law_id.empty())
            verdicts = lattle::check_all(L, universe);
        else
            verdicts.push_back(lattle::check_law(L, law_id, universe));
        for (const auto& v : verdicts)
            if (v.status == lattle::LawStatus::fails) any_fail = true;
        if (flags.format == "json") {
            nlohmann::ordered_json doc;
            doc["input"] = input;
            doc["verdicts"] = lattle::verdicts_json(L, verdicts);
            all_json.push_back(doc);
        } else {
            std::cout << input << ":\n"
                      << lattle::verdicts_text(L, verdicts, color_enabled());
        }
    }
    if (flags.format == "json") std::cout << all_json.dump(2) << "\n";
    return any_fail ? kExitLawFailure : kExitOk;
}

int cmd_search(const std::string& query, int max_size, const std::string& mode_name,
               std::uint64_t seed, int budget, bool override_cap, const CommonFlags& flags) {
    lattle::SearchMode mode;
    mode.exhaustive = mode_name == "exhaustive";
    mode.seed = seed;
    mode.budget = budget;

    auto print_found = [&](const lattle::Lattice& L,
                           const std::optional<std::string>& witness_filter,
                           const nlohmann::ordered_json& verdict) {
        if (flags.format == "dot") {
            std::cout << lattle::dot_graph(L);
            return;
        }
        nlohmann::ordered_json doc;
        doc["found"] = true;
        doc["n"] = L.size();
        doc["lattice"] = lattle::spec_json(L.spec());
        if (witness_filter) doc["witness_filter"] = *witness_filter;
        if (!verdict.is_null()) doc["verdict"] = verdict;
        if (flags.format == "json") {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "found (n=" << L.size() << ")\n"
                      << doc.dump(2) << "\n"
                      << lattle::dot_graph(L);
        }
    };

    if (lattle::find_law(query)) {
        auto hit = lattle::search_law_counterexample(query, max_size, mode,
                                                     lattle::SubsetUniverse{}, override_cap);
        if (!hit) {
            std::cout << "none\n";
            return kExitOk;
        }
        // A verified counterexample to a registered law means the kernel
        // itself is wrong somewhere; escalate.
        print_found(hit->lattice, std::nullopt, lattle::verdict_json(hit->lattice, hit->verdict));
        return kExitLawFailure;
    }

    auto q = lattle::PredicateQuery::parse(query);
    auto hit = lattle::search_predicate(q, max_size, mode, override_cap);
    if (!hit) {
        std::cout << "none\n";
        return kExitOk;
    }
    std::optional<std::string> witness;
    if (hit->filter_generator) witness = hit->lattice.label(*hit->filter_generator);
    print_found(hit->lattice, witness, nullptr);
    return kExitOk;
}

int cmd_corpus(const std::string& action, const std::string& key, const std::string& path) {
    if (action == "list") {
        for (const auto& k : lattle::corpus_keys()) {
            const auto& e = lattle::builtin(k);
            std::cout << k << "  " << e.spec.elements.size() << " elements, "
                      << e.spec.covers.size() << " covers\n";
        }
        return kExitOk;
    }
    const auto& entry = lattle::builtin(key);
    if (action == "show") {
        std::cout << lattle::serialize_spec(entry.spec);
        if (!entry.notes.empty()) {
            std::cout << "notes:\n";
            for (const auto& n : entry.notes) std::cout << "  - " << n << "\n";
        }
        if (!entry.printed_deviations.empty()) {
            std::cout << "printed-table deviations (stored goldens are the recomputed values):\n";
            for (const auto& d : entry.printed_deviations) {
                std::cout << "  - " << d.field;
                if (!d.element.empty()) std::cout << "[" << d.element << "]";
                std::cout << " printed as {";
                for (size_t i = 0; i < d.printed.size(); ++i)
                    std::cout << (i ? "," : "") << d.printed[i];
                std::cout << "}: " << d.note << "\n";
            }
        }
        return kExitOk;
    }
    if (action == "export") {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw lattle::SpecParseError(lattle::SpecParseError::Kind::Syntax,
                                         "cannot write '" + path + "'", 0, 0);
        out << lattle::serialize_spec(entry.spec);
        return kExitOk;
    }
    std::cerr << "unknown corpus action '" << action << "'\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite bounded lattice toolkit: generalized pseudocomplements, "
                 "closure operators, filter classification, law checking"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand

    CommonFlags flags;
    app.add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    app.add_option("--universe", flags.universe, "law quantification universe")
        ->check(CLI::IsMember({"default", "singletons", "pairs", "filters", "powerset"}))
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "full report for one lattice");
    std::string analyze_input;
    analyze->add_option("input", analyze_input, "corpus key or lattice JSON file")->required();

    auto* laws = app.add_subcommand("laws", "run the law suite");
    std::vector<std::string> laws_inputs;
    std::string law_filter;
    laws->add_option("inputs", laws_inputs, "corpus keys or lattice JSON files")->required();
    laws->add_option("--law", law_filter, "check a single law id");

    auto* search = app.add_subcommand("search", "search small lattices for a counterexample");
    std::string query, mode_name = "exhaustive";
    int max_size = 6;
    std::uint64_t seed = 0;
    int budget = 1000;
    bool override_cap = false;
    search->add_option("query", query, "predicate query (e.g. \"cond1 & !cond2\") or law id")
        ->required();
    search->add_option("--max-size", max_size, "largest lattice size to try")
        ->capture_default_str();
    search->add_option("--mode", mode_name, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    search->add_option("--seed", seed, "random mode seed")->capture_default_str();
    search->add_option("--budget", budget, "random mode candidate budget")->capture_default_str();
    search->add_flag("--override-size-cap", override_cap,
                     "allow sizes beyond the soft cap of 9");

    auto* corpus = app.add_subcommand("corpus", "list / show / export built-in lattices");
    std::string corpus_action, corpus_key, corpus_path;
    corpus->add_option("action", corpus_action, "list | show | export")->required();
    corpus->add_option("key", corpus_key, "corpus key (fig1..fig6)");
    corpus->add_option("path", corpus_path, "output path (export)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_input, flags);
        if (*laws) return cmd_laws(laws_inputs, law_filter, flags);
        if (*search)
            return cmd_search(query, max_size, mode_name, seed, budget, override_cap, flags);
        if (*corpus) {
            if (corpus_action != "list" && corpus_key.empty()) {
                std::cerr << "corpus " << corpus_action << " requires a key\n";
                return kExitUsage;
            }
            if (corpus_action == "export" && corpus_path.empty()) {
                std::cerr << "corpus export requires an output path\n";
                return kExitUsage;
            }
            return cmd_corpus(corpus_action, corpus_key, corpus_path);
        }
    } catch (const lattle::SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lattle::BuildError& e) {
        std::cerr << "invalid lattice: " << e.what() << "\n";
        return kExitNotALattice;
    } catch (const lattle::UnknownKeyError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const lattle::UnknownLawError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const lattle::QueryError& e) {
        std::cerr << "query error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lattle::SizeCapError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcgp/derivation.hpp"
#include "rcgp/grammar_json.hpp"
#include "rcgp/lexicon.hpp"
#include "rcgp/polarity.hpp"
#include "rcgp/semantics.hpp"

namespace rcgp {

struct ParseRequest {
    std::string grammarPath;
    std::string morphPath;
    std::string lemmaPath;
    std::string lexiconPath;  // normalized JSON alternative to morph+lemma
    std::string sentence;
    std::string axiom;  // override; empty = grammar's axiom
    bool robust = false;
    bool verbose = false;
    bool noFilter = false;
    bool withSemantics = false;
    int maxDerivations = 64;
    std::string format = "text";  // text | json | dot
};

enum class ParseStatus { Ok, NoParse, LexicalGap };

std::string status_str(ParseStatus s);

/// One surviving derivation with its interpretation artifacts.
struct DerivationReport {
    int setIndex = 0;
    DerivationTree derivation;
    DerivedTree derived;
    std::vector<UnifFailure> failures;  // robust mode only
    SemOutput semantics;                // when requested
};

struct ParseReport {
    ParseStatus status = ParseStatus::NoParse;
    std::vector<std::string> tokens;
    std::vector<int> candidateCounts;
    std::vector<std::string> gapTokens;
    int validSetCount = 0;
    bool filterFellBack = false;  // polarity filter disabled itself
    bool filterUsed = false;

    struct SetStats {
        int facts = 0;
        int rcgDerivations = 0;
    };
    std::vector<SetStats> sets;
    std::vector<DerivationReport> derivations;
    std::map<std::string, double> timingMs;
    std::vector<std::string> warnings;

    /// Backing storage for the AnchoredTree pointers inside `derivations`;
    /// the report is move-only so those pointers stay valid.
    AnchorResult anchored;

    ParseReport() = default;
    ParseReport(const ParseReport&) = delete;
    ParseReport& operator=(const ParseReport&) = delete;
    ParseReport(ParseReport&&) = default;
    ParseReport& operator=(ParseReport&&) = default;

    int exit_code() const;
};

/// Runs anchor → polarity filter → per-set convert/parse/interpret →
/// semantics over already-loaded resources.
ParseReport run_parse(const ParseRequest& req, const Grammar& grammar, const Lexicon& lexicon);

/// File-loading wrapper around run_parse. Throws FormatError/Error on bad
/// inputs (the CLI maps those to exit code 2).
ParseReport run_parse(const ParseRequest& req);

/// Report renderings. The JSON document contains every derivation the text
/// rendering shows (format parity).
std::string report_text(const ParseReport& r);
std::string report_json(const ParseReport& r);
std::string report_dot(const ParseReport& r);

/// Intermediate-artifact dumps for the `dump` subcommand. Each throws Error
/// with a descriptive message when the pipeline does not reach the stage.
std::string dump_rcg(const ParseRequest& req, const Grammar& grammar, const Lexicon& lexicon);
std::string dump_automaton(const ParseRequest& req, const Grammar& grammar,
                           const Lexicon& lexicon);
std::string dump_forest(const ParseRequest& req, const Grammar& grammar, const Lexicon& lexicon);

/// Whitespace tokenizer used by the CLI.
std::vector<std::string> tokenize(const std::string& sentence);

}  // namespace rcgp

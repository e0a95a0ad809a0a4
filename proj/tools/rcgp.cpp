#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rcgp/lexicon.hpp"
#include "rcgp/log.hpp"
#include "rcgp/pipeline.hpp"

namespace {

void add_parse_options(CLI::App* cmd, rcgp::ParseRequest& req) {
    cmd->add_option("-g,--grammar", req.grammarPath, "grammar JSON file")->required();
    cmd->add_option("-m,--morph", req.morphPath, "morphological lexicon (text format)");
    cmd->add_option("-l,--lemma", req.lemmaPath, "lemma lexicon (text format)");
    cmd->add_option("-x,--lexicon", req.lexiconPath, "normalized lexicon (JSON format)");
    cmd->add_option("-a,--axiom", req.axiom, "axiom category override");
    cmd->add_flag("--robust", req.robust, "report feature mismatches instead of pruning");
    cmd->add_flag("--verbose", req.verbose, "log the conversion/parsing/interpretation stages");
    cmd->add_flag("--no-filter", req.noFilter, "disable polarity-based lexical disambiguation");
    cmd->add_option("--max-derivations", req.maxDerivations, "derivation cap (default 64)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", req.format, "output format: text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_flag("--semantics", req.withSemantics, "compute flat-semantics output");
}

void check_lexicon_options(const rcgp::ParseRequest& req) {
    if (req.lexiconPath.empty() && (req.morphPath.empty() || req.lemmaPath.empty()))
        throw rcgp::FormatError("need either --morph and --lemma, or --lexicon");
    if (!req.lexiconPath.empty() && (!req.morphPath.empty() || !req.lemmaPath.empty()))
        throw rcgp::FormatError("--lexicon excludes --morph/--lemma");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream ofs(path);
    if (!ofs) throw rcgp::Error("cannot write to " + path);
    ofs << content;
}

std::string read_file(const std::string& path) {
    std::ifstream ifs(path);
    if (!ifs) throw rcgp::FormatError("cannot open file: " + path);
    std::ostringstream os;
    os << ifs.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RCG-pivot parser for feature-based TAG"};
    app.require_subcommand(1);

    rcgp::ParseRequest parseReq;
    std::string outPath;

    auto* cmdParse = app.add_subcommand("parse", "parse a sentence");
    add_parse_options(cmdParse, parseReq);
    cmdParse->add_option("sentence", parseReq.sentence, "whitespace-tokenized input")->required();

    std::string convMorph, convLemma, convOut;
    auto* cmdConvert = app.add_subcommand("convert", "normalize a text lexicon to JSON");
    cmdConvert->add_option("-m,--morph", convMorph, "morphological lexicon")->required();
    cmdConvert->add_option("-l,--lemma", convLemma, "lemma lexicon")->required();
    cmdConvert->add_option("-o,--output", convOut, "output path (default stdout)");

    rcgp::ParseRequest dumpReq;
    std::string dumpWhat;
    auto* cmdDump = app.add_subcommand("dump", "write an intermediate artifact");
    cmdDump->add_option("what", dumpWhat, "rcg | automaton | forest")
        ->required()
        ->check(CLI::IsMember({"rcg", "automaton", "forest"}));
    add_parse_options(cmdDump, dumpReq);
    cmdDump->add_option("sentence", dumpReq.sentence, "whitespace-tokenized input")->required();
    cmdDump->add_option("-o,--output", outPath, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdParse->parsed()) {
            if (parseReq.verbose) rcgp::log::set_threshold(rcgp::log::Level::Debug);
            check_lexicon_options(parseReq);
            rcgp::ParseReport report = rcgp::run_parse(parseReq);
            if (parseReq.format == "json")
                std::cout << rcgp::report_json(report);
            else if (parseReq.format == "dot")
                std::cout << rcgp::report_dot(report);
            else
                std::cout << rcgp::report_text(report);
            return report.exit_code();
        }
        if (cmdConvert->parsed()) {
            write_output(convOut, rcgp::convert(read_file(convMorph), read_file(convLemma)));
            return 0;
        }
        if (cmdDump->parsed()) {
            if (dumpReq.verbose) rcgp::log::set_threshold(rcgp::log::Level::Debug);
            check_lexicon_options(dumpReq);
            rcgp::Grammar grammar = rcgp::load_grammar(dumpReq.grammarPath);
            rcgp::Lexicon lexicon =
                dumpReq.lexiconPath.empty()
                    ? rcgp::load_lexicon(dumpReq.morphPath, dumpReq.lemmaPath)
                    : rcgp::load_lexicon_normalized(dumpReq.lexiconPath);
            std::string out;
            try {
                if (dumpWhat == "rcg")
                    out = rcgp::dump_rcg(dumpReq, grammar, lexicon);
                else if (dumpWhat == "automaton")
                    out = rcgp::dump_automaton(dumpReq, grammar, lexicon);
                else
                    out = rcgp::dump_forest(dumpReq, grammar, lexicon);
            } catch (const rcgp::FormatError&) {
                throw;  // bad inputs stay exit code 2
            } catch (const rcgp::Error& e) {
                std::cerr << "rcgp: " << e.what() << "\n";
                return 1;  // stage not reached
            }
            write_output(outPath, out);
            return 0;
        }
    } catch (const rcgp::Error& e) {
        std::cerr << "rcgp: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rcgp: internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

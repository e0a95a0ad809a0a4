#pragma once

#include <string>
#include <vector>

#include "rcgp/feature.hpp"
#include "rcgp/semantics.hpp"

namespace rcgp {

/// One line of the morphological layer: inflected form, lemma, features.
struct MorphEntry {
    std::string word;
    std::string lemma;
    FeatureStructure features;

    auto operator<=>(const MorphEntry&) const = default;
};

enum class FsSide { Top, Bottom };

inline std::string side_str(FsSide s) { return s == FsSide::Top ? "top" : "bottom"; }

/// "NParg1 -> cas = nom", optionally "NParg1.bot -> ..." for the bottom side.
struct Equation {
    std::string node;
    FsSide side = FsSide::Top;
    std::string attr;
    FeatValue value;

    auto operator<=>(const Equation&) const = default;
};

/// "Prep -> by/P": word attached under the named node of category cat.
struct Coanchor {
    std::string node;
    std::string cat;
    std::string word;

    auto operator<=>(const Coanchor&) const = default;
};

/// One lemma-layer block (*ENTRY ... *COANCHORS). *ACC and *EX are stored
/// verbatim and never interpreted.
struct LemmaEntry {
    std::string entry;
    std::string cat;
    SemClassSpec sem;
    std::string acc;
    std::string fam;
    FeatureStructure filters;
    std::string ex;
    std::vector<Equation> equations;
    std::vector<Coanchor> coanchors;

    auto operator<=>(const LemmaEntry&) const = default;
};

struct Lexicon {
    std::vector<MorphEntry> morph;
    std::vector<LemmaEntry> lemmas;

    bool is_coanchor_word(const std::string& word) const;
};

/// Parses the morphological text layer: one "word lemma [attr=val,...]" entry
/// per line, '%' starts a comment line. Throws FormatError(line, reason).
std::vector<MorphEntry> parse_morph(const std::string& text);

/// Parses the lemma text layer: blocks of "*FIELD:" lines opened by "*ENTRY:".
/// *EQUATIONS and *COANCHORS start sections of payload lines. Throws
/// FormatError on unknown fields or blocks missing *ENTRY/*FAM.
std::vector<LemmaEntry> parse_lemmas(const std::string& text);

/// Canonical machine form (sorted entries, sorted attributes); loading and
/// re-emitting the output is byte-identical.
std::string lexicon_to_json(const Lexicon& lex);

/// Loads the normalized JSON document produced by lexicon_to_json.
Lexicon lexicon_from_json(const std::string& jsonText);

/// The lexConverter operation: text layers in, canonical JSON out.
std::string convert(const std::string& morphText, const std::string& lemmaText);

/// Reads morph + lemma files (or, when `normalizedPath` is nonempty, one
/// normalized JSON file) into a Lexicon. Throws FormatError.
Lexicon load_lexicon(const std::string& morphPath, const std::string& lemmaPath);
Lexicon load_lexicon_normalized(const std::string& normalizedPath);

}  // namespace rcgp

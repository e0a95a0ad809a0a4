#include "rcgp/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcgp/errors.hpp"

namespace rcgp {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool is_comment(const std::string& line) {
    std::string t = trim(line);
    return !t.empty() && t[0] == '%';
}

// Accepts "->" and the typographic arrow.
std::size_t find_arrow(const std::string& s, std::size_t& arrowLen) {
    std::size_t p = s.find("->");
    if (p != std::string::npos) {
        arrowLen = 2;
        return p;
    }
    p = s.find("\xe2\x86\x92");  // →
    if (p != std::string::npos) {
        arrowLen = 3;
        return p;
    }
    return std::string::npos;
}

}  // namespace

bool Lexicon::is_coanchor_word(const std::string& word) const {
    for (const auto& l : lemmas)
        for (const auto& c : l.coanchors)
            if (c.word == word) return true;
    return false;
}

std::vector<MorphEntry> parse_morph(const std::string& text) {
    std::vector<MorphEntry> entries;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineNo = static_cast<int>(i) + 1;
        std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '%') continue;

        std::size_t bracket = line.find('[');
        if (bracket == std::string::npos)
            throw FormatError(lineNo, "missing feature block '[...]'");
        if (line.back() != ']') throw FormatError(lineNo, "unclosed bracket");

        std::istringstream head(line.substr(0, bracket));
        MorphEntry e;
        if (!(head >> e.word >> e.lemma))
            throw FormatError(lineNo, "expected 'word lemma [features]'");
        std::string extra;
        if (head >> extra) throw FormatError(lineNo, "unexpected token '" + extra + "'");
        try {
            e.features = parse_fs(line.substr(bracket));
        } catch (const FormatError& err) {
            throw FormatError(lineNo, err.reason().empty() ? err.what() : err.reason());
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

namespace {

enum class Section { None, Equations, Coanchors };

Equation parse_equation_line(const std::string& line, int lineNo) {
    std::size_t arrowLen = 0;
    std::size_t arrow = find_arrow(line, arrowLen);
    if (arrow == std::string::npos)
        throw FormatError(lineNo, "equation must read 'node -> attr = value'");
    std::string target = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + arrowLen));

    Equation eq;
    if (target.size() > 4 && target.substr(target.size() - 4) == ".bot") {
        eq.side = FsSide::Bottom;
        target = target.substr(0, target.size() - 4);
    } else if (target.size() > 4 && target.substr(target.size() - 4) == ".top") {
        target = target.substr(0, target.size() - 4);
    }
    eq.node = trim(target);
    std::size_t eqPos = rhs.find('=');
    if (eq.node.empty() || eqPos == std::string::npos)
        throw FormatError(lineNo, "equation must read 'node -> attr = value'");
    eq.attr = trim(rhs.substr(0, eqPos));
    std::string value = trim(rhs.substr(eqPos + 1));
    if (eq.attr.empty() || value.empty())
        throw FormatError(lineNo, "equation must read 'node -> attr = value'");
    eq.value = FeatValue::parse(value);
    return eq;
}

Coanchor parse_coanchor_line(const std::string& line, int lineNo) {
    std::size_t arrowLen = 0;
    std::size_t arrow = find_arrow(line, arrowLen);
    if (arrow == std::string::npos)
        throw FormatError(lineNo, "coanchor must read 'node -> word/cat'");
    Coanchor co;
    co.node = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + arrowLen));
    std::size_t slash = rhs.rfind('/');
    if (co.node.empty() || slash == std::string::npos)
        throw FormatError(lineNo, "coanchor must read 'node -> word/cat'");
    co.word = trim(rhs.substr(0, slash));
    co.cat = trim(rhs.substr(slash + 1));
    if (co.word.empty() || co.cat.empty())
        throw FormatError(lineNo, "coanchor must read 'node -> word/cat'");
    return co;
}

SemClassSpec parse_sem_spec(const std::string& text, int lineNo) {
    SemClassSpec spec;
    std::string body = trim(text);
    if (body.empty()) return spec;
    std::size_t bracket = body.find('[');
    if (bracket == std::string::npos) {
        spec.name = body;
        return spec;
    }
    spec.name = trim(body.substr(0, bracket));
    try {
        spec.params = parse_fs(body.substr(bracket));
    } catch (const FormatError& err) {
        throw FormatError(lineNo, err.reason().empty() ? err.what() : err.reason());
    }
    return spec;
}

}  // namespace

std::vector<LemmaEntry> parse_lemmas(const std::string& text) {
    std::vector<LemmaEntry> entries;
    auto lines = split_lines(text);

    bool open = false;
    LemmaEntry cur;
    Section section = Section::None;
    int blockLine = 0;

    auto flush = [&](int lineNo) {
        if (!open) return;
        if (cur.entry.empty()) throw FormatError(blockLine, "block without *ENTRY");
        if (cur.fam.empty())
            throw FormatError(lineNo, "entry '" + cur.entry + "' without *FAM");
        entries.push_back(std::move(cur));
        cur = LemmaEntry{};
        open = false;
        section = Section::None;
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineNo = static_cast<int>(i) + 1;
        std::string line = trim(lines[i]);
        if (line.empty() || is_comment(line)) continue;

        if (line[0] == '*') {
            std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw FormatError(lineNo, "field sentinel without ':'");
            std::string field = trim(line.substr(0, colon));
            std::string value = trim(line.substr(colon + 1));
            section = Section::None;

            if (field == "*ENTRY") {
                flush(lineNo);
                open = true;
                blockLine = lineNo;
                cur.entry = value;
                continue;
            }
            if (!open) throw FormatError(lineNo, field + " before *ENTRY");
            if (field == "*CAT") {
                cur.cat = value;
            } else if (field == "*SEM") {
                cur.sem = parse_sem_spec(value, lineNo);
            } else if (field == "*ACC") {
                cur.acc = value;
            } else if (field == "*FAM") {
                cur.fam = value;
            } else if (field == "*FILTERS") {
                try {
                    cur.filters = value.empty() ? FeatureStructure{} : parse_fs(value);
                } catch (const FormatError& err) {
                    throw FormatError(lineNo, err.reason().empty() ? err.what() : err.reason());
                }
            } else if (field == "*EX") {
                cur.ex = value;
            } else if (field == "*EQUATIONS") {
                if (!value.empty())
                    cur.equations.push_back(parse_equation_line(value, lineNo));
                section = Section::Equations;
            } else if (field == "*COANCHORS") {
                if (!value.empty())
                    cur.coanchors.push_back(parse_coanchor_line(value, lineNo));
                section = Section::Coanchors;
            } else {
                throw FormatError(lineNo, "unknown field '" + field + "'");
            }
            continue;
        }

        // payload line inside an EQUATIONS/COANCHORS section
        if (!open) throw FormatError(lineNo, "content before *ENTRY");
        switch (section) {
            case Section::Equations:
                cur.equations.push_back(parse_equation_line(line, lineNo));
                break;
            case Section::Coanchors:
                cur.coanchors.push_back(parse_coanchor_line(line, lineNo));
                break;
            case Section::None:
                throw FormatError(lineNo, "unexpected content '" + line + "'");
        }
    }
    flush(static_cast<int>(lines.size()));
    return entries;
}

namespace {

json fs_to_json(const FeatureStructure& fs) {
    json j = json::object();
    for (const auto& [attr, v] : fs) j[attr] = v.str();
    return j;
}

FeatureStructure fs_from_json(const json& j) {
    FeatureStructure fs;
    for (const auto& [attr, val] : j.items()) fs.emplace(attr, FeatValue::parse(val.get<std::string>()));
    return fs;
}

Lexicon canonicalize(Lexicon lex) {
    std::sort(lex.morph.begin(), lex.morph.end());
    for (auto& l : lex.lemmas) {
        std::sort(l.equations.begin(), l.equations.end());
        std::sort(l.coanchors.begin(), l.coanchors.end());
    }
    std::sort(lex.lemmas.begin(), lex.lemmas.end());
    return lex;
}

}  // namespace

std::string lexicon_to_json(const Lexicon& input) {
    Lexicon lex = canonicalize(input);
    json doc = json::object();

    json morph = json::array();
    for (const auto& m : lex.morph) {
        json e = json::object();
        e["word"] = m.word;
        e["lemma"] = m.lemma;
        e["features"] = fs_to_json(m.features);
        morph.push_back(e);
    }
    doc["morph"] = morph;

    json lemmas = json::array();
    for (const auto& l : lex.lemmas) {
        json e = json::object();
        e["entry"] = l.entry;
        e["cat"] = l.cat;
        e["sem"] = json::object({{"class", l.sem.name}, {"params", fs_to_json(l.sem.params)}});
        e["acc"] = l.acc;
        e["fam"] = l.fam;
        e["filters"] = fs_to_json(l.filters);
        e["ex"] = l.ex;
        json eqs = json::array();
        for (const auto& q : l.equations)
            eqs.push_back(json::object({{"node", q.node},
                                        {"side", side_str(q.side)},
                                        {"attr", q.attr},
                                        {"value", q.value.str()}}));
        e["equations"] = eqs;
        json cos = json::array();
        for (const auto& c : l.coanchors)
            cos.push_back(json::object({{"node", c.node}, {"cat", c.cat}, {"word", c.word}}));
        e["coanchors"] = cos;
        lemmas.push_back(e);
    }
    doc["lemmas"] = lemmas;
    return doc.dump(2) + "\n";
}

Lexicon lexicon_from_json(const std::string& jsonText) {
    json doc;
    try {
        doc = json::parse(jsonText);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("lexicon JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("morph") || !doc.contains("lemmas"))
        throw FormatError("lexicon JSON: need top-level 'morph' and 'lemmas'");

    Lexicon lex;
    for (const auto& m : doc.at("morph")) {
        MorphEntry e;
        e.word = m.at("word").get<std::string>();
        e.lemma = m.at("lemma").get<std::string>();
        if (m.contains("features")) e.features = fs_from_json(m.at("features"));
        if (e.word.empty()) throw FormatError("lexicon JSON: empty morph word");
        lex.morph.push_back(std::move(e));
    }
    for (const auto& l : doc.at("lemmas")) {
        LemmaEntry e;
        e.entry = l.at("entry").get<std::string>();
        e.cat = l.value("cat", std::string());
        if (l.contains("sem")) {
            e.sem.name = l.at("sem").value("class", std::string());
            if (l.at("sem").contains("params")) e.sem.params = fs_from_json(l.at("sem").at("params"));
        }
        e.acc = l.value("acc", std::string());
        e.fam = l.at("fam").get<std::string>();
        if (e.fam.empty()) throw FormatError("lexicon JSON: entry '" + e.entry + "' without family");
        if (l.contains("filters")) e.filters = fs_from_json(l.at("filters"));
        e.ex = l.value("ex", std::string());
        if (l.contains("equations")) {
            for (const auto& q : l.at("equations")) {
                Equation eq;
                eq.node = q.at("node").get<std::string>();
                eq.side = q.value("side", std::string("top")) == "bottom" ? FsSide::Bottom
                                                                          : FsSide::Top;
                eq.attr = q.at("attr").get<std::string>();
                eq.value = FeatValue::parse(q.at("value").get<std::string>());
                e.equations.push_back(std::move(eq));
            }
        }
        if (l.contains("coanchors")) {
            for (const auto& c : l.at("coanchors")) {
                Coanchor co;
                co.node = c.at("node").get<std::string>();
                co.cat = c.at("cat").get<std::string>();
                co.word = c.at("word").get<std::string>();
                e.coanchors.push_back(std::move(co));
            }
        }
        lex.lemmas.push_back(std::move(e));
    }
    return lex;
}

std::string convert(const std::string& morphText, const std::string& lemmaText) {
    Lexicon lex;
    lex.morph = parse_morph(morphText);
    lex.lemmas = parse_lemmas(lemmaText);
    return lexicon_to_json(lex);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream ifs(path);
    if (!ifs) throw FormatError("cannot open file: " + path);
    std::ostringstream os;
    os << ifs.rdbuf();
    return os.str();
}

}  // namespace

Lexicon load_lexicon(const std::string& morphPath, const std::string& lemmaPath) {
    Lexicon lex;
    lex.morph = parse_morph(read_file(morphPath));
    lex.lemmas = parse_lemmas(read_file(lemmaPath));
    return lex;
}

Lexicon load_lexicon_normalized(const std::string& normalizedPath) {
    return lexicon_from_json(read_file(normalizedPath));
}

}  // namespace rcgp

#include "proofleg/mizar_lite.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "proofleg/errors.hpp"

namespace proofleg {

namespace {

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!is_ident_char(c)) return false;
    return true;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Collapses every whitespace run to a single space and trims the ends.
std::string normalize(const std::string& s) {
    std::string out;
    bool in_ws = true;
    for (char c : s) {
        if (c == ' ' || c == '\t') {
            if (!in_ws) out += ' ';
            in_ws = true;
        } else {
            out += c;
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// If text starts with the given word (followed by a word boundary), strips it.
bool strip_word(std::string& text, const char* word) {
    const std::size_t len = std::string(word).size();
    if (text.compare(0, len, word) != 0) return false;
    if (text.size() > len && is_ident_char(text[len])) return false;
    text = trim(text.substr(len));
    return true;
}

// Maximal runs of [A-Za-z0-9_.], used to match mentioned identifiers.
std::vector<std::string> word_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (is_ident_char(c) || c == '.') {
            cur += c;
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

struct RawStep {
    std::string text; // normalized, without the trailing ';'
    int line = 0;     // line where the step starts
};

struct Splitter {
    std::vector<RawStep> steps;
    bool saw_proof = false;
    bool saw_end = false;
    std::string buffer;
    int start_line = 0;
    int last_line = 0;

    void feed(const std::string& raw, int line_no) {
        last_line = line_no;
        std::string text = raw;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (const std::size_t c = text.find("::"); c != std::string::npos)
            text = text.substr(0, c);
        if (!saw_proof) {
            if (trim(text) == "proof") saw_proof = true;
            return;
        }
        if (saw_end) return;
        for (char ch : text) {
            if (ch == ';') {
                RawStep step{normalize(buffer), start_line};
                buffer.clear();
                start_line = 0;
                if (step.text.empty())
                    fail(Errc::SyntaxError, "empty step", step.line ? step.line : line_no);
                if (step.text == "end") {
                    saw_end = true;
                    return;
                }
                steps.push_back(std::move(step));
            } else {
                if (buffer.empty() && (ch == ' ' || ch == '\t')) continue;
                if (buffer.empty()) start_line = line_no;
                buffer += ch;
            }
        }
        if (!buffer.empty()) buffer += ' '; // line break acts as whitespace inside a step
    }

    void finish() const {
        if (!saw_proof) fail(Errc::SyntaxError, "no \"proof\" line found", last_line);
        if (!saw_end) fail(Errc::SyntaxError, "missing \"end;\"", last_line);
    }
};

struct StepParser {
    std::vector<std::pair<int, int>> refs;
    std::vector<std::pair<int, int>> vars;
    std::unordered_map<std::string, int> step_of_label;
    std::unordered_map<std::string, int> step_of_ident;

    void introduce(const std::string& ident, int step, int line) {
        if (!is_identifier(ident))
            fail(Errc::SyntaxError, "\"" + ident + "\" is not an identifier", line);
        step_of_ident[ident] = step;
    }

    void register_label(const std::string& label, int step, int line) {
        if (!step_of_label.emplace(label, step).second)
            fail(Errc::DuplicateLabel, "label " + label + " already used", line);
    }

    void scan_mentions(const std::string& statement, int step) {
        for (const std::string& tok : word_tokens(statement)) {
            const auto it = step_of_ident.find(tok);
            if (it != step_of_ident.end() && it->second != step)
                vars.emplace_back(it->second, step);
        }
    }

    // Parses "[L:] statement [by refs]"; registers the label, adds reference
    // arcs for the citations, and variable arcs for mentioned identifiers.
    void statement_part(std::string text, int step, int line) {
        if (const std::size_t colon = text.find(':'); colon != std::string::npos) {
            const std::string prefix = trim(text.substr(0, colon));
            if (is_identifier(prefix)) {
                register_label(prefix, step, line);
                text = trim(text.substr(colon + 1));
            }
        }
        std::string statement = text;
        if (const std::size_t by = text.rfind(" by "); by != std::string::npos) {
            statement = trim(text.substr(0, by));
            const std::string ref_text = text.substr(by + 4);
            std::size_t start = 0;
            while (start <= ref_text.size()) {
                std::size_t comma = ref_text.find(',', start);
                if (comma == std::string::npos) comma = ref_text.size();
                const std::string ref = trim(ref_text.substr(start, comma - start));
                start = comma + 1;
                if (ref.empty()) fail(Errc::SyntaxError, "empty reference", line);
                std::string head = ref;
                strip_word(head, "def");
                if (ref.find(':') != std::string::npos || head != ref) continue; // external
                const auto it = step_of_label.find(ref);
                if (it == step_of_label.end())
                    fail(Errc::UnknownLabel, "reference to unknown label " + ref, line);
                refs.emplace_back(it->second, step);
            }
        }
        if (statement.empty()) fail(Errc::SyntaxError, "step without a statement", line);
        scan_mentions(statement, step);
    }

    void parse(const RawStep& raw, int step) {
        std::string text = raw.text;
        const int line = raw.line;
        const bool is_thus = strip_word(text, "thus");
        const bool is_then = strip_word(text, "then");
        if (is_then) {
            if (step == 1) fail(Errc::SyntaxError, "\"then\" in the first step", line);
            refs.emplace_back(step - 1, step);
        }

        if (strip_word(text, "let")) {
            if (is_thus || is_then)
                fail(Errc::SyntaxError, "\"let\" cannot be linked or concluded", line);
            std::size_t start = 0;
            while (start <= text.size()) {
                std::size_t comma = text.find(',', start);
                if (comma == std::string::npos) comma = text.size();
                std::string segment = trim(text.substr(start, comma - start));
                start = comma + 1;
                if (const std::size_t sp = segment.find(' '); sp != std::string::npos) {
                    const std::string rest = trim(segment.substr(sp));
                    std::string tail = rest;
                    if (!strip_word(tail, "be"))
                        fail(Errc::SyntaxError, "expected \"be\" in a let step", line);
                    segment = trim(segment.substr(0, sp));
                }
                introduce(segment, step, line);
            }
            return;
        }
        if (strip_word(text, "assume")) {
            if (is_thus || is_then)
                fail(Errc::SyntaxError, "\"assume\" cannot be linked or concluded", line);
            statement_part(text, step, line);
            return;
        }
        if (strip_word(text, "consider")) {
            if (is_thus) fail(Errc::SyntaxError, "\"thus consider\" is not supported", line);
            const std::size_t be = text.find(" be ");
            if (be == std::string::npos)
                fail(Errc::SyntaxError, "expected \"be\" in a consider step", line);
            const std::string idents = text.substr(0, be);
            std::size_t start = 0;
            while (start <= idents.size()) {
                std::size_t comma = idents.find(',', start);
                if (comma == std::string::npos) comma = idents.size();
                introduce(trim(idents.substr(start, comma - start)), step, line);
                start = comma + 1;
            }
            const std::string after_be = text.substr(be + 4);
            const std::size_t st = after_be.find("such that ");
            if (st == std::string::npos)
                fail(Errc::SyntaxError, "expected \"such that\" in a consider step", line);
            statement_part(trim(after_be.substr(st + 10)), step, line);
            return;
        }
        statement_part(text, step, line);
    }
};

} // namespace

ParsedScript parse_mizar_lite(std::istream& in) {
    Splitter splitter;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) splitter.feed(line, ++line_no);
    splitter.finish();

    const int n = static_cast<int>(splitter.steps.size());
    if (n == 0) fail(Errc::SyntaxError, "proof has no steps", splitter.last_line);

    StepParser parser;
    std::vector<int> lines;
    lines.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        parser.parse(splitter.steps[static_cast<std::size_t>(i)], i + 1);
        lines.push_back(splitter.steps[static_cast<std::size_t>(i)].line);
    }
    return ParsedScript{build_graph(n, parser.refs, parser.vars), std::move(lines)};
}

ParsedScript parse_mizar_lite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open " + path);
    return parse_mizar_lite(in);
}

} // namespace proofleg

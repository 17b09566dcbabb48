#include "kexkit/bibtex.hpp"

#include <algorithm>
#include <cctype>

#include "kexkit/textproc.hpp"

namespace kexkit {
namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

struct ParseError {
    std::string message;
};

// Cursor over the sanitized source; line numbers tracked for warnings.
struct Scanner {
    std::string_view text;
    size_t pos = 0;
    mutable size_t cached_pos = 0;
    mutable int cached_line = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char get() { return text[pos++]; }

    int line_at(size_t p) const {
        if (p < cached_pos) {
            cached_pos = 0;
            cached_line = 1;
        }
        size_t stop = std::min(p, text.size());
        for (size_t i = cached_pos; i < stop; i++)
            if (text[i] == '\n') cached_line++;
        cached_pos = stop;
        return cached_line;
    }
    int line() const { return line_at(pos); }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) pos++;
    }

    bool is_name_char(char c) const {
        unsigned char uc = static_cast<unsigned char>(c);
        return std::isalnum(uc) || c == '-' || c == '_' || c == '.' || c == '+' ||
               c == ':' || c == '/';
    }

    std::string read_name() {
        size_t start = pos;
        while (!eof() && is_name_char(peek())) pos++;
        return std::string(text.substr(start, pos - start));
    }

    // Balanced {...}; returns the inner text. pos sits on '{' at call.
    std::string read_braced() {
        size_t start_line = line();
        get(); // '{'
        std::string out;
        int depth = 1;
        while (!eof()) {
            char c = get();
            if (c == '{') depth++;
            else if (c == '}') {
                depth--;
                if (depth == 0) return out;
            }
            out.push_back(c);
        }
        throw ParseError{"unbalanced braces (opened at line " +
                         std::to_string(start_line) + ")"};
    }

    // "..." with balanced inner braces; '"' inside braces is literal.
    std::string read_quoted() {
        size_t start_line = line();
        get(); // '"'
        std::string out;
        int depth = 0;
        while (!eof()) {
            char c = get();
            if (c == '{') depth++;
            else if (c == '}') depth--;
            else if (c == '"' && depth == 0) return out;
            out.push_back(c);
        }
        throw ParseError{"unterminated quoted value (opened at line " +
                         std::to_string(start_line) + ")"};
    }

    // One value: tokens joined by '#'. Bare identifiers resolve through the
    // macro env (kept verbatim when undefined).
    std::string read_value(const MacroEnv& env, std::vector<ParseWarning>& warnings) {
        std::string out;
        while (true) {
            skip_ws();
            if (eof()) throw ParseError{"unexpected end of file in value"};
            char c = peek();
            if (c == '{') {
                out += read_braced();
            } else if (c == '"') {
                out += read_quoted();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                out += read_name();
            } else if (is_name_char(c)) {
                int at_line = line();
                std::string name = read_name();
                auto it = env.find(lower_ascii(name));
                if (it != env.end()) {
                    out += it->second;
                } else {
                    warnings.push_back({at_line, "undefined macro '" + name + "'"});
                    out += name;
                }
            } else {
                throw ParseError{"unexpected character '" + std::string(1, c) +
                                 "' in value at line " + std::to_string(line())};
            }
            skip_ws();
            if (!eof() && peek() == '#') {
                get();
                continue;
            }
            return out;
        }
    }
};

} // namespace

const std::string* RawEntry::find_field(std::string_view name) const {
    for (const auto& [key, value] : fields)
        if (key == name) return &value;
    return nullptr;
}

MacroEnv default_macro_env() {
    return {
        {"jan", "January"}, {"feb", "February"}, {"mar", "March"},
        {"apr", "April"},   {"may", "May"},      {"jun", "June"},
        {"jul", "July"},    {"aug", "August"},   {"sep", "September"},
        {"oct", "October"}, {"nov", "November"}, {"dec", "December"},
    };
}

BibParseResult parse_bibtex(std::string_view source_text, MacroEnv& macro_env) {
    for (const auto& [name, value] : default_macro_env())
        macro_env.emplace(name, value);

    std::string clean = sanitize_utf8(source_text);
    BibParseResult result;
    Scanner sc{clean};

    while (true) {
        // scan to the next '@' at top level
        while (!sc.eof() && sc.peek() != '@') sc.pos++;
        if (sc.eof()) break;
        size_t at_pos = sc.pos;
        int at_line = sc.line_at(at_pos);
        sc.get(); // '@'

        try {
            sc.skip_ws();
            std::string type;
            while (!sc.eof() && std::isalpha(static_cast<unsigned char>(sc.peek())))
                type.push_back(sc.get());
            type = lower_ascii(type);
            if (type.empty())
                throw ParseError{"missing entry type after '@'"};

            sc.skip_ws();
            if (sc.eof() || (sc.peek() != '{' && sc.peek() != '('))
                throw ParseError{"expected '{' after @" + type};
            char open = sc.get();
            char close = open == '{' ? '}' : ')';

            if (type == "comment" || type == "preamble") {
                int depth = 1;
                while (!sc.eof() && depth > 0) {
                    char c = sc.get();
                    if (c == open) depth++;
                    else if (c == close) depth--;
                }
                if (depth != 0) throw ParseError{"unterminated @" + type};
                continue;
            }

            if (type == "string") {
                while (true) {
                    sc.skip_ws();
                    if (!sc.eof() && sc.peek() == close) {
                        sc.get();
                        break;
                    }
                    std::string name = lower_ascii(sc.read_name());
                    if (name.empty()) throw ParseError{"missing macro name in @string"};
                    sc.skip_ws();
                    if (sc.eof() || sc.get() != '=')
                        throw ParseError{"expected '=' in @string"};
                    std::string value =
                        collapse_whitespace(sc.read_value(macro_env, result.warnings));
                    macro_env[name] = value;
                    sc.skip_ws();
                    if (!sc.eof() && sc.peek() == ',') sc.get();
                }
                continue;
            }

            RawEntry entry;
            entry.entry_type = type;
            sc.skip_ws();
            while (!sc.eof() && sc.peek() != ',' && sc.peek() != close &&
                   !std::isspace(static_cast<unsigned char>(sc.peek())))
                entry.citation_key.push_back(sc.get());
            if (entry.citation_key.empty())
                throw ParseError{"missing citation key in @" + type};

            while (true) {
                sc.skip_ws();
                if (sc.eof()) throw ParseError{"unexpected end of file in entry"};
                if (sc.peek() == close) {
                    sc.get();
                    break;
                }
                if (sc.peek() == ',') {
                    sc.get();
                    continue;
                }
                int field_line = sc.line();
                std::string name = lower_ascii(sc.read_name());
                if (name.empty())
                    throw ParseError{"expected field name at line " +
                                     std::to_string(field_line)};
                sc.skip_ws();
                if (sc.eof() || sc.peek() != '=')
                    throw ParseError{"expected '=' after field '" + name + "'"};
                sc.get();
                std::string value =
                    collapse_whitespace(sc.read_value(macro_env, result.warnings));
                auto dup = std::find_if(entry.fields.begin(), entry.fields.end(),
                                        [&](const auto& f) { return f.first == name; });
                if (dup != entry.fields.end()) {
                    result.warnings.push_back(
                        {field_line, "duplicate field '" + name + "' in entry '" +
                                         entry.citation_key + "' (last occurrence wins)"});
                    dup->second = value;
                } else {
                    entry.fields.emplace_back(std::move(name), std::move(value));
                }
            }
            result.entries.push_back(std::move(entry));
        } catch (const ParseError& err) {
            result.warnings.push_back(
                {at_line, "skipped entry at line " + std::to_string(at_line) + ": " +
                              err.message});
            // resume at the next '@' after the failed entry start
            sc.pos = at_pos + 1;
            while (!sc.eof() && sc.peek() != '@') sc.pos++;
        }
    }
    return result;
}

std::vector<std::string> split_keywords(std::string_view raw) {
    char sep = raw.find(';') != std::string_view::npos ? ';' : ',';
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= raw.size()) {
        size_t end = raw.find(sep, start);
        if (end == std::string_view::npos) end = raw.size();
        std::string_view piece = raw.substr(start, end - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
            piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
            piece.remove_suffix(1);
        if (!piece.empty() && piece.back() == '.') {
            piece.remove_suffix(1);
            while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
                piece.remove_suffix(1);
        }
        if (!piece.empty()) out.emplace_back(piece);
        if (end == raw.size()) break;
        start = end + 1;
    }
    return out;
}

} // namespace kexkit

#ifndef KEXKIT_BIBTEX_HPP_
#define KEXKIT_BIBTEX_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kexkit {

/// One parsed @entry. Field names are lowercased and unique (last occurrence
/// wins, with a warning); values are post macro-expansion/concatenation with
/// whitespace runs collapsed.
struct RawEntry {
    std::string entry_type;   // lowercase, e.g. "article"
    std::string citation_key;
    std::vector<std::pair<std::string, std::string>> fields; // in file order

    const std::string* find_field(std::string_view name) const;
};

struct ParseWarning {
    int line = 0;
    std::string message;
};

struct BibParseResult {
    std::vector<RawEntry> entries;
    std::vector<ParseWarning> warnings;
};

using MacroEnv = std::map<std::string, std::string>;

/// Standard month macros jan..dec, expanded to English month names.
MacroEnv default_macro_env();

/// Tolerant BibTeX parser. @string definitions update macro_env (month
/// macros are pre-seeded if absent), `#` concatenation is resolved, values
/// may be brace-delimited (nested braces balance), quote-delimited, or bare
/// macro/number tokens. @comment and @preamble blocks are skipped. A
/// malformed entry is skipped with a warning carrying its line number; the
/// rest of the file is still parsed.
BibParseResult parse_bibtex(std::string_view source_text, MacroEnv& macro_env);

/// Splits a keywords field on ";" when present, otherwise on ",". Pieces are
/// whitespace-trimmed, one trailing "." is stripped, empties are dropped,
/// order and case are preserved.
std::vector<std::string> split_keywords(std::string_view raw);

} // namespace kexkit

#endif // KEXKIT_BIBTEX_HPP_

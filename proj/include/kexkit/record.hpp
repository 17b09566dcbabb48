#ifndef KEXKIT_RECORD_HPP_
#define KEXKIT_RECORD_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kexkit/bibtex.hpp"

namespace kexkit {

struct BibRecord {
    std::string id; // citation key, hash-suffixed on collision
    std::string title;
    std::string abstract;
    std::vector<std::string> authors;
    std::optional<int> year;
    std::optional<std::string> journal;
    std::vector<std::string> keyphrases; // gold; non-empty, deduplicated
    std::optional<std::string> topic;
    std::string source_file;
    std::map<std::string, std::string> extra; // all remaining attributes

    bool operator==(const BibRecord&) const = default;
};

struct NormalizeResult {
    std::optional<BibRecord> record;
    std::string rejection; // "no_abstract" or "no_keywords" when empty record
};

/// Removes TeX grouping braces and collapses whitespace runs.
std::string clean_tex_value(std::string_view value);

/// Splits an author field on the whitespace-delimited token "and"
/// (case-insensitive).
std::vector<std::string> split_authors(std::string_view field);

/// First 4-digit integer in the field, if any.
std::optional<int> parse_year(std::string_view field);

/// Builds a BibRecord from a parsed entry. Entries without a non-empty
/// abstract are rejected as "no_abstract"; entries whose keywords split to
/// nothing are rejected as "no_keywords".
NormalizeResult normalize_record(const RawEntry& entry, const std::string& source_file,
                                 const std::optional<std::string>& topic);

} // namespace kexkit

#endif // KEXKIT_RECORD_HPP_

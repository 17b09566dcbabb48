#ifndef KEXKIT_TEXTPROC_HPP_
#define KEXKIT_TEXTPROC_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace kexkit {

// Coarse tagset; the noun-chunk rules only need the ADJ/NOUN/PROPN
// distinctions, everything else exists so external taggers can round-trip.
enum class PosTag {
    Noun,
    Propn,
    Adj,
    Verb,
    Adv,
    Det,
    Adp,
    Num,
    Punct,
    Other,
};

std::string_view pos_tag_name(PosTag tag);

/// Parses one of the ten tag names ("NOUN", "ADJ", ...). Throws
/// std::runtime_error on anything else.
PosTag parse_pos_tag(std::string_view name);

struct Token {
    std::string surface;
    std::string stem;          // porter_stem(lowercase(surface))
    PosTag pos = PosTag::Other;
    int sent_index = 0;        // 0-based
    int doc_position = 0;      // 1-based over word tokens
};

struct TaggedDocument {
    std::vector<Token> tokens;
    std::string source_id;

    bool empty() const { return tokens.empty(); }
    int sentence_count() const {
        return tokens.empty() ? 0 : tokens.back().sent_index + 1;
    }
};

/// Splits text into sentences and word tokens. Sentence boundaries are
/// [.?!] runs followed by whitespace and an uppercase letter, or end of
/// text. Word tokens are maximal runs of letters/digits/hyphens/apostrophes
/// (non-ASCII bytes count as letters); leading and trailing hyphens or
/// apostrophes are trimmed and punctuation produces no tokens. All tokens
/// come back with pos = OTHER.
TaggedDocument tokenize(std::string_view text, std::string source_id = "");

/// Replaces invalid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

} // namespace kexkit

#endif // KEXKIT_TEXTPROC_HPP_

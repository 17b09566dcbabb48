#include "kexkit/textproc.hpp"

#include <cctype>
#include <stdexcept>

#include "kexkit/porter.hpp"

namespace kexkit {
namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '\'' || c >= 0x80;
}

bool is_core_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string_view pos_tag_name(PosTag tag) {
    switch (tag) {
    case PosTag::Noun: return "NOUN";
    case PosTag::Propn: return "PROPN";
    case PosTag::Adj: return "ADJ";
    case PosTag::Verb: return "VERB";
    case PosTag::Adv: return "ADV";
    case PosTag::Det: return "DET";
    case PosTag::Adp: return "ADP";
    case PosTag::Num: return "NUM";
    case PosTag::Punct: return "PUNCT";
    case PosTag::Other: return "OTHER";
    }
    return "OTHER";
}

PosTag parse_pos_tag(std::string_view name) {
    if (name == "NOUN") return PosTag::Noun;
    if (name == "PROPN") return PosTag::Propn;
    if (name == "ADJ") return PosTag::Adj;
    if (name == "VERB") return PosTag::Verb;
    if (name == "ADV") return PosTag::Adv;
    if (name == "DET") return PosTag::Det;
    if (name == "ADP") return PosTag::Adp;
    if (name == "NUM") return PosTag::Num;
    if (name == "PUNCT") return PosTag::Punct;
    if (name == "OTHER") return PosTag::Other;
    throw std::runtime_error("unknown POS tag '" + std::string(name) + "'");
}

TaggedDocument tokenize(std::string_view text, std::string source_id) {
    TaggedDocument doc;
    doc.source_id = std::move(source_id);

    int sent = 0;
    int position = 0;
    size_t i = 0;
    const size_t n = text.size();
    bool sentence_has_tokens = false;

    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_char(c)) {
            size_t start = i;
            while (i < n && is_word_char(static_cast<unsigned char>(text[i]))) i++;
            size_t end = i;
            while (start < end && !is_core_char(static_cast<unsigned char>(text[start]))) start++;
            while (end > start && !is_core_char(static_cast<unsigned char>(text[end - 1]))) end--;
            if (start < end) {
                Token tok;
                tok.surface = std::string(text.substr(start, end - start));
                tok.stem = porter_stem(lower_ascii(tok.surface));
                tok.sent_index = sent;
                tok.doc_position = ++position;
                doc.tokens.push_back(std::move(tok));
                sentence_has_tokens = true;
            }
            continue;
        }
        if (is_terminator(text[i])) {
            size_t j = i + 1;
            while (j < n && is_terminator(text[j])) j++;
            size_t ws = j;
            while (ws < n && std::isspace(static_cast<unsigned char>(text[ws]))) ws++;
            bool boundary = false;
            if (ws >= n) {
                boundary = true;
            } else if (ws > j && std::isupper(static_cast<unsigned char>(text[ws]))) {
                boundary = true;
            }
            if (boundary && sentence_has_tokens) {
                sent++;
                sentence_has_tokens = false;
            }
            i = j;
            continue;
        }
        i++;
    }
    return doc;
}

std::string sanitize_utf8(std::string_view bytes) {
    static const char kReplacement[] = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(bytes.size());
    size_t i = 0;
    const size_t n = bytes.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            i++;
            continue;
        }
        size_t len = 0;
        unsigned int cp = 0;
        if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1Fu; }
        else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0Fu; }
        else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07u; }
        if (len == 0 || i + len > n) {
            out.append(kReplacement);
            i++;
            continue;
        }
        bool ok = true;
        for (size_t k = 1; k < len; k++) {
            unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) { ok = false; break; }
            cp = (cp << 6) | (cc & 0x3Fu);
        }
        if (ok) {
            // reject overlongs, surrogates and out-of-range points
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
                (cp >= 0xD800 && cp <= 0xDFFF))
                ok = false;
        }
        if (ok) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out.append(kReplacement);
            i++;
        }
    }
    return out;
}

} // namespace kexkit

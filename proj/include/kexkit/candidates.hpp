#ifndef KEXKIT_CANDIDATES_HPP_
#define KEXKIT_CANDIDATES_HPP_

#include <string>
#include <vector>

#include "kexkit/stopwords.hpp"
#include "kexkit/textproc.hpp"

namespace kexkit {

struct CandidatePhrase {
    std::vector<std::string> stems;
    std::vector<std::string> surfaces;               // first occurrence
    std::vector<std::vector<int>> occurrences;       // consecutive doc positions
};

/// True when the token can be part of a candidate phrase / graph node:
/// tag in {ADJ, NOUN, PROPN} and not a stopword.
bool qualifies(const Token& tok, const StopwordSet& stopwords);

/// Noun chunks: within each sentence, maximal (ADJ)*(NOUN|PROPN)+ tag runs
/// over qualifying tokens, clipped to the trailing max_phrase_len window;
/// every qualifying word is additionally a length-1 candidate. Occurrences
/// with identical stem sequences are merged; output order is first
/// appearance.
std::vector<CandidatePhrase> select_candidates(const TaggedDocument& doc,
                                               int max_phrase_len,
                                               const StopwordSet& stopwords);

/// Canonical phrase key: lowercase, word-tokenize, Porter-stem each token,
/// join with single spaces. Used for bib-weight lookup and exact matching.
std::string normalize_phrase_key(std::string_view phrase);

/// Key of an already-stemmed candidate (its stems joined with spaces).
std::string phrase_key(const CandidatePhrase& phrase);

} // namespace kexkit

#endif // KEXKIT_CANDIDATES_HPP_

#ifndef KEXKIT_TFIDF_HPP_
#define KEXKIT_TFIDF_HPP_

#include <string>
#include <unordered_map>

#include "kexkit/dataset.hpp"
#include "kexkit/extract.hpp"

namespace kexkit {

/// Inverse document frequencies over abstract stems. idf = ln(N/(1+df)) + 1,
/// which stays positive even for stems present in every document; stems
/// never seen in the corpus fall back to the df = 0 value ln(N) + 1.
struct IdfTable {
    std::unordered_map<std::string, double> idf;
    int doc_count = 0;

    double value(const std::string& stem) const;
};

/// Throws std::runtime_error("empty_corpus") on an empty dataset.
IdfTable compute_idf(const Dataset& ds);

/// Phrase score = sum over the phrase's distinct stems of
/// tf(stem in doc) * idf(stem); tf counts raw occurrences over all word
/// tokens of the document.
ExtractResult tfidf_extract(const TaggedDocument& doc, const IdfTable& idf,
                            const ExtractOptions& options);

} // namespace kexkit

#endif // KEXKIT_TFIDF_HPP_

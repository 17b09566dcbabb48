#include "kexkit/registry.hpp"

#include <memory>
#include <stdexcept>

#include "kexkit/tfidf.hpp"

namespace kexkit {
namespace {

DocExtractor make_textrank(const Dataset&, const ContextSpec&,
                           const ExtractOptions& options) {
    return [options](const BibRecord&, const TaggedDocument& doc) {
        return textrank_extract(doc, options);
    };
}

DocExtractor make_positionrank(const Dataset&, const ContextSpec&,
                               const ExtractOptions& options) {
    return [options](const BibRecord&, const TaggedDocument& doc) {
        return positionrank_extract(doc, options);
    };
}

DocExtractor make_bibrank(const Dataset& ds, const ContextSpec& context,
                          const ExtractOptions& options) {
    auto records = std::make_shared<std::vector<const BibRecord*>>(
        select_context(ds, context));
    return [records, options](const BibRecord& doc_record, const TaggedDocument& doc) {
        std::vector<const BibRecord*> ctx;
        ctx.reserve(records->size());
        for (const BibRecord* rec : *records)
            if (rec->id != doc_record.id) ctx.push_back(rec);
        BibWeightTable weights = compute_bib_weights(ctx);
        return bibrank_extract(doc, weights, options);
    };
}

DocExtractor make_tfidf(const Dataset& ds, const ContextSpec&,
                        const ExtractOptions& options) {
    auto idf = std::make_shared<IdfTable>(compute_idf(ds));
    return [idf, options](const BibRecord&, const TaggedDocument& doc) {
        return tfidf_extract(doc, *idf, options);
    };
}

} // namespace

const std::vector<std::string>& extractor_names() {
    static const std::vector<std::string> names = {"bibrank", "positionrank",
                                                   "textrank", "tfidf"};
    return names;
}

bool has_extractor(const std::string& name) {
    for (const std::string& n : extractor_names())
        if (n == name) return true;
    return false;
}

ExtractorFactory find_extractor(const std::string& name) {
    if (name == "textrank") return make_textrank;
    if (name == "positionrank") return make_positionrank;
    if (name == "bibrank") return make_bibrank;
    if (name == "tfidf") return make_tfidf;
    throw std::invalid_argument("unknown extractor '" + name + "'");
}

} // namespace kexkit

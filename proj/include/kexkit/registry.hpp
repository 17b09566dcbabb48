#ifndef KEXKIT_REGISTRY_HPP_
#define KEXKIT_REGISTRY_HPP_

#include <functional>
#include <string>
#include <vector>

#include "kexkit/evaluate.hpp"

namespace kexkit {

/// Builds the per-document extraction hook for one algorithm: shared
/// resources (bib-weight context, idf table) are prepared once, then the
/// returned callable runs per document. For bibrank the document under
/// evaluation is excluded from its own context (no-leak rule).
using ExtractorFactory = std::function<DocExtractor(
    const Dataset& ds, const ContextSpec& context, const ExtractOptions& options)>;

/// Registered algorithm names, in listing order.
const std::vector<std::string>& extractor_names();

bool has_extractor(const std::string& name);

/// Throws std::invalid_argument for unregistered names.
ExtractorFactory find_extractor(const std::string& name);

} // namespace kexkit

#endif // KEXKIT_REGISTRY_HPP_

#ifndef KEXKIT_STOPWORDS_HPP_
#define KEXKIT_STOPWORDS_HPP_

#include <string>
#include <unordered_set>

namespace kexkit {

using StopwordSet = std::unordered_set<std::string>;

/// Embedded default list (lowercase function words).
const StopwordSet& default_stopwords();

/// Loads one lowercase word per line; '#' starts a comment line.
StopwordSet load_stopwords(const std::string& path);

} // namespace kexkit

#endif // KEXKIT_STOPWORDS_HPP_

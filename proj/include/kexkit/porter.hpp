#ifndef KEXKIT_PORTER_HPP_
#define KEXKIT_PORTER_HPP_

#include <string>
#include <string_view>

namespace kexkit {

/// Porter stemmer (1980 algorithm, steps 1a-5b as in the reference
/// implementation). Input is lowercased first; words of length <= 2 and
/// words containing non-alphabetic characters are returned lowercased
/// unchanged.
std::string porter_stem(std::string_view word);

} // namespace kexkit

#endif // KEXKIT_PORTER_HPP_

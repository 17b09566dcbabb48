#ifndef KEXKIT_TAGGER_HPP_
#define KEXKIT_TAGGER_HPP_

#include <memory>
#include <string>
#include <vector>

#include "kexkit/textproc.hpp"

namespace kexkit {

/// Maps one sentence of token surfaces to tags from the fixed tagset.
class Tagger {
public:
    virtual ~Tagger() = default;
    virtual std::vector<PosTag> tag_sentence(const std::vector<std::string>& surfaces,
                                             int sentence_index) const = 0;
};

/// Rule-based tagger: embedded frequency lexicon, then digit tokens -> NUM,
/// then suffix heuristics (-tion/-ment/-ness/-ity -> NOUN, -ous/-ful/-ive/-al
/// -> ADJ, -ly -> ADV, -ize/-ate -> VERB), then capitalized mid-sentence ->
/// PROPN, default NOUN.
class LexiconTagger final : public Tagger {
public:
    std::vector<PosTag> tag_sentence(const std::vector<std::string>& surfaces,
                                     int sentence_index) const override;
};

/// Replays tags recorded in a CoNLL-style side file: one "surface<TAB>TAG"
/// line per token, blank line between sentences. A token-count mismatch for
/// a sentence raises an error naming the sentence index.
class ConllTagger final : public Tagger {
public:
    explicit ConllTagger(const std::string& path);

    std::vector<PosTag> tag_sentence(const std::vector<std::string>& surfaces,
                                     int sentence_index) const override;

private:
    std::vector<std::vector<PosTag>> sentences_;
    std::string path_;
};

/// Applies the tagger sentence by sentence; returns a copy of the document
/// with pos filled in.
TaggedDocument tag(const TaggedDocument& doc, const Tagger& tagger);

} // namespace kexkit

#endif // KEXKIT_TAGGER_HPP_

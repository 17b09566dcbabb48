#include <doctest.h>

#include "kexkit/extract.hpp"
#include "kexkit/tagger.hpp"

using namespace kexkit;

namespace {

const char* kExampleText =
    "Keyword extraction is tasked with the automatic identification of terms "
    "that best describe the subject of a document.";

TaggedDocument lexicon_tagged(const char* text) {
    return tag(tokenize(text), LexiconTagger{});
}

} // namespace

TEST_CASE("positionrank ranks the leading phrase above its tail word") {
    TaggedDocument doc = lexicon_tagged(kExampleText);
    ExtractResult result = positionrank_extract(doc, ExtractOptions{});
    REQUIRE(!result.phrases.empty());
    size_t ke = result.phrases.size(), ex = result.phrases.size();
    for (size_t i = 0; i < result.phrases.size(); i++) {
        if (result.phrases[i].text == "Keyword extraction") ke = i;
        if (result.phrases[i].text == "extraction") ex = i;
    }
    REQUIRE(ke < result.phrases.size());
    REQUIRE(ex < result.phrases.size());
    CHECK(ke < ex);
    CHECK(result.converged);
}

TEST_CASE("empty document extracts nothing") {
    TaggedDocument doc = lexicon_tagged("");
    CHECK(positionrank_extract(doc, ExtractOptions{}).phrases.empty());
    CHECK(textrank_extract(doc, ExtractOptions{}).phrases.empty());
}

TEST_CASE("output length is clipped to top_n") {
    TaggedDocument doc = lexicon_tagged(kExampleText);
    ExtractOptions options;
    options.rank.top_n = 3;
    CHECK(positionrank_extract(doc, options).phrases.size() == 3);
    options.rank.top_n = 1000;
    ExtractResult all = positionrank_extract(doc, options);
    CHECK(all.phrases.size() < 1000);
    // scores are sorted descending
    for (size_t i = 1; i < all.phrases.size(); i++)
        CHECK(all.phrases[i - 1].score >= all.phrases[i].score);
}

TEST_CASE("extractors are deterministic") {
    TaggedDocument doc = lexicon_tagged(
        "Graph ranking spreads scores. Scores move along co-occurrence edges. "
        "Edges connect frequent word pairs in technical abstracts.");
    ExtractResult a = positionrank_extract(doc, ExtractOptions{});
    ExtractResult b = positionrank_extract(doc, ExtractOptions{});
    REQUIRE(a.phrases.size() == b.phrases.size());
    for (size_t i = 0; i < a.phrases.size(); i++) {
        CHECK(a.phrases[i].text == b.phrases[i].text);
        CHECK(a.phrases[i].score == b.phrases[i].score);
    }
}

TEST_CASE("textrank equals positionrank when the position profile is uniform") {
    // two qualifying words, each occurring twice with equal reciprocal-position
    // sums: node A at positions {3, 12}, node B at {4, 6}: 1/3+1/12 = 1/4+1/6
    TaggedDocument doc = tokenize("is was alpha beta is beta was was was was is alpha");
    for (Token& tok : doc.tokens) tok.pos = PosTag::Verb;
    doc.tokens[2].pos = PosTag::Noun;  // alpha @3
    doc.tokens[3].pos = PosTag::Noun;  // beta  @4
    doc.tokens[5].pos = PosTag::Noun;  // beta  @6
    doc.tokens[11].pos = PosTag::Noun; // alpha @12
    auto raw = position_raw_weights(doc, default_stopwords());
    REQUIRE(raw.at("alpha") == doctest::Approx(raw.at("beta")).epsilon(1e-15));

    ExtractResult pr = positionrank_extract(doc, ExtractOptions{});
    ExtractResult tr = textrank_extract(doc, ExtractOptions{});
    REQUIRE(pr.phrases.size() == tr.phrases.size());
    for (size_t i = 0; i < pr.phrases.size(); i++) {
        CHECK(pr.phrases[i].text == tr.phrases[i].text);
        CHECK(pr.phrases[i].score ==
              doctest::Approx(tr.phrases[i].score).epsilon(1e-12));
    }
}

TEST_CASE("ties break lexicographically by stem sequence") {
    std::vector<CandidatePhrase> candidates(3);
    candidates[0].stems = {"zebra"};
    candidates[0].surfaces = {"zebra"};
    candidates[1].stems = {"apple"};
    candidates[1].surfaces = {"apple"};
    candidates[2].stems = {"mango"};
    candidates[2].surfaces = {"mango"};
    ExtractResult r = rank_candidates(candidates, {0.5, 0.5, 0.9}, 10);
    REQUIRE(r.phrases.size() == 3);
    CHECK(r.phrases[0].text == "mango");
    CHECK(r.phrases[1].text == "apple");
    CHECK(r.phrases[2].text == "zebra");
}

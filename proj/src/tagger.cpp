#include "kexkit/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

namespace kexkit {
namespace {

// Closed-class words plus frequent open-class words whose tag the suffix
// heuristics would get wrong (state, signal, apply, ...).
const std::unordered_map<std::string, PosTag>& lexicon() {
    static const std::unordered_map<std::string, PosTag> lex = {
        // determiners / pronouns treated as DET for chunking purposes
        {"the", PosTag::Det}, {"a", PosTag::Det}, {"an", PosTag::Det},
        {"this", PosTag::Det}, {"that", PosTag::Det}, {"these", PosTag::Det},
        {"those", PosTag::Det}, {"each", PosTag::Det}, {"every", PosTag::Det},
        {"some", PosTag::Det}, {"any", PosTag::Det}, {"no", PosTag::Det},
        {"all", PosTag::Det}, {"both", PosTag::Det}, {"either", PosTag::Det},
        {"neither", PosTag::Det}, {"another", PosTag::Det}, {"such", PosTag::Det},
        {"its", PosTag::Det}, {"their", PosTag::Det}, {"our", PosTag::Det},
        {"his", PosTag::Det}, {"her", PosTag::Det}, {"your", PosTag::Det},
        {"my", PosTag::Det}, {"which", PosTag::Det}, {"whose", PosTag::Det},
        // adpositions
        {"of", PosTag::Adp}, {"in", PosTag::Adp}, {"to", PosTag::Adp},
        {"for", PosTag::Adp}, {"with", PosTag::Adp}, {"on", PosTag::Adp},
        {"at", PosTag::Adp}, {"by", PosTag::Adp}, {"from", PosTag::Adp},
        {"as", PosTag::Adp}, {"into", PosTag::Adp}, {"about", PosTag::Adp},
        {"over", PosTag::Adp}, {"after", PosTag::Adp}, {"before", PosTag::Adp},
        {"between", PosTag::Adp}, {"through", PosTag::Adp}, {"during", PosTag::Adp},
        {"under", PosTag::Adp}, {"against", PosTag::Adp}, {"among", PosTag::Adp},
        {"within", PosTag::Adp}, {"without", PosTag::Adp}, {"across", PosTag::Adp},
        {"behind", PosTag::Adp}, {"beyond", PosTag::Adp}, {"near", PosTag::Adp},
        {"upon", PosTag::Adp}, {"toward", PosTag::Adp}, {"towards", PosTag::Adp},
        {"via", PosTag::Adp}, {"per", PosTag::Adp}, {"above", PosTag::Adp},
        {"below", PosTag::Adp}, {"around", PosTag::Adp}, {"off", PosTag::Adp},
        // conjunctions etc.
        {"and", PosTag::Other}, {"or", PosTag::Other}, {"but", PosTag::Other},
        {"nor", PosTag::Other}, {"because", PosTag::Other}, {"although", PosTag::Other},
        {"though", PosTag::Other}, {"while", PosTag::Other}, {"whereas", PosTag::Other},
        {"if", PosTag::Other}, {"when", PosTag::Other}, {"where", PosTag::Other},
        {"whether", PosTag::Other}, {"than", PosTag::Other}, {"then", PosTag::Other},
        {"it", PosTag::Other}, {"we", PosTag::Other}, {"they", PosTag::Other},
        {"he", PosTag::Other}, {"she", PosTag::Other}, {"i", PosTag::Other},
        {"you", PosTag::Other}, {"them", PosTag::Other}, {"who", PosTag::Other},
        {"whom", PosTag::Other}, {"what", PosTag::Other}, {"itself", PosTag::Other},
        {"themselves", PosTag::Other}, {"there", PosTag::Other},
        // auxiliaries and frequent verbs
        {"is", PosTag::Verb}, {"are", PosTag::Verb}, {"was", PosTag::Verb},
        {"were", PosTag::Verb}, {"be", PosTag::Verb}, {"been", PosTag::Verb},
        {"being", PosTag::Verb}, {"am", PosTag::Verb}, {"has", PosTag::Verb},
        {"have", PosTag::Verb}, {"had", PosTag::Verb}, {"having", PosTag::Verb},
        {"do", PosTag::Verb}, {"does", PosTag::Verb}, {"did", PosTag::Verb},
        {"done", PosTag::Verb}, {"can", PosTag::Verb}, {"could", PosTag::Verb},
        {"will", PosTag::Verb}, {"would", PosTag::Verb}, {"shall", PosTag::Verb},
        {"should", PosTag::Verb}, {"may", PosTag::Verb}, {"might", PosTag::Verb},
        {"must", PosTag::Verb}, {"need", PosTag::Verb}, {"used", PosTag::Verb},
        {"using", PosTag::Verb}, {"use", PosTag::Verb}, {"uses", PosTag::Verb},
        {"show", PosTag::Verb}, {"shows", PosTag::Verb}, {"shown", PosTag::Verb},
        {"showed", PosTag::Verb}, {"make", PosTag::Verb}, {"makes", PosTag::Verb},
        {"made", PosTag::Verb}, {"making", PosTag::Verb}, {"given", PosTag::Verb},
        {"gives", PosTag::Verb}, {"give", PosTag::Verb}, {"take", PosTag::Verb},
        {"takes", PosTag::Verb}, {"taken", PosTag::Verb}, {"based", PosTag::Verb},
        {"found", PosTag::Verb}, {"find", PosTag::Verb}, {"finds", PosTag::Verb},
        {"get", PosTag::Verb}, {"gets", PosTag::Verb}, {"become", PosTag::Verb},
        {"becomes", PosTag::Verb}, {"became", PosTag::Verb}, {"present", PosTag::Verb},
        {"presents", PosTag::Verb}, {"presented", PosTag::Verb},
        {"describe", PosTag::Verb}, {"describes", PosTag::Verb},
        {"described", PosTag::Verb}, {"propose", PosTag::Verb},
        {"proposes", PosTag::Verb}, {"proposed", PosTag::Verb},
        {"introduce", PosTag::Verb}, {"introduces", PosTag::Verb},
        {"introduced", PosTag::Verb}, {"apply", PosTag::Verb},
        {"applies", PosTag::Verb}, {"applied", PosTag::Verb},
        {"consider", PosTag::Verb}, {"considers", PosTag::Verb},
        {"considered", PosTag::Verb}, {"obtain", PosTag::Verb},
        {"obtains", PosTag::Verb}, {"obtained", PosTag::Verb},
        {"provide", PosTag::Verb}, {"provides", PosTag::Verb},
        {"provided", PosTag::Verb}, {"demonstrate", PosTag::Verb},
        {"demonstrates", PosTag::Verb}, {"demonstrated", PosTag::Verb},
        {"compare", PosTag::Verb}, {"compares", PosTag::Verb},
        {"compared", PosTag::Verb}, {"improve", PosTag::Verb},
        {"improves", PosTag::Verb}, {"improved", PosTag::Verb},
        {"develop", PosTag::Verb}, {"develops", PosTag::Verb},
        {"developed", PosTag::Verb}, {"perform", PosTag::Verb},
        {"performs", PosTag::Verb}, {"performed", PosTag::Verb},
        {"allow", PosTag::Verb}, {"allows", PosTag::Verb},
        {"allowed", PosTag::Verb}, {"require", PosTag::Verb},
        {"requires", PosTag::Verb}, {"required", PosTag::Verb},
        {"contain", PosTag::Verb}, {"contains", PosTag::Verb},
        {"contained", PosTag::Verb}, {"include", PosTag::Verb},
        {"includes", PosTag::Verb}, {"included", PosTag::Verb},
        {"including", PosTag::Verb}, {"tasked", PosTag::Verb},
        {"employ", PosTag::Verb}, {"employed", PosTag::Verb},
        {"identify", PosTag::Verb}, {"identified", PosTag::Verb},
        {"identifying", PosTag::Verb}, {"derive", PosTag::Verb},
        {"derived", PosTag::Verb}, {"analyze", PosTag::Verb},
        {"analyzed", PosTag::Verb}, {"study", PosTag::Verb},
        {"studied", PosTag::Verb}, {"investigate", PosTag::Verb},
        {"investigated", PosTag::Verb}, {"report", PosTag::Verb},
        {"reported", PosTag::Verb}, {"achieve", PosTag::Verb},
        {"achieved", PosTag::Verb}, {"achieves", PosTag::Verb},
        {"exhibit", PosTag::Verb}, {"exhibits", PosTag::Verb},
        {"said", PosTag::Verb}, {"says", PosTag::Verb}, {"say", PosTag::Verb},
        {"known", PosTag::Verb}, {"know", PosTag::Verb}, {"let", PosTag::Verb},
        {"denote", PosTag::Verb}, {"denotes", PosTag::Verb},
        {"denoted", PosTag::Verb}, {"called", PosTag::Verb},
        {"call", PosTag::Verb}, {"calls", PosTag::Verb},
        {"solve", PosTag::Verb}, {"solved", PosTag::Verb},
        {"solving", PosTag::Verb}, {"extend", PosTag::Verb},
        {"extends", PosTag::Verb},
        // adverbs
        {"not", PosTag::Adv}, {"very", PosTag::Adv}, {"also", PosTag::Adv},
        {"well", PosTag::Adv}, {"here", PosTag::Adv}, {"more", PosTag::Adv},
        {"most", PosTag::Adv}, {"less", PosTag::Adv}, {"least", PosTag::Adv},
        {"only", PosTag::Adv}, {"just", PosTag::Adv}, {"even", PosTag::Adv},
        {"still", PosTag::Adv}, {"further", PosTag::Adv}, {"rather", PosTag::Adv},
        {"quite", PosTag::Adv}, {"almost", PosTag::Adv}, {"often", PosTag::Adv},
        {"always", PosTag::Adv}, {"never", PosTag::Adv}, {"sometimes", PosTag::Adv},
        {"usually", PosTag::Adv}, {"however", PosTag::Adv}, {"thus", PosTag::Adv},
        {"hence", PosTag::Adv}, {"therefore", PosTag::Adv}, {"moreover", PosTag::Adv},
        {"furthermore", PosTag::Adv}, {"again", PosTag::Adv}, {"once", PosTag::Adv},
        {"so", PosTag::Adv}, {"too", PosTag::Adv}, {"yet", PosTag::Adv},
        // adjectives the suffix rules miss
        {"new", PosTag::Adj}, {"novel", PosTag::Adj}, {"many", PosTag::Adj},
        {"few", PosTag::Adj}, {"several", PosTag::Adj}, {"various", PosTag::Adj},
        {"different", PosTag::Adj}, {"same", PosTag::Adj}, {"large", PosTag::Adj},
        {"small", PosTag::Adj}, {"high", PosTag::Adj}, {"low", PosTag::Adj},
        {"good", PosTag::Adj}, {"better", PosTag::Adj}, {"best", PosTag::Adj},
        {"important", PosTag::Adj}, {"main", PosTag::Adj}, {"extended", PosTag::Adj},
        {"first", PosTag::Adj}, {"second", PosTag::Adj}, {"third", PosTag::Adj},
        {"early", PosTag::Adj}, {"late", PosTag::Adj}, {"automatic", PosTag::Adj},
        {"accurate", PosTag::Adj}, {"appropriate", PosTag::Adj},
        {"separate", PosTag::Adj}, {"nonlinear", PosTag::Adj},
        {"linear", PosTag::Adj}, {"short", PosTag::Adj}, {"long", PosTag::Adj},
        {"real", PosTag::Adj}, {"possible", PosTag::Adj}, {"common", PosTag::Adj},
        // nouns the suffix rules miss
        {"state", PosTag::Noun}, {"rate", PosTag::Noun}, {"gate", PosTag::Noun},
        {"date", PosTag::Noun}, {"template", PosTag::Noun}, {"climate", PosTag::Noun},
        {"candidate", PosTag::Noun}, {"estimate", PosTag::Noun},
        {"signal", PosTag::Noun}, {"interval", PosTag::Noun},
        {"family", PosTag::Noun}, {"supply", PosTag::Noun},
        {"assembly", PosTag::Noun}, {"size", PosTag::Noun},
        // numbers written out
        {"zero", PosTag::Num}, {"one", PosTag::Num}, {"two", PosTag::Num},
        {"three", PosTag::Num}, {"four", PosTag::Num}, {"five", PosTag::Num},
        {"six", PosTag::Num}, {"seven", PosTag::Num}, {"eight", PosTag::Num},
        {"nine", PosTag::Num}, {"ten", PosTag::Num},
    };
    return lex;
}

std::string lower_ascii(const std::string& s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) || c == '-' || c == '\'';
    });
}

} // namespace

std::vector<PosTag> LexiconTagger::tag_sentence(const std::vector<std::string>& surfaces,
                                                int /*sentence_index*/) const {
    std::vector<PosTag> tags;
    tags.reserve(surfaces.size());
    const auto& lex = lexicon();
    for (size_t i = 0; i < surfaces.size(); i++) {
        const std::string& w = surfaces[i];
        std::string low = lower_ascii(w);
        if (auto it = lex.find(low); it != lex.end()) {
            tags.push_back(it->second);
            continue;
        }
        if (all_digits(w)) {
            tags.push_back(PosTag::Num);
            continue;
        }
        if (ends_with(low, "tion") || ends_with(low, "ment") ||
            ends_with(low, "ness") || ends_with(low, "ity")) {
            tags.push_back(PosTag::Noun);
            continue;
        }
        if (ends_with(low, "ous") || ends_with(low, "ful") ||
            ends_with(low, "ive") || ends_with(low, "al")) {
            tags.push_back(PosTag::Adj);
            continue;
        }
        if (ends_with(low, "ly")) {
            tags.push_back(PosTag::Adv);
            continue;
        }
        if (ends_with(low, "ize") || ends_with(low, "ate")) {
            tags.push_back(PosTag::Verb);
            continue;
        }
        if (i > 0 && std::isupper(static_cast<unsigned char>(w[0]))) {
            tags.push_back(PosTag::Propn);
            continue;
        }
        tags.push_back(PosTag::Noun);
    }
    return tags;
}

ConllTagger::ConllTagger(const std::string& path) : path_(path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open conll file: " + path);
    std::vector<PosTag> current;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (!current.empty()) sentences_.push_back(std::move(current));
            current.clear();
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'surface<TAB>TAG'");
        current.push_back(parse_pos_tag(line.substr(tab + 1)));
    }
    if (!current.empty()) sentences_.push_back(std::move(current));
}

std::vector<PosTag> ConllTagger::tag_sentence(const std::vector<std::string>& surfaces,
                                              int sentence_index) const {
    if (sentence_index < 0 || static_cast<size_t>(sentence_index) >= sentences_.size())
        throw std::runtime_error("conll tagger: no tags for sentence " +
                                 std::to_string(sentence_index) + " in " + path_);
    const auto& tags = sentences_[static_cast<size_t>(sentence_index)];
    if (tags.size() != surfaces.size())
        throw std::runtime_error("conll tagger: token count mismatch at sentence " +
                                 std::to_string(sentence_index) + " (" +
                                 std::to_string(surfaces.size()) + " tokens, " +
                                 std::to_string(tags.size()) + " tags)");
    return tags;
}

TaggedDocument tag(const TaggedDocument& doc, const Tagger& tagger) {
    TaggedDocument out = doc;
    size_t i = 0;
    while (i < out.tokens.size()) {
        int sent = out.tokens[i].sent_index;
        size_t begin = i;
        std::vector<std::string> surfaces;
        while (i < out.tokens.size() && out.tokens[i].sent_index == sent) {
            surfaces.push_back(out.tokens[i].surface);
            i++;
        }
        std::vector<PosTag> tags = tagger.tag_sentence(surfaces, sent);
        for (size_t k = 0; k < tags.size(); k++)
            out.tokens[begin + k].pos = tags[k];
    }
    return out;
}

} // namespace kexkit

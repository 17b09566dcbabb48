#include "kexkit/stopwords.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace kexkit {

const StopwordSet& default_stopwords() {
    static const StopwordSet words = {
        "a", "about", "above", "after", "again", "against", "all", "also",
        "although", "am", "among", "an", "and", "any", "are", "as", "at",
        "be", "because", "been", "before", "being", "below", "between",
        "both", "but", "by", "can", "cannot", "could", "did", "do", "does",
        "doing", "down", "during", "each", "either", "else", "etc", "few",
        "for", "from", "further", "had", "has", "have", "having", "he",
        "her", "here", "hers", "herself", "him", "himself", "his", "how",
        "however", "i", "if", "in", "into", "is", "it", "its", "itself",
        "just", "may", "me", "might", "more", "moreover", "most", "must",
        "my", "myself", "neither", "no", "nor", "not", "of", "off", "on",
        "once", "only", "onto", "or", "other", "our", "ours", "ourselves",
        "out", "over", "own", "per", "shall", "she", "should", "since",
        "so", "some", "such", "than", "that", "the", "their", "theirs",
        "them", "themselves", "then", "there", "therefore", "these",
        "they", "this", "those", "through", "thus", "to", "too", "under",
        "until", "up", "upon", "us", "very", "via", "was", "we", "were",
        "what", "when", "where", "whether", "which", "while", "who",
        "whom", "whose", "why", "will", "with", "within", "without",
        "would", "you", "your", "yours", "yourself", "yourselves",
    };
    return words;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword list: " + path);
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t");
        std::string w = line.substr(first, last - first + 1);
        std::transform(w.begin(), w.end(), w.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.insert(std::move(w));
    }
    return words;
}

} // namespace kexkit

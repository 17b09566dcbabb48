#include "kexkit/record.hpp"

#include <cctype>
#include <unordered_set>

namespace kexkit {
namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string clean_tex_value(std::string_view value) {
    std::string out;
    out.reserve(value.size());
    bool in_space = false;
    for (char c : value) {
        if (c == '{' || c == '}') continue;
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_authors(std::string_view field) {
    std::vector<std::string> words;
    size_t i = 0;
    while (i < field.size()) {
        while (i < field.size() && std::isspace(static_cast<unsigned char>(field[i]))) i++;
        size_t start = i;
        while (i < field.size() && !std::isspace(static_cast<unsigned char>(field[i]))) i++;
        if (i > start) words.emplace_back(field.substr(start, i - start));
    }
    std::vector<std::string> authors;
    std::string current;
    auto flush = [&]() {
        if (!current.empty()) authors.push_back(current);
        current.clear();
    };
    for (const std::string& w : words) {
        if (lower_ascii(w) == "and") {
            flush();
            continue;
        }
        if (!current.empty()) current.push_back(' ');
        current += w;
    }
    flush();
    return authors;
}

std::optional<int> parse_year(std::string_view field) {
    int run = 0;
    for (size_t i = 0; i <= field.size(); i++) {
        bool digit = i < field.size() && std::isdigit(static_cast<unsigned char>(field[i]));
        if (digit) {
            run++;
            continue;
        }
        if (run == 4) {
            int year = 0;
            for (size_t k = i - 4; k < i; k++) year = year * 10 + (field[k] - '0');
            return year;
        }
        run = 0;
    }
    return std::nullopt;
}

NormalizeResult normalize_record(const RawEntry& entry, const std::string& source_file,
                                 const std::optional<std::string>& topic) {
    NormalizeResult result;

    const std::string* abstract_field = entry.find_field("abstract");
    std::string abstract = abstract_field ? clean_tex_value(*abstract_field) : "";
    if (abstract.empty()) {
        result.rejection = "no_abstract";
        return result;
    }

    const std::string* keywords_field = entry.find_field("keywords");
    std::vector<std::string> keyphrases;
    if (keywords_field) {
        std::unordered_set<std::string> seen;
        for (std::string& kw : split_keywords(clean_tex_value(*keywords_field)))
            if (seen.insert(kw).second) keyphrases.push_back(std::move(kw));
    }
    if (keyphrases.empty()) {
        result.rejection = "no_keywords";
        return result;
    }

    BibRecord rec;
    rec.id = entry.citation_key;
    rec.abstract = std::move(abstract);
    rec.keyphrases = std::move(keyphrases);
    rec.source_file = source_file;
    rec.topic = topic;
    if (const std::string* f = entry.find_field("title")) rec.title = clean_tex_value(*f);
    if (const std::string* f = entry.find_field("author"))
        rec.authors = split_authors(clean_tex_value(*f));
    if (const std::string* f = entry.find_field("year")) rec.year = parse_year(*f);
    if (const std::string* f = entry.find_field("journal")) {
        std::string journal = clean_tex_value(*f);
        if (!journal.empty()) rec.journal = std::move(journal);
    }
    for (const auto& [name, value] : entry.fields) {
        if (name == "title" || name == "abstract" || name == "author" ||
            name == "year" || name == "journal" || name == "keywords")
            continue;
        rec.extra.emplace(name, value);
    }
    result.record = std::move(rec);
    return result;
}

} // namespace kexkit

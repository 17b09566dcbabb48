#include "kexkit/dataset.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kexkit/textproc.hpp"

namespace kexkit {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string fnv1a_hex(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(8, '0');
    for (int i = 7; i >= 0; i--) {
        out[static_cast<size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string dedup_key(const BibRecord& rec) {
    std::string key = lower_ascii(rec.title);
    key.push_back('\x1f');
    if (rec.year) key += std::to_string(*rec.year);
    return key;
}

ordered_json record_to_json(const BibRecord& rec) {
    ordered_json j;
    j["id"] = rec.id;
    j["title"] = rec.title;
    j["abstract"] = rec.abstract;
    j["authors"] = rec.authors;
    if (rec.year) j["year"] = *rec.year;
    if (rec.journal) j["journal"] = *rec.journal;
    j["keyphrases"] = rec.keyphrases;
    if (rec.topic) j["topic"] = *rec.topic;
    j["source_file"] = rec.source_file;
    ordered_json extra = ordered_json::object();
    for (const auto& [k, v] : rec.extra) extra[k] = v; // std::map is sorted
    j["extra"] = std::move(extra);
    return j;
}

BibRecord record_from_json(const ordered_json& j, const std::string& where) {
    auto need = [&](const char* field) -> const ordered_json& {
        auto it = j.find(field);
        if (it == j.end())
            throw std::runtime_error(where + ": missing field '" + field + "'");
        return *it;
    };
    BibRecord rec;
    try {
        rec.id = need("id").get<std::string>();
        rec.title = need("title").get<std::string>();
        rec.abstract = need("abstract").get<std::string>();
        rec.authors = need("authors").get<std::vector<std::string>>();
        if (auto it = j.find("year"); it != j.end() && !it->is_null())
            rec.year = it->get<int>();
        if (auto it = j.find("journal"); it != j.end() && !it->is_null())
            rec.journal = it->get<std::string>();
        rec.keyphrases = need("keyphrases").get<std::vector<std::string>>();
        if (auto it = j.find("topic"); it != j.end() && !it->is_null())
            rec.topic = it->get<std::string>();
        rec.source_file = need("source_file").get<std::string>();
        if (auto it = j.find("extra"); it != j.end())
            rec.extra = it->get<std::map<std::string, std::string>>();
    } catch (const ordered_json::exception& err) {
        throw std::runtime_error(where + ": " + err.what());
    }
    return rec;
}

} // namespace

Dataset::Dataset(std::vector<BibRecord> records) : records_(std::move(records)) {
    for (size_t i = 0; i < records_.size(); i++) {
        const BibRecord& rec = records_[i];
        by_id_.emplace(rec.id, i);
        indexes_["source_file"][rec.source_file].insert(rec.id);
        if (rec.year) indexes_["year"][std::to_string(*rec.year)].insert(rec.id);
        if (rec.topic) indexes_["topic"][*rec.topic].insert(rec.id);
        if (rec.journal) indexes_["journal"][*rec.journal].insert(rec.id);
    }
}

const BibRecord* Dataset::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &records_[it->second];
}

const std::set<std::string>* Dataset::index_ids(const std::string& attribute,
                                                const std::string& value) const {
    auto attr = indexes_.find(attribute);
    if (attr == indexes_.end()) return nullptr;
    auto val = attr->second.find(value);
    return val == attr->second.end() ? nullptr : &val->second;
}

Dataset build_dataset(const std::vector<BibFileInput>& bib_files,
                      const Dataset& existing, BuildReport& report) {
    std::vector<BibRecord> records = existing.records();
    std::set<std::string> keys;
    std::set<std::string> ids;
    for (const BibRecord& rec : records) {
        keys.insert(dedup_key(rec));
        ids.insert(rec.id);
    }

    for (const BibFileInput& input : bib_files) {
        FileReport fr;
        fr.file = input.path;
        fr.topic = input.topic.value_or("");

        std::ifstream in(input.path, std::ios::binary);
        if (!in) {
            fr.error = "cannot open file";
            report.files.push_back(std::move(fr));
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();

        MacroEnv env;
        BibParseResult parsed = parse_bibtex(text, env);
        fr.entries = static_cast<int>(parsed.entries.size());
        for (const ParseWarning& w : parsed.warnings)
            fr.warnings.push_back("line " + std::to_string(w.line) + ": " + w.message);

        for (const RawEntry& entry : parsed.entries) {
            NormalizeResult nr = normalize_record(entry, input.path, input.topic);
            if (!nr.record) {
                if (nr.rejection == "no_abstract") fr.rejected_no_abstract++;
                else fr.rejected_no_keywords++;
                continue;
            }
            BibRecord rec = std::move(*nr.record);
            if (!keys.insert(dedup_key(rec)).second) {
                fr.deduplicated++;
                continue;
            }
            if (!ids.insert(rec.id).second) {
                rec.id += "-" + fnv1a_hex(rec.source_file);
                int salt = 2;
                std::string base = rec.id;
                while (!ids.insert(rec.id).second)
                    rec.id = base + "-" + std::to_string(salt++);
            }
            records.push_back(std::move(rec));
            fr.accepted++;
        }
        report.files.push_back(std::move(fr));
    }

    for (const FileReport& fr : report.files) {
        report.accepted += fr.accepted;
        report.rejected += fr.rejected_no_abstract + fr.rejected_no_keywords;
        report.deduplicated += fr.deduplicated;
    }
    return Dataset(std::move(records));
}

std::string BuildReport::to_json() const {
    nlohmann::json j;
    j["accepted"] = accepted;
    j["rejected"] = rejected;
    j["deduplicated"] = deduplicated;
    j["files"] = nlohmann::json::array();
    for (const FileReport& fr : files) {
        nlohmann::json f;
        f["file"] = fr.file;
        f["topic"] = fr.topic;
        if (!fr.error.empty()) f["error"] = fr.error;
        f["entries"] = fr.entries;
        f["accepted"] = fr.accepted;
        f["rejected_no_abstract"] = fr.rejected_no_abstract;
        f["rejected_no_keywords"] = fr.rejected_no_keywords;
        f["deduplicated"] = fr.deduplicated;
        f["warnings"] = fr.warnings;
        j["files"].push_back(std::move(f));
    }
    return j.dump(2) + "\n";
}

DatasetStats dataset_stats(const Dataset& ds) {
    DatasetStats stats;
    stats.record_count = ds.size();
    if (ds.empty()) return stats;

    std::set<std::string> authors, journals, files, topics;
    double words = 0.0, phrases = 0.0;
    for (const BibRecord& rec : ds.records()) {
        for (const std::string& a : rec.authors) authors.insert(a);
        if (rec.journal) journals.insert(*rec.journal);
        if (rec.topic) topics.insert(*rec.topic);
        files.insert(rec.source_file);
        int count = 0;
        bool in_word = false;
        for (char c : rec.abstract) {
            bool space = std::isspace(static_cast<unsigned char>(c));
            if (!space && !in_word) count++;
            in_word = !space;
        }
        words += count;
        phrases += static_cast<double>(rec.keyphrases.size());
    }
    stats.author_count = authors.size();
    stats.journal_count = journals.size();
    stats.source_file_count = files.size();
    stats.topic_count = topics.size();
    stats.avg_abstract_words = words / static_cast<double>(ds.size());
    stats.avg_keyphrases = phrases / static_cast<double>(ds.size());
    return stats;
}

std::string dataset_to_jsonl(const Dataset& ds) {
    std::string out;
    for (const BibRecord& rec : ds.records()) {
        out += record_to_json(rec).dump();
        out.push_back('\n');
    }
    return out;
}

void save_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    out << dataset_to_jsonl(ds);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Dataset dataset_from_jsonl(std::string_view text, const std::string& origin) {
    std::vector<BibRecord> records;
    size_t start = 0;
    int line_no = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        line_no++;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (line.empty() ||
            line.find_first_not_of(" \t\r") == std::string_view::npos)
            continue;
        std::string where = origin + ":" + std::to_string(line_no);
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw std::runtime_error(where + ": malformed JSON");
        if (!j.is_object())
            throw std::runtime_error(where + ": expected a JSON object");
        records.push_back(record_from_json(j, where));
    }
    return Dataset(std::move(records));
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return dataset_from_jsonl(buf.str(), path);
}

} // namespace kexkit

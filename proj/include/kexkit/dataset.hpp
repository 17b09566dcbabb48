#ifndef KEXKIT_DATASET_HPP_
#define KEXKIT_DATASET_HPP_

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kexkit/record.hpp"

namespace kexkit {

/// Immutable after build; safe for concurrent reads. Indexes cover year,
/// topic, journal and source_file (values as strings, years in decimal).
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<BibRecord> records);

    const std::vector<BibRecord>& records() const { return records_; }
    size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    const BibRecord* find(const std::string& id) const;
    bool has_id(const std::string& id) const { return by_id_.count(id) > 0; }

    /// attribute -> value -> record ids
    const std::map<std::string, std::map<std::string, std::set<std::string>>>&
    indexes() const {
        return indexes_;
    }
    const std::set<std::string>* index_ids(const std::string& attribute,
                                           const std::string& value) const;

    bool operator==(const Dataset& other) const { return records_ == other.records_; }

private:
    std::vector<BibRecord> records_;
    std::unordered_map<std::string, size_t> by_id_;
    std::map<std::string, std::map<std::string, std::set<std::string>>> indexes_;
};

struct FileReport {
    std::string file;
    std::string topic;
    std::string error; // unreadable file etc.; empty when the file parsed
    int entries = 0;
    int accepted = 0;
    int rejected_no_abstract = 0;
    int rejected_no_keywords = 0;
    int deduplicated = 0;
    std::vector<std::string> warnings;
};

struct BuildReport {
    std::vector<FileReport> files;
    int accepted = 0;
    int rejected = 0;
    int deduplicated = 0;

    std::string to_json() const; // pretty, sorted keys
};

struct BibFileInput {
    std::string path;
    std::optional<std::string> topic;
};

struct DatasetStats {
    size_t record_count = 0;
    size_t author_count = 0;
    size_t journal_count = 0;
    size_t source_file_count = 0;
    size_t topic_count = 0;
    double avg_abstract_words = 0.0;
    double avg_keyphrases = 0.0;
};

/// Parses every file (fresh macro environment each), normalizes entries and
/// deduplicates by (lowercased title, year). Records already present in
/// `existing` are kept and count toward deduplication. Unreadable files are
/// recorded in the report and the build continues. Citation-key collisions
/// between distinct records get a source-file hash suffix on the id.
Dataset build_dataset(const std::vector<BibFileInput>& bib_files,
                      const Dataset& existing, BuildReport& report);

DatasetStats dataset_stats(const Dataset& ds);

/// JSONL, one record per line, fixed field order; lossless round-trip.
void save_dataset(const Dataset& ds, const std::string& path);
std::string dataset_to_jsonl(const Dataset& ds);

/// Throws std::runtime_error naming the offending line on malformed input.
Dataset load_dataset(const std::string& path);
Dataset dataset_from_jsonl(std::string_view text, const std::string& origin);

} // namespace kexkit

#endif // KEXKIT_DATASET_HPP_

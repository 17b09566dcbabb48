#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "kexkit/dataset.hpp"

using namespace kexkit;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string entry(const std::string& key, const std::string& title,
                  const std::string& year, const std::string& abstract,
                  const std::string& keywords) {
    return "@article{" + key + ",\n  title = {" + title + "},\n  year = \"" +
           year + "\",\n  abstract = {" + abstract + "},\n  keywords = {" +
           keywords + "},\n  author = {A. Author and B. Writer},\n}\n";
}

BibRecord make_record(const std::string& id, const std::string& title, int year,
                      const std::string& topic) {
    BibRecord rec;
    rec.id = id;
    rec.title = title;
    rec.abstract = "Some abstract words for " + id + ".";
    rec.authors = {"A. Author"};
    rec.year = year;
    rec.journal = "J. Tests";
    rec.keyphrases = {"alpha beta", "gamma"};
    rec.topic = topic;
    rec.source_file = "mem.bib";
    rec.extra = {{"volume", "1"}};
    return rec;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::current_path() / "dataset_test_tmp";
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("build_dataset dedupes identical records across files") {
    TempDir dir;
    std::string body = entry("k1", "A Shared Title", "2001", "Plenty of words.", "a; b");
    write_file(dir.file("one.bib"), body);
    write_file(dir.file("two.bib"), body);
    BuildReport report;
    Dataset ds = build_dataset({{dir.file("one.bib"), "t"}, {dir.file("two.bib"), "t"}},
                               Dataset{}, report);
    CHECK(ds.size() == 1);
    CHECK(report.accepted == 1);
    CHECK(report.deduplicated == 1);
}

TEST_CASE("build_dataset with zero files yields an empty dataset") {
    BuildReport report;
    Dataset ds = build_dataset({}, Dataset{}, report);
    CHECK(ds.empty());
    CHECK(report.accepted == 0);
}

TEST_CASE("build_dataset accepts one valid record with no rejections") {
    TempDir dir;
    write_file(dir.file("one.bib"),
               entry("k1", "Unique Title", "1999", "Words here.", "x; y"));
    BuildReport report;
    Dataset ds = build_dataset({{dir.file("one.bib"), std::nullopt}}, Dataset{}, report);
    CHECK(ds.size() == 1);
    CHECK(report.rejected == 0);
    CHECK(ds.records()[0].topic == std::nullopt);
}

TEST_CASE("build_dataset counts rejections per reason") {
    TempDir dir;
    write_file(dir.file("mixed.bib"),
               entry("ok", "Good One", "2000", "Has all parts.", "kw") +
                   "@misc{noabs, title={T}, keywords={k}}\n" +
                   "@misc{nokw, title={T2}, abstract={words}}\n");
    BuildReport report;
    Dataset ds = build_dataset({{dir.file("mixed.bib"), "t"}}, Dataset{}, report);
    CHECK(ds.size() == 1);
    REQUIRE(report.files.size() == 1);
    CHECK(report.files[0].rejected_no_abstract == 1);
    CHECK(report.files[0].rejected_no_keywords == 1);
}

TEST_CASE("unreadable file is reported and the build continues") {
    TempDir dir;
    write_file(dir.file("good.bib"), entry("k", "Fine Title", "2002", "Words.", "a"));
    BuildReport report;
    Dataset ds = build_dataset(
        {{dir.file("missing.bib"), "t"}, {dir.file("good.bib"), "t"}}, Dataset{},
        report);
    CHECK(ds.size() == 1);
    REQUIRE(report.files.size() == 2);
    CHECK(!report.files[0].error.empty());
    CHECK(report.files[1].accepted == 1);
}

TEST_CASE("citation key collisions get a source-file hash suffix") {
    TempDir dir;
    write_file(dir.file("a.bib"), entry("same", "First Title", "2001", "Words.", "x"));
    write_file(dir.file("b.bib"), entry("same", "Second Title", "2001", "Words.", "x"));
    BuildReport report;
    Dataset ds = build_dataset({{dir.file("a.bib"), "t"}, {dir.file("b.bib"), "t"}},
                               Dataset{}, report);
    REQUIRE(ds.size() == 2);
    CHECK(ds.records()[0].id == "same");
    CHECK(ds.records()[1].id.rfind("same-", 0) == 0);
    CHECK(ds.records()[1].id.size() > 5);
}

TEST_CASE("build_dataset is idempotent") {
    TempDir dir;
    write_file(dir.file("a.bib"),
               entry("k1", "Title One", "2001", "Words.", "x; y") +
                   entry("k2", "Title Two", "2002", "More words.", "z"));
    std::vector<BibFileInput> inputs = {{dir.file("a.bib"), "t"}};
    BuildReport r1, r2;
    Dataset d1 = build_dataset(inputs, Dataset{}, r1);
    Dataset d2 = build_dataset(inputs, Dataset{}, r2);
    CHECK(d1 == d2);
    // extending an existing dataset with the same file only dedupes
    BuildReport r3;
    Dataset d3 = build_dataset(inputs, d1, r3);
    CHECK(d3 == d1);
    CHECK(r3.deduplicated == 2);
}

TEST_CASE("indexes are consistent with records") {
    std::vector<BibRecord> records = {make_record("a", "T1", 2001, "x"),
                                      make_record("b", "T2", 2001, "y"),
                                      make_record("c", "T3", 2002, "x")};
    Dataset ds(records);
    const auto* ids_2001 = ds.index_ids("year", "2001");
    REQUIRE(ids_2001 != nullptr);
    CHECK(*ids_2001 == std::set<std::string>{"a", "b"});
    const auto* ids_x = ds.index_ids("topic", "x");
    REQUIRE(ids_x != nullptr);
    CHECK(*ids_x == std::set<std::string>{"a", "c"});
    for (const auto& [attr, values] : ds.indexes())
        for (const auto& [value, ids] : values)
            for (const std::string& id : ids) CHECK(ds.find(id) != nullptr);
}

TEST_CASE("dataset_stats on the empty dataset is all zeros") {
    DatasetStats stats = dataset_stats(Dataset{});
    CHECK(stats.record_count == 0);
    CHECK(stats.author_count == 0);
    CHECK(stats.avg_abstract_words == 0.0);
    CHECK(stats.avg_keyphrases == 0.0);
}

TEST_CASE("dataset_stats averages and distinct counts") {
    BibRecord a = make_record("a", "T1", 2001, "x");
    a.abstract = "one two three four";             // 4 words
    a.keyphrases = {"k1", "k2", "k3", "k4", "k5", "k6", "k7", "k8"};
    a.authors = {"Same Author", "Other Author"};
    BibRecord b = make_record("b", "T2", 2002, "y");
    b.abstract = "five six";                       // 2 words
    b.keyphrases.assign(10, "");
    for (int i = 0; i < 10; i++) b.keyphrases[static_cast<size_t>(i)] =
        "kw" + std::to_string(i);
    b.authors = {"Same Author"};
    Dataset ds({a, b});
    DatasetStats stats = dataset_stats(ds);
    CHECK(stats.record_count == 2);
    CHECK(stats.author_count == 2);
    CHECK(stats.journal_count == 1);
    CHECK(stats.source_file_count == 1);
    CHECK(stats.topic_count == 2);
    CHECK(stats.avg_abstract_words == doctest::Approx(3.0));
    CHECK(stats.avg_keyphrases == doctest::Approx(9.0));
}

TEST_CASE("save/load round-trips any dataset") {
    TempDir dir;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> year(1974, 2019);
    std::uniform_int_distribution<int> kwcount(1, 5);
    std::vector<BibRecord> records;
    for (int i = 0; i < 25; i++) {
        BibRecord rec = make_record("id" + std::to_string(i),
                                    "Title " + std::to_string(i), year(rng),
                                    i % 2 ? "even" : "odd");
        rec.keyphrases.clear();
        for (int k = 0, n = kwcount(rng); k < n; k++)
            rec.keyphrases.push_back("phrase " + std::to_string(k * 7 + i));
        if (i % 5 == 0) rec.year.reset();
        if (i % 7 == 0) rec.journal.reset();
        if (i % 3 == 0) rec.topic.reset();
        rec.extra["note"] = "unicode caf\xC3\xA9 and \"quotes\"";
        records.push_back(std::move(rec));
    }
    Dataset ds(records);
    std::string path = dir.file("round.jsonl");
    save_dataset(ds, path);
    Dataset loaded = load_dataset(path);
    CHECK(loaded == ds);
    // saving again is byte-identical
    std::string again = dataset_to_jsonl(loaded);
    CHECK(again == dataset_to_jsonl(ds));
}

TEST_CASE("load of an empty file yields the empty dataset") {
    TempDir dir;
    write_file(dir.file("empty.jsonl"), "");
    CHECK(load_dataset(dir.file("empty.jsonl")).empty());
}

TEST_CASE("load errors name the offending line") {
    TempDir dir;
    Dataset one({make_record("a", "T", 2000, "x")});
    std::string good_line = dataset_to_jsonl(one);

    write_file(dir.file("bad.jsonl"), good_line + "{not json\n");
    try {
        load_dataset(dir.file("bad.jsonl"));
        FAIL("expected malformed-line error");
    } catch (const std::runtime_error& err) {
        CHECK(std::string(err.what()).find(":2") != std::string::npos);
    }

    write_file(dir.file("noabs.jsonl"),
               "{\"id\":\"x\",\"title\":\"t\",\"authors\":[],"
               "\"keyphrases\":[\"k\"],\"source_file\":\"f\"}\n");
    try {
        load_dataset(dir.file("noabs.jsonl"));
        FAIL("expected missing-abstract error");
    } catch (const std::runtime_error& err) {
        std::string what = err.what();
        CHECK(what.find(":1") != std::string::npos);
        CHECK(what.find("abstract") != std::string::npos);
    }
}

TEST_CASE("build report renders as JSON") {
    BuildReport report;
    FileReport fr;
    fr.file = "a.bib";
    fr.accepted = 3;
    report.files.push_back(fr);
    report.accepted = 3;
    std::string json = report.to_json();
    CHECK(json.find("\"accepted\": 3") != std::string::npos);
    CHECK(json.find("a.bib") != std::string::npos);
}

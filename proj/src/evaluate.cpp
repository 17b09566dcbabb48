#include "kexkit/evaluate.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "kexkit/registry.hpp"

namespace kexkit {
namespace {

std::set<std::string> normalized_set(const std::vector<std::string>& phrases) {
    std::set<std::string> out;
    for (const std::string& p : phrases) {
        std::string key = normalize_phrase_key(p);
        if (!key.empty()) out.insert(std::move(key));
    }
    return out;
}

std::string format_metric(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

int match_hits(const std::vector<std::string>& predicted,
               const std::vector<std::string>& gold) {
    return score_pair(predicted, gold).hits;
}

PairScore score_pair(const std::vector<std::string>& predicted,
                     const std::vector<std::string>& gold) {
    PairScore s;
    std::set<std::string> pred = normalized_set(predicted);
    std::set<std::string> gset = normalized_set(gold);
    s.predicted = static_cast<int>(pred.size());
    s.gold = static_cast<int>(gset.size());
    for (const std::string& key : pred)
        if (gset.count(key)) s.hits++;
    if (s.predicted > 0) s.p = static_cast<double>(s.hits) / s.predicted;
    if (s.gold > 0) s.r = static_cast<double>(s.hits) / s.gold;
    if (s.p + s.r > 0.0) s.f1 = 2.0 * s.p * s.r / (s.p + s.r);
    return s;
}

EvalReport evaluate_with(const Dataset& ds, const ContextSpec& test_filter,
                         const DocExtractor& extractor, const EvalOptions& options) {
    std::vector<const BibRecord*> test = select_context(ds, test_filter);
    if (test.empty()) throw std::runtime_error("empty_test_set");

    const Tagger* tagger = options.tagger;
    LexiconTagger fallback;
    if (!tagger) tagger = &fallback;

    EvalReport report;
    report.params = options.extract.rank;
    report.k = options.extract.rank.top_n;
    report.per_doc.resize(test.size());

    std::atomic<size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= test.size() || failed.load()) break;
            try {
                const BibRecord& rec = *test[i];
                TaggedDocument doc = tag(tokenize(rec.abstract, rec.id), *tagger);
                ExtractResult extracted = extractor(rec, doc);
                std::vector<std::string> predicted;
                predicted.reserve(extracted.phrases.size());
                for (const ScoredPhrase& sp : extracted.phrases)
                    predicted.push_back(sp.text);
                report.per_doc[i].id = rec.id;
                report.per_doc[i].score = score_pair(predicted, rec.keyphrases);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        }
    };

    int jobs = options.jobs;
    if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; t++) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);

    double p = 0.0, r = 0.0, f1 = 0.0;
    for (const DocScore& doc : report.per_doc) {
        p += doc.score.p;
        r += doc.score.r;
        f1 += doc.score.f1;
    }
    const double n = static_cast<double>(report.per_doc.size());
    report.p = p / n;
    report.r = r / n;
    report.f1 = f1 / n;
    return report;
}

EvalReport evaluate_run(const Dataset& ds, const std::string& test_filter_spec,
                        const std::string& context_spec, const std::string& algo,
                        const EvalOptions& options) {
    ContextSpec filter = parse_context_spec(test_filter_spec);
    ContextSpec context = parse_context_spec(context_spec);
    DocExtractor extractor = find_extractor(algo)(ds, context, options.extract);
    EvalReport report = evaluate_with(ds, filter, extractor, options);
    report.algo = algo;
    report.filter = test_filter_spec;
    report.context = context_spec;
    return report;
}

std::string render_report(const EvalReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::json j;
        j["algo"] = report.algo;
        j["params"] = {{"damping", report.params.damping},
                       {"window", report.params.window},
                       {"tol", report.params.tol},
                       {"max_iter", report.params.max_iter},
                       {"top", report.params.top_n}};
        j["filter"] = report.filter;
        j["context"] = report.context;
        j["k"] = report.k;
        j["per_doc"] = nlohmann::json::array();
        for (const DocScore& doc : report.per_doc) {
            j["per_doc"].push_back({{"id", doc.id},
                                    {"predicted", doc.score.predicted},
                                    {"gold", doc.score.gold},
                                    {"hits", doc.score.hits},
                                    {"p", doc.score.p},
                                    {"r", doc.score.r},
                                    {"f1", doc.score.f1}});
        }
        j["aggregate"] = {{"p", report.p}, {"r", report.r}, {"f1", report.f1}};
        return j.dump(2) + "\n";
    }

    std::string out;
    out += "algo: " + report.algo + "  filter: " + report.filter +
           "  context: " + report.context + "  k: " + std::to_string(report.k) + "\n";
    size_t id_width = 2;
    for (const DocScore& doc : report.per_doc)
        id_width = std::max(id_width, doc.id.size());
    char line[256];
    std::snprintf(line, sizeof(line), "%-*s %5s %5s %5s %7s %7s %7s\n",
                  static_cast<int>(id_width), "id", "pred", "gold", "hits", "P", "R",
                  "F1");
    out += line;
    for (const DocScore& doc : report.per_doc) {
        std::snprintf(line, sizeof(line), "%-*s %5d %5d %5d %7.4f %7.4f %7.4f\n",
                      static_cast<int>(id_width), doc.id.c_str(), doc.score.predicted,
                      doc.score.gold, doc.score.hits, doc.score.p, doc.score.r,
                      doc.score.f1);
        out += line;
    }
    out += "macro: P=" + format_metric(report.p) + " R=" + format_metric(report.r) +
           " F1=" + format_metric(report.f1) + " over " +
           std::to_string(report.per_doc.size()) + " documents\n";
    return out;
}

} // namespace kexkit

// kexkit - keyphrase extraction toolkit CLI: dataset construction from
// BibTeX archives, extraction (bibrank/positionrank/textrank/tfidf) and
// P/R/F1 evaluation against gold keyphrases.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kexkit/dataset.hpp"
#include "kexkit/evaluate.hpp"
#include "kexkit/registry.hpp"
#include "kexkit/stopwords.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << bytes;
}

kexkit::StopwordSet resolve_stopwords() {
    if (const char* env = std::getenv("KEXKIT_STOPWORDS"); env && *env)
        return kexkit::load_stopwords(env);
    return kexkit::default_stopwords();
}

// "lexicon" or "conll:<path>"; for evaluate the conll path may be a
// directory holding one <record-id>.conll file per document.
struct TaggerChoice {
    std::string spec = "lexicon";

    bool is_conll() const { return spec.rfind("conll:", 0) == 0; }
    std::string conll_path() const { return spec.substr(6); }

    void validate() const {
        if (spec == "lexicon") return;
        if (is_conll() && !conll_path().empty()) return;
        throw UsageError("--tagger must be 'lexicon' or 'conll:<path>'");
    }
};

// Per-document tagger resolution for corpus runs.
class DispatchingTagger final : public kexkit::Tagger {
public:
    explicit DispatchingTagger(std::string dir) : dir_(std::move(dir)) {}

    std::vector<kexkit::PosTag>
    tag_sentence(const std::vector<std::string>&, int) const override {
        throw std::runtime_error("DispatchingTagger must be used per document");
    }

    std::string side_file(const std::string& doc_id) const {
        return (std::filesystem::path(dir_) / (doc_id + ".conll")).string();
    }

private:
    std::string dir_;
};

struct CommonParams {
    kexkit::RankParams rank;
    int max_phrase_len = 3;
    int jobs = 0; // 0 -> hardware concurrency
    TaggerChoice tagger;
    std::string format = "json";
};

void add_rank_flags(CLI::App* cmd, CommonParams& params) {
    cmd->add_option("--damping", params.rank.damping,
                    "PageRank damping factor d in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9))
        ->capture_default_str();
    cmd->add_option("--window", params.rank.window, "co-occurrence window size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol", params.rank.tol, "L1 convergence tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iter", params.rank.max_iter, "iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--top", params.rank.top_n, "number of keyphrases to keep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-phrase-len", params.max_phrase_len,
                    "maximum words per candidate phrase")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tagger", params.tagger.spec,
                    "POS tagger: lexicon | conll:<path>")
        ->capture_default_str();
    cmd->add_option("--format", params.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

// flags > config file > defaults
void apply_config_file(CLI::App& app, const std::string& path) {
    nlohmann::json cfg = nlohmann::json::parse(read_file(path));
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");
    for (auto& [key, value] : cfg.items()) {
        for (CLI::App* sub : app.get_subcommands({})) {
            CLI::Option* opt = sub->get_option_no_throw("--" + key);
            if (!opt || opt->count() > 0) continue;
            std::string text =
                value.is_string() ? value.get<std::string>() : value.dump();
            opt->add_result(text);
            opt->run_callback();
        }
    }
}

std::string render_phrases(const kexkit::ExtractResult& result,
                           const std::string& algo, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["algo"] = algo;
        j["phrases"] = nlohmann::json::array();
        for (const auto& sp : result.phrases)
            j["phrases"].push_back({{"phrase", sp.text}, {"score", sp.score}});
        j["stats"] = {{"iterations", result.iterations},
                      {"converged", result.converged},
                      {"missing_stems", result.missing_stems}};
        return j.dump(2) + "\n";
    }
    std::string out;
    char line[512];
    for (const auto& sp : result.phrases) {
        std::snprintf(line, sizeof(line), "%-40s %.6f\n", sp.text.c_str(), sp.score);
        out += line;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"kexkit: keyphrase datasets from BibTeX archives plus "
                 "graph-based and statistical keyphrase extraction"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "optional JSON config file")
        ->configurable(false);

    // dataset-build ---------------------------------------------------------
    auto* build = app.add_subcommand(
        "dataset-build", "parse .bib files into a JSONL keyphrase dataset");
    std::vector<std::string> build_inputs;
    std::string build_topic, build_out, build_report_path, build_existing;
    build->add_option("files", build_inputs,
                      ".bib files; append '=topic' for a per-file topic")
        ->required();
    build->add_option("--topic", build_topic, "topic for files without one");
    build->add_option("--out", build_out, "output dataset path (JSONL)")->required();
    build->add_option("--report", build_report_path,
                      "write the JSON build report here instead of stdout");
    build->add_option("--extend", build_existing,
                      "existing dataset to extend (JSONL)");

    // dataset-stats ---------------------------------------------------------
    auto* stats = app.add_subcommand("dataset-stats",
                                     "corpus statistics for a dataset");
    std::string stats_dataset, stats_format = "json";
    stats->add_option("dataset", stats_dataset, "dataset path (JSONL)")->required();
    stats->add_option("--format", stats_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    // extract ---------------------------------------------------------------
    auto* extract = app.add_subcommand("extract",
                                       "rank keyphrases for one document");
    CommonParams ex_params;
    std::string ex_algo = "positionrank";
    std::string ex_text, ex_dataset, ex_id, ex_context, ex_out;
    extract->add_option("--algo", ex_algo, "extraction algorithm")
        ->check(CLI::IsMember(kexkit::extractor_names()))
        ->capture_default_str();
    extract->add_option("--text", ex_text, "raw UTF-8 text file to extract from");
    extract->add_option("--dataset", ex_dataset, "dataset path (JSONL)");
    extract->add_option("--id", ex_id, "record id to extract from the dataset");
    extract->add_option("--context", ex_context,
                        "bib-weight context, e.g. topic=compsci,year=1980..1987");
    extract->add_option("--out", ex_out, "output path (default stdout)");
    add_rank_flags(extract, ex_params);

    // evaluate --------------------------------------------------------------
    auto* evaluate = app.add_subcommand(
        "evaluate", "score an extractor against gold keyphrases");
    CommonParams ev_params;
    std::string ev_algo, ev_dataset, ev_filter, ev_context, ev_out;
    evaluate->add_option("--algo", ev_algo, "extraction algorithm")->required();
    evaluate->add_option("--dataset", ev_dataset, "dataset path (JSONL)")->required();
    evaluate->add_option("--filter", ev_filter,
                         "test-set selection, e.g. topic=compsci,year=1988")
        ->required();
    evaluate->add_option("--context", ev_context, "bib-weight context selection");
    evaluate->add_option("--out", ev_out, "report output path (default stdout)");
    evaluate->add_option("--jobs", ev_params.jobs,
                         "worker threads (default: all cores)");
    add_rank_flags(evaluate, ev_params);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!config_path.empty()) apply_config_file(app, config_path);

        if (build->parsed()) {
            std::vector<kexkit::BibFileInput> inputs;
            for (const std::string& spec : build_inputs) {
                size_t eq = spec.rfind('=');
                if (eq != std::string::npos && eq + 1 < spec.size())
                    inputs.push_back({spec.substr(0, eq),
                                      std::optional<std::string>(spec.substr(eq + 1))});
                else if (!build_topic.empty())
                    inputs.push_back({spec, build_topic});
                else
                    inputs.push_back({spec, std::nullopt});
            }
            kexkit::Dataset existing;
            if (!build_existing.empty())
                existing = kexkit::load_dataset(build_existing);
            kexkit::BuildReport report;
            kexkit::Dataset ds = kexkit::build_dataset(inputs, existing, report);
            kexkit::save_dataset(ds, build_out);
            write_output(build_report_path, report.to_json());
            return report.accepted >= 1 ? kExitOk : kExitRuntime;
        }

        if (stats->parsed()) {
            kexkit::DatasetStats s =
                kexkit::dataset_stats(kexkit::load_dataset(stats_dataset));
            if (stats_format == "json") {
                nlohmann::json j;
                j["records"] = s.record_count;
                j["authors"] = s.author_count;
                j["journals"] = s.journal_count;
                j["source_files"] = s.source_file_count;
                j["topics"] = s.topic_count;
                j["avg_abstract_words"] = s.avg_abstract_words;
                j["avg_keyphrases"] = s.avg_keyphrases;
                std::cout << j.dump(2) << "\n";
            } else {
                char line[128];
                std::printf("%-20s %zu\n", "records", s.record_count);
                std::printf("%-20s %zu\n", "authors", s.author_count);
                std::printf("%-20s %zu\n", "journals", s.journal_count);
                std::printf("%-20s %zu\n", "source files", s.source_file_count);
                std::printf("%-20s %zu\n", "topics", s.topic_count);
                std::snprintf(line, sizeof(line), "%-20s %.2f", "avg abstract words",
                              s.avg_abstract_words);
                std::printf("%s\n", line);
                std::snprintf(line, sizeof(line), "%-20s %.2f", "avg keyphrases",
                              s.avg_keyphrases);
                std::printf("%s\n", line);
            }
            return kExitOk;
        }

        kexkit::StopwordSet stopwords = resolve_stopwords();

        if (extract->parsed()) {
            ex_params.tagger.validate();
            if (ex_text.empty() == ex_id.empty())
                throw UsageError("extract needs exactly one of --text or --id");
            if (!ex_id.empty() && ex_dataset.empty())
                throw UsageError("--id needs --dataset");
            if (ex_algo == "tfidf" && ex_dataset.empty())
                throw UsageError("tfidf needs --dataset for corpus statistics");
            if (ex_algo == "bibrank" && ex_dataset.empty())
                throw UsageError("bibrank needs --dataset as its context source");
            kexkit::ContextSpec context = kexkit::parse_context_spec(ex_context);

            kexkit::Dataset ds;
            if (!ex_dataset.empty()) ds = kexkit::load_dataset(ex_dataset);

            kexkit::BibRecord standalone;
            const kexkit::BibRecord* rec = &standalone;
            std::string text;
            if (!ex_text.empty()) {
                text = kexkit::sanitize_utf8(read_file(ex_text));
                standalone.id = ex_text;
            } else {
                const kexkit::BibRecord* found = ds.find(ex_id);
                if (!found)
                    throw std::runtime_error("record id not found: " + ex_id);
                rec = found;
                text = found->abstract;
            }

            std::unique_ptr<kexkit::Tagger> tagger;
            if (ex_params.tagger.is_conll())
                tagger = std::make_unique<kexkit::ConllTagger>(
                    ex_params.tagger.conll_path());
            else
                tagger = std::make_unique<kexkit::LexiconTagger>();
            kexkit::TaggedDocument doc =
                kexkit::tag(kexkit::tokenize(text, rec->id), *tagger);

            kexkit::ExtractOptions options;
            options.rank = ex_params.rank;
            options.max_phrase_len = ex_params.max_phrase_len;
            options.stopwords = &stopwords;

            kexkit::DocExtractor extractor =
                kexkit::find_extractor(ex_algo)(ds, context, options);
            kexkit::ExtractResult result = extractor(*rec, doc);
            write_output(ex_out, render_phrases(result, ex_algo, ex_params.format));
            return kExitOk;
        }

        if (evaluate->parsed()) {
            ev_params.tagger.validate();
            if (!kexkit::has_extractor(ev_algo))
                throw UsageError("unknown algorithm '" + ev_algo + "'; choices: " +
                                 [] {
                                     std::string s;
                                     for (const auto& n : kexkit::extractor_names())
                                         s += (s.empty() ? "" : ", ") + n;
                                     return s;
                                 }());
            // validate selection specs before touching any file
            kexkit::ContextSpec filter = kexkit::parse_context_spec(ev_filter);
            kexkit::ContextSpec context = kexkit::parse_context_spec(ev_context);
            kexkit::Dataset ds = kexkit::load_dataset(ev_dataset);

            kexkit::EvalOptions options;
            options.extract.rank = ev_params.rank;
            options.extract.max_phrase_len = ev_params.max_phrase_len;
            options.extract.stopwords = &stopwords;
            options.jobs = ev_params.jobs;

            std::unique_ptr<kexkit::Tagger> lexicon;
            std::unique_ptr<DispatchingTagger> dispatch;
            if (ev_params.tagger.is_conll()) {
                std::string path = ev_params.tagger.conll_path();
                if (!std::filesystem::is_directory(path))
                    throw UsageError(
                        "evaluate expects conll:<dir> with one <id>.conll per record");
                dispatch = std::make_unique<DispatchingTagger>(path);
            } else {
                lexicon = std::make_unique<kexkit::LexiconTagger>();
                options.tagger = lexicon.get();
            }

            kexkit::EvalReport report;
            if (dispatch) {
                // resolve one side file per record id
                kexkit::DocExtractor inner =
                    kexkit::find_extractor(ev_algo)(ds, context, options.extract);
                const DispatchingTagger& dirs = *dispatch;
                kexkit::DocExtractor with_side_tags =
                    [&dirs, inner](const kexkit::BibRecord& rec,
                                   const kexkit::TaggedDocument& doc) {
                        kexkit::ConllTagger side(dirs.side_file(rec.id));
                        return inner(rec, kexkit::tag(doc, side));
                    };
                report = kexkit::evaluate_with(ds, filter, with_side_tags, options);
                report.algo = ev_algo;
                report.filter = ev_filter;
                report.context = ev_context;
            } else {
                report = kexkit::evaluate_run(ds, ev_filter, ev_context, ev_algo,
                                              options);
            }
            write_output(ev_out,
                         kexkit::render_report(report,
                                               ev_params.format == "json"
                                                   ? kexkit::ReportFormat::Json
                                                   : kexkit::ReportFormat::Text));
            return kExitOk;
        }
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }

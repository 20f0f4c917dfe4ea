#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ucvaria/errors.hpp"
#include "ucvaria/pipeline.hpp"

namespace {

using ucvaria::json;

struct CommonOptions {
    double threshold = 0.70;
    std::string lsi_rank = "full";
    std::string weighting = "tf";
    bool no_stem = false;
    std::string stopwords_path;
    std::string config_path;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--threshold", opts.threshold,
                    "similarity threshold in (0, 1] (default 0.70)");
    cmd->add_option("--lsi-rank", opts.lsi_rank,
                    "LSI rank: a positive integer or \"full\" (default)");
    cmd->add_option("--weighting", opts.weighting,
                    "term weighting: tf (default) or tfidf");
    cmd->add_flag("--no-stem", opts.no_stem, "disable Porter stemming");
    cmd->add_option("--stopwords", opts.stopwords_path,
                    "path to a stopword list (one word per line)");
    cmd->add_option("--config", opts.config_path,
                    "JSON config file; flags given on the command line win");
}

// defaults < config file < explicit flags
ucvaria::LsiConfig resolve_config(const CLI::App* cmd, CommonOptions& opts) {
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in)
            throw ucvaria::ParseError("cannot open config file: " +
                                      opts.config_path);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ucvaria::ParseError(opts.config_path + ": " + e.what());
        }
        if (!doc.is_object())
            throw ucvaria::ParseError(opts.config_path +
                                      ": config must be a JSON object");
        if (doc.contains("threshold") && cmd->count("--threshold") == 0)
            opts.threshold = doc["threshold"].get<double>();
        if (doc.contains("lsi_rank") && cmd->count("--lsi-rank") == 0)
            opts.lsi_rank = doc["lsi_rank"].is_string()
                                ? doc["lsi_rank"].get<std::string>()
                                : std::to_string(doc["lsi_rank"].get<int>());
        if (doc.contains("weighting") && cmd->count("--weighting") == 0)
            opts.weighting = doc["weighting"].get<std::string>();
        if (doc.contains("stemming") && cmd->count("--no-stem") == 0)
            opts.no_stem = !doc["stemming"].get<bool>();
        if (doc.contains("stopwords") && cmd->count("--stopwords") == 0)
            opts.stopwords_path = doc["stopwords"].get<std::string>();
    }

    ucvaria::LsiConfig cfg;
    if (!(opts.threshold > 0.0 && opts.threshold <= 1.0))
        throw ucvaria::ValidationError(
            "--threshold must be in (0, 1], got " +
            std::to_string(opts.threshold));
    cfg.threshold = opts.threshold;

    if (opts.lsi_rank == "full") {
        cfg.rank.reset();
    } else {
        int rank = 0;
        try {
            size_t pos = 0;
            rank = std::stoi(opts.lsi_rank, &pos);
            if (pos != opts.lsi_rank.size()) rank = 0;
        } catch (const std::exception&) {
            rank = 0;
        }
        if (rank < 1)
            throw ucvaria::ValidationError(
                "--lsi-rank must be a positive integer or \"full\", got \"" +
                opts.lsi_rank + "\"");
        cfg.rank = rank;
    }

    if (opts.weighting == "tf")
        cfg.weighting = ucvaria::Weighting::TermFrequency;
    else if (opts.weighting == "tfidf")
        cfg.weighting = ucvaria::Weighting::TfIdf;
    else
        throw ucvaria::ValidationError(
            "--weighting must be tf or tfidf, got \"" + opts.weighting + "\"");

    cfg.stemming = !opts.no_stem;
    if (!opts.stopwords_path.empty())
        cfg.stopwords = ucvaria::load_stopwords(opts.stopwords_path);
    return cfg;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

int cmd_analyze(const std::string& family_path, const CLI::App* cmd,
                CommonOptions& opts, const std::string& out_dir,
                const std::string& truth_path) {
    ucvaria::LsiConfig cfg = resolve_config(cmd, opts);
    std::optional<std::filesystem::path> truth;
    if (!truth_path.empty()) truth = truth_path;
    ucvaria::PipelineResult result =
        ucvaria::run_pipeline(family_path, cfg, truth);
    print_warnings(result.warnings);
    ucvaria::write_artifacts(result, out_dir);

    const ucvaria::FeatureModel& fm = result.feature_model;
    std::cout << "family: " << result.family.name << "\n"
              << "variants: " << result.family.variants.size() << "\n"
              << "use-cases: " << result.context.attributes.size() << "\n"
              << "blocks: " << (result.partition.common ? 1 : 0) << " common, "
              << result.partition.variations.size() << " variation\n"
              << "features: " << fm.mandatory.size() << " mandatory, "
              << fm.optional.size() << " optional, " << fm.unmatched.size()
              << " unmatched\n";
    if (result.evaluation)
        std::cout << "evaluation: precision " << result.evaluation->precision
                  << ", recall " << result.evaluation->recall << ", f-measure "
                  << result.evaluation->f_measure << "\n";
    std::cout << "artifacts written to " << out_dir << "\n";
    return 0;
}

ucvaria::PipelineResult run_for(const std::string& family_path,
                                const CLI::App* cmd, CommonOptions& opts) {
    ucvaria::LsiConfig cfg = resolve_config(cmd, opts);
    ucvaria::PipelineResult result = ucvaria::run_pipeline(family_path, cfg);
    print_warnings(result.warnings);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Commonality and variability detection across use-case diagram "
        "variants (FCA + LSI)"};
    app.require_subcommand(1);
    app.footer("Environment: UCVARIA_SEED is reserved; the pipeline is "
               "deterministic and ignores it.");

    std::string family_path, out_dir = "out", truth_path, fm_path, format = "json";
    std::string block_id = "variants";
    CommonOptions opts;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "run the full pipeline and write all artifacts");
    analyze->add_option("family", family_path, "family JSON file or directory")
        ->required();
    analyze->add_option("-o,--output", out_dir,
                        "output directory (default: out)");
    analyze->add_option("--truth", truth_path,
                        "ground-truth JSON; adds evaluation.json");
    add_common_flags(analyze, opts);

    CLI::App* blocks = app.add_subcommand(
        "blocks", "print the block partition as JSON");
    blocks->add_option("family", family_path, "family JSON file or directory")
        ->required();
    add_common_flags(blocks, opts);

    CLI::App* sim = app.add_subcommand(
        "sim", "print per-block similarity matrices as CSV");
    sim->add_option("family", family_path, "family JSON file or directory")
        ->required();
    add_common_flags(sim, opts);

    CLI::App* fm_cmd = app.add_subcommand("fm", "print the feature model");
    fm_cmd->add_option("family", family_path, "family JSON file or directory")
        ->required();
    fm_cmd->add_option("--format", format, "json (default), xml or dot");
    add_common_flags(fm_cmd, opts);

    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "evaluate a detected feature model against ground truth");
    eval_cmd->add_option("fm", fm_path, "fm.json produced by analyze")
        ->required();
    eval_cmd->add_option("truth", truth_path, "ground-truth JSON")->required();

    CLI::App* dot_cmd = app.add_subcommand(
        "dot", "print an AOC-poset as DOT");
    dot_cmd->add_option("family", family_path, "family JSON file or directory")
        ->required();
    dot_cmd->add_option("--block", block_id,
                        "variants (default), cb, or bv<N>");
    add_common_flags(dot_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(family_path, analyze, opts, out_dir, truth_path);
        if (blocks->parsed()) {
            ucvaria::PipelineResult result = run_for(family_path, blocks, opts);
            std::cout << ucvaria::partition_to_json(result.partition).dump(2)
                      << "\n";
            return 0;
        }
        if (sim->parsed()) {
            ucvaria::PipelineResult result = run_for(family_path, sim, opts);
            for (const ucvaria::BlockAnalysis& analysis : result.blocks) {
                std::cout << "# " << analysis.id << "\n"
                          << ucvaria::similarity_to_csv(analysis.sim);
            }
            return 0;
        }
        if (fm_cmd->parsed()) {
            ucvaria::PipelineResult result = run_for(family_path, fm_cmd, opts);
            if (format == "json")
                std::cout << ucvaria::feature_model_to_json(result.feature_model)
                                 .dump(2)
                          << "\n";
            else if (format == "xml")
                std::cout << ucvaria::feature_model_to_xml(result.feature_model);
            else if (format == "dot")
                std::cout << ucvaria::feature_model_to_dot(result.feature_model);
            else
                throw ucvaria::ValidationError(
                    "--format must be json, xml or dot, got \"" + format +
                    "\"");
            return 0;
        }
        if (eval_cmd->parsed()) {
            std::ifstream in(fm_path);
            if (!in) throw ucvaria::ParseError("cannot open " + fm_path);
            json doc;
            try {
                doc = json::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                throw ucvaria::ParseError(fm_path + ": " + e.what());
            }
            ucvaria::FeatureModel fm =
                ucvaria::feature_model_from_json(doc, fm_path);
            ucvaria::GroundTruth truth =
                ucvaria::parse_ground_truth_file(truth_path);
            ucvaria::EvaluationReport report = ucvaria::evaluate(fm, truth);
            std::cout << ucvaria::evaluation_to_json(report).dump(2) << "\n";
            return 0;
        }
        if (dot_cmd->parsed()) {
            ucvaria::PipelineResult result = run_for(family_path, dot_cmd, opts);
            if (block_id == "variants") {
                std::cout << ucvaria::poset_to_dot(result.poset, result.context,
                                                   "variants");
                return 0;
            }
            for (const ucvaria::BlockAnalysis& analysis : result.blocks)
                if (analysis.id == block_id) {
                    std::cout << ucvaria::poset_to_dot(analysis.atomic_poset,
                                                       analysis.threshold_ctx,
                                                       analysis.id);
                    return 0;
                }
            throw ucvaria::ValidationError("unknown block id \"" + block_id +
                                           "\"");
        }
    } catch (const ucvaria::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

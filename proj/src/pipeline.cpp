#include "ucvaria/pipeline.hpp"

#include <fstream>

#include "ucvaria/errors.hpp"

namespace ucvaria {

PipelineResult run_pipeline(const VariantFamily& family, const LsiConfig& cfg) {
    PipelineResult result;
    result.family = family;
    result.context = build_family_context(result.family);
    result.poset = build_aoc_poset(result.context);
    result.partition =
        detect_blocks(result.poset, result.context, &result.warnings);

    std::vector<std::pair<std::string, Block>> todo;
    if (result.partition.common)
        todo.emplace_back("cb", *result.partition.common);
    std::vector<Block> ordered = exploration_order(result.partition.variations);
    for (size_t i = 0; i < ordered.size(); ++i)
        todo.emplace_back("bv" + std::to_string(i + 1), ordered[i]);

    std::vector<std::vector<AtomicBlock>> per_block;
    for (auto& [id, block] : todo) {
        BlockAnalysis analysis;
        analysis.id = id;
        analysis.block = block;
        analysis.corpus =
            build_corpus(block, result.family, cfg, &result.warnings);
        analysis.sim = similarity_matrix(analysis.corpus, cfg, &result.warnings);
        analysis.threshold_ctx = threshold_context(analysis.sim, cfg.threshold);
        analysis.atomic_poset = build_aoc_poset(analysis.threshold_ctx);
        analysis.atomic_blocks =
            detect_atomic_blocks(analysis.atomic_poset, analysis.threshold_ctx,
                                 block);
        per_block.push_back(analysis.atomic_blocks);
        result.blocks.push_back(std::move(analysis));
    }
    result.feature_model = assemble_feature_model(per_block, result.family);
    return result;
}

PipelineResult run_pipeline(
    const std::filesystem::path& family_path, const LsiConfig& cfg,
    const std::optional<std::filesystem::path>& truth_path) {
    std::vector<std::string> warnings;
    VariantFamily family = parse_family_file(family_path, &warnings);
    PipelineResult result = run_pipeline(family, cfg);
    result.warnings.insert(result.warnings.begin(), warnings.begin(),
                           warnings.end());
    if (truth_path) {
        GroundTruth truth = parse_ground_truth_file(*truth_path);
        result.evaluation = evaluate(result.feature_model, truth);
    }
    return result;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << body;
    if (!out) throw Error("failed writing " + path.string());
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

void write_artifacts(const PipelineResult& result,
                     const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw Error("cannot create output directory " + out_dir.string() +
                    ": " + ec.message());

    write_file(out_dir / "context.json", dump(context_to_json(result.context)));
    write_file(out_dir / "poset.json",
               dump(poset_to_json(result.poset, result.context)));
    write_file(out_dir / "poset-variants.dot",
               poset_to_dot(result.poset, result.context, "variants"));
    write_file(out_dir / "blocks.json", dump(partition_to_json(result.partition)));
    for (const BlockAnalysis& analysis : result.blocks) {
        write_file(out_dir / ("sim-" + analysis.id + ".csv"),
                   similarity_to_csv(analysis.sim));
        write_file(out_dir / ("poset-" + analysis.id + ".dot"),
                   poset_to_dot(analysis.atomic_poset, analysis.threshold_ctx,
                                analysis.id));
    }
    write_file(out_dir / "fm.json",
               dump(feature_model_to_json(result.feature_model)));
    write_file(out_dir / "fm.xml", feature_model_to_xml(result.feature_model));
    write_file(out_dir / "fm.dot", feature_model_to_dot(result.feature_model));
    if (result.evaluation)
        write_file(out_dir / "evaluation.json",
                   dump(evaluation_to_json(*result.evaluation)));
}

}  // namespace ucvaria

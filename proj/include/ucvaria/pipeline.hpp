#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ucvaria/blocks.hpp"
#include "ucvaria/evaluate.hpp"
#include "ucvaria/fca.hpp"
#include "ucvaria/features.hpp"
#include "ucvaria/lsi.hpp"
#include "ucvaria/variant_model.hpp"

namespace ucvaria {

struct BlockAnalysis {
    std::string id;  // "cb", "bv1", "bv2", ...
    Block block;
    Corpus corpus;
    SimilarityMatrix sim;
    FormalContext threshold_ctx;
    AocPoset atomic_poset;
    std::vector<AtomicBlock> atomic_blocks;
};

struct PipelineResult {
    VariantFamily family;
    FormalContext context;
    AocPoset poset;
    BlockPartition partition;
    // CommonBlock analysis first (when present), then BVs in
    // exploration order
    std::vector<BlockAnalysis> blocks;
    FeatureModel feature_model;
    std::optional<EvaluationReport> evaluation;
    std::vector<std::string> warnings;
};

PipelineResult run_pipeline(
    const std::filesystem::path& family_path, const LsiConfig& cfg,
    const std::optional<std::filesystem::path>& truth_path = std::nullopt);

// Runs the same stages on an already-parsed family.
PipelineResult run_pipeline(const VariantFamily& family, const LsiConfig& cfg);

// context.json, poset.json, poset-variants.dot, blocks.json, sim-<id>.csv
// and poset-<id>.dot per block, fm.json / fm.xml / fm.dot, and
// evaluation.json when an evaluation was run. Deterministic contents and
// order.
void write_artifacts(const PipelineResult& result,
                     const std::filesystem::path& out_dir);

}  // namespace ucvaria

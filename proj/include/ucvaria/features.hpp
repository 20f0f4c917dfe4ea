#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ucvaria/blocks.hpp"
#include "ucvaria/fca.hpp"
#include "ucvaria/lsi.hpp"
#include "ucvaria/variant_model.hpp"

namespace ucvaria {

// objects = description labels, attributes = use-case names,
// incidence = similarity >= threshold.
FormalContext threshold_context(const SimilarityMatrix& sim, double threshold);

struct AtomicBlock {
    // the concept's reduced intent; one name in the well-formed case,
    // more than one means the block is ambiguous
    std::vector<std::string> use_cases;
    // the concept's extent
    std::vector<std::string> matched_descriptions;
    Block origin;
    // no description reached the threshold for this use-case
    bool unmatched = false;
};

std::vector<AtomicBlock> detect_atomic_blocks(const AocPoset& poset,
                                              const FormalContext& ctx,
                                              const Block& origin);
std::vector<AtomicBlock> detect_atomic_blocks(const FormalContext& ctx,
                                              const Block& origin);

enum class FeatureKind { Mandatory, Optional };

struct Feature {
    std::string name;
    FeatureKind kind;
    std::vector<std::string> supporting_variants;
    // from an ambiguous atomic block (several use-cases matched by the
    // same description set)
    bool low_confidence = false;
};

struct FeatureModel {
    std::string root;
    std::vector<Feature> mandatory;
    std::vector<Feature> optional;
    std::vector<std::string> unmatched;
};

// per_block lists must be ordered CommonBlock first, then BVs in
// exploration order; mandatory features come out in universe
// (first-appearance) order, optional ones in block order.
FeatureModel assemble_feature_model(
    const std::vector<std::vector<AtomicBlock>>& per_block,
    const VariantFamily& family);

json feature_model_to_json(const FeatureModel& fm);
FeatureModel feature_model_from_json(const json& doc,
                                     const std::string& source);
std::string feature_model_to_xml(const FeatureModel& fm);
std::string feature_model_to_dot(const FeatureModel& fm);

}  // namespace ucvaria

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucvaria/fca.hpp"
#include "ucvaria/variant_model.hpp"

namespace ucvaria {

enum class BlockKind { CommonBlock, BlockOfVariation };

struct Block {
    BlockKind kind;
    // universe first-appearance order
    std::vector<std::string> use_cases;
    // input variant order; all variants for the CommonBlock
    std::vector<std::string> supporting_variants;
    int source_concept = -1;
};

struct BlockPartition {
    std::optional<Block> common;
    std::vector<Block> variations;
};

// objects = variant ids, attributes = family_universe, incidence by
// membership (case-insensitive name identity).
FormalContext build_family_context(const VariantFamily& family);

// CommonBlock = reduced intent of the full-extent concept; every other
// concept with a non-empty reduced intent yields one BlockOfVariation.
BlockPartition detect_blocks(const AocPoset& poset, const FormalContext& ctx,
                             std::vector<std::string>* warnings = nullptr);

// Most specific first: ascending |supporting_variants|, then ascending
// |use_cases|, then first use-case name.
std::vector<Block> exploration_order(std::vector<Block> bvs);

json block_to_json(const Block& block);
json partition_to_json(const BlockPartition& partition);

}  // namespace ucvaria

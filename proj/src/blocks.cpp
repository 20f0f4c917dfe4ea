#include "ucvaria/blocks.hpp"

#include <algorithm>
#include <set>

#include "ucvaria/errors.hpp"

namespace ucvaria {

FormalContext build_family_context(const VariantFamily& family) {
    FormalContext ctx;
    for (const DiagramVariant& v : family.variants) ctx.objects.push_back(v.id);
    ctx.attributes = family_universe(family);

    std::vector<std::string> keys;
    keys.reserve(ctx.attributes.size());
    for (const std::string& name : ctx.attributes)
        keys.push_back(canonical_key(name));

    ctx.incidence.assign(ctx.objects.size(),
                         std::vector<bool>(ctx.attributes.size(), false));
    for (size_t o = 0; o < family.variants.size(); ++o) {
        std::set<std::string> present;
        for (const UseCase& uc : family.variants[o].use_cases)
            present.insert(canonical_key(uc.name));
        for (size_t a = 0; a < keys.size(); ++a)
            if (present.count(keys[a])) ctx.incidence[o][a] = true;
    }
    return ctx;
}

namespace {

void check_poset_matches(const AocPoset& poset, const FormalContext& ctx) {
    for (const FcaConcept& c : poset.concepts) {
        if (derive_attributes(ctx, c.intent) != c.extent ||
            derive_objects(ctx, c.extent) != c.intent)
            throw ContractError("detect_blocks: poset does not match context");
    }
}

Block make_block(BlockKind kind, const FcaConcept& c, int concept_index,
                 const FormalContext& ctx) {
    Block b;
    b.kind = kind;
    for (int a : c.reduced_intent) b.use_cases.push_back(ctx.attributes[a]);
    for (int o : c.extent) b.supporting_variants.push_back(ctx.objects[o]);
    b.source_concept = concept_index;
    return b;
}

}  // namespace

BlockPartition detect_blocks(const AocPoset& poset, const FormalContext& ctx,
                             std::vector<std::string>* warnings) {
    check_poset_matches(poset, ctx);

    BlockPartition partition;
    for (size_t i = 0; i < poset.concepts.size(); ++i) {
        const FcaConcept& c = poset.concepts[i];
        if (c.reduced_intent.empty()) continue;
        bool is_top = poset.top && *poset.top == static_cast<int>(i);
        if (is_top)
            partition.common = make_block(BlockKind::CommonBlock, c,
                                          static_cast<int>(i), ctx);
        else
            partition.variations.push_back(make_block(
                BlockKind::BlockOfVariation, c, static_cast<int>(i), ctx));
    }
    if (!partition.common && warnings)
        warnings->push_back("no use-case is present in every variant; the "
                            "common block is empty");
    return partition;
}

std::vector<Block> exploration_order(std::vector<Block> bvs) {
    std::sort(bvs.begin(), bvs.end(), [](const Block& a, const Block& b) {
        if (a.supporting_variants.size() != b.supporting_variants.size())
            return a.supporting_variants.size() < b.supporting_variants.size();
        if (a.use_cases.size() != b.use_cases.size())
            return a.use_cases.size() < b.use_cases.size();
        return a.use_cases.front() < b.use_cases.front();
    });
    return bvs;
}

json block_to_json(const Block& block) {
    json jb;
    jb["kind"] = block.kind == BlockKind::CommonBlock ? "common_block"
                                                      : "block_of_variation";
    jb["use_cases"] = block.use_cases;
    jb["supporting_variants"] = block.supporting_variants;
    jb["concept_id"] = block.source_concept;
    return jb;
}

json partition_to_json(const BlockPartition& partition) {
    json doc;
    doc["common"] = partition.common ? block_to_json(*partition.common)
                                     : json(nullptr);
    json bvs = json::array();
    for (const Block& b : exploration_order(partition.variations))
        bvs.push_back(block_to_json(b));
    doc["variations"] = std::move(bvs);
    return doc;
}

}  // namespace ucvaria

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ucvaria {

using json = nlohmann::ordered_json;

// Sorted ascending, no duplicates.
using IndexSet = std::vector<int>;

struct FormalContext {
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    // incidence[o][a]
    std::vector<std::vector<bool>> incidence;
};

struct FcaConcept {
    IndexSet extent;
    IndexSet intent;
    IndexSet reduced_extent;  // objects introduced here
    IndexSet reduced_intent;  // attributes introduced here
};

struct AocPoset {
    std::vector<FcaConcept> concepts;
    // Hasse edges (child, parent): child.extent strictly contained in
    // parent.extent with nothing in between.
    std::vector<std::pair<int, int>> covers;
    // concept with full extent, when present
    std::optional<int> top;
};

// Objects incident to every attribute in attrs; empty attrs -> all objects.
IndexSet derive_attributes(const FormalContext& ctx, const IndexSet& attrs);

// Attributes incident to every object in objs; empty objs -> all attributes.
IndexSet derive_objects(const FormalContext& ctx, const IndexSet& objs);

// All attribute-concepts and object-concepts, deduplicated by extent, with
// reduced labeling and Hasse covers. Concepts ordered by descending extent
// size, then lexicographic extent.
AocPoset build_aoc_poset(const FormalContext& ctx);

json context_to_json(const FormalContext& ctx);
json poset_to_json(const AocPoset& poset, const FormalContext& ctx);
std::string poset_to_dot(const AocPoset& poset, const FormalContext& ctx,
                         const std::string& graph_name);

}  // namespace ucvaria

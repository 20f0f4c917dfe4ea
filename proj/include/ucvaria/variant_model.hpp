#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ucvaria {

using json = nlohmann::ordered_json;

struct UseCase {
    std::string name;
    std::string description;
};

struct DiagramVariant {
    std::string id;
    std::vector<UseCase> use_cases;
};

struct VariantFamily {
    std::string name;
    std::vector<DiagramVariant> variants;
    // canonical key (trimmed, lowercased name) -> canonical description
    std::map<std::string, std::string> descriptions;
};

// Identity of a use-case across variants: trimmed, case-insensitive name.
std::string canonical_key(std::string_view name);

// Parse and validate the canonical family JSON document.
// source names the input in error messages (file path or "<stream>").
VariantFamily parse_family(std::istream& input, const std::string& source,
                           std::vector<std::string>* warnings = nullptr);

// File mode: path is the family document. Directory mode: path is a
// directory holding family.json ({"name", "members": [files]}) where each
// member file holds one variant object.
VariantFamily parse_family_file(const std::filesystem::path& path,
                                std::vector<std::string>* warnings = nullptr);

// Union of all variants' use-case names, first-appearance order,
// first-seen spelling.
std::vector<std::string> family_universe(const VariantFamily& family);

// Canonical description for a use-case name ("" if none recorded).
const std::string& description_for(const VariantFamily& family,
                                   std::string_view name);

// Inverse of parse_family over the canonical schema (lossless for
// name, id, description and order).
json serialize_family(const VariantFamily& family);

}  // namespace ucvaria

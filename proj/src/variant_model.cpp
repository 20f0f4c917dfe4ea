#include "ucvaria/variant_model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "ucvaria/errors.hpp"

namespace ucvaria {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

const json& require(const json& obj, const char* key, const std::string& where,
                    const std::string& source) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(source + ": " + where + ": missing required key \"" +
                         key + "\"");
    return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where, const std::string& source) {
    const json& v = require(obj, key, where, source);
    if (!v.is_string())
        throw ParseError(source + ": " + where + ": \"" + key +
                         "\" must be a string");
    return v.get<std::string>();
}

DiagramVariant parse_variant(const json& jv, const std::string& where,
                             const std::string& source) {
    if (!jv.is_object())
        throw ParseError(source + ": " + where + ": variant must be an object");
    DiagramVariant variant;
    variant.id = require_string(jv, "id", where, source);
    if (trim(variant.id).empty())
        throw ValidationError(source + ": " + where + ": variant id is empty");

    const json& jucs = require(jv, "use_cases", where, source);
    if (!jucs.is_array())
        throw ParseError(source + ": " + where + ": \"use_cases\" must be an array");
    if (jucs.empty())
        throw ValidationError(source + ": " + where + ": variant \"" +
                              variant.id + "\" has no use-cases");

    std::set<std::string> seen;
    for (size_t u = 0; u < jucs.size(); ++u) {
        std::string ucwhere = where + ".use_cases[" + std::to_string(u) + "]";
        const json& juc = jucs[u];
        if (!juc.is_object())
            throw ParseError(source + ": " + ucwhere + ": use-case must be an object");
        UseCase uc;
        uc.name = require_string(juc, "name", ucwhere, source);
        // a missing key behaves like an empty description: warn + fall back
        // to name-identity matching downstream
        if (juc.contains("description")) {
            if (!juc["description"].is_string())
                throw ParseError(source + ": " + ucwhere +
                                 ": \"description\" must be a string");
            uc.description = juc["description"].get<std::string>();
        }
        if (trim(uc.name).empty())
            throw ValidationError(source + ": " + ucwhere + ": use-case name is empty");
        if (!seen.insert(canonical_key(uc.name)).second)
            throw ValidationError(source + ": variant \"" + variant.id +
                                  "\": duplicate use-case name \"" + uc.name + "\"");
        variant.use_cases.push_back(std::move(uc));
    }
    return variant;
}

VariantFamily assemble_family(std::string name,
                              std::vector<DiagramVariant> variants,
                              const std::string& source,
                              std::vector<std::string>* warnings) {
    VariantFamily family;
    family.name = std::move(name);
    family.variants = std::move(variants);

    if (family.variants.size() < 2)
        throw ValidationError(source +
                              ": a family needs at least 2 variants, got " +
                              std::to_string(family.variants.size()));

    std::set<std::string> ids;
    for (const DiagramVariant& v : family.variants)
        if (!ids.insert(trim(v.id)).second)
            throw ValidationError(source + ": duplicate variant id \"" + v.id + "\"");

    // Canonical description per use-case name: the first non-empty one.
    // A second, different non-empty description is a conflict; an empty
    // description defers to any non-empty sibling.
    for (const DiagramVariant& v : family.variants) {
        for (const UseCase& uc : v.use_cases) {
            std::string key = canonical_key(uc.name);
            auto [it, inserted] = family.descriptions.emplace(key, uc.description);
            if (inserted) continue;
            if (uc.description.empty() || uc.description == it->second) continue;
            if (it->second.empty()) {
                it->second = uc.description;
                continue;
            }
            throw ValidationError(source + ": conflicting descriptions for use-case \"" +
                                  uc.name + "\" (variant \"" + v.id + "\")");
        }
    }
    if (warnings) {
        for (const std::string& name : family_universe(family))
            if (description_for(family, name).empty())
                warnings->push_back("use-case \"" + name +
                                    "\" has no description; name-identity "
                                    "matching will be used");
    }
    return family;
}

json parse_json(std::istream& input, const std::string& source) {
    try {
        return json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

}  // namespace

std::string canonical_key(std::string_view name) {
    std::string key = trim(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return key;
}

VariantFamily parse_family(std::istream& input, const std::string& source,
                           std::vector<std::string>* warnings) {
    json doc = parse_json(input, source);
    if (!doc.is_object())
        throw ParseError(source + ": family document must be a JSON object");
    std::string name = require_string(doc, "name", "family", source);
    const json& jvariants = require(doc, "variants", "family", source);
    if (!jvariants.is_array())
        throw ParseError(source + ": \"variants\" must be an array");

    std::vector<DiagramVariant> variants;
    for (size_t i = 0; i < jvariants.size(); ++i)
        variants.push_back(parse_variant(
            jvariants[i], "variants[" + std::to_string(i) + "]", source));
    return assemble_family(std::move(name), std::move(variants), source, warnings);
}

VariantFamily parse_family_file(const std::filesystem::path& path,
                                std::vector<std::string>* warnings) {
    namespace fs = std::filesystem;
    if (fs::is_directory(path)) {
        fs::path meta = path / "family.json";
        std::ifstream in(meta);
        if (!in)
            throw ParseError("cannot open " + meta.string());
        json doc = parse_json(in, meta.string());
        if (!doc.is_object())
            throw ParseError(meta.string() + ": family metadata must be a JSON object");
        std::string name = require_string(doc, "name", "family", meta.string());
        const json& members = require(doc, "members", "family", meta.string());
        if (!members.is_array())
            throw ParseError(meta.string() + ": \"members\" must be an array");
        std::vector<DiagramVariant> variants;
        for (const json& m : members) {
            if (!m.is_string())
                throw ParseError(meta.string() + ": member entries must be file names");
            fs::path member = path / m.get<std::string>();
            std::ifstream min(member);
            if (!min)
                throw ParseError("cannot open " + member.string());
            json jv = parse_json(min, member.string());
            variants.push_back(parse_variant(jv, "variant", member.string()));
        }
        return assemble_family(std::move(name), std::move(variants),
                               meta.string(), warnings);
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    return parse_family(in, path.string(), warnings);
}

std::vector<std::string> family_universe(const VariantFamily& family) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const DiagramVariant& v : family.variants)
        for (const UseCase& uc : v.use_cases)
            if (seen.insert(canonical_key(uc.name)).second)
                names.push_back(uc.name);
    return names;
}

const std::string& description_for(const VariantFamily& family,
                                   std::string_view name) {
    static const std::string empty;
    auto it = family.descriptions.find(canonical_key(name));
    return it == family.descriptions.end() ? empty : it->second;
}

json serialize_family(const VariantFamily& family) {
    json doc;
    doc["name"] = family.name;
    json jvariants = json::array();
    for (const DiagramVariant& v : family.variants) {
        json jv;
        jv["id"] = v.id;
        json jucs = json::array();
        for (const UseCase& uc : v.use_cases)
            jucs.push_back(json{{"name", uc.name}, {"description", uc.description}});
        jv["use_cases"] = std::move(jucs);
        jvariants.push_back(std::move(jv));
    }
    doc["variants"] = std::move(jvariants);
    return doc;
}

}  // namespace ucvaria

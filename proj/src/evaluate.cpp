#include "ucvaria/evaluate.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <set>

#include "ucvaria/errors.hpp"
#include "ucvaria/variant_model.hpp"

namespace ucvaria {

GroundTruth parse_ground_truth(std::istream& input, const std::string& source) {
    json doc;
    try {
        doc = json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("features") ||
        !doc["features"].is_array())
        throw ParseError(source +
                         ": ground truth must be an object with a "
                         "\"features\" array");
    GroundTruth truth;
    std::set<std::string> seen;
    for (const json& jf : doc["features"]) {
        if (!jf.is_object() || !jf.contains("name") || !jf.contains("kind") ||
            !jf["name"].is_string() || !jf["kind"].is_string())
            throw ParseError(source +
                             ": each feature needs string \"name\" and "
                             "\"kind\"");
        GroundTruth::Entry entry;
        entry.name = jf["name"].get<std::string>();
        std::string kind = jf["kind"].get<std::string>();
        if (kind == "mandatory")
            entry.kind = FeatureKind::Mandatory;
        else if (kind == "optional")
            entry.kind = FeatureKind::Optional;
        else
            throw ParseError(source + ": unknown kind \"" + kind +
                             "\" for feature \"" + entry.name + "\"");
        if (!seen.insert(canonical_key(entry.name)).second)
            throw ValidationError(source + ": duplicate feature name \"" +
                                  entry.name + "\" in ground truth");
        truth.features.push_back(std::move(entry));
    }
    return truth;
}

GroundTruth parse_ground_truth_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_ground_truth(in, path.string());
}

EvaluationReport evaluate_sets(const std::vector<LabeledFeature>& detected,
                               const std::vector<LabeledFeature>& truth) {
    std::map<std::string, FeatureKind> detected_kind;
    for (const LabeledFeature& f : detected)
        if (!detected_kind.emplace(canonical_key(f.name), f.kind).second)
            throw ValidationError("duplicate feature name \"" + f.name +
                                  "\" among detected features");
    std::map<std::string, FeatureKind> truth_kind;
    for (const LabeledFeature& f : truth)
        if (!truth_kind.emplace(canonical_key(f.name), f.kind).second)
            throw ValidationError("duplicate feature name \"" + f.name +
                                  "\" in ground truth");

    EvaluationReport report;
    for (const LabeledFeature& f : truth) {
        EvaluationReport::PerFeature row;
        row.name = f.name;
        auto it = detected_kind.find(canonical_key(f.name));
        row.detected = it != detected_kind.end();
        row.kind_match = row.detected && it->second == f.kind;
        row.f_measure = row.kind_match ? 1.0 : 0.0;
        if (row.kind_match) ++report.tp;
        report.per_feature.push_back(std::move(row));
    }
    for (const LabeledFeature& f : detected) {
        if (truth_kind.count(canonical_key(f.name))) continue;
        EvaluationReport::PerFeature row;
        row.name = f.name;
        row.detected = true;
        report.per_feature.push_back(std::move(row));
    }
    report.fp = static_cast<int>(detected.size()) - report.tp;
    report.fn = static_cast<int>(truth.size()) - report.tp;

    report.precision = report.tp + report.fp == 0
                           ? 1.0
                           : static_cast<double>(report.tp) /
                                 (report.tp + report.fp);
    report.recall = report.tp + report.fn == 0
                        ? 1.0
                        : static_cast<double>(report.tp) /
                              (report.tp + report.fn);
    report.f_measure = report.precision + report.recall == 0.0
                           ? 0.0
                           : 2.0 * report.precision * report.recall /
                                 (report.precision + report.recall);
    return report;
}

EvaluationReport evaluate(const FeatureModel& detected,
                          const GroundTruth& truth) {
    std::vector<LabeledFeature> dlist;
    for (const Feature& f : detected.mandatory)
        dlist.push_back({f.name, FeatureKind::Mandatory});
    for (const Feature& f : detected.optional)
        dlist.push_back({f.name, FeatureKind::Optional});
    std::vector<LabeledFeature> tlist;
    for (const GroundTruth::Entry& e : truth.features)
        tlist.push_back({e.name, e.kind});
    return evaluate_sets(dlist, tlist);
}

json evaluation_to_json(const EvaluationReport& report) {
    json doc;
    json rows = json::array();
    for (const auto& row : report.per_feature) {
        json jr;
        jr["name"] = row.name;
        jr["detected"] = row.detected;
        jr["kind_match"] = row.kind_match;
        jr["f_measure"] = row.f_measure;
        rows.push_back(std::move(jr));
    }
    doc["per_feature"] = std::move(rows);
    doc["overall"] = json{{"precision", report.precision},
                          {"recall", report.recall},
                          {"f_measure", report.f_measure}};
    doc["counts"] =
        json{{"tp", report.tp}, {"fp", report.fp}, {"fn", report.fn}};
    return doc;
}

}  // namespace ucvaria

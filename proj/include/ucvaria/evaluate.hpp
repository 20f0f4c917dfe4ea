#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucvaria/features.hpp"

namespace ucvaria {

struct GroundTruth {
    struct Entry {
        std::string name;
        FeatureKind kind;
    };
    std::vector<Entry> features;
};

GroundTruth parse_ground_truth(std::istream& input, const std::string& source);
GroundTruth parse_ground_truth_file(const std::filesystem::path& path);

struct EvaluationReport {
    struct PerFeature {
        std::string name;
        bool detected = false;
        bool kind_match = false;
        double f_measure = 0.0;
    };
    std::vector<PerFeature> per_feature;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    int tp = 0;
    int fp = 0;
    int fn = 0;
};

struct LabeledFeature {
    std::string name;
    FeatureKind kind;
};

// A detected feature is a true positive iff the truth holds a feature with
// the same normalized name and the same kind. Names must be unique on both
// sides.
EvaluationReport evaluate_sets(const std::vector<LabeledFeature>& detected,
                               const std::vector<LabeledFeature>& truth);

EvaluationReport evaluate(const FeatureModel& detected,
                          const GroundTruth& truth);

json evaluation_to_json(const EvaluationReport& report);

}  // namespace ucvaria

#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ucvaria/errors.hpp"
#include "ucvaria/evaluate.hpp"

using ucvaria::evaluate_sets;
using ucvaria::FeatureKind;
using ucvaria::GroundTruth;
using ucvaria::LabeledFeature;

namespace {

LabeledFeature m(const std::string& name) {
    return {name, FeatureKind::Mandatory};
}
LabeledFeature o(const std::string& name) {
    return {name, FeatureKind::Optional};
}

}  // namespace

TEST_CASE("perfect agreement scores 1.0 everywhere") {
    std::vector<LabeledFeature> both = {m("A"), o("B"), m("C")};
    auto report = evaluate_sets(both, both);
    CHECK(report.tp == 3);
    CHECK(report.fp == 0);
    CHECK(report.fn == 0);
    CHECK(report.precision == 1.0);
    CHECK(report.recall == 1.0);
    CHECK(report.f_measure == 1.0);
}

TEST_CASE("precision and recall follow the counting formulas") {
    auto report = evaluate_sets({m("A"), m("B"), o("X")},  // detected
                                {m("A"), m("C"), o("X"), o("Y")});
    CHECK(report.tp == 2);
    CHECK(report.fp == 1);
    CHECK(report.fn == 2);
    CHECK(report.precision == doctest::Approx(2.0 / 3.0));
    CHECK(report.recall == doctest::Approx(0.5));
    double p = 2.0 / 3.0, r = 0.5;
    CHECK(report.f_measure == doctest::Approx(2 * p * r / (p + r)));
}

TEST_CASE("name matching is case-insensitive, kind must agree") {
    auto report = evaluate_sets({m("view ALBUM")}, {m("View album")});
    CHECK(report.tp == 1);
    CHECK(report.f_measure == 1.0);

    auto mismat = evaluate_sets({o("View album")}, {m("View album")});
    CHECK(mismat.tp == 0);
    CHECK(mismat.fp == 1);
    CHECK(mismat.fn == 1);
    CHECK(mismat.precision == 0.0);
    CHECK(mismat.recall == 0.0);
    CHECK(mismat.f_measure == 0.0);
}

TEST_CASE("empty sets are vacuously perfect") {
    auto report = evaluate_sets({}, {});
    CHECK(report.precision == 1.0);
    CHECK(report.recall == 1.0);
    CHECK(report.f_measure == 1.0);
    CHECK(report.per_feature.empty());
}

TEST_CASE("empty detected against non-empty truth") {
    auto report = evaluate_sets({}, {m("A")});
    CHECK(report.precision == 1.0);  // no false positives
    CHECK(report.recall == 0.0);
    CHECK(report.f_measure == 0.0);
}

TEST_CASE("swapping detected and truth swaps precision and recall") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coin(0, 2);
    const auto& pool = testutil::word_pool();
    for (int round = 0; round < 50; ++round) {
        std::vector<LabeledFeature> left, right;
        for (size_t i = 0; i < pool.size(); ++i) {
            FeatureKind kind = (i % 2 == 0) ? FeatureKind::Mandatory
                                            : FeatureKind::Optional;
            int where = coin(rng);
            if (where == 0 || where == 2) left.push_back({pool[i], kind});
            if (where == 1 || where == 2) right.push_back({pool[i], kind});
        }
        auto ab = evaluate_sets(left, right);
        auto ba = evaluate_sets(right, left);
        CHECK(ab.precision == ba.recall);
        CHECK(ab.recall == ba.precision);
        CHECK(ab.f_measure == doctest::Approx(ba.f_measure));
    }
}

TEST_CASE("duplicate names are rejected on either side") {
    CHECK_THROWS_AS(evaluate_sets({m("A"), o("a")}, {m("A")}),
                    ucvaria::ValidationError);
    CHECK_THROWS_AS(evaluate_sets({m("A")}, {m("A"), o("a")}),
                    ucvaria::ValidationError);
}

TEST_CASE("per-feature rows list truth first, then spurious detections") {
    auto report = evaluate_sets({m("B"), m("Z")}, {m("A"), m("B")});
    REQUIRE(report.per_feature.size() == 3);
    CHECK(report.per_feature[0].name == "A");
    CHECK(!report.per_feature[0].detected);
    CHECK(report.per_feature[0].f_measure == 0.0);
    CHECK(report.per_feature[1].name == "B");
    CHECK(report.per_feature[1].detected);
    CHECK(report.per_feature[1].kind_match);
    CHECK(report.per_feature[1].f_measure == 1.0);
    CHECK(report.per_feature[2].name == "Z");
    CHECK(report.per_feature[2].detected);
    CHECK(!report.per_feature[2].kind_match);
}

TEST_CASE("parse_ground_truth reads the canonical schema") {
    std::istringstream in(R"({
      "features": [
        {"name": "View album", "kind": "mandatory"},
        {"name": "Play video", "kind": "optional"}
      ]
    })");
    auto truth = ucvaria::parse_ground_truth(in, "<test>");
    REQUIRE(truth.features.size() == 2);
    CHECK(truth.features[0].name == "View album");
    CHECK(truth.features[0].kind == FeatureKind::Mandatory);
    CHECK(truth.features[1].kind == FeatureKind::Optional);
}

TEST_CASE("parse_ground_truth rejects bad documents") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return ucvaria::parse_ground_truth(in, "<test>");
    };
    CHECK_THROWS_AS(parse("not json"), ucvaria::ParseError);
    CHECK_THROWS_AS(parse(R"({"features": [{"name": "A", "kind": "weird"}]})"),
                    ucvaria::ParseError);
    CHECK_THROWS_AS(
        parse(R"({"features": [{"name": "A", "kind": "mandatory"},
                               {"name": "a", "kind": "optional"}]})"),
        ucvaria::ValidationError);
}

TEST_CASE("evaluate compares a feature model against ground truth") {
    ucvaria::FeatureModel fm;
    fm.root = "demo";
    fm.mandatory.push_back({"A", FeatureKind::Mandatory, {"v1"}, false});
    fm.optional.push_back({"B", FeatureKind::Optional, {"v1"}, false});
    GroundTruth truth;
    truth.features.push_back({"A", FeatureKind::Mandatory});
    truth.features.push_back({"B", FeatureKind::Optional});
    auto report = ucvaria::evaluate(fm, truth);
    CHECK(report.f_measure == 1.0);

    auto doc = ucvaria::evaluation_to_json(report);
    CHECK(doc["overall"]["precision"] == 1.0);
    CHECK(doc["overall"]["recall"] == 1.0);
    CHECK(doc["overall"]["f_measure"] == 1.0);
    CHECK(doc["counts"]["tp"] == 2);
    REQUIRE(doc["per_feature"].size() == 2);
    CHECK(doc["per_feature"][0]["name"] == "A");
    CHECK(doc["per_feature"][0]["detected"] == true);
}

TEST_CASE("the bundled ground truth mirrors the published feature table") {
    auto truth = ucvaria::parse_ground_truth_file(testutil::fixture_truth());
    REQUIRE(truth.features.size() == 23);
    int mandatory = 0, optional_count = 0;
    for (const auto& f : truth.features)
        (f.kind == FeatureKind::Mandatory ? mandatory : optional_count) += 1;
    CHECK(mandatory == 10);
    CHECK(optional_count == 13);
    CHECK(truth.features[0].name == "View album");
}

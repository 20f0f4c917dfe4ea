#include "ucvaria/features.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ucvaria/errors.hpp"

namespace ucvaria {

FormalContext threshold_context(const SimilarityMatrix& sim, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ContractError("threshold_context: threshold must be in (0, 1]");
    FormalContext ctx;
    ctx.objects = sim.row_labels;
    ctx.attributes = sim.col_labels;
    ctx.incidence.assign(ctx.objects.size(),
                         std::vector<bool>(ctx.attributes.size(), false));
    for (size_t i = 0; i < ctx.objects.size(); ++i)
        for (size_t j = 0; j < ctx.attributes.size(); ++j)
            ctx.incidence[i][j] =
                sim.values(static_cast<Eigen::Index>(i),
                           static_cast<Eigen::Index>(j)) >= threshold;
    return ctx;
}

std::vector<AtomicBlock> detect_atomic_blocks(const AocPoset& poset,
                                              const FormalContext& ctx,
                                              const Block& origin) {
    std::vector<AtomicBlock> blocks;

    // Concepts with an empty extent only collect use-cases no description
    // matched; those are reported as unmatched singletons below instead.
    for (const FcaConcept& c : poset.concepts) {
        if (c.reduced_intent.empty() || c.extent.empty()) continue;
        AtomicBlock ab;
        for (int a : c.reduced_intent) ab.use_cases.push_back(ctx.attributes[a]);
        for (int o : c.extent)
            ab.matched_descriptions.push_back(ctx.objects[o]);
        ab.origin = origin;
        blocks.push_back(std::move(ab));
    }
    for (size_t a = 0; a < ctx.attributes.size(); ++a) {
        bool matched = false;
        for (size_t o = 0; o < ctx.objects.size() && !matched; ++o)
            matched = ctx.incidence[o][a];
        if (matched) continue;
        AtomicBlock ab;
        ab.use_cases.push_back(ctx.attributes[a]);
        ab.origin = origin;
        ab.unmatched = true;
        blocks.push_back(std::move(ab));
    }

    // stable report order: by the first use-case's position in the origin
    // block (the origin lists use-cases in universe order)
    std::map<std::string, size_t> origin_pos;
    for (const std::string& name : origin.use_cases)
        origin_pos.emplace(canonical_key(name), origin_pos.size());
    auto pos_of = [&](const AtomicBlock& ab) {
        size_t best = origin_pos.size();
        for (const std::string& name : ab.use_cases) {
            auto it = origin_pos.find(canonical_key(name));
            if (it != origin_pos.end()) best = std::min(best, it->second);
        }
        return best;
    };
    std::stable_sort(blocks.begin(), blocks.end(),
                     [&](const AtomicBlock& a, const AtomicBlock& b) {
                         return pos_of(a) < pos_of(b);
                     });
    return blocks;
}

std::vector<AtomicBlock> detect_atomic_blocks(const FormalContext& ctx,
                                              const Block& origin) {
    return detect_atomic_blocks(build_aoc_poset(ctx), ctx, origin);
}

FeatureModel assemble_feature_model(
    const std::vector<std::vector<AtomicBlock>>& per_block,
    const VariantFamily& family) {
    std::map<std::string, size_t> universe_pos;
    for (const std::string& name : family_universe(family))
        universe_pos.emplace(canonical_key(name), universe_pos.size());
    auto pos_of = [&](const std::string& name) {
        auto it = universe_pos.find(canonical_key(name));
        return it == universe_pos.end() ? universe_pos.size() : it->second;
    };

    FeatureModel fm;
    fm.root = family.name;
    for (const auto& atomic_blocks : per_block) {
        for (const AtomicBlock& ab : atomic_blocks) {
            if (ab.unmatched) {
                fm.unmatched.insert(fm.unmatched.end(), ab.use_cases.begin(),
                                    ab.use_cases.end());
                continue;
            }
            for (const std::string& name : ab.use_cases) {
                Feature f;
                f.name = name;
                f.kind = ab.origin.kind == BlockKind::CommonBlock
                             ? FeatureKind::Mandatory
                             : FeatureKind::Optional;
                f.supporting_variants = ab.origin.supporting_variants;
                f.low_confidence = ab.use_cases.size() > 1;
                (f.kind == FeatureKind::Mandatory ? fm.mandatory : fm.optional)
                    .push_back(std::move(f));
            }
        }
    }
    std::stable_sort(fm.mandatory.begin(), fm.mandatory.end(),
                     [&](const Feature& a, const Feature& b) {
                         return pos_of(a.name) < pos_of(b.name);
                     });
    std::stable_sort(fm.unmatched.begin(), fm.unmatched.end(),
                     [&](const std::string& a, const std::string& b) {
                         return pos_of(a) < pos_of(b);
                     });
    return fm;
}

namespace {

json feature_to_json(const Feature& f) {
    json jf;
    jf["name"] = f.name;
    jf["variants"] = f.supporting_variants;
    if (f.low_confidence) jf["low_confidence"] = true;
    return jf;
}

}  // namespace

json feature_model_to_json(const FeatureModel& fm) {
    json doc;
    doc["root"] = fm.root;
    json mandatory = json::array();
    for (const Feature& f : fm.mandatory) mandatory.push_back(feature_to_json(f));
    doc["mandatory"] = std::move(mandatory);
    json optional = json::array();
    for (const Feature& f : fm.optional) optional.push_back(feature_to_json(f));
    doc["optional"] = std::move(optional);
    doc["unmatched"] = fm.unmatched;
    return doc;
}

FeatureModel feature_model_from_json(const json& doc,
                                     const std::string& source) {
    if (!doc.is_object())
        throw ParseError(source + ": feature model must be a JSON object");
    FeatureModel fm;
    auto str = [&](const json& j, const char* what) {
        if (!j.is_string())
            throw ParseError(source + ": " + what + " must be a string");
        return j.get<std::string>();
    };
    if (doc.contains("root")) fm.root = str(doc["root"], "root");
    auto read_list = [&](const char* key, FeatureKind kind,
                         std::vector<Feature>& out) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_array())
            throw ParseError(source + ": \"" + key + "\" must be an array");
        for (const json& jf : doc[key]) {
            Feature f;
            f.kind = kind;
            if (jf.is_string()) {
                f.name = jf.get<std::string>();
            } else if (jf.is_object()) {
                f.name = str(jf.contains("name") ? jf["name"] : json(),
                             "feature name");
                if (jf.contains("variants"))
                    for (const json& v : jf["variants"])
                        f.supporting_variants.push_back(str(v, "variant id"));
                if (jf.contains("low_confidence"))
                    f.low_confidence = jf["low_confidence"].get<bool>();
            } else {
                throw ParseError(source +
                                 ": feature entries must be objects or strings");
            }
            out.push_back(std::move(f));
        }
    };
    read_list("mandatory", FeatureKind::Mandatory, fm.mandatory);
    read_list("optional", FeatureKind::Optional, fm.optional);
    if (doc.contains("unmatched"))
        for (const json& j : doc["unmatched"])
            fm.unmatched.push_back(str(j, "unmatched name"));
    return fm;
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string feature_model_to_xml(const FeatureModel& fm) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<feature_model root=\"" << xml_escape(fm.root) << "\">\n";
    for (const Feature& f : fm.mandatory)
        out << "  <feature name=\"" << xml_escape(f.name)
            << "\" mandatory=\"true\"/>\n";
    for (const Feature& f : fm.optional)
        out << "  <feature name=\"" << xml_escape(f.name)
            << "\" mandatory=\"false\"/>\n";
    for (const std::string& name : fm.unmatched)
        out << "  <unmatched name=\"" << xml_escape(name) << "\"/>\n";
    out << "</feature_model>\n";
    return out.str();
}

std::string feature_model_to_dot(const FeatureModel& fm) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(fm.root) << "\" {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    out << "  root [label=\"" << dot_escape(fm.root) << "\", style=bold];\n";
    int n = 0;
    for (const Feature& f : fm.mandatory) {
        out << "  f" << n << " [label=\"" << dot_escape(f.name) << "\"];\n";
        out << "  root -> f" << n << " [arrowhead=dot];\n";
        ++n;
    }
    for (const Feature& f : fm.optional) {
        out << "  f" << n << " [label=\"" << dot_escape(f.name) << "\"];\n";
        out << "  root -> f" << n << " [arrowhead=odot];\n";
        ++n;
    }
    for (const std::string& name : fm.unmatched) {
        out << "  f" << n << " [label=\"" << dot_escape(name)
            << "\", style=dashed];\n";
        out << "  root -> f" << n << " [arrowhead=odot, style=dashed];\n";
        ++n;
    }
    out << "}\n";
    return out.str();
}

}  // namespace ucvaria

#include "ucvaria/fca.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ucvaria/errors.hpp"

namespace ucvaria {

namespace {

void check_range(const IndexSet& set, size_t limit, const char* what) {
    for (int i : set)
        if (i < 0 || static_cast<size_t>(i) >= limit)
            throw ContractError(std::string(what) + " index out of range: " +
                                std::to_string(i));
}

// a strictly contained in b (both sorted)
bool strict_subset(const IndexSet& a, const IndexSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(),
                                                a.begin(), a.end());
}

}  // namespace

IndexSet derive_attributes(const FormalContext& ctx, const IndexSet& attrs) {
    check_range(attrs, ctx.attributes.size(), "attribute");
    IndexSet out;
    for (size_t o = 0; o < ctx.objects.size(); ++o) {
        bool hit = true;
        for (int a : attrs)
            if (!ctx.incidence[o][a]) {
                hit = false;
                break;
            }
        if (hit) out.push_back(static_cast<int>(o));
    }
    return out;
}

IndexSet derive_objects(const FormalContext& ctx, const IndexSet& objs) {
    check_range(objs, ctx.objects.size(), "object");
    IndexSet out;
    for (size_t a = 0; a < ctx.attributes.size(); ++a) {
        bool hit = true;
        for (int o : objs)
            if (!ctx.incidence[o][a]) {
                hit = false;
                break;
            }
        if (hit) out.push_back(static_cast<int>(a));
    }
    return out;
}

AocPoset build_aoc_poset(const FormalContext& ctx) {
    if (ctx.objects.empty() || ctx.attributes.empty())
        throw ContractError("build_aoc_poset: empty context");
    if (ctx.incidence.size() != ctx.objects.size())
        throw ContractError("build_aoc_poset: incidence rows != objects");
    for (const auto& row : ctx.incidence)
        if (row.size() != ctx.attributes.size())
            throw ContractError("build_aoc_poset: incidence cols != attributes");

    // extent -> intent for every attribute- and object-concept
    std::map<IndexSet, IndexSet> closures;
    std::vector<IndexSet> attr_extent(ctx.attributes.size());
    std::vector<IndexSet> obj_extent(ctx.objects.size());

    for (size_t a = 0; a < ctx.attributes.size(); ++a) {
        IndexSet extent = derive_attributes(ctx, {static_cast<int>(a)});
        attr_extent[a] = extent;
        if (!closures.count(extent))
            closures.emplace(extent, derive_objects(ctx, extent));
    }
    for (size_t o = 0; o < ctx.objects.size(); ++o) {
        IndexSet intent = derive_objects(ctx, {static_cast<int>(o)});
        IndexSet extent = derive_attributes(ctx, intent);
        obj_extent[o] = extent;
        if (!closures.count(extent)) closures.emplace(extent, std::move(intent));
    }

    AocPoset poset;
    for (auto& [extent, intent] : closures) {
        FcaConcept c;
        c.extent = extent;
        c.intent = intent;
        poset.concepts.push_back(std::move(c));
    }
    std::sort(poset.concepts.begin(), poset.concepts.end(),
              [](const FcaConcept& x, const FcaConcept& y) {
                  if (x.extent.size() != y.extent.size())
                      return x.extent.size() > y.extent.size();
                  return x.extent < y.extent;
              });

    std::map<IndexSet, int> index_of;
    for (size_t i = 0; i < poset.concepts.size(); ++i)
        index_of.emplace(poset.concepts[i].extent, static_cast<int>(i));

    for (size_t a = 0; a < ctx.attributes.size(); ++a)
        poset.concepts[index_of.at(attr_extent[a])].reduced_intent.push_back(
            static_cast<int>(a));
    for (size_t o = 0; o < ctx.objects.size(); ++o)
        poset.concepts[index_of.at(obj_extent[o])].reduced_extent.push_back(
            static_cast<int>(o));

    size_t n = poset.concepts.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j)
                below[i][j] = strict_subset(poset.concepts[i].extent,
                                            poset.concepts[j].extent);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (size_t k = 0; k < n && cover; ++k)
                if (below[i][k] && below[k][j]) cover = false;
            if (cover)
                poset.covers.emplace_back(static_cast<int>(i),
                                          static_cast<int>(j));
        }

    for (size_t i = 0; i < n; ++i)
        if (poset.concepts[i].extent.size() == ctx.objects.size()) {
            poset.top = static_cast<int>(i);
            break;
        }
    return poset;
}

namespace {

json labels_of(const IndexSet& set, const std::vector<std::string>& labels) {
    json out = json::array();
    for (int i : set) out.push_back(labels[i]);
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

std::string join_labels(const IndexSet& set,
                        const std::vector<std::string>& labels) {
    std::string out;
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += labels[set[i]];
    }
    return out;
}

}  // namespace

json context_to_json(const FormalContext& ctx) {
    json doc;
    doc["objects"] = ctx.objects;
    doc["attributes"] = ctx.attributes;
    json rows = json::array();
    for (const auto& row : ctx.incidence) {
        std::string bits(row.size(), '0');
        for (size_t a = 0; a < row.size(); ++a)
            if (row[a]) bits[a] = '1';
        rows.push_back(bits);
    }
    doc["incidence"] = std::move(rows);
    return doc;
}

json poset_to_json(const AocPoset& poset, const FormalContext& ctx) {
    json doc;
    json concepts = json::array();
    for (const FcaConcept& c : poset.concepts) {
        json jc;
        jc["extent"] = labels_of(c.extent, ctx.objects);
        jc["intent"] = labels_of(c.intent, ctx.attributes);
        jc["reduced_extent"] = labels_of(c.reduced_extent, ctx.objects);
        jc["reduced_intent"] = labels_of(c.reduced_intent, ctx.attributes);
        concepts.push_back(std::move(jc));
    }
    doc["concepts"] = std::move(concepts);
    json covers = json::array();
    for (auto [child, parent] : poset.covers)
        covers.push_back(json::array({child, parent}));
    doc["covers"] = std::move(covers);
    if (poset.top)
        doc["top"] = *poset.top;
    else
        doc["top"] = nullptr;
    return doc;
}

std::string poset_to_dot(const AocPoset& poset, const FormalContext& ctx,
                         const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=record, fontname=\"Helvetica\"];\n";
    for (size_t i = 0; i < poset.concepts.size(); ++i) {
        const FcaConcept& c = poset.concepts[i];
        out << "  c" << i << " [label=\"c" << i << " | "
            << dot_escape(join_labels(c.reduced_intent, ctx.attributes))
            << " | "
            << dot_escape(join_labels(c.reduced_extent, ctx.objects))
            << "\"];\n";
    }
    for (auto [child, parent] : poset.covers)
        out << "  c" << child << " -> c" << parent << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ucvaria

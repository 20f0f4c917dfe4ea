#pragma once

// Shared generators and independent oracles for the test suite. The oracles
// deliberately take different routes than the library: the AOC oracle
// enumerates the full concept lattice from object subsets and picks
// introducer concepts by maximality, the block oracle groups use-cases by
// raw occurrence signatures, and the SVD oracle diagonalizes the Gram
// matrix with hand-rolled Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ucvaria/blocks.hpp"
#include "ucvaria/fca.hpp"
#include "ucvaria/variant_model.hpp"

namespace testutil {

inline std::string data_dir() { return UCVARIA_DATA_DIR; }

inline std::string fixture_family() {
    return data_dir() + "/mobile-media.family.json";
}

inline std::string fixture_truth() {
    return data_dir() + "/mobile-media.truth.json";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// ---------------------------------------------------------------- contexts

inline ucvaria::FormalContext make_context(
    const std::vector<std::string>& objects,
    const std::vector<std::string>& attributes,
    const std::vector<std::string>& rows) {
    ucvaria::FormalContext ctx;
    ctx.objects = objects;
    ctx.attributes = attributes;
    for (const std::string& row : rows) {
        std::vector<bool> bits;
        for (char c : row) bits.push_back(c == '1');
        ctx.incidence.push_back(bits);
    }
    return ctx;
}

inline ucvaria::FormalContext random_context(std::mt19937& rng,
                                             int max_objects = 8,
                                             int max_attributes = 15) {
    std::uniform_int_distribution<int> no(1, max_objects);
    std::uniform_int_distribution<int> na(1, max_attributes);
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::bernoulli_distribution bit(density(rng));
    ucvaria::FormalContext ctx;
    int objects = no(rng), attributes = na(rng);
    for (int o = 0; o < objects; ++o)
        ctx.objects.push_back("o" + std::to_string(o));
    for (int a = 0; a < attributes; ++a)
        ctx.attributes.push_back("a" + std::to_string(a));
    ctx.incidence.assign(objects, std::vector<bool>(attributes, false));
    for (int o = 0; o < objects; ++o)
        for (int a = 0; a < attributes; ++a) ctx.incidence[o][a] = bit(rng);
    return ctx;
}

// ------------------------------------------------------- AOC-poset oracle

struct OracleConcept {
    ucvaria::IndexSet extent, intent, reduced_extent, reduced_intent;
};

// Full lattice first (every extent is the closure of some object subset),
// then keep concepts that introduce an attribute (maximal concept whose
// intent holds it) or an object (minimal concept whose extent holds it).
inline std::vector<OracleConcept> aoc_oracle(const ucvaria::FormalContext& ctx) {
    const int no = static_cast<int>(ctx.objects.size());
    const int na = static_cast<int>(ctx.attributes.size());

    auto row_intent = [&](int o) {
        std::set<int> s;
        for (int a = 0; a < na; ++a)
            if (ctx.incidence[o][a]) s.insert(a);
        return s;
    };
    auto derive_intent = [&](const std::set<int>& intent) {
        ucvaria::IndexSet extent;
        for (int o = 0; o < no; ++o) {
            bool all = true;
            for (int a : intent)
                if (!ctx.incidence[o][a]) {
                    all = false;
                    break;
                }
            if (all) extent.push_back(o);
        }
        return extent;
    };

    std::map<ucvaria::IndexSet, std::set<int>> lattice;
    for (unsigned long mask = 0; mask < (1ul << no); ++mask) {
        std::set<int> intent;
        bool first = true;
        for (int o = 0; o < no; ++o) {
            if (!(mask >> o & 1)) continue;
            std::set<int> row = row_intent(o);
            if (first) {
                intent = row;
                first = false;
            } else {
                std::set<int> meet;
                std::set_intersection(intent.begin(), intent.end(), row.begin(),
                                      row.end(),
                                      std::inserter(meet, meet.begin()));
                intent = meet;
            }
        }
        if (first)
            for (int a = 0; a < na; ++a) intent.insert(a);
        lattice.emplace(derive_intent(intent), intent);
    }

    std::vector<ucvaria::IndexSet> extents;
    std::vector<std::set<int>> intents;
    for (auto& [extent, intent] : lattice) {
        extents.push_back(extent);
        intents.push_back(intent);
    }
    const int n = static_cast<int>(extents.size());

    // introducer of attribute a: the unique concept with the largest extent
    // among those whose intent contains a
    std::vector<int> attr_home(na, -1), obj_home(no, -1);
    for (int a = 0; a < na; ++a) {
        int best = -1;
        for (int c = 0; c < n; ++c) {
            if (!intents[c].count(a)) continue;
            if (best == -1 || extents[c].size() > extents[best].size()) best = c;
        }
        attr_home[a] = best;
    }
    // introducer of object o: the unique concept with the smallest extent
    // among those whose extent contains o
    for (int o = 0; o < no; ++o) {
        int best = -1;
        for (int c = 0; c < n; ++c) {
            if (!std::binary_search(extents[c].begin(), extents[c].end(), o))
                continue;
            if (best == -1 || extents[c].size() < extents[best].size()) best = c;
        }
        obj_home[o] = best;
    }

    std::map<int, OracleConcept> picked;
    auto touch = [&](int c) -> OracleConcept& {
        auto [it, inserted] = picked.emplace(c, OracleConcept{});
        if (inserted) {
            it->second.extent = extents[c];
            it->second.intent.assign(intents[c].begin(), intents[c].end());
        }
        return it->second;
    };
    for (int a = 0; a < na; ++a) touch(attr_home[a]).reduced_intent.push_back(a);
    for (int o = 0; o < no; ++o) touch(obj_home[o]).reduced_extent.push_back(o);

    std::vector<OracleConcept> out;
    for (auto& [c, node] : picked) out.push_back(node);
    std::sort(out.begin(), out.end(),
              [](const OracleConcept& x, const OracleConcept& y) {
                  if (x.extent.size() != y.extent.size())
                      return x.extent.size() > y.extent.size();
                  return x.extent < y.extent;
              });
    return out;
}

// -------------------------------------------------- block partition oracle

struct SignaturePartition {
    // canonical use-case names present in every variant
    std::set<std::string> common;
    // occurrence signature (set of variant ids) -> use-case names, for
    // signatures that are proper subsets of the variant set
    std::map<std::set<std::string>, std::set<std::string>> groups;
};

inline SignaturePartition signature_oracle(const ucvaria::VariantFamily& family) {
    std::set<std::string> all_ids;
    for (const auto& v : family.variants) all_ids.insert(v.id);
    std::map<std::string, std::set<std::string>> signature;
    for (const auto& v : family.variants)
        for (const auto& uc : v.use_cases)
            signature[ucvaria::canonical_key(uc.name)].insert(v.id);

    SignaturePartition part;
    for (auto& [name, sig] : signature) {
        if (sig == all_ids)
            part.common.insert(name);
        else
            part.groups[sig].insert(name);
    }
    return part;
}

// ---------------------------------------------------------- random family

inline const std::vector<std::string>& word_pool() {
    static const std::vector<std::string> pool = {
        "crane",  "otter",  "maple",  "ember",  "quartz", "violet",
        "harbor", "meadow", "falcon", "cedar",  "august", "copper",
        "lantern", "mirror", "pepper", "ribbon", "saddle", "timber",
        "velvet", "walnut", "yarrow", "zephyr", "garnet", "hollow",
        "ivory",  "jasper", "kestrel", "lagoon", "marble", "nectar",
    };
    return pool;
}

inline ucvaria::VariantFamily random_family(std::mt19937& rng,
                                            bool with_descriptions = false) {
    const auto& pool = word_pool();
    std::uniform_int_distribution<int> nvariants(2, 10);
    std::uniform_int_distribution<int> nnames(3, 30);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int universe = nnames(rng);
    std::vector<std::string> names;
    for (int i = 0; i < universe; ++i) {
        std::string name = pool[i % pool.size()];
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
        if (i >= static_cast<int>(pool.size()))
            name += " " + pool[(i * 7 + 3) % pool.size()];
        names.push_back(name);
    }

    std::map<std::string, std::string> descriptions;
    if (with_descriptions) {
        for (const std::string& name : names) {
            double roll = unit(rng);
            if (roll < 0.10) {
                descriptions[name] = "";  // exercises name fallback
            } else if (roll < 0.20) {
                descriptions[name] =
                    "the " + pool[static_cast<size_t>(unit(rng) * pool.size()) %
                                  pool.size()] +
                    " of the " +
                    pool[static_cast<size_t>(unit(rng) * pool.size()) %
                         pool.size()];
            } else {
                std::string d = "The user can handle the " + name;
                int extras = 1 + static_cast<int>(unit(rng) * 3);
                for (int e = 0; e < extras; ++e)
                    d += " " + pool[static_cast<size_t>(unit(rng) * pool.size()) %
                                    pool.size()];
                descriptions[name] = d;
            }
        }
    }

    ucvaria::VariantFamily family;
    family.name = "random family";
    const int vcount = nvariants(rng);
    for (int v = 0; v < vcount; ++v) {
        ucvaria::DiagramVariant variant;
        variant.id = "v" + std::to_string(v + 1);
        for (const std::string& name : names) {
            if (unit(rng) < 0.55) {
                ucvaria::UseCase uc;
                uc.name = name;
                uc.description = with_descriptions ? descriptions[name] : "d";
                variant.use_cases.push_back(uc);
            }
        }
        if (variant.use_cases.empty()) {
            ucvaria::UseCase uc;
            uc.name = names[static_cast<size_t>(unit(rng) * names.size()) %
                            names.size()];
            uc.description = with_descriptions ? descriptions[uc.name] : "d";
            variant.use_cases.push_back(uc);
        }
        family.variants.push_back(std::move(variant));
    }
    for (const auto& v : family.variants)
        for (const auto& uc : v.use_cases)
            family.descriptions.emplace(ucvaria::canonical_key(uc.name),
                                        uc.description);
    return family;
}

// ------------------------------------------------------------- SVD oracle

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// descending order.
inline Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd M) {
    const int n = static_cast<int>(M.rows());
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += M(p, q) * M(p, q);
        if (off < 1e-28 * scale * scale) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(M(p, q)) < 1e-300) continue;
                double theta = (M(q, q) - M(p, p)) / (2.0 * M(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                Eigen::MatrixXd J = Eigen::MatrixXd::Identity(n, n);
                J(p, p) = c;
                J(q, q) = c;
                J(p, q) = s;
                J(q, p) = -s;
                M = J.transpose() * M * J;
            }
        }
    }
    Eigen::VectorXd eigenvalues = M.diagonal();
    std::sort(eigenvalues.data(), eigenvalues.data() + n,
              std::greater<double>());
    return eigenvalues;
}

inline Eigen::VectorXd gram_singular_values(const Eigen::MatrixXd& A) {
    Eigen::MatrixXd gram = A.cols() <= A.rows()
                               ? Eigen::MatrixXd(A.transpose() * A)
                               : Eigen::MatrixXd(A * A.transpose());
    Eigen::VectorXd eigenvalues = jacobi_eigenvalues(gram);
    Eigen::VectorXd singular(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
        singular(i) = std::sqrt(std::max(0.0, eigenvalues(i)));
    return singular;
}

inline Eigen::MatrixXd random_matrix(std::mt19937& rng, int max_dim = 30) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    std::bernoulli_distribution sparse(0.3);
    Eigen::MatrixXd A(dim(rng), dim(rng));
    for (Eigen::Index r = 0; r < A.rows(); ++r)
        for (Eigen::Index c = 0; c < A.cols(); ++c)
            A(r, c) = sparse(rng) ? 0.0 : entry(rng);
    if (A.isZero(0.0)) A(0, 0) = 1.0;
    return A;
}

}  // namespace testutil

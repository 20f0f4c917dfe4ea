#pragma once

#include <Eigen/Dense>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ucvaria/blocks.hpp"
#include "ucvaria/text.hpp"
#include "ucvaria/variant_model.hpp"

namespace ucvaria {

enum class Weighting { TermFrequency, TfIdf };

struct LsiConfig {
    std::optional<int> rank;  // nullopt = full (min(t, u))
    double threshold = 0.70;
    bool stemming = true;
    Weighting weighting = Weighting::TermFrequency;
    std::set<std::string> stopwords = default_stopwords();
    // empty description -> match the use-case against its own name
    bool name_fallback = true;
};

// Per-block corpus: one document per use-case (its normalized name), one
// query per use-case description. d = u by construction.
struct Corpus {
    Block block_ref;
    std::vector<std::string> vocabulary;  // sorted stems, size t
    Eigen::MatrixXd documents;            // t x u term counts
    Eigen::MatrixXd queries;              // t x d term counts
    std::vector<std::string> doc_labels;
    std::vector<std::string> query_labels;
    std::vector<bool> fallback;  // query i built from the name, not a description
};

struct TermDocumentMatrix {
    Eigen::MatrixXd values;  // t x u
    Weighting weighting;
};

struct SvdFactors {
    Eigen::MatrixXd U;  // t x k, column-orthonormal
    Eigen::VectorXd S;  // k singular values, nonincreasing
    Eigen::MatrixXd V;  // u x k, column-orthonormal
};

struct SimilarityMatrix {
    Eigen::MatrixXd values;  // d x u; rows = queries, cols = documents
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

Corpus build_corpus(const Block& block, const VariantFamily& family,
                    const LsiConfig& cfg,
                    std::vector<std::string>* warnings = nullptr);

TermDocumentMatrix weight_documents(const Corpus& corpus, Weighting weighting);
// Queries are weighted with document-side idf.
TermDocumentMatrix weight_queries(const Corpus& corpus, Weighting weighting);

// Rank-k truncated SVD (best rank-k Frobenius approximation).
SvdFactors lsi_reduce(const Eigen::MatrixXd& A, int k);

// Count of singular values above the numerical-rank cutoff
// max(rows, cols) * eps * s_max.
int numerical_rank(const Eigen::VectorXd& singular_values, Eigen::Index rows,
                   Eigen::Index cols);

SimilarityMatrix similarity_matrix(const Corpus& corpus, const LsiConfig& cfg,
                                   std::vector<std::string>* warnings = nullptr);

std::string similarity_to_csv(const SimilarityMatrix& sim);

}  // namespace ucvaria

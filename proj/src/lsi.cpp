#include "ucvaria/lsi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "ucvaria/errors.hpp"

namespace ucvaria {

Corpus build_corpus(const Block& block, const VariantFamily& family,
                    const LsiConfig& cfg, std::vector<std::string>* warnings) {
    Corpus corpus;
    corpus.block_ref = block;

    const size_t u = block.use_cases.size();
    std::vector<std::vector<std::string>> doc_terms(u), query_terms(u);
    corpus.fallback.assign(u, false);

    for (size_t j = 0; j < u; ++j) {
        const std::string& name = block.use_cases[j];
        doc_terms[j] = normalize(name, cfg.stopwords, cfg.stemming);

        const std::string& description = description_for(family, name);
        if (description.empty()) {
            if (!cfg.name_fallback)
                throw ValidationError("use-case \"" + name +
                                      "\" has no description");
            corpus.fallback[j] = true;
            query_terms[j] = doc_terms[j];
        } else {
            query_terms[j] = normalize(description, cfg.stopwords, cfg.stemming);
        }
        corpus.doc_labels.push_back(name);
        corpus.query_labels.push_back(name + " des.");
    }

    std::map<std::string, int> term_index;
    for (const auto& terms : doc_terms)
        for (const std::string& term : terms) term_index.emplace(term, 0);
    for (const auto& terms : query_terms)
        for (const std::string& term : terms) term_index.emplace(term, 0);
    int next = 0;
    for (auto& [term, idx] : term_index) {
        idx = next++;
        corpus.vocabulary.push_back(term);
    }

    const Eigen::Index t = static_cast<Eigen::Index>(corpus.vocabulary.size());
    corpus.documents = Eigen::MatrixXd::Zero(t, static_cast<Eigen::Index>(u));
    corpus.queries = Eigen::MatrixXd::Zero(t, static_cast<Eigen::Index>(u));
    for (size_t j = 0; j < u; ++j) {
        for (const std::string& term : doc_terms[j])
            corpus.documents(term_index.at(term), static_cast<Eigen::Index>(j)) += 1.0;
        for (const std::string& term : query_terms[j])
            corpus.queries(term_index.at(term), static_cast<Eigen::Index>(j)) += 1.0;
    }

    if (warnings) {
        for (size_t j = 0; j < u; ++j) {
            if (corpus.documents.rows() == 0 ||
                corpus.documents.col(static_cast<Eigen::Index>(j)).isZero(0.0))
                warnings->push_back("use-case name \"" + block.use_cases[j] +
                                    "\" normalizes to no terms");
        }
    }
    return corpus;
}

namespace {

Eigen::VectorXd document_idf(const Eigen::MatrixXd& documents) {
    const Eigen::Index t = documents.rows();
    const Eigen::Index u = documents.cols();
    Eigen::VectorXd idf(t);
    for (Eigen::Index r = 0; r < t; ++r) {
        int df = 0;
        for (Eigen::Index c = 0; c < u; ++c)
            if (documents(r, c) > 0.0) ++df;
        idf(r) = df == 0 ? 0.0
                         : std::log(static_cast<double>(u) /
                                    static_cast<double>(df));
    }
    return idf;
}

Eigen::MatrixXd apply_weighting(const Eigen::MatrixXd& counts,
                                const Eigen::MatrixXd& df_source,
                                Weighting weighting) {
    if (weighting == Weighting::TermFrequency) return counts;
    return document_idf(df_source).asDiagonal() * counts;
}

}  // namespace

TermDocumentMatrix weight_documents(const Corpus& corpus, Weighting weighting) {
    return {apply_weighting(corpus.documents, corpus.documents, weighting),
            weighting};
}

TermDocumentMatrix weight_queries(const Corpus& corpus, Weighting weighting) {
    return {apply_weighting(corpus.queries, corpus.documents, weighting),
            weighting};
}

SvdFactors lsi_reduce(const Eigen::MatrixXd& A, int k) {
    if (A.size() == 0 || A.isZero(0.0))
        throw DegenerateCorpusError("term matrix is all zero");
    const int kmax = static_cast<int>(std::min(A.rows(), A.cols()));
    if (k < 1 || k > kmax)
        throw ContractError("lsi_reduce: rank " + std::to_string(k) +
                            " out of range [1, " + std::to_string(kmax) + "]");

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU |
                                                 Eigen::ComputeThinV);
    SvdFactors f;
    f.U = svd.matrixU().leftCols(k);
    f.S = svd.singularValues().head(k);
    f.V = svd.matrixV().leftCols(k);
    return f;
}

int numerical_rank(const Eigen::VectorXd& singular_values, Eigen::Index rows,
                   Eigen::Index cols) {
    if (singular_values.size() == 0) return 0;
    const double cutoff = static_cast<double>(std::max(rows, cols)) *
                          std::numeric_limits<double>::epsilon() *
                          singular_values(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < singular_values.size(); ++i)
        if (singular_values(i) > cutoff) ++rank;
    return rank;
}

namespace {

double clamp_cosine(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

SimilarityMatrix similarity_matrix(const Corpus& corpus, const LsiConfig& cfg,
                                   std::vector<std::string>* warnings) {
    const Eigen::Index t = corpus.documents.rows();
    const Eigen::Index u = corpus.documents.cols();
    if (u < 1) throw ContractError("similarity_matrix: empty corpus");

    SimilarityMatrix sim;
    sim.row_labels = corpus.query_labels;
    sim.col_labels = corpus.doc_labels;
    sim.values = Eigen::MatrixXd::Zero(u, u);

    auto warn_zero = [&](const std::string& label) {
        if (warnings)
            warnings->push_back("\"" + label +
                                "\" has a zero term vector; its similarities "
                                "are reported as 0");
    };

    if (u == 1) {
        // LSI is skipped for a single document: plain cosine on raw counts.
        double qn = t == 0 ? 0.0 : corpus.queries.col(0).norm();
        double dn = t == 0 ? 0.0 : corpus.documents.col(0).norm();
        double value;
        if (qn == 0.0 || dn == 0.0) {
            value = corpus.fallback[0] ? 1.0 : 0.0;
            if (!corpus.fallback[0])
                warn_zero(qn == 0.0 ? sim.row_labels[0] : sim.col_labels[0]);
        } else {
            value = corpus.queries.col(0).dot(corpus.documents.col(0)) / (qn * dn);
        }
        sim.values(0, 0) = clamp_cosine(value);
        return sim;
    }

    if (t == 0)
        throw DegenerateCorpusError("block \"" +
                                    (corpus.block_ref.use_cases.empty()
                                         ? std::string("?")
                                         : corpus.block_ref.use_cases.front()) +
                                    " ...\" has an empty vocabulary");

    const Eigen::MatrixXd W = weight_documents(corpus, cfg.weighting).values;
    const Eigen::MatrixXd Q = weight_queries(corpus, cfg.weighting).values;

    const int kmax = static_cast<int>(std::min(t, u));
    int k = cfg.rank ? std::min(*cfg.rank, kmax) : kmax;
    if (k < 1) throw ContractError("similarity_matrix: rank must be >= 1");

    SvdFactors full = lsi_reduce(W, kmax);
    // Columns beyond the numerical rank carry no signal; folding through
    // their near-zero singular values only amplifies noise.
    k = std::min(k, std::max(numerical_rank(full.S, t, u), 1));

    const Eigen::MatrixXd U = full.U.leftCols(k);
    const Eigen::VectorXd S = full.S.head(k);

    // documents in the reduced space: S_k V_k^T (column j equals U_k^T a_j)
    const Eigen::MatrixXd docs = S.asDiagonal() * full.V.leftCols(k).transpose();
    // queries folded in as S_k^-1 U_k^T q, then rescaled by S_k so both
    // sides live on the same axes
    const Eigen::MatrixXd folded =
        S.cwiseInverse().asDiagonal() * (U.transpose() * Q);
    const Eigen::MatrixXd qvecs = S.asDiagonal() * folded;

    constexpr double kRelTol = 1e-12;
    std::vector<double> qnorm(u), dnorm(u);
    std::vector<bool> qzero(u), dzero(u);
    for (Eigen::Index i = 0; i < u; ++i) {
        double raw = Q.col(i).norm();
        qnorm[i] = qvecs.col(i).norm();
        qzero[i] = raw == 0.0 || qnorm[i] <= kRelTol * raw;
        if (qzero[i] && raw == 0.0) warn_zero(sim.row_labels[i]);
    }
    for (Eigen::Index j = 0; j < u; ++j) {
        double raw = W.col(j).norm();
        dnorm[j] = docs.col(j).norm();
        dzero[j] = raw == 0.0 || dnorm[j] <= kRelTol * raw;
        if (dzero[j] && raw == 0.0) warn_zero(sim.col_labels[j]);
    }

    for (Eigen::Index i = 0; i < u; ++i) {
        if (qzero[i]) continue;
        for (Eigen::Index j = 0; j < u; ++j) {
            if (dzero[j]) continue;
            sim.values(i, j) = clamp_cosine(qvecs.col(i).dot(docs.col(j)) /
                                            (qnorm[i] * dnorm[j]));
        }
    }
    return sim;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

}  // namespace

std::string similarity_to_csv(const SimilarityMatrix& sim) {
    std::ostringstream out;
    for (const std::string& label : sim.col_labels)
        out << ',' << csv_cell(label);
    out << '\n';
    for (Eigen::Index i = 0; i < sim.values.rows(); ++i) {
        out << csv_cell(sim.row_labels[i]);
        for (Eigen::Index j = 0; j < sim.values.cols(); ++j)
            out << ',' << format_value(sim.values(i, j));
        out << '\n';
    }
    return out.str();
}

}  // namespace ucvaria

#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ucvaria {

// Porter stemmer, original 1980 rule set. Expects a lowercase ASCII token;
// words of length <= 2 are returned unchanged.
std::string porter_stem(std::string word);

// The pinned English stopword list shipped with the artifact (sorted).
const std::vector<std::string>& default_stopword_list();
const std::set<std::string>& default_stopwords();

// One word per line; blank lines and lines starting with '#' are skipped.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

// Lowercased tokens split on non-alphanumeric boundaries, camelCase humps
// and letter/digit transitions. No filtering.
std::vector<std::string> tokenize(std::string_view text);

// tokenize, drop stopwords and single-character tokens, then stem.
std::vector<std::string> normalize(std::string_view text,
                                   const std::set<std::string>& stopwords,
                                   bool stemming = true);
std::vector<std::string> normalize(std::string_view text);

}  // namespace ucvaria

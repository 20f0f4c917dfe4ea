#include "ucvaria/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

#include "ucvaria/errors.hpp"

namespace ucvaria {

namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// A consonant is any letter other than a,e,i,o,u and other than y preceded
// by a consonant (so "toy" ends in a consonant, "syzygy" alternates).
bool is_cons(const std::string& w, size_t i) {
    char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_cons(w, i - 1);
    return true;
}

// m in the [C](VC)^m[V] decomposition of the stem.
int measure(const std::string& w, size_t len) {
    int m = 0;
    size_t i = 0;
    while (i < len && is_cons(w, i)) ++i;
    for (;;) {
        if (i >= len) return m;
        while (i < len && !is_cons(w, i)) ++i;
        if (i >= len) return m;
        while (i < len && is_cons(w, i)) ++i;
        ++m;
    }
}

bool has_vowel(const std::string& w, size_t len) {
    for (size_t i = 0; i < len; ++i)
        if (!is_cons(w, i)) return true;
    return false;
}

bool ends_double_cons(const std::string& w) {
    size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_cons(w, n - 1);
}

// *o: stem ends cvc where the final consonant is not w, x or y.
bool ends_cvc(const std::string& w, size_t len) {
    if (len < 3) return false;
    if (!(is_cons(w, len - 3) && !is_cons(w, len - 2) && is_cons(w, len - 1)))
        return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; the m>0 test then decides whether that one
// rule fires. No fallback to shorter suffixes.
void apply_rules(std::string& w, const Rule* rules, size_t count) {
    const Rule* best = nullptr;
    for (size_t r = 0; r < count; ++r) {
        if (ends_with(w, rules[r].suffix) &&
            (!best || rules[r].suffix.size() > best->suffix.size()))
            best = &rules[r];
    }
    if (!best) return;
    size_t stem_len = w.size() - best->suffix.size();
    if (measure(w, stem_len) > 0)
        w = w.substr(0, stem_len) + std::string(best->replacement);
}

constexpr Rule kStep2[] = {
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
};

constexpr Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
};

constexpr std::string_view kStep4[] = {
    "al",   "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
    "ment", "ent",  "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive", "ize",
};

}  // namespace

std::string porter_stem(std::string w) {
    for (char& c : w)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (w.size() <= 2) return w;

    // Step 1a
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ss")) {
    } else if (ends_with(w, "s")) {
        w.resize(w.size() - 1);
    }

    // Step 1b
    bool fixup = false;
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    } else if (ends_with(w, "ed")) {
        if (has_vowel(w, w.size() - 2)) {
            w.resize(w.size() - 2);
            fixup = true;
        }
    } else if (ends_with(w, "ing")) {
        if (has_vowel(w, w.size() - 3)) {
            w.resize(w.size() - 3);
            fixup = true;
        }
    }
    if (fixup) {
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
            w += 'e';
        } else if (ends_double_cons(w) && w.back() != 'l' && w.back() != 's' &&
                   w.back() != 'z') {
            w.resize(w.size() - 1);
        } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
            w += 'e';
        }
    }

    // Step 1c
    if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';

    apply_rules(w, kStep2, std::size(kStep2));
    apply_rules(w, kStep3, std::size(kStep3));

    // Step 4 (m>1; "ion" additionally needs a stem ending in s or t)
    {
        std::string_view best;
        for (std::string_view suf : kStep4)
            if (ends_with(w, suf) && suf.size() > best.size()) best = suf;
        if (!best.empty()) {
            size_t stem_len = w.size() - best.size();
            bool ok = measure(w, stem_len) > 1;
            if (best == "ion")
                ok = ok && stem_len > 0 &&
                     (w[stem_len - 1] == 's' || w[stem_len - 1] == 't');
            if (ok) w.resize(stem_len);
        }
    }

    // Step 5a
    if (ends_with(w, "e")) {
        size_t stem_len = w.size() - 1;
        int m = measure(w, stem_len);
        if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) w.resize(stem_len);
    }

    // Step 5b
    if (measure(w, w.size()) > 1 && ends_double_cons(w) && w.back() == 'l')
        w.resize(w.size() - 1);

    return w;
}

namespace {

// Pinned list: articles, conjunctions, prepositions, pronouns, auxiliaries
// and modals. Shipped verbatim as data/stopwords-en.txt.
constexpr std::string_view kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "as", "at", "be", "because", "been", "before",
    "being", "below", "between", "both", "but", "by", "can", "could", "did",
    "do", "does", "doing", "down", "during", "each", "few", "for", "from",
    "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is",
    "it", "its", "itself", "just", "may", "me", "might", "more", "most",
    "must", "my", "myself", "no", "nor", "not", "now", "of", "off", "on",
    "once", "only", "or", "other", "ought", "our", "ours", "ourselves", "out",
    "over", "own", "same", "shall", "she", "should", "so", "some", "such",
    "than", "that", "the", "their", "theirs", "them", "themselves", "then",
    "there", "these", "they", "this", "those", "through", "to", "too",
    "under", "until", "up", "very", "was", "we", "were", "what", "when",
    "where", "which", "while", "who", "whom", "why", "will", "with", "would",
    "you", "your", "yours", "yourself", "yourselves",
};

}  // namespace

const std::vector<std::string>& default_stopword_list() {
    static const std::vector<std::string> list(std::begin(kStopwords),
                                               std::end(kStopwords));
    return list;
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words(std::begin(kStopwords),
                                             std::end(kStopwords));
    return words;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open stopword list: " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                 line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line.empty() || line[0] == '#') continue;
        std::transform(line.begin(), line.end(), line.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        words.insert(line);
    }
    return words;
}

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_lower(c) || is_upper(c) || is_digit(c); }

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (!is_alnum(c)) {
            flush();
            continue;
        }
        if (!cur.empty()) {
            char prev = text[i - 1];
            bool hump = is_upper(c) && is_lower(prev);
            // acronym followed by a word: "XMLFile" -> xml, file
            bool acronym_end = is_upper(prev) && is_upper(c) &&
                               i + 1 < text.size() && is_lower(text[i + 1]);
            bool digit_edge = is_digit(c) != is_digit(prev);
            if (hump || acronym_end || digit_edge) flush();
        }
        cur += is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
    }
    flush();
    return tokens;
}

std::vector<std::string> normalize(std::string_view text,
                                   const std::set<std::string>& stopwords,
                                   bool stemming) {
    std::vector<std::string> terms;
    for (std::string& tok : tokenize(text)) {
        if (tok.size() <= 1) continue;
        if (stopwords.count(tok)) continue;
        terms.push_back(stemming ? porter_stem(std::move(tok)) : std::move(tok));
    }
    return terms;
}

std::vector<std::string> normalize(std::string_view text) {
    return normalize(text, default_stopwords(), true);
}

}  // namespace ucvaria

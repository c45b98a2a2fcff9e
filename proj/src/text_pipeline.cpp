#include "textcat/text_pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "textcat/porter_stemmer.hpp"

namespace textcat {

namespace {

std::string to_lower_ascii(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

const char* smart_words_begin();

}  // namespace

StopwordList::StopwordList(std::vector<std::string> words) {
    for (auto& w : words) words_.insert(to_lower_ascii(std::move(w)));
}

StopwordList StopwordList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        // trim whitespace and CR
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
        line.erase(line.begin(), std::find_if_not(line.begin(), line.end(), is_space));
        line.erase(std::find_if_not(line.rbegin(), line.rend(), is_space).base(), line.end());
        if (!line.empty()) list.words_.insert(to_lower_ascii(std::move(line)));
    }
    return list;
}

const StopwordList& StopwordList::smart_english() {
    static const StopwordList list = [] {
        StopwordList l;
        const char* p = smart_words_begin();
        while (*p) {
            const char* start = p;
            while (*p && *p != '\n') ++p;
            if (p > start) l.words_.emplace(start, p);
            if (*p) ++p;
        }
        return l;
    }();
    return list;
}

bool StopwordList::contains(std::string_view word) const {
    return words_.find(std::string(word)) != words_.end();
}

std::vector<std::string> normalize_tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (c >= 'a' && c <= 'z') {
            current.push_back(c);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordList& stops) {
    std::erase_if(tokens, [&](const std::string& t) { return stops.contains(t); });
    return tokens;
}

std::vector<std::string> run_pipeline(std::string_view text, const StopwordList& stops) {
    std::vector<std::string> tokens = remove_stopwords(normalize_tokenize(text), stops);
    for (auto& t : tokens) t = porter_stem(t);
    return tokens;
}

namespace {

const char* smart_words_begin() {
    static const char kSmartWords[] =
#include "smart_stopwords.inc"
        ;
    return kSmartWords;
}

}  // namespace

}  // namespace textcat

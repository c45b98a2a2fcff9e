#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace textcat {

// Lowercase set of words filtered out before stemming.
class StopwordList {
public:
    StopwordList() = default;
    explicit StopwordList(std::vector<std::string> words);

    // One word per line, '#' starts a comment, blank lines ignored.
    // Entries are lowercased on load.
    static StopwordList load(const std::string& path);

    // The SMART English list compiled into the library.
    static const StopwordList& smart_english();

    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Lowercases, replaces every non-ASCII-letter byte with a space and splits
// on whitespace runs. Empty pieces are dropped, so the result contains only
// non-empty tokens of lowercase a-z.
std::vector<std::string> normalize_tokenize(std::string_view text);

// Order-preserving filter; tokens must already be lowercased.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordList& stops);

// normalize_tokenize -> remove_stopwords -> porter_stem, in that order.
// Stopwords are matched on the surface form, before stemming.
std::vector<std::string> run_pipeline(std::string_view text, const StopwordList& stops);

}  // namespace textcat

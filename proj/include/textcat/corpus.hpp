#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace textcat {

// One labeled document: unique id, at least one category label, non-empty
// text (title + abstract for OHSUMED-derived corpora).
struct Document {
    std::string id;
    std::vector<std::string> labels;  // sorted, unique, non-empty
    std::string text;

    friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
    enum class Split { train, test };

    Split split = Split::train;
    std::vector<Document> documents;        // file order, stable across runs
    std::vector<std::string> categories;    // sorted lexicographically

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Canonical corpus file: UTF-8, LF endings, one document per line,
//   id <TAB> label1;label2;... <TAB> text
// Tabs and newlines are forbidden inside fields. Errors name the offending
// line number. An empty file is an error ("no documents").
Corpus load_canonical(const std::string& path, Corpus::Split split = Corpus::Split::train);

void write_canonical(const Corpus& corpus, const std::string& path);

// Documents per category; a multi-label document counts once per label.
// Categories with no documents are absent from the result.
std::map<std::string, std::size_t> category_counts(const Corpus& corpus);

struct ConvertStats {
    std::size_t records_seen = 0;
    std::size_t emitted = 0;
    std::size_t skipped_no_abstract = 0;
    std::size_t dropped_unmapped = 0;
    std::map<std::string, std::size_t> per_category;
};

// Converts field-tagged OHSUMED/MEDLINE records (.I sequence, .U id,
// .M MeSH headings, .T title, .W abstract) to the canonical format.
// category_map_path is a TSV of `mesh-heading<TAB>category`; headings are
// matched after stripping any /subheading qualifier. Records whose headings
// map to no category are dropped; records without an abstract are skipped.
ConvertStats convert_ohsumed(const std::string& raw_path,
                             const std::string& category_map_path,
                             const std::string& out_path);

}  // namespace textcat

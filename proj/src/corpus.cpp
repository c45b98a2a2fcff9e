#include "textcat/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace textcat {

namespace {

std::string trim(std::string s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), is_space));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), is_space).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::runtime_error line_error(const std::string& path, std::size_t line_no,
                              const std::string& what) {
    std::ostringstream os;
    os << path << ":" << line_no << ": " << what;
    return std::runtime_error(os.str());
}

// Collapses tabs and newlines to single spaces so a field stays one TSV cell.
std::string sanitize_field(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return trim(out);
}

}  // namespace

Corpus load_canonical(const std::string& path, Corpus::Split split) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);

    Corpus corpus;
    corpus.split = split;
    std::unordered_set<std::string> seen_ids;
    std::set<std::string> categories;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 3)
            throw line_error(path, line_no,
                             "expected 3 tab-separated fields, got " +
                                 std::to_string(fields.size()));

        Document doc;
        doc.id = trim(fields[0]);
        if (doc.id.empty()) throw line_error(path, line_no, "empty document id");
        if (!seen_ids.insert(doc.id).second)
            throw line_error(path, line_no, "duplicate document id '" + doc.id + "'");

        std::set<std::string> labels;
        for (const std::string& raw : split(fields[1], ';')) {
            std::string label = trim(raw);
            if (!label.empty()) labels.insert(label);
        }
        if (labels.empty()) throw line_error(path, line_no, "empty label field");
        doc.labels.assign(labels.begin(), labels.end());
        categories.insert(labels.begin(), labels.end());

        doc.text = trim(fields[2]);
        if (doc.text.empty()) throw line_error(path, line_no, "empty text field");

        corpus.documents.push_back(std::move(doc));
    }

    if (corpus.documents.empty())
        throw std::runtime_error(path + ": no documents");

    corpus.categories.assign(categories.begin(), categories.end());
    return corpus;
}

void write_canonical(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write corpus file: " + path);
    for (const Document& doc : corpus.documents) {
        out << sanitize_field(doc.id) << '\t';
        for (std::size_t i = 0; i < doc.labels.size(); ++i) {
            if (i) out << ';';
            out << sanitize_field(doc.labels[i]);
        }
        out << '\t' << sanitize_field(doc.text) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::map<std::string, std::size_t> category_counts(const Corpus& corpus) {
    std::map<std::string, std::size_t> counts;
    for (const Document& doc : corpus.documents)
        for (const std::string& label : doc.labels) ++counts[label];
    return counts;
}

namespace {

struct RawRecord {
    std::string sequence;   // .I
    std::string uid;        // .U
    std::string headings;   // .M
    std::string title;      // .T
    std::string abstract_;  // .W
    bool any_field = false;
};

// MeSH headings carry qualifiers such as "Heart Arrest/*TH"; the category
// map is keyed on the bare heading.
std::string bare_heading(const std::string& heading) {
    std::string h = trim(heading);
    if (auto slash = h.find('/'); slash != std::string::npos) h = h.substr(0, slash);
    return trim(h);
}

}  // namespace

ConvertStats convert_ohsumed(const std::string& raw_path,
                             const std::string& category_map_path,
                             const std::string& out_path) {
    std::ifstream map_in(category_map_path);
    if (!map_in) throw std::runtime_error("cannot open category map: " + category_map_path);
    std::unordered_map<std::string, std::string> heading_to_category;
    std::string line;
    std::size_t map_line_no = 0;
    while (std::getline(map_in, line)) {
        ++map_line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 2)
            throw line_error(category_map_path, map_line_no,
                             "expected `heading<TAB>category`");
        heading_to_category[trim(fields[0])] = trim(fields[1]);
    }
    if (heading_to_category.empty())
        throw std::runtime_error(category_map_path + ": empty category map");

    std::ifstream in(raw_path);
    if (!in) throw std::runtime_error("cannot open raw file: " + raw_path);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);

    ConvertStats stats;
    std::unordered_set<std::string> seen_ids;

    RawRecord rec;
    auto flush_record = [&]() {
        if (!rec.any_field) return;
        ++stats.records_seen;
        if (trim(rec.abstract_).empty()) {
            ++stats.skipped_no_abstract;
            rec = RawRecord{};
            return;
        }
        std::set<std::string> labels;
        for (const std::string& h : split(rec.headings, ';')) {
            std::string heading = bare_heading(h);
            if (heading.empty()) continue;
            if (auto it = heading_to_category.find(heading); it != heading_to_category.end())
                labels.insert(it->second);
        }
        if (labels.empty()) {
            ++stats.dropped_unmapped;
            rec = RawRecord{};
            return;
        }
        std::string id = trim(rec.uid);
        if (id.empty()) id = trim(rec.sequence);
        if (id.empty() || !seen_ids.insert(id).second) {
            // fall back to a synthetic id that stays unique
            id = "rec" + std::to_string(stats.records_seen);
            seen_ids.insert(id);
        }
        std::string text = trim(rec.title);
        if (!text.empty()) text += ' ';
        text += trim(rec.abstract_);

        out << sanitize_field(id) << '\t';
        bool first = true;
        for (const std::string& label : labels) {
            if (!first) out << ';';
            out << sanitize_field(label);
            ++stats.per_category[label];
            first = false;
        }
        out << '\t' << sanitize_field(text) << '\n';
        ++stats.emitted;
        rec = RawRecord{};
    };

    std::string* current_field = nullptr;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() >= 2 && line[0] == '.' && line[1] >= 'A' && line[1] <= 'Z') {
            char tag = line[1];
            if (tag == 'I') {
                flush_record();
                rec.sequence = trim(line.substr(2));
                rec.any_field = true;
                current_field = nullptr;
                continue;
            }
            rec.any_field = true;
            switch (tag) {
                case 'U': current_field = &rec.uid; break;
                case 'M': current_field = &rec.headings; break;
                case 'T': current_field = &rec.title; break;
                case 'W': current_field = &rec.abstract_; break;
                default: current_field = nullptr; break;  // .S, .P, .A, ...
            }
            continue;
        }
        if (current_field) {
            if (!current_field->empty()) *current_field += ' ';
            *current_field += line;
        }
    }
    flush_record();

    if (!out) throw std::runtime_error("write failed: " + out_path);
    return stats;
}

}  // namespace textcat

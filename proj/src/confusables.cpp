#include "ethsee/confusables.hpp"

#include <fstream>
#include <sstream>

#include "ethsee/errors.hpp"

namespace ethsee::homograph {

namespace {

const std::vector<char32_t> kNoTwins;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

void ConfusablesTable::add(const ConfusableEntry& entry) {
    if (auto it = by_twin_.find(entry.twin); it != by_twin_.end()) {
        // Re-adding the same twin just refreshes the script label.
        entries_[it->second].script = entry.script;
        return;
    }
    by_twin_[entry.twin] = entries_.size();
    by_ascii_[entry.ascii].push_back(entry.twin);
    entries_.push_back(entry);
}

ConfusablesTable ConfusablesTable::builtin() {
    ConfusablesTable t;
    t.add({'a', U'а', "Cyrillic"});
    t.add({'c', U'с', "Cyrillic"});
    t.add({'e', U'е', "Cyrillic"});
    t.add({'o', U'о', "Cyrillic"});
    t.add({'A', U'А', "Cyrillic"});
    t.add({'C', U'С', "Cyrillic"});
    t.add({'E', U'Е', "Cyrillic"});
    t.add({'O', U'О', "Cyrillic"});
    t.add({'T', U'Т', "Cyrillic"});
    return t;
}

ConfusablesTable ConfusablesTable::parse(std::string_view text) {
    ConfusablesTable table = builtin();
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view line =
            end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
        ++line_no;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;

        std::string_view row = trim(line);
        if (row.empty() || row.front() == '#') continue;

        size_t tab1 = row.find('\t');
        size_t tab2 = tab1 == std::string_view::npos ? std::string_view::npos : row.find('\t', tab1 + 1);
        if (tab1 == std::string_view::npos || tab2 == std::string_view::npos)
            throw ParseError("confusables row needs 3 tab-separated columns (line " +
                                 std::to_string(line_no) + ")",
                             line_no);

        std::string_view ascii_col = trim(row.substr(0, tab1));
        std::string_view code_col = trim(row.substr(tab1 + 1, tab2 - tab1 - 1));
        std::string_view script_col = trim(row.substr(tab2 + 1));

        if (ascii_col.size() != 1 || static_cast<unsigned char>(ascii_col[0]) > 0x7e ||
            static_cast<unsigned char>(ascii_col[0]) < 0x21)
            throw ParseError("first column must be one printable ASCII character (line " +
                                 std::to_string(line_no) + ")",
                             line_no);
        if (code_col.size() < 3 || (code_col.substr(0, 2) != "U+" && code_col.substr(0, 2) != "u+"))
            throw ParseError("second column must look like U+XXXX (line " + std::to_string(line_no) + ")",
                             line_no);
        char32_t cp = 0;
        for (char c : code_col.substr(2)) {
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
            else
                throw ParseError("bad codepoint in confusables row (line " + std::to_string(line_no) + ")",
                                 line_no);
            cp = cp * 16 + static_cast<char32_t>(v);
        }
        if (cp <= 0x7f)
            throw ParseError("twin codepoint must be non-ASCII (line " + std::to_string(line_no) + ")",
                             line_no);
        table.add({ascii_col[0], cp, std::string(script_col)});
    }
    return table;
}

ConfusablesTable ConfusablesTable::load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot open confusables file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const std::vector<char32_t>& ConfusablesTable::twins_of(char ascii) const {
    auto it = by_ascii_.find(ascii);
    return it == by_ascii_.end() ? kNoTwins : it->second;
}

std::optional<char> ConfusablesTable::ascii_of(char32_t twin) const {
    auto it = by_twin_.find(twin);
    if (it == by_twin_.end()) return std::nullopt;
    return entries_[it->second].ascii;
}

bool ConfusablesTable::is_twin(char32_t codepoint) const {
    return by_twin_.count(codepoint) > 0;
}

std::optional<std::string> ConfusablesTable::script_of(char32_t twin) const {
    auto it = by_twin_.find(twin);
    if (it == by_twin_.end()) return std::nullopt;
    return entries_[it->second].script;
}

}  // namespace ethsee::homograph

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ethsee::homograph {

struct ConfusableEntry {
    char ascii;           // printable ASCII partner
    char32_t twin;        // visually identical non-ASCII codepoint
    std::string script;   // e.g. "Cyrillic"
};

/// Bidirectional ASCII <-> look-alike table. Immutable once built; safe to
/// share across scanning threads.
class ConfusablesTable {
public:
    /// The Latin/Cyrillic pairs exercised by the attack patterns this tool
    /// targets (o, a, c, e and their uppercase relatives plus T). Broader
    /// coverage belongs in a data file, not in code.
    static ConfusablesTable builtin();

    /// Parses `ascii<TAB>U+XXXX<TAB>script` rows (# comments, blank lines ok)
    /// and merges them over the builtin set. Throws ParseError carrying the
    /// offending line number.
    static ConfusablesTable load(const std::filesystem::path& file);
    static ConfusablesTable parse(std::string_view text);

    void add(const ConfusableEntry& entry);

    const std::vector<char32_t>& twins_of(char ascii) const;
    std::optional<char> ascii_of(char32_t twin) const;
    bool is_twin(char32_t codepoint) const;
    std::optional<std::string> script_of(char32_t twin) const;
    size_t size() const { return entries_.size(); }
    const std::vector<ConfusableEntry>& entries() const { return entries_; }

private:
    std::vector<ConfusableEntry> entries_;
    std::map<char, std::vector<char32_t>> by_ascii_;
    std::map<char32_t, size_t> by_twin_;
};

}  // namespace ethsee::homograph

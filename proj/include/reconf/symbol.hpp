#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reconf {

/// Interned alphabet element. Ids follow the byte-lexicographic order of the
/// display names within the owning Alphabet.
struct Symbol {
    std::uint32_t id = 0;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

class Alphabet {
public:
    Alphabet() = default;

    /// Sorts and interns the names. Duplicates, empty names and names with
    /// whitespace are rejected.
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    bool contains(Symbol s) const { return s.id < names_.size(); }

    Symbol at(std::string_view name) const;
    std::optional<Symbol> find(std::string_view name) const;
    const std::string& name(Symbol s) const;
    const std::vector<std::string>& names() const { return names_; }

    std::vector<Symbol> symbols() const;

    /// Whitespace-separated tokens to a word; unknown tokens throw.
    Word parse_word(std::string_view text) const;
    std::string render(const Word& w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// Re-interns a word from one alphabet into another by display name.
Word translate_word(const Word& w, const Alphabet& from, const Alphabet& to);

std::vector<std::string> split_tokens(std::string_view text);

} // namespace reconf

#include "reconf/symbol.hpp"

#include "reconf/error.hpp"

#include <algorithm>
#include <cctype>

namespace reconf {

namespace {

bool has_whitespace(std::string_view s)
{
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names))
{
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto& n = names_[i];
        if (n.empty() || has_whitespace(n))
            throw ValidationError("invalid symbol name '" + n + "'");
        if (i > 0 && names_[i - 1] == n)
            throw ValidationError("duplicate symbol '" + n + "' in alphabet");
        index_.emplace(n, static_cast<std::uint32_t>(i));
    }
}

Symbol Alphabet::at(std::string_view name) const
{
    if (auto s = find(name))
        return *s;
    throw ValidationError("unknown symbol '" + std::string(name) + "'");
}

std::optional<Symbol> Alphabet::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return Symbol{it->second};
}

const std::string& Alphabet::name(Symbol s) const
{
    if (!contains(s))
        throw ValidationError("symbol id " + std::to_string(s.id) + " outside alphabet");
    return names_[s.id];
}

std::vector<Symbol> Alphabet::symbols() const
{
    std::vector<Symbol> out;
    out.reserve(names_.size());
    for (std::uint32_t i = 0; i < names_.size(); ++i)
        out.push_back(Symbol{i});
    return out;
}

Word Alphabet::parse_word(std::string_view text) const
{
    Word w;
    for (const auto& tok : split_tokens(text))
        w.push_back(at(tok));
    return w;
}

std::string Alphabet::render(const Word& w) const
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += name(w[i]);
    }
    return out;
}

Word translate_word(const Word& w, const Alphabet& from, const Alphabet& to)
{
    Word out;
    out.reserve(w.size());
    for (auto s : w)
        out.push_back(to.at(from.name(s)));
    return out;
}

std::vector<std::string> split_tokens(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            out.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace reconf

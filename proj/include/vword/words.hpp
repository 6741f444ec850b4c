#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vword {

/// A generator letter: a base name with an inversion flag.
struct GenSymbol {
    std::string base;
    bool inverted = false;

    friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

using GroupWord = std::vector<GenSymbol>;

GenSymbol inverse_symbol(const GenSymbol& s);

/// Reversed word with every letter inverted.
GroupWord inverse_word(const GroupWord& w);

/// Word-file spelling: "b" for a generator, "B" for its inverse. Falls back
/// to the token spelling for bases longer than one letter.
std::string to_letter(const GenSymbol& s);

/// Command-line spelling: a trailing '-' marks the inverse ("g-").
std::string to_token(const GenSymbol& s);

/// Accepts both spellings.
GenSymbol parse_symbol(std::string_view token);

/// Space-separated letters; the empty word is the literal "1".
std::string render_word(const GroupWord& w);

/// Whitespace-separated letters in either spelling; "1" is the empty word.
GroupWord parse_word(std::string_view text);

}  // namespace vword

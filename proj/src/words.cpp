#include "vword/words.hpp"

#include <cctype>
#include <sstream>

#include "vword/errors.hpp"

namespace vword {

GenSymbol inverse_symbol(const GenSymbol& s) { return {s.base, !s.inverted}; }

GroupWord inverse_word(const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_symbol(*it));
    return out;
}

std::string to_letter(const GenSymbol& s) {
    if (s.base.size() == 1 && std::islower(static_cast<unsigned char>(s.base[0])))
        return s.inverted ? std::string(1, static_cast<char>(std::toupper(
                                               static_cast<unsigned char>(s.base[0]))))
                          : s.base;
    return to_token(s);
}

std::string to_token(const GenSymbol& s) { return s.inverted ? s.base + "-" : s.base; }

GenSymbol parse_symbol(std::string_view token) {
    if (token.empty()) throw ParseError("empty generator token");
    if (token.size() == 1 && std::isupper(static_cast<unsigned char>(token[0])))
        return {std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])))),
                true};
    if (token.back() == '-') {
        if (token.size() == 1) throw ParseError("generator token '-' has no name");
        return {std::string(token.substr(0, token.size() - 1)), true};
    }
    return {std::string(token), false};
}

std::string render_word(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& s : w) {
        if (!out.empty()) out += ' ';
        out += to_letter(s);
    }
    return out;
}

GroupWord parse_word(std::string_view text) {
    GroupWord out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "1") continue;  // identity letter contributes nothing
        out.push_back(parse_symbol(token));
    }
    return out;
}

}  // namespace vword

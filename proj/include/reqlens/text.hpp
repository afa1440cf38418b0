#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace reqlens {

// All span offsets in this library are counted in Unicode scalar values, not
// bytes. Strings are UTF-8 at the API boundary and decoded where offsets or
// per-character classification matter. Invalid byte sequences decode as
// U+FFFD, one replacement per bad byte, so offsets stay deterministic.
std::u32string utf8_decode(const std::string& text);
std::string utf8_encode(const std::u32string& text);
std::string utf8_encode(char32_t cp);

bool is_space_char(char32_t cp);
bool is_separator_char(char32_t cp); // whitespace or punctuation
char32_t to_lower_char(char32_t cp); // ASCII + Latin-1 case folding

struct Token {
    std::string text;   // lowercased, UTF-8
    std::size_t offset; // scalar-value offset of the first character
};

// Project tokenizer. Splits on Unicode whitespace and punctuation, lowercases,
// and drops tokens that contain no letter or digit (so "!!" or "++" vanish
// while "c++" survives as "c"). Deterministic; no locale involved.
std::vector<std::string> tokenize(const std::string& text);
std::vector<Token> tokenize_with_offsets(const std::string& text);
std::vector<Token> tokenize_with_offsets(const std::u32string& text);

} // namespace reqlens

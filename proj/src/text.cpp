#include "reqlens/text.hpp"

#include <array>

namespace reqlens {

std::u32string utf8_decode(const std::string& text) {
    std::u32string out;
    out.reserve(text.size());
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        unsigned char b = s[i];
        if (b < 0x80) {
            out.push_back(b);
            ++i;
            continue;
        }
        int len = 0;
        char32_t cp = 0;
        if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp = b & 0x1F;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp = b & 0x0F;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp = b & 0x07;
        } else {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            if ((s[i + k] & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (s[i + k] & 0x3F);
        }
        // reject overlong forms and surrogates
        if (ok) {
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
                (cp >= 0xD800 && cp <= 0xDFFF)) {
                ok = false;
            }
        }
        if (!ok) {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string utf8_encode(const std::u32string& text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text)
        out += utf8_encode(cp);
    return out;
}

bool is_space_char(char32_t cp) {
    switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case 0x0B:
    case 0x0C:
    case 0x0085:
    case 0x00A0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200B;
    }
}

namespace {

bool is_ascii_punct(char32_t cp) {
    // graphic, non-alphanumeric ASCII: matches C ispunct in the "C" locale
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

bool is_unicode_punct(char32_t cp) {
    // pragmatic coverage of punctuation blocks seen in chat text
    if (cp >= 0x2010 && cp <= 0x2027) return true;       // dashes, quotes, bullets
    if (cp >= 0x2030 && cp <= 0x205E) return true;       // general punctuation tail
    if (cp >= 0x3001 && cp <= 0x303F) return true;       // CJK punctuation
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true;       // fullwidth forms
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    switch (cp) {
    case 0x00A1:
    case 0x00A7:
    case 0x00AB:
    case 0x00B6:
    case 0x00B7:
    case 0x00BB:
    case 0x00BF:
        return true;
    default:
        return false;
    }
}

bool is_letter_or_digit(char32_t cp) {
    if (cp < 0x80)
        return (cp >= U'0' && cp <= U'9') || (cp >= U'A' && cp <= U'Z') ||
               (cp >= U'a' && cp <= U'z');
    // beyond ASCII anything that is not whitespace/punctuation counts as
    // word material; chat logs carry arbitrary scripts
    return !is_space_char(cp) && !is_unicode_punct(cp);
}

} // namespace

bool is_separator_char(char32_t cp) {
    return is_space_char(cp) || is_ascii_punct(cp) || is_unicode_punct(cp);
}

char32_t to_lower_char(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    return cp;
}

std::vector<Token> tokenize_with_offsets(const std::u32string& text) {
    std::vector<Token> tokens;
    std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        if (is_separator_char(text[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        bool has_word_char = false;
        std::u32string word;
        while (i < n && !is_separator_char(text[i])) {
            has_word_char = has_word_char || is_letter_or_digit(text[i]);
            word.push_back(to_lower_char(text[i]));
            ++i;
        }
        if (has_word_char)
            tokens.push_back(Token{utf8_encode(word), start});
    }
    return tokens;
}

std::vector<Token> tokenize_with_offsets(const std::string& text) {
    return tokenize_with_offsets(utf8_decode(text));
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    for (auto& t : tokenize_with_offsets(text))
        out.push_back(std::move(t.text));
    return out;
}

} // namespace reqlens

#include "booksuit/text.hpp"

#include <cctype>

namespace booksuit {

char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        const char32_t cp = ((b0 & 0x1Fu) << 6) |
                            (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        i += 2;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        const char32_t cp = ((b0 & 0x0Fu) << 12) |
                            ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6) |
                            (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        i += 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        const char32_t cp = ((b0 & 0x07u) << 18) |
                            ((static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12) |
                            ((static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6) |
                            (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        i += 4;
        return cp;
    }
    ++i;
    return 0xFFFD;
}

void append_utf8(std::string& out, char32_t cp) {
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
}

bool is_unicode_space(char32_t cp) {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\r':
        case 0x0B: case 0x0C:       // vertical tab, form feed
        case 0x85:                  // next line
        case 0xA0:                  // no-break space
        case 0x1680:                // ogham space mark
        case 0x2028: case 0x2029:   // line / paragraph separator
        case 0x202F:                // narrow no-break space
        case 0x205F:                // medium mathematical space
        case 0x3000:                // ideographic space
        case 0xFEFF:                // BOM / zero-width no-break space
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200B; // en quad .. zero-width space
    }
}

bool is_word_letter(char32_t cp) {
    if (cp < 0x80)
        return std::isalpha(static_cast<int>(cp)) != 0;
    if (cp == 0xD7 || cp == 0xF7) // multiplication / division signs
        return false;
    return (cp >= 0xC0 && cp <= 0x24F) || // Latin-1 supplement + Latin extended A/B
           (cp >= 0x1E00 && cp <= 0x1EFF); // Latin extended additional
}

bool is_ascii_upper(char ch) {
    return ch >= 'A' && ch <= 'Z';
}

bool is_ascii_digit(char ch) {
    return ch >= '0' && ch <= '9';
}

char32_t to_lower_cp(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z')
        return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 0x20;
    return cp;
}

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        append_utf8(out, to_lower_cp(decode_utf8(s, i)));
    }
    return out;
}

bool is_all_caps(std::string_view token) {
    bool has_alpha = false;
    for (const char ch : token) {
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            has_alpha = true;
            if (!is_ascii_upper(ch))
                return false;
        }
    }
    return has_alpha;
}

std::string normalize_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < text.size()) {
        const std::size_t start = i;
        const char32_t cp = decode_utf8(text, i);
        if (is_unicode_space(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.append(text.substr(start, i - start));
        }
    }
    return out;
}

} // namespace booksuit

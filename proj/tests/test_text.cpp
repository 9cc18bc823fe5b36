#include <doctest.h>

#include "booksuit/rng.hpp"
#include "booksuit/text.hpp"

using namespace booksuit;

TEST_CASE("normalize_whitespace collapses runs to single spaces") {
    CHECK(normalize_whitespace("too   many    spaces") == "too many spaces");
    CHECK(normalize_whitespace("a\n\n b\tc ") == "a b c");
    CHECK(normalize_whitespace("") == "");
    CHECK(normalize_whitespace("   ") == "");
    CHECK(normalize_whitespace("x") == "x");
    // non-breaking space and line separator count as whitespace
    CHECK(normalize_whitespace("a\xC2\xA0\xC2\xA0""b") == "a b");
    CHECK(normalize_whitespace("a\xE2\x80\xA8""b") == "a b");
}

TEST_CASE("normalize_whitespace keeps non-space bytes identical") {
    const std::string text = "caf\xC3\xA9  au\tlait \xE2\x80\x94 2,50";
    const std::string out = normalize_whitespace(text);
    CHECK(out == "caf\xC3\xA9 au lait \xE2\x80\x94 2,50");
}

TEST_CASE("normalize_whitespace is idempotent on random strings") {
    Rng rng(2024);
    const char32_t alphabet[] = {U'a', U'b', U'Z', U'.', U'!', U' ', U'\t', U'\n',
                                 0xA0, 0x2003, 0xE9, 0x2014, U'9'};
    for (int trial = 0; trial < 200; ++trial) {
        std::string s;
        const int len = static_cast<int>(rng.next_index(40));
        for (int i = 0; i < len; ++i)
            append_utf8(s, alphabet[rng.next_index(std::size(alphabet))]);
        const std::string once = normalize_whitespace(s);
        CHECK(normalize_whitespace(once) == once);
    }
}

TEST_CASE("case utilities") {
    CHECK(to_lower("Don'T StOp") == "don't stop");
    CHECK(to_lower("CAF\xC3\x89") == "caf\xC3\xA9"); // É -> é
    CHECK(is_all_caps("VADER"));
    CHECK(is_all_caps("A"));
    CHECK_FALSE(is_all_caps("Vader"));
    CHECK_FALSE(is_all_caps("123")); // no letters
    CHECK(is_all_caps("GREAT!"));
}

#include "gt/word.hpp"

#include <algorithm>
#include <cctype>

#include "gt/errors.hpp"

namespace gt {

std::strong_ordering letters_order(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_key(a[i]) <=> letter_key(b[i]);
    return std::strong_ordering::equal;
}

GroupWord reduce_word(GroupWord w) {
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    for (Letter l : w.letters) {
        if (l == 0) throw InputError("zero letter in word");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    w.letters = std::move(out);
    return w;
}

GroupWord group_multiply(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return reduce_word(std::move(r));
}

GroupWord group_invert(const GroupWord& w) {
    GroupWord r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

int max_index(const GroupWord& w) {
    int m = 0;
    for (Letter l : w.letters) m = std::max(m, std::abs(l));
    return m;
}

CyclicClass cyclic_canonical(const GroupWord& w) {
    GroupWord r = reduce_word(w);
    // Cyclic reduction: strip conjugating letters from the ends.
    std::size_t lo = 0, hi = r.letters.size();
    while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    std::vector<Letter> v(r.letters.begin() + lo, r.letters.begin() + hi);
    if (v.empty()) return CyclicClass{};
    // Minimal rotation in letter order; n is small throughout, O(n^2) is fine.
    std::size_t n = v.size(), best = 0;
    auto rot_less = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) {
            Letter la = v[(a + i) % n], lb = v[(b + i) % n];
            if (la != lb) return letter_less(la, lb);
        }
        return false;
    };
    for (std::size_t c = 1; c < n; ++c)
        if (rot_less(c, best)) best = c;
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(v[(best + i) % n]);
    return CyclicClass{GroupWord{std::move(out)}};
}

ParsedWord parse_word_text(const std::string& text, Alphabet alphabet, int max_index) {
    const char sym = alphabet == Alphabet::group ? 'g' : 'x';
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    ParsedWord result;
    if (begin < end && text[begin] == '|') {
        if (text[end - 1] != '|' || end - begin < 2)
            throw ParseError("unterminated |...| loop form", begin);
        result.cyclic = true;
        ++begin;
        --end;
    }
    std::size_t i = begin;
    auto skip_ws = [&] {
        while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i < end && text[i] == '1') {
        std::size_t j = i + 1;
        while (j < end && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == end) return result;  // the trivial word
        throw ParseError("unexpected token after '1'", j);
    }
    while (i < end) {
        if (text[i] != sym)
            throw ParseError(std::string("expected '") + sym + "<index>'", i);
        std::size_t tok = i++;
        std::size_t digits = i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError("missing generator index", tok);
        long index = std::strtol(text.substr(digits, i - digits).c_str(), nullptr, 10);
        if (index < 1) throw ParseError("generator index must be >= 1", digits);
        if (max_index > 0 && index > max_index)
            throw ParseError("generator index exceeds puncture count", digits);
        long exponent = 1;
        if (i < end && text[i] == '^') {
            std::size_t caret = i++;
            std::size_t num = i;
            if (i < end && (text[i] == '-' || text[i] == '+')) ++i;
            std::size_t expdig = i;
            while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == expdig) throw ParseError("missing exponent", caret);
            exponent = std::strtol(text.substr(num, i - num).c_str(), nullptr, 10);
            if (exponent == 0) throw ParseError("zero exponent", num);
            if (exponent < 0 && alphabet == Alphabet::graded)
                throw ParseError("graded letters have no inverses", num);
        }
        Letter l = exponent < 0 ? -static_cast<Letter>(index) : static_cast<Letter>(index);
        for (long k = 0; k < std::labs(exponent); ++k) result.letters.push_back(l);
        if (i < end && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("expected whitespace between items", i);
        skip_ws();
    }
    if (result.letters.empty() && !result.cyclic && begin == end)
        throw ParseError("empty word (write '1' for the trivial word)", 0);
    return result;
}

std::string format_letters(const std::vector<Letter>& letters, char symbol) {
    if (letters.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        if (!out.empty()) out += ' ';
        out += symbol;
        out += std::to_string(std::abs(letters[i]));
        long run = static_cast<long>(j - i);
        long exponent = letters[i] < 0 ? -run : run;
        if (exponent != 1) out += "^" + std::to_string(exponent);
        i = j;
    }
    return out;
}

std::string format_group_word(const GroupWord& w) { return format_letters(w.letters, 'g'); }

std::string format_cyclic(const CyclicClass& c) {
    return "|" + format_letters(c.rep.letters, 'g') + "|";
}

}  // namespace gt

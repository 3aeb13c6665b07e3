#pragma once
#include <compare>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace gt {

// Letters of the free group on generators g1..gp: +i is gi, -i its inverse.
using Letter = int;

// Total order on letters: index ascending, generator before inverse.
inline std::pair<int, int> letter_key(Letter l) {
    return {std::abs(l), l < 0 ? 1 : 0};
}
inline bool letter_less(Letter a, Letter b) { return letter_key(a) < letter_key(b); }

// Length-first, then letterwise — fixes iteration order of every stored map.
std::strong_ordering letters_order(const std::vector<Letter>& a, const std::vector<Letter>& b);

struct GroupWord {
    std::vector<Letter> letters;

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    bool operator==(const GroupWord&) const = default;
    std::strong_ordering operator<=>(const GroupWord& o) const {
        return letters_order(letters, o.letters);
    }
};

// Free reduction: cancels adjacent x x^-1 pairs until none remain.
GroupWord reduce_word(GroupWord w);
GroupWord group_multiply(const GroupWord& a, const GroupWord& b);
GroupWord group_invert(const GroupWord& w);

// Largest generator index used (0 for the empty word).
int max_index(const GroupWord& w);

// Conjugacy class of a loop, stored as the canonical representative:
// cyclically reduced, then the rotation minimal in letter order.
struct CyclicClass {
    GroupWord rep;

    bool empty() const { return rep.empty(); }
    std::size_t size() const { return rep.size(); }
    bool operator==(const CyclicClass&) const = default;
    std::strong_ordering operator<=>(const CyclicClass&) const = default;
};

CyclicClass cyclic_canonical(const GroupWord& w);

// ---- text grammar -------------------------------------------------------
//
//   word    := "1" | item (" " item)*
//   item    := sym index ("^" exponent)?      e.g.  g2, g1^-3, x2^2
//
// The group alphabet uses symbol 'g' and allows negative exponents; the
// graded alphabet uses 'x' and does not. A word enclosed in |...| denotes a
// loop class; parse_word_text reports which form it saw.

enum class Alphabet { group, graded };

struct ParsedWord {
    std::vector<Letter> letters;
    bool cyclic = false;  // input was wrapped in |...|
};

// max_index > 0 bounds the allowed generator index (CLI passes p).
ParsedWord parse_word_text(const std::string& text, Alphabet alphabet, int max_index = 0);

std::string format_letters(const std::vector<Letter>& letters, char symbol);
std::string format_group_word(const GroupWord& w);  // "1", "g1 g2^-1"
std::string format_cyclic(const CyclicClass& c);    // "|1|", "|g1 g2|"

}  // namespace gt

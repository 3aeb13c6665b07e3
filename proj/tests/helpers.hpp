#pragma once
#include <random>
#include <vector>

#include "gt/combo.hpp"
#include "gt/word.hpp"

namespace gt::testing {

// Uniform random freely-reduced word of exactly the given length.
inline GroupWord random_reduced_word(std::mt19937& rng, int length, int punctures) {
    std::vector<Letter> letters;
    std::uniform_int_distribution<int> pick(0, 2 * punctures - 1);
    while (static_cast<int>(letters.size()) < length) {
        int r = pick(rng);
        Letter l = r < punctures ? r + 1 : -(r - punctures + 1);
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return GroupWord{letters};
}

// All freely-reduced words of length in [0, max_len] over g1..gp, in
// length-then-letter order.
inline std::vector<GroupWord> all_reduced_words(int max_len, int punctures) {
    std::vector<GroupWord> out{GroupWord{}};
    std::vector<GroupWord> layer{GroupWord{}};
    std::vector<Letter> alphabet;
    for (int i = 1; i <= punctures; ++i) {
        alphabet.push_back(i);
        alphabet.push_back(-i);
    }
    for (int len = 1; len <= max_len; ++len) {
        std::vector<GroupWord> next;
        for (const auto& w : layer)
            for (Letter l : alphabet) {
                if (!w.letters.empty() && w.letters.back() == -l) continue;
                GroupWord e = w;
                e.letters.push_back(l);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// The loop-class expansion of the product of (g_{l} - 1) over the letters:
// sum over letter subsets, sign by the number of dropped letters.  Its
// exponential expansion starts exactly in degree = number of letters, with
// the trace of the product of the (signed) letters as leading term.
inline LoopCombo pairing_combo(const std::vector<Letter>& letters) {
    LoopCombo out;
    std::size_t n = letters.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        GroupWord sub;
        int dropped = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i))
                sub.letters.push_back(letters[i]);
            else
                ++dropped;
        }
        out.add(cyclic_canonical(sub), Coefficient(Rational(dropped % 2 ? -1 : 1)));
    }
    return out;
}

// All monomial words (positive letters only) of length in [0, max_len].
inline std::vector<GroupWord> all_monomials(int max_len, int letters) {
    std::vector<GroupWord> out{GroupWord{}};
    std::vector<GroupWord> layer{GroupWord{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<GroupWord> next;
        for (const auto& w : layer)
            for (int l = 1; l <= letters; ++l) {
                GroupWord e = w;
                e.letters.push_back(l);
                next.push_back(std::move(e));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace gt::testing

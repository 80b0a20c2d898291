#pragma once

// Deterministic pseudorandom words over {x0^+-, x1^+-}.  Uses raw
// mt19937 draws (no std distributions) so sequences are identical on
// every platform.

#include <random>

#include "fsigma/characters.hpp"
#include "fsigma/words.hpp"

namespace fsigma::testing {

class WordSampler {
public:
    explicit WordSampler(std::uint32_t seed) : rng_(seed) {}

    Word next_word(unsigned max_len) {
        unsigned len = 1 + static_cast<unsigned>(rng_() % max_len);
        Word w;
        w.reserve(len);
        for (unsigned i = 0; i < len; ++i) {
            unsigned c = static_cast<unsigned>(rng_() % 4);
            w.push_back({c / 2, c % 2 ? -1 : +1});
        }
        return w;
    }

    Element next_element(unsigned max_len) { return eval_word(next_word(max_len)); }

    // nonzero character with small rational coefficients
    Character next_character() {
        for (;;) {
            Rational a(static_cast<long>(rng_() % 13) - 6, static_cast<long>(rng_() % 4) + 1);
            Rational b(static_cast<long>(rng_() % 13) - 6, static_cast<long>(rng_() % 4) + 1);
            Character c{a, b};
            if (!c.is_zero()) return c;
        }
    }

    std::uint32_t pick(std::uint32_t bound) { return rng_() % bound; }

private:
    std::mt19937 rng_;
};

}  // namespace fsigma::testing

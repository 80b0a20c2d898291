#pragma once

// Independent naive re-implementation of the ball explorer, used as the
// oracle for the fast one: PL maps only, no tree pairs, no canonical
// keys — deduplication and adjacency are quadratic structural
// comparisons of normalized breakpoint lists.

#include <cstddef>
#include <vector>

#include "fsigma/characters.hpp"
#include "fsigma/pl_map.hpp"
#include "fsigma/words.hpp"

namespace fsigma::testing {

struct NaiveBall {
    std::vector<PLMap> elements;
    std::vector<unsigned> length;              // minimal word length per element
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // undirected, a < b
};

inline NaiveBall naive_ball(unsigned radius) {
    const PLMap gens[4] = {generator_map(0), generator_map(1),
                           generator_map(0).inverse(), generator_map(1).inverse()};
    NaiveBall ball;
    ball.elements.push_back(PLMap());
    ball.length.push_back(0);
    std::size_t level_begin = 0;
    for (unsigned len = 1; len <= radius; ++len) {
        std::size_t level_end = ball.elements.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (const PLMap& s : gens) {
                PLMap h = compose(ball.elements[i], s);
                bool known = false;
                for (const PLMap& e : ball.elements) {
                    if (e == h) {
                        known = true;
                        break;
                    }
                }
                if (!known) {
                    ball.elements.push_back(std::move(h));
                    ball.length.push_back(len);
                }
            }
        }
        level_begin = level_end;
    }
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
        for (const PLMap& s : gens) {
            PLMap h = compose(ball.elements[i], s);
            for (std::size_t j = 0; j < ball.elements.size(); ++j) {
                if (ball.elements[j] == h) {
                    if (i < j) ball.edges.emplace_back(i, j);
                    break;
                }
            }
        }
    }
    return ball;
}

// components of {g in B_n : chi(g) >= 0} inside {g in B_N : chi(g) >= 0},
// where N is the radius the ball was built with
inline unsigned naive_sublevel_components(const NaiveBall& ball, unsigned n,
                                          const Character& chi) {
    std::size_t count = ball.elements.size();
    std::vector<char> in_sub(count);
    for (std::size_t i = 0; i < count; ++i)
        in_sub[i] = char_eval(chi, ball.elements[i]) >= 0;

    std::vector<int> comp(count, -1);
    int next = 0;
    for (std::size_t seed = 0; seed < count; ++seed) {
        if (!in_sub[seed] || comp[seed] >= 0) continue;
        std::vector<std::size_t> stack{seed};
        comp[seed] = next;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& [a, b] : ball.edges) {
                std::size_t w;
                if (a == v)
                    w = b;
                else if (b == v)
                    w = a;
                else
                    continue;
                if (in_sub[w] && comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }

    std::vector<char> seen(static_cast<std::size_t>(next));
    unsigned total = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (!in_sub[i] || ball.length[i] > n) continue;
        if (!seen[static_cast<std::size_t>(comp[i])]) {
            seen[static_cast<std::size_t>(comp[i])] = 1;
            ++total;
        }
    }
    return total;
}

}  // namespace fsigma::testing

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsigma/characters.hpp"
#include "fsigma/dyadic.hpp"
#include "fsigma/pl_map.hpp"
#include "fsigma/tree_pair.hpp"
#include "fsigma/words.hpp"

namespace fsigma {

// Raised when an exploration would exceed its vertex budget.  Growth of
// the ball is exponential, so exceeding the budget is an explicit error,
// never a silent truncation.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Finite ball of the Cayley graph of F on {x0^+-, x1^+-}.
//
// Determinism contract: vertices are sorted by canonical key
// (lexicographic byte order), edges by (a,b); two builds of the same
// radius are bit-identical.  Vertices store the endpoint log-slopes, so
// any character value is recoverable as a*ls0 + b*ls1 without touching
// the PL representation.  Edges join g to g*s for the positive generators
// only; the s^-1 directions are the same undirected edges seen from the
// other endpoint.
struct BallGraph {
    struct Vertex {
        std::string key;
        TreePair pair;
        unsigned word_length;
        long ls0;
        long ls1;
    };

    struct Edge {
        std::uint32_t a;
        std::uint32_t b;
        unsigned generator;  // 0 or 1: b = a * x_generator
    };

    unsigned radius = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::unordered_map<std::string, std::uint32_t> index;

    const Vertex* find(const std::string& key) const {
        auto it = index.find(key);
        return it == index.end() ? nullptr : &vertices[it->second];
    }
};

inline constexpr std::size_t kDefaultVertexBudget = 2'000'000;

inline BallGraph build_ball(unsigned radius, std::size_t max_vertices = kDefaultVertexBudget) {
    const TreePair gens[4] = {generator_pair(0), generator_pair(1),
                              inverse(generator_pair(0)), inverse(generator_pair(1))};

    std::vector<BallGraph::Vertex> verts;
    std::unordered_map<std::string, std::uint32_t> seen;
    auto add = [&](TreePair p, unsigned len) {
        std::string key = p.canonical_key();
        if (seen.count(key)) return false;
        if (verts.size() >= max_vertices)
            throw resource_limit_error("ball exceeds vertex budget of " +
                                       std::to_string(max_vertices));
        auto [ls0, ls1] = endpoint_log_slopes(p);
        seen.emplace(key, static_cast<std::uint32_t>(verts.size()));
        verts.push_back({std::move(key), std::move(p), len, ls0, ls1});
        return true;
    };

    add(TreePair(), 0);
    std::size_t level_begin = 0;
    for (unsigned len = 1; len <= radius; ++len) {
        std::size_t level_end = verts.size();
        for (std::size_t v = level_begin; v < level_end; ++v)
            for (const TreePair& s : gens) add(multiply(verts[v].pair, s), len);
        level_begin = level_end;
    }

    BallGraph ball;
    ball.radius = radius;
    std::sort(verts.begin(), verts.end(),
              [](const auto& x, const auto& y) { return x.key < y.key; });
    ball.vertices = std::move(verts);
    for (std::uint32_t i = 0; i < ball.vertices.size(); ++i)
        ball.index.emplace(ball.vertices[i].key, i);

    for (std::uint32_t i = 0; i < ball.vertices.size(); ++i) {
        for (unsigned s = 0; s < 2; ++s) {
            std::string key = multiply(ball.vertices[i].pair, gens[s]).canonical_key();
            auto it = ball.index.find(key);
            if (it != ball.index.end()) ball.edges.push_back({i, it->second, s});
        }
    }
    std::sort(ball.edges.begin(), ball.edges.end(), [](const auto& x, const auto& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return ball;
}

namespace detail {

struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace detail

// Connectivity evidence for the sublevel set {chi >= 0}: how many
// components of B_n `survive` inside B_N.  This is finite-radius
// EVIDENCE about Sigma^1, never a proof; the (n, N) provenance travels
// with the report.
struct ComponentReport {
    unsigned n;
    unsigned N;
    Character chi;
    std::uint64_t sublevel_vertex_count;       // chi >= 0 vertices in B_N
    std::uint32_t components_of_inner_ball;    // components of B_n inside B_N
    std::vector<std::string> representatives;  // normal form of the least vertex each
};

inline ComponentReport sublevel_components(const BallGraph& ball, unsigned n,
                                           const Character& chi) {
    if (chi.is_zero()) throw std::invalid_argument("zero character");
    if (n > ball.radius)
        throw std::invalid_argument("inner radius exceeds the ball radius");

    std::vector<char> in_sub(ball.vertices.size());
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        const auto& v = ball.vertices[i];
        in_sub[i] = char_eval(chi, v.ls0, v.ls1) >= 0;
        count += in_sub[i];
    }

    detail::UnionFind uf(ball.vertices.size());
    for (const auto& e : ball.edges)
        if (in_sub[e.a] && in_sub[e.b]) uf.unite(e.a, e.b);

    // component -> least member index within B_n
    std::unordered_map<std::uint32_t, std::uint32_t> roots;
    for (std::uint32_t i = 0; i < ball.vertices.size(); ++i) {
        if (!in_sub[i] || ball.vertices[i].word_length > n) continue;
        auto [it, fresh] = roots.emplace(uf.find(i), i);
        if (!fresh && i < it->second) it->second = i;
    }

    ComponentReport report{n, ball.radius, chi, count,
                           static_cast<std::uint32_t>(roots.size()), {}};
    std::vector<std::uint32_t> reps;
    reps.reserve(roots.size());
    for (const auto& [root, least] : roots) reps.push_back(least);
    std::sort(reps.begin(), reps.end());
    for (std::uint32_t i : reps)
        report.representatives.push_back(to_string(to_word(normal_form(ball.vertices[i].pair))));
    return report;
}

// Orbit of the endpoint neighborhoods under iteration of t, exhibiting
// the dichotomy that drives the shorter-interval argument: slope < 1 at
// an endpoint pulls the orbit into the endpoint, slope >= 1 keeps it out
// of the neighborhood.
struct OrbitReport {
    Dyadic eps;
    long ls0;
    long ls1;
    std::vector<Dyadic> orbit_low;   // t^n(eps), n = 1..m
    std::vector<Dyadic> orbit_high;  // t^n(1-eps), n = 1..m
    bool low_strictly_decreasing;
    bool low_bounded_below;   // all >= eps
    bool high_strictly_increasing;
    bool high_bounded_above;  // all <= 1-eps
};

inline OrbitReport support_dynamics(const PLMap& t, unsigned iterations) {
    if (t.is_identity()) throw std::invalid_argument("identity has no endpoint dynamics");
    if (iterations < 1) throw std::invalid_argument("need at least one iteration");

    const auto& pts = t.breakpoints();
    const Dyadic& first_break = pts[1].first;
    const Dyadic& last_break = pts[pts.size() - 2].first;
    // largest eps = 2^-k strictly inside the first linear piece and no
    // deeper than the last one
    Dyadic eps(1, 1);
    while (!(eps < first_break && Dyadic(1) - eps >= last_break)) eps = eps.mul_pow2(-1);

    OrbitReport report{eps,  t.log_slope(0), t.log_slope(1), {}, {},
                       true, true,           true,           true};
    Dyadic lo = eps, hi = Dyadic(1) - eps;
    for (unsigned i = 0; i < iterations; ++i) {
        Dyadic next_lo = t.eval(lo), next_hi = t.eval(hi);
        report.low_strictly_decreasing &= next_lo < lo;
        report.low_bounded_below &= next_lo >= eps;
        report.high_strictly_increasing &= next_hi > hi;
        report.high_bounded_above &= next_hi <= Dyadic(1) - eps;
        report.orbit_low.push_back(next_lo);
        report.orbit_high.push_back(next_hi);
        lo = next_lo;
        hi = next_hi;
    }

    bool ok0 = report.ls0 < 0 ? report.low_strictly_decreasing : report.low_bounded_below;
    bool ok1 = report.ls1 < 0 ? report.high_strictly_increasing : report.high_bounded_above;
    if (!ok0 || !ok1)
        throw std::logic_error("endpoint dynamics dichotomy violated — arithmetic bug");
    return report;
}

// Least n >= 0 with x0^-n g x0^n in F(1).  Witnesses that the kernel of
// the slope-at-0 character is the ascending union of the conjugates of
// F(1) by powers of the stable letter.
inline std::optional<unsigned> ascending_union_witness(const PLMap& g, unsigned max_n) {
    if (g.log_slope(0) != 0)
        throw std::invalid_argument("element is not in the kernel of the slope-at-0 character");
    if (max_n < 1) throw std::invalid_argument("need max_n >= 1");
    const PLMap x0 = generator_map(0);
    const PLMap x0inv = x0.inverse();
    PLMap h = g;
    for (unsigned n = 0; n <= max_n; ++n) {
        if (in_F_subgroup(h, 1)) return n;
        h = compose(compose(x0inv, h), x0);
    }
    return std::nullopt;
}

}  // namespace fsigma

#pragma once

// Seeded random instances for the property suites.

#include "hrum/choice.hpp"
#include "hrum/forward.hpp"
#include "hrum/orders.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace hrum::gen {

using Rng = std::mt19937_64;

inline GroundSet letters(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return GroundSet(labels);
}

inline LinearOrder order(std::size_t n, Rng& rng) {
    std::vector<Item> r(n);
    std::iota(r.begin(), r.end(), Item{0});
    std::shuffle(r.begin(), r.end(), rng);
    return LinearOrder(r);
}

/// Exact probability vector of length n. Each entry is zero with probability
/// `zero_chance`; at least one entry is positive.
inline std::vector<Rational> weights(std::size_t n, Rng& rng, double zero_chance = 0.25) {
    std::uniform_int_distribution<long> numer(1, 97);
    std::bernoulli_distribution zero(zero_chance);
    std::vector<long> raw(n, 0);
    long total = 0;
    for (auto& v : raw) {
        v = zero(rng) ? 0 : numer(rng);
        total += v;
    }
    if (total == 0) {
        raw[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 1;
        total = 1;
    }
    std::vector<Rational> w;
    for (long v : raw) {
        Rational q(v, total);
        q.canonicalize();
        w.push_back(q);
    }
    return w;
}

/// Weights concentrated on one or two indices, so that identification is
/// degenerate or paired.
inline std::vector<Rational> sparse_weights(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    std::vector<Rational> w(n, Rational(0));
    const std::size_t a = index(rng);
    const std::size_t b = index(rng);
    if (a == b) {
        w[a] = 1;
    } else {
        Rational q(std::uniform_int_distribution<long>(1, 9)(rng), 10);
        q.canonicalize();
        w[a] = q;
        w[b] = 1 - q;
    }
    return w;
}

/// A valid dataset in which every row is an independent random distribution
/// over its members.
inline StochasticChoice arbitrary(std::size_t n, Rng& rng) {
    std::vector<std::vector<Rational>> rows(std::size_t{1} << n);
    for (Menu::Bits bits = 1; bits < rows.size(); ++bits) {
        const Menu menu = Menu::from_bits(bits);
        const auto members = menu.items();
        const auto w = weights(members.size(), rng, 0.2);
        rows[bits].assign(n, Rational(0));
        for (std::size_t k = 0; k < members.size(); ++k) rows[bits][members[k]] = w[k];
    }
    return StochasticChoice(letters(n), [&](Menu m, Item x) { return rows[m.bits()][x]; });
}

/// Moves a small mass between two members of one random menu of size >= 2.
/// Row sums and nonnegativity are preserved.
inline StochasticChoice perturb(const StochasticChoice& rho, Rng& rng) {
    std::vector<Menu> candidates;
    for (Menu m : rho.menus()) {
        if (m.size() >= 2) candidates.push_back(m);
    }
    const Menu target = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    std::vector<Item> positive;
    for (Item x : target.items()) {
        if (rho.prob(x, target) > 0) positive.push_back(x);
    }
    const Item from = positive[std::uniform_int_distribution<std::size_t>(0, positive.size() - 1)(rng)];
    const auto others = target.without(from).items();
    const Item to = others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)];
    const Rational delta = rho.prob(from, target) / std::uniform_int_distribution<long>(2, 7)(rng);
    return StochasticChoice(rho.ground(), [&](Menu m, Item x) {
        Rational p = rho.prob(x, m);
        if (m == target && x == from) p -= delta;
        if (m == target && x == to) p += delta;
        return p;
    });
}

}  // namespace hrum::gen

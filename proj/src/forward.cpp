#include "hrum/forward.hpp"

#include <stdexcept>

namespace hrum {

namespace {

void require_member(Menu menu, Item x) {
    if (!menu.contains(x)) throw std::invalid_argument("item is not a member of the menu");
}

void require_sizes(const LinearOrder& order, const HarmfulWeights& weights) {
    if (order.size() != weights.size()) throw std::invalid_argument("order and weight vector differ in size");
}

// Worst-ranked member of `menu` strictly above rank j, as a rank; 0 if none.
std::size_t worst_rank_above(const LinearOrder& order, Menu menu, std::size_t j) {
    std::size_t g = 0;
    for (std::size_t r = 1; r < j; ++r) {
        if (menu.contains(order.at(r))) g = r;
    }
    return g;
}

bool has_member_below(const LinearOrder& order, Menu menu, std::size_t j) {
    return !(menu & order.lower_set(j)).empty();
}

// sum of weights[k] for k < m
Rational weight_below(const HarmfulWeights& w, std::size_t m) {
    Rational s = 0;
    for (std::size_t k = 0; k < m && k < w.size(); ++k) s += w[k];
    return s;
}

Rational weight_from(const HarmfulWeights& w, std::size_t m) {
    Rational s = 0;
    for (std::size_t k = m; k < w.size(); ++k) s += w[k];
    return s;
}

}  // namespace

HarmfulWeights::HarmfulWeights(std::vector<Rational> weights, const Tolerance& tolerance) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("weight vector is empty");
    Rational sum = 0;
    for (auto& w : weights_) {
        w.canonicalize();
        if (w < 0) throw std::invalid_argument("negative weight " + to_string(w));
        sum += w;
    }
    if (!tolerance.equal(sum, 1)) throw std::invalid_argument("weights sum to " + to_string(sum) + ", not 1");
}

HarmfulWeights HarmfulWeights::point_mass(std::size_t n, std::size_t index) {
    if (index >= n) throw std::out_of_range("point mass index out of range");
    std::vector<Rational> w(n, Rational(0));
    w[index] = 1;
    return HarmfulWeights(std::move(w));
}

std::size_t HarmfulWeights::max_positive_index() const {
    for (std::size_t i = weights_.size(); i-- > 0;) {
        if (weights_[i] > 0) return i;
    }
    throw std::logic_error("weight vector has no positive entry");
}

GeneralLottery::GeneralLottery(std::map<LinearOrder, Rational> weights, const Tolerance& tolerance) {
    if (weights.empty()) throw std::invalid_argument("lottery has empty support");
    const std::size_t n = weights.begin()->first.size();
    Rational sum = 0;
    for (auto& [order, w] : weights) {
        if (order.size() != n) throw std::invalid_argument("lottery mixes orders over different ground sets");
        w.canonicalize();
        if (w < 0) throw std::invalid_argument("negative lottery weight");
        sum += w;
        if (w > 0) weights_.emplace(order, w);
    }
    if (!tolerance.equal(sum, 1)) throw std::invalid_argument("lottery weights sum to " + to_string(sum) + ", not 1");
    if (weights_.empty()) throw std::invalid_argument("lottery has no positive weight");
}

GeneralLottery to_lottery(const LinearOrder& order, const HarmfulWeights& weights) {
    require_sizes(order, weights);
    std::map<LinearOrder, Rational> m;
    for (std::size_t i = 0; i < weights.size(); ++i) m.emplace(harmful_distortion(order, i), weights[i]);
    return GeneralLottery(std::move(m));
}

Rational choice_prob_direct(const LinearOrder& order, const HarmfulWeights& weights, Menu menu, Item x) {
    require_member(menu, x);
    require_sizes(order, weights);
    Rational p = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (harmful_distortion(order, i).best_in(menu) == x) p += weights[i];
    }
    return p;
}

Rational choice_prob_closed(const LinearOrder& order, const HarmfulWeights& weights, Menu menu, Item x) {
    require_member(menu, x);
    require_sizes(order, weights);
    const std::size_t j = order.rank_of(x);
    const std::size_t g = worst_rank_above(order, menu, j);
    Rational p = weight_below(weights, j);
    if (g != 0) p -= weight_below(weights, g);
    if (!has_member_below(order, menu, j)) p += weight_from(weights, j);
    return p;
}

MenuShape menu_shape(const LinearOrder& order, Menu menu, Item x) {
    require_member(menu, x);
    const std::size_t j = order.rank_of(x);
    const bool above = worst_rank_above(order, menu, j) != 0;
    const bool below = has_member_below(order, menu, j);
    if (above) return below ? MenuShape::AboveAndBelow : MenuShape::AboveOnly;
    return below ? MenuShape::BelowOnly : MenuShape::Alone;
}

Rational choice_prob_by_shape(const LinearOrder& order, const HarmfulWeights& weights, Menu menu, Item x) {
    require_sizes(order, weights);
    const std::size_t j = order.rank_of(x);
    switch (menu_shape(order, menu, x)) {
        case MenuShape::AboveOnly: {
            // distortions g .. n-1
            const std::size_t g = worst_rank_above(order, menu, j);
            return weight_from(weights, g);
        }
        case MenuShape::AboveAndBelow: {
            // distortions g .. j-1
            const std::size_t g = worst_rank_above(order, menu, j);
            return weight_below(weights, j) - weight_below(weights, g);
        }
        case MenuShape::Alone:
            return Rational(1);
        case MenuShape::BelowOnly:
            return weight_below(weights, j);
    }
    throw std::logic_error("unreachable menu shape");
}

StochasticChoice simulate(const GroundSet& ground, const LinearOrder& order, const HarmfulWeights& weights) {
    if (order.size() != ground.size()) throw std::invalid_argument("order and ground set differ in size");
    require_sizes(order, weights);
    Rational total = 0;
    for (auto w : weights.values()) total += w;
    return StochasticChoice(
        ground, [&](Menu menu, Item x) { return choice_prob_closed(order, weights, menu, x); },
        Tolerance(abs(Rational(total - 1))));
}

StochasticChoice simulate_rum(const GroundSet& ground, const GeneralLottery& lottery) {
    if (lottery.order_size() != ground.size()) throw std::invalid_argument("lottery and ground set differ in size");
    Rational total = 0;
    for (const auto& [order, w] : lottery.weights()) total += w;
    return StochasticChoice(
        ground,
        [&](Menu menu, Item x) {
            Rational p = 0;
            for (const auto& [order, w] : lottery.weights()) {
                if (order.best_in(menu) == x) p += w;
            }
            return p;
        },
        Tolerance(abs(Rational(total - 1))));
}

}  // namespace hrum

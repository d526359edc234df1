#pragma once

#include "hrum/choice.hpp"
#include "hrum/orders.hpp"
#include "hrum/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace hrum {

/// Probability vector over the harmful distortions of one preference,
/// indexed by distortion index 0..n-1.
class HarmfulWeights {
public:
    /// Throws std::invalid_argument on an empty vector, a negative weight,
    /// or a total different from one (beyond `tolerance`).
    explicit HarmfulWeights(std::vector<Rational> weights, const Tolerance& tolerance = {});

    static HarmfulWeights point_mass(std::size_t n, std::size_t index);

    std::size_t size() const { return weights_.size(); }
    const Rational& operator[](std::size_t i) const { return weights_.at(i); }
    std::span<const Rational> values() const { return weights_; }

    /// Largest i with a positive weight.
    std::size_t max_positive_index() const;

    bool operator==(const HarmfulWeights&) const = default;

private:
    std::vector<Rational> weights_;
};

/// A finitely supported lottery over linear orders. Zero-weight entries are
/// dropped, so two lotteries are equal iff they are the same distribution.
class GeneralLottery {
public:
    explicit GeneralLottery(std::map<LinearOrder, Rational> weights, const Tolerance& tolerance = {});

    const std::map<LinearOrder, Rational>& weights() const { return weights_; }
    std::size_t order_size() const { return weights_.begin()->first.size(); }

    bool operator==(const GeneralLottery&) const = default;

private:
    std::map<LinearOrder, Rational> weights_;
};

/// The lottery {harmful_distortion(order, i) -> weights[i]}.
GeneralLottery to_lottery(const LinearOrder& order, const HarmfulWeights& weights);

/// Sum of the weights of the distortions that rank x first in `menu`.
/// Throws std::invalid_argument if x is not in `menu`.
Rational choice_prob_direct(const LinearOrder& order, const HarmfulWeights& weights, Menu menu, Item x);

/// Closed form in terms of distortion indices: with j the rank of x and g
/// the rank of the worst member of `menu` ranked above x,
///   sum_{k<j} w_k - [upper part nonempty] sum_{k<g} w_k + [lower part empty] sum_{k>=j} w_k.
Rational choice_prob_closed(const LinearOrder& order, const HarmfulWeights& weights, Menu menu, Item x);

/// Which of the four shapes (members above x present or not, members below
/// x present or not) the pair (menu, x) has.
enum class MenuShape {
    AboveOnly = 1,      // upper part nonempty, lower part empty
    AboveAndBelow = 2,  // both nonempty
    Alone = 3,          // menu is {x}
    BelowOnly = 4,      // upper part empty, lower part nonempty
};

MenuShape menu_shape(const LinearOrder& order, Menu menu, Item x);

/// The closed form specialised per shape; agrees with choice_prob_closed.
Rational choice_prob_by_shape(const LinearOrder& order, const HarmfulWeights& weights, Menu menu, Item x);

/// The full dataset generated by (order, weights).
StochasticChoice simulate(const GroundSet& ground, const LinearOrder& order, const HarmfulWeights& weights);

/// rho(x, A) = total weight of the orders whose best item in A is x.
StochasticChoice simulate_rum(const GroundSet& ground, const GeneralLottery& lottery);

}  // namespace hrum

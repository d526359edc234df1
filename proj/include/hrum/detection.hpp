#pragma once

#include "hrum/choice.hpp"
#include "hrum/orders.hpp"
#include "hrum/rational.hpp"

#include <vector>

namespace hrum {

/// One ordered-composition equality: rho(item, menu) against the value the
/// grand-menu row predicts for the item at `rank`.
struct CompositionCheck {
    Menu menu;
    Item item;
    std::size_t rank;
    Rational observed;   // rho(item, menu)
    Rational predicted;  // from the grand-menu row and the order
    bool holds;
};

struct CompositionWitness {
    LinearOrder order;
    std::vector<CompositionCheck> checks;

    bool composes() const;
};

/// Value the ordered composition of `order` predicts for rho(x_j, A), where
/// x_j is the item at rank j and A contains it:
///   sum_{k<=j} m_k - [A has members above] sum_{k<=g} m_k + [A has none below] sum_{k>j} m_k
/// with m_k = rho(x_k, X) and g the rank of A's worst member above x_j.
Rational predicted_choice_prob(const StochasticChoice& rho, const LinearOrder& order, Menu menu, std::size_t j);

/// Whether `order` composes rho: every equality above holds for every menu
/// and every rank whose item lies in the menu.
bool composes(const StochasticChoice& rho, const LinearOrder& order, const Tolerance& tolerance = {});

/// The full per-(menu, rank) log behind `composes`, menus of size >= 2 only.
CompositionWitness composition_witness(const StochasticChoice& rho, const LinearOrder& order,
                                       const Tolerance& tolerance = {});

/// Every order that composes rho, in lexicographic order. For n >= 3 this is
/// a depth-first search over ranking prefixes: a prefix survives when the
/// equalities for its placed ranks hold, which is decidable from the prefix
/// alone. Smaller ground sets are enumerated exhaustively.
std::vector<LinearOrder> composing_orders(const StochasticChoice& rho, const Tolerance& tolerance = {});

/// Harmful-RUM membership: some order composes rho.
bool is_harmful(const StochasticChoice& rho, const Tolerance& tolerance = {});

}  // namespace hrum

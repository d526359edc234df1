#pragma once

#include "hrum/choice.hpp"
#include "hrum/orders.hpp"

#include <optional>
#include <span>
#include <stdexcept>

namespace hrum {

class NotHarmfulError : public std::runtime_error {
public:
    NotHarmfulError() : std::runtime_error("dataset is not a harmful RUM") {}
};

struct DegreeReport {
    std::size_t degree = 0;
    LinearOrder witness_order;
    /// The rank-based characterisation and the max-index reading of a
    /// justification gave the same value.
    bool method_agreement = false;
};

/// A composing order whose item at rank j has positive grand-menu
/// probability while every item ranked below j has probability zero.
std::optional<LinearOrder> has_jth_ordered_composition(const StochasticChoice& rho, std::size_t j,
                                                       const Tolerance& tolerance = {});
std::optional<LinearOrder> has_jth_ordered_composition(const StochasticChoice& rho,
                                                       std::span<const LinearOrder> composing, std::size_t j);

/// Degree of self-punishment: zero when a single item carries the whole
/// grand menu, otherwise the i for which an (i+1)-th ordered composition
/// exists. Throws NotHarmfulError when no order composes rho.
DegreeReport degree_of_self_punishment(const StochasticChoice& rho, const Tolerance& tolerance = {});
DegreeReport degree_of_self_punishment(const StochasticChoice& rho, std::span<const LinearOrder> composing,
                                       const Tolerance& tolerance = {});

}  // namespace hrum

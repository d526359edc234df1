#include "hrum/degree.hpp"

#include "hrum/detection.hpp"
#include "hrum/identification.hpp"

namespace hrum {

std::optional<LinearOrder> has_jth_ordered_composition(const StochasticChoice& rho,
                                                       std::span<const LinearOrder> composing, std::size_t j) {
    const std::size_t n = rho.size();
    if (j < 1 || j > n) throw std::out_of_range("rank out of range");
    const Menu grand = rho.grand_menu();
    for (const auto& order : composing) {
        if (rho.prob(order.at(j), grand) == 0) continue;
        bool tail_empty = true;
        for (std::size_t l = j + 1; l <= n && tail_empty; ++l) tail_empty = rho.prob(order.at(l), grand) == 0;
        if (tail_empty) return order;
    }
    return std::nullopt;
}

std::optional<LinearOrder> has_jth_ordered_composition(const StochasticChoice& rho, std::size_t j,
                                                       const Tolerance& tolerance) {
    const auto composing = composing_orders(rho, tolerance);
    return has_jth_ordered_composition(rho, composing, j);
}

DegreeReport degree_of_self_punishment(const StochasticChoice& rho, std::span<const LinearOrder> composing,
                                       const Tolerance& tolerance) {
    if (composing.empty()) throw NotHarmfulError();
    const Menu support = support_set(rho);
    const auto justifications = justifications_for(rho, composing, tolerance);

    if (support.size() == 1) {
        std::size_t smallest = rho.size();
        const LinearOrder* witness = nullptr;
        for (const auto& j : justifications) {
            const std::size_t idx = j.weights.max_positive_index();
            if (idx < smallest) {
                smallest = idx;
                witness = &j.order;
            }
        }
        // the order ranking the chosen item first puts all weight on index 0
        return DegreeReport{0, *witness, smallest == 0};
    }

    std::optional<std::size_t> found;
    std::optional<LinearOrder> witness;
    bool unique_rank = true;
    for (std::size_t j = 1; j <= rho.size(); ++j) {
        if (auto order = has_jth_ordered_composition(rho, composing, j)) {
            if (found) unique_rank = false;
            if (!found) {
                found = j - 1;
                witness = std::move(order);
            }
        }
    }
    if (!found) throw std::logic_error("harmful dataset without a j-th ordered composition");

    bool agreement = unique_rank;
    for (const auto& j : justifications) agreement = agreement && j.weights.max_positive_index() == *found;
    return DegreeReport{*found, *witness, agreement};
}

DegreeReport degree_of_self_punishment(const StochasticChoice& rho, const Tolerance& tolerance) {
    const auto composing = composing_orders(rho, tolerance);
    return degree_of_self_punishment(rho, composing, tolerance);
}

}  // namespace hrum

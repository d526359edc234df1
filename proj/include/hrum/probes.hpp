#pragma once

#include "hrum/choice.hpp"
#include "hrum/forward.hpp"
#include "hrum/identification.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hrum {

inline constexpr std::size_t kDefaultRumMaxItems = 5;

class SizeGuardExceeded : public std::runtime_error {
public:
    SizeGuardExceeded(std::size_t n, std::size_t limit)
        : std::runtime_error("ground set has " + std::to_string(n) + " items; the RUM probe is limited to " +
                             std::to_string(limit) + " (raise --max-n)") {}
};

struct RumFeasibility {
    bool feasible = false;
    std::optional<GeneralLottery> witness;  // present when feasible
};

/// Exact RUM rationalizability: a nonnegative weight on each of the n!
/// orders, summing to one, reproducing every rho(x, A). Throws
/// SizeGuardExceeded when n > max_items.
RumFeasibility is_rum(const StochasticChoice& rho, std::size_t max_items = kDefaultRumMaxItems);

/// Correlation index of rho along `order`: the mean of rho(max(A), A) over
/// all menus of size >= 2 other than the pair {top, bottom}, normalised by
/// one less than the number of such menus. Requires n >= 3.
Rational correlation_bound(const StochasticChoice& rho, const LinearOrder& order);

struct CorrelationIndex {
    std::vector<std::pair<LinearOrder, Rational>> per_order;  // lexicographic
    Rational max;
    LinearOrder argmax;
};

/// correlation_bound over every order. Requires n >= 3.
CorrelationIndex correlation_index(const StochasticChoice& rho);

/// Every distortion carrying positive weight is single-peaked with respect
/// to the justification's preference.
bool single_peaked_support(const Justification& justification);

}  // namespace hrum

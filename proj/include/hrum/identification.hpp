#pragma once

#include "hrum/choice.hpp"
#include "hrum/forward.hpp"
#include "hrum/orders.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace hrum {

/// A preference and a distribution over its harmful distortions that
/// together reproduce a dataset.
struct Justification {
    LinearOrder order;
    HarmfulWeights weights;

    bool operator==(const Justification&) const = default;
};

/// Weights read off the grand menu: weight i is rho(x_{i+1}, X) where
/// x_{i+1} is the item at rank i+1 of `order`.
HarmfulWeights weights_from_data(const StochasticChoice& rho, const LinearOrder& order,
                                 const Tolerance& tolerance = {});

/// Every justification of rho, one per composing order, in order of the
/// composing orders. Each is re-simulated and compared against rho; a
/// mismatch throws std::logic_error.
std::vector<Justification> all_justifications(const StochasticChoice& rho, const Tolerance& tolerance = {});

/// Same, from an already computed set of composing orders.
std::vector<Justification> justifications_for(const StochasticChoice& rho, std::span<const LinearOrder> composing,
                                              const Tolerance& tolerance = {});

struct IdentificationClass {
    enum class Kind { Unique, TwoStarPaired, Degenerate, NotHarmful };

    Kind kind = Kind::NotHarmful;
    std::size_t pair_rank = 0;  // TwoStarPaired: rank of the other supported item
    std::size_t count = 0;      // number of justifications

    bool operator==(const IdentificationClass&) const = default;
};

const char* to_string(IdentificationClass::Kind kind);

/// Raised when the uniqueness conditions and the enumerated justification
/// count disagree in exact mode.
class IdentificationMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Identification {
    IdentificationClass cls;
    std::vector<Justification> justifications;
    Menu support;
    /// False only in tolerance mode, when the conditions and the count disagree.
    bool consistent = true;
};

/// Classifies identification from the support size of the grand-menu row and
/// the position of the worst item, then cross-checks against the number of
/// justifications found.
Identification identify(const StochasticChoice& rho, const Tolerance& tolerance = {});
Identification identify(const StochasticChoice& rho, std::span<const LinearOrder> composing,
                        const Tolerance& tolerance = {});

IdentificationClass classify(const StochasticChoice& rho, const Tolerance& tolerance = {});

}  // namespace hrum

#include "hrum/identification.hpp"

#include "hrum/detection.hpp"

#include <algorithm>

namespace hrum {

const char* to_string(IdentificationClass::Kind kind) {
    switch (kind) {
        case IdentificationClass::Kind::Unique: return "Unique";
        case IdentificationClass::Kind::TwoStarPaired: return "TwoStarPaired";
        case IdentificationClass::Kind::Degenerate: return "Degenerate";
        case IdentificationClass::Kind::NotHarmful: return "NotHarmful";
    }
    return "Unknown";
}

HarmfulWeights weights_from_data(const StochasticChoice& rho, const LinearOrder& order, const Tolerance& tolerance) {
    if (order.size() != rho.size()) throw std::invalid_argument("order and dataset differ in size");
    const Menu grand = rho.grand_menu();
    std::vector<Rational> w;
    w.reserve(order.size());
    for (std::size_t rank = 1; rank <= order.size(); ++rank) w.push_back(rho.prob(order.at(rank), grand));
    return HarmfulWeights(std::move(w), tolerance);
}

std::vector<Justification> justifications_for(const StochasticChoice& rho, std::span<const LinearOrder> composing,
                                              const Tolerance& tolerance) {
    std::vector<Justification> out;
    out.reserve(composing.size());
    for (const auto& order : composing) {
        Justification j{order, weights_from_data(rho, order, tolerance)};
        const StochasticChoice replay = simulate(rho.ground(), j.order, j.weights);
        for (Menu menu : rho.menus()) {
            for (Item x : menu.items()) {
                if (!tolerance.equal(replay.prob(x, menu), rho.prob(x, menu))) {
                    throw std::logic_error("composing order " + format_order(rho.ground(), order) +
                                           " does not reproduce menu {" + menu_key(rho.ground(), menu) + "}");
                }
            }
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<Justification> all_justifications(const StochasticChoice& rho, const Tolerance& tolerance) {
    const auto composing = composing_orders(rho, tolerance);
    return justifications_for(rho, composing, tolerance);
}

namespace {

// The two justifications of the paired case must be (order, w) and
// (star_order(order, j), w') with the index-swapped weight identities.
bool pairing_holds(const std::vector<Justification>& justs, const LinearOrder& primary, std::size_t j) {
    if (justs.size() != 2) return false;
    const LinearOrder partner = star_order(primary, j);
    auto find = [&](const LinearOrder& o) {
        return std::find_if(justs.begin(), justs.end(), [&](const Justification& x) { return x.order == o; });
    };
    auto a = find(primary);
    auto b = find(partner);
    if (a == justs.end() || b == justs.end() || a == b) return false;
    const std::size_t last = primary.size() - 1;
    const auto& w = a->weights;
    const auto& w2 = b->weights;
    return w[j - 1] == w2[last] && w[j - 1] > 0 && w[last] == w2[j - 1] && w[last] > 0;
}

}  // namespace

Identification identify(const StochasticChoice& rho, std::span<const LinearOrder> composing, const Tolerance& tolerance) {
    Identification result;
    result.support = support_set(rho);
    result.justifications = justifications_for(rho, composing, tolerance);
    const std::size_t count = result.justifications.size();
    auto& cls = result.cls;
    cls.count = count;

    if (composing.empty()) {
        cls.kind = IdentificationClass::Kind::NotHarmful;
        return result;
    }

    const LinearOrder& primary = composing.front();
    const std::size_t n = rho.size();
    const std::size_t support_size = result.support.size();
    bool agrees = true;

    if (support_size >= 3 || (support_size == 2 && !result.support.contains(primary.bottom()))) {
        cls.kind = IdentificationClass::Kind::Unique;
        agrees = count == 1;
    } else if (support_size == 2) {
        cls.kind = IdentificationClass::Kind::TwoStarPaired;
        const Item other = result.support.without(primary.bottom()).items().front();
        cls.pair_rank = primary.rank_of(other);
        agrees = pairing_holds(result.justifications, primary, cls.pair_rank);
    } else {
        cls.kind = IdentificationClass::Kind::Degenerate;
        agrees = count >= n;
    }

    if (!agrees) {
        if (tolerance.exact()) {
            throw IdentificationMismatch(std::string("identification class ") + to_string(cls.kind) +
                                         " contradicts the " + std::to_string(count) + " justifications found");
        }
        result.consistent = false;
    }
    return result;
}

Identification identify(const StochasticChoice& rho, const Tolerance& tolerance) {
    const auto composing = composing_orders(rho, tolerance);
    return identify(rho, composing, tolerance);
}

IdentificationClass classify(const StochasticChoice& rho, const Tolerance& tolerance) {
    return identify(rho, tolerance).cls;
}

}  // namespace hrum

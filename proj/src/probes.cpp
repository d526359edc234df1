#include "hrum/probes.hpp"

#include "hrum/simplex.hpp"

#include <map>

namespace hrum {

RumFeasibility is_rum(const StochasticChoice& rho, std::size_t max_items) {
    const std::size_t n = rho.size();
    if (n > max_items) throw SizeGuardExceeded(n, max_items);

    const auto orders = enumerate_orders(n);
    LinearSystem system;
    system.rows.emplace_back(orders.size(), Rational(1));
    system.rhs.emplace_back(1);
    for (Menu menu : rho.menus()) {
        if (menu.size() < 2) continue;
        for (Item x : menu.items()) {
            std::vector<Rational> row(orders.size(), Rational(0));
            for (std::size_t k = 0; k < orders.size(); ++k) {
                if (orders[k].best_in(menu) == x) row[k] = 1;
            }
            system.rows.push_back(std::move(row));
            system.rhs.push_back(rho.prob(x, menu));
        }
    }

    auto solution = find_nonnegative_solution(system);
    if (!solution) return RumFeasibility{false, std::nullopt};
    std::map<LinearOrder, Rational> weights;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        if ((*solution)[k] > 0) weights.emplace(orders[k], (*solution)[k]);
    }
    return RumFeasibility{true, GeneralLottery(std::move(weights))};
}

Rational correlation_bound(const StochasticChoice& rho, const LinearOrder& order) {
    const std::size_t n = rho.size();
    if (n < 3) throw std::invalid_argument("correlation bound needs at least three items");
    if (order.size() != n) throw std::invalid_argument("order and dataset differ in size");
    const Menu extremes = Menu::singleton(order.top()).with(order.bottom());
    Rational sum = 0;
    std::size_t count = 0;
    for (Menu menu : rho.menus()) {
        if (menu.size() < 2 || menu == extremes) continue;
        sum += rho.prob(order.best_in(menu), menu);
        ++count;
    }
    return sum / Rational(static_cast<long>(count - 1));
}

CorrelationIndex correlation_index(const StochasticChoice& rho) {
    std::vector<std::pair<LinearOrder, Rational>> values;
    for_each_order(rho.size(), [&](const LinearOrder& order) { values.emplace_back(order, correlation_bound(rho, order)); });
    std::size_t best = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k].second > values[best].second) best = k;
    }
    Rational max = values[best].second;
    LinearOrder argmax = values[best].first;
    return CorrelationIndex{std::move(values), std::move(max), std::move(argmax)};
}

bool single_peaked_support(const Justification& justification) {
    const auto& w = justification.weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0 && !is_single_peaked(harmful_distortion(justification.order, i), justification.order)) return false;
    }
    return true;
}

}  // namespace hrum

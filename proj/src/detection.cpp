#include "hrum/detection.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>

namespace hrum {

namespace {

// Ranking prefix together with the running grand-menu mass of its items.
class Prefix {
public:
    Prefix(const StochasticChoice& rho) : rho_(rho), grand_(rho.grand_menu()) {
        for (Item x = 0; x < rho.size(); ++x) total_ += rho.prob(x, grand_);
        cumulative_.push_back(Rational(0));
    }

    std::size_t depth() const { return items_.size(); }
    Menu placed() const { return placed_; }
    std::span<const Item> items() const { return items_; }

    void push(Item x) {
        items_.push_back(x);
        placed_ = placed_.with(x);
        cumulative_.push_back(cumulative_.back() + rho_.prob(x, grand_));
    }

    void pop() {
        placed_ = placed_.without(items_.back());
        items_.pop_back();
        cumulative_.pop_back();
    }

    // Predicted rho(x_j, A); requires j <= depth() and x_j in A.
    Rational predicted(Menu menu, std::size_t j) const {
        std::size_t g = 0;
        for (std::size_t r = j - 1; r >= 1; --r) {
            if (menu.contains(items_[r - 1])) {
                g = r;
                break;
            }
        }
        Rational p = cumulative_[j];
        if (g != 0) p -= cumulative_[g];
        Menu through_j;
        for (std::size_t r = 1; r <= j; ++r) through_j = through_j.with(items_[r - 1]);
        if (menu.subset_of(through_j)) p += total_ - cumulative_[j];
        return p;
    }

    // Checks every menu of size >= 2 containing the item at rank j.
    template <typename OnCheck>
    bool check_rank(std::size_t j, const Tolerance& tolerance, OnCheck&& on_check) const {
        const Item x = items_[j - 1];
        const Menu::Bits others = grand_.without(x).bits();
        bool ok = true;
        // enumerate nonempty subsets of the other items
        for (Menu::Bits sub = others; sub != 0; sub = (sub - 1) & others) {
            const Menu menu = Menu::from_bits(sub).with(x);
            const Rational& observed = rho_.prob(x, menu);
            Rational expected = predicted(menu, j);
            const bool holds = tolerance.equal(observed, expected);
            if (!on_check(menu, x, j, observed, expected, holds)) return false;
            ok = ok && holds;
        }
        return ok;
    }

private:
    const StochasticChoice& rho_;
    Menu grand_;
    Rational total_{0};
    std::vector<Item> items_;
    Menu placed_;
    std::vector<Rational> cumulative_;
};

bool check_rank_fast(const Prefix& prefix, std::size_t j, const Tolerance& tolerance) {
    return prefix.check_rank(j, tolerance, [](Menu, Item, std::size_t, const Rational&, const Rational&, bool holds) {
        return holds;  // stop at the first violation
    });
}

void search(Prefix& prefix, std::size_t n, const Tolerance& tolerance, std::vector<LinearOrder>& out) {
    if (prefix.depth() == n) {
        out.emplace_back(std::vector<Item>(prefix.items().begin(), prefix.items().end()));
        return;
    }
    for (Item y = 0; y < n; ++y) {
        if (prefix.placed().contains(y)) continue;
        prefix.push(y);
        if (check_rank_fast(prefix, prefix.depth(), tolerance)) search(prefix, n, tolerance, out);
        prefix.pop();
    }
}

void require_sizes(const StochasticChoice& rho, const LinearOrder& order) {
    if (order.size() != rho.size()) throw std::invalid_argument("order and dataset differ in size");
}

}  // namespace

bool CompositionWitness::composes() const {
    return std::all_of(checks.begin(), checks.end(), [](const CompositionCheck& c) { return c.holds; });
}

Rational predicted_choice_prob(const StochasticChoice& rho, const LinearOrder& order, Menu menu, std::size_t j) {
    require_sizes(rho, order);
    if (!menu.contains(order.at(j))) throw std::invalid_argument("menu does not contain the item at this rank");
    Prefix prefix(rho);
    for (std::size_t r = 1; r <= j; ++r) prefix.push(order.at(r));
    return prefix.predicted(menu, j);
}

bool composes(const StochasticChoice& rho, const LinearOrder& order, const Tolerance& tolerance) {
    require_sizes(rho, order);
    Prefix prefix(rho);
    for (std::size_t j = 1; j <= order.size(); ++j) {
        prefix.push(order.at(j));
        if (!check_rank_fast(prefix, j, tolerance)) return false;
    }
    return true;
}

CompositionWitness composition_witness(const StochasticChoice& rho, const LinearOrder& order,
                                       const Tolerance& tolerance) {
    require_sizes(rho, order);
    CompositionWitness witness{order, {}};
    Prefix prefix(rho);
    for (std::size_t j = 1; j <= order.size(); ++j) {
        prefix.push(order.at(j));
        prefix.check_rank(j, tolerance,
                          [&](Menu menu, Item x, std::size_t rank, const Rational& observed, const Rational& expected,
                              bool holds) {
                              witness.checks.push_back(CompositionCheck{menu, x, rank, observed, expected, holds});
                              return true;
                          });
    }
    return witness;
}

std::vector<LinearOrder> composing_orders(const StochasticChoice& rho, const Tolerance& tolerance) {
    const std::size_t n = rho.size();
    std::vector<LinearOrder> out;
    if (n < 3) {
        for_each_order(n, [&](const LinearOrder& order) {
            if (composes(rho, order, tolerance)) out.push_back(order);
        });
        return out;
    }
    Prefix prefix(rho);
    search(prefix, n, tolerance, out);
    // items are branched in increasing index order, so leaves arrive sorted
    return out;
}

bool is_harmful(const StochasticChoice& rho, const Tolerance& tolerance) {
    return !composing_orders(rho, tolerance).empty();
}

}  // namespace hrum

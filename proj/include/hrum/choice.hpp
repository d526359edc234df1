#pragma once

#include "hrum/orders.hpp"
#include "hrum/rational.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hrum {

/// Raised for datasets that are not stochastic choice functions.
class DataError : public std::runtime_error {
public:
    enum class Kind {
        Malformed,
        MissingMenu,
        DuplicateMenu,
        RowSumViolation,
        ForeignItem,
        NegativeProbability,
    };

    DataError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

const char* to_string(DataError::Kind kind);

/// One menu's row as read from a file, before validation. `line` is the
/// source line for error messages, 0 when unknown.
struct RawMenuRow {
    std::string menu_key;
    std::vector<std::pair<std::string, std::string>> entries;  // item label, probability text
    std::size_t line = 0;
};

struct RawDataset {
    std::vector<std::string> items;
    std::vector<RawMenuRow> rows;
};

/// A validated stochastic choice function rho(x, A) over every nonempty menu.
/// Rows sum to one (exactly, or within the tolerance it was built with),
/// entries are nonnegative, and non-members have probability zero.
class StochasticChoice {
public:
    using Generator = std::function<Rational(Menu, Item)>;

    /// Tabulates `prob(A, x)` for every menu A and x in A and checks the
    /// invariants. Throws DataError on violation.
    StochasticChoice(GroundSet ground, const Generator& prob, const Tolerance& tolerance = {});

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    Menu grand_menu() const { return Menu::full(size()); }

    /// rho(x, A); zero when x is not in A.
    const Rational& prob(Item x, Menu menu) const;
    /// rho(., A) indexed by item.
    std::span<const Rational> row(Menu menu) const;

    /// All nonempty menus, in increasing bitmask order.
    std::vector<Menu> menus() const;

    bool operator==(const StochasticChoice& o) const { return ground_ == o.ground_ && table_ == o.table_; }

private:
    GroundSet ground_;
    std::vector<std::vector<Rational>> table_;  // indexed by menu bits
};

/// Canonical menu key: member labels sorted lexicographically, joined by commas.
std::string menu_key(const GroundSet& ground, Menu menu);
/// Accepts members in any order; throws DataError(ForeignItem) for unknown labels.
Menu parse_menu_key(const GroundSet& ground, std::string_view key);

/// Checks a raw dataset and completes singleton rows. Every menu with at
/// least two items must be present.
StochasticChoice validate(const RawDataset& raw, const Tolerance& tolerance = {});

/// X*: the items chosen from the grand menu with positive probability.
Menu support_set(const StochasticChoice& rho);

/// Regularity: rho(x, A) >= rho(x, B) whenever x is in A and A is a subset of B.
bool is_regular(const StochasticChoice& rho);

}  // namespace hrum

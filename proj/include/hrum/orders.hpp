#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hrum {

/// Index of an alternative in its ground set.
using Item = std::size_t;

/// Menus are stored as bitmasks, which bounds the ground set size.
inline constexpr std::size_t kMaxItems = 16;

/// The finite, labeled set of alternatives. Labels are unique, non-empty and
/// may not contain commas (commas delimit orders and menu keys).
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Item x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Item> find(std::string_view label) const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> labels_;
};

/// A nonempty subset of the ground set.
class Menu {
public:
    using Bits = std::uint32_t;

    constexpr Menu() = default;
    static constexpr Menu from_bits(Bits bits) { Menu m; m.bits_ = bits; return m; }
    static constexpr Menu full(std::size_t n) { return from_bits(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1); }
    static constexpr Menu singleton(Item x) { return from_bits(Bits{1} << x); }

    constexpr Bits bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(Item x) const { return (bits_ >> x) & 1U; }
    std::size_t size() const;
    std::vector<Item> items() const;

    constexpr Menu with(Item x) const { return from_bits(bits_ | (Bits{1} << x)); }
    constexpr Menu without(Item x) const { return from_bits(bits_ & ~(Bits{1} << x)); }
    constexpr Menu operator&(Menu o) const { return from_bits(bits_ & o.bits_); }
    constexpr Menu operator|(Menu o) const { return from_bits(bits_ | o.bits_); }
    constexpr bool subset_of(Menu o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr auto operator<=>(const Menu&) const = default;

private:
    Bits bits_ = 0;
};

/// Strict linear order stored best-to-worst. Ranks are 1-based, as in the
/// literature: `at(1)` is the top item and `at(n)` the bottom one.
class LinearOrder {
public:
    /// Throws std::invalid_argument unless `ranking` is a permutation of 0..n-1.
    explicit LinearOrder(std::vector<Item> ranking);

    static LinearOrder identity(std::size_t n);

    std::size_t size() const { return ranking_.size(); }
    Item at(std::size_t rank) const;
    std::size_t rank_of(Item x) const;
    bool prefers(Item a, Item b) const { return position_.at(a) < position_.at(b); }
    Item top() const { return ranking_.front(); }
    Item bottom() const { return ranking_.back(); }
    std::span<const Item> ranking() const { return ranking_; }

    /// The best item of `menu` under this order; the menu must be nonempty.
    Item best_in(Menu menu) const;
    /// Items strictly better than the one at `rank`.
    Menu upper_set(std::size_t rank) const;
    /// Items strictly worse than the one at `rank`.
    Menu lower_set(std::size_t rank) const;

    bool operator==(const LinearOrder& o) const { return ranking_ == o.ranking_; }
    auto operator<=>(const LinearOrder& o) const { return ranking_ <=> o.ranking_; }

private:
    std::vector<Item> ranking_;
    std::vector<std::size_t> position_;
};

/// The i-th harmful distortion: the top i items of `order` move to the bottom
/// in reverse order, the rest keep their relative ranking. Index 0 is `order`.
/// Throws std::out_of_range unless i < n.
LinearOrder harmful_distortion(const LinearOrder& order, std::size_t i);

/// The unique order whose j-th harmful distortion is `target`.
LinearOrder distortion_preimage(const LinearOrder& target, std::size_t j);

/// Keeps ranks 1..j-1 fixed and reverses ranks j..n. Requires 1 <= j <= n.
LinearOrder star_order(const LinearOrder& order, std::size_t j);

/// Calls `visit` on all n! orders in lexicographic order of their rankings.
void for_each_order(std::size_t n, const std::function<void(const LinearOrder&)>& visit);
std::vector<LinearOrder> enumerate_orders(std::size_t n);

/// Single-peakedness of `candidate` with respect to the axis `reference`:
/// items on the same side of the candidate's peak are ranked by proximity.
bool is_single_peaked(const LinearOrder& candidate, const LinearOrder& reference);

/// `p,f,s` style rendering, best first.
std::string format_order(const GroundSet& ground, const LinearOrder& order);
LinearOrder parse_order(const GroundSet& ground, std::string_view text);

}  // namespace hrum

#include "hrum/orders.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hrum {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        parts.push_back(part);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("ground set must contain at least one item");
    if (labels_.size() > kMaxItems) {
        throw std::invalid_argument("ground set has " + std::to_string(labels_.size()) +
                                    " items; at most " + std::to_string(kMaxItems) + " are supported");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const auto& l = labels_[i];
        if (l.empty()) throw std::invalid_argument("item labels must be non-empty");
        if (l.find(',') != std::string::npos) throw std::invalid_argument("item label '" + l + "' contains a comma");
        for (std::size_t k = 0; k < i; ++k) {
            if (labels_[k] == l) throw std::invalid_argument("duplicate item label '" + l + "'");
        }
    }
}

std::optional<Item> GroundSet::find(std::string_view label) const {
    for (Item i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t Menu::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Item> Menu::items() const {
    std::vector<Item> out;
    for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Item>(std::countr_zero(b)));
    return out;
}

LinearOrder::LinearOrder(std::vector<Item> ranking) : ranking_(std::move(ranking)), position_(ranking_.size()) {
    const std::size_t n = ranking_.size();
    if (n == 0) throw std::invalid_argument("linear order over an empty set");
    std::vector<bool> seen(n, false);
    for (std::size_t p = 0; p < n; ++p) {
        Item x = ranking_[p];
        if (x >= n || seen[x]) throw std::invalid_argument("ranking is not a permutation");
        seen[x] = true;
        position_[x] = p;
    }
}

LinearOrder LinearOrder::identity(std::size_t n) {
    std::vector<Item> r(n);
    std::iota(r.begin(), r.end(), Item{0});
    return LinearOrder(std::move(r));
}

Item LinearOrder::at(std::size_t rank) const {
    if (rank < 1 || rank > ranking_.size()) throw std::out_of_range("rank out of range");
    return ranking_[rank - 1];
}

std::size_t LinearOrder::rank_of(Item x) const { return position_.at(x) + 1; }

Item LinearOrder::best_in(Menu menu) const {
    for (Item x : ranking_) {
        if (menu.contains(x)) return x;
    }
    throw std::invalid_argument("best_in called on an empty menu");
}

Menu LinearOrder::upper_set(std::size_t rank) const {
    Menu m;
    for (std::size_t r = 1; r < rank && r <= ranking_.size(); ++r) m = m.with(ranking_[r - 1]);
    return m;
}

Menu LinearOrder::lower_set(std::size_t rank) const {
    Menu m;
    for (std::size_t r = rank + 1; r <= ranking_.size(); ++r) m = m.with(ranking_[r - 1]);
    return m;
}

LinearOrder harmful_distortion(const LinearOrder& order, std::size_t i) {
    const std::size_t n = order.size();
    if (i >= n) throw std::out_of_range("distortion index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    auto r = order.ranking();
    std::vector<Item> out;
    out.reserve(n);
    out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(i), r.end());
    out.insert(out.end(), std::make_reverse_iterator(r.begin() + static_cast<std::ptrdiff_t>(i)), r.rend());
    return LinearOrder(std::move(out));
}

LinearOrder distortion_preimage(const LinearOrder& target, std::size_t j) {
    const std::size_t n = target.size();
    if (j >= n) throw std::out_of_range("distortion index out of range");
    auto t = target.ranking();
    std::vector<Item> out;
    out.reserve(n);
    // the bottom j items of the target, read upwards, were the top j
    out.insert(out.end(), t.rbegin(), t.rbegin() + static_cast<std::ptrdiff_t>(j));
    out.insert(out.end(), t.begin(), t.end() - static_cast<std::ptrdiff_t>(j));
    return LinearOrder(std::move(out));
}

LinearOrder star_order(const LinearOrder& order, std::size_t j) {
    const std::size_t n = order.size();
    if (j < 1 || j > n) throw std::out_of_range("star_order rank out of range");
    std::vector<Item> out(order.ranking().begin(), order.ranking().end());
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(j - 1), out.end());
    return LinearOrder(std::move(out));
}

void for_each_order(std::size_t n, const std::function<void(const LinearOrder&)>& visit) {
    if (n == 0) throw std::invalid_argument("cannot enumerate orders of an empty set");
    std::vector<Item> r(n);
    std::iota(r.begin(), r.end(), Item{0});
    do {
        visit(LinearOrder(r));
    } while (std::next_permutation(r.begin(), r.end()));
}

std::vector<LinearOrder> enumerate_orders(std::size_t n) {
    std::vector<LinearOrder> out;
    for_each_order(n, [&](const LinearOrder& o) { out.push_back(o); });
    return out;
}

bool is_single_peaked(const LinearOrder& candidate, const LinearOrder& reference) {
    const std::size_t n = reference.size();
    if (candidate.size() != n) throw std::invalid_argument("orders over different ground sets");
    const std::size_t peak = reference.rank_of(candidate.top());
    // Above the peak on the axis, items closer to the peak must be preferred;
    // likewise below it.
    for (std::size_t r = 1; r + 1 < peak; ++r) {
        if (!candidate.prefers(reference.at(r + 1), reference.at(r))) return false;
    }
    for (std::size_t r = peak + 1; r < n; ++r) {
        if (!candidate.prefers(reference.at(r), reference.at(r + 1))) return false;
    }
    return true;
}

std::string format_order(const GroundSet& ground, const LinearOrder& order) {
    if (order.size() != ground.size()) throw std::invalid_argument("order and ground set differ in size");
    std::string out;
    for (Item x : order.ranking()) {
        if (!out.empty()) out += ',';
        out += ground.label(x);
    }
    return out;
}

LinearOrder parse_order(const GroundSet& ground, std::string_view text) {
    std::vector<Item> ranking;
    for (auto label : split_commas(text)) {
        auto x = ground.find(label);
        if (!x) throw std::invalid_argument("unknown item '" + std::string(label) + "' in order '" + std::string(text) + "'");
        ranking.push_back(*x);
    }
    if (ranking.size() != ground.size()) {
        throw std::invalid_argument("order '" + std::string(text) + "' does not rank every item exactly once");
    }
    return LinearOrder(std::move(ranking));
}

}  // namespace hrum

#include "hrum/choice.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hrum {

const char* to_string(DataError::Kind kind) {
    switch (kind) {
        case DataError::Kind::Malformed: return "Malformed";
        case DataError::Kind::MissingMenu: return "MissingMenu";
        case DataError::Kind::DuplicateMenu: return "DuplicateMenu";
        case DataError::Kind::RowSumViolation: return "RowSumViolation";
        case DataError::Kind::ForeignItem: return "ForeignItem";
        case DataError::Kind::NegativeProbability: return "NegativeProbability";
    }
    return "Unknown";
}

StochasticChoice::StochasticChoice(GroundSet ground, const Generator& prob, const Tolerance& tolerance)
    : ground_(std::move(ground)) {
    const std::size_t n = ground_.size();
    const Menu::Bits count = Menu::Bits{1} << n;
    table_.assign(count, {});
    for (Menu::Bits bits = 1; bits < count; ++bits) {
        const Menu menu = Menu::from_bits(bits);
        auto& row = table_[bits];
        row.assign(n, Rational(0));
        Rational sum = 0;
        for (Item x : menu.items()) {
            Rational v = prob(menu, x);
            v.canonicalize();
            if (v < 0) {
                throw DataError(DataError::Kind::NegativeProbability,
                                "negative probability " + to_string(v) + " for '" + ground_.label(x) +
                                    "' in menu {" + menu_key(ground_, menu) + "}");
            }
            sum += v;
            row[x] = std::move(v);
        }
        if (!tolerance.equal(sum, 1)) {
            throw DataError(DataError::Kind::RowSumViolation,
                            "menu {" + menu_key(ground_, menu) + "} sums to " + to_string(sum) +
                                " (deficit " + to_string(Rational(1 - sum)) + ")");
        }
    }
}

const Rational& StochasticChoice::prob(Item x, Menu menu) const {
    if (menu.empty() || menu.bits() >= table_.size()) throw std::out_of_range("menu outside the ground set");
    return table_[menu.bits()].at(x);
}

std::span<const Rational> StochasticChoice::row(Menu menu) const {
    if (menu.empty() || menu.bits() >= table_.size()) throw std::out_of_range("menu outside the ground set");
    return table_[menu.bits()];
}

std::vector<Menu> StochasticChoice::menus() const {
    std::vector<Menu> out;
    out.reserve(table_.size() - 1);
    for (Menu::Bits bits = 1; bits < table_.size(); ++bits) out.push_back(Menu::from_bits(bits));
    return out;
}

std::string menu_key(const GroundSet& ground, Menu menu) {
    std::vector<std::string> labels;
    for (Item x : menu.items()) labels.push_back(ground.label(x));
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += ',';
        out += l;
    }
    return out;
}

Menu parse_menu_key(const GroundSet& ground, std::string_view key) {
    Menu menu;
    std::size_t start = 0;
    while (true) {
        auto comma = key.find(',', start);
        auto label = key.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!label.empty() && label.front() == ' ') label.remove_prefix(1);
        while (!label.empty() && label.back() == ' ') label.remove_suffix(1);
        auto x = ground.find(label);
        if (!x) {
            throw DataError(DataError::Kind::ForeignItem,
                            "menu {" + std::string(key) + "} names unknown item '" + std::string(label) + "'");
        }
        if (menu.contains(*x)) {
            throw DataError(DataError::Kind::Malformed, "menu {" + std::string(key) + "} repeats '" + std::string(label) + "'");
        }
        menu = menu.with(*x);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return menu;
}

StochasticChoice validate(const RawDataset& raw, const Tolerance& tolerance) {
    std::optional<GroundSet> parsed;
    try {
        parsed.emplace(raw.items);
    } catch (const std::invalid_argument& e) {
        throw DataError(DataError::Kind::Malformed, e.what());
    }
    const GroundSet& ground = *parsed;
    const std::size_t n = ground.size();

    struct Parsed {
        std::vector<Rational> probs;
    };
    std::map<Menu::Bits, Parsed> rows;

    for (const auto& row : raw.rows) {
        const std::string where = row.line ? "line " + std::to_string(row.line) + ": " : std::string();
        Menu menu;
        try {
            menu = parse_menu_key(ground, row.menu_key);
        } catch (const DataError& e) {
            throw DataError(e.kind(), where + e.what());
        }
        if (rows.contains(menu.bits())) {
            throw DataError(DataError::Kind::DuplicateMenu, where + "menu {" + menu_key(ground, menu) + "} appears twice");
        }
        Parsed p{std::vector<Rational>(n, Rational(0))};
        std::vector<bool> seen(n, false);
        for (const auto& [label, text] : row.entries) {
            auto x = ground.find(label);
            if (!x || !menu.contains(*x)) {
                throw DataError(DataError::Kind::ForeignItem,
                                where + "item '" + label + "' is not a member of menu {" + menu_key(ground, menu) + "}");
            }
            if (seen[*x]) {
                throw DataError(DataError::Kind::Malformed,
                                where + "item '" + label + "' listed twice in menu {" + menu_key(ground, menu) + "}");
            }
            seen[*x] = true;
            Rational v;
            try {
                v = parse_rational(text);
            } catch (const std::invalid_argument& e) {
                throw DataError(DataError::Kind::Malformed, where + e.what());
            }
            if (v < 0) {
                throw DataError(DataError::Kind::NegativeProbability,
                                where + "negative probability " + text + " for '" + label + "' in menu {" +
                                    menu_key(ground, menu) + "}");
            }
            p.probs[*x] = std::move(v);
        }
        Rational sum = 0;
        for (const auto& v : p.probs) sum += v;
        if (!tolerance.equal(sum, 1)) {
            throw DataError(DataError::Kind::RowSumViolation,
                            where + "menu {" + menu_key(ground, menu) + "} sums to " + to_string(sum) +
                                " (deficit " + to_string(Rational(1 - sum)) + ")");
        }
        rows.emplace(menu.bits(), std::move(p));
    }

    const Menu::Bits count = Menu::Bits{1} << n;
    for (Menu::Bits bits = 1; bits < count; ++bits) {
        const Menu menu = Menu::from_bits(bits);
        if (menu.size() >= 2 && !rows.contains(bits)) {
            throw DataError(DataError::Kind::MissingMenu, "menu {" + menu_key(ground, menu) + "} is missing");
        }
    }

    return StochasticChoice(
        ground,
        [&](Menu menu, Item x) -> Rational {
            auto it = rows.find(menu.bits());
            if (it == rows.end()) return Rational(1);  // implied singleton
            return it->second.probs[x];
        },
        tolerance);
}

Menu support_set(const StochasticChoice& rho) {
    Menu support;
    const Menu grand = rho.grand_menu();
    for (Item x = 0; x < rho.size(); ++x) {
        if (rho.prob(x, grand) > 0) support = support.with(x);
    }
    return support;
}

bool is_regular(const StochasticChoice& rho) {
    // One-item extensions suffice: inclusion chains compose.
    for (Menu small : rho.menus()) {
        for (Item y = 0; y < rho.size(); ++y) {
            if (small.contains(y)) continue;
            const Menu big = small.with(y);
            for (Item x : small.items()) {
                if (rho.prob(x, small) < rho.prob(x, big)) return false;
            }
        }
    }
    return true;
}

}  // namespace hrum

#pragma once

#include "hrum/choice.hpp"

#include <string>
#include <string_view>

namespace hrum {

/// `{"items": [...], "menus": {"f,p,s": {"p": "3/10", ...}, ...}}`.
/// Probabilities are strings; bare JSON integers are tolerated, floats are not.
/// Throws DataError(Malformed) on syntax or schema errors.
RawDataset parse_dataset_json(std::string_view text);

/// One `menu,item,probability` row per entry, menu keys quoted. An optional
/// header row, blank lines and `#` comments are skipped. The ground set lists
/// the item column in order of first appearance, then labels seen only in keys.
RawDataset parse_dataset_csv(std::string_view text);

/// Canonical JSON form: sorted keys, rationals as `a/b`, singleton menus omitted.
std::string to_json(const StochasticChoice& rho);

/// Canonical CSV form: grand menu first in ground-set order, then the other
/// menus of size >= 2 by key.
std::string to_csv(const StochasticChoice& rho);

}  // namespace hrum

#include "hrum/dataset_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace hrum {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& message) { throw DataError(DataError::Kind::Malformed, message); }

std::string probability_text(const json& value, const std::string& context) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer() || value.is_number_unsigned()) return value.dump();
    malformed(context + ": probabilities must be strings (got " + value.dump() + ")");
}

std::vector<std::string> parse_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty()) malformed("line " + std::to_string(line_no) + ": stray quote");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) malformed("line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(field));
    for (auto& f : fields) {
        while (!f.empty() && f.front() == ' ') f.erase(f.begin());
        while (!f.empty() && f.back() == ' ') f.pop_back();
    }
    return fields;
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> labels;
    std::stringstream ss(key);
    std::string label;
    while (std::getline(ss, label, ',')) {
        while (!label.empty() && label.front() == ' ') label.erase(label.begin());
        while (!label.empty() && label.back() == ' ') label.pop_back();
        labels.push_back(label);
    }
    return labels;
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

RawDataset parse_dataset_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) malformed("dataset must be a JSON object");
    if (!doc.contains("items") || !doc["items"].is_array()) malformed("dataset needs an \"items\" array");
    if (!doc.contains("menus") || !doc["menus"].is_object()) malformed("dataset needs a \"menus\" object");

    RawDataset raw;
    for (const auto& item : doc["items"]) {
        if (!item.is_string()) malformed("item labels must be strings (got " + item.dump() + ")");
        raw.items.push_back(item.get<std::string>());
    }
    for (const auto& [key, row] : doc["menus"].items()) {
        if (!row.is_object()) malformed("menu \"" + key + "\" must map items to probabilities");
        RawMenuRow r{key, {}, 0};
        for (const auto& [label, value] : row.items()) {
            r.entries.emplace_back(label, probability_text(value, "menu \"" + key + "\", item \"" + label + "\""));
        }
        raw.rows.push_back(std::move(r));
    }
    return raw;
}

RawDataset parse_dataset_csv(std::string_view text) {
    RawDataset raw;
    std::map<std::string, std::size_t> row_index;  // normalized key -> position in raw.rows
    std::vector<std::string> key_only;               // labels seen in menu keys
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool first_content = true;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        auto trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) trimmed.remove_prefix(1);
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.remove_suffix(1);
        if (trimmed.empty() || trimmed.front() == '#') continue;

        auto fields = parse_csv_line(trimmed, line_no);
        if (first_content) {
            first_content = false;
            if (fields.size() == 3 && fields[0] == "menu" && fields[1] == "item") continue;
        }
        if (fields.size() != 3) {
            malformed("line " + std::to_string(line_no) + ": expected 3 fields (menu,item,probability), got " +
                      std::to_string(fields.size()));
        }
        auto labels = split_key(fields[0]);
        if (std::find(raw.items.begin(), raw.items.end(), fields[1]) == raw.items.end()) raw.items.push_back(fields[1]);
        for (const auto& l : labels) {
            if (std::find(key_only.begin(), key_only.end(), l) == key_only.end()) key_only.push_back(l);
        }
        std::sort(labels.begin(), labels.end());
        std::string normalized;
        for (const auto& l : labels) normalized += (normalized.empty() ? "" : ",") + l;

        auto [it, inserted] = row_index.try_emplace(normalized, raw.rows.size());
        if (inserted) raw.rows.push_back(RawMenuRow{fields[0], {}, line_no});
        raw.rows[it->second].entries.emplace_back(fields[1], fields[2]);
    }
    for (const auto& l : key_only) {
        if (std::find(raw.items.begin(), raw.items.end(), l) == raw.items.end()) raw.items.push_back(l);
    }
    return raw;
}

std::string to_json(const StochasticChoice& rho) {
    const auto& ground = rho.ground();
    json doc;
    doc["items"] = ground.labels();
    json menus = json::object();
    for (Menu menu : rho.menus()) {
        if (menu.size() < 2) continue;
        json row = json::object();
        for (Item x : menu.items()) row[ground.label(x)] = to_string(rho.prob(x, menu));
        menus[menu_key(ground, menu)] = std::move(row);
    }
    doc["menus"] = std::move(menus);
    return doc.dump(2) + "\n";
}

std::string to_csv(const StochasticChoice& rho) {
    const auto& ground = rho.ground();
    std::string out = "menu,item,probability\n";
    const Menu grand = rho.grand_menu();
    const std::string grand_key = quote_csv(menu_key(ground, grand));
    for (Item x = 0; x < ground.size(); ++x) {
        out += grand_key + "," + quote_csv(ground.label(x)) + "," + to_string(rho.prob(x, grand)) + "\n";
    }
    std::map<std::string, Menu> rest;
    for (Menu menu : rho.menus()) {
        if (menu.size() >= 2 && menu != grand) rest.emplace(menu_key(ground, menu), menu);
    }
    for (const auto& [key, menu] : rest) {
        std::map<std::string, Item> members;
        for (Item x : menu.items()) members.emplace(ground.label(x), x);
        for (const auto& [label, x] : members) {
            out += quote_csv(key) + "," + quote_csv(label) + "," + to_string(rho.prob(x, menu)) + "\n";
        }
    }
    return out;
}

}  // namespace hrum

#include "hrum/cli.hpp"

#include "hrum/dataset_io.hpp"
#include "hrum/forward.hpp"
#include "hrum/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hrum::cli {
namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string tolerance = "0";
    int decimals = -1;
    std::size_t max_n = kDefaultRumMaxItems;
    std::string format;
    bool all = false;
    std::string order;
    std::string weights;
    std::string items;

    Tolerance tol() const {
        Rational eps;
        try {
            eps = parse_rational(tolerance);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--tolerance: ") + e.what());
        }
        if (eps < 0) throw InputError("--tolerance must be nonnegative");
        return Tolerance(eps);
    }

    RenderOptions render() const {
        RenderOptions r;
        if (decimals >= 0) r.decimals = decimals;
        return r;
    }
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream stream(text);
    while (std::getline(stream, part, ',')) parts.push_back(part);
    if (!text.empty() && text.back() == ',') parts.emplace_back();
    return parts;
}

bool wants_csv(const Options& opt, const std::string& path) {
    if (!opt.format.empty()) return opt.format == "csv";
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

StochasticChoice load(const Options& opt, std::istream& in) {
    std::string text;
    if (opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(opt.input, std::ios::binary);
        if (!file) throw InputError(opt.input + ": cannot open file");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    try {
        const RawDataset raw = wants_csv(opt, opt.input) ? parse_dataset_csv(text) : parse_dataset_json(text);
        return validate(raw, opt.tol());
    } catch (const DataError& e) {
        throw InputError(opt.input + ": " + to_string(e.kind()) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(opt.input + ": " + e.what());
    }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json orders_json(const GroundSet& ground, std::span<const LinearOrder> orders) {
    json list = json::array();
    for (const auto& o : orders) list.push_back(format_order(ground, o));
    return list;
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
    const auto rho = load(opt, in);
    json support = json::array();
    for (Item x : support_set(rho).items()) support.push_back(rho.ground().label(x));
    emit(out, json{{"valid", true},
                   {"items", rho.ground().labels()},
                   {"menus", rho.menus().size()},
                   {"support", std::move(support)},
                   {"regular", is_regular(rho)},
                   {"digest", dataset_digest(rho)}});
    return kOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    try {
        const auto labels = split_commas(opt.items.empty() ? opt.order : opt.items);
        const GroundSet ground(labels);
        const LinearOrder order = parse_order(ground, opt.order);
        std::vector<Rational> w;
        for (const auto& part : split_commas(opt.weights)) w.push_back(parse_rational(part));
        if (w.size() != ground.size()) {
            throw std::invalid_argument("expected " + std::to_string(ground.size()) + " weights, got " +
                                        std::to_string(w.size()));
        }
        const auto rho = simulate(ground, order, HarmfulWeights(std::move(w), opt.tol()));
        out << (opt.format == "csv" ? to_csv(rho) : to_json(rho));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const DataError& e) {
        throw InputError(e.what());
    }
    return kOk;
}

int cmd_detect(const Options& opt, std::istream& in, std::ostream& out) {
    const auto rho = load(opt, in);
    const auto tol = opt.tol();
    const auto render = opt.render();
    const auto orders = composing_orders(rho, tol);
    const std::size_t shown = opt.all ? orders.size() : std::min<std::size_t>(orders.size(), 1);
    json witnesses = json::array();
    for (std::size_t k = 0; k < shown; ++k) {
        witnesses.push_back(witness_json(rho.ground(), composition_witness(rho, orders[k], tol), render));
    }
    emit(out, json{{"harmful", !orders.empty()},
                   {"count", orders.size()},
                   {"composing_orders", orders_json(rho.ground(), std::span(orders).first(shown))},
                   {"witness", std::move(witnesses)},
                   {"mode", mode_json(tol, render)}});
    return orders.empty() ? kPropertyAbsent : kOk;
}

int cmd_identify(const Options& opt, std::istream& in, std::ostream& out) {
    const auto rho = load(opt, in);
    const auto tol = opt.tol();
    const auto render = opt.render();
    const auto id = identify(rho, tol);
    json j = identification_json(rho.ground(), id, render);
    j["mode"] = mode_json(tol, render);
    emit(out, j);
    return id.justifications.empty() ? kPropertyAbsent : kOk;
}

int cmd_degree(const Options& opt, std::istream& in, std::ostream& out) {
    const auto rho = load(opt, in);
    const auto tol = opt.tol();
    const auto orders = composing_orders(rho, tol);
    if (orders.empty()) {
        emit(out, json{{"harmful", false}, {"degree", nullptr}});
        return kPropertyAbsent;
    }
    emit(out, degree_json(rho.ground(), degree_of_self_punishment(rho, orders, tol)));
    return kOk;
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
    const auto rho = load(opt, in);
    const auto tol = opt.tol();
    const auto render = opt.render();
    const auto rum = is_rum(rho, opt.max_n);
    const auto orders = composing_orders(rho, tol);
    json sp = nullptr;
    if (!orders.empty()) {
        bool all = true;
        for (const auto& j : justifications_for(rho, orders, tol)) all = all && single_peaked_support(j);
        sp = all;
    }
    emit(out, json{{"harmful", !orders.empty()},
                   {"rum", rum.feasible},
                   {"correlation_max", rho.size() >= 3 ? json(render(correlation_index(rho).max)) : json(nullptr)},
                   {"single_peaked", sp}});
    return kOk;
}

int cmd_report(const Options& opt, std::istream& in, std::ostream& out) {
    const auto rho = load(opt, in);
    AnalysisOptions options;
    options.tolerance = opt.tol();
    options.max_items_for_rum = opt.max_n;
    const auto report = analyze(rho, options);
    emit(out, report_json(rho, report, opt.render()));
    return report.composing.empty() ? kPropertyAbsent : kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmful random utility analysis of stochastic choice data", "hrum"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub, bool takes_input) {
        if (takes_input) sub->add_option("input", opt.input, "dataset file (JSON or CSV), - for stdin")->required();
        sub->add_option("--tolerance", opt.tolerance, "equality tolerance as a rational, 0 for exact");
        sub->add_option("--decimals", opt.decimals, "render rationals as decimals with k digits")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--max-n", opt.max_n, "largest ground set for the RUM probe");
        sub->add_option("--format", opt.format, "input format, or output format for simulate")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* validate_cmd = app.add_subcommand("validate", "check that a dataset is a stochastic choice function");
    common(validate_cmd, true);
    auto* simulate_cmd = app.add_subcommand("simulate", "generate the dataset of a preference and distortion weights");
    common(simulate_cmd, false);
    simulate_cmd->add_option("--order", opt.order, "preference, best first, comma separated")->required();
    simulate_cmd->add_option("--weights", opt.weights, "distortion weights, index 0 first")->required();
    simulate_cmd->add_option("--items", opt.items, "ground-set order for the output (defaults to --order)");
    auto* detect_cmd = app.add_subcommand("detect", "find every order that composes the dataset");
    common(detect_cmd, true);
    detect_cmd->add_flag("--all", opt.all, "show every composing order with its witness log");
    auto* identify_cmd = app.add_subcommand("identify", "list justifications and the identification class");
    common(identify_cmd, true);
    auto* degree_cmd = app.add_subcommand("degree", "degree of self-punishment");
    common(degree_cmd, true);
    auto* classify_cmd = app.add_subcommand("classify", "harmful, RUM, correlation and single-peakedness probes");
    common(classify_cmd, true);
    auto* report_cmd = app.add_subcommand("report", "full analysis report");
    common(report_cmd, true);

    std::vector<std::string> storage{"hrum"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt, in, out);
        if (simulate_cmd->parsed()) return cmd_simulate(opt, out);
        if (detect_cmd->parsed()) return cmd_detect(opt, in, out);
        if (identify_cmd->parsed()) return cmd_identify(opt, in, out);
        if (degree_cmd->parsed()) return cmd_degree(opt, in, out);
        if (classify_cmd->parsed()) return cmd_classify(opt, in, out);
        if (report_cmd->parsed()) return cmd_report(opt, in, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const SizeGuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kSizeGuard;
    }
    return kInputError;
}

}  // namespace hrum::cli

#include "hrum/report.hpp"

#include "hrum/dataset_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

namespace hrum {

using nlohmann::json;

std::string RenderOptions::operator()(const Rational& q) const {
    return decimals ? to_decimal(q, *decimals) : to_string(q);
}

std::string dataset_digest(const StochasticChoice& rho) {
    const std::string canonical = to_json(rho);
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(canonical.data(), canonical.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    std::string hex = "sha256:";
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

AnalysisReport analyze(const StochasticChoice& rho, const AnalysisOptions& options) {
    AnalysisReport r;
    r.digest = dataset_digest(rho);
    r.tolerance = options.tolerance;
    r.composing = composing_orders(rho, options.tolerance);
    r.identification = identify(rho, r.composing, options.tolerance);
    if (!r.composing.empty()) {
        r.degree = degree_of_self_punishment(rho, r.composing, options.tolerance);
        bool sp = true;
        for (const auto& j : r.identification.justifications) sp = sp && single_peaked_support(j);
        r.single_peaked = sp;
    }
    r.regular = is_regular(rho);
    if (rho.size() <= options.max_items_for_rum) r.rum = is_rum(rho, options.max_items_for_rum);
    if (rho.size() >= 3) r.correlation = correlation_index(rho);
    return r;
}

json mode_json(const Tolerance& tolerance, const RenderOptions& render) {
    return json{{"kind", tolerance.exact() ? "exact" : "tolerance"}, {"tolerance", render(tolerance.epsilon())}};
}

json justification_json(const GroundSet& ground, const Justification& j, const RenderOptions& render) {
    json weights = json::array();
    for (const auto& w : j.weights.values()) weights.push_back(render(w));
    return json{{"order", format_order(ground, j.order)}, {"weights", std::move(weights)}};
}

json identification_json(const GroundSet& ground, const Identification& id, const RenderOptions& render) {
    json justs = json::array();
    for (const auto& j : id.justifications) justs.push_back(justification_json(ground, j, render));
    json support = json::array();
    for (Item x : id.support.items()) support.push_back(ground.label(x));
    json out{{"class", to_string(id.cls.kind)},
             {"count", id.cls.count},
             {"justifications", std::move(justs)},
             {"support", std::move(support)},
             {"consistent", id.consistent}};
    if (id.cls.kind == IdentificationClass::Kind::TwoStarPaired) out["pair_rank"] = id.cls.pair_rank;
    return out;
}

json degree_json(const GroundSet& ground, const DegreeReport& degree) {
    return json{{"degree", degree.degree},
                {"witness_order", format_order(ground, degree.witness_order)},
                {"method_agreement", degree.method_agreement}};
}

json witness_json(const GroundSet& ground, const CompositionWitness& witness, const RenderOptions& render) {
    json checks = json::array();
    for (const auto& c : witness.checks) {
        checks.push_back(json{{"menu", menu_key(ground, c.menu)},
                              {"item", ground.label(c.item)},
                              {"rank", c.rank},
                              {"observed", render(c.observed)},
                              {"predicted", render(c.predicted)},
                              {"holds", c.holds}});
    }
    return json{{"order", format_order(ground, witness.order)}, {"composes", witness.composes()}, {"checks", std::move(checks)}};
}

json rum_json(const GroundSet& ground, const RumFeasibility& rum, const RenderOptions& render) {
    json out{{"feasible", rum.feasible}};
    if (rum.witness) {
        json w = json::array();
        for (const auto& [order, p] : rum.witness->weights()) {
            w.push_back(json{{"order", format_order(ground, order)}, {"weight", render(p)}});
        }
        out["witness"] = std::move(w);
    }
    return out;
}

json report_json(const StochasticChoice& rho, const AnalysisReport& report, const RenderOptions& render) {
    const auto& ground = rho.ground();
    json orders = json::array();
    for (const auto& o : report.composing) orders.push_back(format_order(ground, o));

    json probes{{"regular", report.regular}};
    if (report.rum) {
        probes["rum"] = rum_json(ground, *report.rum, render);
    } else {
        probes["rum"] = json{{"skipped", "ground set exceeds the RUM size guard"}};
    }
    if (report.correlation) {
        probes["correlation_max"] = render(report.correlation->max);
        probes["correlation_argmax"] = format_order(ground, report.correlation->argmax);
    } else {
        probes["correlation_max"] = nullptr;
    }
    probes["single_peaked"] = report.single_peaked ? json(*report.single_peaked) : json(nullptr);

    return json{{"dataset", json{{"digest", report.digest},
                                 {"items", ground.labels()},
                                 {"menus", rho.menus().size()}}},
                {"mode", mode_json(report.tolerance, render)},
                {"harmful", !report.composing.empty()},
                {"composing_orders", std::move(orders)},
                {"identification", identification_json(ground, report.identification, render)},
                {"degree", report.degree ? degree_json(ground, *report.degree) : json(nullptr)},
                {"probes", std::move(probes)}};
}

}  // namespace hrum

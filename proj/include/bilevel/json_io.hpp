// JSON (de)serialization for the report records: exact rationals as
// {"num": "...", "den": "..."} decimal strings, never floats, so that
// emitted certificates are diffable and round-trip losslessly.
#pragma once

#include "bilevel/certify.hpp"

#include <json.hpp>

#include <string>

namespace bilevel {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline ordered_json rat_to_json(const Rat& q) {
    return ordered_json{{"num", rat_num(q).str()}, {"den", rat_den(q).str()}};
}

inline Rat rat_from_json(const ordered_json& j) {
    Int n(j.at("num").get<std::string>());
    Int d(j.at("den").get<std::string>());
    return Rat(n, d);
}

inline ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["t"] = c.t;
    j["mode"] = mode_name(c.mode);
    j["dim_term"] = rat_to_json(c.dim_term);
    j["omega1"] = rat_to_json(c.omega1);
    j["omega2"] = rat_to_json(c.omega2);
    j["omega_inf"] = rat_to_json(c.omega_inf);
    j["ineq_value"] = rat_to_json(c.ineq_value);
    j["verdict"] = verdict_name(c.verdict);
    j["notes"] = c.notes;
    return j;
}

inline Certificate certificate_from_json(const ordered_json& j) {
    Certificate c;
    c.t = j.at("t").get<long>();
    c.mode = j.at("mode").get<std::string>() == "derived" ? Mode::derived : Mode::paper;
    c.dim_term = rat_from_json(j.at("dim_term"));
    c.omega1 = rat_from_json(j.at("omega1"));
    c.omega2 = rat_from_json(j.at("omega2"));
    c.omega_inf = rat_from_json(j.at("omega_inf"));
    c.ineq_value = rat_from_json(j.at("ineq_value"));
    c.verdict = j.at("verdict").get<std::string>() == verdict_name(Verdict::general_type_certified)
                    ? Verdict::general_type_certified
                    : Verdict::inconclusive;
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
}

inline ordered_json scan_row_to_json(const ScanRow& row) {
    ordered_json j;
    j["t"] = row.t;
    j["factor_shape"] = factor_shape_name(row.shape);
    j["paper"] = ordered_json{{"ineq_value", rat_to_json(row.ineq_paper)},
                              {"verdict", verdict_name(row.verdict_paper)}};
    j["derived"] = ordered_json{{"ineq_value", rat_to_json(row.ineq_derived)},
                                {"verdict", verdict_name(row.verdict_derived)}};
    return j;
}

inline ScanRow scan_row_from_json(const ordered_json& j) {
    ScanRow row;
    row.t = j.at("t").get<long>();
    std::string shape = j.at("factor_shape").get<std::string>();
    for (FactorShape s : {FactorShape::prime, FactorShape::prime_square,
                          FactorShape::prime_cube_plus, FactorShape::two_primes,
                          FactorShape::other})
        if (shape == factor_shape_name(s)) row.shape = s;
    row.ineq_paper = rat_from_json(j.at("paper").at("ineq_value"));
    row.ineq_derived = rat_from_json(j.at("derived").at("ineq_value"));
    auto verdict_of = [](const std::string& s) {
        return s == verdict_name(Verdict::general_type_certified)
                   ? Verdict::general_type_certified
                   : Verdict::inconclusive;
    };
    row.verdict_paper = verdict_of(j.at("paper").at("verdict").get<std::string>());
    row.verdict_derived = verdict_of(j.at("derived").at("verdict").get<std::string>());
    return row;
}

inline ordered_json finding_to_json(const Finding& f) {
    ordered_json j;
    j["id"] = f.id;
    j["title"] = f.title;
    j["details"] = f.details;
    j["flip_statement"] = f.flip_statement;
    return j;
}

}  // namespace bilevel

#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "motivic/global_series.hpp"
#include "motivic/series.hpp"

namespace motivic {

struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Machine-readable form of a polynomial: [[degree, "coefficient"], ...]
// with ascending degree and decimal-string coefficients.
inline nlohmann::ordered_json polynomial_to_json(const polynomial& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back({k, c.str()});
    return arr;
}

inline nlohmann::ordered_json series_to_json(const series& s) {
    nlohmann::ordered_json out;
    out["order"] = s.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (unsigned k = 0; k <= s.order(); ++k) coeffs.push_back(polynomial_to_json(s[k]));
    out["coefficients"] = coeffs;
    return out;
}

inline nlohmann::ordered_json log_to_json(const log_series& l) {
    nlohmann::ordered_json out;
    out["order"] = l.order();
    auto rows = nlohmann::ordered_json::array();
    for (unsigned i : l.rows())
        rows.push_back({i, polynomial_to_json(l.row(i))});
    out["rows"] = rows;
    return out;
}

namespace detail {

inline polynomial class_from_json(const nlohmann::json& arr, const std::string& where) {
    if (!arr.is_array())
        throw config_error(where + ": expected an array of integer coefficients");
    polynomial p;
    unsigned deg = 0;
    for (const auto& v : arr) {
        if (!v.is_number_integer())
            throw config_error(where + ": coefficient " + std::to_string(deg) +
                               " is not an integer");
        p += polynomial::term(integer(v.get<long long>()), deg);
        ++deg;
    }
    return p;
}

inline local_series_ref local_from_json(const nlohmann::json& j, unsigned order,
                                        const std::string& where) {
    if (!j.is_object()) throw config_error(where + ": 'local' must be an object");
    if (j.contains("builtin")) {
        const std::string name = j.at("builtin").get<std::string>();
        if (name == "origin") {
            if (!j.contains("M") || !j.contains("N") || !j.contains("variant"))
                throw config_error(where + ": builtin 'origin' needs fields M, N, variant");
            long long M = j.at("M").get<long long>();
            long long N = j.at("N").get<long long>();
            long long v = j.at("variant").get<long long>();
            if (M < 1) throw config_error(where + ": M must be >= 1");
            if (v != 1 && v != 2) throw config_error(where + ": variant must be 1 or 2");
            return origin_series_ref{static_cast<unsigned>(M), N,
                                     variant_from_int(static_cast<int>(v))};
        }
        if (name == "smooth-point-surface") {
            if (!j.contains("M"))
                throw config_error(where + ": builtin 'smooth-point-surface' needs field M");
            long long M = j.at("M").get<long long>();
            if (M < 1) throw config_error(where + ": M must be >= 1");
            return smooth_point_ref{static_cast<unsigned>(M)};
        }
        throw config_error(where + ": unknown builtin '" + name + "'");
    }
    if (j.contains("series")) {
        const auto& arr = j.at("series");
        if (!arr.is_array() || arr.size() < static_cast<std::size_t>(order) + 1)
            throw config_error(where + ": explicit series needs at least order+1 = " +
                               std::to_string(order + 1) + " coefficient arrays");
        series s(order);
        for (unsigned k = 0; k <= order; ++k)
            s[k] = class_from_json(arr.at(k), where + ".series[" + std::to_string(k) + "]");
        return s;
    }
    throw config_error(where + ": 'local' must contain 'builtin' or 'series'");
}

}  // namespace detail

/* Stratification config: a JSON document
 *   { "order": <int>, "strata": [ { "class": [c0, c1, ...],
 *                                   "local": {...}, "scale": <int> }, ... ] }
 * where "class" lists the coefficient of L^k at index k and "local" is
 * {"builtin":"origin","M":..,"N":..,"variant":..},
 * {"builtin":"smooth-point-surface","M":..} or {"series":[[...],...]}.
 */
inline stratification stratification_from_json(const nlohmann::json& j) try {
    if (!j.is_object()) throw config_error("config root must be an object");
    if (!j.contains("order") || !j.at("order").is_number_integer())
        throw config_error("config needs an integer field 'order'");
    long long order = j.at("order").get<long long>();
    if (order < 0) throw config_error("'order' must be nonnegative");
    if (!j.contains("strata") || !j.at("strata").is_array() || j.at("strata").empty())
        throw config_error("config needs a nonempty array field 'strata'");

    stratification spec;
    spec.order = static_cast<unsigned>(order);
    unsigned idx = 0;
    for (const auto& sj : j.at("strata")) {
        const std::string where = "strata[" + std::to_string(idx) + "]";
        if (!sj.is_object()) throw config_error(where + ": expected an object");
        if (!sj.contains("class")) throw config_error(where + ": missing field 'class'");
        if (!sj.contains("local")) throw config_error(where + ": missing field 'local'");
        stratum st;
        st.cls = detail::class_from_json(sj.at("class"), where + ".class");
        st.local = detail::local_from_json(sj.at("local"), spec.order, where + ".local");
        if (sj.contains("scale")) {
            if (!sj.at("scale").is_number_integer() || sj.at("scale").get<long long>() < 1)
                throw config_error(where + ": 'scale' must be an integer >= 1");
            st.scale = sj.at("scale").get<unsigned>();
        }
        spec.strata.push_back(std::move(st));
        ++idx;
    }
    return spec;
} catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("config field error: ") + e.what());
}

inline stratification load_stratification_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    return stratification_from_json(j);
}

}  // namespace motivic

/**
 * @file document.hpp
 * @brief JSON documents for maps and Hermitian forms.
 *
 * Map document:
 *
 *     {"n": 2,
 *      "components": [[{"exp": [1, 0], "re": "1", "im": "0"}],
 *                     [{"exp": [0, 2], "re": "-3/4", "im": "1/2"}]],
 *      "scales": ["1", "2"]}
 *
 * "scales" is optional (all 1 when absent); with scales the document is the
 * map (sqrt(s_1) p_1, ..., sqrt(s_m) p_m).
 *
 * Form document, a(z, zbar) = sum re+i*im z^row zbar^col:
 *
 *     {"n": 1, "entries": [{"row": [0], "col": [0], "re": "1", "im": "0"}]}
 *
 * Rationals are always strings "p" or "p/q"; numbers are rejected.
 */
#pragma once

#include "../scaled_map.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace hsos::cli {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational rational_field(const json& obj, const char* key)
{
    if (!obj.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    const json& v = obj.at(key);
    if (!v.is_string())
        throw ParseError(std::string("field '") + key + "' must be a rational string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline Monomial exponent_field(const json& obj, const char* key, std::size_t n)
{
    if (!obj.contains(key) || !obj.at(key).is_array())
        throw ParseError(std::string("missing exponent array '") + key + "'");
    const json& arr = obj.at(key);
    if (arr.size() != n)
        throw ParseError("exponent vector length differs from n");
    std::vector<int> e;
    for (auto& x : arr) {
        if (!x.is_number_integer() || x.get<long>() < 0)
            throw ParseError("exponents must be non-negative integers");
        e.push_back(x.get<int>());
    }
    return Monomial(std::move(e));
}

inline std::size_t nvars_field(const json& doc)
{
    if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer() || doc.at("n").get<long>() < 0)
        throw ParseError("document needs a non-negative integer 'n'");
    return doc.at("n").get<std::size_t>();
}

inline json coefficient_json(const GaussianRational& c)
{
    return {{"re", to_string(c.re())}, {"im", to_string(c.im())}};
}

} // namespace detail

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

/// Reads a whole file ("-" for stdin).
inline std::string read_text(const std::string& path)
{
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

inline bool is_form_document(const json& doc) { return doc.is_object() && doc.contains("entries"); }

inline ScaledMap map_from_json(const json& doc)
{
    const std::size_t n = detail::nvars_field(doc);
    if (!doc.contains("components") || !doc.at("components").is_array())
        throw ParseError("map document needs a 'components' array");
    const json& comps = doc.at("components");
    std::vector<Rational> scales(comps.size(), Rational(1));
    if (doc.contains("scales")) {
        const json& sc = doc.at("scales");
        if (!sc.is_array() || sc.size() != comps.size())
            throw ParseError("'scales' must list one rational per component");
        for (std::size_t k = 0; k < sc.size(); ++k) {
            if (!sc[k].is_string())
                throw ParseError("scales must be rational strings");
            try {
                scales[k] = parse_rational(sc[k].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            if (sgn(scales[k]) <= 0)
                throw ParseError("scales must be positive");
        }
    }
    ScaledMap out(n);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (!comps[k].is_array())
            throw ParseError("each component must be a list of terms");
        HoloPoly p(n);
        for (auto& term : comps[k]) {
            if (!term.is_object())
                throw ParseError("each term must be an object");
            p.add_term(detail::exponent_field(term, "exp", n),
                       GaussianRational(detail::rational_field(term, "re"), detail::rational_field(term, "im")));
        }
        out.push_back(scales[k], std::move(p));
    }
    return out;
}

inline json map_to_json(const ScaledMap& h)
{
    json comps = json::array();
    json scales = json::array();
    bool unit = true;
    for (auto& [r, p] : h) {
        json terms = json::array();
        for (auto& [m, c] : p.terms()) {
            json t = detail::coefficient_json(c);
            t["exp"] = m.exponents();
            terms.push_back(std::move(t));
        }
        comps.push_back(std::move(terms));
        scales.push_back(to_string(r));
        unit = unit && r == 1;
    }
    json doc{{"n", h.nvars()}, {"components", std::move(comps)}};
    if (!unit)
        doc["scales"] = std::move(scales);
    return doc;
}

inline HermitianForm form_from_json(const json& doc)
{
    const std::size_t n = detail::nvars_field(doc);
    if (!doc.contains("entries") || !doc.at("entries").is_array())
        throw ParseError("form document needs an 'entries' array");
    FormTerms t;
    for (auto& entry : doc.at("entries")) {
        if (!entry.is_object())
            throw ParseError("each entry must be an object");
        auto key = std::pair{detail::exponent_field(entry, "row", n), detail::exponent_field(entry, "col", n)};
        if (t.count(key))
            throw ParseError("duplicate form entry");
        t[key] = GaussianRational(detail::rational_field(entry, "re"), detail::rational_field(entry, "im"));
    }
    try {
        return HermitianForm::from_terms(n, t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline json form_to_json(const HermitianForm& a)
{
    json entries = json::array();
    for (auto& [key, c] : a.terms()) {
        json e = detail::coefficient_json(c);
        e["row"] = key.first.exponents();
        e["col"] = key.second.exponents();
        entries.push_back(std::move(e));
    }
    return {{"n", a.nvars()}, {"entries", std::move(entries)}};
}

} // namespace hsos::cli

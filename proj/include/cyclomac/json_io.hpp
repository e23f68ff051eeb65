/*
   Copyright 2026 The cyclomac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON encodings. Rationals are strings "p/q" (or "p"); cyclotomic numbers
// are a level plus power-basis coefficient strings, or a single exact string
// where a scalar is expected.

#ifndef CYCLOMAC_JSON_IO_HPP
#define CYCLOMAC_JSON_IO_HPP

#include <json.hpp>

#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "eisenstein.hpp"
#include "macmahon.hpp"
#include "pfd.hpp"
#include "qseries.hpp"

namespace cyclomac {

using Json = nlohmann::ordered_json;

inline Json to_json(const CycNum& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
    return Json{{"level", c.level()}, {"coeffs", coeffs}};
}

inline CycNum cycnum_from_json(const Json& j) {
    CycNum out(j.at("level").get<long>());
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != out.coeffs().size()) throw Error("cyclotomic coefficient count does not match level");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.add_root_multiple(static_cast<long>(i), parse_rational(coeffs[i].get<std::string>()));
    return out;
}

inline Json to_json(const QSeries<Rational>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"order", s.order()}, {"coefficients", coeffs}};
}

inline Json to_json(const QSeries<CycNum>& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) {
        Json row = Json::array();
        for (const auto& r : c.coeffs()) row.push_back(to_string(r));
        coeffs.push_back(row);
    }
    return Json{{"order", s.order()}, {"level", s[0].level()}, {"coefficients", coeffs}};
}

inline QSeries<Rational> rational_series_from_json(const Json& j) {
    std::vector<Rational> v;
    for (const auto& c : j.at("coefficients")) v.push_back(parse_rational(c.get<std::string>()));
    if (v.size() != j.at("order").get<std::size_t>() + 1) throw Error("series length does not match its order");
    return QSeries<Rational>(std::move(v));
}

inline Json to_json(const DirichletCharacter& chi) {
    return Json{{"modulus", chi.modulus()}, {"generator_exponents", chi.generator_exponents()}};
}

inline Json to_json(const EisensteinTerm& t) {
    return Json{{"weight", t.weight},
                {"character", to_json(t.character)},
                {"dilation", t.dilation},
                {"coefficient", t.coefficient.to_string()}};
}

inline Json to_json(const ClosedForm& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms) terms.push_back(to_json(t));
    return Json{{"form", f.g_form ? "G" : "F"}, {"level", f.level}, {"terms", terms}, {"constant", f.constant.to_string()}};
}

inline Json to_json(const Certificate& c) {
    Json j{{"spec", c.spec},
           {"order", c.order},
           {"lhs", c.lhs_label},
           {"rhs", c.rhs_label},
           {"match", c.match},
           {"first_mismatch", nullptr}};
    if (c.first_mismatch)
        j["first_mismatch"] =
            Json{{"exponent", c.first_mismatch->exponent}, {"lhs", c.first_mismatch->lhs}, {"rhs", c.first_mismatch->rhs}};
    return j;
}

}  // namespace cyclomac

#endif  // CYCLOMAC_JSON_IO_HPP

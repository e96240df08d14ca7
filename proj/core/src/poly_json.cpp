/*
   Copyright 2026 The grothmob Authors

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

#include "grothmob/sparse_poly.hpp"

#include <json.hpp>

#include "grothmob/errors.hpp"

namespace grothmob {

std::string to_json(const SparsePoly& f)
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::ordered_json term;
        term["exp"] = e.entries();
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    nlohmann::ordered_json out;
    out["width"] = f.width();
    out["terms"] = std::move(terms);
    return out.dump();
}

SparsePoly poly_from_json(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        SparsePoly f(j.at("width").get<std::size_t>());
        for (const auto& term : j.at("terms")) {
            ExponentVector e(term.at("exp").get<std::vector<ExponentVector::value_type>>());
            if (e.width() != f.width())
                throw ParseError("term width " + std::to_string(e.width()) + " does not match polynomial width");
            const auto coeff = term.at("coeff").get<std::string>();
            Integer c;
            try {
                c = Integer(coeff);
            } catch (const std::exception&) {
                throw ParseError("bad coefficient '" + coeff + "'");
            }
            if (c == 0 || f.coefficient(e) != 0)
                throw ParseError("non-canonical term " + e.to_string());
            f.add_term(e, c);
        }
        return f;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

} // namespace grothmob

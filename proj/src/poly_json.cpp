/*
   Copyright 2026 The nilcheck Authors

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

#include "nilcheck/poly_json.hpp"

namespace nilcheck {

nlohmann::json to_json(const GradedPoly& f) {
    const auto& ctx = *f.context();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        nlohmann::json e = nlohmann::json::array();
        for (std::size_t i = 0; i < ctx.size(); ++i) e.push_back(int(t.mono.e[i]));
        terms.push_back({{"e", std::move(e)}, {"c", t.coeff}});
    }
    return {{"p", f.prime()}, {"vars", ctx.names()}, {"degrees", ctx.degrees()}, {"terms", std::move(terms)}};
}

GradedPoly poly_from_json(const nlohmann::json& j) {
    try {
        auto p = j.at("p").get<std::uint32_t>();
        auto ctx = make_context(j.at("vars").get<std::vector<std::string>>(), j.at("degrees").get<std::vector<int>>());
        std::vector<GradedPoly::Term> terms;
        for (const auto& t : j.at("terms")) {
            auto e = t.at("e").get<std::vector<int>>();
            if (e.size() != ctx->size()) throw ContextError("exponent vector length differs from variable count");
            Monomial m;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0 || e[i] > 255) throw ContextError("exponent out of range");
                m.e[i] = static_cast<std::uint8_t>(e[i]);
            }
            terms.push_back({m, FpElement(t.at("c").get<std::int64_t>(), p).value});
        }
        return GradedPoly::from_terms(ctx, p, std::move(terms));
    } catch (const nlohmann::json::exception& ex) {
        throw ContextError(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

}  // namespace nilcheck

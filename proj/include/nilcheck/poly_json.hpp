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

#pragma once

#include <json.hpp>

#include "nilcheck/poly.hpp"

namespace nilcheck {

/// {"p": 23, "vars": ["t1","t2"], "degrees": [2,2], "terms": [{"e": [1,1], "c": 1}]}
/// Terms are emitted graded-lex descending with coefficients in [0, p).
nlohmann::json to_json(const GradedPoly& f);
GradedPoly poly_from_json(const nlohmann::json& j);

}  // namespace nilcheck

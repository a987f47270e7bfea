// Copyright 2026 The twocp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encodings. Parsers throw ParseError for missing keys and wrong
// types; constructors they call may throw ShapeError or DomainError.
//
//   matrix        {"rows": r, "cols": c, "entries": [[re, im], ...]}  row-major;
//                 an entry may also be a bare real number
//   frobenius     {"dim": n, "mult": matrix, "unit": matrix}
//   algebra       {"blocks": [k, ...]}
//   cpmap         {"dom": algebra, "cod": algebra, "map": matrix}
//   bimodule      {"left": frobenius, "right": frobenius, "carrier_dim": n,
//                  "action": matrix, "carrier": frobenius (optional)}
//   grid          [[algebra, ...], ...]
//   groupoid      {"objects": n, "morphisms": [{"src": i, "tgt": j}],
//                  "comp": [[g, h, k]], "ids": [...], "inv": [...]}
//   measurement   {"system": algebra, "outcomes": n, "map": cpmap}
//   teleportation {"n": n, "system": algebra, "resource": matrix,
//                  "measurement": measurement, "corrections": [cpmap]}

#include <string>

#include <nlohmann/json.hpp>

#include "twocp/bimodule.hpp"
#include "twocp/cpstar.hpp"
#include "twocp/frobenius.hpp"
#include "twocp/groupoid.hpp"
#include "twocp/matrix_model.hpp"
#include "twocp/protocols.hpp"

namespace twocp {

using Json = nlohmann::json;

Json to_json(const ComplexMatrix& m);
Json to_json(const FrobeniusAlgebra& f);
Json to_json(const CStarAlgebra& a);
Json to_json(const CPMap& f);
Json to_json(const DaggerBimodule& b);
Json to_json(const AlgebraMatrix& g);
Json to_json(const FiniteGroupoid& g);
Json to_json(const Measurement& m);
Json to_json(const TeleportationData& t);

ComplexMatrix matrix_from_json(const Json& j);
FrobeniusAlgebra frobenius_from_json(const Json& j);
CStarAlgebra algebra_from_json(const Json& j);
CPMap cpmap_from_json(const Json& j);
DaggerBimodule bimodule_from_json(const Json& j);
AlgebraMatrix grid_from_json(const Json& j);
FiniteGroupoid groupoid_from_json(const Json& j);
Measurement measurement_from_json(const Json& j);
TeleportationData teleportation_from_json(const Json& j);

/// Parses text; syntax errors become ParseError.
Json parse_json(const std::string& text);
/// Reads and parses a file; a missing file is a ParseError.
Json read_json_file(const std::string& path);

}  // namespace twocp

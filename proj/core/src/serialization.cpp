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

#include "twocp/serialization.hpp"

#include <fstream>
#include <sstream>

namespace twocp {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t natural(const Json& j, const char* what) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  const auto v = j.get<long long>();
  if (v < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> naturals(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(natural(e, what));
  return out;
}

double real(const Json& j) {
  if (!j.is_number()) throw ParseError("matrix entry must be a number or [re, im]");
  return j.get<double>();
}

Complex entry(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {real(j[0]), real(j[1])};
  throw ParseError("matrix entry must be a number or [re, im]");
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const FrobeniusAlgebra& f) {
  return {{"dim", f.dim()}, {"mult", to_json(f.mult())}, {"unit", to_json(f.unit())}};
}

Json to_json(const CStarAlgebra& a) { return {{"blocks", a.blocks()}}; }

Json to_json(const CPMap& f) {
  return {{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"map", to_json(f.map())}};
}

Json to_json(const DaggerBimodule& b) {
  Json j = {{"left", to_json(b.left())},
            {"right", to_json(b.right())},
            {"carrier_dim", b.carrier_dim()},
            {"action", to_json(b.action())}};
  if (b.carrier()) j["carrier"] = to_json(*b.carrier());
  return j;
}

Json to_json(const AlgebraMatrix& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(to_json(g.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const FiniteGroupoid& g) {
  Json ms = Json::array();
  for (const auto& m : g.morphisms()) ms.push_back({{"src", m.src}, {"tgt", m.tgt}});
  return {{"objects", g.objects()},
          {"morphisms", std::move(ms)},
          {"comp", g.comp_table()},
          {"ids", g.ids()},
          {"inv", g.inv()}};
}

Json to_json(const Measurement& m) {
  return {{"system", to_json(m.system)}, {"outcomes", m.outcomes}, {"map", to_json(m.map)}};
}

Json to_json(const TeleportationData& t) {
  Json corrections = Json::array();
  for (const auto& c : t.corrections) corrections.push_back(to_json(c));
  return {{"n", t.n},
          {"system", to_json(t.system)},
          {"resource", to_json(t.resource)},
          {"measurement", to_json(t.measurement)},
          {"corrections", std::move(corrections)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = natural(field(j, "rows"), "rows");
  const std::size_t cols = natural(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    std::ostringstream os;
    os << "entries must be an array of " << rows * cols << " values";
    throw ParseError(os.str());
  }
  ComplexMatrix m(idx(rows), idx(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(idx(r), idx(c)) = entry(entries[r * cols + c]);
  }
  return m;
}

FrobeniusAlgebra frobenius_from_json(const Json& j) {
  return FrobeniusAlgebra(natural(field(j, "dim"), "dim"), matrix_from_json(field(j, "mult")),
                          matrix_from_json(field(j, "unit")));
}

CStarAlgebra algebra_from_json(const Json& j) {
  return CStarAlgebra(naturals(field(j, "blocks"), "blocks"));
}

CPMap cpmap_from_json(const Json& j) {
  return CPMap(algebra_from_json(field(j, "dom")), algebra_from_json(field(j, "cod")),
               matrix_from_json(field(j, "map")));
}

DaggerBimodule bimodule_from_json(const Json& j) {
  std::optional<FrobeniusAlgebra> carrier;
  if (j.is_object() && j.contains("carrier")) carrier = frobenius_from_json(j["carrier"]);
  return DaggerBimodule(frobenius_from_json(field(j, "left")),
                        frobenius_from_json(field(j, "right")),
                        natural(field(j, "carrier_dim"), "carrier_dim"),
                        matrix_from_json(field(j, "action")), std::move(carrier));
}

AlgebraMatrix grid_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ParseError("grid must be a nonempty array of rows");
  }
  const std::size_t cols = j[0].size();
  std::vector<CStarAlgebra> cells;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("grid rows must have equal length");
    for (const auto& cell : row) cells.push_back(algebra_from_json(cell));
  }
  return AlgebraMatrix(j.size(), cols, std::move(cells));
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  const Json& ms = field(j, "morphisms");
  if (!ms.is_array()) throw ParseError("morphisms must be an array");
  std::vector<Morphism> morphisms;
  for (const auto& m : ms) {
    morphisms.push_back({natural(field(m, "src"), "src"), natural(field(m, "tgt"), "tgt")});
  }
  const Json& comp = field(j, "comp");
  if (!comp.is_array()) throw ParseError("comp must be an array");
  std::vector<std::array<std::size_t, 3>> table;
  for (const auto& e : comp) {
    if (!e.is_array() || e.size() != 3) throw ParseError("comp entries must be [g, h, k]");
    table.push_back({natural(e[0], "comp"), natural(e[1], "comp"), natural(e[2], "comp")});
  }
  return FiniteGroupoid(natural(field(j, "objects"), "objects"), std::move(morphisms), table,
                        naturals(field(j, "ids"), "ids"), naturals(field(j, "inv"), "inv"));
}

Measurement measurement_from_json(const Json& j) {
  return Measurement(algebra_from_json(field(j, "system")),
                     natural(field(j, "outcomes"), "outcomes"), cpmap_from_json(field(j, "map")));
}

TeleportationData teleportation_from_json(const Json& j) {
  const Json& cs = field(j, "corrections");
  if (!cs.is_array()) throw ParseError("corrections must be an array");
  std::vector<CPMap> corrections;
  for (const auto& c : cs) corrections.push_back(cpmap_from_json(c));
  return {natural(field(j, "n"), "n"), algebra_from_json(field(j, "system")),
          matrix_from_json(field(j, "resource")), measurement_from_json(field(j, "measurement")),
          std::move(corrections)};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace twocp

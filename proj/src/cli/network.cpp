// Copyright 2026 The gqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "gqfi/cli.hpp"
#include "gqfi/errors.hpp"
#include "json.hpp"

namespace gqfi::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be a JSON object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw ParseError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " is missing '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(what + " must be finite");
  return x;
}

int mode_index(const json& j, const std::string& what, int n_modes) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  const auto m = j.get<std::int64_t>();
  if (m < 0 || m >= n_modes) throw ParseError(what + " is out of range");
  return static_cast<int>(m);
}

std::vector<double> number_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, what + " entry"));
  return out;
}

NetworkElement parse_element(const json& e, int n_modes, std::size_t index) {
  const std::string where = "element " + std::to_string(index);
  if (!e.is_object()) throw ParseError(where + " must be a JSON object");
  const json& kind_json = field(e, "kind", where);
  if (!kind_json.is_string()) throw ParseError(where + ": kind must be a string");
  const std::string kind = kind_json.get<std::string>();

  if (kind == "phase") {
    check_keys(e, {"kind", "mode", "theta"}, where);
    return PhaseElement{mode_index(field(e, "mode", where), where + ".mode", n_modes),
                        number(field(e, "theta", where), where + ".theta")};
  }
  if (kind == "bs") {
    check_keys(e, {"kind", "mode_a", "mode_b", "eta"}, where);
    BeamSplitterElement bs{mode_index(field(e, "mode_a", where), where + ".mode_a", n_modes),
                           mode_index(field(e, "mode_b", where), where + ".mode_b", n_modes),
                           number(field(e, "eta", where), where + ".eta")};
    if (bs.mode_a == bs.mode_b) throw ParseError(where + ": beam splitter modes must differ");
    return bs;
  }
  if (kind == "random_passive") {
    check_keys(e, {"kind", "seed"}, where);
    const json& seed = field(e, "seed", where);
    if (!seed.is_number_unsigned()) throw ParseError(where + ".seed must be a non-negative integer");
    return RandomPassiveElement{seed.get<std::uint64_t>()};
  }
  if (kind == "mesh") {
    check_keys(e, {"kind", "rotation_angles", "output_phases"}, where);
    MeshElement mesh;
    mesh.params.n_modes = n_modes;
    const json& angles = field(e, "rotation_angles", where);
    if (!angles.is_array()) throw ParseError(where + ".rotation_angles must be an array");
    for (const auto& pair : angles) {
      const std::vector<double> tp = number_list(pair, where + ".rotation_angles");
      if (tp.size() != 2) throw ParseError(where + ": each rotation angle entry is [theta, phi]");
      mesh.params.rotation_angles.push_back({tp[0], tp[1]});
    }
    mesh.params.output_phases = number_list(field(e, "output_phases", where), where + ".output_phases");
    if (static_cast<int>(mesh.params.rotation_angles.size()) != MeshParams::coupler_count(n_modes)) {
      throw ParseError(where + ": mesh needs N(N-1)/2 rotation angle pairs");
    }
    if (static_cast<int>(mesh.params.output_phases.size()) != n_modes) {
      throw ParseError(where + ": mesh needs N output phases");
    }
    return mesh;
  }
  throw ParseError(where + ": unknown kind '" + kind + "'");
}

Matrix parse_matrix(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + " must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Matrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::vector<double> row = number_list(j[static_cast<std::size_t>(i)], what + " row");
    if (static_cast<Eigen::Index>(row.size()) != rows) throw ParseError(what + " must be square");
    for (Eigen::Index k = 0; k < rows; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
  }
  return m;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

NetworkSpec parse_network(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  check_keys(doc, {"n_modes", "input_squeezing", "covariance", "elements"}, "network");
  NetworkSpec spec;
  const json& n = field(doc, "n_modes", "network");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1 || n.get<std::int64_t>() > 64) {
    throw ParseError("n_modes must be an integer in [1, 64]");
  }
  spec.n_modes = n.get<int>();

  const bool has_r = doc.contains("input_squeezing");
  const bool has_v = doc.contains("covariance");
  if (has_r == has_v) throw ParseError("network needs exactly one of input_squeezing or covariance");
  if (has_r) {
    spec.input_squeezing = number_list(doc["input_squeezing"], "input_squeezing");
    if (static_cast<int>(spec.input_squeezing->size()) != spec.n_modes) {
      throw ParseError("input_squeezing length must equal n_modes");
    }
  } else {
    spec.covariance = parse_matrix(doc["covariance"], "covariance");
    if (spec.covariance->rows() != 2 * spec.n_modes) {
      throw ParseError("covariance must be 2 n_modes square");
    }
  }
  if (doc.contains("elements")) {
    const json& elements = doc["elements"];
    if (!elements.is_array()) throw ParseError("elements must be an array");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      NetworkElement e = parse_element(elements[i], spec.n_modes, i);
      if (std::holds_alternative<BeamSplitterElement>(e) && spec.n_modes < 2) {
        throw ParseError("beam splitter needs at least two modes");
      }
      spec.elements.push_back(std::move(e));
    }
  }
  return spec;
}

NetworkSpec load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open network file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string network_to_json(const NetworkSpec& spec) {
  ordered_json doc;
  doc["n_modes"] = spec.n_modes;
  if (spec.input_squeezing) doc["input_squeezing"] = *spec.input_squeezing;
  if (spec.covariance) doc["covariance"] = matrix_json(*spec.covariance);
  ordered_json elements = ordered_json::array();
  for (const NetworkElement& e : spec.elements) {
    ordered_json item;
    if (const auto* p = std::get_if<PhaseElement>(&e)) {
      item = {{"kind", "phase"}, {"mode", p->mode}, {"theta", p->theta}};
    } else if (const auto* b = std::get_if<BeamSplitterElement>(&e)) {
      item = {{"kind", "bs"}, {"mode_a", b->mode_a}, {"mode_b", b->mode_b}, {"eta", b->eta}};
    } else if (const auto* r = std::get_if<RandomPassiveElement>(&e)) {
      item = {{"kind", "random_passive"}, {"seed", r->seed}};
    } else {
      const MeshParams& m = std::get<MeshElement>(e).params;
      ordered_json angles = ordered_json::array();
      for (const CouplerAngles& a : m.rotation_angles) angles.push_back({a.theta, a.phi});
      item = {{"kind", "mesh"}, {"rotation_angles", angles}, {"output_phases", m.output_phases}};
    }
    elements.push_back(std::move(item));
  }
  doc["elements"] = std::move(elements);
  return doc.dump(2);
}

PassiveTransform network_transform(const NetworkSpec& spec) {
  PassiveTransform k = PassiveTransform::identity(spec.n_modes);
  for (const NetworkElement& e : spec.elements) {
    PassiveTransform step = std::visit(
        [&](const auto& el) -> PassiveTransform {
          using T = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<T, PhaseElement>) {
            return phase_shift(spec.n_modes, el.mode, el.theta);
          } else if constexpr (std::is_same_v<T, BeamSplitterElement>) {
            return beam_splitter(spec.n_modes, el.mode_a, el.mode_b, el.eta);
          } else if constexpr (std::is_same_v<T, RandomPassiveElement>) {
            return random_passive(spec.n_modes, el.seed);
          } else {
            return mesh_to_transform(el.params);
          }
        },
        e);
    k = compose(step, k);
  }
  return k;
}

CovarianceMatrix build_state(const NetworkSpec& spec) {
  const CovarianceMatrix initial = spec.covariance
                                       ? CovarianceMatrix(*spec.covariance)
                                       : input_state(SqueezingVector(*spec.input_squeezing));
  if (spec.elements.empty()) return initial;
  return apply(network_transform(spec), initial);
}

std::string covariance_to_json(const CovarianceMatrix& v) { return matrix_json(v.data()).dump(); }

CovarianceMatrix covariance_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return CovarianceMatrix(parse_matrix(doc, "covariance"));
}

}  // namespace gqfi::cli

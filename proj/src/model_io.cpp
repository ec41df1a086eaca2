/* Copyright 2026 The Relax Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "relax/model_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace relax {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    throw SchemaError(path + ": expected a non-empty array of rows");
  const size_t n_rows = j.size();
  size_t n_cols = 0;
  for (size_t i = 0; i < n_rows; ++i) {
    if (!j[i].is_array())
      throw SchemaError(path + "[" + std::to_string(i) +
                        "]: expected an array");
    if (i == 0)
      n_cols = j[i].size();
    else if (j[i].size() != n_cols)
      throw SchemaError(path + "[" + std::to_string(i) +
                        "]: ragged row length");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(n_rows),
                  static_cast<Eigen::Index>(n_cols));
  for (size_t i = 0; i < n_rows; ++i)
    for (size_t c = 0; c < n_cols; ++c) {
      const json& cell = j[i][c];
      const std::string cell_path = path + "[" + std::to_string(i) + "][" +
                                    std::to_string(c) + "]";
      if (cell.is_number()) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
            cell.get<double>();
      } else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() &&
                 cell[1].is_number()) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
            std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
      } else {
        throw SchemaError(cell_path + ": expected [re, im] or a number");
      }
    }
  return m;
}

json model_to_json(const LindbladModel& model, int n_qubits) {
  json j;
  j["n_qubits"] = n_qubits;
  j["hamiltonian"] = matrix_to_json(model.hamiltonian);
  json diss = json::array();
  for (const auto& l : model.dissipators) diss.push_back(matrix_to_json(l));
  j["dissipators"] = std::move(diss);
  return j;
}

LindbladModel model_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$: expected an object");
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer())
    throw SchemaError("$.n_qubits: expected an integer");
  const int n_qubits = j["n_qubits"].get<int>();
  if (n_qubits < 1 || n_qubits > 5)
    throw SchemaError("$.n_qubits: must be in [1, 5]");
  const int dim = 1 << n_qubits;

  LindbladModel model;
  model.dim = dim;

  if (!j.contains("hamiltonian"))
    throw SchemaError("$.hamiltonian: missing");
  model.hamiltonian = matrix_from_json(j["hamiltonian"], "$.hamiltonian");
  if (model.hamiltonian.rows() != dim || model.hamiltonian.cols() != dim)
    throw SchemaError("$.hamiltonian: expected " + std::to_string(dim) + "x" +
                      std::to_string(dim));
  if (!is_hermitian(model.hamiltonian, 1e-12))
    throw SchemaError("$.hamiltonian: not Hermitian");

  if (!j.contains("dissipators") || !j["dissipators"].is_array())
    throw SchemaError("$.dissipators: expected an array");
  for (size_t k = 0; k < j["dissipators"].size(); ++k) {
    const std::string path = "$.dissipators[" + std::to_string(k) + "]";
    ComplexMatrix l = matrix_from_json(j["dissipators"][k], path);
    if (l.rows() != dim || l.cols() != dim)
      throw SchemaError(path + ": expected " + std::to_string(dim) + "x" +
                        std::to_string(dim));
    model.dissipators.push_back(std::move(l));
  }
  return model;
}

LindbladModel load_model(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw SchemaError("cannot open model file: " + file_path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(file_path + ": " + e.what());
  }
  return model_from_json(j);
}

ControlSpec control_from_json(const json& j, int n_qubits) {
  if (!j.is_object()) throw SchemaError("$: expected an object");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw SchemaError("$.generators: expected an array");

  ControlSpec ctrl;
  for (size_t k = 0; k < j["generators"].size(); ++k) {
    const json& g = j["generators"][k];
    const std::string path = "$.generators[" + std::to_string(k) + "]";
    if (g.is_string()) {
      try {
        ctrl.generators.push_back(named_generator(g.get<std::string>(),
                                                  n_qubits));
      } catch (const Error& e) {
        throw SchemaError(path + ": " + e.what());
      }
    } else {
      ComplexMatrix m = matrix_from_json(g, path);
      if (!is_hermitian(m, 1e-12))
        throw SchemaError(path + ": generator not Hermitian");
      ctrl.generators.push_back(std::move(m));
    }
  }

  if (!j.contains("u") || !j["u"].is_array())
    throw SchemaError("$.u: expected an array of numbers");
  if (j["u"].size() != ctrl.generators.size())
    throw SchemaError("$.u: length must match generators");
  ctrl.u.resize(static_cast<Eigen::Index>(j["u"].size()));
  for (size_t k = 0; k < j["u"].size(); ++k) {
    if (!j["u"][k].is_number())
      throw SchemaError("$.u[" + std::to_string(k) + "]: expected a number");
    ctrl.u[static_cast<Eigen::Index>(k)] = j["u"][k].get<double>();
  }
  return ctrl;
}

ControlSpec load_control(const std::string& file_path, int n_qubits) {
  std::ifstream in(file_path);
  if (!in) throw SchemaError("cannot open control file: " + file_path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(file_path + ": " + e.what());
  }
  return control_from_json(j, n_qubits);
}

}  // namespace relax

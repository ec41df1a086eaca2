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
#ifndef RELAX_MODEL_IO_HPP
#define RELAX_MODEL_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "relax/control.hpp"
#include "relax/lindblad.hpp"

namespace relax {

// Raised on malformed JSON or schema violations; message carries the
// offending field path.
struct SchemaError : Error {
  using Error::Error;
};

// Complex scalar encodes as [re, im]; matrices as row-major nested arrays.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j,
                               const std::string& path);

// { "n_qubits": n, "hamiltonian": matrix, "dissipators": [matrix, ...] }
nlohmann::json model_to_json(const LindbladModel& model, int n_qubits);
LindbladModel model_from_json(const nlohmann::json& j);
LindbladModel load_model(const std::string& file_path);

// { "generators": ["X1", ...] | [matrix, ...], "u": [floats] }
ControlSpec control_from_json(const nlohmann::json& j, int n_qubits);
ControlSpec load_control(const std::string& file_path, int n_qubits);

}  // namespace relax

#endif  // RELAX_MODEL_IO_HPP

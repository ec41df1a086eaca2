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
//
// relax: fixed points of relaxing quantum semigroups under Hamiltonian
// control.  Subcommands: fixed-point, trajectory, synthesize,
// manifold-sample, ellipsoid, sweep-entanglement, pulsed, validate.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relax/control.hpp"
#include "relax/entanglement.hpp"
#include "relax/lindblad.hpp"
#include "relax/model_io.hpp"
#include "relax/operators.hpp"
#include "relax/scenarios.hpp"

namespace {

constexpr const char* kVersion = "relax 1.0.0";
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

bool log_enabled() {
  const char* v = std::getenv("RELAX_LOG");
  return v != nullptr && v[0] != '\0' && std::string(v) != "0";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[relax] " << msg << "\n";
}

// 17 significant digits round-trips doubles exactly.
std::string fmt(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const Table& t) {
  out << "# " << kVersion << "\n";
  for (const auto& [k, v] : t.meta) out << "# " << k << ": " << v << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i)
    out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << fmt(row[i]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::json j;
  j["tool"] = kVersion;
  for (const auto& [k, v] : t.meta) j["meta"][k] = v;
  j["columns"] = t.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double x : row) r.push_back(nlohmann::json::parse(fmt(x)));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
}

void emit(const std::string& output, const std::string& format,
          const Table& t) {
  std::ostringstream buf;
  if (format == "json")
    write_json(buf, t);
  else
    write_csv(buf, t);
  if (output.empty() || output == "-") {
    std::cout << buf.str();
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw relax::Error("cannot open output file: " + output);
    f << buf.str();
  }
}

int basis_qubits(const relax::LindbladModel& model) {
  int n = 0;
  while ((1 << n) < model.dim) ++n;
  if ((1 << n) != model.dim)
    throw relax::DimensionError("model dimension is not a power of two");
  return n;
}

std::string join_labels(const relax::OperatorBasis& basis) {
  std::string s;
  for (size_t i = 0; i < basis.labels.size(); ++i)
    s += (i ? "," : "") + basis.labels[i];
  return s;
}

std::vector<double> parse_vector(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

relax::ControlSpec cli_control(const relax::LindbladModel& model,
                               const std::string& control_path, double ux,
                               double uy, double uz) {
  const int nq = basis_qubits(model);
  if (!control_path.empty()) return relax::load_control(control_path, nq);
  relax::ControlSpec ctrl;
  ctrl.generators = {relax::local_spin_generator('X', 1, nq),
                     relax::local_spin_generator('Y', 1, nq),
                     relax::local_spin_generator('Z', 1, nq)};
  ctrl.u.resize(3);
  ctrl.u << ux, uy, uz;
  return ctrl;
}

std::string spectrum_string(const Eigen::VectorXcd& spectrum) {
  std::string s;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    if (i) s += "; ";
    s += fmt(spectrum[i].real());
    if (std::abs(spectrum[i].imag()) > 0)
      s += (spectrum[i].imag() >= 0 ? "+" : "") + fmt(spectrum[i].imag()) +
           "i";
  }
  return s;
}

std::vector<relax::ComplexMatrix> named_generator_set(
    const std::string& kind, int n_qubits) {
  if (kind == "local") return relax::local_generators(n_qubits);
  if (kind == "full") return relax::full_generators(n_qubits);
  throw relax::DomainError("--generators must be 'local' or 'full'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed points of relaxing quantum semigroups under "
               "Hamiltonian control"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 0;
  app.add_option("--output,-o", output, "Output file (default stdout)")
      ->capture_default_str();
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();

  std::string model_path, control_path, target_csv, r0_csv;
  std::string generators_kind = "local";
  double ux = 0, uy = 0, uz = 0;
  double gamma1 = 1.0, gamma2 = 1.0, gamma = 1.0;
  double j_min = 0.01, j_max = 1e4;
  double t_final = 1.0, dt = 0.1, scale = 1.0;
  int samples = 100, steps = 100, points = 25;

  auto* fixed = app.add_subcommand("fixed-point",
                                   "Fixed point of a controlled model");
  fixed->add_option("--model", model_path)->required();
  fixed->add_option("--control", control_path,
                    "ControlSpec JSON (overrides --ux/--uy/--uz)");
  fixed->add_option("--ux", ux);
  fixed->add_option("--uy", uy);
  fixed->add_option("--uz", uz);

  auto* traj = app.add_subcommand("trajectory",
                                  "Closed-form propagation r(t)");
  traj->add_option("--model", model_path)->required();
  traj->add_option("--control", control_path);
  traj->add_option("--ux", ux);
  traj->add_option("--uy", uy);
  traj->add_option("--uz", uz);
  traj->add_option("--t", t_final, "Final time")->capture_default_str();
  traj->add_option("--steps", steps, "Output rows")->capture_default_str();
  traj->add_option("--r0", r0_csv, "Initial coherence vector (default 0)");

  auto* synth = app.add_subcommand("synthesize",
                                   "Controller amplitudes for a target");
  synth->add_option("--model", model_path)->required();
  synth->add_option("--target", target_csv, "Target coherence vector")
      ->required();
  synth->add_option("--generators", generators_kind, "local or full")
      ->capture_default_str();

  auto* sample = app.add_subcommand("manifold-sample",
                                    "Random stabilized fixed points");
  sample->add_option("--model", model_path)->required();
  sample->add_option("--samples", samples)->capture_default_str();
  sample->add_option("--scale", scale, "Amplitude scale")
      ->capture_default_str();
  sample->add_option("--generators", generators_kind, "local or full")
      ->capture_default_str();

  auto* ellipsoid = app.add_subcommand(
      "ellipsoid", "One-spin stabilizable ellipsoid samples");
  ellipsoid->add_option("--gamma1", gamma1)->capture_default_str();
  ellipsoid->add_option("--gamma2", gamma2)->capture_default_str();
  ellipsoid->add_option("--samples", samples)->capture_default_str();
  ellipsoid->add_option("--scale", scale)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep-entanglement",
                                   "Fixed-point entanglement vs J");
  sweep->add_option("--gamma", gamma)->capture_default_str();
  sweep->add_option("--j-min", j_min)->capture_default_str();
  sweep->add_option("--j-max", j_max)->capture_default_str();
  sweep->add_option("--points", points)->capture_default_str();

  auto* pulsed = app.add_subcommand("pulsed",
                                    "Stroboscopic pulsed steady state");
  pulsed->add_option("--gamma1", gamma1)->capture_default_str();
  pulsed->add_option("--gamma2", gamma2)->capture_default_str();
  pulsed->add_option("--ux", ux)->capture_default_str();
  pulsed->add_option("--uy", uy)->capture_default_str();
  pulsed->add_option("--uz", uz)->capture_default_str();
  pulsed->add_option("--dt", dt, "Pulse repetition interval")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate",
                                      "Check a model file and report");
  validate->add_option("--model", model_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fixed) {
      const relax::LindbladModel model = relax::load_model(model_path);
      const auto basis = relax::pauli_string_basis(basis_qubits(model));
      const relax::ControlSpec ctrl =
          cli_control(model, control_path, ux, uy, uz);
      const relax::FixedPointResult fp =
          relax::stabilized_fixed_point(model, ctrl, basis);
      log_line("condition number " + fmt(fp.condition_number));
      Table t;
      t.meta = {{"command", "fixed-point"},
                {"model", model_path},
                {"basis", join_labels(*basis)},
                {"relaxing", fp.relaxing ? "true" : "false"},
                {"spectrum", spectrum_string(fp.spectrum)}};
      t.columns = basis->labels;
      t.rows.push_back(
          std::vector<double>(fp.r_f.data(), fp.r_f.data() + fp.r_f.size()));
      emit(output, format, t);
    } else if (*traj) {
      const relax::LindbladModel model = relax::load_model(model_path);
      const auto basis = relax::pauli_string_basis(basis_qubits(model));
      relax::LindbladModel controlled = model;
      controlled.hamiltonian += relax::control_hamiltonian(
          cli_control(model, control_path, ux, uy, uz));
      const relax::CoherenceRep rep = relax::build_affine(controlled, basis);
      relax::CoherenceVector r0 =
          relax::CoherenceVector::Zero(basis->size());
      if (!r0_csv.empty()) {
        const std::vector<double> vals = parse_vector(r0_csv);
        if (static_cast<int>(vals.size()) != basis->size())
          throw relax::DimensionError("--r0 length mismatch");
        for (int i = 0; i < basis->size(); ++i) r0[i] = vals[i];
      }
      if (steps < 1) throw relax::DomainError("--steps must be >= 1");
      Table t;
      t.meta = {{"command", "trajectory"},
                {"model", model_path},
                {"basis", join_labels(*basis)},
                {"t", fmt(t_final)}};
      t.columns.push_back("time");
      for (const auto& l : basis->labels) t.columns.push_back(l);
      for (int s = 0; s <= steps; ++s) {
        const double time = t_final * s / steps;
        const relax::CoherenceVector r = relax::propagate(rep, r0, time);
        std::vector<double> row{time};
        row.insert(row.end(), r.data(), r.data() + r.size());
        t.rows.push_back(std::move(row));
      }
      emit(output, format, t);
    } else if (*synth) {
      const relax::LindbladModel model = relax::load_model(model_path);
      const int nq = basis_qubits(model);
      const auto basis = relax::pauli_string_basis(nq);
      const auto gens = named_generator_set(generators_kind, nq);
      const std::vector<double> vals = parse_vector(target_csv);
      if (static_cast<int>(vals.size()) != basis->size())
        throw relax::DimensionError("--target length mismatch");
      relax::CoherenceVector target(basis->size());
      for (int i = 0; i < basis->size(); ++i) target[i] = vals[i];
      const relax::SynthesisResult res =
          relax::synthesize_controller(model, gens, target, basis);
      Table t;
      t.meta = {{"command", "synthesize"},
                {"model", model_path},
                {"generators", generators_kind},
                {"residual", fmt(res.residual)},
                {"stabilizable", res.stabilizable ? "true" : "false"}};
      for (size_t i = 0; i < gens.size(); ++i)
        t.columns.push_back("u" + std::to_string(i));
      t.rows.push_back(
          std::vector<double>(res.u.data(), res.u.data() + res.u.size()));
      emit(output, format, t);
    } else if (*sample) {
      const relax::LindbladModel model = relax::load_model(model_path);
      const int nq = basis_qubits(model);
      const auto basis = relax::pauli_string_basis(nq);
      const auto gens = named_generator_set(generators_kind, nq);
      const relax::ManifoldSample ms = relax::sample_manifold(
          model, gens, samples, scale, seed, basis);
      Table t;
      t.meta = {{"command", "manifold-sample"},
                {"model", model_path},
                {"basis", join_labels(*basis)},
                {"seed", std::to_string(seed)},
                {"scale", fmt(scale)},
                {"skipped", std::to_string(ms.skipped)}};
      t.columns = basis->labels;
      for (const auto& p : ms.points)
        t.rows.push_back(
            std::vector<double>(p.r_f.data(), p.r_f.data() + p.r_f.size()));
      emit(output, format, t);
    } else if (*ellipsoid) {
      const relax::LindbladModel model =
          relax::one_spin_model({gamma1, gamma2});
      const auto basis = relax::pauli_string_basis(1);
      const relax::ManifoldSample ms = relax::sample_manifold(
          model, relax::local_generators(1), samples, scale, seed, basis);
      Table t;
      t.meta = {{"command", "ellipsoid"},
                {"gamma1", fmt(gamma1)},
                {"gamma2", fmt(gamma2)},
                {"seed", std::to_string(seed)},
                {"skipped", std::to_string(ms.skipped)}};
      t.columns = {"X", "Y", "Z", "ellipsoid_residual"};
      for (const auto& p : ms.points) {
        const double x = p.r_f[0], y = p.r_f[1], z = p.r_f[2];
        const double res = (z - 0.5) * (z - 0.5) +
                           (gamma2 / gamma1) * (x * x + y * y) - 0.25;
        t.rows.push_back({x, y, z, res});
      }
      emit(output, format, t);
    } else if (*sweep) {
      if (points < 2) throw relax::DomainError("--points must be >= 2");
      if (j_min <= 0 || j_max <= j_min)
        throw relax::DomainError("need 0 < --j-min < --j-max");
      std::vector<double> js(points);
      for (int i = 0; i < points; ++i)
        js[i] = j_min * std::pow(j_max / j_min,
                                 static_cast<double>(i) / (points - 1));
      const auto rows = relax::entanglement_vs_J(gamma, js);
      Table t;
      t.meta = {{"command", "sweep-entanglement"},
                {"gamma", fmt(gamma)},
                {"j_min", fmt(j_min)},
                {"j_max", fmt(j_max)}};
      t.columns = {"J", "eof", "fidelity_to_rho_e", "ok"};
      for (const auto& r : rows) {
        if (!r.ok) log_line("J=" + fmt(r.coupling) + " failed: " + r.error);
        t.rows.push_back({r.coupling, r.eof, r.fidelity, r.ok ? 1.0 : 0.0});
      }
      emit(output, format, t);
    } else if (*pulsed) {
      const relax::LindbladModel model =
          relax::one_spin_model({gamma1, gamma2});
      relax::PulseTrain train;
      train.generators = {relax::local_spin_generator('X', 1, 1),
                          relax::local_spin_generator('Y', 1, 1),
                          relax::local_spin_generator('Z', 1, 1)};
      train.u.resize(3);
      train.u << ux, uy, uz;
      train.dt = dt;
      const relax::CoherenceVector r =
          relax::pulsed_steady_state(model, train);
      Table t;
      t.meta = {{"command", "pulsed"},
                {"gamma1", fmt(gamma1)},
                {"gamma2", fmt(gamma2)},
                {"dt", fmt(dt)}};
      t.columns = {"X", "Y", "Z", "transverse"};
      t.rows.push_back({r[0], r[1], r[2], std::hypot(r[0], r[1])});
      emit(output, format, t);
    } else if (*validate) {
      const relax::LindbladModel model = relax::load_model(model_path);
      const auto basis = relax::pauli_string_basis(basis_qubits(model));
      const relax::CoherenceRep rep = relax::build_affine(model, basis);
      const relax::RelaxingDiagnostics diag = relax::is_relaxing(rep);
      std::ostream* out = &std::cout;
      std::ofstream f;
      if (!output.empty() && output != "-") {
        f.open(output);
        out = &f;
      }
      *out << "model: " << model_path << "\n"
           << "n_qubits: " << basis->n_qubits << "\n"
           << "dissipators: " << model.dissipators.size() << "\n"
           << "relaxing: " << (diag.relaxing ? "true" : "false") << "\n"
           << "spectral_abscissa: " << fmt(diag.spectral_abscissa) << "\n"
           << "condition_number: " << fmt(diag.condition_number) << "\n"
           << "spectrum: " << spectrum_string(diag.spectrum) << "\n";
      if (diag.relaxing) {
        const relax::FixedPointResult fp = relax::fixed_point(rep);
        *out << "fixed_point:";
        for (int i = 0; i < basis->size(); ++i)
          *out << " " << basis->labels[i] << "=" << fmt(fp.r_f[i]);
        *out << "\n";
      }
    }
  } catch (const relax::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const relax::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const relax::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const relax::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

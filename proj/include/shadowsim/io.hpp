#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "shadowsim/bosons.hpp"
#include "shadowsim/fermions.hpp"
#include "shadowsim/heisenberg.hpp"
#include "shadowsim/types.hpp"

namespace shadowsim::io {

using json = nlohmann::ordered_json;

// Problem files carry 1-based physics indices; parsing converts to library
// conventions at this boundary and nowhere else.

struct FermionProblem {
  int n = 0;
  Matrix gamma;     // canonical purely imaginary form
  double offset = 0.0;
  bool product = false;  // false: vacuum initial state
  std::vector<int> occupied;
  std::vector<QuarticTerm> quartic;
  std::vector<std::vector<int>> subsets;  // Majorana mode subsets, 1-based
};

struct BosonProblem {
  OscillatorNetwork net;
  RealVector p0;
  RealVector q0;
  bool quadratic = false;
  std::vector<std::vector<int>> subsets;  // 0-based columns of B
};

struct QubitProblem {
  int n = 0;
  std::vector<std::pair<std::string, cplx>> terms;
  bool full_pauli = false;
  bool all_zero = true;
  Vector statevector;
};

struct HeisenbergProblem {
  int n = 0;
  std::vector<std::pair<std::string, cplx>> op;
  bool circuit_mode = false;
  std::vector<Gate> gates;
  std::vector<std::pair<std::string, cplx>> hamiltonian;
};

struct CorrelatorProblem {
  std::string system;  // "fermion" | "qubit"
  FermionProblem fermion;
  QubitProblem qubit;
};

struct Problem {
  std::string type;  // fermion | boson | qubit | correlator | heisenberg
  std::vector<double> times;
  FermionProblem fermion;
  BosonProblem boson;
  QubitProblem qubit;
  CorrelatorProblem correlator;
  HeisenbergProblem heisenberg;
};

json load_json_file(const std::string& path);
Problem parse_problem(const json& j);

// "start:end:step" (both endpoints, step > 0) or a comma-separated list.
std::vector<double> parse_times(const std::string& text);

struct SeriesRow {
  double time = 0.0;
  std::string label;
  cplx value;
};

std::string format_double(double x);  // shortest-exact, CSV cells
std::string csv_field(const std::string& raw);
void write_series_csv(const std::string& path,
                      const std::vector<SeriesRow>& rows);
void write_json_file(const std::string& path, const json& j);

}  // namespace shadowsim::io

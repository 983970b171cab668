#include "shadowsim/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "shadowsim/acceptance.hpp"
#include "shadowsim/bosons.hpp"
#include "shadowsim/correlators.hpp"
#include "shadowsim/expm.hpp"
#include "shadowsim/fermions.hpp"
#include "shadowsim/heisenberg.hpp"
#include "shadowsim/io.hpp"
#include "shadowsim/oracle.hpp"
#include "shadowsim/qubits.hpp"
#include "shadowsim/shadow.hpp"

namespace shadowsim {

namespace {

using io::json;
using io::SeriesRow;

struct RunOptions {
  std::string input;
  std::string output_dir = ".";
  std::string times;
  double tol = 1e-10;
  double verify_tol = 1e-8;
  double leakage_tol = 1e-6;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  bool verify = false;
};

void finish(const RunOptions& opt, const std::vector<SeriesRow>& rows,
            const json& report) {
  const std::filesystem::path dir(opt.output_dir);
  std::filesystem::create_directories(dir);
  io::write_series_csv((dir / "series.csv").string(), rows);
  io::write_json_file((dir / "report.json").string(), report);
}

json sparsity_entry(const SparseMatrix& hs) {
  return json{{"dim", hs.rows()},
              {"nnz", hs.nnz()},
              {"max_row_nnz", hs.max_row_nnz()}};
}

json real_array(const std::vector<double>& v) { return json(v); }

struct VerifyLog {
  json per_time = json::array();
  double max_error = 0.0;

  void add(double t, double err) {
    per_time.push_back(json{{"time", t}, {"max_error", err}});
    max_error = std::max(max_error, err);
  }
};

// Refusal paths still produce report.json; the series is whatever was
// computed before the refusal.
[[noreturn]] void refuse_leakage(const RunOptions& opt,
                                 const std::vector<SeriesRow>& rows,
                                 json& report, double leakage) {
  report["status"] = "refused: operator set is not closed under [H, .]";
  finish(opt, rows, report);
  throw LeakageError("leakage " + io::format_double(leakage) +
                     " exceeds the closure gate " +
                     io::format_double(opt.leakage_tol));
}

int finish_run(const RunOptions& opt, const std::vector<SeriesRow>& rows,
               json& report, const VerifyLog& vlog) {
  if (opt.verify) {
    report["verify"] = json{{"max_error", vlog.max_error},
                            {"per_time", vlog.per_time}};
    if (vlog.max_error > opt.verify_tol) {
      report["status"] = "verification failed";
      finish(opt, rows, report);
      throw VerificationError(
          "oracle max error " + io::format_double(vlog.max_error) +
          " exceeds " + io::format_double(opt.verify_tol));
    }
  }
  report["status"] = "ok";
  finish(opt, rows, report);
  return 0;
}

void put_common(json& report, const RunOptions& opt,
                const std::vector<double>& times) {
  report["times"] = real_array(times);
  report["tol"] = opt.tol;
  report["seed"] = opt.seed;
  report["shots"] = opt.shots;
}

double shadow_distance(const ShadowState& a, const ShadowState& b) {
  double err = (a.amplitudes - b.amplitudes).norm();
  return std::max(err,
                  std::abs(a.normA - b.normA) / std::max(1.0, b.normA));
}

std::string subset_label(const std::vector<int>& idx, int base) {
  std::string s = "E[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i] + base);
  }
  return s + "]";
}

int gamma_degree(const Matrix& gamma) {
  int d = 0;
  for (Eigen::Index j = 0; j < gamma.rows(); ++j) {
    int row = 0;
    for (Eigen::Index k = 0; k < gamma.cols(); ++k) {
      if (k != j && std::abs(gamma(j, k)) > 1e-14) ++row;
    }
    d = std::max(d, row);
  }
  return d;
}

// ---- fermion --------------------------------------------------------------

int run_fermion(const io::Problem& pr, const RunOptions& opt) {
  const auto& fp = pr.fermion;
  require(!pr.times.empty(), "fermion: no times given (file or --times)");
  ShadowHamiltonian sh = fermion_shadow(fp.gamma);

  json report;
  report["type"] = "fermion";
  report["n"] = fp.n;
  put_common(report, opt, pr.times);
  report["energy_offset"] = fp.offset;

  double leakage = 0.0;  // exact closure of the quadratic pair algebra
  if (!fp.quartic.empty()) {
    check_oracle_dim(Eigen::Index(1) << fp.n);
    Matrix hd = fermion_hamiltonian_dense(fp.gamma);
    for (const auto& qt : fp.quartic) hd += quartic_term_dense(fp.n, qt);
    leakage = leakage_diagnostic(hd, majorana_pair_set(fp.n), sh.hs);
  }
  sh.leakage = leakage;
  report["leakage"] = leakage;
  report["hermitian_defect"] = sh.hermitian_defect;
  report["sparsity"] = sparsity_entry(sh.hs);
  const double gmax = fp.gamma.size() ? fp.gamma.cwiseAbs().maxCoeff() : 0.0;
  report["norm_bounds"] =
      json{{"hs_max_abs", sh.hs.max_abs()},
           {"hs_entry_bound", 2.0 * gmax},
           {"max_row_nnz", sh.hs.max_row_nnz()},
           {"row_nnz_bound", 2 * gamma_degree(fp.gamma)}};
  if (leakage > opt.leakage_tol) refuse_leakage(opt, {}, report, leakage);

  const ShadowState st0 =
      fp.product ? product_shadow(fp.n, fp.occupied) : vacuum_shadow(fp.n);
  report["normA"] = st0.normA;

  Matrix hd;
  OperatorSet set;
  Vector psi0;
  if (opt.verify) {
    check_oracle_dim(Eigen::Index(1) << fp.n);
    set = majorana_pair_set(fp.n);
    hd = fermion_hamiltonian_dense(fp.gamma);
    psi0 = basis_ket(fp.n, fp.product ? fp.occupied : std::vector<int>{});
  }

  std::vector<SeriesRow> rows;
  VerifyLog vlog;
  std::uint64_t stream = 0;
  for (double t : pr.times) {
    const ShadowState st = evolve_shadow(sh, st0, t, opt.tol);
    for (Eigen::Index m = 0; m < st.amplitudes.size(); ++m) {
      rows.push_back({t, st.labels[m], st.amplitudes[m]});
    }
    for (const auto& modes : fp.subsets) {
      rows.push_back({t, subset_label(modes, 0),
                      cplx(subset_energy(fp.gamma, st, modes), 0.0)});
      if (opt.shots > 0) {
        CounterRng rng(opt.seed, stream++);
        rows.push_back(
            {t, subset_label(modes, 0) + ":sampled",
             cplx(subset_energy_sampled(fp.gamma, st, modes, opt.shots, rng),
                  0.0)});
      }
    }
    if (opt.verify) {
      const Vector psi_t = evolve_full(hd, psi0, t);
      vlog.add(t, shadow_distance(st, shadow_from_state(psi_t, set)));
    }
  }
  return finish_run(opt, rows, report, vlog);
}

// ---- boson ----------------------------------------------------------------

int run_boson(const io::Problem& pr, const RunOptions& opt) {
  const auto& bp = pr.boson;
  require(!pr.times.empty(), "boson: no times given (file or --times)");
  validate_network(bp.net);
  const BosonBasis basis = boson_basis(bp.net);
  ShadowHamiltonian sh = boson_shadow(bp.net);
  const int m_lin = static_cast<int>(basis.labels.size());
  if (bp.quadratic) {
    sh.hs = boson_quadratic_hamiltonian(sh.hs);
    sh.labels = boson_quadratic_labels(basis);
    sh.hermitian_defect = hermitian_defect(sh.hs);
  }
  require(bp.subsets.empty() || bp.quadratic,
          "boson: subset energies need \"quadratic\": true");
  for (const auto& s : bp.subsets) {
    for (int c : s) {
      require(c >= 0 && c < m_lin, "boson: subset column out of range");
    }
  }

  json report;
  report["type"] = "boson";
  report["n"] = static_cast<int>(bp.net.masses.size());
  put_common(report, opt, pr.times);
  report["columns"] = json(basis.labels);
  const double e0 = classical_energy(bp.net, bp.p0, bp.q0);
  report["classical_energy"] = e0;
  report["leakage"] = sh.leakage;
  report["hermitian_defect"] = sh.hermitian_defect;
  report["sparsity"] = sparsity_entry(sh.hs);
  report["norm_bounds"] = json{{"hs_max_abs", sh.hs.max_abs()}};

  const ShadowState st0 = bp.quadratic
                              ? boson_quadratic_state(basis, bp.p0, bp.q0)
                              : boson_shadow_state(basis, bp.p0, bp.q0);
  report["normA"] = st0.normA;

  std::vector<SeriesRow> rows;
  VerifyLog vlog;
  std::uint64_t stream = 0;
  for (double t : pr.times) {
    const ShadowState st = evolve_shadow(sh, st0, t, opt.tol);
    for (Eigen::Index m = 0; m < st.amplitudes.size(); ++m) {
      rows.push_back({t, st.labels[m], st.amplitudes[m]});
    }
    for (const auto& cols : bp.subsets) {
      rows.push_back({t, subset_label(cols, 1),
                      cplx(boson_subset_energy(st, m_lin, cols), 0.0)});
      if (opt.shots > 0) {
        CounterRng rng(opt.seed, stream++);
        rows.push_back({t, subset_label(cols, 1) + ":sampled",
                        cplx(boson_subset_energy_sampled(st, m_lin, cols,
                                                         opt.shots, rng),
                             0.0)});
      }
    }
    if (opt.verify) {
      RealVector p = bp.p0, q = bp.q0;
      classical_evolve(bp.net, p, q, t);
      const ShadowState os = bp.quadratic
                                 ? boson_quadratic_state(basis, p, q)
                                 : boson_shadow_state(basis, p, q);
      double err = shadow_distance(st, os);
      err = std::max(err, std::abs(classical_energy(bp.net, p, q) - e0) /
                              std::max(1.0, e0));
      vlog.add(t, err);
    }
  }
  return finish_run(opt, rows, report, vlog);
}

// ---- qubit ----------------------------------------------------------------

struct OneLocalSplit {
  RealMatrix w;
  double offset = 0.0;
  bool extras = false;  // any term of weight >= 2
};

OneLocalSplit split_one_local(int n,
                              const std::vector<std::pair<std::string, cplx>>&
                                  terms) {
  OneLocalSplit out;
  out.w = RealMatrix::Zero(n, 3);
  for (const auto& [word, c] : terms) {
    if (std::abs(c.imag()) > 1e-12) {
      throw NonHermitianError("qubit: coefficients must be real");
    }
    const ParsedPauli pp = parse_pauli(word, n);
    const int wgt = pauli_weight(pp.p);
    if (wgt == 0) {
      out.offset += c.real();
    } else if (wgt == 1) {
      const int b = std::countr_zero(pp.p.x | pp.p.z);
      const bool hx = (pp.p.x >> b) & 1;
      const bool hz = (pp.p.z >> b) & 1;
      const int axis = hx ? (hz ? 1 : 0) : 2;
      out.w(n - b - 1, axis) += c.real();
    } else {
      out.extras = true;
    }
  }
  return out;
}

int run_qubit(const io::Problem& pr, const RunOptions& opt) {
  const auto& qp = pr.qubit;
  require(!pr.times.empty(), "qubit: no times given (file or --times)");

  json report;
  report["type"] = "qubit";
  report["n"] = qp.n;
  report["set"] = qp.full_pauli ? "full-pauli" : "one-local";
  put_common(report, opt, pr.times);

  ShadowHamiltonian sh;
  ShadowState st0;
  double offset = 0.0;
  if (qp.full_pauli) {
    const auto terms = collect_pauli_terms(qp.n, qp.terms);
    sh = full_pauli_shadow(qp.n, terms);
    const Vector psi = qp.all_zero
                           ? Vector::Unit(Eigen::Index(1) << qp.n, 0)
                           : qp.statevector;
    st0 = shadow_via_bell(qp.n, psi);
  } else {
    const OneLocalSplit split = split_one_local(qp.n, qp.terms);
    offset = split.offset;
    sh = one_local_shadow(split.w);
    if (split.extras) {
      check_oracle_dim(Eigen::Index(1) << qp.n);
      const double leakage =
          leakage_diagnostic(pauli_terms_dense(qp.n, collect_pauli_terms(
                                                          qp.n, qp.terms)),
                             one_local_set(qp.n), sh.hs);
      sh.leakage = leakage;
      report["energy_offset"] = offset;
      report["leakage"] = leakage;
      report["hermitian_defect"] = sh.hermitian_defect;
      report["sparsity"] = sparsity_entry(sh.hs);
      if (leakage > opt.leakage_tol) refuse_leakage(opt, {}, report, leakage);
    }
    if (qp.all_zero) {
      st0 = all_zero_shadow(qp.n);
    } else {
      check_oracle_dim(Eigen::Index(1) << qp.n);
      st0 = shadow_from_state(qp.statevector, one_local_set(qp.n));
    }
  }
  report["energy_offset"] = offset;
  report["leakage"] = sh.leakage;
  report["hermitian_defect"] = sh.hermitian_defect;
  report["sparsity"] = sparsity_entry(sh.hs);
  report["norm_bounds"] = json{{"hs_max_abs", sh.hs.max_abs()}};
  report["normA"] = st0.normA;

  Matrix hd;
  OperatorSet set;
  Vector psi0;
  if (opt.verify) {
    check_oracle_dim(Eigen::Index(1) << qp.n);
    if (qp.full_pauli) {
      if (qp.n > 5) {
        throw CapacityError("qubit: full-pauli verification supported to n = 5");
      }
      set = full_pauli_set(qp.n);
    } else {
      set = one_local_set(qp.n);
    }
    hd = pauli_terms_dense(qp.n, collect_pauli_terms(qp.n, qp.terms));
    psi0 = qp.all_zero ? Vector::Unit(Eigen::Index(1) << qp.n, 0)
                       : qp.statevector;
  }

  std::vector<SeriesRow> rows;
  VerifyLog vlog;
  for (double t : pr.times) {
    const ShadowState st = evolve_shadow(sh, st0, t, opt.tol);
    for (Eigen::Index m = 0; m < st.amplitudes.size(); ++m) {
      rows.push_back({t, st.labels[m], st.amplitudes[m]});
    }
    if (opt.verify) {
      const Vector psi_t = evolve_full(hd, psi0, t);
      vlog.add(t, shadow_distance(st, shadow_from_state(psi_t, set)));
    }
  }
  return finish_run(opt, rows, report, vlog);
}

// ---- correlator -----------------------------------------------------------

int run_correlator(const io::Problem& pr, const RunOptions& opt) {
  const auto& cp = pr.correlator;
  require(!pr.times.empty(), "correlator: no times given (file or --times)");

  json report;
  report["type"] = "correlator";
  report["system"] = cp.system;
  put_common(report, opt, pr.times);

  SparseMatrix hs;
  std::vector<std::string> labels;
  OperatorSet set;
  Matrix hd;
  Matrix rho;
  Matrix c0;
  if (cp.system == "fermion") {
    const auto& fp = cp.fermion;
    check_oracle_dim(Eigen::Index(1) << fp.n);
    ShadowHamiltonian sh = fermion_shadow(fp.gamma);
    set = majorana_pair_set(fp.n);
    hd = fermion_hamiltonian_dense(fp.gamma);
    report["n"] = fp.n;
    report["hermitian_defect"] = sh.hermitian_defect;
    report["sparsity"] = sparsity_entry(sh.hs);
    double leakage = 0.0;
    if (!fp.quartic.empty()) {
      Matrix hq = hd;
      for (const auto& qt : fp.quartic) hq += quartic_term_dense(fp.n, qt);
      leakage = leakage_diagnostic(hq, set, sh.hs);
    }
    report["leakage"] = leakage;
    if (leakage > opt.leakage_tol) refuse_leakage(opt, {}, report, leakage);
    const Vector psi0 =
        basis_ket(fp.n, fp.product ? fp.occupied : std::vector<int>{});
    rho = psi0 * psi0.adjoint();
    c0 = fp.product ? correlator_init_dense(set, rho)
                    : fermion_vacuum_correlator_matrix(fp.n);
    hs = sh.hs;
    labels = sh.labels;
  } else {
    const auto& qp = cp.qubit;
    check_oracle_dim(Eigen::Index(1) << qp.n);
    hd = pauli_terms_dense(qp.n, collect_pauli_terms(qp.n, qp.terms));
    ShadowHamiltonian sh;
    if (qp.full_pauli) {
      if (qp.n > 5) {
        throw CapacityError("correlator: full-pauli supported to n = 5");
      }
      sh = full_pauli_shadow(qp.n, collect_pauli_terms(qp.n, qp.terms));
      set = full_pauli_set(qp.n);
    } else {
      const OneLocalSplit split = split_one_local(qp.n, qp.terms);
      sh = one_local_shadow(split.w);
      set = one_local_set(qp.n);
      if (split.extras) {
        const double leakage = leakage_diagnostic(hd, set, sh.hs);
        sh.leakage = leakage;
        report["n"] = qp.n;
        report["leakage"] = leakage;
        if (leakage > opt.leakage_tol) {
          refuse_leakage(opt, {}, report, leakage);
        }
      }
    }
    report["n"] = qp.n;
    report["leakage"] = sh.leakage;
    report["hermitian_defect"] = sh.hermitian_defect;
    report["sparsity"] = sparsity_entry(sh.hs);
    const Vector psi0 = qp.all_zero
                            ? Vector::Unit(Eigen::Index(1) << qp.n, 0)
                            : qp.statevector;
    rho = psi0 * psi0.adjoint();
    c0 = correlator_init_dense(set, rho);
    hs = sh.hs;
    labels = set.labels;
  }

  std::vector<SeriesRow> rows;
  VerifyLog vlog;
  const int m_count = static_cast<int>(labels.size());
  for (double t : pr.times) {
    for (double tp : pr.times) {
      const Matrix c = evolve_correlator(hs, c0, t, tp, opt.tol);
      const std::string at = "@t'=" + io::format_double(tp);
      for (int m = 0; m < m_count; ++m) {
        for (int mp = 0; mp < m_count; ++mp) {
          rows.push_back({t, labels[m] + "*" + labels[mp] + at, c(m, mp)});
        }
      }
      if (opt.verify) {
        const Matrix co = correlator_oracle(hd, set, rho, t, tp);
        vlog.add(t, (c - co).cwiseAbs().maxCoeff());
      }
    }
  }
  return finish_run(opt, rows, report, vlog);
}

// ---- heisenberg -----------------------------------------------------------

PauliMap build_operator(int n,
                        const std::vector<std::pair<std::string, cplx>>&
                            terms) {
  PauliMap op;
  op.n = n;
  for (const auto& [word, c] : terms) {
    const ParsedPauli pp = parse_pauli(word, n);
    op.terms[pauli_slot(pp.p)] += c * pp.factor;
  }
  for (auto it = op.terms.begin(); it != op.terms.end();) {
    it = std::abs(it->second) < 1e-15 ? op.terms.erase(it) : std::next(it);
  }
  require(!op.terms.empty(), "heisenberg: operator is zero");
  return op;
}

std::string slot_label(int n, std::uint64_t key) {
  PauliString p;
  p.n = n;
  p.x = key >> n;
  p.z = key & ((std::uint64_t(1) << n) - 1);
  return pauli_label(p);
}

int run_heisenberg(const io::Problem& pr, const RunOptions& opt) {
  const auto& hp = pr.heisenberg;
  PauliMap op = build_operator(hp.n, hp.op);

  json report;
  report["type"] = "heisenberg";
  report["n"] = hp.n;
  report["mode"] = hp.circuit_mode ? "circuit" : "continuous";
  put_common(report, opt, pr.times);
  const double norm0 = pauli_map_norm(op);
  report["operator_norm"] = norm0;

  std::vector<SeriesRow> rows;
  VerifyLog vlog;

  if (hp.circuit_mode) {
    const PauliMap fin = heisenberg_circuit(op, hp.gates);
    const double steps = static_cast<double>(hp.gates.size());
    for (const auto& [key, c] : fin.terms) {
      rows.push_back({steps, slot_label(hp.n, key), c});
    }
    const SupportMetric sm = support_metric(fin);
    const std::vector<int> sup = support_qubits(fin);
    const std::vector<int> cone =
        light_cone(hp.n, hp.gates, support_qubits(op));
    bool contained = true;
    for (int q : sup) {
      contained =
          contained && std::find(cone.begin(), cone.end(), q) != cone.end();
    }
    report["gates"] = hp.gates.size();
    report["terms"] = fin.terms.size();
    report["norm_final"] = pauli_map_norm(fin);
    report["support"] = json(sup);
    report["light_cone"] = json(cone);
    report["support_in_light_cone"] = contained;
    report["weight_mass"] = real_array(sm.weight_mass);
    if (opt.verify) {
      if (hp.n > 8) {
        throw CapacityError("heisenberg: verification supported to n = 8");
      }
      const Matrix u = circuit_unitary_dense(hp.n, hp.gates);
      const Vector zo =
          heisenberg_oracle_coefficients(hp.n, u, pauli_map_dense(op));
      vlog.add(steps, (pauli_map_to_vector(fin) - zo).norm());
    }
  } else {
    require(!pr.times.empty(), "heisenberg: no times given (file or --times)");
    if (hp.n > 8) {
      throw CapacityError("heisenberg: continuous flow supported to n = 8");
    }
    const auto hterms = collect_pauli_terms(hp.n, hp.hamiltonian);
    const SparseMatrix hs = full_pauli_shadow_hamiltonian(hp.n, hterms);
    report["leakage"] = 0.0;  // complete operator basis
    report["hermitian_defect"] = hermitian_defect(hs);
    report["sparsity"] = sparsity_entry(hs);
    const Vector z0 = pauli_map_to_vector(op);
    Matrix hd;
    if (opt.verify) hd = pauli_terms_dense(hp.n, hterms);
    for (double t : pr.times) {
      const Vector z = heisenberg_continuous(hs, z0, t, opt.tol);
      for (Eigen::Index m = 0; m < z.size(); ++m) {
        if (std::abs(z[m]) > 1e-12) {
          rows.push_back(
              {t, slot_label(hp.n, static_cast<std::uint64_t>(m)), z[m]});
        }
      }
      if (opt.verify) {
        const Matrix u = dense_expm(hd, t);
        const Vector zo =
            heisenberg_oracle_coefficients(hp.n, u, pauli_map_dense(op));
        vlog.add(t, (z - zo).norm());
      }
    }
  }
  return finish_run(opt, rows, report, vlog);
}

int do_run(const RunOptions& opt) {
  io::Problem pr = io::parse_problem(io::load_json_file(opt.input));
  if (!opt.times.empty()) pr.times = io::parse_times(opt.times);
  if (pr.type == "fermion") return run_fermion(pr, opt);
  if (pr.type == "boson") return run_boson(pr, opt);
  if (pr.type == "qubit") return run_qubit(pr, opt);
  if (pr.type == "correlator") return run_correlator(pr, opt);
  return run_heisenberg(pr, opt);
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"shadow Hamiltonian simulation"};
  app.require_subcommand(1);

  RunOptions opt;
  CLI::App* run = app.add_subcommand("run", "simulate one problem file");
  run->add_option("--input", opt.input, "problem JSON")->required();
  run->add_option("--output-dir", opt.output_dir,
                  "directory for series.csv and report.json");
  run->add_option("--times", opt.times,
                  "override times: start:end:step or t1,t2,...");
  run->add_option("--tol", opt.tol, "evolution tolerance");
  run->add_option("--verify-tol", opt.verify_tol, "oracle error gate");
  run->add_option("--leakage-tol", opt.leakage_tol, "closure gate");
  run->add_option("--seed", opt.seed, "RNG seed for shot modes");
  run->add_option("--shots", opt.shots, "sampled estimates with this many shots");
  run->add_flag("--verify", opt.verify, "compare against the dense oracle");

  CLI::App* suite =
      app.add_subcommand("verify-suite", "run the acceptance matrix");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*suite) return print_acceptance(std::cout);
    return do_run(opt);
  } catch (const SchemaError& e) {
    std::cerr << "error (schema): " << e.what() << '\n';
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "error (verification): " << e.what() << '\n';
    return 2;
  } catch (const LeakageError& e) {
    std::cerr << "error (leakage): " << e.what() << '\n';
    return 3;
  } catch (const NonHermitianError& e) {
    std::cerr << "error (non-hermitian): " << e.what() << '\n';
    return 4;
  } catch (const DegenerateShadowError& e) {
    std::cerr << "error (degenerate shadow): " << e.what() << '\n';
    return 5;
  } catch (const CapacityError& e) {
    std::cerr << "error (capacity): " << e.what() << '\n';
    return 6;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int cli_main(int argc, char** argv) {
  return cli_main(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace shadowsim

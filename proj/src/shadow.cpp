#include "shadowsim/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "shadowsim/expm.hpp"

namespace shadowsim {

ShadowState shadow_from_expectations(std::vector<std::string> labels,
                                     const Vector& raw) {
  require(static_cast<Eigen::Index>(labels.size()) == raw.size(),
          "shadow: label/amplitude count mismatch");
  const double a = raw.squaredNorm();
  if (!(a > 1e-24)) {
    throw DegenerateShadowError(
        "shadow: all expectation values vanish; no shadow state exists");
  }
  ShadowState st;
  st.labels = std::move(labels);
  st.amplitudes = raw / std::sqrt(a);
  st.normA = a;
  return st;
}

namespace {

double leakage_against(const Matrix& h, const OperatorSet& set,
                       const std::vector<std::vector<std::pair<int, cplx>>>& rows) {
  const double floor =
      1e-14 * std::max(1.0, frobenius(h)) *
      std::max(1.0, frobenius(set.ops[0]));
  double worst = 0.0;
  for (int m = 0; m < set.size(); ++m) {
    Matrix comm = h * set.ops[m] - set.ops[m] * h;
    const double cn = frobenius(comm);
    if (cn <= floor) continue;
    Matrix resid = comm;
    for (const auto& [mp, val] : rows[m]) resid += val * set.ops[mp];
    worst = std::max(worst, frobenius(resid) / cn);
  }
  return worst;
}

}  // namespace

ShadowHamiltonian build_shadow_hamiltonian_dense(const Matrix& h,
                                                 const OperatorSet& set,
                                                 double drop_tol) {
  require(h.rows() == set.dim() && h.cols() == set.dim(),
          "shadow build: Hamiltonian dimension does not match operator set");
  const double lambda = verify_orthogonality(set);
  const int m_count = set.size();

  std::vector<std::vector<std::pair<int, cplx>>> rows(m_count);
  double max_entry = 0.0;
  for (int m = 0; m < m_count; ++m) {
    Matrix comm = h * set.ops[m] - set.ops[m] * h;
    for (int mp = 0; mp < m_count; ++mp) {
      const cplx val = -(set.ops[mp].adjoint() * comm).trace() / lambda;
      if (std::abs(val) > 0.0) {
        rows[m].push_back({mp, val});
        max_entry = std::max(max_entry, std::abs(val));
      }
    }
  }
  // Trace projection of an exactly representable commutator still leaves
  // O(eps)-size crumbs; drop them so sparsity reflects structure.
  const double cut = drop_tol * std::max(1.0, max_entry);
  std::vector<Triplet> trips;
  for (int m = 0; m < m_count; ++m) {
    auto& row = rows[m];
    row.erase(std::remove_if(row.begin(), row.end(),
                             [&](const auto& e) { return std::abs(e.second) <= cut; }),
              row.end());
    for (const auto& [mp, val] : row) trips.push_back({m, mp, val});
  }

  ShadowHamiltonian sh;
  sh.labels = set.labels;
  sh.hs = SparseMatrix::from_triplets(m_count, m_count, std::move(trips));
  sh.hermitian_defect = hermitian_defect(sh.hs);
  sh.leakage = leakage_against(h, set, rows);
  return sh;
}

double leakage_diagnostic(const Matrix& h, const OperatorSet& set,
                          const SparseMatrix& hs) {
  require(hs.rows() == set.size() && hs.cols() == set.size(),
          "leakage: generator dimension does not match operator set");
  std::vector<std::vector<std::pair<int, cplx>>> rows(set.size());
  for (const auto& t : hs.to_triplets()) rows[t.row].push_back({t.col, t.value});
  return leakage_against(h, set, rows);
}

double antisymmetry_defect(const StructureTable& table) {
  std::map<std::tuple<int, int, int>, double> f;
  for (const auto& e : table.entries) {
    require(e.j >= 0 && e.j < table.p && e.k >= 0 && e.k < table.p &&
                e.l >= 0 && e.l < table.p,
            "structure table: index out of range");
    f[{e.j, e.k, e.l}] += e.f;
  }
  double worst = 0.0;
  for (const auto& [key, val] : f) {
    const auto& [j, k, l] = key;
    if (j == k) {
      worst = std::max(worst, std::abs(val));
      continue;
    }
    auto it = f.find({k, j, l});
    const double mirror = it == f.end() ? 0.0 : it->second;
    worst = std::max(worst, std::abs(val + mirror));
  }
  return worst;
}

ShadowHamiltonian build_from_structure_constants(
    const StructureTable& table, const RealVector& alpha,
    std::vector<std::string> labels) {
  const int p = table.p;
  require(p > 0, "structure table: empty basis");
  require(static_cast<int>(alpha.size()) == p,
          "structure table: alpha size mismatch");
  require(static_cast<int>(labels.size()) == p,
          "structure table: label count mismatch");
  double max_f = 0.0;
  for (const auto& e : table.entries) max_f = std::max(max_f, std::abs(e.f));
  if (antisymmetry_defect(table) > 1e-12 * std::max(1.0, max_f)) {
    throw Error("structure table: f_{jkl} is not antisymmetric in (j, k)");
  }

  std::vector<Triplet> trips;
  std::map<std::pair<int, int>, int> pair_width;       // (j,k) -> #l entries
  std::map<int, std::vector<bool>> row_terms;          // k -> which j acted
  for (const auto& e : table.entries) {
    pair_width[{e.j, e.k}] += 1;
    if (alpha[e.j] != 0.0 && e.f != 0.0) {
      trips.push_back({e.k, e.l, cplx(0.0, -1.0) * alpha[e.j] * e.f});
      auto& seen = row_terms[e.k];
      if (seen.empty()) seen.assign(p, false);
      seen[e.j] = true;
    }
  }

  ShadowHamiltonian sh;
  sh.labels = std::move(labels);
  sh.hs = SparseMatrix::from_triplets(p, p, std::move(trips));
  sh.hermitian_defect = hermitian_defect(sh.hs);

  // Closure bounds; these are theorems for a valid table, so a violation
  // means the table itself is inconsistent.
  int d_prime = 0;
  for (const auto& [key, width] : pair_width) d_prime = std::max(d_prime, width);
  int p_eff = 0;
  for (const auto& [k, seen] : row_terms) {
    p_eff = std::max(p_eff, static_cast<int>(std::count(seen.begin(), seen.end(), true)));
  }
  const double max_alpha = alpha.size() ? alpha.cwiseAbs().maxCoeff() : 0.0;
  if (sh.hs.max_row_nnz() > p_eff * d_prime ||
      sh.hs.max_abs() > p_eff * max_alpha * max_f + 1e-12) {
    throw Error("structure table: closure bounds violated");
  }
  return sh;
}

StructureTable su2_structure_table() {
  // [O_j, O_k] over {iX, iY, iZ}: f_{jkl} = -2 eps_{jkl}.
  StructureTable t;
  t.p = 3;
  t.entries = {{0, 1, 2, -2.0}, {1, 0, 2, 2.0},  {1, 2, 0, -2.0},
               {2, 1, 0, 2.0},  {2, 0, 1, -2.0}, {0, 2, 1, 2.0}};
  return t;
}

ShadowState evolve_shadow(const ShadowHamiltonian& sh, const ShadowState& st,
                          double t, double tol) {
  require(sh.hs.rows() == static_cast<int>(st.amplitudes.size()),
          "evolve: generator/state dimension mismatch");
  if (sh.hermitian_defect > std::max(tol, 1e-12) * std::max(1.0, sh.hs.max_abs())) {
    throw NonHermitianError(
        "evolve: shadow generator is not Hermitian (defect " +
        std::to_string(sh.hermitian_defect) + "); dynamics would not be unitary");
  }
  ShadowState out = st;
  out.amplitudes = expm_action(sh.hs, st.amplitudes, t, tol);
  return out;
}

ShadowState lowest_weight_shadow(const std::vector<cplx>& eigenvalues,
                                 std::vector<std::string> labels) {
  Vector raw(static_cast<Eigen::Index>(eigenvalues.size()));
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const cplx e = eigenvalues[i];
    require(std::abs(e.real()) <= 1e-12 * std::max(1.0, std::abs(e)),
            "lowest weight: eigenvalue of an anti-Hermitian operator must be "
            "purely imaginary");
    raw[static_cast<Eigen::Index>(i)] = e;
  }
  ShadowState st = shadow_from_expectations(std::move(labels), raw);
  for (Eigen::Index i = 0; i < st.amplitudes.size(); ++i) {
    if (std::abs(st.amplitudes[i]) > 1e-14) {
      st.amplitudes /= st.amplitudes[i] / std::abs(st.amplitudes[i]);
      break;
    }
  }
  return st;
}

ShadowState restrict_shadow(const ShadowState& full,
                            const std::vector<int>& keep) {
  std::vector<std::string> labels;
  Vector raw(static_cast<Eigen::Index>(keep.size()));
  const double root_a = std::sqrt(full.normA);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int m = keep[i];
    require(m >= 0 && m < static_cast<int>(full.amplitudes.size()),
            "restrict: index out of range");
    labels.push_back(full.labels[m]);
    raw[static_cast<Eigen::Index>(i)] = root_a * full.amplitudes[m];
  }
  return shadow_from_expectations(std::move(labels), raw);
}

cplx shadow_overlap(const ShadowState& a, const ShadowState& b) {
  require(a.amplitudes.size() == b.amplitudes.size(),
          "overlap: dimension mismatch");
  return a.amplitudes.dot(b.amplitudes);
}

cplx shadow_overlap_sampled(const ShadowState& a, const ShadowState& b,
                            std::uint64_t shots, CounterRng& rng) {
  require(shots > 0, "overlap: shots must be positive");
  const cplx exact = shadow_overlap(a, b);
  auto estimate = [&](double part) {
    const double p = std::clamp((1.0 + part) / 2.0, 0.0, 1.0);
    const double hits = static_cast<double>(rng.binomial(shots, p));
    return 2.0 * hits / static_cast<double>(shots) - 1.0;
  };
  return cplx(estimate(exact.real()), estimate(exact.imag()));
}

}  // namespace shadowsim

#include "shadowsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace shadowsim::io {

namespace {

const json& get_field(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  require(it != j.end(), ctx + ": missing field '" + key + "'");
  return *it;
}

int get_int(const json& j, const char* key, const std::string& ctx) {
  const json& v = get_field(j, key, ctx);
  require(v.is_number_integer(), ctx + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

double as_real(const json& v, const std::string& ctx) {
  require(v.is_number(), ctx + ": expected a number");
  return v.get<double>();
}

int as_index(const json& v, const std::string& ctx) {
  require(v.is_number_integer(), ctx + ": indices must be integers");
  return v.get<int>();
}

std::vector<double> real_list(const json& v, const std::string& ctx) {
  require(v.is_array(), ctx + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_real(e, ctx));
  return out;
}

// Entries [j, k, re, im], 1-based; j == k adds once to the diagonal.
Matrix hermitian_from_triplets(const json& v, int dim, const std::string& ctx) {
  require(v.is_array(), ctx + ": expected an array of [j,k,re,im] entries");
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& e : v) {
    require(e.is_array() && e.size() == 4,
            ctx + ": each entry must be [j,k,re,im]");
    const int j = as_index(e[0], ctx);
    const int k = as_index(e[1], ctx);
    require(j >= 1 && j <= dim && k >= 1 && k <= dim,
            ctx + ": index out of range");
    const cplx val(as_real(e[2], ctx), as_real(e[3], ctx));
    if (j == k) {
      require(std::abs(val.imag()) < 1e-12,
              ctx + ": diagonal entries must be real");
      m(j - 1, j - 1) += val.real();
    } else {
      m(j - 1, k - 1) += val;
      m(k - 1, j - 1) += std::conj(val);
    }
  }
  return m;
}

Matrix antisymmetric_from_triplets(const json& v, int dim,
                                   const std::string& ctx) {
  require(v.is_array(), ctx + ": expected an array of [j,k,re,im] entries");
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& e : v) {
    require(e.is_array() && e.size() == 4,
            ctx + ": each entry must be [j,k,re,im]");
    const int j = as_index(e[0], ctx);
    const int k = as_index(e[1], ctx);
    require(j >= 1 && j <= dim && k >= 1 && k <= dim && j != k,
            ctx + ": index out of range");
    const cplx val(as_real(e[2], ctx), as_real(e[3], ctx));
    m(j - 1, k - 1) += val;
    m(k - 1, j - 1) -= val;
  }
  return m;
}

std::vector<std::vector<int>> int_lists(const json& v, const std::string& ctx) {
  require(v.is_array(), ctx + ": expected an array of index lists");
  std::vector<std::vector<int>> out;
  for (const auto& e : v) {
    require(e.is_array(), ctx + ": each subset must be an index list");
    std::vector<int> lst;
    for (const auto& x : e) {
      require(x.is_number_integer(), ctx + ": indices must be integers");
      lst.push_back(x.get<int>());
    }
    out.push_back(std::move(lst));
  }
  return out;
}

FermionProblem parse_fermion(const json& j, const std::string& ctx) {
  FermionProblem p;
  p.n = get_int(j, "n", ctx);
  require(p.n >= 1, ctx + ": n must be positive");
  const bool has_gamma = j.contains("gamma");
  const bool has_hopping = j.contains("alpha") || j.contains("beta");
  require(has_gamma != has_hopping,
          ctx + ": supply either 'gamma' or 'alpha'/'beta'");
  CanonicalGamma cg;
  if (has_gamma) {
    cg = canonicalize_gamma(
        hermitian_from_triplets(j["gamma"], 2 * p.n, ctx + ".gamma"));
  } else {
    Matrix alpha = Matrix::Zero(p.n, p.n);
    Matrix beta = Matrix::Zero(p.n, p.n);
    if (j.contains("alpha")) {
      alpha = hermitian_from_triplets(j["alpha"], p.n, ctx + ".alpha");
    }
    if (j.contains("beta")) {
      beta = antisymmetric_from_triplets(j["beta"], p.n, ctx + ".beta");
    }
    cg = gamma_from_hopping(alpha, beta);
  }
  p.gamma = cg.gamma;
  p.offset = cg.offset;

  const json& init = get_field(j, "initial", ctx);
  if (init.is_string()) {
    require(init.get<std::string>() == "vacuum",
            ctx + ": initial must be \"vacuum\" or {\"product\": [modes]}");
  } else if (init.is_object() && init.contains("product")) {
    p.product = true;
    for (const auto& m : init["product"]) {
      require(m.is_number_integer() && m.get<int>() >= 1 &&
                  m.get<int>() <= p.n,
              ctx + ".initial.product: mode out of range");
      p.occupied.push_back(m.get<int>());
    }
  } else if (!(init.is_object() && init.contains("vacuum"))) {
    throw SchemaError(ctx +
                      ": initial must be \"vacuum\" or {\"product\": [modes]}");
  }

  if (j.contains("quartic")) {
    require(j["quartic"].is_array(), ctx + ".quartic: expected an array");
    for (const auto& e : j["quartic"]) {
      require(e.is_array() && e.size() == 5,
              ctx + ".quartic: each entry must be [a,b,c,d,g]");
      const std::string qctx = ctx + ".quartic";
      QuarticTerm qt{as_index(e[0], qctx), as_index(e[1], qctx),
                     as_index(e[2], qctx), as_index(e[3], qctx),
                     as_real(e[4], qctx)};
      require(1 <= qt.a && qt.a < qt.b && qt.b < qt.c && qt.c < qt.d &&
                  qt.d <= 2 * p.n,
              ctx + ".quartic: indices must satisfy 1 <= a < b < c < d <= 2n");
      p.quartic.push_back(qt);
    }
  }
  if (j.contains("subsets")) {
    p.subsets = int_lists(j["subsets"], ctx + ".subsets");
    for (const auto& s : p.subsets) {
      for (int m : s) {
        require(m >= 1 && m <= 2 * p.n,
                ctx + ".subsets: Majorana index out of range");
      }
    }
  }
  return p;
}

BosonProblem parse_boson(const json& j, const std::string& ctx) {
  BosonProblem p;
  const int n = get_int(j, "n", ctx);
  require(n >= 1, ctx + ": n must be positive");
  const auto masses = real_list(get_field(j, "masses", ctx), ctx + ".masses");
  require(static_cast<int>(masses.size()) == n,
          ctx + ".masses: expected n entries");
  p.net.masses = Eigen::Map<const RealVector>(masses.data(), n);
  p.net.kappa = RealMatrix::Zero(n, n);
  const json& springs = get_field(j, "springs", ctx);
  require(springs.is_array(), ctx + ".springs: expected [[j,k,kappa],...]");
  for (const auto& e : springs) {
    require(e.is_array() && e.size() == 3,
            ctx + ".springs: each entry must be [j,k,kappa]");
    const int jj = as_index(e[0], ctx + ".springs");
    const int kk = as_index(e[1], ctx + ".springs");
    require(jj >= 1 && jj <= n && kk >= 1 && kk <= n,
            ctx + ".springs: site out of range");
    const double kap = as_real(e[2], ctx + ".springs");
    p.net.kappa(jj - 1, kk - 1) += kap;
    if (jj != kk) p.net.kappa(kk - 1, jj - 1) += kap;
  }
  const json& init = get_field(j, "initial", ctx);
  const auto q0 = real_list(get_field(init, "q", ctx + ".initial"),
                            ctx + ".initial.q");
  const auto p0 = real_list(get_field(init, "p", ctx + ".initial"),
                            ctx + ".initial.p");
  require(static_cast<int>(q0.size()) == n &&
              static_cast<int>(p0.size()) == n,
          ctx + ".initial: q and p must have n entries");
  p.q0 = Eigen::Map<const RealVector>(q0.data(), n);
  p.p0 = Eigen::Map<const RealVector>(p0.data(), n);
  if (j.contains("quadratic")) {
    require(j["quadratic"].is_boolean(), ctx + ".quadratic: expected a bool");
    p.quadratic = j["quadratic"].get<bool>();
  }
  if (j.contains("subsets")) {
    p.subsets = int_lists(j["subsets"], ctx + ".subsets");
    for (auto& s : p.subsets) {
      for (int& c : s) {
        require(c >= 1, ctx + ".subsets: column indices are 1-based");
        --c;
      }
    }
  }
  return p;
}

QubitProblem parse_qubit(const json& j, const std::string& ctx) {
  QubitProblem p;
  p.n = get_int(j, "n", ctx);
  require(p.n >= 1 && p.n <= 32, ctx + ": n out of range");
  const json& ham = get_field(j, "hamiltonian", ctx);
  require(ham.is_array(), ctx + ".hamiltonian: expected [{pauli, coeff},...]");
  for (const auto& e : ham) {
    require(e.is_object() && e.contains("pauli") && e.contains("coeff"),
            ctx + ".hamiltonian: each term needs 'pauli' and 'coeff'");
    require(e["pauli"].is_string(), ctx + ".hamiltonian: 'pauli' is a string");
    p.terms.emplace_back(e["pauli"].get<std::string>(),
                         cplx(as_real(e["coeff"], ctx + ".hamiltonian"), 0.0));
  }
  const json& set = get_field(j, "set", ctx);
  require(set.is_string(), ctx + ".set: expected a string");
  const std::string s = set.get<std::string>();
  if (s == "full-pauli") {
    p.full_pauli = true;
  } else {
    require(s == "one-local",
            ctx + ".set: must be \"one-local\" or \"full-pauli\"");
  }
  const json& init = get_field(j, "initial", ctx);
  if (init.is_string()) {
    require(init.get<std::string>() == "all-zero",
            ctx + ": initial must be \"all-zero\" or {\"statevector\": ...}");
  } else if (init.is_object() && init.contains("statevector")) {
    const json& sv = init["statevector"];
    require(sv.is_array() &&
                sv.size() == (std::size_t{1} << p.n),
            ctx + ".initial.statevector: expected 2^n [re,im] pairs");
    p.all_zero = false;
    p.statevector = Vector::Zero(Eigen::Index(1) << p.n);
    Eigen::Index i = 0;
    for (const auto& a : sv) {
      require(a.is_array() && a.size() == 2,
              ctx + ".initial.statevector: entries are [re,im]");
      p.statevector[i++] = cplx(as_real(a[0], ctx), as_real(a[1], ctx));
    }
    const double nrm = p.statevector.norm();
    require(std::abs(nrm - 1.0) < 1e-8,
            ctx + ".initial.statevector: state must be normalized");
    p.statevector /= nrm;
  } else if (!(init.is_object() && init.contains("all-zero"))) {
    throw SchemaError(
        ctx + ": initial must be \"all-zero\" or {\"statevector\": ...}");
  }
  return p;
}

std::vector<std::pair<std::string, cplx>> parse_operator(
    const json& v, const std::string& ctx) {
  std::vector<std::pair<std::string, cplx>> out;
  if (v.is_object()) {
    require(v.contains("pauli") && v["pauli"].is_string(),
            ctx + ": expected {\"pauli\": word}");
    out.emplace_back(v["pauli"].get<std::string>(), cplx(1.0, 0.0));
    return out;
  }
  require(v.is_array(), ctx + ": expected {\"pauli\"} or a coefficient list");
  for (const auto& e : v) {
    require(e.is_object() && e.contains("pauli") && e.contains("coeff") &&
                e["pauli"].is_string(),
            ctx + ": each term needs a 'pauli' string and a 'coeff'");
    out.emplace_back(e["pauli"].get<std::string>(),
                     cplx(as_real(e["coeff"], ctx), 0.0));
  }
  return out;
}

HeisenbergProblem parse_heisenberg(const json& j, const std::string& ctx) {
  HeisenbergProblem p;
  p.n = get_int(j, "n", ctx);
  require(p.n >= 1 && p.n <= 32, ctx + ": n out of range");
  p.op = parse_operator(get_field(j, "operator", ctx), ctx + ".operator");
  const bool has_gates = j.contains("gates");
  const bool has_ham = j.contains("hamiltonian");
  require(has_gates != has_ham,
          ctx + ": supply either 'gates' (circuit) or 'hamiltonian' (flow)");
  if (has_gates) {
    p.circuit_mode = true;
    const json& gates = j["gates"];
    require(gates.is_array(), ctx + ".gates: expected an array");
    for (const auto& g : gates) {
      require(g.is_object() && g.contains("name") && g.contains("qubits") &&
                  g["name"].is_string() && g["qubits"].is_array(),
              ctx + ".gates: each gate needs a 'name' and a 'qubits' list");
      Gate gate;
      gate.name = g["name"].get<std::string>();
      for (const auto& q : g["qubits"]) {
        gate.qubits.push_back(as_index(q, ctx + ".gates"));
      }
      if (gate.name == "unitary") {
        const json& m = get_field(g, "matrix", ctx + ".gates");
        const std::size_t dim = gate.qubits.size() == 1 ? 2 : 4;
        require(m.is_array() && m.size() == dim * dim,
                ctx + ".gates: matrix needs dim^2 [re,im] pairs, row-major");
        gate.u = Matrix::Zero(dim, dim);
        std::size_t i = 0;
        for (const auto& a : m) {
          require(a.is_array() && a.size() == 2,
                  ctx + ".gates: matrix entries are [re,im]");
          gate.u(i / dim, i % dim) =
              cplx(as_real(a[0], ctx), as_real(a[1], ctx));
          ++i;
        }
      }
      p.gates.push_back(std::move(gate));
    }
  } else {
    p.hamiltonian =
        parse_operator(j["hamiltonian"], ctx + ".hamiltonian");
  }
  return p;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Problem parse_problem(const json& j) {
  const std::string ctx = "problem";
  require(j.is_object(), ctx + ": top level must be a JSON object");
  const json& type = get_field(j, "type", ctx);
  require(type.is_string(), ctx + ": 'type' must be a string");
  Problem p;
  p.type = type.get<std::string>();
  if (j.contains("times")) {
    p.times = real_list(j["times"], ctx + ".times");
  }
  if (p.type == "fermion") {
    p.fermion = parse_fermion(j, ctx);
  } else if (p.type == "boson") {
    p.boson = parse_boson(j, ctx);
  } else if (p.type == "qubit") {
    p.qubit = parse_qubit(j, ctx);
  } else if (p.type == "correlator") {
    const json& sys = get_field(j, "system", ctx);
    Problem inner = parse_problem(sys);
    require(inner.type == "fermion" || inner.type == "qubit",
            ctx + ".system: correlators support fermion and qubit systems");
    p.correlator.system = inner.type;
    p.correlator.fermion = std::move(inner.fermion);
    p.correlator.qubit = std::move(inner.qubit);
  } else if (p.type == "heisenberg") {
    p.heisenberg = parse_heisenberg(j, ctx);
  } else {
    throw SchemaError(ctx + ": unknown type '" + p.type + "'");
  }
  return p;
}

std::vector<double> parse_times(const std::string& text) {
  std::vector<double> out;
  require(!text.empty(), "times: empty specification");
  if (text.find(':') != std::string::npos) {
    double a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0, tail = 0;
    std::istringstream is(text);
    require(static_cast<bool>(is >> a >> c1 >> b >> c2 >> step) &&
                c1 == ':' && c2 == ':' && !(is >> tail),
            "times: range syntax is start:end:step");
    require(step > 0 && b >= a, "times: need step > 0 and end >= start");
    for (double t = a; t <= b + 1e-9 * step; t += step) out.push_back(t);
    return out;
  }
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    require(!item.empty(), "times: empty list entry");
    std::size_t pos = 0;
    double t = 0.0;
    try {
      t = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw SchemaError("times: bad number '" + item + "'");
    }
    while (pos < item.size() && std::isspace(item[pos])) ++pos;
    require(pos == item.size(), "times: bad number '" + item + "'");
    out.push_back(t);
  }
  require(!out.empty(), "times: empty specification");
  return out;
}

std::string format_double(double x) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::stod(buf) == x) break;
  }
  return buf;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_series_csv(const std::string& path,
                      const std::vector<SeriesRow>& rows) {
  std::ofstream out(path);
  require(out.good(), "cannot write " + path);
  out << "time,label,re,im\n";
  for (const auto& r : rows) {
    out << format_double(r.time) << ',' << csv_field(r.label) << ','
        << format_double(r.value.real()) << ',' << format_double(r.value.imag())
        << '\n';
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace shadowsim::io

#include "wreathlab/io.hpp"

#include <fstream>

namespace wreathlab {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr + "/" + key, "missing field");
  return *it;
}

std::size_t index_from(const Json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0)
    return static_cast<std::size_t>(j.get<long long>());
  throw SchemaError(ptr, "expected a non-negative integer");
}

Scalar rational_from(const Json& j, const std::string& ptr) {
  if (j.is_string()) {
    try {
      return scalar_from_string(j.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(ptr, e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return Scalar(Integer(j.dump()));
  throw SchemaError(ptr, "expected a rational string or an integer");
}

const Json& array_field(const Json& j, const std::string& key,
                        const std::string& ptr) {
  const Json& a = field(j, key, ptr);
  if (!a.is_array()) throw SchemaError(ptr + "/" + key, "expected an array");
  return a;
}

void require_shape(const Mat& m, std::size_t rows, std::size_t cols,
                   const std::string& ptr) {
  if (m.rows() != rows || m.cols() != cols)
    throw SchemaError(ptr, "expected a " + std::to_string(rows) + "x" +
                               std::to_string(cols) + " matrix, got " + m.shape());
}

}  // namespace

Json to_json(const Mat& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(scalar_to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const Json& j, const std::string& ptr) {
  const std::size_t rows = index_from(field(j, "rows", ptr), ptr + "/rows");
  const std::size_t cols = index_from(field(j, "cols", ptr), ptr + "/cols");
  const Json& entries = array_field(j, "entries", ptr);
  if (entries.size() != rows)
    throw SchemaError(ptr + "/entries", "expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rptr = ptr + "/entries/" + std::to_string(i);
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw SchemaError(rptr, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = rational_from(entries[i][k], rptr + "/" + std::to_string(k));
  }
  return m;
}

Json to_json(const Algebra& a) {
  Json unit = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    unit.push_back(scalar_to_string(a.unit.at(i, 0)));
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Scalar& c = a.mult.at(k, i * a.dim + j);
        if (c != 0) mult.push_back(Json::array({i, j, k, scalar_to_string(c)}));
      }
  return {{"dim", a.dim}, {"basis", a.basis}, {"unit", std::move(unit)},
          {"mult", std::move(mult)}};
}

Algebra algebra_from_json(const Json& j, const std::string& ptr) {
  const std::size_t dim = index_from(field(j, "dim", ptr), ptr + "/dim");
  const Json& basis = array_field(j, "basis", ptr);
  if (basis.size() != dim)
    throw SchemaError(ptr + "/basis", "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis[i].is_string())
      throw SchemaError(ptr + "/basis/" + std::to_string(i), "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }
  const Json& unit = array_field(j, "unit", ptr);
  if (unit.size() != dim)
    throw SchemaError(ptr + "/unit", "expected " + std::to_string(dim) + " entries");
  Mat u(dim, 1);
  for (std::size_t i = 0; i < dim; ++i)
    u.at(i, 0) = rational_from(unit[i], ptr + "/unit/" + std::to_string(i));
  const Json& mult = array_field(j, "mult", ptr);
  std::vector<MultTriple> triples;
  for (std::size_t t = 0; t < mult.size(); ++t) {
    const std::string tptr = ptr + "/mult/" + std::to_string(t);
    if (!mult[t].is_array() || mult[t].size() != 4)
      throw SchemaError(tptr, "expected [i, j, k, coefficient]");
    MultTriple trip{index_from(mult[t][0], tptr + "/0"),
                    index_from(mult[t][1], tptr + "/1"),
                    index_from(mult[t][2], tptr + "/2"),
                    rational_from(mult[t][3], tptr + "/3")};
    if (trip.i >= dim || trip.j >= dim || trip.k >= dim)
      throw SchemaError(tptr, "basis index out of range");
    triples.push_back(std::move(trip));
  }
  return make_algebra(std::move(labels), u, triples);
}

Json to_json(const Wdl& w) {
  return {{"A", to_json(w.A)}, {"B", to_json(w.B)}, {"psi", to_json(w.psi)}};
}

Wdl wdl_from_json(const Json& j, const std::string& ptr) {
  Wdl w;
  w.A = algebra_from_json(field(j, "A", ptr), ptr + "/A");
  w.B = algebra_from_json(field(j, "B", ptr), ptr + "/B");
  w.psi = mat_from_json(field(j, "psi", ptr), ptr + "/psi");
  require_shape(w.psi, w.B.dim * w.A.dim, w.A.dim * w.B.dim, ptr + "/psi");
  return w;
}

Json to_json(const BilinFact& f) {
  return {{"A", to_json(f.A)},          {"B", to_json(f.B)},
          {"R", to_json(f.R)},          {"alpha", to_json(f.alpha.map)},
          {"beta", to_json(f.beta.map)}, {"iota", to_json(f.iota)}};
}

BilinFact fact_from_json(const Json& j, const std::string& ptr) {
  BilinFact f;
  f.A = algebra_from_json(field(j, "A", ptr), ptr + "/A");
  f.B = algebra_from_json(field(j, "B", ptr), ptr + "/B");
  f.R = algebra_from_json(field(j, "R", ptr), ptr + "/R");
  Mat alpha = mat_from_json(field(j, "alpha", ptr), ptr + "/alpha");
  Mat beta = mat_from_json(field(j, "beta", ptr), ptr + "/beta");
  f.iota = mat_from_json(field(j, "iota", ptr), ptr + "/iota");
  require_shape(alpha, f.R.dim, f.A.dim, ptr + "/alpha");
  require_shape(beta, f.R.dim, f.B.dim, ptr + "/beta");
  require_shape(f.iota, f.B.dim * f.A.dim, f.R.dim, ptr + "/iota");
  f.alpha = {f.A, f.R, std::move(alpha)};
  f.beta = {f.B, f.R, std::move(beta)};
  return f;
}

Json to_json(const PQQuasiDerivation& d) {
  return {{"B", to_json(d.B)},         {"p", to_json(d.p)},
          {"q", to_json(d.q)},         {"sigma", to_json(d.sigma)},
          {"delta", to_json(d.delta)}};
}

PQQuasiDerivation pqqd_from_json(const Json& j, const std::string& ptr) {
  PQQuasiDerivation d;
  d.B = algebra_from_json(field(j, "B", ptr), ptr + "/B");
  d.p = mat_from_json(field(j, "p", ptr), ptr + "/p");
  d.q = mat_from_json(field(j, "q", ptr), ptr + "/q");
  d.sigma = mat_from_json(field(j, "sigma", ptr), ptr + "/sigma");
  d.delta = mat_from_json(field(j, "delta", ptr), ptr + "/delta");
  require_shape(d.p, d.B.dim, 1, ptr + "/p");
  require_shape(d.q, d.B.dim, 1, ptr + "/q");
  require_shape(d.sigma, d.B.dim, d.B.dim, ptr + "/sigma");
  require_shape(d.delta, d.B.dim, d.B.dim, ptr + "/delta");
  return d;
}

Json to_json(const OrePoly& f) {
  Json coeff = Json::array();
  for (const Mat& c : f.coeff) {
    Json v = Json::array();
    for (std::size_t i = 0; i < f.bdim; ++i) v.push_back(scalar_to_string(c.at(i, 0)));
    coeff.push_back(std::move(v));
  }
  return {{"bdim", f.bdim}, {"coeff", std::move(coeff)}};
}

OrePoly poly_from_json(const Json& j, const std::string& ptr) {
  OrePoly f;
  f.bdim = index_from(field(j, "bdim", ptr), ptr + "/bdim");
  const Json& coeff = array_field(j, "coeff", ptr);
  for (std::size_t n = 0; n < coeff.size(); ++n) {
    const std::string cptr = ptr + "/coeff/" + std::to_string(n);
    if (!coeff[n].is_array() || coeff[n].size() != f.bdim)
      throw SchemaError(cptr, "expected " + std::to_string(f.bdim) + " entries");
    Mat c(f.bdim, 1);
    for (std::size_t i = 0; i < f.bdim; ++i)
      c.at(i, 0) = rational_from(coeff[n][i], cptr + "/" + std::to_string(i));
    f.coeff.push_back(std::move(c));
  }
  f.trim();
  return f;
}

Json to_json(const FrobeniusStructure& s) {
  Json out = to_json(s.R);
  out["frobenius_functional"] = to_json(s.psi_functional);
  Json pairs = Json::array();
  for (const auto& [e, f] : s.basis_pairs)
    pairs.push_back(Json::array({to_json(e), to_json(f)}));
  out["frobenius_pairs"] = std::move(pairs);
  return out;
}

FrobeniusStructure frobenius_from_json(const Json& j, const std::string& ptr) {
  FrobeniusStructure s;
  s.R = algebra_from_json(j, ptr);
  s.psi_functional =
      mat_from_json(field(j, "frobenius_functional", ptr), ptr + "/frobenius_functional");
  require_shape(s.psi_functional, 1, s.R.dim, ptr + "/frobenius_functional");
  const Json& pairs = array_field(j, "frobenius_pairs", ptr);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const std::string pptr = ptr + "/frobenius_pairs/" + std::to_string(t);
    if (!pairs[t].is_array() || pairs[t].size() != 2)
      throw SchemaError(pptr, "expected a pair of matrices");
    Mat e = mat_from_json(pairs[t][0], pptr + "/0");
    Mat f = mat_from_json(pairs[t][1], pptr + "/1");
    require_shape(e, s.R.dim, 1, pptr + "/0");
    require_shape(f, s.R.dim, 1, pptr + "/1");
    s.basis_pairs.emplace_back(std::move(e), std::move(f));
  }
  return s;
}

Json to_json(const WeakBialgebra& w) {
  Json out = to_json(w.H);
  out["comult"] = to_json(w.comult);
  out["counit"] = to_json(w.counit);
  return out;
}

WeakBialgebra weak_bialgebra_from_json(const Json& j, const std::string& ptr) {
  WeakBialgebra w;
  w.H = algebra_from_json(j, ptr);
  w.comult = mat_from_json(field(j, "comult", ptr), ptr + "/comult");
  w.counit = mat_from_json(field(j, "counit", ptr), ptr + "/counit");
  require_shape(w.comult, w.H.dim * w.H.dim, w.H.dim, ptr + "/comult");
  require_shape(w.counit, 1, w.H.dim, ptr + "/counit");
  return w;
}

Json to_json(const OneCellBundle& c) {
  Json out = {{"src", c.src_path}, {"dst", c.dst_path}, {"V", c.v},
              {"xi", to_json(c.xi)}, {"zeta", to_json(c.zeta)}};
  if (c.rho) out["rho"] = to_json(*c.rho);
  return out;
}

OneCellBundle cell_from_json(const Json& j, const std::string& ptr) {
  OneCellBundle c;
  const Json& src = field(j, "src", ptr);
  const Json& dst = field(j, "dst", ptr);
  if (!src.is_string()) throw SchemaError(ptr + "/src", "expected a file path");
  if (!dst.is_string()) throw SchemaError(ptr + "/dst", "expected a file path");
  c.src_path = src.get<std::string>();
  c.dst_path = dst.get<std::string>();
  c.v = index_from(field(j, "V", ptr), ptr + "/V");
  c.xi = mat_from_json(field(j, "xi", ptr), ptr + "/xi");
  c.zeta = mat_from_json(field(j, "zeta", ptr), ptr + "/zeta");
  if (j.contains("rho")) c.rho = mat_from_json(j.at("rho"), ptr + "/rho");
  return c;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json entry = {{"name", c.name}, {"pass", c.pass}};
    if (c.witness) {
      entry["witness"] = {{"input", c.witness->domain_index},
                          {"row", c.witness->row},
                          {"lhs", scalar_to_string(c.witness->lhs)},
                          {"rhs", scalar_to_string(c.witness->rhs)}};
    }
    checks.push_back(std::move(entry));
  }
  return {{"subject", r.subject()}, {"ok", r.ok()}, {"checks", std::move(checks)}};
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string(e.what()) + " in " + path);
  }
}

void save_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError("", "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace wreathlab

#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "wreathlab/cells.hpp"
#include "wreathlab/gallery.hpp"
#include "wreathlab/ore.hpp"

namespace wreathlab {

using Json = nlohmann::json;

/// A bundle does not match its schema; pointer locates the offending value.
struct SchemaError : std::runtime_error {
  std::string pointer;
  SchemaError(std::string ptr, const std::string& what)
      : std::runtime_error(what + " at " + (ptr.empty() ? "/" : ptr)),
        pointer(std::move(ptr)) {}
};

/// Matrices: {"rows": n, "cols": m, "entries": [[rational, ...], ...]}.
/// Rationals serialize as strings in lowest terms ("p" or "p/q" with
/// q > 0); integers are also accepted on input.
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& ptr = "");

/// Algebras: {"dim": n, "basis": [names], "unit": [rational, ...],
/// "mult": [[i, j, k, rational], ...]} with unlisted coefficients zero.
Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, const std::string& ptr = "");

/// Laws: {"A": Algebra, "B": Algebra, "psi": Mat}.
Json to_json(const Wdl& w);
Wdl wdl_from_json(const Json& j, const std::string& ptr = "");

/// Factorizations: {"A", "B", "R": Algebra, "alpha", "beta", "iota": Mat}.
Json to_json(const BilinFact& f);
BilinFact fact_from_json(const Json& j, const std::string& ptr = "");

/// Quasi-derivations: {"B": Algebra, "p", "q", "sigma", "delta": Mat}.
Json to_json(const PQQuasiDerivation& d);
PQQuasiDerivation pqqd_from_json(const Json& j, const std::string& ptr = "");

/// Coefficient polynomials: {"bdim": n, "coeff": [[rational, ...], ...]},
/// one inner list of length bdim per power, constant term first.
Json to_json(const OrePoly& f);
OrePoly poly_from_json(const Json& j, const std::string& ptr = "");

/// Frobenius structures extend the algebra bundle of the base with
/// "frobenius_functional": Mat and "frobenius_pairs": [[Mat, Mat], ...].
Json to_json(const FrobeniusStructure& s);
FrobeniusStructure frobenius_from_json(const Json& j, const std::string& ptr = "");

/// Weak bialgebras extend the algebra bundle with "comult": Mat and
/// "counit": Mat.
Json to_json(const WeakBialgebra& w);
WeakBialgebra weak_bialgebra_from_json(const Json& j, const std::string& ptr = "");

/// One-cells reference their endpoint bundles by file path:
/// {"src": path, "dst": path, "V": n, "xi": Mat, "zeta": Mat, "rho": Mat?}.
struct OneCellBundle {
  std::string src_path, dst_path;
  std::size_t v = 1;
  Mat xi, zeta;
  std::optional<Mat> rho;
};
Json to_json(const OneCellBundle& c);
OneCellBundle cell_from_json(const Json& j, const std::string& ptr = "");

/// Reports: {"subject": id, "ok": bool, "checks": [{"name", "pass",
/// "witness"?: {"input": [indices], "row": r, "lhs", "rhs"}}]}.
Json to_json(const Report& r);

/// Parses the file as JSON; throws SchemaError (with empty pointer and the
/// parser's location message) when the file is missing or malformed.
Json load_file(const std::string& path);
void save_file(const std::string& path, const Json& j);

}  // namespace wreathlab

// Command-line front end: loads JSON bundles, runs the library's exact
// certification checks and emits reports as text or JSON.
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 malformed input
// (file, schema or command line), with the offending JSON pointer or
// location on stderr.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "wreathlab/fixtures.hpp"
#include "wreathlab/io.hpp"

namespace fs = std::filesystem;
using namespace wreathlab;

namespace {

struct Output {
  bool json = false;
  bool quiet = false;
  std::string out;
};

int finish(const Output& o, const Report& rep, Json bundle) {
  bundle["report"] = to_json(rep);
  if (!o.out.empty()) save_file(o.out, bundle);
  if (o.json)
    std::cout << to_json(rep).dump(2) << "\n";
  else if (!o.quiet)
    std::cout << rep.summary();
  return rep.ok() ? 0 : 1;
}

enum class Kind { algebra, wdl, fact, pqqd, frobenius, bialgebra, cell, poly };

Kind sniff(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object bundle");
  if (j.contains("psi")) return Kind::wdl;
  if (j.contains("iota")) return Kind::fact;
  if (j.contains("sigma")) return Kind::pqqd;
  if (j.contains("frobenius_functional")) return Kind::frobenius;
  if (j.contains("comult")) return Kind::bialgebra;
  if (j.contains("xi")) return Kind::cell;
  if (j.contains("coeff")) return Kind::poly;
  return Kind::algebra;
}

std::string resolve(const std::string& base_file, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return p.string();
  return (fs::path(base_file).parent_path() / p).string();
}

std::size_t default_degree() {
  if (const char* env = std::getenv("WREATHLAB_DEFAULT_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
  }
  return 6;
}

int run_validate(const Output& o, const std::string& file) {
  const Json j = load_file(file);
  Report rep;
  switch (sniff(j)) {
    case Kind::wdl: {
      Wdl w = wdl_from_json(j);
      rep = Report("law");
      rep.merge(validate_algebra(w.A), "A/");
      rep.merge(validate_algebra(w.B), "B/");
      rep.merge(check_wdl(w));
      break;
    }
    case Kind::fact:
      rep = validate_fact(fact_from_json(j));
      break;
    case Kind::pqqd:
      rep = validate_pqqd(pqqd_from_json(j));
      break;
    case Kind::frobenius:
      rep = validate_frobenius(frobenius_from_json(j));
      break;
    case Kind::bialgebra:
      rep = validate_weak_bialgebra(weak_bialgebra_from_json(j));
      break;
    case Kind::algebra:
      rep = validate_algebra(algebra_from_json(j));
      break;
    default:
      throw SchemaError("", "no validator for this bundle kind");
  }
  return finish(o, rep, Json::object());
}

int run_check_wdl(const Output& o, const std::string& file) {
  Wdl w = wdl_from_json(load_file(file));
  return finish(o, check_wdl(w), Json::object());
}

int run_wreath(const Output& o, const std::string& file) {
  Wdl w = wdl_from_json(load_file(file));
  Report rep = check_wdl(w);
  if (!rep.ok()) return finish(o, rep, Json::object());
  WreathProduct wp = weak_wreath(w);
  rep.merge(validate_algebra(wp.product), "product/");
  Json bundle = {{"law", to_json(w)},
                 {"product", to_json(wp.product)},
                 {"mu", to_json(wp.mu)},
                 {"psibar", to_json(wp.psibar)},
                 {"proj", to_json(wp.splitting.proj)},
                 {"incl", to_json(wp.splitting.incl)},
                 {"alpha", to_json(wp.alpha.map)},
                 {"beta", to_json(wp.beta.map)}};
  return finish(o, rep, std::move(bundle));
}

int run_factor(const Output& o, const std::string& file) {
  BilinFact f = fact_from_json(load_file(file));
  Report rep = validate_fact(f);
  if (!rep.ok()) return finish(o, rep, Json::object());
  Wdl w = wdl_of_fact(f);
  rep.merge(check_wdl(w), "law/");
  return finish(o, rep, Json{{"law", to_json(w)}});
}

int run_roundtrip(const Output& o, const std::string& file) {
  const Json j = load_file(file);
  Report rep;
  if (sniff(j) == Kind::wdl)
    rep = roundtrip_object(wdl_from_json(j));
  else if (sniff(j) == Kind::fact)
    rep = roundtrip_fact(fact_from_json(j));
  else
    throw SchemaError("", "roundtrip expects a law or a factorization bundle");
  return finish(o, rep, Json::object());
}

// both endpoints of a cell bundle, loaded as laws; factorization endpoints
// also keep the factorization for the rho operations
struct CellEndpoints {
  Wdl src_law, dst_law;
  std::optional<BilinFact> src_fact, dst_fact;
};

CellEndpoints load_endpoints(const std::string& file, const OneCellBundle& c) {
  CellEndpoints e;
  auto one = [&](const std::string& ref, Wdl& law, std::optional<BilinFact>& fct) {
    const Json j = load_file(resolve(file, ref));
    if (sniff(j) == Kind::wdl) {
      law = wdl_from_json(j);
    } else if (sniff(j) == Kind::fact) {
      fct = fact_from_json(j);
      law = wdl_of_fact(*fct);
    } else {
      throw SchemaError("", ref + ": expected a law or a factorization bundle");
    }
  };
  one(c.src_path, e.src_law, e.src_fact);
  one(c.dst_path, e.dst_law, e.dst_fact);
  return e;
}

int run_check_cell(const Output& o, const std::string& file) {
  OneCellBundle c = cell_from_json(load_file(file));
  CellEndpoints e = load_endpoints(file, c);
  Report rep;
  if (c.rho) {
    if (!e.src_fact || !e.dst_fact)
      throw SchemaError("/rho", "rho requires factorization endpoints");
    rep = check_fact_onecell({*e.src_fact, *e.dst_fact, c.v, c.xi, c.zeta, *c.rho});
  } else {
    rep = check_wdl_onecell({e.src_law, e.dst_law, c.v, c.xi, c.zeta});
  }
  return finish(o, rep, Json::object());
}

int run_lift_cell(const Output& o, const std::string& file) {
  OneCellBundle c = cell_from_json(load_file(file));
  CellEndpoints e = load_endpoints(file, c);
  if (!e.src_fact || !e.dst_fact)
    throw SchemaError("/src", "lifting requires factorization endpoints");
  FactOneCell lifted = rho_from({e.src_law, e.dst_law, c.v, c.xi, c.zeta},
                                *e.src_fact, *e.dst_fact);
  Report rep = check_fact_onecell(lifted);
  c.rho = lifted.rho;
  return finish(o, rep, to_json(c));
}

// the fixtures shared by `example`: the two-point groupoid bialgebra and
// its componentwise module-algebra action
Algebra two_points() {
  return make_algebra({"p1", "p2"}, Mat::col({1, 1}), {{0, 0, 0, 1}, {1, 1, 1, 1}});
}

WeakBialgebra groupoid2() {
  Mat comult(4, 2);
  comult.at(0, 0) = 1;
  comult.at(3, 1) = 1;
  return {two_points(), comult, Mat::from_rows({{1, 1}})};
}

int run_example(const Output& o, const std::string& name) {
  using namespace fixtures;
  if (name == "triangle") {
    auto [f, w] = triangle_fixture();
    Report rep = validate_fact(f);
    rep.merge(check_wdl(w), "law/");
    rep.check_true("triangle/wreath-dim", weak_wreath(w).product.dim == 3);
    return finish(o, rep, Json{{"fact", to_json(f)}, {"law", to_json(w)}});
  }
  if (name == "e-ext") {
    EExtension line = e_extension(t3(), Scalar(1, 2) * Mat::col({1, 0, 1}), kz2());
    Report rep = check_wdl(line.law);
    rep.merge(certify_iso(line.wreath.product, line.strict_product, line.fwd, line.bwd),
              "iso/");
    Json bundle = {{"law", to_json(line.law)},
                   {"product", to_json(line.strict_product)},
                   {"fwd", to_json(line.fwd)},
                   {"bwd", to_json(line.bwd)}};
    return finish(o, rep, std::move(bundle));
  }
  if (name == "dirsum") {
    Wdl sw{kz2(), kz2(), Mat::swap(2, 2)};
    DirectSumWdl ds = direct_sum_wdl({sw, sw});
    Report rep = check_wdl(ds.law);
    rep.merge(certify_iso(weak_wreath(ds.law).product, ds.blockwise, ds.fwd, ds.bwd),
              "iso/");
    Json bundle = {{"law", to_json(ds.law)},
                   {"blockwise", to_json(ds.blockwise)},
                   {"fwd", to_json(ds.fwd)},
                   {"bwd", to_json(ds.bwd)}};
    return finish(o, rep, std::move(bundle));
  }
  if (name == "frobenius") {
    FrobeniusStructure s{two_points(),
                         Mat::from_rows({{1, 1}}),
                         {{Mat::col({1, 0}), Mat::col({1, 0})},
                          {Mat::col({0, 1}), Mat::col({0, 1})}}};
    return finish(o, validate_frobenius(s), to_json(s));
  }
  if (name == "smash") {
    WeakBialgebra g2 = groupoid2();
    Mat act(2, 4);
    act.at(0, 0) = 1;
    act.at(1, 3) = 1;
    ModuleAlgebra comp{two_points(), act};
    Report rep = validate_weak_bialgebra(g2);
    rep.merge(validate_module_algebra(g2, comp), "module/");
    SmashWdl sm = smash_wdl(g2, comp);
    rep.merge(check_wdl(sm.law), "law/");
    Json bundle = {{"bialgebra", to_json(g2)},
                   {"action", to_json(comp.action)},
                   {"law", to_json(sm.law)}};
    return finish(o, rep, std::move(bundle));
  }
  throw SchemaError("", "unknown example \"" + name +
                            "\" (triangle, e-ext, dirsum, frobenius, smash)");
}

int run_ore(const Output& o, const std::string& file, std::size_t n,
            const std::vector<std::string>& mult) {
  PQQuasiDerivation d = pqqd_from_json(load_file(file));
  Report rep = validate_pqqd(d);
  Json bundle = Json::object();
  if (mult.empty()) {
    rep.merge(ore_check_properties(d, n));
    if (rep.ok()) rep.merge(ore_tilde_basis(d, n).checks);
  } else {
    OrePoly f = poly_from_json(load_file(mult[0]));
    OrePoly g = poly_from_json(load_file(mult[1]));
    if (!rep.ok()) return finish(o, rep, std::move(bundle));
    bundle["product"] = to_json(ore_wreath_mult(d, f, g));
  }
  return finish(o, rep, std::move(bundle));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of weak distributive laws and their products"};
  app.require_subcommand(1);

  Output o;
  app.add_flag("--json", o.json, "emit the report as JSON on stdout");
  app.add_flag("--quiet", o.quiet, "suppress the human-readable report");
  app.add_option("--out", o.out, "write the result bundle to this file");

  std::string file, name;
  std::size_t degree = default_degree();
  std::vector<std::string> mult;

  auto* validate = app.add_subcommand("validate", "structure checks for any bundle");
  validate->add_option("file", file)->required();
  auto* checkwdl = app.add_subcommand("check-wdl", "the three law identities");
  checkwdl->add_option("file", file)->required();
  auto* wreath = app.add_subcommand("wreath", "build the certified wreath product");
  wreath->add_option("file", file)->required();
  auto* factor = app.add_subcommand("factor", "derive the law of a factorization");
  factor->add_option("file", file)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "object-level roundtrip checks");
  roundtrip->add_option("file", file)->required();
  auto* checkcell = app.add_subcommand("check-cell", "one-cell compatibility checks");
  checkcell->add_option("file", file)->required();
  auto* liftcell = app.add_subcommand("lift-cell", "reconstruct the R-component");
  liftcell->add_option("file", file)->required();
  auto* example = app.add_subcommand("example", "emit a built-in certified bundle");
  example->add_option("name", name)->required();
  auto* ore = app.add_subcommand("ore", "quasi-derivation laws on polynomials");
  ore->add_option("--pqqd", file, "quasi-derivation bundle")->required();
  ore->add_option("--check", degree, "degree bound for the property suite");
  ore->add_option("--mult", mult, "two polynomial bundles to multiply")->expected(2);

  // let the shared output flags appear after the subcommand as well
  for (CLI::App* sub : {validate, checkwdl, wreath, factor, roundtrip, checkcell,
                        liftcell, example, ore})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(o, file);
    if (checkwdl->parsed()) return run_check_wdl(o, file);
    if (wreath->parsed()) return run_wreath(o, file);
    if (factor->parsed()) return run_factor(o, file);
    if (roundtrip->parsed()) return run_roundtrip(o, file);
    if (checkcell->parsed()) return run_check_cell(o, file);
    if (liftcell->parsed()) return run_lift_cell(o, file);
    if (example->parsed()) return run_example(o, name);
    if (ore->parsed()) return run_ore(o, file, degree, mult);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

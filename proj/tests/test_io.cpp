#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "wreathlab/fixtures.hpp"
#include "wreathlab/io.hpp"

using namespace wreathlab;
using namespace wreathlab::fixtures;

static void check_same(const Algebra& a, const Algebra& b) {
  CHECK(a.dim == b.dim);
  CHECK(a.basis == b.basis);
  CHECK(a.unit == b.unit);
  CHECK(a.mult == b.mult);
}

TEST_CASE("matrix bundles") {
  Mat m = Scalar(1, 4) * Mat::from_rows({{3, -1}, {-5, 0}});
  CHECK(mat_from_json(to_json(m)) == m);
  CHECK(to_json(m)["entries"][0][0] == "3/4");

  // integers are accepted on input
  Json j = {{"rows", 1}, {"cols", 2}, {"entries", {{1, "2/3"}}}};
  CHECK(mat_from_json(j) == hconcat(Mat::col({1}), Scalar(2, 3) * Mat::col({1})));

  // a non-rational entry is reported at its pointer
  j["entries"][0][1] = "x";
  try {
    mat_from_json(j);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.pointer == "/entries/0/1");
  }

  // a missing row is caught
  Json bad = {{"rows", 2}, {"cols", 1}, {"entries", Json::array({Json::array({"0"})})}};
  CHECK_THROWS_AS(mat_from_json(bad), SchemaError);
}

TEST_CASE("algebra bundles") {
  Algebra t = t3();
  check_same(algebra_from_json(to_json(t)), t);

  Json j = to_json(t);
  j["mult"][0][3] = "not-a-number";
  try {
    algebra_from_json(j);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.pointer == "/mult/0/3");
  }

  j = to_json(t);
  j["mult"][0][2] = 17;  // out-of-range basis index
  CHECK_THROWS_AS(algebra_from_json(j), SchemaError);
}

TEST_CASE("law and factorization bundles") {
  Wdl w{kz2(), kz2(), t3_psi()};
  Wdl w2 = wdl_from_json(to_json(w));
  CHECK(w2.psi == w.psi);
  check_same(w2.A, w.A);

  BilinFact f = triangle_fact();
  BilinFact f2 = fact_from_json(to_json(f));
  CHECK(f2.iota == f.iota);
  CHECK(f2.alpha.map == f.alpha.map);
  CHECK(f2.beta.map == f.beta.map);
  CHECK(validate_fact(f2).ok());

  // a law with a wrongly shaped psi is a schema error, not a check failure
  Json j = to_json(w);
  j["psi"] = to_json(Mat::identity(3));
  CHECK_THROWS_AS(wdl_from_json(j), SchemaError);
}

TEST_CASE("quasi-derivation and polynomial bundles") {
  PQQuasiDerivation d = ut2_qd();
  PQQuasiDerivation d2 = pqqd_from_json(to_json(d));
  CHECK(d2.p == d.p);
  CHECK(d2.q == d.q);
  CHECK(d2.sigma == d.sigma);
  CHECK(d2.delta == d.delta);
  CHECK(validate_pqqd(d2).ok());

  OrePoly p = ore_psi(d, 3, d.B.unit);
  CHECK(poly_from_json(to_json(p)) == p);
}

TEST_CASE("frobenius and bialgebra bundles") {
  Algebra k2 = make_algebra({"p1", "p2"}, Mat::col({1, 1}),
                            {{0, 0, 0, 1}, {1, 1, 1, 1}});
  FrobeniusStructure s{k2,
                       Mat::from_rows({{1, 1}}),
                       {{Mat::col({1, 0}), Mat::col({1, 0})},
                        {Mat::col({0, 1}), Mat::col({0, 1})}}};
  FrobeniusStructure s2 = frobenius_from_json(to_json(s));
  CHECK(s2.psi_functional == s.psi_functional);
  CHECK(s2.basis_pairs == s.basis_pairs);
  CHECK(validate_frobenius(s2).ok());

  Mat comult(4, 2);
  comult.at(0, 0) = 1;
  comult.at(3, 1) = 1;
  WeakBialgebra g{k2, comult, Mat::from_rows({{1, 1}})};
  WeakBialgebra g2 = weak_bialgebra_from_json(to_json(g));
  CHECK(g2.comult == g.comult);
  CHECK(g2.counit == g.counit);
  CHECK(validate_weak_bialgebra(g2).ok());
}

TEST_CASE("cell bundles") {
  OneCellBundle c{"src.json", "dst.json", 2, Mat::identity(4), Mat::identity(4),
                  Mat::identity(6)};
  OneCellBundle c2 = cell_from_json(to_json(c));
  CHECK(c2.src_path == "src.json");
  CHECK(c2.v == 2);
  CHECK(c2.rho.has_value());
  CHECK(*c2.rho == Mat::identity(6));

  OneCellBundle no_rho{"a", "b", 1, Mat::identity(1), Mat::identity(1), std::nullopt};
  CHECK(!cell_from_json(to_json(no_rho)).rho.has_value());
}

TEST_CASE("reports as json") {
  Report rep("demo");
  rep.check_equal("demo/eq", Mat::identity(2), Mat::swap(1, 2) * Mat::swap(2, 1), {2});
  rep.check_equal("demo/neq", Mat::identity(2), Mat(2, 2), {2});
  Json j = to_json(rep);
  CHECK(j["ok"] == false);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(!j["checks"][0].contains("witness"));
  CHECK(j["checks"][1]["witness"]["lhs"] == "1");
  CHECK(j["checks"][1]["witness"]["rhs"] == "0");
}

TEST_CASE("files") {
  CHECK_THROWS_AS(load_file("/nonexistent/bundle.json"), SchemaError);

  const auto path =
      (std::filesystem::temp_directory_path() / "wreathlab_roundtrip.json").string();
  BilinFact f = triangle_fact();
  save_file(path, to_json(f));
  CHECK(load_file(path) == to_json(f));
  CHECK(fact_from_json(load_file(path)).iota == f.iota);
  std::filesystem::remove(path);
}

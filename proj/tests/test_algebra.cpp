#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreathlab/fixtures.hpp"

using namespace wreathlab;
using namespace wreathlab::fixtures;

TEST_CASE("fixture algebras satisfy the axioms") {
  CHECK(validate_algebra(ground()).ok());
  CHECK(validate_algebra(kz2()).ok());
  CHECK(validate_algebra(t3()).ok());
}

TEST_CASE("t3 structure constants multiply as stated") {
  Algebra t = t3();
  Mat a = t.basis_vec(1), b = t.basis_vec(2);
  CHECK(t.mult * kron(a, b) == Mat::col({-1, 1, 1}));    // ab = a + b - 1
  CHECK(t.mult * kron(b, a) == Mat::col({-1, -1, -1}));  // ba = -(a + b + 1)
  CHECK(t.mult * kron(a, a) == t.unit);
  CHECK(t.mult * kron(b, b) == t.unit);
}

TEST_CASE("tampering with g^2 alone does not break the axioms") {
  // setting g^2 = g gives k[x]/(x^2 - x): still unital associative
  Algebra idem = make_algebra({"1", "g"}, Mat::col({1, 0}),
                              {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}});
  CHECK(validate_algebra(idem).ok());
}

TEST_CASE("broken unit is caught with a witness") {
  // kz2 with g*1 redirected to 1: the right unit law fails at g
  Algebra bad = make_algebra({"1", "g"}, Mat::col({1, 0}),
                             {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 1}});
  Report rep = validate_algebra(bad);
  CHECK(!rep.ok());
  bool unit_failed = false;
  for (const auto& c : rep.checks())
    if (!c.pass && c.name.find("unit") != std::string::npos) {
      unit_failed = true;
      CHECK(c.witness.has_value());
    }
  CHECK(unit_failed);
}

TEST_CASE("algebra homs") {
  Algebra z2 = kz2(), t = t3();
  CHECK(is_algebra_hom(z2.id(), z2, z2).ok());
  CHECK(is_algebra_hom(t3_alpha()).ok());
  CHECK(is_algebra_hom(t3_beta()).ok());

  // g -> a + b fails: (a+b)^2 = 2 - (1 + ...) != 1
  Mat f = Mat::from_rows({{1, 0}, {0, 1}, {0, 1}});
  Report rep = is_algebra_hom(f, z2, t);
  CHECK(!rep.ok());
  REQUIRE(rep.checks().size() >= 1);
  const auto& fail = rep.checks()[1];
  CHECK(fail.name == "hom/mult");
  CHECK(!fail.pass);
  REQUIRE(fail.witness.has_value());
  CHECK(fail.witness->domain_index == std::vector<std::size_t>{1, 1});  // g (x) g
}

TEST_CASE("direct sums") {
  DirectSum single = direct_sum({ground()});
  CHECK(single.sum.dim == 1);
  CHECK(validate_algebra(single.sum).ok());

  DirectSum k2 = direct_sum({ground(), ground()});
  CHECK(validate_algebra(k2.sum).ok());
  Mat p1 = k2.sum.basis_vec(0), p2 = k2.sum.basis_vec(1);
  CHECK(k2.sum.mult * kron(p1, p1) == p1);
  CHECK(k2.sum.mult * kron(p2, p2) == p2);
  CHECK((k2.sum.mult * kron(p1, p2)).is_zero());
  CHECK(k2.sum.unit == p1 + p2);

  DirectSum mixed = direct_sum({kz2(), ground()});
  CHECK(mixed.sum.dim == 3);
  CHECK(validate_algebra(mixed.sum).ok());
  CHECK(mixed.sum.unit == Mat::col({1, 0, 1}));
  CHECK(mixed.sum.basis[1] == "0.g");
  CHECK(mixed.sum.basis[2] == "1.1");
  // injections are multiplicative, and cross terms vanish
  for (std::size_t s = 0; s < 2; ++s) {
    const Mat& inj = mixed.inj[s];
    const Algebra& part = s == 0 ? kz2() : ground();
    CHECK(inj * part.mult == mixed.sum.mult * kron(inj, inj));
    CHECK(mixed.proj[s] * inj == part.id());
  }
  CHECK((mixed.sum.mult * kron(mixed.inj[0], mixed.inj[1])).is_zero());
}

TEST_CASE("tensor algebra") {
  Algebra z2 = kz2();
  Algebra kb = tensor_algebra(ground(), z2);
  CHECK(kb.dim == 2);
  CHECK(kb.mult == z2.mult);
  CHECK(kb.unit == z2.unit);

  Algebra t = tensor_algebra(z2, z2);
  CHECK(validate_algebra(t).ok());
  Mat one = z2.basis_vec(0), g = z2.basis_vec(1);
  Mat g1 = kron(g, one), og = kron(one, g), gg = kron(g, g);
  CHECK(t.mult * kron(g1, og) == gg);
  CHECK(t.mult * kron(og, g1) == gg);  // commutative here
  CHECK(t.mult * kron(gg, gg) == t.unit);
}

TEST_CASE("image subalgebra") {
  // injective hom: image is an isomorphic copy
  auto alpha = t3_alpha();
  ImageSubalgebra im = image_subalgebra(alpha);
  CHECK(im.image.dim == 2);
  CHECK(im.inclusion * im.corestriction == alpha.map);
  CHECK(validate_algebra(im.image).ok());
  CHECK(rank(im.inclusion) == 2);
  // spanned by {1, a}: third row of the inclusion is zero
  CHECK(im.inclusion.at(2, 0) == 0);
  CHECK(im.inclusion.at(2, 1) == 0);
  // the corestriction is a hom onto the image
  CHECK(is_algebra_hom(im.corestriction, alpha.src, im.image).ok());

  // collapse kz2 -> k, g -> 1
  AlgebraHom collapse{kz2(), ground(), Mat::from_rows({{1, 1}})};
  REQUIRE(is_algebra_hom(collapse).ok());
  ImageSubalgebra imk = image_subalgebra(collapse);
  CHECK(imk.image.dim == 1);
  CHECK(validate_algebra(imk.image).ok());

  // not a hom: refused
  AlgebraHom notahom{kz2(), t3(), Mat::from_rows({{1, 0}, {0, 1}, {0, 1}})};
  CHECK_THROWS_AS(image_subalgebra(notahom), CheckFailed);
}

TEST_CASE("induced bimodule on t3") {
  Algebra t = t3();
  AlgebraHom id_hom{t, t, t.id()};
  BimoduleStructure reg = induced_bimodule(t, id_hom, id_hom);
  CHECK(validate_bimodule(reg).ok());
  CHECK(reg.left_action == t.mult);
  CHECK(reg.right_action == t.mult);

  BimoduleStructure m = induced_bimodule(t, t3_alpha(), t3_beta());
  CHECK(validate_bimodule(m).ok());
  Algebra z2 = kz2();
  Mat g = z2.basis_vec(1);
  // g . 1 = b,  (g . 1) . g = ba
  Mat g_dot_1 = m.left_action * kron(g, t.unit);
  CHECK(g_dot_1 == t.basis_vec(2));
  CHECK(m.right_action * kron(g_dot_1, g) == Mat::col({-1, -1, -1}));
}

TEST_CASE("bimodule maps") {
  Algebra t = t3(), z2 = kz2();
  BimoduleStructure on_r = induced_bimodule(t, t3_alpha(), t3_beta());
  CHECK(is_bimodule_map(Mat::identity(3), on_r, on_r).ok());

  // kz2 (x) kz2 with b acting by multiplication on the left leg and a on
  // the right leg; the section iota intertwines the actions, its transpose
  // (as a map the other way) does not
  BimoduleStructure outer;
  outer.left_alg = z2;
  outer.right_alg = z2;
  outer.dim = 4;
  outer.left_action = kron(z2.mult, z2.id());
  outer.right_action = kron(z2.id(), z2.mult);
  REQUIRE(validate_bimodule(outer).ok());

  Mat iota = fixtures::t3_iota();
  CHECK(is_bimodule_map(iota, on_r, outer).ok());
  CHECK(!is_bimodule_map(iota.transpose(), outer, on_r).ok());
}

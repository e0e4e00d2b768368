#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wreathlab/linalg.hpp"
#include "wreathlab/report.hpp"

using namespace wreathlab;

static std::mt19937 rng(20260823);

static Mat random_mat(std::size_t r, std::size_t c, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

TEST_CASE("scalar parsing and printing") {
  CHECK(scalar_from_string("3") == Scalar(3));
  CHECK(scalar_from_string("-7/2") == Scalar(-7, 2));
  CHECK(scalar_from_string("4/6") == Scalar(2, 3));
  CHECK(scalar_to_string(Scalar(-7, 2)) == "-7/2");
  CHECK(scalar_to_string(Scalar(4, 2)) == "2");
  CHECK(scalar_to_string(scalar_from_string("1/-3")) == "-1/3");
  CHECK_THROWS_AS(scalar_from_string(""), ParseError);
  CHECK_THROWS_AS(scalar_from_string("1.5"), ParseError);
  CHECK_THROWS_AS(scalar_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(scalar_from_string("a/b"), ParseError);
  CHECK_THROWS_AS(scalar_from_string("1/"), ParseError);
}

TEST_CASE("tensor basis order is left factor major") {
  // e_1 in Q^2 tensor e_0 in Q^3 must land at index 1*3+0 = 3.
  Mat e1 = Mat::col({0, 1});
  Mat e0 = Mat::col({1, 0, 0});
  Mat v = kron(e1, e0);
  REQUIRE(v.rows() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(v.at(i, 0) == Scalar(i == 3 ? 1 : 0));
}

TEST_CASE("kron is functorial") {
  for (int trial = 0; trial < 5; ++trial) {
    Mat f1 = random_mat(2, 3), f2 = random_mat(3, 2);
    Mat g1 = random_mat(3, 2), g2 = random_mat(2, 3);
    CHECK(kron(f1 * f2, g1 * g2) == kron(f1, g1) * kron(f2, g2));
  }
  CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
}

TEST_CASE("swap flips tensor factors") {
  Mat v = random_mat(2, 1), w = random_mat(3, 1);
  CHECK(Mat::swap(2, 3) * kron(v, w) == kron(w, v));
  CHECK(Mat::swap(3, 2) * Mat::swap(2, 3) == Mat::identity(6));
  // naturality
  Mat f = random_mat(4, 2), g = random_mat(5, 3);
  CHECK(Mat::swap(4, 5) * kron(f, g) == kron(g, f) * Mat::swap(2, 3));
}

TEST_CASE("rref, rank, kernel") {
  CHECK(rank(Mat::identity(3)) == 3);
  CHECK(rank(Mat::zero(2, 5)) == 0);
  CHECK(rank(Mat::from_rows({{1, 2}, {2, 4}})) == 1);

  Mat k = kernel_basis(Mat::from_rows({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) + k.at(1, 0) == 0);
  CHECK(k.at(1, 0) != 0);

  for (int trial = 0; trial < 5; ++trial) {
    Mat m = random_mat(3, 5);
    Mat k2 = kernel_basis(m);
    CHECK((m * k2).is_zero());
    CHECK(rank(k2) == k2.cols());
    CHECK(rank(m) + k2.cols() == 5);
  }
}

TEST_CASE("solve") {
  Mat m = Mat::from_rows({{1, 2}, {3, 4}});
  Mat b = Mat::col({5, 6});
  CHECK(m * solve(m, b) == b);

  // inconsistent
  Mat sing = Mat::from_rows({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(solve(sing, Mat::col({0, 1})), NoSolution);

  // underdetermined: still a genuine solution
  Mat wide = random_mat(2, 4);
  Mat rhs = wide * random_mat(4, 2);
  CHECK(wide * solve(wide, rhs) == rhs);
}

TEST_CASE("inverse") {
  Mat m = Mat::from_rows({{2, 1}, {1, 1}});
  CHECK(m * inverse(m) == Mat::identity(2));
  CHECK(inverse(m) * m == Mat::identity(2));
  CHECK_THROWS_AS(inverse(Mat::from_rows({{1, 2}, {2, 4}})), NoSolution);
  CHECK_THROWS_AS(inverse(Mat::zero(2, 3)), DimensionMismatch);
}

TEST_CASE("split_idempotent") {
  auto check_split = [](const Mat& e) {
    Splitting s = split_idempotent(e);
    CHECK(s.incl * s.proj == e);
    CHECK(s.proj * s.incl == Mat::identity(s.rank()));
    CHECK(s.rank() == rank(e));
  };
  check_split(Mat::identity(4));
  check_split(Mat::zero(3, 3));
  // rank-1 projector with fractional entries: E = v*w with w*v = 1
  Mat v = Mat::col({1, 2, 3});
  Mat w = Mat::from_rows({{1, 0, 0}});
  check_split(v * w);
  // averaging projector on Q^2
  Mat half = Scalar(1, 2) * Mat::from_rows({{1, 1}, {1, 1}});
  check_split(half);

  CHECK_THROWS_AS(split_idempotent(Mat::from_rows({{1, 1}, {0, 1}})), NotIdempotent);
  CHECK_THROWS_AS(split_idempotent(Mat::zero(2, 3)), NotIdempotent);
}

TEST_CASE("report witnesses point at the first differing entry") {
  Report rep("demo");
  Mat a = Mat::zero(2, 6), b = Mat::zero(2, 6);
  b.at(1, 4) = Scalar(1, 3);
  rep.check_equal("demo/id", a, b, {2, 3});
  REQUIRE(rep.checks().size() == 1);
  CHECK(!rep.ok());
  const auto& w = rep.checks()[0].witness;
  REQUIRE(w.has_value());
  CHECK(w->row == 1);
  CHECK(w->domain_index == std::vector<std::size_t>{1, 1});  // col 4 = 1*3+1
  CHECK(w->lhs == 0);
  CHECK(w->rhs == Scalar(1, 3));
  CHECK_THROWS_AS(rep.require("demo"), CheckFailed);

  Report ok("demo2");
  ok.check_equal("demo/eq", a, a);
  CHECK(ok.ok());
}

#include "wreathlab/ore.hpp"

#include <optional>
#include <utility>

#include "wreathlab/wdl.hpp"

namespace wreathlab {

namespace {

void require_element(const PQQuasiDerivation& d) {
  const std::size_t n = d.B.dim;
  if (d.p.rows() != n || d.p.cols() != 1 || d.q.rows() != n || d.q.cols() != 1 ||
      d.sigma.rows() != n || d.sigma.cols() != n || d.delta.rows() != n ||
      d.delta.cols() != n)
    throw DimensionMismatch("quasi-derivation data has wrong shapes");
}

// first differing coordinate of two equally shaped matrices, column major
std::optional<std::pair<std::size_t, std::size_t>> first_diff(const Mat& l,
                                                              const Mat& r) {
  for (std::size_t j = 0; j < l.cols(); ++j)
    for (std::size_t i = 0; i < l.rows(); ++i)
      if (l.at(i, j) != r.at(i, j)) return {{i, j}};
  return std::nullopt;
}

OrePoly psi_from_table(const std::vector<std::vector<Mat>>& t, std::size_t n,
                       const Mat& b) {
  OrePoly out;
  out.bdim = b.rows();
  for (const Mat& m : t[n]) out.coeff.push_back(m * b);
  out.trim();
  if (out.length() > n + 2)
    throw InternalInconsistency("ore: degree bound violated");
  return out;
}

}  // namespace

Report validate_pqqd(const PQQuasiDerivation& d) {
  Report rep("quasi-derivation");
  const Algebra& b = d.B;
  const std::size_t n = b.dim;
  rep.merge(validate_algebra(b));
  const bool shapes = d.p.rows() == n && d.p.cols() == 1 && d.q.rows() == n &&
                      d.q.cols() == 1 && d.sigma.rows() == n && d.sigma.cols() == n &&
                      d.delta.rows() == n && d.delta.cols() == n;
  rep.check_true("pqqd/shapes", shapes);
  if (!rep.ok()) return rep;

  const Mat rp = b.right_mult(d.p);
  rep.check_equal("pqqd/p-idem", b.mult * kron(d.p, d.p), d.p, {1});
  rep.check_equal("pqqd/q-square", b.mult * kron(d.q, d.q), Mat(n, 1), {1});
  rep.check_equal("pqqd/pq", b.mult * kron(d.p, d.q), d.q, {1});
  rep.check_equal("pqqd/qp", b.mult * kron(d.q, d.p), Mat(n, 1), {1});
  rep.check_equal("pqqd/pbp", rp * b.left_mult(d.p), rp, {n});
  rep.check_equal("pqqd/sigma-mult", d.sigma * b.mult,
                  b.mult * kron(d.sigma, d.sigma), {n, n});
  rep.check_equal("pqqd/sigma-unit", d.sigma * b.unit, d.p, {1});
  rep.check_equal("pqqd/sigma-p", d.sigma * d.p, d.p, {1});
  rep.check_equal("pqqd/sigma-q", d.sigma * d.q, Mat(n, 1), {1});
  rep.check_equal("pqqd/delta-leibniz", d.delta * b.mult,
                  b.mult * kron(d.sigma, d.delta) + b.mult * kron(d.delta, rp),
                  {n, n});
  rep.check_equal("pqqd/delta-unit", d.delta * b.unit, d.q, {1});
  rep.check_equal("pqqd/delta-p", d.delta * d.p, d.q, {1});
  rep.check_equal("pqqd/delta-q", d.delta * d.q, Mat(n, 1), {1});
  return rep;
}

bool is_classical(const PQQuasiDerivation& d) {
  require_element(d);
  return d.p == d.B.unit && d.q.is_zero();
}

OrePoly OrePoly::monomial(const Mat& b, std::size_t n) {
  if (b.cols() != 1) throw DimensionMismatch("monomial coefficient must be a column");
  OrePoly out;
  out.bdim = b.rows();
  out.coeff.assign(n, Mat(out.bdim, 1));
  out.coeff.push_back(b);
  out.trim();
  return out;
}

Mat OrePoly::at(std::size_t n) const {
  return n < coeff.size() ? coeff[n] : Mat(bdim, 1);
}

void OrePoly::trim() {
  while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
  if (bdim != o.bdim) throw DimensionMismatch("adding polynomials over different algebras");
  OrePoly out;
  out.bdim = bdim;
  for (std::size_t n = 0; n < std::max(length(), o.length()); ++n)
    out.coeff.push_back(at(n) + o.at(n));
  out.trim();
  return out;
}

bool OrePoly::operator==(const OrePoly& o) const {
  if (bdim != o.bdim) return false;
  for (std::size_t n = 0; n < std::max(length(), o.length()); ++n)
    if (at(n) != o.at(n)) return false;
  return true;
}

OrePoly OrePoly::shifted(std::size_t n) const {
  if (is_zero()) return *this;
  OrePoly out;
  out.bdim = bdim;
  out.coeff.assign(n, Mat(bdim, 1));
  out.coeff.insert(out.coeff.end(), coeff.begin(), coeff.end());
  return out;
}

Mat OrePoly::flatten(std::size_t len) const {
  if (length() > len)
    throw DimensionMismatch("flatten: polynomial degree exceeds the block count");
  Mat out(len * bdim, 1);
  for (std::size_t n = 0; n < length(); ++n)
    for (std::size_t i = 0; i < bdim; ++i) out.at(n * bdim + i, 0) = coeff[n].at(i, 0);
  return out;
}

std::vector<std::vector<Mat>> ore_psi_maps(const PQQuasiDerivation& d,
                                           std::size_t n_max) {
  require_element(d);
  const std::size_t n = d.B.dim;
  const Mat rp = d.B.right_mult(d.p), rq = d.B.right_mult(d.q);
  std::vector<std::vector<Mat>> t(n_max + 1);
  t[0] = {rp, rq};
  if (n_max >= 1) t[1] = {rp * d.delta, d.sigma + rq * d.delta, rq * d.sigma};
  for (std::size_t k = 2; k <= n_max; ++k) {
    t[k].assign(k + 2, Mat(n, n));
    for (std::size_t i = 0; i <= k + 1; ++i) {
      if (i >= 1) t[k][i] = t[k][i] + t[k - 1][i - 1] * d.sigma;
      if (i <= k) t[k][i] = t[k][i] + t[k - 1][i] * d.delta;
    }
  }
  return t;
}

OrePoly ore_psi(const PQQuasiDerivation& d, std::size_t n, const Mat& b) {
  if (b.rows() != d.B.dim || b.cols() != 1)
    throw DimensionMismatch("ore_psi: coefficient must be a column over B");
  return psi_from_table(ore_psi_maps(d, n), n, b);
}

OrePoly ore_wreath_mult(const PQQuasiDerivation& d, const OrePoly& f,
                        const OrePoly& g) {
  if (f.bdim != d.B.dim || g.bdim != d.B.dim)
    throw DimensionMismatch("ore_wreath_mult: polynomials over the wrong algebra");
  OrePoly out = OrePoly::zero(d.B.dim);
  if (f.is_zero() || g.is_zero()) return out;
  const auto t = ore_psi_maps(d, f.length() - 1);
  out.coeff.assign(f.length() + g.length() + 1, Mat(d.B.dim, 1));
  for (std::size_t m = 0; m < f.length(); ++m) {
    if (f.coeff[m].is_zero()) continue;
    const Mat lf = d.B.left_mult(f.coeff[m]);
    for (std::size_t n = 0; n < g.length(); ++n) {
      if (g.coeff[n].is_zero()) continue;
      for (std::size_t i = 0; i <= m + 1; ++i)
        out.coeff[i + n] = out.coeff[i + n] + lf * (t[m][i] * g.coeff[n]);
    }
  }
  out.trim();
  return out;
}

OrePoly ore_smoothing(const PQQuasiDerivation& d, const OrePoly& f) {
  if (f.bdim != d.B.dim)
    throw DimensionMismatch("ore_smoothing: polynomial over the wrong algebra");
  OrePoly out = OrePoly::zero(d.B.dim);
  if (f.is_zero()) return out;
  const auto t = ore_psi_maps(d, f.length() - 1);
  out.coeff.assign(f.length() + 1, Mat(d.B.dim, 1));
  for (std::size_t n = 0; n < f.length(); ++n) {
    if (f.coeff[n].is_zero()) continue;
    const Mat lf = d.B.left_mult(f.coeff[n]);
    for (std::size_t i = 0; i <= n + 1; ++i)
      out.coeff[i] = out.coeff[i] + lf * (t[n][i] * d.B.unit);
  }
  out.trim();
  return out;
}

Report ore_check_properties(const PQQuasiDerivation& d, std::size_t n_max) {
  require_element(d);
  Report rep("ore law properties");
  const std::size_t dim = d.B.dim;
  const Mat rp = d.B.right_mult(d.p), rq = d.B.right_mult(d.q);
  const Mat zero(dim, dim);
  const auto t = ore_psi_maps(d, 2 * n_max);

  // a check covering a family of map identities indexed by degrees; the
  // witness records the degree indices, then the decoded input column
  auto family = [&](const std::string& name, auto&& body) {
    std::optional<Witness> w;
    body(w);
    if (w)
      rep.add_fail(name, std::move(*w));
    else
      rep.add_pass(name);
  };
  auto diff_witness = [](std::vector<std::size_t> degrees, const Mat& l, const Mat& r,
                         std::vector<std::size_t> input_factors,
                         std::optional<Witness>& w) {
    auto p = first_diff(l, r);
    if (!p) return false;
    Witness wit;
    wit.domain_index = std::move(degrees);
    std::size_t col = p->second;
    std::vector<std::size_t> idx(input_factors.size());
    for (std::size_t k = input_factors.size(); k-- > 0;) {
      idx[k] = col % input_factors[k];
      col /= input_factors[k];
    }
    wit.domain_index.insert(wit.domain_index.end(), idx.begin(), idx.end());
    wit.row = p->first;
    wit.lhs = l.at(p->first, p->second);
    wit.rhs = r.at(p->first, p->second);
    w = std::move(wit);
    return true;
  };

  family("ore/absorb-p", [&](std::optional<Witness>& w) {
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t i = 0; i <= n + 1; ++i)
        if (diff_witness({n, i}, t[n][i] * rp, t[n][i], {dim}, w)) return;
  });
  family("ore/kill-q", [&](std::optional<Witness>& w) {
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t i = 0; i <= n + 1; ++i)
        if (diff_witness({n, i}, t[n][i] * rq, zero, {dim}, w)) return;
  });
  family("ore/weak-unit", [&](std::optional<Witness>& w) {
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const Mat lhs = d.B.right_mult(t[n][i] * d.B.unit);
        const Mat rhs = i == n ? rp : (i == n + 1 ? rq : zero);
        if (diff_witness({n, i}, lhs, rhs, {dim}, w)) return;
      }
  });
  family("ore/mult-X", [&](std::optional<Witness>& w) {
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t m = 0; m <= n_max; ++m)
        for (std::size_t k = 0; k <= n + m + 1; ++k) {
          Mat lhs(dim, dim);
          for (std::size_t i = 0; i <= std::min(k, n + 1); ++i)
            if (k - i <= m + 1) lhs = lhs + t[n][i] * t[m][k - i];
          if (diff_witness({n, m, k}, lhs, t[n + m][k], {dim}, w)) return;
        }
  });
  family("ore/mult-B", [&](std::optional<Witness>& w) {
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t j = 0; j <= n + 2; ++j) {
        Mat lhs(dim, dim * dim);
        for (std::size_t i = 0; i <= n + 1; ++i)
          if (j <= i + 1) lhs = lhs + d.B.mult * kron(t[n][i], t[i][j]);
        const Mat rhs = (j <= n + 1 ? t[n][j] : zero) * d.B.mult;
        if (diff_witness({n, j}, lhs, rhs, {dim, dim}, w)) return;
      }
  });
  family("ore/assoc", [&](std::optional<Witness>& w) {
    const std::size_t count = dim * (n_max + 1), len = 3 * (n_max + 2);
    std::vector<OrePoly> mono(count);
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t n = 0; n <= n_max; ++n)
        mono[b * (n_max + 1) + n] = OrePoly::monomial(d.B.basis_vec(b), n);
    std::vector<std::vector<OrePoly>> prod(count, std::vector<OrePoly>(count));
    for (std::size_t x = 0; x < count; ++x)
      for (std::size_t y = 0; y < count; ++y)
        prod[x][y] = ore_wreath_mult(d, mono[x], mono[y]);
    for (std::size_t x = 0; x < count; ++x)
      for (std::size_t y = 0; y < count; ++y)
        for (std::size_t z = 0; z < count; ++z) {
          const Mat l = ore_wreath_mult(d, prod[x][y], mono[z]).flatten(len);
          const Mat r = ore_wreath_mult(d, mono[x], prod[y][z]).flatten(len);
          if (diff_witness({x / (n_max + 1), x % (n_max + 1), y / (n_max + 1),
                            y % (n_max + 1), z / (n_max + 1), z % (n_max + 1)},
                           l, r, {}, w))
            return;
        }
  });
  return rep;
}

OreTildeBasis ore_tilde_basis(const PQQuasiDerivation& d, std::size_t n_max) {
  validate_pqqd(d).require("ore_tilde_basis");
  const std::size_t dim = d.B.dim, jmax = n_max + 3, len = n_max + 3;
  const auto t = ore_psi_maps(d, n_max + 2);
  const Mat rp = t[0][0], rq = t[0][1];

  OreTildeBasis out;
  out.checks = Report("ore tilde structure");
  Report& rep = out.checks;

  auto tilde = [&](const Mat& b) {
    OrePoly g;
    g.bdim = dim;
    g.coeff = {rp * b, rq * b};
    g.trim();
    return g;
  };
  for (std::size_t b = 0; b < dim; ++b)
    out.generators.push_back(tilde(d.B.basis_vec(b)));
  for (std::size_t n = 0; n <= n_max; ++n)
    out.powers.push_back(psi_from_table(t, n, d.B.unit));

  auto family = [&](const std::string& name, auto&& body) {
    std::optional<Witness> w;
    body(w);
    if (w)
      rep.add_fail(name, std::move(*w));
    else
      rep.add_pass(name);
  };
  auto poly_diff = [&](std::vector<std::size_t> idx, const OrePoly& l,
                       const OrePoly& r, std::optional<Witness>& w) {
    const std::size_t common = std::max(l.length(), r.length());
    auto p = first_diff(l.flatten(common), r.flatten(common));
    if (!p) return false;
    Witness wit;
    wit.domain_index = std::move(idx);
    wit.row = p->first;
    wit.lhs = l.flatten(common).at(p->first, 0);
    wit.rhs = r.flatten(common).at(p->first, 0);
    w = std::move(wit);
    return true;
  };

  family("tilde/subalgebra", [&](std::optional<Witness>& w) {
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        const OrePoly lhs =
            ore_wreath_mult(d, out.generators[b], out.generators[c]);
        const OrePoly rhs =
            tilde(d.B.mult * kron(d.B.basis_vec(b), d.B.basis_vec(c)));
        if (poly_diff({b, c}, lhs, rhs, w)) return;
      }
  });

  const OrePoly unit_elt = tilde(d.B.unit);
  family("tilde/unit", [&](std::optional<Witness>& w) {
    if (poly_diff({0}, unit_elt, out.powers[0], w)) return;
    std::vector<OrePoly> image = out.generators;
    image.insert(image.end(), out.powers.begin(), out.powers.end());
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (poly_diff({i}, ore_wreath_mult(d, unit_elt, image[i]), image[i], w)) return;
      if (poly_diff({i}, ore_wreath_mult(d, image[i], unit_elt), image[i], w)) return;
    }
  });

  family("tilde/power-of-x", [&](std::optional<Witness>& w) {
    OrePoly acc = unit_elt;
    for (std::size_t n = 1; n <= n_max; ++n) {
      acc = ore_wreath_mult(d, acc, out.powers[1]);
      if (poly_diff({n}, acc, out.powers[n], w)) return;
    }
  });

  family("tilde/translate", [&](std::optional<Witness>& w) {
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t n = 0; n <= n_max; ++n) {
        const OrePoly lhs = ore_wreath_mult(d, out.generators[b], out.powers[n]);
        const OrePoly rhs =
            ore_smoothing(d, OrePoly::monomial(d.B.basis_vec(b), n));
        if (poly_diff({b, n}, lhs, rhs, w)) return;
      }
  });

  // a maximal independent subfamily of the generators, greedily
  std::vector<std::size_t> free;
  Mat gen_span(2 * dim, 0);
  for (std::size_t b = 0; b < dim; ++b) {
    const Mat ext = hconcat(gen_span, out.generators[b].flatten(2));
    if (rank(ext) == ext.cols()) {
      gen_span = ext;
      free.push_back(b);
    }
  }

  Mat span(len * dim, 0);
  for (std::size_t s : free)
    for (std::size_t n = 0; n <= n_max; ++n)
      span = hconcat(
          span, ore_wreath_mult(d, out.generators[s], out.powers[n]).flatten(len));
  rep.check_true("tilde/independent", rank(span) == span.cols());

  family("tilde/span", [&](std::optional<Witness>& w) {
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t n = 0; n <= n_max; ++n) {
        const Mat target =
            ore_smoothing(d, OrePoly::monomial(d.B.basis_vec(b), n)).flatten(len);
        try {
          solve(span, target);
        } catch (const NoSolution&) {
          w = Witness{{b, n}, 0, Scalar(0), Scalar(0)};
          return;
        }
      }
  });

  family("tilde/x-normalizes", [&](std::optional<Witness>& w) {
    const std::size_t short_len = 6;
    Mat shifted_span(short_len * dim, 0);
    for (std::size_t s : free) {
      shifted_span = hconcat(
          shifted_span,
          ore_wreath_mult(d, out.generators[s], out.powers[1]).flatten(short_len));
      shifted_span = hconcat(shifted_span, out.generators[s].flatten(short_len));
    }
    for (std::size_t b = 0; b < dim; ++b) {
      const Mat target =
          ore_wreath_mult(d, out.powers[1], out.generators[b]).flatten(short_len);
      try {
        solve(shifted_span, target);
      } catch (const NoSolution&) {
        w = Witness{{b}, 0, Scalar(0), Scalar(0)};
        return;
      }
    }
  });

  family("tilde/idempotent", [&](std::optional<Witness>& w) {
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t n = 0; n <= n_max; ++n) {
        const OrePoly once =
            ore_smoothing(d, OrePoly::monomial(d.B.basis_vec(b), n));
        if (poly_diff({b, n}, ore_smoothing(d, once), once, w)) return;
      }
  });

  // both unit-insertion diagrams, evaluated through the double smoothing
  // grid: entry (i, j) of the grid of f holds the B (x) B coefficient of
  // the i-th and j-th powers in (psi (x) psi)(1 (x) f (x) 1)
  auto grid = [&](const OrePoly& f) {
    Mat out_grid(2 * jmax * dim * dim, 1);
    for (std::size_t m = 0; m < f.length(); ++m) {
      if (f.coeff[m].is_zero()) continue;
      for (std::size_t i = 0; i <= 1; ++i) {
        const Mat fc = t[0][i] * f.coeff[m];
        for (std::size_t j = 0; j <= m + 1; ++j) {
          const Mat blk = kron(fc, t[m][j] * d.B.unit);
          const std::size_t off = (i * jmax + j) * dim * dim;
          for (std::size_t r = 0; r < dim * dim; ++r)
            out_grid.at(off + r, 0) += blk.at(r, 0);
        }
      }
    }
    return out_grid;
  };

  family("tilde/strict-diagram-A", [&](std::optional<Witness>& w) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Mat top = grid(out.powers[n]);
      const Mat left = grid(OrePoly::monomial(d.B.unit, n));
      auto p = first_diff(top, left);
      if (p) {
        w = Witness{{n}, p->first, top.at(p->first, 0), left.at(p->first, 0)};
        return;
      }
    }
  });
  family("tilde/strict-diagram-B", [&](std::optional<Witness>& w) {
    for (std::size_t b = 0; b < dim; ++b) {
      const Mat top = grid(out.generators[b]);
      const Mat left = grid(OrePoly::monomial(d.B.basis_vec(b), 0));
      auto p = first_diff(top, left);
      if (p) {
        w = Witness{{b}, p->first, top.at(p->first, 0), left.at(p->first, 0)};
        return;
      }
    }
  });

  return out;
}

}  // namespace wreathlab

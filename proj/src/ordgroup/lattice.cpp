#include "placeforge/ordgroup/lattice.hpp"

#include <utility>

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

void axpy_row(IntVec& row, const Integer& q, const IntVec& pivot_row) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= q * pivot_row[j];
}

IntMat identity(std::size_t n) {
  IntMat u(n, IntVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  return u;
}

}  // namespace

Hnf hermite_normal_form(const IntMat& rows, std::size_t ncols) {
  Hnf out;
  out.form = rows;
  for (const auto& r : out.form) {
    if (r.size() != ncols) throw DomainError("hermite_normal_form: ragged matrix");
  }
  const std::size_t m = rows.size();
  out.transform = identity(m);
  auto& h = out.form;
  auto& u = out.transform;

  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m; ++c) {
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h[i][c] != 0 && (piv == m || abs(h[i][c]) < abs(h[piv][c]))) piv = i;
      }
      if (piv == m) break;
      std::swap(h[r], h[piv]);
      std::swap(u[r], u[piv]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
        axpy_row(h[i], q, h[r]);
        axpy_row(u[i], q, u[r]);
        if (h[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      if (q != 0) {
        axpy_row(h[i], q, h[r]);
        axpy_row(u[i], q, u[r]);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMat hnf_basis(const IntMat& rows, std::size_t ncols) {
  Hnf h = hermite_normal_form(rows, ncols);
  h.form.resize(h.rank);
  return std::move(h.form);
}

IntMat left_kernel(const IntMat& rows, std::size_t ncols) {
  const Hnf h = hermite_normal_form(rows, ncols);
  IntMat kernel(h.transform.begin() + static_cast<std::ptrdiff_t>(h.rank), h.transform.end());
  if (kernel.empty()) return kernel;
  return hnf_basis(kernel, rows.size());
}

std::optional<IntVec> hnf_coordinates(const Hnf& hnf, IntVec target) {
  IntVec y(hnf.rank, Integer(0));
  for (std::size_t i = 0; i < hnf.rank; ++i) {
    const std::size_t p = hnf.pivots[i];
    const Integer& piv = hnf.form[i][p];
    if (!mpz_divisible_p(target[p].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), target[p].get_mpz_t(), piv.get_mpz_t());
    if (q != 0) axpy_row(target, q, hnf.form[i]);
    y[i] = q;
  }
  if (!is_zero(target)) return std::nullopt;
  return y;
}

std::optional<IntVec> solve_integer(const Hnf& hnf, const IntVec& target) {
  auto y = hnf_coordinates(hnf, target);
  if (!y) return std::nullopt;
  IntVec c(hnf.transform.size(), Integer(0));
  for (std::size_t i = 0; i < hnf.rank; ++i) {
    if ((*y)[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += (*y)[i] * hnf.transform[i][j];
  }
  return c;
}

IntVec reduce_centered(IntVec v, const IntMat& basis) {
  for (const auto& row : basis) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    const Integer& h = row[p];
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v[p].get_mpz_t(), h.get_mpz_t());
    if (2 * r > h) r -= h;
    Integer q;
    mpz_divexact(q.get_mpz_t(), Integer(v[p] - r).get_mpz_t(), h.get_mpz_t());
    if (q != 0) axpy_row(v, q, row);
  }
  return v;
}

Integer common_denominator(const RatMat& m) {
  Integer d = 1;
  for (const auto& row : m) {
    for (const auto& x : row) d = lcm(d, x.get_den());
  }
  return d;
}

IntMat scale_to_integers(const RatMat& m, const Integer& scale) {
  IntMat out;
  out.reserve(m.size());
  for (const auto& row : m) {
    auto r = scale_to_integers(row, scale);
    if (!r) throw DomainError("scale_to_integers: scale does not clear the denominators");
    out.push_back(std::move(*r));
  }
  return out;
}

std::optional<IntVec> scale_to_integers(const RatVec& v, const Integer& scale) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rat y = x * scale;
    if (y.get_den() != 1) return std::nullopt;
    out.push_back(y.get_num());
  }
  return out;
}

std::vector<std::size_t> rref(RatMat& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rational_rank(const RatMat& rows, std::size_t ncols) {
  RatMat copy = rows;
  return rref(copy, ncols).size();
}

RatMat right_nullspace(const RatMat& rows, std::size_t ncols) {
  RatMat r = rows;
  const auto pivots = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec x(ncols, Rat(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve_rational(const RatMat& rows, const RatVec& target) {
  // Columns of the system are the given rows; solve by elimination on the
  // augmented transpose.
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  RatMat aug(n, RatVec(k + 1, Rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = target[j];
  }
  const auto pivots = rref(aug, k + 1);
  RatVec c(k, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == k) return std::nullopt;
    c[pivots[i]] = aug[i][k];
  }
  return c;
}

IntVec add(const IntVec& x, const IntVec& y) {
  IntVec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

IntVec scaled(const IntVec& x, const Integer& k) {
  IntVec out = x;
  for (auto& v : out) v *= k;
  return out;
}

bool is_zero(const IntVec& x) {
  for (const auto& v : x) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace placeforge

#include "linalg.hpp"

#include <utility>

namespace gnoe::detail {

// ---------------------------------------------------------------------------
// EchelonBasis
// ---------------------------------------------------------------------------

void EchelonBasis::add_scaled(Combination& target, const Combination& source, const RingElement& factor) const {
  for (const auto& [tag, c] : source) {
    auto it = target.find(tag);
    RingElement term = field_->mul(factor, c);
    if (it == target.end()) {
      if (!term.is_zero()) target.emplace(tag, std::move(term));
      continue;
    }
    it->second = field_->add(it->second, term);
    if (it->second.is_zero()) target.erase(it);
  }
}

bool EchelonBasis::insert(std::vector<RingElement> v, std::size_t tag) {
  Combination combination{{tag, field_->one()}};
  for (const Row& row : rows_) {
    const RingElement factor = v[row.pivot];
    if (factor.is_zero()) continue;
    const RingElement minus = field_->neg(factor);
    for (std::size_t c = 0; c < dim_; ++c)
      if (!row.values[c].is_zero()) v[c] = field_->add(v[c], field_->mul(minus, row.values[c]));
    add_scaled(combination, row.combination, minus);
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot].is_zero()) ++pivot;
  if (pivot == dim_) return false;
  const RingElement scale = field_->inverse(v[pivot]);
  for (auto& x : v) x = field_->mul(scale, x);
  Combination scaled;
  add_scaled(scaled, combination, scale);
  rows_.push_back({pivot, std::move(v), std::move(scaled)});
  return true;
}

std::optional<EchelonBasis::Combination> EchelonBasis::solve(std::vector<RingElement> v) const {
  Combination combination;
  for (const Row& row : rows_) {
    const RingElement factor = v[row.pivot];
    if (factor.is_zero()) continue;
    const RingElement minus = field_->neg(factor);
    for (std::size_t c = 0; c < dim_; ++c)
      if (!row.values[c].is_zero()) v[c] = field_->add(v[c], field_->mul(minus, row.values[c]));
    add_scaled(combination, row.combination, factor);
  }
  for (const auto& x : v)
    if (!x.is_zero()) return std::nullopt;
  return combination;
}

// ---------------------------------------------------------------------------
// PrimeFieldEchelon
// ---------------------------------------------------------------------------

std::uint64_t PrimeFieldEchelon::inverse(std::uint64_t a) const {
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return result;
}

void PrimeFieldEchelon::reduce(std::vector<std::uint64_t>& v) const {
  for (const auto& [pivot, row] : rows_) {
    const std::uint64_t factor = v[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (row[c]) v[c] = (v[c] + (p_ - factor) * row[c]) % p_;
  }
}

bool PrimeFieldEchelon::insert(std::vector<std::uint64_t> v) {
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const std::uint64_t scale = inverse(v[pivot]);
  for (auto& x : v) x = x * scale % p_;
  rows_.emplace_back(pivot, std::move(v));
  return true;
}

bool PrimeFieldEchelon::contains(std::vector<std::uint64_t> v) const {
  reduce(v);
  for (auto x : v)
    if (x) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Integer and mixed lattices
// ---------------------------------------------------------------------------

std::optional<std::vector<mpz_class>> solve_integer_system(const std::vector<std::vector<mpz_class>>& columns,
                                                           const std::vector<mpz_class>& b) {
  const std::size_t n = columns.size();
  const std::size_t m = b.size();
  // Rows of G are the generators; U tracks G = U * G0 with U unimodular.
  std::vector<std::vector<mpz_class>> G = columns;
  std::vector<std::vector<mpz_class>> U(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;

  auto combine = [](std::vector<mpz_class>& x, std::vector<mpz_class>& y, const mpz_class& s, const mpz_class& t,
                    const mpz_class& u, const mpz_class& v) {
    // (x, y) <- (s x + t y, u x + v y) with s v - t u = 1.
    for (std::size_t k = 0; k < x.size(); ++k) {
      mpz_class nx = s * x[k] + t * y[k];
      mpz_class ny = u * x[k] + v * y[k];
      x[k] = std::move(nx);
      y[k] = std::move(ny);
    }
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::size_t piv = 0;
  for (std::size_t c = 0; c < m && piv < n; ++c) {
    for (std::size_t r = piv + 1; r < n; ++r) {
      if (G[r][c] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), G[piv][c].get_mpz_t(), G[r][c].get_mpz_t());
      const mpz_class u = -G[r][c] / g;
      const mpz_class v = G[piv][c] / g;
      combine(G[piv], G[r], s, t, u, v);
      combine(U[piv], U[r], s, t, u, v);
    }
    if (G[piv][c] != 0) pivots.emplace_back(piv++, c);
  }

  std::vector<mpz_class> residual = b;
  std::vector<mpz_class> y(n, 0);
  for (const auto& [row, col] : pivots) {
    for (std::size_t c = 0; c < col; ++c)
      if (residual[c] != 0) return std::nullopt;
    if (!mpz_divisible_p(residual[col].get_mpz_t(), G[row][col].get_mpz_t())) return std::nullopt;
    y[row] = residual[col] / G[row][col];
    for (std::size_t c = col; c < m; ++c) residual[c] -= y[row] * G[row][c];
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;

  std::vector<mpz_class> x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (y[i] != 0)
      for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * U[i][j];
  return x;
}

namespace {

/// Fully reduced row echelon form of the span of `vectors`.
std::vector<std::pair<std::size_t, std::vector<mpq_class>>> rref(const std::vector<std::vector<mpq_class>>& vectors,
                                                                 std::size_t dim) {
  std::vector<std::pair<std::size_t, std::vector<mpq_class>>> rows;
  for (auto v : vectors) {
    for (const auto& [pivot, row] : rows)
      if (v[pivot] != 0) {
        const mpq_class f = v[pivot];
        for (std::size_t c = 0; c < dim; ++c) v[c] -= f * row[c];
      }
    std::size_t pivot = 0;
    while (pivot < dim && v[pivot] == 0) ++pivot;
    if (pivot == dim) continue;
    const mpq_class scale = 1 / v[pivot];
    for (auto& x : v) x *= scale;
    for (auto& [p, row] : rows)
      if (row[pivot] != 0) {
        const mpq_class f = row[pivot];
        for (std::size_t c = 0; c < dim; ++c) row[c] -= f * v[c];
      }
    rows.emplace_back(pivot, std::move(v));
  }
  return rows;
}

/// Rational l with sum l_k columns[k] = v, or nullopt.
std::optional<std::vector<mpq_class>> solve_rational(const std::vector<std::vector<mpq_class>>& columns,
                                                     const std::vector<mpq_class>& v) {
  const std::size_t n = columns.size();
  const std::size_t m = v.size();
  // Augmented matrix m x (n + 1).
  std::vector<std::vector<mpq_class>> A(m, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n; ++k) A[r][k] = columns[k][r];
    A[r][n] = v[r];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t r = row;
    while (r < m && A[r][c] == 0) ++r;
    if (r == m) continue;
    std::swap(A[row], A[r]);
    const mpq_class scale = 1 / A[row][c];
    for (auto& x : A[row]) x *= scale;
    for (std::size_t k = 0; k < m; ++k)
      if (k != row && A[k][c] != 0) {
        const mpq_class f = A[k][c];
        for (std::size_t j = 0; j <= n; ++j) A[k][j] -= f * A[row][j];
      }
    pivots.emplace_back(row++, c);
  }
  for (std::size_t r = row; r < m; ++r)
    if (A[r][n] != 0) return std::nullopt;
  std::vector<mpq_class> l(n, 0);
  for (const auto& [r, c] : pivots) l[c] = A[r][n];
  return l;
}

}  // namespace

std::optional<LatticeSolution> solve_lattice(const std::vector<std::vector<mpq_class>>& integral_columns,
                                             const std::vector<std::vector<mpq_class>>& rational_columns,
                                             const std::vector<mpq_class>& b) {
  const std::size_t dim = b.size();
  const auto w = rref(rational_columns, dim);
  auto project = [&](std::vector<mpq_class> v) {
    for (const auto& [pivot, row] : w)
      if (v[pivot] != 0) {
        const mpq_class f = v[pivot];
        for (std::size_t c = 0; c < dim; ++c) v[c] -= f * row[c];
      }
    return v;
  };

  std::vector<std::vector<mpq_class>> projected;
  for (const auto& z : integral_columns) projected.push_back(project(z));
  const std::vector<mpq_class> pb = project(b);

  // Clear denominators; an integral solution of the scaled system is one of the original.
  mpz_class lcm = 1;
  auto absorb = [&](const std::vector<mpq_class>& v) {
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  };
  for (const auto& z : projected) absorb(z);
  absorb(pb);
  auto scale = [&](const std::vector<mpq_class>& v) {
    std::vector<mpz_class> out;
    for (const auto& x : v) out.push_back(mpz_class(x * lcm));
    return out;
  };
  std::vector<std::vector<mpz_class>> columns;
  for (const auto& z : projected) columns.push_back(scale(z));
  auto x = solve_integer_system(columns, scale(pb));
  if (!x) return std::nullopt;

  std::vector<mpq_class> residual = b;
  for (std::size_t j = 0; j < integral_columns.size(); ++j)
    for (std::size_t c = 0; c < dim; ++c) residual[c] -= (*x)[j] * integral_columns[j][c];
  auto l = solve_rational(rational_columns, residual);
  if (!l) return std::nullopt;
  return LatticeSolution{std::move(*x), std::move(*l)};
}

}  // namespace gnoe::detail

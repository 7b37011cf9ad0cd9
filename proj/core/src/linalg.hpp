#ifndef GNOE_SRC_LINALG_HPP
#define GNOE_SRC_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gnoe/ring.hpp"

namespace gnoe::detail {

/// Incremental row echelon form over a field given as a Ring, tracking how
/// each row combines the tagged input vectors.
/// Invariant: row j is zero at the pivots of rows < j and its pivot entry is 1.
class EchelonBasis {
 public:
  using Combination = std::map<std::size_t, RingElement>;  // tag -> coefficient

  EchelonBasis(RingHandle field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// True when v is independent of everything inserted so far.
  bool insert(std::vector<RingElement> v, std::size_t tag);
  /// Coefficients c_tag with v = sum c_tag * input_tag, or nullopt when v is
  /// outside the span.
  std::optional<Combination> solve(std::vector<RingElement> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<RingElement> values;
    Combination combination;
  };
  void add_scaled(Combination& target, const Combination& source, const RingElement& factor) const;

  RingHandle field_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

/// Row echelon form over F_p (p < 2^32) with machine-word residues, without tracking.
class PrimeFieldEchelon {
 public:
  PrimeFieldEchelon(std::uint64_t p, std::size_t dim) : p_(p), dim_(dim) {}

  bool insert(std::vector<std::uint64_t> v);
  bool contains(std::vector<std::uint64_t> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(std::vector<std::uint64_t>& v) const;
  std::uint64_t inverse(std::uint64_t a) const;

  std::uint64_t p_;
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

/// Integer coefficients x with sum x_j * columns[j] = b, or nullopt. Uses a
/// Hermite reduction of the columns with a unimodular transform, so a
/// nullopt answer is exact.
std::optional<std::vector<mpz_class>> solve_integer_system(const std::vector<std::vector<mpz_class>>& columns,
                                                           const std::vector<mpz_class>& b);

struct LatticeSolution {
  std::vector<mpz_class> integral;  // one per integral column
  std::vector<mpq_class> rational;  // one per rational column
};

/// Solves b = sum x_j z_j + sum l_k q_k with x_j integers and l_k rationals.
/// All vectors share one length.
std::optional<LatticeSolution> solve_lattice(const std::vector<std::vector<mpq_class>>& integral_columns,
                                             const std::vector<std::vector<mpq_class>>& rational_columns,
                                             const std::vector<mpq_class>& b);

}  // namespace gnoe::detail

#endif  // GNOE_SRC_LINALG_HPP

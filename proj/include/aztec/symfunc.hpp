#pragma once

#include "aztec/numeric.hpp"
#include "aztec/partitions.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace aztec {

/// Values of x_1, ..., x_k.
struct EvalPoint {
  std::vector<Rational> coords;

  int size() const { return static_cast<int>(coords.size()); }
  static EvalPoint ones(int k) { return {std::vector<Rational>(k, Rational(1))}; }
};

using RowVector = std::vector<Rational>;

struct ExactMatrix {
  std::vector<RowVector> rows;

  int size() const { return static_cast<int>(rows.size()); }
  bool is_square() const;
};

/// Complete homogeneous symmetric polynomial h_m at `point`; zero for m < 0.
Rational h_eval(int m, const EvalPoint& point);

/// h_0, ..., h_max_m at `point` in one pass of the variable-by-variable
/// recurrence.
std::vector<Rational> h_values(int max_m, const EvalPoint& point);

/// (h_{m-k}, ..., h_{m-1}) at `point`.
RowVector jt_row(int m, int k, const EvalPoint& point);

/// Exact determinant. Rows are scaled to integers and reduced by
/// fraction-free (Bareiss) elimination. Throws std::invalid_argument on a
/// ragged or non-square matrix.
Rational det_exact(const ExactMatrix& mat);

/// s_shape(x_1..x_k) as the Jacobi-Trudi determinant, rows v(a_k) on top
/// down to v(a_1). The shape may have at most k non-zero parts.
Rational schur_eval_jt(const Shape& shape, const EvalPoint& point);

/// s_shape(x_1..x_k) summed tableau by tableau. Exhaustive; small shapes.
Rational schur_eval_tableau(const Shape& shape, const EvalPoint& point);

/// x_1 ... x_k * prod_{i<j} (x_i + x_j)^2
Rational staircase_product_eval(int k, const EvalPoint& point);

/// Determinant of the rows vectors[i - 1] for i in `indices`, stacked in the
/// order given.
Rational stacked_det(std::span<const RowVector> vectors, std::span<const int> indices);

/// Sum over balanced partitions (A, B) of {1..2k} with A meeting the evens in
/// exactly `a_star` of ||A|| * ||B||, each stack ascending (v(a_1) on top).
/// `vectors` holds v(1), ..., v(2k), each of length k.
Rational split_minor_sum(std::span<const RowVector> vectors, const std::vector<int>& a_star);

/// ||{1, 3, ..., 2k-1}|| * ||{2, 4, ..., 2k}||, ascending stacks.
Rational parity_minor_product(std::span<const RowVector> vectors);

/// 2k random integer row vectors of length k, entries uniform in
/// [-bound, bound].
std::vector<RowVector> random_vector_family(int k, std::mt19937_64& rng, int bound = 9);

/// Random point with coordinates p/q, p in [-bound, bound], q in [1, bound].
EvalPoint random_rational_point(int k, std::mt19937_64& rng, int bound = 9);

/// Random integer point, coordinates in [-bound, bound].
EvalPoint random_integer_point(int k, std::mt19937_64& rng, int bound = 9);

/// Every subset of {2, 4, ..., 2k}, ordered by bitmask over the evens.
std::vector<std::vector<int>> even_subsets(int k);

}  // namespace aztec

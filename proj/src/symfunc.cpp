#include "aztec/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace aztec {

bool ExactMatrix::is_square() const {
  return std::all_of(rows.begin(), rows.end(), [&](const RowVector& r) { return r.size() == rows.size(); });
}

std::vector<Rational> h_values(int max_m, const EvalPoint& point) {
  if (max_m < 0) return {};
  std::vector<Rational> h(max_m + 1, Rational(0));
  h[0] = 1;
  for (const Rational& x : point.coords) {
    for (int m = 1; m <= max_m; ++m) h[m] += x * h[m - 1];
  }
  return h;
}

Rational h_eval(int m, const EvalPoint& point) {
  if (m < 0) return 0;
  return h_values(m, point)[m];
}

namespace {

RowVector jt_row_from(const std::vector<Rational>& h, int m, int k) {
  RowVector row(k);
  for (int c = 0; c < k; ++c) {
    const int degree = m - k + c;
    row[c] = degree < 0 ? Rational(0) : h[degree];
  }
  return row;
}

}  // namespace

RowVector jt_row(int m, int k, const EvalPoint& point) {
  return jt_row_from(h_values(std::max(m - 1, 0), point), m, k);
}

Rational det_exact(const ExactMatrix& mat) {
  const int n = mat.size();
  if (!mat.is_square()) throw std::invalid_argument("det_exact: matrix must be square");
  if (n == 0) return 1;

  // Clear denominators row by row so elimination runs over the integers.
  std::vector<std::vector<BigCount>> a(n, std::vector<BigCount>(n));
  BigCount scale = 1;
  for (int r = 0; r < n; ++r) {
    BigCount l = 1;
    for (const Rational& v : mat.rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (int c = 0; c < n; ++c) a[r][c] = mat.rows[r][c].get_num() * (l / mat.rows[r][c].get_den());
    scale *= l;
  }

  int sign = 1;
  BigCount prev = 1;
  for (int p = 0; p < n; ++p) {
    if (a[p][p] == 0) {
      int swap_with = -1;
      for (int r = p + 1; r < n; ++r) {
        if (a[r][p] != 0) {
          swap_with = r;
          break;
        }
      }
      if (swap_with < 0) return 0;
      std::swap(a[p], a[swap_with]);
      sign = -sign;
    }
    for (int r = p + 1; r < n; ++r) {
      for (int c = p + 1; c < n; ++c) {
        a[r][c] = a[r][c] * a[p][p] - a[r][p] * a[p][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][p] = 0;
    }
    prev = a[p][p];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

Rational schur_eval_jt(const Shape& shape, const EvalPoint& point) {
  const int k = point.size();
  if (shape.rows() > k) return 0;
  std::vector<int> parts(k, 0);
  std::copy_n(shape.parts().begin(), shape.rows(), parts.begin());
  const auto h = h_values(parts.empty() ? 0 : parts[0] + k - 1, point);
  ExactMatrix m;
  m.rows.reserve(k);
  for (int r = 0; r < k; ++r) m.rows.push_back(jt_row_from(h, parts[r] + k - r, k));
  return det_exact(m);
}

Rational schur_eval_tableau(const Shape& shape, const EvalPoint& point) {
  const int k = point.size();
  if (k == 0) return shape.rows() == 0 ? 1 : 0;
  Rational total = 0;
  for_each_ssyt(shape, k, [&](const std::vector<int>& content) {
    Rational term = 1;
    for (int e = 0; e < k; ++e)
      for (int c = 0; c < content[e]; ++c) term *= point.coords[e];
    total += term;
  });
  return total;
}

Rational staircase_product_eval(int k, const EvalPoint& point) {
  if (point.size() != k) throw std::invalid_argument("staircase_product_eval: point must have k coordinates");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= point.coords[i];
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Rational s = point.coords[i] + point.coords[j];
      r *= s * s;
    }
  }
  return r;
}

Rational stacked_det(std::span<const RowVector> vectors, std::span<const int> indices) {
  ExactMatrix m;
  m.rows.reserve(indices.size());
  for (int i : indices) m.rows.push_back(vectors[i - 1]);
  return det_exact(m);
}

namespace {

int family_k(std::span<const RowVector> vectors) {
  if (vectors.size() % 2 != 0) throw std::invalid_argument("vector family must have even length 2k");
  const int k = static_cast<int>(vectors.size() / 2);
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != k) throw std::invalid_argument("vector family: each vector must have length k");
  return k;
}

}  // namespace

Rational split_minor_sum(std::span<const RowVector> vectors, const std::vector<int>& a_star) {
  const int k = family_k(vectors);
  Rational total = 0;
  for (const auto& p : enumerate_balanced(k, a_star)) total += stacked_det(vectors, p.zigs()) * stacked_det(vectors, p.zags());
  return total;
}

Rational parity_minor_product(std::span<const RowVector> vectors) {
  const int k = family_k(vectors);
  std::vector<int> odds(k), evens(k);
  for (int i = 0; i < k; ++i) {
    odds[i] = 2 * i + 1;
    evens[i] = 2 * i + 2;
  }
  return stacked_det(vectors, odds) * stacked_det(vectors, evens);
}

std::vector<RowVector> random_vector_family(int k, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::vector<RowVector> out(2 * k, RowVector(k));
  for (auto& v : out)
    for (auto& x : v) x = entry(rng);
  return out;
}

EvalPoint random_rational_point(int k, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  EvalPoint p;
  p.coords.reserve(k);
  for (int i = 0; i < k; ++i) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    p.coords.push_back(x);
  }
  return p;
}

EvalPoint random_integer_point(int k, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  EvalPoint p;
  p.coords.reserve(k);
  for (int i = 0; i < k; ++i) p.coords.emplace_back(entry(rng));
  return p;
}

std::vector<std::vector<int>> even_subsets(int k) {
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t{1} << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) s.push_back(2 * (b + 1));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace aztec

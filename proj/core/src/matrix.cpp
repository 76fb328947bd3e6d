#include "minrep/matrix.hpp"

#include "minrep/errors.hpp"

namespace minrep {

namespace {

void check_dim(std::uint32_t n) {
  if (n < 2 || n > kMaxDim) throw InvalidInput("Mat: dimension must be in [2, 8]");
}

}  // namespace

Mat identity(const Field& F, std::uint32_t n) {
  check_dim(n);
  Mat m;
  m.n = n;
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Mat scalar_mat(const Field& F, std::uint32_t n, Field::Elt a) {
  check_dim(n);
  Mat m;
  m.n = n;
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = a;
  return m;
}

Mat transvection(const Field& F, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                 Field::Elt lambda) {
  if (i == j) throw InvalidInput("transvection: i != j required");
  Mat m = identity(F, n);
  m.at(i, j) = lambda;
  return m;
}

Mat mul(const Field& F, const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  for (std::uint32_t i = 0; i < x.n; ++i)
    for (std::uint32_t j = 0; j < x.n; ++j) {
      Field::Elt s = F.zero();
      for (std::uint32_t k = 0; k < x.n; ++k) s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

Field::Elt block_det(const Field& F, const Mat& m, std::uint32_t k) {
  // Gaussian elimination on a copy of the block; exact over the field.
  std::array<Field::Elt, kMaxDim * kMaxDim> w{};
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) w[i * k + j] = m.at(i, j);

  Field::Elt d = F.one();
  bool flip = false;
  for (std::uint32_t c = 0; c < k; ++c) {
    std::uint32_t pivot = k;
    for (std::uint32_t r = c; r < k; ++r)
      if (w[r * k + c] != F.zero()) {
        pivot = r;
        break;
      }
    if (pivot == k) return F.zero();
    if (pivot != c) {
      for (std::uint32_t j = 0; j < k; ++j) std::swap(w[pivot * k + j], w[c * k + j]);
      flip = !flip;
    }
    const Field::Elt pv = w[c * k + c];
    d = F.mul(d, pv);
    const Field::Elt pinv = F.inv(pv);
    for (std::uint32_t r = c + 1; r < k; ++r) {
      const Field::Elt f = F.mul(w[r * k + c], pinv);
      if (f == F.zero()) continue;
      for (std::uint32_t j = c; j < k; ++j)
        w[r * k + j] = F.sub(w[r * k + j], F.mul(f, w[c * k + j]));
    }
  }
  return flip ? F.neg(d) : d;
}

Field::Elt det(const Field& F, const Mat& m) { return block_det(F, m, m.n); }

Mat inverse(const Field& F, const Mat& m) {
  const std::uint32_t n = m.n;
  std::array<Field::Elt, kMaxDim * kMaxDim> w{};
  for (std::uint32_t i = 0; i < n * n; ++i) w[i] = m.a[i];
  Mat inv = identity(F, n);

  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t pivot = n;
    for (std::uint32_t r = c; r < n; ++r)
      if (w[r * n + c] != F.zero()) {
        pivot = r;
        break;
      }
    if (pivot == n) throw SingularMatrix("inverse: matrix is singular");
    if (pivot != c)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::swap(w[pivot * n + j], w[c * n + j]);
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    const Field::Elt pinv = F.inv(w[c * n + c]);
    for (std::uint32_t j = 0; j < n; ++j) {
      w[c * n + j] = F.mul(w[c * n + j], pinv);
      inv.at(c, j) = F.mul(inv.at(c, j), pinv);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Field::Elt f = w[r * n + c];
      if (f == F.zero()) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        w[r * n + j] = F.sub(w[r * n + j], F.mul(f, w[c * n + j]));
        inv.at(r, j) = F.sub(inv.at(r, j), F.mul(f, inv.at(c, j)));
      }
    }
  }
  return inv;
}

}  // namespace minrep

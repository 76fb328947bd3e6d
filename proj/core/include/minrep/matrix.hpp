#pragma once

#include <array>
#include <cstdint>

#include "minrep/field.hpp"

namespace minrep {

inline constexpr std::uint32_t kMaxDim = 8;

/// Dense n x n matrix over F_q, row-major, entries canonical. 2 <= n <= 8.
struct Mat {
  std::uint32_t n = 0;
  std::array<Field::Elt, kMaxDim * kMaxDim> a{};

  Field::Elt& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
  Field::Elt at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.n != y.n) return false;
    for (std::uint32_t k = 0; k < x.n * x.n; ++k)
      if (x.a[k] != y.a[k]) return false;
    return true;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

Mat identity(const Field& F, std::uint32_t n);
Mat scalar_mat(const Field& F, std::uint32_t n, Field::Elt a);

/// I + lambda E_{ij}, i != j.
Mat transvection(const Field& F, std::uint32_t n, std::uint32_t i, std::uint32_t j,
                 Field::Elt lambda);

Mat mul(const Field& F, const Mat& x, const Mat& y);
Field::Elt det(const Field& F, const Mat& m);
Mat inverse(const Field& F, const Mat& m);  // throws SingularMatrix

/// Determinant of the upper-left k x k block.
Field::Elt block_det(const Field& F, const Mat& m, std::uint32_t k);

}  // namespace minrep

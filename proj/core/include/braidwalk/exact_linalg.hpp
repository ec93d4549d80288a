#pragma once

// Exact matrix routines behind the closure invariants. Nothing here uses
// floating point.

#include <cstddef>
#include <vector>

#include "braidwalk/laurent.hpp"

namespace braidwalk::linalg {

// Dense square matrix of machine integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size) * size) {}

  int size() const noexcept { return size_; }
  long long& at(int i, int j) { return entries_[index(i, j)]; }
  long long at(int i, int j) const { return entries_[index(i, j)]; }

  IntMatrix transpose() const;
  IntMatrix operator+(const IntMatrix& o) const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(j);
  }

  int size_ = 0;
  std::vector<long long> entries_;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const noexcept { return positive - negative; }
};

// Sylvester inertia by congruence diagonalization over the rationals. A zero
// diagonal with a nonzero off-diagonal entry a is taken as the 2x2 pivot
// [[0, a], [a, 0]] (one positive, one negative direction). Throws Error if s
// is not symmetric.
Inertia symmetric_inertia(const IntMatrix& s);
int symmetric_signature(const IntMatrix& s);

// det(V - t V^T) as a polynomial in t (low degree 0). Evaluated at
// t = 0..size modulo 62-bit primes, interpolated, and lifted by CRT until the
// modulus exceeds twice a coefficient bound.
LaurentPolynomial alexander_determinant(const IntMatrix& v);

}  // namespace braidwalk::linalg

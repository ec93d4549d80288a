#include "braidwalk/exact_linalg.hpp"

#include <cstdint>
#include <cstdlib>
#include <utility>

#include "braidwalk/error.hpp"

namespace braidwalk::linalg {

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(size_);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      out.at(j, i) = at(i, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (o.size_ != size_) {
    throw Error("matrix size mismatch");
  }
  IntMatrix out(size_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = entries_[k] + o.entries_[k];
  }
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if (at(i, j) != at(j, i)) {
        return false;
      }
    }
  }
  return true;
}

Inertia symmetric_inertia(const IntMatrix& s) {
  if (!s.is_symmetric()) {
    throw Error("signature needs a symmetric matrix");
  }
  const int m = s.size();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m),
                                       std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      a[i][j] = Rational(static_cast<long>(s.at(i, j)));
    }
  }
  std::vector<bool> alive(static_cast<std::size_t>(m), true);
  int remaining = m;
  Inertia out;

  auto support = [&](int k, int skip) {
    std::vector<int> nz;
    for (int j = 0; j < m; ++j) {
      if (alive[j] && j != k && j != skip && a[k][j] != 0) {
        nz.push_back(j);
      }
    }
    return nz;
  };

  while (remaining > 0) {
    // Lowest-index diagonal pivot keeps fill-in inside the band.
    int k = -1;
    for (int i = 0; i < m && k < 0; ++i) {
      if (alive[i] && a[i][i] != 0) {
        k = i;
      }
    }
    if (k >= 0) {
      const Rational pivot = a[k][k];
      (pivot > 0 ? out.positive : out.negative) += 1;
      const auto nz = support(k, -1);
      for (std::size_t x = 0; x < nz.size(); ++x) {
        const Rational f = a[nz[x]][k] / pivot;
        for (std::size_t y = x; y < nz.size(); ++y) {
          a[nz[x]][nz[y]] -= f * a[k][nz[y]];
          a[nz[y]][nz[x]] = a[nz[x]][nz[y]];
        }
      }
      alive[k] = false;
      --remaining;
      continue;
    }
    int pi = -1;
    int pj = -1;
    for (int i = 0; i < m && pi < 0; ++i) {
      if (!alive[i]) {
        continue;
      }
      for (int j = i + 1; j < m; ++j) {
        if (alive[j] && a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) {
      out.zero += remaining;
      break;
    }
    // Hyperbolic block: Schur complement with inverse (1/a)[[0, 1], [1, 0]].
    const Rational h = a[pi][pj];
    out.positive += 1;
    out.negative += 1;
    auto nz = support(pi, pj);
    for (int j : support(pj, pi)) {
      if (a[pi][j] == 0) {
        nz.push_back(j);
      }
    }
    for (std::size_t x = 0; x < nz.size(); ++x) {
      const int r = nz[x];
      for (std::size_t y = x; y < nz.size(); ++y) {
        const int c = nz[y];
        a[r][c] -= (a[r][pi] * a[c][pj] + a[r][pj] * a[c][pi]) / h;
        a[c][r] = a[r][c];
      }
    }
    alive[pi] = false;
    alive[pj] = false;
    remaining -= 2;
  }
  return out;
}

int symmetric_signature(const IntMatrix& s) { return symmetric_inertia(s).signature(); }

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1U) {
      r = mul_mod(r, a, p);
    }
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 reduce(long long v, u64 p) {
  const auto r = static_cast<long long>(static_cast<u64>(std::llabs(v)) % p);
  return v >= 0 ? static_cast<u64>(r) : (r == 0 ? 0 : p - static_cast<u64>(r));
}

// Determinant mod p. Rows are eliminated only across the pivot row's nonzero
// span, so banded inputs stay cheap.
u64 det_mod(std::vector<u64>& a, int m, u64 p) {
  auto cell = [&](int i, int j) -> u64& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(j)];
  };
  u64 det = 1;
  for (int k = 0; k < m; ++k) {
    int r = k;
    while (r < m && cell(r, k) == 0) {
      ++r;
    }
    if (r == m) {
      return 0;
    }
    if (r != k) {
      for (int j = k; j < m; ++j) {
        std::swap(cell(r, j), cell(k, j));
      }
      det = p - det;
      if (det == p) {
        det = 0;
      }
    }
    det = mul_mod(det, cell(k, k), p);
    const u64 inv = inv_mod(cell(k, k), p);
    int right = m - 1;
    while (right > k && cell(k, right) == 0) {
      --right;
    }
    for (int i = k + 1; i < m; ++i) {
      if (cell(i, k) == 0) {
        continue;
      }
      const u64 f = mul_mod(cell(i, k), inv, p);
      for (int j = k; j <= right; ++j) {
        if (cell(k, j) != 0) {
          cell(i, j) = sub_mod(cell(i, j), mul_mod(f, cell(k, j), p), p);
        }
      }
    }
  }
  return det;
}

// Coefficients of the degree <= m polynomial through (x, y[x]), x = 0..m.
std::vector<u64> interpolate(std::vector<u64> y, u64 p) {
  const std::size_t n = y.size();
  // Divided differences in place: y[j] becomes f[0..j].
  for (std::size_t level = 1; level < n; ++level) {
    const u64 inv = inv_mod(level % p, p);
    for (std::size_t j = n - 1; j >= level; --j) {
      y[j] = mul_mod(sub_mod(y[j], y[j - 1], p), inv, p);
    }
  }
  // Horner on the Newton basis prod (t - x_i), x_i = i.
  std::vector<u64> c(n, 0);
  for (std::size_t j = n; j-- > 0;) {
    // c <- c * (t - j) + y[j]
    const u64 xj = j % p;
    for (std::size_t d = n - 1; d > 0; --d) {
      c[d] = sub_mod(c[d - 1], mul_mod(c[d], xj, p), p);
    }
    c[0] = sub_mod(0, mul_mod(c[0], xj, p), p);
    c[0] = (c[0] + y[j]) % p;
  }
  return c;
}

}  // namespace

LaurentPolynomial alexander_determinant(const IntMatrix& v) {
  const int m = v.size();
  if (m == 0) {
    return LaurentPolynomial::constant(1);
  }
  // Sum of |coefficients| of the determinant is at most the product of the
  // row norms of V - tV^T.
  BigInt bound = 1;
  for (int i = 0; i < m; ++i) {
    long long row = 0;
    for (int j = 0; j < m; ++j) {
      row += std::llabs(v.at(i, j)) + std::llabs(v.at(j, i));
    }
    if (row == 0) {
      return {};
    }
    bound *= static_cast<long>(row);
  }
  const BigInt target = 2 * bound + 1;

  const auto msz = static_cast<std::size_t>(m);
  std::vector<BigInt> coeffs(msz + 1, 0);
  BigInt modulus = 1;
  BigInt prime = BigInt(1) << 61;
  std::vector<u64> work(msz * msz);
  while (modulus < target) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    std::vector<u64> values(msz + 1);
    for (int t = 0; t <= m; ++t) {
      const u64 tm = static_cast<u64>(t) % p;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          work[static_cast<std::size_t>(i) * msz + static_cast<std::size_t>(j)] =
              sub_mod(reduce(v.at(i, j), p), mul_mod(tm, reduce(v.at(j, i), p), p), p);
        }
      }
      values[static_cast<std::size_t>(t)] = det_mod(work, m, p);
    }
    const auto residues = interpolate(std::move(values), p);
    // Garner step: x <- x + M * ((r - x) * M^{-1} mod p)
    const BigInt mod_p = modulus % prime;
    const u64 m_inv = inv_mod(mod_p.get_ui(), p);
    for (std::size_t d = 0; d <= msz; ++d) {
      const BigInt x_mod = coeffs[d] % prime;
      const u64 xr = x_mod.get_ui();
      const u64 k = mul_mod(sub_mod(residues[d], xr, p), m_inv, p);
      coeffs[d] += modulus * BigInt(static_cast<unsigned long>(k));
    }
    modulus *= prime;
  }
  const BigInt half = modulus / 2;
  for (auto& c : coeffs) {
    if (c > half) {
      c -= modulus;
    }
  }
  return LaurentPolynomial(std::move(coeffs), 0);
}

}  // namespace braidwalk::linalg

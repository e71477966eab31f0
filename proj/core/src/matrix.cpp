// Copyright 2026 The fractal-sft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fractal_sft/matrix.hpp"

#include "fractal_sft/error.hpp"

namespace fractal_sft {

RationalMatrix ToRational(const BinaryMatrix& m) {
  RationalMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    for (int v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

RealMatrix ToReal(const BinaryMatrix& m) {
  RealMatrix out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    for (int v : m[i]) out[i].push_back(static_cast<double>(v));
  }
  return out;
}

RationalMatrix Identity(size_t n) {
  RationalMatrix id(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

RationalMatrix Multiply(const RationalMatrix& a, const RationalMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix c(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

RationalMatrix Power(const RationalMatrix& a, unsigned k) {
  RationalMatrix result = Identity(a.size());
  RationalMatrix base = a;
  while (k > 0) {
    if (k & 1u) result = Multiply(result, base);
    k >>= 1;
    if (k > 0) base = Multiply(base, base);
  }
  return result;
}

RationalMatrix Inverse(RationalMatrix a) {
  size_t n = a.size();
  RationalMatrix inv = Identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) Fail(ErrorCode::kDivisionByZero, "singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational Determinant(RationalMatrix a) {
  size_t n = a.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

Polynomial CharPoly(const RationalMatrix& m) {
  size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) Fail(ErrorCode::kNotSquare, "characteristic polynomial of a non-square matrix");
  }
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, std::vector<Rational>(n, Rational(0)));
  for (size_t k = 1; k <= n; ++k) {
    RationalMatrix next = Multiply(m, mk);
    for (size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    RationalMatrix am = Multiply(m, next);
    Rational trace = 0;
    for (size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long>(k);
    mk = std::move(next);
  }
  return Polynomial(std::move(c));
}

Polynomial CharPoly(const BinaryMatrix& m) { return CharPoly(ToRational(m)); }

RationalMatrix Companion(const Polynomial& p) {
  Polynomial q = p.Monic();
  size_t n = static_cast<size_t>(q.degree());
  RationalMatrix c(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (size_t i = 0; i < n; ++i) c[i][n - 1] = -q.coeff(static_cast<int>(i));
  return c;
}

BinaryMatrix PrincipalSubmatrix(const BinaryMatrix& m, const std::vector<int>& keep) {
  BinaryMatrix out(keep.size(), std::vector<int>(keep.size(), 0));
  for (size_t i = 0; i < keep.size(); ++i) {
    for (size_t j = 0; j < keep.size(); ++j) out[i][j] = m[keep[i]][keep[j]];
  }
  return out;
}

bool IsSquare(const BinaryMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) return false;
  }
  return true;
}

}  // namespace fractal_sft

// Copyright 2026 The Authors.
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

#include "gauss.hpp"

#include "pfmatroid/errors.hpp"

namespace pfm::detail {

size_t gauss_rank(FieldMat& m) {
  const BaseField& F = m.f;
  size_t rank = 0;
  for (size_t col = 0; col < m.nc && rank < m.nr; ++col) {
    size_t piv = rank;
    while (piv < m.nr && F.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.nr) continue;
    if (piv != rank) {
      for (size_t j = col; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    }
    FVal pinv = F.inv(m.at(rank, col));
    for (size_t i = rank + 1; i < m.nr; ++i) {
      if (F.is_zero(m.at(i, col))) continue;
      FVal factor = F.mul(m.at(i, col), pinv);
      m.at(i, col) = F.zero();
      for (size_t j = col + 1; j < m.nc; ++j) {
        if (F.is_zero(m.at(rank, j))) continue;
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

FVal gauss_det(FieldMat m) {
  if (m.nr != m.nc) throw DomainError("determinant of a non-square matrix");
  const BaseField& F = m.f;
  FVal det = F.one();
  bool negate = false;
  for (size_t col = 0; col < m.nc; ++col) {
    size_t piv = col;
    while (piv < m.nr && F.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.nr) return F.zero();
    if (piv != col) {
      negate = !negate;
      for (size_t j = col; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(col, j));
    }
    det = F.mul(det, m.at(col, col));
    FVal pinv = F.inv(m.at(col, col));
    for (size_t i = col + 1; i < m.nr; ++i) {
      if (F.is_zero(m.at(i, col))) continue;
      FVal factor = F.mul(m.at(i, col), pinv);
      for (size_t j = col + 1; j < m.nc; ++j) {
        if (F.is_zero(m.at(col, j))) continue;
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
      }
    }
  }
  return negate ? F.neg(det) : det;
}

std::optional<FieldMat> gauss_inverse(FieldMat m) {
  if (m.nr != m.nc) throw DomainError("inverse of a non-square matrix");
  const BaseField& F = m.f;
  const size_t n = m.nr;
  FieldMat inv(F, n, n);
  for (size_t i = 0; i < n; ++i) inv.at(i, i) = F.one();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && F.is_zero(m.at(piv, col))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    FVal pinv = F.inv(m.at(col, col));
    for (size_t j = 0; j < n; ++j) {
      m.at(col, j) = F.mul(pinv, m.at(col, j));
      inv.at(col, j) = F.mul(pinv, inv.at(col, j));
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || F.is_zero(m.at(i, col))) continue;
      FVal factor = m.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        if (!F.is_zero(m.at(col, j))) {
          m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
        }
        if (!F.is_zero(inv.at(col, j))) {
          inv.at(i, j) = F.sub(inv.at(i, j), F.mul(factor, inv.at(col, j)));
        }
      }
    }
  }
  return inv;
}

bool gauss_full_rank(FieldMat& m) {
  if (m.nr != m.nc) return false;
  const BaseField& F = m.f;
  for (size_t col = 0; col < m.nc; ++col) {
    size_t piv = col;
    while (piv < m.nr && F.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.nr) return false;
    if (piv != col) {
      for (size_t j = col; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(col, j));
    }
    FVal pinv = F.inv(m.at(col, col));
    for (size_t i = col + 1; i < m.nr; ++i) {
      if (F.is_zero(m.at(i, col))) continue;
      FVal factor = F.mul(m.at(i, col), pinv);
      for (size_t j = col + 1; j < m.nc; ++j) {
        if (F.is_zero(m.at(col, j))) continue;
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
      }
    }
  }
  return true;
}

bool gfp_full_rank(GfpGrid& m) {
  if (m.nr != m.nc) return false;
  const uint32_t p = m.p;
  uint8_t red[256];
  const bool small = p <= 16;
  if (small) {
    for (uint32_t v = 0; v < 256; ++v) red[v] = static_cast<uint8_t>(v % p);
  }
  for (size_t col = 0; col < m.nc; ++col) {
    size_t piv = col;
    while (piv < m.nr && m.at(piv, col) == 0) ++piv;
    if (piv == m.nr) return false;
    if (piv != col) {
      for (size_t j = col; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(col, j));
    }
    uint32_t pinv = gfp_inv(p, m.at(col, col));
    uint8_t* prow = &m.a[col * m.nc];
    for (size_t i = col + 1; i < m.nr; ++i) {
      uint8_t* row = &m.a[i * m.nc];
      if (row[col] == 0) continue;
      uint32_t factor = (row[col] * pinv) % p;
      uint32_t negf = (p - factor) % p;
      if (small) {
        for (size_t j = col; j < m.nc; ++j) {
          row[j] = red[row[j] + negf * prow[j]];
        }
      } else {
        for (size_t j = col; j < m.nc; ++j) {
          row[j] = static_cast<uint8_t>((row[j] + negf * prow[j]) % p);
        }
      }
    }
  }
  return true;
}

bool gf3_full_rank_bits(uint32_t* lo, uint32_t* hi, unsigned n) {
  for (unsigned col = 0; col < n; ++col) {
    const uint32_t bit = uint32_t{1} << col;
    unsigned piv = col;
    while (piv < n && !((lo[piv] | hi[piv]) & bit)) ++piv;
    if (piv == n) return false;
    if (piv != col) {
      std::swap(lo[piv], lo[col]);
      std::swap(hi[piv], hi[col]);
    }
    if (hi[col] & bit) std::swap(lo[col], hi[col]);  // scale pivot to 1
    const uint32_t pl = lo[col], ph = hi[col];
    for (unsigned i = col + 1; i < n; ++i) {
      const uint32_t al = lo[i], ah = hi[i];
      if (!((al | ah) & bit)) continue;
      // Subtracting f * pivot row is adding (3 - f) * pivot row.
      uint32_t bl, bh;
      if (al & bit) {  // f = 1: add 2 * pivot
        bl = ph;
        bh = pl;
      } else {  // f = 2: add pivot
        bl = pl;
        bh = ph;
      }
      const uint32_t na = ~(al | ah), nb = ~(bl | bh);
      lo[i] = (na & bl) | (al & nb) | (ah & bh);
      hi[i] = (na & bh) | (ah & nb) | (al & bl);
    }
  }
  return true;
}

uint8_t gfp_inv(uint32_t p, uint8_t v) {
  // Extended Euclid on small values.
  int64_t t = 0, newt = 1, r = p, newr = v % p;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw NotInvertibleError("residue not invertible");
  if (t < 0) t += p;
  return static_cast<uint8_t>(t);
}

size_t gfp_rank(GfpGrid& m) {
  const uint32_t p = m.p;
  // For small primes, v + negf*prow[j] stays below 256; one lookup table
  // replaces the per-entry modulo in the inner loop.
  uint8_t red[256];
  const bool small = p <= 16;
  if (small) {
    for (uint32_t v = 0; v < 256; ++v) red[v] = static_cast<uint8_t>(v % p);
  }
  size_t rank = 0;
  for (size_t col = 0; col < m.nc && rank < m.nr; ++col) {
    size_t piv = rank;
    while (piv < m.nr && m.at(piv, col) == 0) ++piv;
    if (piv == m.nr) continue;
    if (piv != rank) {
      for (size_t j = col; j < m.nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    }
    uint32_t pinv = gfp_inv(p, m.at(rank, col));
    uint8_t* prow = &m.a[rank * m.nc];
    for (size_t i = rank + 1; i < m.nr; ++i) {
      uint8_t* row = &m.a[i * m.nc];
      if (row[col] == 0) continue;
      uint32_t factor = (row[col] * pinv) % p;
      uint32_t negf = (p - factor) % p;
      if (small) {
        for (size_t j = col; j < m.nc; ++j) {
          row[j] = red[row[j] + negf * prow[j]];
        }
      } else {
        for (size_t j = col; j < m.nc; ++j) {
          row[j] = static_cast<uint8_t>((row[j] + negf * prow[j]) % p);
        }
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace pfm::detail

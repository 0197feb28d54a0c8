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

#include "pfmatroid/chain_group.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "byte_ring.hpp"
#include "gauss.hpp"

namespace pfm {

namespace {

std::vector<std::string> cobasis_of(const RMatrix& mat) {
  std::vector<std::string> out;
  for (const auto& c : mat.col_labels()) {
    if (!mat.has_row(c)) out.push_back(c);
  }
  return out;
}

bool is_identity_column(const RMatrix& mat, const std::string& col) {
  size_t j = mat.col_index(col);
  if (!mat.has_row(col)) return false;
  size_t target = mat.row_index(col);
  for (size_t i = 0; i < mat.nrows(); ++i) {
    const RElem& x = mat.at(i, j);
    if (i == target) {
      if (!(x == mat.ring()->one())) return false;
    } else if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace

RMatrix ChainGroupRep::strong_core() const {
  if (form != RepForm::kStrong) {
    throw DomainError("strong_core requires strong form");
  }
  return mat.submatrix(mat.row_labels(), cobasis_of(mat));
}

std::vector<std::string> ChainGroupRep::cobasis_cols() const {
  return cobasis_of(mat);
}

ChainGroupRep make_weak_rep(PartialField pf, RMatrix mat) {
  if (!(*pf.ring() == *mat.ring())) {
    throw RingMismatchError("matrix ring differs from the partial field ring");
  }
  return ChainGroupRep{std::move(pf), std::move(mat), RepForm::kWeak};
}

ChainGroupRep make_strong_rep(PartialField pf, RMatrix mat) {
  if (!(*pf.ring() == *mat.ring())) {
    throw RingMismatchError("matrix ring differs from the partial field ring");
  }
  for (const auto& r : mat.row_labels()) {
    if (!mat.has_col(r) || !is_identity_column(mat, r)) {
      throw DomainError("strong form requires an identity column for row '" +
                        r + "'");
    }
  }
  return ChainGroupRep{std::move(pf), std::move(mat), RepForm::kStrong};
}

// ---------------------------------------------------------------------------
// verify_strong
// ---------------------------------------------------------------------------

namespace {

struct ParentLink {
  uint64_t parent;
  PivotStep step;
};

std::vector<PivotStep> unwind_path(
    const std::unordered_map<uint64_t, ParentLink>& parents, uint64_t state,
    uint64_t start) {
  std::vector<PivotStep> path;
  while (state != start) {
    const auto& link = parents.at(state);
    path.push_back(link.step);
    state = link.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

VerifyResult verify_strong_generic(const RMatrix& D, const PartialField& pf) {
  // Universe of labels: rows then columns of the start matrix.
  std::vector<std::string> universe = D.row_labels();
  universe.insert(universe.end(), D.col_labels().begin(),
                  D.col_labels().end());
  if (universe.size() > 64) {
    throw DomainError("pivot closure supports at most 64 labels");
  }
  std::unordered_map<std::string, unsigned> pos;
  for (unsigned i = 0; i < universe.size(); ++i) pos[universe[i]] = i;
  if (pos.size() != universe.size()) {
    throw DomainError("row and column labels must be disjoint");
  }

  uint64_t start = 0;
  for (const auto& r : D.row_labels()) start |= uint64_t{1} << pos[r];

  std::unordered_map<uint64_t, ParentLink> parents;
  std::deque<std::pair<RMatrix, uint64_t>> queue;
  std::unordered_set<uint64_t> visited{start};
  queue.emplace_back(D, start);

  while (!queue.empty()) {
    auto [d, basis] = std::move(queue.front());
    queue.pop_front();

    for (size_t i = 0; i < d.nrows(); ++i) {
      for (size_t j = 0; j < d.ncols(); ++j) {
        const RElem& x = d.at(i, j);
        if (x.is_zero()) continue;
        if (!pf.in_group(x)) {
          VerifyCounterexample ce;
          ce.path = unwind_path(parents, basis, start);
          ce.row = d.row_labels()[i];
          ce.col = d.col_labels()[j];
          ce.entry = x;
          return VerifyResult{false, std::move(ce)};
        }
      }
    }
    for (size_t i = 0; i < d.nrows(); ++i) {
      for (size_t j = 0; j < d.ncols(); ++j) {
        if (d.at(i, j).is_zero()) continue;
        const std::string& x = d.row_labels()[i];
        const std::string& y = d.col_labels()[j];
        uint64_t nb = (basis & ~(uint64_t{1} << pos[x])) | (uint64_t{1} << pos[y]);
        if (!visited.insert(nb).second) continue;
        parents[nb] = ParentLink{basis, PivotStep{x, y}};
        queue.emplace_back(d.pivot(x, y), nb);
      }
    }
  }
  return VerifyResult{true, std::nullopt};
}

struct ByteState {
  std::vector<uint8_t> d;       // r x c entries
  std::vector<uint8_t> rowlab;  // universe indices
  std::vector<uint8_t> collab;
  uint64_t basis;
};

VerifyResult verify_strong_bytes(const RMatrix& D, const PartialField& pf,
                                 const detail::ByteRing& br) {
  std::vector<std::string> universe = D.row_labels();
  universe.insert(universe.end(), D.col_labels().begin(),
                  D.col_labels().end());
  if (universe.size() > 64) {
    throw DomainError("pivot closure supports at most 64 labels");
  }
  {
    std::unordered_set<std::string> seen(universe.begin(), universe.end());
    if (seen.size() != universe.size()) {
      throw DomainError("row and column labels must be disjoint");
    }
  }
  const size_t r = D.nrows(), c = D.ncols();

  ByteState start;
  start.d.resize(r * c);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < c; ++j) start.d[i * c + j] = br.encode(D.at(i, j));
  }
  start.rowlab.resize(r);
  start.collab.resize(c);
  for (size_t i = 0; i < r; ++i) start.rowlab[i] = static_cast<uint8_t>(i);
  for (size_t j = 0; j < c; ++j) start.collab[j] = static_cast<uint8_t>(r + j);
  start.basis = r == 64 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;

  const uint64_t start_mask = start.basis;
  std::unordered_map<uint64_t, ParentLink> parents;
  std::unordered_set<uint64_t> visited{start_mask};
  std::deque<ByteState> queue;
  queue.push_back(std::move(start));

  while (!queue.empty()) {
    ByteState st = std::move(queue.front());
    queue.pop_front();

    for (size_t i = 0; i < r; ++i) {
      for (size_t j = 0; j < c; ++j) {
        uint8_t v = st.d[i * c + j];
        if (v == 0) continue;
        if (!br.in_group[v]) {
          VerifyCounterexample ce;
          ce.path = unwind_path(parents, st.basis, start_mask);
          ce.row = universe[st.rowlab[i]];
          ce.col = universe[st.collab[j]];
          ce.entry = br.decode(v);
          return VerifyResult{false, std::move(ce)};
        }
      }
    }
    for (size_t pi = 0; pi < r; ++pi) {
      for (size_t pj = 0; pj < c; ++pj) {
        uint8_t alpha = st.d[pi * c + pj];
        if (alpha == 0) continue;
        uint64_t nb = (st.basis & ~(uint64_t{1} << st.rowlab[pi])) |
                      (uint64_t{1} << st.collab[pj]);
        if (!visited.insert(nb).second) continue;
        parents[nb] =
            ParentLink{st.basis, PivotStep{universe[st.rowlab[pi]],
                                           universe[st.collab[pj]]}};
        ByteState nxt;
        nxt.d.resize(r * c);
        uint8_t ainv = br.inv[alpha];
        for (size_t u = 0; u < r; ++u) {
          for (size_t v = 0; v < c; ++v) {
            uint8_t out;
            if (u == pi && v == pj) {
              out = ainv;
            } else if (u == pi) {
              out = br.mul_at(ainv, st.d[pi * c + v]);
            } else if (v == pj) {
              out = br.neg[br.mul_at(st.d[u * c + pj], ainv)];
            } else {
              uint8_t t = br.mul_at(br.mul_at(st.d[u * c + pj], ainv),
                                    st.d[pi * c + v]);
              out = br.add_at(st.d[u * c + v], br.neg[t]);
            }
            nxt.d[u * c + v] = out;
          }
        }
        nxt.rowlab = st.rowlab;
        nxt.collab = st.collab;
        std::swap(nxt.rowlab[pi], nxt.collab[pj]);
        nxt.basis = nb;
        queue.push_back(std::move(nxt));
      }
    }
  }
  return VerifyResult{true, std::nullopt};
}

}  // namespace

VerifyResult verify_strong(const RMatrix& D, const PartialField& pf,
                           VerifyEngine engine) {
  if (!(*D.ring() == *pf.ring())) {
    throw RingMismatchError("matrix ring differs from the partial field ring");
  }
  if (engine != VerifyEngine::kGeneric) {
    if (auto br = detail::make_byte_ring(pf)) {
      return verify_strong_bytes(D, pf, *br);
    }
    if (engine == VerifyEngine::kTabulated) {
      throw DomainError("ring is not byte-sized; tabulated engine unavailable");
    }
  }
  return verify_strong_generic(D, pf);
}

VerifyResult verify_rep(const ChainGroupRep& rep, VerifyEngine engine) {
  if (rep.form == RepForm::kStrong) {
    return verify_strong(rep.strong_core(), rep.pf, engine);
  }
  return verify_strong(rep.mat, rep.pf, engine);
}

// ---------------------------------------------------------------------------
// matroid_of
// ---------------------------------------------------------------------------

namespace {

// Shared machinery for deciding invertibility of column subsets: one regular
// representation of the whole generator matrix, gathered per subset.
// Columns whose only nonzero entry is a unit (identity columns, mostly) are
// consumed directly against their row; the expansion of such a column is
// zero outside its row block, so eliminating it leaves every other entry
// untouched and only the small remaining core needs elimination.
struct SubsetRankEngine {
  unsigned m = 1;
  size_t r = 0, nc = 0;
  bool byte_mode = false;
  BaseField F = BaseField::rationals();
  detail::FieldMat fb;
  std::vector<uint8_t> bb;  // byte copy of fb when byte_mode
  uint32_t p = 0;
  std::vector<int> singleton;

  explicit SubsetRankEngine(const RMatrix& A) {
    m = A.ring()->dim();
    r = A.nrows();
    nc = A.ncols();
    F = A.ring()->base();
    RMatrix blow = A.regular_representation();
    fb = detail::FieldMat(F, r * m, nc * m);
    for (size_t i = 0; i < r * m; ++i) {
      for (size_t j = 0; j < nc * m; ++j) fb.at(i, j) = blow.at(i, j).coord(0);
    }
    if (F.kind() == BaseField::Kind::kGFp) {
      byte_mode = true;
      p = F.modulus();
      bb.resize(fb.a.size());
      for (size_t i = 0; i < fb.a.size(); ++i) {
        bb[i] = static_cast<uint8_t>(fb.a[i].c[0].get_num().get_ui() % p);
      }
    }
    singleton.assign(nc, -1);
    for (size_t j = 0; j < nc; ++j) {
      int row = -1;
      for (size_t i = 0; i < r; ++i) {
        if (!A.at(i, j).is_zero()) {
          if (row >= 0) {
            row = -2;
            break;
          }
          row = static_cast<int>(i);
        }
      }
      if (row >= 0 && is_unit(A.at(row, j))) singleton[j] = row;
    }
  }

  // Scratch buffers reused across subset tests; matroid enumeration calls
  // is_basis sequentially.
  mutable std::vector<unsigned> core_, rows_;
  mutable detail::GfpGrid bgrid_;
  mutable std::array<uint32_t, 32> bits_lo_, bits_hi_;

  bool is_basis(const std::vector<unsigned>& cols) const {
    uint64_t used = 0;
    core_.clear();
    for (unsigned c : cols) {
      int sr = singleton[c];
      if (sr >= 0 && !(used >> sr & 1)) {
        used |= uint64_t{1} << sr;
      } else {
        core_.push_back(c);
      }
    }
    const size_t rem = r - static_cast<size_t>(std::popcount(used));
    if (core_.size() != rem) return false;
    if (rem == 0) return true;
    rows_.clear();
    for (size_t i = 0; i < r; ++i) {
      if (!(used >> i & 1)) rows_.push_back(static_cast<unsigned>(i));
    }
    const size_t dim = rem * m;
    if (byte_mode && p == 3 && dim <= 32) {
      for (size_t bi = 0; bi < rem; ++bi) {
        for (unsigned s = 0; s < m; ++s) {
          const uint8_t* src = &bb[(rows_[bi] * m + s) * (nc * m)];
          uint32_t wlo = 0, whi = 0;
          unsigned out = 0;
          for (size_t bj = 0; bj < core_.size(); ++bj) {
            const uint8_t* blockp = src + core_[bj] * m;
            for (unsigned t = 0; t < m; ++t, ++out) {
              uint8_t v = blockp[t];
              wlo |= uint32_t{v == 1} << out;
              whi |= uint32_t{v == 2} << out;
            }
          }
          bits_lo_[bi * m + s] = wlo;
          bits_hi_[bi * m + s] = whi;
        }
      }
      return detail::gf3_full_rank_bits(bits_lo_.data(), bits_hi_.data(),
                                        static_cast<unsigned>(dim));
    }
    if (byte_mode) {
      bgrid_.p = p;
      bgrid_.nr = dim;
      bgrid_.nc = dim;
      bgrid_.a.resize(dim * dim);
      for (size_t bi = 0; bi < rem; ++bi) {
        for (unsigned s = 0; s < m; ++s) {
          const uint8_t* src = &bb[(rows_[bi] * m + s) * (nc * m)];
          uint8_t* dst = &bgrid_.a[(bi * m + s) * dim];
          for (size_t bj = 0; bj < core_.size(); ++bj) {
            for (unsigned t = 0; t < m; ++t) dst[bj * m + t] = src[core_[bj] * m + t];
          }
        }
      }
      return detail::gfp_full_rank(bgrid_);
    }
    detail::FieldMat g(F, dim, dim);
    for (size_t bi = 0; bi < rem; ++bi) {
      for (unsigned s = 0; s < m; ++s) {
        for (size_t bj = 0; bj < core_.size(); ++bj) {
          for (unsigned t = 0; t < m; ++t) {
            g.at(bi * m + s, bj * m + t) = fb.at(rows_[bi] * m + s, core_[bj] * m + t);
          }
        }
      }
    }
    return detail::gauss_full_rank(g);
  }
};

template <typename Fn>
void for_each_combination(unsigned n, unsigned k, Fn&& fn) {
  if (k > n) return;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    fn(idx);
    return;
  }
  while (true) {
    fn(idx);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

Matroid matroid_of(const ChainGroupRep& rep) {
  const RMatrix& A = rep.mat;
  const unsigned r = static_cast<unsigned>(A.nrows());
  const unsigned n = static_cast<unsigned>(A.ncols());
  if (r > n) throw DomainError("generator matrix has more rows than columns");
  SubsetRankEngine engine(A);
  std::vector<uint64_t> bases;
  for_each_combination(n, r, [&](const std::vector<unsigned>& cols) {
    if (engine.is_basis(cols)) {
      uint64_t mask = 0;
      for (unsigned c : cols) mask |= uint64_t{1} << c;
      bases.push_back(mask);
    }
  });
  if (bases.empty()) {
    throw DomainError("degenerate generator matrix: no invertible subset");
  }
  return Matroid::from_bases(A.col_labels(), std::move(bases));
}

ChainGroupRep to_strong(const ChainGroupRep& rep) {
  if (rep.form == RepForm::kStrong) return rep;
  const RMatrix& A = rep.mat;
  const unsigned r = static_cast<unsigned>(A.nrows());
  const unsigned n = static_cast<unsigned>(A.ncols());
  SubsetRankEngine engine(A);
  std::optional<std::vector<unsigned>> found;
  for_each_combination(n, r, [&](const std::vector<unsigned>& cols) {
    if (!found && engine.is_basis(cols)) found = cols;
  });
  if (!found) throw DomainError("degenerate generator matrix: no basis");
  std::vector<std::string> basis;
  for (unsigned c : *found) basis.push_back(A.col_labels()[c]);
  RMatrix fwd = A.select_cols(basis).invert();  // rows labeled by the basis
  return make_strong_rep(rep.pf, fwd * A);
}

ChainGroupRep dual_rep(const ChainGroupRep& rep) {
  if (rep.form != RepForm::kStrong) {
    throw DomainError("dual_rep requires strong form; pivot to a basis first");
  }
  RMatrix core = rep.strong_core();
  PartialField opp_pf = rep.pf.opposite();
  RingPtr opp = opp_pf.ring();
  const std::vector<std::string> cob = rep.cobasis_cols();
  const std::vector<std::string>& cols = rep.mat.col_labels();
  RMatrix dual = RMatrix::build(
      opp, cob, cols, [&](size_t i, size_t j) -> RElem {
        const std::string& f = cob[i];
        const std::string& c = cols[j];
        if (rep.mat.has_row(c)) {
          return (-core.at(c, f)).transfer_to(opp);
        }
        return c == f ? opp->one() : opp->zero();
      });
  return make_strong_rep(std::move(opp_pf), std::move(dual));
}

namespace {

// Pivot a strong representation from basis column x to column y: the D part
// is pivoted over (x, y) and the identity is reassembled over the new basis.
// The column order of the full matrix is preserved.
ChainGroupRep strong_pivot(const ChainGroupRep& rep, const std::string& x,
                           const std::string& y) {
  RMatrix core = rep.strong_core().pivot(x, y);
  const std::vector<std::string>& cols = rep.mat.col_labels();
  RMatrix full = RMatrix::build(
      rep.mat.ring(), core.row_labels(), cols, [&](size_t i, size_t j) -> RElem {
        const std::string& rl = core.row_labels()[i];
        const std::string& c = cols[j];
        if (core.has_col(c)) return core.at(rl, c);
        return c == rl ? rep.mat.ring()->one() : rep.mat.ring()->zero();
      });
  return make_strong_rep(rep.pf, std::move(full));
}

RMatrix drop_column(const RMatrix& mat, const std::string& e) {
  std::vector<std::string> cols;
  for (const auto& c : mat.col_labels()) {
    if (c != e) cols.push_back(c);
  }
  return mat.select_cols(cols);
}

RMatrix drop_row_and_column(const RMatrix& mat, const std::string& e) {
  std::vector<std::string> rows, cols;
  for (const auto& r : mat.row_labels()) {
    if (r != e) rows.push_back(r);
  }
  for (const auto& c : mat.col_labels()) {
    if (c != e) cols.push_back(c);
  }
  return mat.submatrix(rows, cols);
}

bool column_is_zero(const RMatrix& mat, const std::string& e) {
  size_t j = mat.col_index(e);
  for (size_t i = 0; i < mat.nrows(); ++i) {
    if (!mat.at(i, j).is_zero()) return false;
  }
  return true;
}

ChainGroupRep delete_element(const ChainGroupRep& rep, const std::string& e) {
  if (!rep.mat.has_row(e)) {
    return make_strong_rep(rep.pf, drop_column(rep.mat, e));
  }
  // e is a basis column; move it out of the basis if possible.
  RMatrix core = rep.strong_core();
  for (const auto& y : core.col_labels()) {
    if (is_unit(core.at(e, y))) {
      ChainGroupRep pivoted = strong_pivot(rep, e, y);
      return make_strong_rep(pivoted.pf, drop_column(pivoted.mat, e));
    }
  }
  if (!column_is_zero(core.transpose(), e)) {
    // Nonzero non-unit entries on the row: cannot renormalize.
    throw DomainError("deletion stalled on a non-unit row entry");
  }
  // Coloop: the row vanishes with its column.
  return make_strong_rep(rep.pf, drop_row_and_column(rep.mat, e));
}

ChainGroupRep contract_element(const ChainGroupRep& rep, const std::string& e) {
  if (rep.mat.has_row(e)) {
    return make_strong_rep(rep.pf, drop_row_and_column(rep.mat, e));
  }
  if (column_is_zero(rep.mat, e)) {
    // Loop: contraction coincides with deletion.
    return make_strong_rep(rep.pf, drop_column(rep.mat, e));
  }
  size_t j = rep.mat.col_index(e);
  for (size_t i = 0; i < rep.mat.nrows(); ++i) {
    if (is_unit(rep.mat.at(i, j))) {
      ChainGroupRep pivoted =
          strong_pivot(rep, rep.mat.row_labels()[i], e);
      return make_strong_rep(pivoted.pf, drop_row_and_column(pivoted.mat, e));
    }
  }
  throw DomainError("contraction stalled: no unit entry in the column");
}

}  // namespace

ChainGroupRep minor(const ChainGroupRep& rep,
                    const std::vector<std::string>& del,
                    const std::vector<std::string>& con) {
  for (const auto& d : del) {
    for (const auto& c : con) {
      if (d == c) throw DomainError("deletion and contraction sets overlap");
    }
  }
  ChainGroupRep cur = to_strong(rep);
  for (const auto& e : con) cur = contract_element(cur, e);
  for (const auto& e : del) cur = delete_element(cur, e);
  return cur;
}

ChainGroupRep apply_hom(const ChainGroupRep& rep,
                        const std::function<RElem(const RElem&)>& hom,
                        const PartialField& target_pf) {
  RMatrix mapped = rep.mat.map_entries([&](const RElem& x) {
    RElem y = hom(x);
    if (!(*y.ring() == *target_pf.ring())) {
      throw RingMismatchError("homomorphism image in an unexpected ring");
    }
    if (!target_pf.contains(y)) {
      throw DomainError("homomorphic image " + y.to_string() +
                        " lies outside the target group");
    }
    return y;
  });
  if (rep.form == RepForm::kStrong) {
    return make_strong_rep(target_pf, std::move(mapped));
  }
  return make_weak_rep(target_pf, std::move(mapped));
}

std::function<RElem(const RElem&)> gfp_hom(unsigned p) {
  BaseField gf = BaseField::gf(p);
  RingPtr target = Ring::field(gf);
  return [gf, target](const RElem& x) -> RElem {
    const RingKind k = x.ring()->kind();
    if ((k != RingKind::kField && k != RingKind::kDyadic) ||
        x.ring()->base() != BaseField::rationals()) {
      throw DomainError("GF(p) reduction applies to rational carriers");
    }
    return target->from_scalar(gf.from_rational(x.coord(0).c[0]));
  };
}

PartialField gfp_target(unsigned p) {
  return PartialField::of_field(BaseField::gf(p));
}

ChainGroupRep scale_column(const ChainGroupRep& rep, const std::string& e,
                           const RElem& g) {
  if (!rep.pf.in_group(g)) {
    throw DomainError("column scale factor must lie in the group");
  }
  RMatrix scaled = rep.mat.right_scale_column(e, g);
  if (rep.form == RepForm::kStrong && rep.mat.has_row(e)) {
    scaled = scaled.left_scale_row(e, inverse_of(g));
    return make_strong_rep(rep.pf, std::move(scaled));
  }
  return ChainGroupRep{rep.pf, std::move(scaled), rep.form};
}

// ---------------------------------------------------------------------------
// Tutte's criterion
// ---------------------------------------------------------------------------

namespace {

uint64_t chain_support_mask(const Matroid& m, const Chain& c) {
  uint64_t mask = 0;
  for (const auto& [label, value] : c) {
    if (!value.is_zero()) mask |= uint64_t{1} << m.index_of(label);
  }
  return mask;
}

RElem chain_coord(const Chain& c, const std::string& label, const RingPtr& ring) {
  auto it = c.find(label);
  return it == c.end() ? ring->zero() : it->second;
}

}  // namespace

TutteResult tutte_check(const Matroid& m, const std::vector<Chain>& chains,
                        const PartialField& pf) {
  const RingPtr& ring = pf.ring();
  // Associate chains with cocircuits by support, checking primitivity.
  std::unordered_map<uint64_t, const Chain*> by_support;
  for (const auto& c : chains) {
    for (const auto& [label, value] : c) {
      if (!value.is_zero() && !pf.in_group(value)) {
        throw DomainError("chain is not G-primitive at '" + label + "'");
      }
    }
    uint64_t mask = chain_support_mask(m, c);
    if (!by_support.emplace(mask, &c).second) {
      throw DomainError("two chains share a support");
    }
  }
  const auto& cocircuits = m.cocircuits();
  for (uint64_t cc : cocircuits) {
    if (!by_support.count(cc)) {
      throw DomainError("chain support mismatch: missing a cocircuit chain");
    }
  }
  if (by_support.size() != cocircuits.size()) {
    throw DomainError("chain support mismatch: extra chains");
  }

  TutteResult result;
  for (const auto& triple : m.modular_triples()) {
    const Chain& a1 = *by_support.at(triple[0]);
    const Chain& a2 = *by_support.at(triple[1]);
    const Chain& a3 = *by_support.at(triple[2]);
    auto fail = [&](const std::string& reason) {
      TutteFailure f;
      f.x1 = m.labels_of(triple[0]);
      f.x2 = m.labels_of(triple[1]);
      f.x3 = m.labels_of(triple[2]);
      f.reason = reason;
      return TutteResult{false, std::move(f), {}};
    };
    // e separates X1 from X2; f separates X2 from X1. Both lie in X3 for a
    // modular triple, which pins the two remaining scalars once p = 1.
    uint64_t e_mask = triple[0] & ~triple[1];
    uint64_t f_mask = triple[1] & ~triple[0];
    if (!e_mask || !f_mask) return fail("cocircuits are nested");
    std::string e = m.ground()[std::countr_zero(e_mask)];
    std::string f = m.ground()[std::countr_zero(f_mask)];
    RElem a1e = chain_coord(a1, e, ring);
    RElem a3e = chain_coord(a3, e, ring);
    if (a3e.is_zero()) return fail("no scalar fits at '" + e + "'");
    RElem p3 = -(a1e * inverse_of(a3e));
    RElem a2f = chain_coord(a2, f, ring);
    RElem a3f = chain_coord(a3, f, ring);
    RElem p2 = -(p3 * a3f * inverse_of(a2f));
    if (!pf.in_group(p2) || !pf.in_group(p3)) {
      return fail("derived scalars fall outside the group");
    }
    for (const auto& g : m.ground()) {
      RElem sum = chain_coord(a1, g, ring) + p2 * chain_coord(a2, g, ring) +
                  p3 * chain_coord(a3, g, ring);
      if (!sum.is_zero()) {
        return fail("vector identity fails at '" + g + "'");
      }
    }
    result.certificates.push_back(TutteCertificate{
        m.labels_of(triple[0]), m.labels_of(triple[1]), m.labels_of(triple[2]),
        ring->one(), p2, p3});
  }
  result.ok = true;
  return result;
}

std::vector<Chain> cocircuit_chains(const ChainGroupRep& rep_in,
                                    const Matroid& m) {
  ChainGroupRep rep = to_strong(rep_in);
  std::vector<Chain> out;
  for (uint64_t cc : m.cocircuits()) {
    // Build a basis whose fundamental cocircuit at some e equals cc: take a
    // maximal independent subset of the complementary hyperplane plus any
    // element of the cocircuit.
    uint64_t hyper = m.full_mask() & ~cc;
    std::vector<std::string> basis;
    uint64_t acc = 0;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!(hyper >> i & 1)) continue;
      uint64_t cand = acc | (uint64_t{1} << i);
      if (m.rank(cand) == std::popcount(cand)) {
        acc = cand;
        basis.push_back(m.ground()[i]);
      }
    }
    std::string e = m.ground()[std::countr_zero(cc)];
    basis.push_back(e);
    RMatrix sub = rep.mat.select_cols(basis);
    RMatrix fwd = sub.invert();
    RMatrix strong = fwd * rep.mat;
    Chain chain;
    size_t row = strong.row_index(e);
    for (size_t j = 0; j < strong.ncols(); ++j) {
      const RElem& x = strong.at(row, j);
      if (!x.is_zero()) chain[strong.col_labels()[j]] = x;
    }
    if (chain_support_mask(m, chain) != cc) {
      throw DomainError("representation does not match the matroid");
    }
    out.push_back(std::move(chain));
  }
  return out;
}

}  // namespace pfm

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

#include "pfmatroid/multilinear.hpp"

#include "gauss.hpp"

namespace pfm {

unsigned MultilinearRep::ambient() const {
  if (blocks.empty()) return 0;
  return static_cast<unsigned>(blocks.begin()->second.nrows());
}

MultilinearVerdict check_multilinear(const MultilinearRep& rep,
                                     const Matroid& m) {
  if (rep.ground.size() != m.size()) {
    throw DomainError("ground sets differ in size");
  }
  for (const auto& e : rep.ground) {
    m.index_of(e);  // must exist
    if (!rep.blocks.count(e)) {
      throw DomainError("missing subspace block for '" + e + "'");
    }
  }
  const unsigned amb = rep.ambient();
  if (amb != rep.n * m.rank_value()) {
    throw DomainError("ambient dimension must be n times the matroid rank");
  }
  for (const auto& [e, block] : rep.blocks) {
    if (block.nrows() != amb || block.ncols() != rep.n) {
      throw DomainError("block shape mismatch at '" + e + "'");
    }
    if (block.rank() != rep.n) {
      throw DomainError("subspace block at '" + e + "' is rank deficient");
    }
  }

  const size_t nelem = m.size();
  for (uint64_t subset = 0; subset < (uint64_t{1} << nelem); ++subset) {
    std::vector<const RMatrix*> parts;
    for (size_t i = 0; i < nelem; ++i) {
      if (subset >> i & 1) parts.push_back(&rep.blocks.at(m.ground()[i]));
    }
    detail::FieldMat concat(rep.field, amb, parts.size() * rep.n);
    for (size_t b = 0; b < parts.size(); ++b) {
      for (unsigned i = 0; i < amb; ++i) {
        for (unsigned j = 0; j < rep.n; ++j) {
          concat.at(i, b * rep.n + j) = parts[b]->at(i, j).coord(0);
        }
      }
    }
    unsigned actual = static_cast<unsigned>(detail::gauss_rank(concat));
    unsigned expected = rep.n * m.rank(subset);
    if (actual != expected) {
      MultilinearVerdict v;
      v.ok = false;
      v.failing_subset = m.labels_of(subset);
      v.expected = expected;
      v.actual = actual;
      return v;
    }
  }
  return MultilinearVerdict{true, std::nullopt, 0, 0};
}

MultilinearRep from_matrix(const RMatrix& A) {
  if (A.ring()->kind() != RingKind::kMatrixRing) {
    throw DomainError("from_matrix requires a matrix-ring representation");
  }
  MultilinearRep rep;
  rep.n = A.ring()->matrix_size();
  rep.field = A.ring()->base();
  rep.ground = A.col_labels();
  RMatrix flat = A.unwrap();
  // Ambient coordinates carry no meaning of their own; use canonical names.
  std::vector<std::string> ambient_rows;
  for (size_t i = 1; i <= flat.nrows(); ++i) {
    ambient_rows.push_back("r" + std::to_string(i));
  }
  for (const auto& e : rep.ground) {
    std::vector<std::string> block_cols;
    for (unsigned s = 1; s <= rep.n; ++s) {
      block_cols.push_back(e + "." + std::to_string(s));
    }
    RMatrix block = flat.select_cols(block_cols);
    rep.blocks.emplace(
        e, RMatrix::build(block.ring(), ambient_rows, block_cols,
                          [&](size_t i, size_t j) { return block.at(i, j); }));
  }
  return rep;
}

RMatrix to_matrix(const MultilinearRep& rep) {
  if (rep.blocks.empty()) throw DomainError("empty multilinear representation");
  const unsigned amb = rep.ambient();
  if (amb % rep.n != 0) {
    throw DomainError("ambient dimension must be a multiple of n");
  }
  auto field_ring = Ring::field(rep.field);
  std::vector<std::string> rl, cl;
  for (unsigned i = 1; i <= amb; ++i) rl.push_back("r" + std::to_string(i));
  for (const auto& e : rep.ground) {
    for (unsigned s = 1; s <= rep.n; ++s) cl.push_back(e + "." + std::to_string(s));
  }
  RMatrix flat = RMatrix::build(
      field_ring, rl, cl, [&](size_t i, size_t j) -> RElem {
        const auto& block = rep.blocks.at(rep.ground[j / rep.n]);
        return field_ring->from_scalar(block.at(i, j % rep.n).coord(0));
      });
  RMatrix wrapped = RMatrix::wrap(rep.n, flat);
  PartialField pf =
      PartialField::matrix_partial_field(rep.n, rep.field);
  ChainGroupRep strong = to_strong(make_weak_rep(pf, wrapped));
  VerifyResult v = verify_rep(strong);
  if (!v.ok) {
    throw DomainError("assembled matrix fails the pivot-closure verification");
  }
  return wrapped;
}

}  // namespace pfm

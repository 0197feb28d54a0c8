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

#ifndef PFMATROID_CATALOG_HPP
#define PFMATROID_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pfmatroid/chain_group.hpp"
#include "pfmatroid/matroid.hpp"

namespace pfm::catalog {

/// A matroid together with one primitive chain per cocircuit, the input
/// shape of the Tutte criterion.
struct ChainSet {
  PartialField pf;
  Matroid matroid;
  std::vector<Chain> chains;
};

/// A named built-in instance: a representation, a bare matroid, a raw
/// matrix, or a chain set, with expected structure where that has been
/// derived independently.
struct CatalogEntry {
  std::string name;
  std::string note;
  std::optional<ChainGroupRep> rep;
  std::optional<Matroid> matroid;
  std::optional<RMatrix> matrix;
  std::optional<ChainSet> chains;
  std::optional<unsigned> expect_rank;
  std::optional<size_t> expect_elements;
  std::optional<size_t> expect_bases;
};

std::vector<std::string> names();
CatalogEntry get(const std::string& name);

}  // namespace pfm::catalog

#endif  // PFMATROID_CATALOG_HPP

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

#ifndef PFMATROID_IO_HPP
#define PFMATROID_IO_HPP

#include <string>

#include <json.hpp>

#include "pfmatroid/catalog.hpp"
#include "pfmatroid/chain_group.hpp"
#include "pfmatroid/matroid.hpp"
#include "pfmatroid/multilinear.hpp"
#include "pfmatroid/quat.hpp"

namespace pfm::io {

using nlohmann::json;

// Scalar literals are ring-directed: rationals print as integers or "p/q"
// strings, quadratic-extension values as [u, v] pairs meaning u + v*sqrt(d),
// complexified values as [re, im], quaternions as [a, b, c, d], matrix-ring
// entries as nested n x n arrays, GF(p) values as residues. Unknown object
// keys are rejected everywhere; diagnostics carry a JSON path.

json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const json& j, const std::string& path);

json group_to_json(const PartialField& pf);
PartialField pf_from_json(const json& ring_j, const json& group_j,
                          const std::string& path);

json elem_to_json(const RElem& x);
RElem elem_from_json(const RingPtr& ring, const json& j,
                     const std::string& path);

json fval_to_json(const BaseField& f, const FVal& v);
FVal fval_from_json(const BaseField& f, const json& j, const std::string& path);

/// {ring, partial_field, form, rows, cols, entries}
json rep_to_json(const ChainGroupRep& rep);
ChainGroupRep rep_from_json(const json& j);

/// A bare matrix rendered as a weak document over (ring, all-units).
json matrix_to_json(const RMatrix& m);

/// {ground, bases}
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

/// {ring, partial_field, matroid, chains}
json chainset_to_json(const catalog::ChainSet& cs);
catalog::ChainSet chainset_from_json(const json& j);

/// {field, n, ground, blocks: [{element, matrix}]}
json multilinear_to_json(const MultilinearRep& rep);
MultilinearRep multilinear_from_json(const json& j);

/// {vertices, edges}
json graph_to_json(const GraphDoc& g);
GraphDoc graph_from_json(const json& j);

/// The document for a catalog entry (rep, matrix, matroid, or chain set).
json catalog_entry_to_json(const catalog::CatalogEntry& e);

json parse_file(const std::string& filename);
std::string pretty(const json& j);

/// Human rendering of an exact value, optionally with a decimal
/// approximation for reading convenience.
std::string render_value(const BaseField& f, const FVal& v, bool approx);

}  // namespace pfm::io

#endif  // PFMATROID_IO_HPP

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

#ifndef PFMATROID_CHAIN_GROUP_HPP
#define PFMATROID_CHAIN_GROUP_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfmatroid/matrix.hpp"
#include "pfmatroid/matroid.hpp"
#include "pfmatroid/partial_field.hpp"

namespace pfm {

/// A chain group presented by a generator matrix: the chains are the left
/// row span. In strong form the matrix contains an identity column for every
/// row (it is [I D] up to column order) and row labels name those columns;
/// weak form is an arbitrary full-row-rank generator matrix.
enum class RepForm { kWeak, kStrong };

struct ChainGroupRep {
  PartialField pf;
  RMatrix mat;
  RepForm form = RepForm::kWeak;

  /// The D part of a strong-form matrix: rows as stored, columns restricted
  /// to the non-identity columns.
  RMatrix strong_core() const;
  std::vector<std::string> basis_cols() const { return mat.row_labels(); }
  std::vector<std::string> cobasis_cols() const;
};

ChainGroupRep make_weak_rep(PartialField pf, RMatrix mat);
/// Validates that every row label has a matching identity column.
ChainGroupRep make_strong_rep(PartialField pf, RMatrix mat);

/// A chain: finitely supported coordinate map over the ground set.
using Chain = std::map<std::string, RElem>;

struct PivotStep {
  std::string row, col;
  bool operator==(const PivotStep&) const = default;
};

struct VerifyCounterexample {
  std::vector<PivotStep> path;  // pivots leading to the offending matrix
  std::string row, col;         // position of the entry outside G u {0}
  RElem entry;
};

struct VerifyResult {
  bool ok = false;
  std::optional<VerifyCounterexample> counterexample;
};

enum class VerifyEngine { kAuto, kGeneric, kTabulated };

/// Decides whether D is a strong P-matrix: walks the whole pivot closure of
/// D (states keyed by which columns currently hold the identity, so the walk
/// is finite) and demands every entry of every reachable matrix lie in
/// G u {0}. On failure reports the pivot path and offending entry.
VerifyResult verify_strong(const RMatrix& D, const PartialField& pf,
                           VerifyEngine engine = VerifyEngine::kAuto);

/// Strong form: closure of the D part. Weak form: closure of the matrix
/// itself taken as a D part (its row labels act as fresh basis elements).
VerifyResult verify_rep(const ChainGroupRep& rep,
                        VerifyEngine engine = VerifyEngine::kAuto);

/// The matroid on the column labels whose bases are the column subsets B
/// with A[X,B] invertible. Requires a nondegenerate matrix (some subset
/// invertible).
Matroid matroid_of(const ChainGroupRep& rep);

/// Row-reduces a weak representation onto one of its bases, yielding strong
/// form. Strong inputs pass through unchanged.
ChainGroupRep to_strong(const ChainGroupRep& rep);

/// The representation [-D^T I] of the orthogonal chain group, over the
/// opposite partial field. Requires strong form.
ChainGroupRep dual_rep(const ChainGroupRep& rep);

/// Deletion projects chains off the removed coordinates; contraction pivots
/// a non-loop element onto the basis and then drops its row and column.
/// Weak inputs are first normalized to strong form.
ChainGroupRep minor(const ChainGroupRep& rep,
                    const std::vector<std::string>& del,
                    const std::vector<std::string>& con);

/// Entry-wise ring homomorphism. Every image entry must lie in the target
/// group (or be zero); violations raise DomainError.
ChainGroupRep apply_hom(const ChainGroupRep& rep,
                        const std::function<RElem(const RElem&)>& hom,
                        const PartialField& target_pf);

/// The homomorphism x -> x mod p from rational carriers into GF(p).
std::function<RElem(const RElem&)> gfp_hom(unsigned p);
PartialField gfp_target(unsigned p);

/// Column e right-multiplied by a group element; the matroid is unchanged.
/// Strong form is restored by a compensating row scaling when e is a basis
/// column.
ChainGroupRep scale_column(const ChainGroupRep& rep, const std::string& e,
                           const RElem& g);

struct TutteFailure {
  std::vector<std::string> x1, x2, x3;  // the modular triple of cocircuits
  std::string reason;
};

/// The balancing scalars found for one modular triple.
struct TutteCertificate {
  std::vector<std::string> x1, x2, x3;
  RElem p1, p2, p3;
};

struct TutteResult {
  bool ok = false;
  std::optional<TutteFailure> failure;
  std::vector<TutteCertificate> certificates;
};

/// Tutte's representability criterion: for every modular triple of
/// cocircuits, scalars p, p', p'' in G with p a^X + p' a^X' + p'' a^X'' = 0
/// must exist. Chains are normalized on p = 1 and the remaining scalars are
/// read off at coordinates separating the triple, then the full identity and
/// group membership are checked. The chain list must contain one G-primitive
/// chain per cocircuit, support equal to the cocircuit.
TutteResult tutte_check(const Matroid& m, const std::vector<Chain>& chains,
                        const PartialField& pf);

/// One primitive chain per cocircuit, extracted from pivots of a verified
/// strong representation (rows of re-pivoted matrices).
std::vector<Chain> cocircuit_chains(const ChainGroupRep& rep,
                                    const Matroid& m);

}  // namespace pfm

#endif  // PFMATROID_CHAIN_GROUP_HPP

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

#include "pfmatroid/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>

#include "pfmatroid/errors.hpp"

namespace pfm {

struct Matroid::Caches {
  std::mutex mu;
  std::optional<std::vector<uint64_t>> circuits;
  std::optional<std::vector<uint64_t>> cocircuits;
};

namespace {

int popcount(uint64_t x) { return std::popcount(x); }

// Visit all k-subsets of {0..n-1} as masks.
template <typename Fn>
void for_each_subset(unsigned n, unsigned k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(uint64_t{0});
    return;
  }
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    uint64_t m = 0;
    for (unsigned i : idx) m |= uint64_t{1} << i;
    fn(m);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

Matroid Matroid::from_bases(std::vector<std::string> ground,
                            std::vector<uint64_t> bases) {
  if (ground.size() > 64) {
    throw DomainError("ground sets are capped at 64 elements");
  }
  if (bases.empty()) throw DomainError("a matroid needs at least one basis");
  Matroid m;
  m.ground_ = std::move(ground);
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : m.ground_) {
      if (!seen.insert(l).second) throw DomainError("duplicate ground label");
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const uint64_t full = m.ground_.size() == 64
                            ? ~uint64_t{0}
                            : ((uint64_t{1} << m.ground_.size()) - 1);
  m.rank_ = static_cast<unsigned>(popcount(bases.front()));
  for (uint64_t b : bases) {
    if ((b & ~full) != 0) throw DomainError("basis exceeds the ground set");
    if (static_cast<unsigned>(popcount(b)) != m.rank_) {
      throw DomainError("bases must share one cardinality");
    }
  }
  m.bases_ = std::move(bases);
  m.basis_set_ = std::unordered_set<uint64_t>(m.bases_.begin(), m.bases_.end());
  m.caches_ = std::make_shared<Caches>();

  if (m.ground_.size() <= 16) {
    // Basis exchange: for all B1, B2 and x in B1 \ B2 there is y in B2 \ B1
    // with B1 - x + y a basis.
    for (uint64_t b1 : m.bases_) {
      for (uint64_t b2 : m.bases_) {
        uint64_t out = b1 & ~b2;
        while (out) {
          uint64_t x = out & (~out + 1);
          out ^= x;
          uint64_t in = b2 & ~b1;
          bool found = false;
          uint64_t in_scan = in;
          while (in_scan) {
            uint64_t y = in_scan & (~in_scan + 1);
            in_scan ^= y;
            if (m.basis_set_.count((b1 ^ x) | y)) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw DomainError("basis family violates the exchange axiom");
          }
        }
      }
    }
    m.exchange_checked_ = true;
  }
  return m;
}

Matroid Matroid::from_basis_lists(
    std::vector<std::string> ground,
    const std::vector<std::vector<std::string>>& bases) {
  Matroid tmp;
  tmp.ground_ = ground;
  std::vector<uint64_t> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(tmp.mask_of(b));
  return from_bases(std::move(ground), std::move(masks));
}

Matroid Matroid::uniform(unsigned r, std::vector<std::string> ground) {
  std::vector<uint64_t> bases;
  for_each_subset(static_cast<unsigned>(ground.size()), r,
                  [&](uint64_t m) { bases.push_back(m); });
  return from_bases(std::move(ground), std::move(bases));
}

size_t Matroid::index_of(const std::string& label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) {
    throw DomainError("unknown ground element '" + label + "'");
  }
  return static_cast<size_t>(it - ground_.begin());
}

uint64_t Matroid::mask_of(const std::vector<std::string>& labels) const {
  uint64_t m = 0;
  for (const auto& l : labels) m |= uint64_t{1} << index_of(l);
  return m;
}

std::vector<std::string> Matroid::labels_of(uint64_t mask) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < ground_.size(); ++i) {
    if (mask >> i & 1) out.push_back(ground_[i]);
  }
  return out;
}

bool Matroid::is_basis(uint64_t mask) const { return basis_set_.count(mask) > 0; }

unsigned Matroid::rank(uint64_t subset) const {
  const unsigned cap = std::min<unsigned>(rank_, popcount(subset));
  unsigned best = 0;
  for (uint64_t b : bases_) {
    unsigned v = static_cast<unsigned>(popcount(b & subset));
    if (v > best) {
      best = v;
      if (best == cap) break;
    }
  }
  return best;
}

uint64_t Matroid::full_mask() const {
  return ground_.size() == 64 ? ~uint64_t{0}
                              : ((uint64_t{1} << ground_.size()) - 1);
}

void Matroid::compute_circuits_into(std::vector<uint64_t>& out) const {
  const unsigned n = static_cast<unsigned>(ground_.size());
  for (unsigned k = 1; k <= rank_ + 1 && k <= n; ++k) {
    for_each_subset(n, k, [&](uint64_t x) {
      for (uint64_t c : out) {
        if ((c & x) == c) return;  // contains a smaller circuit
      }
      if (rank(x) == k - 1) out.push_back(x);  // all proper subsets independent
    });
  }
}

const std::vector<uint64_t>& Matroid::circuits() const {
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->circuits) {
    std::vector<uint64_t> out;
    compute_circuits_into(out);
    caches_->circuits = std::move(out);
  }
  return *caches_->circuits;
}

const std::vector<uint64_t>& Matroid::cocircuits() const {
  {
    std::lock_guard<std::mutex> lock(caches_->mu);
    if (caches_->cocircuits) return *caches_->cocircuits;
  }
  std::vector<uint64_t> cc = dual().circuits();
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->cocircuits) caches_->cocircuits = std::move(cc);
  return *caches_->cocircuits;
}

uint64_t Matroid::loops() const {
  uint64_t u = 0;
  for (uint64_t b : bases_) u |= b;
  return full_mask() & ~u;
}

uint64_t Matroid::coloops() const {
  uint64_t i = full_mask();
  for (uint64_t b : bases_) i &= b;
  return i;
}

Matroid Matroid::dual() const {
  std::vector<uint64_t> co;
  co.reserve(bases_.size());
  const uint64_t full = full_mask();
  for (uint64_t b : bases_) co.push_back(full & ~b);
  return from_bases(ground_, std::move(co));
}

Matroid Matroid::deletion(const std::string& e) const {
  const size_t i = index_of(e);
  const uint64_t bit = uint64_t{1} << i;
  const bool coloop = (coloops() & bit) != 0;
  std::vector<uint64_t> nb;
  for (uint64_t b : bases_) {
    if (coloop) {
      nb.push_back(b & ~bit);
    } else if (!(b & bit)) {
      nb.push_back(b);
    }
  }
  // Re-index masks after dropping position i.
  std::vector<std::string> ng = ground_;
  ng.erase(ng.begin() + i);
  const uint64_t low = (uint64_t{1} << i) - 1;
  for (auto& b : nb) b = (b & low) | ((b >> 1) & ~low);
  return from_bases(std::move(ng), std::move(nb));
}

Matroid Matroid::contraction(const std::string& e) const {
  const size_t i = index_of(e);
  const uint64_t bit = uint64_t{1} << i;
  const bool loop = (loops() & bit) != 0;
  std::vector<uint64_t> nb;
  for (uint64_t b : bases_) {
    if (loop) {
      nb.push_back(b);
    } else if (b & bit) {
      nb.push_back(b & ~bit);
    }
  }
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  std::vector<std::string> ng = ground_;
  ng.erase(ng.begin() + i);
  const uint64_t low = (uint64_t{1} << i) - 1;
  for (auto& b : nb) b = (b & low) | ((b >> 1) & ~low);
  return from_bases(std::move(ng), std::move(nb));
}

Matroid Matroid::minor(const std::vector<std::string>& del,
                       const std::vector<std::string>& con) const {
  for (const auto& d : del) {
    for (const auto& c : con) {
      if (d == c) throw DomainError("deletion and contraction sets overlap");
    }
  }
  Matroid m = *this;
  for (const auto& c : con) m = m.contraction(c);
  for (const auto& d : del) m = m.deletion(d);
  return m;
}

Matroid Matroid::direct_sum(const Matroid& other) const {
  std::vector<std::string> ng = ground_;
  ng.insert(ng.end(), other.ground_.begin(), other.ground_.end());
  if (ng.size() > 64) throw DomainError("direct sum exceeds 64 elements");
  std::vector<uint64_t> nb;
  nb.reserve(bases_.size() * other.bases_.size());
  const unsigned shift = static_cast<unsigned>(ground_.size());
  for (uint64_t b1 : bases_) {
    for (uint64_t b2 : other.bases_) nb.push_back(b1 | (b2 << shift));
  }
  return from_bases(std::move(ng), std::move(nb));
}

Matroid Matroid::relabel(std::vector<std::string> new_ground) const {
  if (new_ground.size() != ground_.size()) {
    throw DomainError("relabel requires one new label per element");
  }
  return from_bases(std::move(new_ground), bases_);
}

std::vector<std::array<uint64_t, 3>> Matroid::modular_triples() const {
  std::vector<std::array<uint64_t, 3>> out;
  if (rank_ < 2) return out;
  const auto& cc = cocircuits();
  const uint64_t full = full_mask();
  for (size_t i = 0; i < cc.size(); ++i) {
    for (size_t j = i + 1; j < cc.size(); ++j) {
      for (size_t k = j + 1; k < cc.size(); ++k) {
        uint64_t s = full & ~(cc[i] | cc[j] | cc[k]);
        // rank(M/S) = r - rank(S)
        if (rank(s) == rank_ - 2) out.push_back({cc[i], cc[j], cc[k]});
      }
    }
  }
  return out;
}

bool Matroid::operator==(const Matroid& o) const {
  if (ground_.size() != o.ground_.size() || rank_ != o.rank_ ||
      bases_.size() != o.bases_.size()) {
    return false;
  }
  // Positional permutation induced by matching labels.
  std::vector<int> perm(ground_.size());
  for (size_t i = 0; i < ground_.size(); ++i) {
    auto it = std::find(o.ground_.begin(), o.ground_.end(), ground_[i]);
    if (it == o.ground_.end()) return false;
    perm[i] = static_cast<int>(it - o.ground_.begin());
  }
  std::vector<uint64_t> mapped;
  mapped.reserve(bases_.size());
  for (uint64_t b : bases_) {
    uint64_t m = 0;
    for (size_t i = 0; i < ground_.size(); ++i) {
      if (b >> i & 1) m |= uint64_t{1} << perm[i];
    }
    mapped.push_back(m);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == o.bases_;
}

namespace {

// Per-element invariant: sorted list of sizes of circuits through it,
// refined once by the sizes seen around circuit partners.
std::vector<std::vector<int>> circuit_signatures(
    const Matroid& m, const std::vector<uint64_t>& circuits) {
  const size_t n = m.size();
  std::vector<std::vector<int>> sig(n);
  for (uint64_t c : circuits) {
    int sz = popcount(c);
    for (size_t i = 0; i < n; ++i) {
      if (c >> i & 1) sig[i].push_back(sz);
    }
  }
  for (auto& s : sig) std::sort(s.begin(), s.end());
  // One refinement round: append the multiset of partner signature hashes.
  std::vector<size_t> h(n);
  for (size_t i = 0; i < n; ++i) {
    size_t acc = 1469598103934665603ull;
    for (int v : sig[i]) acc = (acc ^ static_cast<size_t>(v)) * 1099511628211ull;
    h[i] = acc;
  }
  std::vector<std::vector<int>> refined(n);
  for (size_t i = 0; i < n; ++i) refined[i] = sig[i];
  for (uint64_t c : circuits) {
    std::vector<size_t> members;
    for (size_t i = 0; i < n; ++i) {
      if (c >> i & 1) members.push_back(i);
    }
    for (size_t i : members) {
      size_t acc = 0;
      for (size_t j : members) {
        if (j != i) acc += h[j];
      }
      refined[i].push_back(static_cast<int>(acc % 1000003));
    }
  }
  for (auto& s : refined) std::sort(s.begin(), s.end());
  return refined;
}

}  // namespace

std::optional<std::unordered_map<std::string, std::string>>
Matroid::is_isomorphic(const Matroid& other) const {
  const size_t n = ground_.size();
  if (n != other.ground_.size() || rank_ != other.rank_ ||
      bases_.size() != other.bases_.size()) {
    return std::nullopt;
  }
  const auto& c1 = circuits();
  const auto& c2 = other.circuits();
  if (c1.size() != c2.size()) return std::nullopt;
  auto sig1 = circuit_signatures(*this, c1);
  auto sig2 = circuit_signatures(other, c2);

  // Candidate lists by equal signatures.
  std::vector<std::vector<int>> cand(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (sig1[i] == sig2[j]) cand[i].push_back(static_cast<int>(j));
    }
    if (cand[i].empty()) return std::nullopt;
  }
  // Assign the most constrained elements first.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return cand[a].size() < cand[b].size();
  });

  std::unordered_set<uint64_t> c2set(c2.begin(), c2.end());
  std::vector<std::vector<size_t>> circuits_of(n);
  for (size_t ci = 0; ci < c1.size(); ++ci) {
    for (size_t i = 0; i < n; ++i) {
      if (c1[ci] >> i & 1) circuits_of[i].push_back(ci);
    }
  }

  std::vector<int> map1(n, -1), used2(n, 0);
  uint64_t assigned = 0;

  auto consistent = [&](size_t i) {
    for (size_t ci : circuits_of[i]) {
      uint64_t c = c1[ci];
      if ((c & ~assigned) != 0) continue;  // not fully assigned yet
      uint64_t img = 0;
      for (size_t k = 0; k < n; ++k) {
        if (c >> k & 1) img |= uint64_t{1} << map1[k];
      }
      if (!c2set.count(img)) return false;
    }
    return true;
  };

  std::function<bool(size_t)> assign = [&](size_t pos) -> bool {
    if (pos == n) return true;
    size_t i = order[pos];
    for (int j : cand[i]) {
      if (used2[j]) continue;
      map1[i] = j;
      used2[j] = 1;
      assigned |= uint64_t{1} << i;
      if (consistent(i) && assign(pos + 1)) return true;
      assigned &= ~(uint64_t{1} << i);
      used2[j] = 0;
      map1[i] = -1;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;

  // Definitive check: the bijection must map bases onto bases.
  std::vector<uint64_t> mapped;
  mapped.reserve(bases_.size());
  for (uint64_t b : bases_) {
    uint64_t m = 0;
    for (size_t i = 0; i < n; ++i) {
      if (b >> i & 1) m |= uint64_t{1} << map1[i];
    }
    mapped.push_back(m);
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != other.bases_) return std::nullopt;

  std::unordered_map<std::string, std::string> witness;
  for (size_t i = 0; i < n; ++i) witness[ground_[i]] = other.ground_[map1[i]];
  return witness;
}

}  // namespace pfm

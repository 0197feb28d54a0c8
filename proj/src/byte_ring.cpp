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

#include "byte_ring.hpp"

#include "pfmatroid/matrix.hpp"

namespace pfm::detail {

uint8_t ByteRing::encode(const RElem& x) const {
  uint32_t v = 0, base = 1;
  for (unsigned t = 0; t < dim; ++t) {
    uint32_t digit =
        static_cast<uint32_t>(x.coord(t).c[0].get_num().get_ui()) % p;
    v += digit * base;
    base *= p;
  }
  return static_cast<uint8_t>(v);
}

RElem ByteRing::decode(uint8_t v) const {
  const BaseField& F = ring->base();
  std::vector<FVal> c(dim);
  uint32_t rest = v;
  for (unsigned t = 0; t < dim; ++t) {
    c[t] = F.from_long(static_cast<long>(rest % p));
    rest /= p;
  }
  return ring->from_coords(std::move(c));
}

std::optional<ByteRing> make_byte_ring(const PartialField& pf) {
  const RingPtr& ring = pf.ring();
  if (ring->base().kind() != BaseField::Kind::kGFp) return std::nullopt;
  const uint32_t p = ring->base().modulus();
  const unsigned dim = ring->dim();
  uint64_t n = 1;
  for (unsigned t = 0; t < dim; ++t) {
    n *= p;
    if (n > 256) return std::nullopt;
  }
  ByteRing br;
  br.ring = ring;
  br.p = p;
  br.dim = dim;
  br.size = static_cast<uint32_t>(n);

  std::vector<RElem> elems;
  elems.reserve(br.size);
  for (uint32_t v = 0; v < br.size; ++v) elems.push_back(br.decode(static_cast<uint8_t>(v)));

  br.mul.resize(br.size * br.size);
  br.add.resize(br.size * br.size);
  br.neg.resize(br.size);
  br.inv.assign(br.size, 0xFF);
  br.in_group.resize(br.size);
  for (uint32_t a = 0; a < br.size; ++a) {
    br.neg[a] = br.encode(-elems[a]);
    if (auto iv = try_inverse(elems[a])) br.inv[a] = br.encode(*iv);
    br.in_group[a] = pf.in_group(elems[a]) ? 1 : 0;
    for (uint32_t b = 0; b < br.size; ++b) {
      br.mul[a * br.size + b] = br.encode(elems[a] * elems[b]);
      br.add[a * br.size + b] = br.encode(elems[a] + elems[b]);
    }
  }
  return br;
}

}  // namespace pfm::detail

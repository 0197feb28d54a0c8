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

#ifndef PFMATROID_SRC_BYTE_RING_HPP
#define PFMATROID_SRC_BYTE_RING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pfmatroid/partial_field.hpp"
#include "pfmatroid/ring.hpp"

namespace pfm::detail {

// Complete operation tables for a finite ring (GF(p) base, p^dim <= 256
// elements), so that pivot walks and rank checks over such rings run on
// bytes instead of exact bignum coordinates. Tables are produced by the
// generic ring arithmetic, so both computation paths agree by construction.
struct ByteRing {
  RingPtr ring;
  uint32_t p = 0;
  unsigned dim = 0;
  uint32_t size = 0;                // p^dim
  std::vector<uint8_t> mul;         // size * size
  std::vector<uint8_t> add;         // size * size
  std::vector<uint8_t> neg;         // size
  std::vector<uint8_t> inv;         // size; 0xFF where no inverse exists
  std::vector<uint8_t> in_group;    // size; per the partial field

  uint8_t mul_at(uint8_t a, uint8_t b) const { return mul[a * size + b]; }
  uint8_t add_at(uint8_t a, uint8_t b) const { return add[a * size + b]; }

  uint8_t encode(const RElem& x) const;
  RElem decode(uint8_t v) const;
};

// nullopt when the ring is not byte-sized (non-GF base or > 256 elements).
std::optional<ByteRing> make_byte_ring(const PartialField& pf);

}  // namespace pfm::detail

#endif  // PFMATROID_SRC_BYTE_RING_HPP

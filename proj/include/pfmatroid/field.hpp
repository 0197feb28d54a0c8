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

#ifndef PFMATROID_FIELD_HPP
#define PFMATROID_FIELD_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pfmatroid/errors.hpp"

namespace pfm {

/// A scalar of one of the supported base fields. The interpretation of the
/// coordinates depends on the field the value belongs to:
///   - rationals:              c[0]
///   - Q(sqrt d):              c[0] + c[1]*sqrt(d)
///   - complexified variants:  c[0] + c[1]*sqrt(d) + (c[2] + c[3]*sqrt(d))*i
///   - GF(p):                  c[0] holds the residue 0..p-1
/// Values carry no field tag of their own; all arithmetic goes through the
/// owning BaseField, which knows which coordinates are live.
struct FVal {
  std::array<mpq_class, 4> c{};

  bool operator==(const FVal& o) const { return c == o.c; }
};

/// One of the exact coefficient fields: the rationals, a real quadratic
/// extension Q(sqrt d), either of those with an imaginary unit adjoined, or a
/// prime field GF(p). All arithmetic is exact; there is no floating point.
class BaseField {
 public:
  enum class Kind { kChar0, kGFp };

  static BaseField rationals();
  /// Q(sqrt d) for a squarefree integer d >= 2.
  static BaseField quadratic(unsigned d);
  static BaseField gf(unsigned p);

  /// The same field with an imaginary unit i (i*i = -1) adjoined.
  BaseField complexified() const;
  /// The real subfield (drops the imaginary unit).
  BaseField decomplexified() const;

  Kind kind() const { return kind_; }
  unsigned sqrt_param() const { return d_; }
  bool has_imaginary() const { return has_i_; }
  unsigned modulus() const { return p_; }
  /// Dimension over Q (char 0) or GF(p).
  unsigned degree() const;

  bool operator==(const BaseField& o) const = default;

  FVal zero() const { return FVal{}; }
  FVal one() const { return from_long(1); }
  FVal from_long(long v) const;
  FVal from_rational(const mpq_class& v) const;
  /// c[0] + c[1]*sqrt(d); only meaningful when sqrt_param() != 0.
  FVal from_quadratic(const mpq_class& a, const mpq_class& b) const;
  FVal make_imaginary_unit() const;
  FVal sqrt_generator() const;  // the adjoined sqrt(d) itself

  bool is_zero(const FVal& a) const;
  bool eq(const FVal& a, const FVal& b) const { return a == b; }

  FVal add(const FVal& a, const FVal& b) const;
  FVal sub(const FVal& a, const FVal& b) const;
  FVal neg(const FVal& a) const;
  FVal mul(const FVal& a, const FVal& b) const;
  /// Multiplicative inverse; throws NotInvertibleError on zero.
  FVal inv(const FVal& a) const;
  FVal div(const FVal& a, const FVal& b) const { return mul(a, inv(b)); }

  /// Complex conjugation (negates the imaginary coordinates). Identity on
  /// fields without an imaginary unit.
  FVal conj_im(const FVal& a) const;
  bool is_real(const FVal& a) const;
  /// Drops the imaginary coordinates; valid when is_real(a).
  FVal real_part(const FVal& a) const;

  /// Exact sign of a real char-0 value: -1, 0, or +1.
  int sign(const FVal& a) const;

  /// The nonnegative exact square root when the value is a perfect square in
  /// this field (real part only); nullopt otherwise.
  std::optional<FVal> sqrt_exact(const FVal& a) const;

  /// Whether the rational value has a denominator that is a power of two
  /// (the membership test of the halves-only subring of Q).
  static bool denominator_power_of_two(const mpq_class& v);

  std::string to_string(const FVal& a) const;
  double to_double(const FVal& a) const;

 private:
  BaseField(Kind k, unsigned d, bool has_i, unsigned p)
      : kind_(k), d_(d), has_i_(has_i), p_(p) {}

  mpq_class gf_reduce(const mpq_class& v) const;

  Kind kind_ = Kind::kChar0;
  unsigned d_ = 0;      // adjoined sqrt(d), 0 = none
  bool has_i_ = false;  // imaginary unit adjoined
  unsigned p_ = 0;      // prime modulus for GF(p)
};

/// Exact nonnegative square root of a rational, if it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& v);

}  // namespace pfm

#endif  // PFMATROID_FIELD_HPP

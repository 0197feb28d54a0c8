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

#include "pfmatroid/field.hpp"

#include <cmath>
#include <sstream>

namespace pfm {

namespace {

bool squarefree(unsigned d) {
  for (unsigned q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) return false;
  }
  return true;
}

bool probably_prime(unsigned p) {
  if (p < 2) return false;
  mpz_class n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

}  // namespace

BaseField BaseField::rationals() { return BaseField(Kind::kChar0, 0, false, 0); }

BaseField BaseField::quadratic(unsigned d) {
  if (d < 2 || !squarefree(d)) {
    throw DomainError("quadratic extension parameter must be squarefree and >= 2");
  }
  return BaseField(Kind::kChar0, d, false, 0);
}

BaseField BaseField::gf(unsigned p) {
  if (!probably_prime(p)) throw DomainError("GF(p) modulus must be prime");
  return BaseField(Kind::kGFp, 0, false, p);
}

BaseField BaseField::complexified() const {
  if (kind_ != Kind::kChar0) throw DomainError("cannot complexify GF(p)");
  return BaseField(Kind::kChar0, d_, true, 0);
}

BaseField BaseField::decomplexified() const {
  if (kind_ != Kind::kChar0) throw DomainError("not a char-0 field");
  return BaseField(Kind::kChar0, d_, false, 0);
}

unsigned BaseField::degree() const {
  if (kind_ == Kind::kGFp) return 1;
  return (d_ ? 2u : 1u) * (has_i_ ? 2u : 1u);
}

FVal BaseField::from_long(long v) const {
  FVal r;
  r.c[0] = mpq_class(v);
  if (kind_ == Kind::kGFp) r.c[0] = gf_reduce(r.c[0]);
  return r;
}

FVal BaseField::from_rational(const mpq_class& v) const {
  FVal r;
  r.c[0] = v;
  r.c[0].canonicalize();
  if (kind_ == Kind::kGFp) r.c[0] = gf_reduce(r.c[0]);
  return r;
}

FVal BaseField::from_quadratic(const mpq_class& a, const mpq_class& b) const {
  if (d_ == 0 && b != 0) throw DomainError("field has no adjoined square root");
  FVal r;
  r.c[0] = a;
  r.c[1] = b;
  r.c[0].canonicalize();
  r.c[1].canonicalize();
  return r;
}

FVal BaseField::make_imaginary_unit() const {
  if (!has_i_) throw DomainError("field has no imaginary unit");
  FVal r;
  r.c[2] = 1;
  return r;
}

FVal BaseField::sqrt_generator() const {
  if (d_ == 0) throw DomainError("field has no adjoined square root");
  FVal r;
  r.c[1] = 1;
  return r;
}

bool BaseField::is_zero(const FVal& a) const {
  return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0;
}

mpq_class BaseField::gf_reduce(const mpq_class& v) const {
  mpz_class num = v.get_num(), den = v.get_den(), p(p_);
  mpz_class r = num % p;
  if (r < 0) r += p;
  if (den != 1) {
    mpz_class d = den % p, dinv;
    if (d < 0) d += p;
    if (d == 0 || mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw DomainError("denominator not invertible mod p");
    }
    r = (r * dinv) % p;
  }
  return mpq_class(r);
}

FVal BaseField::add(const FVal& a, const FVal& b) const {
  FVal r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  if (kind_ == Kind::kGFp) r.c[0] = gf_reduce(r.c[0]);
  return r;
}

FVal BaseField::sub(const FVal& a, const FVal& b) const {
  FVal r;
  for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
  if (kind_ == Kind::kGFp) r.c[0] = gf_reduce(r.c[0]);
  return r;
}

FVal BaseField::neg(const FVal& a) const {
  FVal r;
  for (int i = 0; i < 4; ++i) r.c[i] = -a.c[i];
  if (kind_ == Kind::kGFp) r.c[0] = gf_reduce(r.c[0]);
  return r;
}

FVal BaseField::mul(const FVal& a, const FVal& b) const {
  if (kind_ == Kind::kGFp) {
    FVal r;
    r.c[0] = gf_reduce(a.c[0] * b.c[0]);
    return r;
  }
  if (degree() == 1) {
    FVal r;
    r.c[0] = a.c[0] * b.c[0];
    return r;
  }
  // (u1 + v1 i)(u2 + v2 i) with u,v in Q(sqrt d).
  const mpq_class d(static_cast<long>(d_));
  auto qmul = [&](const mpq_class& a0, const mpq_class& a1, const mpq_class& b0,
                  const mpq_class& b1, mpq_class& r0, mpq_class& r1) {
    r0 = a0 * b0 + d * a1 * b1;
    r1 = a0 * b1 + a1 * b0;
  };
  mpq_class uu0, uu1, vv0, vv1, uv0, uv1, vu0, vu1;
  qmul(a.c[0], a.c[1], b.c[0], b.c[1], uu0, uu1);
  qmul(a.c[2], a.c[3], b.c[2], b.c[3], vv0, vv1);
  qmul(a.c[0], a.c[1], b.c[2], b.c[3], uv0, uv1);
  qmul(a.c[2], a.c[3], b.c[0], b.c[1], vu0, vu1);
  FVal r;
  r.c[0] = uu0 - vv0;
  r.c[1] = uu1 - vv1;
  r.c[2] = uv0 + vu0;
  r.c[3] = uv1 + vu1;
  return r;
}

FVal BaseField::inv(const FVal& a) const {
  if (is_zero(a)) throw NotInvertibleError("division by zero");
  if (kind_ == Kind::kGFp) {
    FVal r;
    mpz_class x = a.c[0].get_num(), p(p_), xinv;
    if (mpz_invert(xinv.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw NotInvertibleError("residue not invertible");
    }
    FVal out;
    out.c[0] = mpq_class(xinv);
    return out;
  }
  const mpq_class d(static_cast<long>(d_));
  // First clear the imaginary unit: 1/(u + v i) = (u - v i) / (u^2 + v^2),
  // then invert the remaining Q(sqrt d) value by its conjugate.
  auto quad_inv = [&](const mpq_class& s, const mpq_class& t, mpq_class& r0,
                      mpq_class& r1) {
    mpq_class nrm = s * s - d * t * t;
    if (nrm == 0) throw NotInvertibleError("division by zero in Q(sqrt d)");
    r0 = s / nrm;
    r1 = -t / nrm;
  };
  // nrm = u*u + v*v in Q(sqrt d)
  mpq_class n0 = a.c[0] * a.c[0] + d * a.c[1] * a.c[1] + a.c[2] * a.c[2] +
                 d * a.c[3] * a.c[3];
  mpq_class n1 = 2 * a.c[0] * a.c[1] + 2 * a.c[2] * a.c[3];
  mpq_class i0, i1;
  quad_inv(n0, n1, i0, i1);
  // result = conj_im(a) * (i0 + i1 sqrt d)
  FVal conj = conj_im(a);
  FVal scale;
  scale.c[0] = i0;
  scale.c[1] = i1;
  return mul(conj, scale);
}

FVal BaseField::conj_im(const FVal& a) const {
  FVal r = a;
  r.c[2] = -r.c[2];
  r.c[3] = -r.c[3];
  return r;
}

bool BaseField::is_real(const FVal& a) const { return a.c[2] == 0 && a.c[3] == 0; }

FVal BaseField::real_part(const FVal& a) const {
  FVal r;
  r.c[0] = a.c[0];
  r.c[1] = a.c[1];
  return r;
}

int BaseField::sign(const FVal& a) const {
  if (kind_ != Kind::kChar0 || !is_real(a)) {
    throw DomainError("sign is defined for real char-0 values only");
  }
  const mpq_class& x = a.c[0];
  const mpq_class& y = a.c[1];
  int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Mixed signs: compare x^2 against d*y^2.
  mpq_class lhs = x * x, rhs = mpq_class(static_cast<long>(d_)) * y * y;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // only possible if d were a square; defensive
  return c > 0 ? sx : sy;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (v < 0) return std::nullopt;
  mpz_class num = v.get_num(), den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(sn, sd);
  r.canonicalize();
  return r;
}

std::optional<FVal> BaseField::sqrt_exact(const FVal& a) const {
  if (kind_ != Kind::kChar0) {
    throw DomainError("exact square root supported for char-0 fields only");
  }
  if (!is_real(a)) return std::nullopt;
  if (sign(a) < 0) return std::nullopt;
  const mpq_class& u = a.c[0];
  const mpq_class& v = a.c[1];
  const mpq_class d(static_cast<long>(d_));
  auto pack = [&](const mpq_class& s, const mpq_class& t) {
    FVal r;
    r.c[0] = s;
    r.c[1] = t;
    return r;
  };
  if (v == 0) {
    if (auto s = rational_sqrt(u)) return pack(*s, 0);
    if (d_ != 0) {
      // u = d * t^2 gives sqrt(u) = t * sqrt(d)
      if (auto t = rational_sqrt(u / d)) return pack(0, *t);
    }
    return std::nullopt;
  }
  // (s + t sqrt d)^2 = s^2 + d t^2 + 2 s t sqrt d.
  auto w = rational_sqrt(u * u - d * v * v);
  if (!w) return std::nullopt;
  for (const mpq_class& s2 : {mpq_class((u + *w) / 2), mpq_class((u - *w) / 2)}) {
    auto s = rational_sqrt(s2);
    if (!s || *s == 0) continue;
    mpq_class t = v / (2 * (*s));
    FVal cand = pack(*s, t);
    if (eq(mul(cand, cand), a)) {
      if (sign(cand) < 0) cand = neg(cand);
      return cand;
    }
  }
  return std::nullopt;
}

bool BaseField::denominator_power_of_two(const mpq_class& v) {
  mpz_class den = v.get_den();
  // den > 0 in canonical form; power of two iff exactly one set bit
  return mpz_popcount(den.get_mpz_t()) == 1;
}

std::string BaseField::to_string(const FVal& a) const {
  if (kind_ == Kind::kGFp) return a.c[0].get_str();
  std::ostringstream os;
  bool first = true;
  const char* names[4] = {"", "*sqrt(d)", "*i", "*sqrt(d)*i"};
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    if (!first) os << " + ";
    os << a.c[i].get_str() << names[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

double BaseField::to_double(const FVal& a) const {
  if (kind_ == Kind::kGFp) return a.c[0].get_d();
  double rd = std::sqrt(static_cast<double>(d_ == 0 ? 1 : d_));
  double re = a.c[0].get_d() + (d_ ? a.c[1].get_d() * rd : 0.0);
  return re;  // imaginary part dropped; used for display of real values only
}

}  // namespace pfm

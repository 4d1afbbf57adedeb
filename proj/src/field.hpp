// Copyright 2026 The balcurve Authors
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

#ifndef BALCURVE_SRC_FIELD_HPP
#define BALCURVE_SRC_FIELD_HPP

// The two exact coefficient fields used by the oracle: the prime field of
// order 2^31 - 1 and the rationals (GMP).

#include <gmpxx.h>

#include <cstdint>

namespace balcurve::detail {

class Fp {
 public:
  static constexpr std::uint64_t kModulus = 2147483647ULL;

  Fp() = default;
  explicit Fp(long v) {
    long m = v % static_cast<long>(kModulus);
    v_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(kModulus) : m);
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % kModulus); }
  friend Fp operator-(Fp a, Fp b) {
    return raw((a.v_ + kModulus - b.v_) % kModulus);
  }
  friend Fp operator*(Fp a, Fp b) { return raw(a.v_ * b.v_ % kModulus); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw((kModulus - v_) % kModulus); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp inverse() const {
    std::uint64_t base = v_, result = 1, e = kModulus - 2;
    while (e) {
      if (e & 1) result = result * base % kModulus;
      base = base * base % kModulus;
      e >>= 1;
    }
    return raw(result);
  }

 private:
  static Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

template <class F>
F from_long(long v);
template <>
inline Fp from_long<Fp>(long v) { return Fp(v); }
template <>
inline mpq_class from_long<mpq_class>(long v) { return mpq_class(v); }

template <class F>
F from_rational(const mpq_class& q);
template <>
inline mpq_class from_rational<mpq_class>(const mpq_class& q) { return q; }
template <>
inline Fp from_rational<Fp>(const mpq_class& q) {
  mpz_class m(static_cast<unsigned long>(Fp::kModulus));
  mpz_class num = q.get_num() % m;
  mpz_class den = q.get_den() % m;
  return Fp(num.get_si()) / Fp(den.get_si());
}

}  // namespace balcurve::detail

#endif  // BALCURVE_SRC_FIELD_HPP

// Copyright 2026 The Wengert Authors.
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

#pragma once

#include <cmath>
#include <concepts>
#include <ostream>

namespace wengert {

/// Forward-mode carrier: a primal value and its tangent along one seed
/// direction. Arithmetic applies the chain rule per elementary operation.
///
/// The element type is constrained to builtin floating point, so a
/// Dual<Dual<T>> cannot be formed. Nested differentiation in this library
/// is forward-over-reverse only, where the outer level has no tangent.
template <std::floating_point T>
struct Dual {
  T primal{};
  T tangent{};

  constexpr Dual() = default;
  constexpr Dual(T p, T t = T{0}) : primal(p), tangent(t) {}  // NOLINT

  static constexpr Dual variable(T p) { return Dual(p, T{1}); }
  static constexpr Dual constant(T p) { return Dual(p, T{0}); }

  friend constexpr Dual operator+(const Dual& a, const Dual& b) {
    return {a.primal + b.primal, a.tangent + b.tangent};
  }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) {
    return {a.primal - b.primal, a.tangent - b.tangent};
  }
  friend constexpr Dual operator-(const Dual& a) {
    return {-a.primal, -a.tangent};
  }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.primal * b.primal, a.tangent * b.primal + a.primal * b.tangent};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T q = a.primal / b.primal;
    return {q, (a.tangent - q * b.tangent) / b.primal};
  }

  constexpr Dual& operator+=(const Dual& o) { return *this = *this + o; }
  constexpr Dual& operator-=(const Dual& o) { return *this = *this - o; }
  constexpr Dual& operator*=(const Dual& o) { return *this = *this * o; }
  constexpr Dual& operator/=(const Dual& o) { return *this = *this / o; }

  // Comparisons look at the primal only; branching on a Dual follows the
  // path the underlying value takes.
  friend constexpr bool operator==(const Dual& a, const Dual& b) {
    return a.primal == b.primal;
  }
  friend constexpr auto operator<=>(const Dual& a, const Dual& b) {
    return a.primal <=> b.primal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << d.primal << " + " << d.tangent << "e";
  }
};

template <std::floating_point T>
constexpr T primal_of(const Dual<T>& d) noexcept {
  return d.primal;
}

template <std::floating_point T>
Dual<T> log(const Dual<T>& a) {
  return {std::log(a.primal), a.tangent / a.primal};
}

template <std::floating_point T>
Dual<T> exp(const Dual<T>& a) {
  const T e = std::exp(a.primal);
  return {e, e * a.tangent};
}

template <std::floating_point T>
Dual<T> sin(const Dual<T>& a) {
  return {std::sin(a.primal), std::cos(a.primal) * a.tangent};
}

template <std::floating_point T>
Dual<T> cos(const Dual<T>& a) {
  return {std::cos(a.primal), -std::sin(a.primal) * a.tangent};
}

template <std::floating_point T>
Dual<T> tan(const Dual<T>& a) {
  const T t = std::tan(a.primal);
  return {t, (T{1} + t * t) * a.tangent};
}

template <std::floating_point T>
Dual<T> sqrt(const Dual<T>& a) {
  const T s = std::sqrt(a.primal);
  return {s, a.tangent / (T{2} * s)};
}

// a^b with both arguments active. The exponent's contribution is dropped
// when it carries no tangent, so negative bases with constant integer
// exponents stay finite.
template <std::floating_point T>
Dual<T> pow(const Dual<T>& a, const Dual<T>& b) {
  const T value = std::pow(a.primal, b.primal);
  T tangent = T{0};
  if (a.tangent != T{0} && b.primal != T{0}) {
    tangent += b.primal * std::pow(a.primal, b.primal - T{1}) * a.tangent;
  }
  if (b.tangent != T{0}) {
    tangent += value * std::log(a.primal) * b.tangent;
  }
  return {value, tangent};
}

}  // namespace wengert

/*
 * Copyright 2026 The logfano Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Generalized Cartan matrices: validation, the standard finite and affine
// tables, and finite/affine/indefinite classification in exact arithmetic.
//
// Convention: entry (i, j) is the pairing <alpha_j, alpha_i^vee>, so
//   s_i(alpha_j)      = alpha_j      - A(i, j) alpha_i
//   s_i(alpha_j^vee)  = alpha_j^vee  - A(j, i) alpha_i^vee.
// Node indices are 1-based at every public entry point.

#ifndef LOGFANO_CARTAN_HPP
#define LOGFANO_CARTAN_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "logfano/error.hpp"
#include "logfano/rational.hpp"

namespace logfano {

enum class CartanClass { Finite, Affine, Indefinite, NotSymmetrizable };

inline std::string_view to_string(CartanClass c) {
  switch (c) {
    case CartanClass::Finite: return "Finite";
    case CartanClass::Affine: return "Affine";
    case CartanClass::Indefinite: return "Indefinite";
    case CartanClass::NotSymmetrizable: return "NotSymmetrizable";
  }
  return "Unknown";
}

class CartanMatrix {
 public:
  using Rows = std::vector<std::vector<std::int64_t>>;

  /// Checks the generalized Cartan matrix axioms; throws Error otherwise.
  /// No normalization is applied to the entries.
  static CartanMatrix validate(const Rows& entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw Error(ErrorCode::InvalidRank, "Cartan matrix must have positive rank");
    for (const auto& row : entries) {
      if (row.size() != n) throw Error(ErrorCode::NonSquare, "Cartan matrix rows must have length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (entries[i][i] != 2) {
        throw Error(ErrorCode::DiagonalNotTwo, "diagonal entry " + std::to_string(i + 1) + " is not 2");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (entries[i][j] > 0) {
          throw Error(ErrorCode::PositiveOffDiagonal,
                      "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is positive");
        }
        if ((entries[i][j] == 0) != (entries[j][i] == 0)) {
          throw Error(ErrorCode::AsymmetricZeroPattern,
                      "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                          std::to_string(j + 1) + "," + std::to_string(i + 1) + ") disagree on vanishing");
        }
      }
    }
    CartanMatrix m;
    m.rows_ = entries;
    return m;
  }

  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  /// 0-based raw access.
  std::int64_t at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  const Rows& rows() const noexcept { return rows_; }

  /// Throws IndexOutOfRange unless 1 <= node <= rank.
  void check_node(int node) const {
    if (node < 1 || node > rank()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "node " + std::to_string(node) + " outside 1.." + std::to_string(rank()));
    }
  }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  CartanMatrix() = default;
  Rows rows_;
};

inline CartanMatrix validate_gcm(const CartanMatrix::Rows& entries) { return CartanMatrix::validate(entries); }

namespace detail {

inline CartanMatrix::Rows chain(int n) {
  CartanMatrix::Rows a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  return a;
}

inline void link(CartanMatrix::Rows& a, int i, int j) {  // 1-based, simply laced
  a[i - 1][j - 1] = a[j - 1][i - 1] = -1;
}

}  // namespace detail

/// Standard Cartan matrices in Bourbaki numbering. Accepts "A3", "B2",
/// "C4", "D5", "E6".."E8", "F4", "G2" and the affine "A<n>~" (whose extra
/// node is numbered last).
inline CartanMatrix builtin(std::string_view type_name) {
  static const std::regex pattern(R"(^([A-G])([0-9]+)(~?)$)");
  const std::string name(type_name);
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw Error(ErrorCode::UnknownType, "unrecognized type '" + name + "'");
  const char family = m[1].str()[0];
  const bool affine = !m[3].str().empty();
  const int n = m[2].str().size() > 3 ? -1 : std::stoi(m[2].str());
  auto bad_rank = [&] { return Error(ErrorCode::InvalidRank, "invalid rank for type '" + name + "'"); };

  if (affine) {
    if (family != 'A') throw Error(ErrorCode::UnknownType, "only affine type A is built in, got '" + name + "'");
    if (n < 1) throw bad_rank();
    if (n == 1) return CartanMatrix::validate({{2, -2}, {-2, 2}});
    auto a = detail::chain(n + 1);
    detail::link(a, 1, n + 1);
    return CartanMatrix::validate(a);
  }

  switch (family) {
    case 'A':
      if (n < 1) throw bad_rank();
      return CartanMatrix::validate(detail::chain(n));
    case 'B': {
      if (n < 2) throw bad_rank();
      auto a = detail::chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n short
      return CartanMatrix::validate(a);
    }
    case 'C': {
      if (n < 2) throw bad_rank();
      auto a = detail::chain(n);
      a[n - 2][n - 1] = -2;  // alpha_n long
      return CartanMatrix::validate(a);
    }
    case 'D': {
      if (n < 4) throw bad_rank();
      auto a = detail::chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      detail::link(a, n - 2, n);
      return CartanMatrix::validate(a);
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad_rank();
      CartanMatrix::Rows a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      detail::link(a, 1, 3);
      detail::link(a, 2, 4);
      for (int i = 3; i < n; ++i) detail::link(a, i, i + 1);
      return CartanMatrix::validate(a);
    }
    case 'F': {
      if (n != 4) throw bad_rank();
      auto a = detail::chain(4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      return CartanMatrix::validate(a);
    }
    case 'G':
      if (n != 2) throw bad_rank();
      return CartanMatrix::validate({{2, -3}, {-1, 2}});  // alpha_1 short
    default:
      throw Error(ErrorCode::UnknownType, "unrecognized type '" + name + "'");
  }
}

/// Positive diagonal D with D_i A(i,j) = D_j A(j,i), found by propagation
/// along the Dynkin graph and scaled to coprime positive integers. Empty
/// when some cycle of the graph is inconsistent.
inline std::optional<std::vector<Rational>> symmetrizer(const CartanMatrix& gcm) {
  const int n = gcm.rank();
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    if (d[start]) continue;
    d[start] = Rational(1);
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int i = frontier.front();
      frontier.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || gcm.at(i, j) == 0) continue;
        const Rational dj = *d[i] * Rational(gcm.at(i, j), gcm.at(j, i));
        if (!d[j]) {
          d[j] = dj;
          frontier.push(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  std::int64_t den_lcm = 1;
  for (const auto& x : d) den_lcm = std::lcm(den_lcm, x->denominator());
  std::int64_t num_gcd = 0;
  for (const auto& x : d) num_gcd = std::gcd(num_gcd, (*x * den_lcm).numerator());
  std::vector<Rational> out;
  out.reserve(d.size());
  for (const auto& x : d) out.push_back(*x * den_lcm / num_gcd);
  return out;
}

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Leading principal minors are all positive iff Gaussian elimination
// without row exchanges produces only positive pivots.
inline bool sylvester_positive_definite(RationalMatrix s) {
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k] <= Rational(0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = s[i][k] / s[k][k];
      for (std::size_t j = k; j < n; ++j) s[i][j] -= f * s[k][j];
    }
  }
  return true;
}

// Symmetric elimination with diagonal pivots. Returns the kernel dimension
// if the matrix is positive semidefinite, nothing otherwise.
inline std::optional<int> semidefinite_nullity(RationalMatrix s) {
  const std::size_t n = s.size();
  int nullity = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k] < Rational(0)) return std::nullopt;
    if (s[k][k] == Rational(0)) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (s[k][j] != Rational(0)) return std::nullopt;
      }
      ++nullity;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = s[i][k] / s[k][k];
      for (std::size_t j = k; j < n; ++j) s[i][j] -= f * s[k][j];
    }
  }
  return nullity;
}

}  // namespace detail

/// Classifies through the symmetrized matrix DA: positive definite is
/// Finite, positive semidefinite with a one-dimensional kernel is Affine,
/// anything else Indefinite.
inline CartanClass classify_type(const CartanMatrix& gcm) {
  const auto d = symmetrizer(gcm);
  if (!d) return CartanClass::NotSymmetrizable;
  const int n = gcm.rank();
  detail::RationalMatrix s(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s[i][j] = (*d)[i] * gcm.at(i, j);
  }
  if (detail::sylvester_positive_definite(s)) return CartanClass::Finite;
  const auto nullity = detail::semidefinite_nullity(s);
  if (nullity && *nullity == 1) return CartanClass::Affine;
  return CartanClass::Indefinite;
}

}  // namespace logfano

#endif  // LOGFANO_CARTAN_HPP

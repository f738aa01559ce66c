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

// Words in simple reflections and their action on the root and coroot
// lattices. Group elements are stored as integer matrices of the root
// lattice action, which is faithful for every generalized Cartan matrix, so
// equality and descent tests are exact in finite and infinite types alike.

#ifndef LOGFANO_WEYL_HPP
#define LOGFANO_WEYL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "logfano/cartan.hpp"
#include "logfano/error.hpp"
#include "logfano/rational.hpp"

namespace logfano {

/// A word s_{i_1} ... s_{i_l}; letters are 1-based node indices.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> init) : letters(init) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  int operator[](std::size_t pos) const { return letters[pos]; }
  auto begin() const noexcept { return letters.begin(); }
  auto end() const noexcept { return letters.end(); }

  /// The subword with the letter at 0-based `pos` removed.
  Word omit(std::size_t pos) const {
    Word out;
    out.letters.reserve(letters.size() - 1);
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k != pos) out.letters.push_back(letters[k]);
    }
    return out;
  }

  Word reversed() const { return Word(std::vector<int>(letters.rbegin(), letters.rend())); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

inline void check_word(const CartanMatrix& gcm, const Word& word) {
  for (int letter : word) gcm.check_node(letter);
}

struct RootTag {};
struct CorootTag {};

/// Integer coordinates in the simple (co)root basis. Roots produced by
/// reflections are always all-nonnegative or all-nonpositive.
template <class Tag>
struct LatticeVector {
  std::vector<std::int64_t> coeffs;

  static LatticeVector simple(int rank, int node) {
    LatticeVector v{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)};
    v.coeffs[static_cast<std::size_t>(node - 1)] = 1;
    return v;
  }

  std::size_t size() const noexcept { return coeffs.size(); }
  std::int64_t operator[](std::size_t k) const { return coeffs[k]; }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
  }
  bool is_positive() const {
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c >= 0; });
  }
  bool is_negative() const {
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c <= 0; });
  }

  /// Signed coordinate sum.
  std::int64_t height() const {
    std::int64_t h = 0;
    for (std::int64_t c : coeffs) h = detail::checked_add(h, c);
    return h;
  }

  LatticeVector operator-() const {
    LatticeVector out = *this;
    for (auto& c : out.coeffs) c = -c;
    return out;
  }

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

using RootVector = LatticeVector<RootTag>;
using CorootVector = LatticeVector<CorootTag>;

/// A weight in fundamental-weight coordinates: coords[j] = <lambda, alpha_j^vee>.
struct Weight {
  std::vector<std::int64_t> coords;

  static Weight rho(int rank) { return Weight{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 1)}; }
  static Weight zero(int rank) { return Weight{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)}; }
};

/// <beta, gamma^vee> = sum_{k,j} gamma^vee_k A(k,j) beta_j.
inline std::int64_t pairing(const CartanMatrix& gcm, const RootVector& root, const CorootVector& coroot) {
  std::int64_t total = 0;
  for (int k = 0; k < gcm.rank(); ++k) {
    if (coroot[k] == 0) continue;
    for (int j = 0; j < gcm.rank(); ++j) {
      total = detail::checked_add(total, detail::checked_mul(detail::checked_mul(coroot[k], gcm.at(k, j)), root[j]));
    }
  }
  return total;
}

/// <lambda, beta^vee>.
inline std::int64_t pairing(const Weight& weight, const CorootVector& coroot) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < coroot.size(); ++k) {
    total = detail::checked_add(total, detail::checked_mul(weight.coords[k], coroot[k]));
  }
  return total;
}

inline RootVector reflect_root(const CartanMatrix& gcm, int node, RootVector root) {
  gcm.check_node(node);
  const int i = node - 1;
  std::int64_t c = 0;
  for (int j = 0; j < gcm.rank(); ++j) c = detail::checked_add(c, detail::checked_mul(gcm.at(i, j), root[j]));
  root.coeffs[i] = detail::checked_add(root.coeffs[i], -c);
  return root;
}

inline CorootVector reflect_coroot(const CartanMatrix& gcm, int node, CorootVector coroot) {
  gcm.check_node(node);
  const int i = node - 1;
  std::int64_t c = 0;
  for (int j = 0; j < gcm.rank(); ++j) c = detail::checked_add(c, detail::checked_mul(gcm.at(j, i), coroot[j]));
  coroot.coeffs[i] = detail::checked_add(coroot.coeffs[i], -c);
  return coroot;
}

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int dim() const noexcept { return n_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * n_ + c)]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * n_ + c)]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.n_);
    for (int r = 0; r < a.n_; ++r) {
      for (int k = 0; k < a.n_; ++k) {
        const std::int64_t x = a(r, k);
        if (x == 0) continue;
        for (int c = 0; c < a.n_; ++c) out(r, c) = detail::checked_add(out(r, c), detail::checked_mul(x, b(k, c)));
      }
    }
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(n_);
    for (std::int64_t x : data_) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

/// A Weyl group element. `action` has the images of the simple roots as
/// columns; `inverse` is carried along since every update is a product of
/// involutions. `word_bound` is an upper bound on the length, namely the
/// size of the word the element was built from.
class WeylElement {
 public:
  static WeylElement identity(int rank) {
    WeylElement e;
    e.action_ = IntMatrix::identity(rank);
    e.inverse_ = e.action_;
    return e;
  }

  static WeylElement simple_reflection(const CartanMatrix& gcm, int node) {
    gcm.check_node(node);
    WeylElement e;
    e.action_ = IntMatrix::identity(gcm.rank());
    for (int j = 0; j < gcm.rank(); ++j) e.action_(node - 1, j) -= gcm.at(node - 1, j);
    e.inverse_ = e.action_;
    e.word_bound_ = 1;
    return e;
  }

  /// Reflection along a real root with known coroot: beta -> beta - <beta, c> root.
  static WeylElement reflection_along(const CartanMatrix& gcm, const RootVector& root, const CorootVector& coroot) {
    const int n = gcm.rank();
    WeylElement e;
    e.action_ = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) {
      const std::int64_t p = pairing(gcm, RootVector::simple(n, j + 1), coroot);
      for (int r = 0; r < n; ++r) e.action_(r, j) = detail::checked_add(e.action_(r, j), -detail::checked_mul(p, root[r]));
    }
    e.inverse_ = e.action_;
    e.word_bound_ = std::numeric_limits<std::size_t>::max() / 4;
    return e;
  }

  int rank() const noexcept { return action_.dim(); }
  const IntMatrix& matrix() const noexcept { return action_; }
  const IntMatrix& inverse_matrix() const noexcept { return inverse_; }
  std::size_t word_bound() const noexcept { return word_bound_; }

  bool is_identity() const { return action_ == IntMatrix::identity(rank()); }

  WeylElement inverse() const {
    WeylElement e = *this;
    std::swap(e.action_, e.inverse_);
    return e;
  }

  RootVector apply(const RootVector& root) const { return apply_matrix(action_, root); }
  RootVector apply_inverse(const RootVector& root) const { return apply_matrix(inverse_, root); }

  /// Image of the simple root alpha_node (a column of the action matrix).
  RootVector image_of_simple(int node) const { return column(action_, node - 1); }
  RootVector inverse_image_of_simple(int node) const { return column(inverse_, node - 1); }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement e;
    e.action_ = a.action_ * b.action_;
    e.inverse_ = b.inverse_ * a.inverse_;
    e.word_bound_ = a.word_bound_ + b.word_bound_;
    return e;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

 private:
  static RootVector apply_matrix(const IntMatrix& m, const RootVector& root) {
    RootVector out{std::vector<std::int64_t>(root.size(), 0)};
    for (int r = 0; r < m.dim(); ++r) {
      for (int c = 0; c < m.dim(); ++c) {
        out.coeffs[r] = detail::checked_add(out.coeffs[r], detail::checked_mul(m(r, c), root[c]));
      }
    }
    return out;
  }
  static RootVector column(const IntMatrix& m, int c) {
    RootVector out{std::vector<std::int64_t>(static_cast<std::size_t>(m.dim()))};
    for (int r = 0; r < m.dim(); ++r) out.coeffs[r] = m(r, c);
    return out;
  }

  IntMatrix action_;
  IntMatrix inverse_;
  std::size_t word_bound_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& e) const noexcept { return e.matrix().hash(); }
};

/// s_{i_1} s_{i_2} ... s_{i_l} as a matrix; the empty word gives the identity.
inline WeylElement element_of(const CartanMatrix& gcm, const Word& word) {
  check_word(gcm, word);
  WeylElement e = WeylElement::identity(gcm.rank());
  for (int letter : word) e = e * WeylElement::simple_reflection(gcm, letter);
  return e;
}

namespace detail {

template <class Vector>
void require_sign_dichotomy(const Vector& v) {
  if (!v.is_positive() && !v.is_negative()) {
    throw Error(ErrorCode::InternalError, "reflection arithmetic produced a mixed-sign root");
  }
}

// gamma_i = s_l ... s_{i+1}(x_i) for x_i the simple (co)root of letter i,
// produced right to left by carrying the images of all simple (co)roots
// under the suffix product. `entry(i, j)` is the coefficient c with
// s_i(x_j) = x_j - c x_i.
template <class Vector, class Entry>
std::vector<Vector> suffix_images(const CartanMatrix& gcm, const Word& word, Entry entry) {
  check_word(gcm, word);
  const int n = gcm.rank();
  std::vector<Vector> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images.push_back(Vector::simple(n, j));
  std::vector<Vector> out(word.size());
  for (std::size_t pos = word.size(); pos-- > 0;) {
    const int i = word[pos] - 1;
    const Vector pivot = images[static_cast<std::size_t>(i)];
    require_sign_dichotomy(pivot);
    out[pos] = pivot;
    // suffix <- suffix * s_i
    for (int j = 0; j < n; ++j) {
      const std::int64_t c = entry(i, j);
      if (c == 0) continue;
      auto& image = images[static_cast<std::size_t>(j)];
      for (int r = 0; r < n; ++r) image.coeffs[r] = checked_add(image.coeffs[r], -checked_mul(c, pivot[r]));
    }
  }
  return out;
}

}  // namespace detail

/// (gamma_1, ..., gamma_l) with gamma_i = s_l ... s_{i+1}(alpha_{letter i}).
inline std::vector<RootVector> gamma_sequence(const CartanMatrix& gcm, const Word& word) {
  return detail::suffix_images<RootVector>(gcm, word, [&](int i, int j) { return gcm.at(i, j); });
}

/// The coroot counterpart: gamma_i^vee = s_l ... s_{i+1}(alpha_{letter i}^vee).
inline std::vector<CorootVector> gamma_coroot_sequence(const CartanMatrix& gcm, const Word& word) {
  return detail::suffix_images<CorootVector>(gcm, word, [&](int i, int j) { return gcm.at(j, i); });
}

/// A word is reduced iff every gamma_i is a positive root.
inline bool is_reduced(const CartanMatrix& gcm, const Word& word) {
  const auto gammas = gamma_sequence(gcm, word);
  return std::all_of(gammas.begin(), gammas.end(), [](const RootVector& g) { return g.is_positive(); });
}

/// l(s_i w) < l(w)  <=>  w^{-1}(alpha_i) < 0.
inline bool is_left_descent(const WeylElement& element, int node) {
  return element.inverse_image_of_simple(node).is_negative();
}

/// l(w s_i) < l(w)  <=>  w(alpha_i) < 0.
inline bool is_right_descent(const WeylElement& element, int node) {
  return element.image_of_simple(node).is_negative();
}

/// Greedy descent: repeatedly strip the smallest left descent. The stripped
/// letters, in order, form the lexicographically smallest reduced word.
inline Word canonical_reduced_word(const CartanMatrix& gcm, const WeylElement& element) {
  Word out;
  WeylElement current = element;
  const std::size_t cap = element.word_bound();
  while (!current.is_identity()) {
    if (out.size() >= cap) throw Error(ErrorCode::InternalError, "greedy descent exceeded the word-length bound");
    int descent = 0;
    for (int i = 1; i <= gcm.rank(); ++i) {
      if (is_left_descent(current, i)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) throw Error(ErrorCode::InternalError, "non-identity element without a descent");
    current = WeylElement::simple_reflection(gcm, descent) * current;
    out.letters.push_back(descent);
  }
  return out;
}

inline std::size_t length(const CartanMatrix& gcm, const WeylElement& element) {
  return canonical_reduced_word(gcm, element).size();
}

/// {gamma_1, ..., gamma_l} for a reduced word; these are distinct.
inline std::set<RootVector> inversions(const CartanMatrix& gcm, const Word& word) {
  const auto gammas = gamma_sequence(gcm, word);
  for (const auto& g : gammas) {
    if (!g.is_positive()) throw Error(ErrorCode::NotReduced, "word is not reduced");
  }
  std::set<RootVector> out(gammas.begin(), gammas.end());
  if (out.size() != gammas.size()) throw Error(ErrorCode::InternalError, "reduced word with repeated inversion root");
  return out;
}

/// The coroot of a real root, beta^vee = 2 beta / (beta, beta), via the
/// invariant form (alpha_i, alpha_j) = D_i A(i,j). Requires a symmetrizable
/// matrix.
inline CorootVector coroot_of(const CartanMatrix& gcm, const RootVector& root) {
  const auto d = symmetrizer(gcm);
  if (!d) throw Error(ErrorCode::NotSymmetrizable, "coroot from root needs a symmetrizable Cartan matrix");
  const int n = gcm.rank();
  Rational norm(0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) norm += (*d)[i] * gcm.at(i, j) * root[i] * root[j];
  }
  if (norm <= Rational(0)) throw Error(ErrorCode::InvalidInput, "not a real root (nonpositive norm)");
  CorootVector out{std::vector<std::int64_t>(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j) {
    const Rational c = Rational(2) * (*d)[j] * root[j] / norm;
    if (c.denominator() != 1) throw Error(ErrorCode::InvalidInput, "not a real root (non-integral coroot)");
    out.coeffs[j] = c.numerator();
  }
  return out;
}

}  // namespace logfano

#endif  // LOGFANO_WEYL_HPP

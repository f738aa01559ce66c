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

// Test-only oracles. Nothing here calls into the library beyond reading the
// raw Cartan entries: reflections are explicit matrices multiplied out in
// full, lengths come from a plain BFS and Bruhat order from enumerating all
// subwords.

#ifndef LOGFANO_TESTS_BRUTE_FORCE_HPP
#define LOGFANO_TESTS_BRUTE_FORCE_HPP

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace brute {

using Rows = std::vector<std::vector<std::int64_t>>;
using Mat = std::vector<std::vector<std::int64_t>>;
using Vec = std::vector<std::int64_t>;

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// s_i on the root lattice: alpha_j -> alpha_j - A[i][j] alpha_i  (column j).
inline Mat root_reflection(const Rows& a, int letter) {
  const std::size_t n = a.size();
  const std::size_t i = static_cast<std::size_t>(letter - 1);
  Mat s = identity(n);
  for (std::size_t j = 0; j < n; ++j) s[i][j] -= a[i][j];
  return s;
}

// s_i on the coroot lattice: alpha_j^v -> alpha_j^v - A[j][i] alpha_i^v.
inline Mat coroot_reflection(const Rows& a, int letter) {
  const std::size_t n = a.size();
  const std::size_t i = static_cast<std::size_t>(letter - 1);
  Mat s = identity(n);
  for (std::size_t j = 0; j < n; ++j) s[i][j] -= a[j][i];
  return s;
}

inline Mat product(const Rows& a, const std::vector<int>& word, bool coroot = false) {
  Mat m = identity(a.size());
  for (int letter : word) m = mul(m, coroot ? coroot_reflection(a, letter) : root_reflection(a, letter));
  return m;
}

inline Vec column(const Mat& m, std::size_t c) {
  Vec v(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) v[r] = m[r][c];
  return v;
}

// gamma_i = s_l ... s_{i+1}(alpha_i), each one from a fresh full product.
inline std::vector<Vec> gammas(const Rows& a, const std::vector<int>& word, bool coroot = false) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    std::vector<int> suffix_reversed(word.rbegin(), word.rend() - static_cast<std::ptrdiff_t>(i) - 1);
    out.push_back(column(product(a, suffix_reversed, coroot), static_cast<std::size_t>(word[i] - 1)));
  }
  return out;
}

inline std::int64_t sum(const Vec& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// BFS distances in the Cayley graph, up to max_depth.
inline std::map<Mat, std::size_t> bfs_lengths(const Rows& a, std::size_t max_depth = 1000) {
  std::map<Mat, std::size_t> dist;
  std::queue<Mat> q;
  dist[identity(a.size())] = 0;
  q.push(identity(a.size()));
  while (!q.empty()) {
    Mat m = q.front();
    q.pop();
    const std::size_t d = dist[m];
    if (d == max_depth) continue;
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
      Mat next = mul(m, root_reflection(a, i));
      if (dist.emplace(next, d + 1).second) q.push(next);
    }
  }
  return dist;
}

// Bruhat covers of w: elements of length l - 1 that are products of some
// subword (subword property), found by enumerating all 2^l subwords.
inline std::set<Mat> covers_by_subwords(const Rows& a, const std::vector<int>& word,
                                        const std::map<Mat, std::size_t>& lengths) {
  std::set<Mat> out;
  const std::size_t l = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    Mat m = product(a, sub);
    auto it = lengths.find(m);
    if (it != lengths.end() && it->second + 1 == l) out.insert(m);
  }
  return out;
}

inline std::vector<int> random_word(std::mt19937& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, rank);
  std::vector<int> w(len(rng));
  for (auto& x : w) x = letter(rng);
  return w;
}

}  // namespace brute

#endif  // LOGFANO_TESTS_BRUTE_FORCE_HPP

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

// Brute-force machinery used to cross-check the divisor calculus: Cayley
// graph enumeration, Bruhat order by the subword property, Bruhat covers,
// reduced-word enumeration and exhaustive certificate sweeps.

#ifndef LOGFANO_ORACLE_HPP
#define LOGFANO_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "logfano/cartan.hpp"
#include "logfano/divisor.hpp"
#include "logfano/error.hpp"
#include "logfano/weyl.hpp"

namespace logfano {

inline constexpr std::size_t kDefaultElementCap = 10000;

struct GroupTable {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<WeylElement> elements;  // BFS order
  std::vector<std::size_t> lengths;   // BFS depth
  std::vector<Word> words;            // canonical reduced words
  std::vector<std::vector<std::size_t>> right;  // right[e][i-1] = index of e s_i, or npos
  std::vector<std::vector<std::size_t>> left;   // left[e][i-1]  = index of s_i e, or npos
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index;
  bool complete = false;  // false when truncated by a length bound
  std::size_t depth_bound = std::numeric_limits<std::size_t>::max();

  std::size_t size() const noexcept { return elements.size(); }

  std::optional<std::size_t> find(const WeylElement& e) const {
    const auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// True when every element of length <= l is present.
  bool covers_length(std::size_t l) const { return complete || l <= depth_bound; }
};

/// Breadth-first search of the right Cayley graph from the identity. Without
/// a cap the type must be finite. `max_length` truncates the search, which
/// is how infinite groups are explored.
inline GroupTable enumerate_group(const CartanMatrix& gcm, std::optional<std::size_t> cap,
                                  std::optional<std::size_t> max_length = std::nullopt) {
  if (!cap && classify_type(gcm) != CartanClass::Finite) {
    throw Error(ErrorCode::NotFiniteType, "enumeration of a non-finite Weyl group needs an element cap");
  }
  const int n = gcm.rank();
  GroupTable table;
  if (max_length) table.depth_bound = *max_length;

  auto add = [&](WeylElement e, std::size_t depth) {
    if (cap && table.elements.size() >= *cap) {
      throw Error(ErrorCode::CapExceeded, "group enumeration exceeded cap " + std::to_string(*cap));
    }
    table.index.emplace(e, table.elements.size());
    table.elements.push_back(std::move(e));
    table.lengths.push_back(depth);
    table.right.emplace_back(static_cast<std::size_t>(n), GroupTable::npos);
  };

  add(WeylElement::identity(n), 0);
  bool truncated = false;
  for (std::size_t k = 0; k < table.elements.size(); ++k) {
    const std::size_t depth = table.lengths[k];
    for (int i = 1; i <= n; ++i) {
      WeylElement next = table.elements[k] * WeylElement::simple_reflection(gcm, i);
      if (const auto found = table.find(next)) {
        table.right[k][i - 1] = *found;
        continue;
      }
      if (max_length && depth + 1 > *max_length) {
        truncated = true;
        continue;
      }
      add(std::move(next), depth + 1);
      table.right[k][i - 1] = table.elements.size() - 1;
    }
  }
  table.complete = !truncated;

  table.left.assign(table.size(), std::vector<std::size_t>(static_cast<std::size_t>(n), GroupTable::npos));
  table.words.reserve(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    for (int i = 1; i <= n; ++i) {
      if (const auto found = table.find(WeylElement::simple_reflection(gcm, i) * table.elements[k])) {
        table.left[k][i - 1] = *found;
      }
    }
    table.words.push_back(canonical_reduced_word(gcm, table.elements[k]));
  }
  return table;
}

/// u <= w in Bruhat order, decided by the subword property: scanning the
/// reduced word of w from the right, peel off each letter that is a right
/// descent of the remaining part of u. u <= w iff nothing of u remains.
inline bool bruhat_leq(const CartanMatrix& gcm, const WeylElement& u, const WeylElement& w, const Word& word_w) {
  if (!is_reduced(gcm, word_w)) throw Error(ErrorCode::NotReduced, "Bruhat comparison needs a reduced word");
  if (!(element_of(gcm, word_w) == w)) throw Error(ErrorCode::InvalidInput, "word does not represent w");
  WeylElement rest = u;
  for (std::size_t pos = word_w.size(); pos-- > 0;) {
    if (is_right_descent(rest, word_w[pos])) rest = rest * WeylElement::simple_reflection(gcm, word_w[pos]);
  }
  return rest.is_identity();
}

/// Elements v <= w with l(v) = l(w) - 1. With a table, every element of the
/// right length is tested against w; without one, the reduced subwords of
/// length l(w) - 1 are collected.
inline std::vector<WeylElement> bruhat_covers(const CartanMatrix& gcm, const Word& word_w,
                                              const GroupTable* table = nullptr) {
  if (!is_reduced(gcm, word_w)) throw Error(ErrorCode::NotReduced, "Bruhat covers need a reduced word");
  std::vector<WeylElement> out;
  if (word_w.empty()) return out;
  const std::size_t target = word_w.size() - 1;
  if (table) {
    if (!table->covers_length(target)) throw Error(ErrorCode::NotFiniteType, "group table does not reach the needed length");
    const WeylElement w = element_of(gcm, word_w);
    for (std::size_t k = 0; k < table->size(); ++k) {
      if (table->lengths[k] == target && bruhat_leq(gcm, table->elements[k], w, word_w)) out.push_back(table->elements[k]);
    }
    return out;
  }
  std::unordered_map<WeylElement, bool, WeylElementHash> seen;
  for (std::size_t pos = 0; pos < word_w.size(); ++pos) {
    const Word sub = word_w.omit(pos);
    if (!is_reduced(gcm, sub)) continue;
    WeylElement v = element_of(gcm, sub);
    if (seen.emplace(v, true).second) out.push_back(std::move(v));
  }
  return out;
}

/// Every reduced word of `element`, sorted lexicographically. A reduced word
/// of w ends in i exactly when i is a right descent of w.
inline std::vector<Word> all_reduced_words(const CartanMatrix& gcm, const WeylElement& element,
                                           std::size_t cap = 100000) {
  std::unordered_map<WeylElement, std::vector<Word>, WeylElementHash> memo;
  auto words_of = [&](auto&& self, const WeylElement& w) -> const std::vector<Word>& {
    if (const auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (w.is_identity()) {
      out.emplace_back();
    } else {
      for (int i = 1; i <= gcm.rank(); ++i) {
        if (!is_right_descent(w, i)) continue;
        for (const Word& prefix : self(self, w * WeylElement::simple_reflection(gcm, i))) {
          Word word = prefix;
          word.letters.push_back(i);
          out.push_back(std::move(word));
          if (out.size() > cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " reduced words");
        }
      }
    }
    return memo.emplace(w, std::move(out)).first->second;
  };
  std::vector<Word> result = words_of(words_of, element);
  std::sort(result.begin(), result.end());
  return result;
}

struct SweepOptions {
  std::optional<std::size_t> max_length;
  bool all_words = false;             // every reduced word of every element
  std::size_t all_words_up_to = 6;    // otherwise: all words up to this length, canonical word beyond
  std::optional<std::size_t> cap;     // element cap; required for non-finite types
  std::optional<std::int64_t> fixed_m;  // default: max a_j + 1 per word
  std::size_t reduced_word_cap = 100000;
  unsigned threads = 0;               // 0: hardware concurrency
};

struct SweepFailure {
  Word word;
  std::string check;
  std::string detail;

  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepReport {
  std::string type;
  std::size_t elements_checked = 0;
  std::size_t words_checked = 0;
  std::vector<SweepFailure> failures;
  std::int64_t min_b = std::numeric_limits<std::int64_t>::max();
  std::size_t cover_checks = 0;
  std::size_t curve_checks = 0;
  std::size_t max_length_seen = 0;
};

namespace detail {

inline std::string join_word(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return "(" + s + ")";
}

struct ElementSweep {
  std::size_t words_checked = 0;
  std::size_t cover_checks = 0;
  std::size_t curve_checks = 0;
  std::int64_t min_b = std::numeric_limits<std::int64_t>::max();
  std::vector<SweepFailure> failures;
};

inline ElementSweep sweep_element(const CartanMatrix& gcm, const GroupTable& table, std::size_t k,
                                  const SweepOptions& options, bool symmetrizable) {
  ElementSweep result;
  const WeylElement& element = table.elements[k];
  const std::size_t depth = table.lengths[k];
  const Word& canonical = table.words[k];
  auto fail = [&](const Word& w, std::string check, std::string detail) {
    result.failures.push_back({w, std::move(check), std::move(detail)});
  };

  if (canonical.size() != depth) {
    fail(canonical, "oracle_length", "BFS depth " + std::to_string(depth) + " vs greedy length " +
                                         std::to_string(canonical.size()));
  }

  std::vector<Word> words;
  if (options.all_words || depth <= options.all_words_up_to) {
    words = all_reduced_words(gcm, element, options.reduced_word_cap);
  } else {
    words = {canonical};
  }

  const bool table_covers = table.covers_length(depth == 0 ? 0 : depth - 1);
  std::optional<std::vector<std::pair<Word, std::int64_t>>> reference_divisors;
  const Weight rho = Weight::rho(gcm.rank());

  for (const Word& word : words) {
    ++result.words_checked;
    if (word.size() != depth || !(element_of(gcm, word) == element) || !is_reduced(gcm, word)) {
      fail(word, "reduced_word", "not a reduced word of the element " + join_word(canonical));
      continue;
    }
    try {
      const auto cert = options.fixed_m ? log_fano_certificate(gcm, word, options.fixed_m)
                                        : log_fano_certificate(gcm, word);
      for (std::int64_t b : cert.b) result.min_b = std::min(result.min_b, b);
      const auto& c = cert.checks;
      const std::pair<const char*, bool> verdicts[] = {
          {"lemma_positive_b", c.lemma_positive_b},         {"gammas_positive", c.gammas_positive},
          {"gammas_distinct", c.gammas_distinct},           {"pullback_identity", c.pullback_identity},
          {"floor_condition", c.floor_condition},           {"pushforward_match", c.pushforward_match},
          {"delta_effective_subunit", c.delta_effective_subunit},
          {"anti_ample_coefficients", c.anti_ample_coefficients}};
      for (const auto& [name, ok] : verdicts) {
        if (!ok) fail(word, name, "certificate verdict false");
      }
      if (cert.overall != c.all()) fail(word, "overall", "overall is not the conjunction of the verdicts");

      for (const auto& d : cert.schubert.divisors) {
        if (d.a != cert.b[d.position - 1]) fail(word, "a_equals_b", "a_j differs from b_{i(j)}");
      }

      // Cover correspondence against the independent oracle.
      std::set<Word> label_set;
      for (const auto& d : cert.schubert.divisors) label_set.insert(d.label);
      std::set<Word> cover_set;
      for (const auto& v : bruhat_covers(gcm, word, table_covers ? &table : nullptr)) {
        const auto idx = table.find(v);
        cover_set.insert(idx ? table.words[*idx] : canonical_reduced_word(gcm, v));
      }
      ++result.cover_checks;
      if (label_set != cover_set || cert.schubert.divisors.size() != cover_set.size()) {
        fail(word, "cover_correspondence",
             std::to_string(label_set.size()) + " divisor labels vs " + std::to_string(cover_set.size()) + " covers");
      }

      if (inversions(gcm, word).size() != depth) fail(word, "inversion_count", "|inversions| differs from length");

      // Curve route: the coroot comes from the root through the invariant form.
      for (std::size_t i = 0; i < word.size(); ++i) {
        const std::int64_t degree = symmetrizable ? curve_intersection(gcm, rho, cert.gamma[i])
                                                  : curve_intersection(rho, cert.gamma_coroot[i]);
        ++result.curve_checks;
        if (degree != cert.b[i]) {
          fail(word, "curve_intersection", "position " + std::to_string(i + 1) + ": curve degree " +
                                               std::to_string(degree) + " vs b " + std::to_string(cert.b[i]));
        }
      }

      std::vector<std::pair<Word, std::int64_t>> divisors;
      for (const auto& d : cert.schubert.divisors) divisors.emplace_back(d.label, d.a);
      std::sort(divisors.begin(), divisors.end());
      if (!reference_divisors) {
        reference_divisors = std::move(divisors);
      } else if (*reference_divisors != divisors) {
        fail(word, "reduced_word_independence", "Schubert divisors differ from those of " + join_word(words.front()));
      }
    } catch (const Error& e) {
      fail(word, "error", e.what());
    }
  }
  return result;
}

}  // namespace detail

/// Runs the log Fano certificate and every cross-check on each element up
/// to `max_length`. Elements are checked concurrently; the report is
/// assembled in BFS order so it does not depend on scheduling.
inline SweepReport sweep_certificates(const CartanMatrix& gcm, const std::string& type_name,
                                      const SweepOptions& options = {}) {
  const GroupTable table = enumerate_group(gcm, options.cap, options.max_length);
  const bool symmetrizable = symmetrizer(gcm).has_value();

  std::vector<detail::ElementSweep> results(table.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> errored{false};
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k = next++; k < table.size(); k = next++) {
      try {
        results[k] = detail::sweep_element(gcm, table, k, options, symmetrizable);
      } catch (...) {
        if (!errored.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, table.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.type = type_name;
  report.elements_checked = table.size();
  for (std::size_t k = 0; k < table.size(); ++k) {
    auto& r = results[k];
    report.words_checked += r.words_checked;
    report.cover_checks += r.cover_checks;
    report.curve_checks += r.curve_checks;
    report.min_b = std::min(report.min_b, r.min_b);
    report.max_length_seen = std::max(report.max_length_seen, table.lengths[k]);
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

struct NonReducedReport {
  std::size_t words_checked = 0;
  std::size_t nonreduced_words = 0;
  std::size_t with_negative_anticanonical = 0;
  std::size_t with_nonpositive_b = 0;
  std::vector<Word> negative_examples;  // first few words with a negative anticanonical coefficient
  std::vector<SweepFailure> failures;
};

/// Every word of length <= max_length that is not reduced: the Bott-Samelson
/// anticanonical coefficients must equal <rho, gamma_i^vee> + 1, with
/// gamma_i^vee recomputed by applying the reflections one at a time.
inline NonReducedReport sweep_nonreduced(const CartanMatrix& gcm, std::size_t max_length) {
  NonReducedReport report;
  const int n = gcm.rank();
  const Weight rho = Weight::rho(n);
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& word : frontier) {
      ++report.words_checked;
      if (!is_reduced(gcm, word)) {
        ++report.nonreduced_words;
        try {
          const RationalDivisor k = canonical_divisor_bs(gcm, word);
          bool negative = false;
          bool nonpositive_b = false;
          for (std::size_t i = 0; i < word.size(); ++i) {
            CorootVector g = CorootVector::simple(n, word[i]);
            for (std::size_t j = i + 1; j < word.size(); ++j) g = reflect_coroot(gcm, word[j], g);
            const std::int64_t expected = pairing(rho, g) + 1;
            if (-k.coefficients[i] != Rational(expected)) {
              report.failures.push_back({word, "anticanonical", "position " + std::to_string(i + 1)});
            }
            negative = negative || expected < 0;
            nonpositive_b = nonpositive_b || expected <= 1;
          }
          if (negative) {
            ++report.with_negative_anticanonical;
            if (report.negative_examples.size() < 8) report.negative_examples.push_back(word);
          }
          if (nonpositive_b) ++report.with_nonpositive_b;
        } catch (const Error& e) {
          report.failures.push_back({word, "error", e.what()});
        }
      }
      if (len < max_length) {
        for (int i = 1; i <= n; ++i) {
          Word w = word;
          w.letters.push_back(i);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return report;
}

}  // namespace logfano

#endif  // LOGFANO_ORACLE_HPP

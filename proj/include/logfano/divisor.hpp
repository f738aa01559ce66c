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

// Boundary divisors of a Bott-Samelson resolution X~ -> X of a Schubert
// variety and the log Fano certificate for the pair (X, Delta).
//
// For a word s_1 ... s_l the Bott-Samelson boundary has one component per
// position. The rho-section divisor is sum b_i d~_i with b_i = <rho,
// gamma_i^vee>. For a reduced word, position i maps onto a Schubert
// boundary divisor exactly when the subword omitting letter i is reduced;
// the divisor is labeled by the canonical word of that covered element and
// carries a = b_i. All other positions are collapsed.
//
// With an integer M > max a_j:
//   K_X  = -sum (a_j + 1) d_j,      Delta  = sum (1 - a_j / M) d_j,
//   K_X~ = -sum (b_i + 1) d~_i,     Delta~ = sum (1 - b_i / M) d~_i,
// and the certificate checks every coefficient-level identity relating them.
// Ampleness and klt are reported as the coefficient conditions they reduce
// to (positivity of -(K + Delta), floor of Delta~), not as geometric proofs.

#ifndef LOGFANO_DIVISOR_HPP
#define LOGFANO_DIVISOR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "logfano/cartan.hpp"
#include "logfano/error.hpp"
#include "logfano/rational.hpp"
#include "logfano/weyl.hpp"

namespace logfano {

struct BSBoundary {
  Word word;
  std::vector<std::int64_t> b;
};

/// b_i = <rho, gamma_i^vee>, the coroot height. Non-reduced words are
/// accepted; their entries may be nonpositive.
inline BSBoundary bs_boundary(const CartanMatrix& gcm, const Word& word) {
  BSBoundary out{word, {}};
  const auto coroots = gamma_coroot_sequence(gcm, word);
  out.b.reserve(coroots.size());
  const Weight rho = Weight::rho(gcm.rank());
  for (const auto& c : coroots) out.b.push_back(pairing(rho, c));
  return out;
}

struct SchubertDivisor {
  Word label;            // canonical reduced word of the covered element v_i
  std::size_t position;  // i(j), 1-based
  std::int64_t a;

  friend bool operator==(const SchubertDivisor&, const SchubertDivisor&) = default;
};

struct SchubertBoundary {
  std::vector<SchubertDivisor> divisors;  // ordered by position
  std::vector<std::size_t> collapsed;     // 1-based positions

  std::vector<Word> labels() const {
    std::vector<Word> out;
    out.reserve(divisors.size());
    for (const auto& d : divisors) out.push_back(d.label);
    return out;
  }
  std::vector<std::int64_t> a() const {
    std::vector<std::int64_t> out;
    out.reserve(divisors.size());
    for (const auto& d : divisors) out.push_back(d.a);
    return out;
  }
};

inline void require_reduced(const CartanMatrix& gcm, const Word& word) {
  if (!is_reduced(gcm, word)) throw Error(ErrorCode::NotReduced, "word is not reduced");
}

inline SchubertBoundary schubert_boundary(const CartanMatrix& gcm, const Word& word, const BSBoundary& bs) {
  if (bs.word != word) throw Error(ErrorCode::LengthMismatch, "boundary data belongs to a different word");
  require_reduced(gcm, word);
  SchubertBoundary out;
  std::set<Word> seen;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const Word sub = word.omit(pos);
    if (!is_reduced(gcm, sub)) {
      out.collapsed.push_back(pos + 1);
      continue;
    }
    Word label = canonical_reduced_word(gcm, element_of(gcm, sub));
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::InternalError, "two positions map to the same Schubert divisor");
    }
    out.divisors.push_back({std::move(label), pos + 1, bs.b[pos]});
  }
  return out;
}

inline SchubertBoundary schubert_boundary(const CartanMatrix& gcm, const Word& word) {
  return schubert_boundary(gcm, word, bs_boundary(gcm, word));
}

enum class DivisorSpace { BottSamelson, Schubert };

/// Exact rational combination of boundary components. Schubert-side
/// divisors carry the label of each component in `labels`.
struct RationalDivisor {
  DivisorSpace space = DivisorSpace::BottSamelson;
  std::vector<Rational> coefficients;
  std::vector<Word> labels;

  friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;
};

inline RationalDivisor bs_divisor(std::vector<Rational> coefficients) {
  return {DivisorSpace::BottSamelson, std::move(coefficients), {}};
}

inline RationalDivisor canonical_divisor_bs(const CartanMatrix& gcm, const Word& word) {
  const auto bs = bs_boundary(gcm, word);
  RationalDivisor k{DivisorSpace::BottSamelson, {}, {}};
  for (std::int64_t b : bs.b) k.coefficients.emplace_back(-(b + 1));
  return k;
}

inline RationalDivisor canonical_divisor_schubert(const SchubertBoundary& boundary) {
  RationalDivisor k{DivisorSpace::Schubert, {}, boundary.labels()};
  for (const auto& d : boundary.divisors) k.coefficients.emplace_back(-(d.a + 1));
  return k;
}

inline RationalDivisor canonical_divisor_schubert(const CartanMatrix& gcm, const Word& word) {
  return canonical_divisor_schubert(schubert_boundary(gcm, word));
}

struct BoundaryDelta {
  RationalDivisor delta;        // Schubert side, c_j = 1 - a_j / M
  RationalDivisor delta_tilde;  // Bott-Samelson side, c~_i = 1 - b_i / M
};

inline std::int64_t max_a(const SchubertBoundary& boundary) {
  std::int64_t m = 0;
  for (const auto& d : boundary.divisors) m = std::max(m, d.a);
  return m;
}

inline void require_valid_m(const SchubertBoundary& boundary, std::int64_t m) {
  if (m <= 0 || m <= max_a(boundary)) {
    throw Error(ErrorCode::MTooSmall,
                "M = " + std::to_string(m) + " must exceed every a_j (max " + std::to_string(max_a(boundary)) + ")");
  }
}

inline BoundaryDelta boundary_delta(const BSBoundary& bs, const SchubertBoundary& boundary, std::int64_t m) {
  require_valid_m(boundary, m);
  BoundaryDelta out{{DivisorSpace::Schubert, {}, boundary.labels()}, {DivisorSpace::BottSamelson, {}, {}}};
  for (const auto& d : boundary.divisors) out.delta.coefficients.push_back(Rational(1) - Rational(d.a, m));
  for (std::int64_t b : bs.b) out.delta_tilde.coefficients.push_back(Rational(1) - Rational(b, m));
  return out;
}

inline BoundaryDelta boundary_delta(const CartanMatrix& gcm, const Word& word, std::int64_t m) {
  const auto bs = bs_boundary(gcm, word);
  return boundary_delta(bs, schubert_boundary(gcm, word, bs), m);
}

struct PullbackCheck {
  bool holds = true;
  std::vector<Rational> lhs;        // ((M+1)/M) (-b_i), the pullback of K_X + Delta
  std::vector<Rational> rhs;        // -(b_i + 1) + (1 - b_i / M)
  std::vector<Rational> residuals;  // lhs - rhs
};

/// The pullback of K_X + Delta equals K_X~ + Delta~ coefficientwise. The
/// right-hand side is assembled from the independently built K_X~ and Delta~.
inline PullbackCheck pullback_identity_check(const BSBoundary& bs, const RationalDivisor& k_bs,
                                             const RationalDivisor& delta_tilde, std::int64_t m) {
  const std::size_t l = bs.b.size();
  if (k_bs.coefficients.size() != l || delta_tilde.coefficients.size() != l) {
    throw Error(ErrorCode::LengthMismatch, "divisors do not match the word length");
  }
  PullbackCheck out;
  for (std::size_t i = 0; i < l; ++i) {
    const Rational lhs = Rational(m + 1, m) * Rational(-bs.b[i]);
    const Rational rhs = k_bs.coefficients[i] + delta_tilde.coefficients[i];
    out.lhs.push_back(lhs);
    out.rhs.push_back(rhs);
    out.residuals.push_back(lhs - rhs);
    if (lhs != rhs) out.holds = false;
  }
  return out;
}

inline PullbackCheck pullback_identity_check(const CartanMatrix& gcm, const Word& word, std::int64_t m) {
  const auto bs = bs_boundary(gcm, word);
  const auto deltas = boundary_delta(bs, schubert_boundary(gcm, word, bs), m);
  return pullback_identity_check(bs, canonical_divisor_bs(gcm, word), deltas.delta_tilde, m);
}

/// floor(c_i) <= 0 for every coefficient, i.e. every c_i < 1.
inline bool floor_condition(const RationalDivisor& divisor) {
  return std::all_of(divisor.coefficients.begin(), divisor.coefficients.end(),
                     [](const Rational& c) { return floor_of(c) <= 0; });
}

/// phi_* sum d_i d~_i = sum_j d_{i(j)} d_j; collapsed components vanish.
inline RationalDivisor pushforward(const SchubertBoundary& boundary, std::size_t word_length,
                                   const RationalDivisor& divisor) {
  if (divisor.space != DivisorSpace::BottSamelson || divisor.coefficients.size() != word_length) {
    throw Error(ErrorCode::LengthMismatch, "pushforward needs a Bott-Samelson divisor indexed by word positions");
  }
  RationalDivisor out{DivisorSpace::Schubert, {}, boundary.labels()};
  for (const auto& d : boundary.divisors) out.coefficients.push_back(divisor.coefficients[d.position - 1]);
  return out;
}

inline RationalDivisor pushforward(const CartanMatrix& gcm, const Word& word, const RationalDivisor& divisor) {
  return pushforward(schubert_boundary(gcm, word), word.size(), divisor);
}

/// Degree of L(lambda) on the T-curve joining eB and s_beta B: <lambda, beta^vee>.
inline std::int64_t curve_intersection(const Weight& weight, const CorootVector& coroot) {
  if (!coroot.is_positive()) throw Error(ErrorCode::NotPositiveRoot, "curve degree needs a positive root");
  return pairing(weight, coroot);
}

/// Same, for a positive real root given in the root basis; its coroot is
/// obtained from the invariant form.
inline std::int64_t curve_intersection(const CartanMatrix& gcm, const Weight& weight, const RootVector& root) {
  if (!root.is_positive()) throw Error(ErrorCode::NotPositiveRoot, "curve degree needs a positive root");
  return curve_intersection(weight, coroot_of(gcm, root));
}

/// T-fixed points of the Bott-Samelson variety are subsets I of [l];
/// p(I) lies on d~_j iff j is not in I. The curve C_i joins p([l]) and
/// p([l] \ {i}).
struct IncidenceModel {
  std::size_t length = 0;
  std::size_t curve = 0;
  std::vector<std::size_t> full_endpoint;   // [l]
  std::vector<std::size_t> moved_endpoint;  // [l] \ {i}
  // intersections[j-1] lists the endpoints of C_i lying on d~_j
  std::vector<std::vector<std::vector<std::size_t>>> intersections;

  static bool on_divisor(const std::vector<std::size_t>& fixed_point, std::size_t j) {
    return std::find(fixed_point.begin(), fixed_point.end(), j) == fixed_point.end();
  }

  /// Divisors met by the curve (1-based).
  std::vector<std::size_t> meets() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < intersections.size(); ++j) {
      if (!intersections[j].empty()) out.push_back(j + 1);
    }
    return out;
  }
};

inline IncidenceModel bs_incidence_model(std::size_t length, std::size_t curve) {
  if (curve < 1 || curve > length) {
    throw Error(ErrorCode::IndexOutOfRange,
                "curve " + std::to_string(curve) + " outside 1.." + std::to_string(length));
  }
  IncidenceModel out;
  out.length = length;
  out.curve = curve;
  for (std::size_t k = 1; k <= length; ++k) {
    out.full_endpoint.push_back(k);
    if (k != curve) out.moved_endpoint.push_back(k);
  }
  out.intersections.resize(length);
  for (std::size_t j = 1; j <= length; ++j) {
    for (const auto* endpoint : {&out.full_endpoint, &out.moved_endpoint}) {
      if (IncidenceModel::on_divisor(*endpoint, j)) out.intersections[j - 1].push_back(*endpoint);
    }
  }
  return out;
}

inline IncidenceModel bs_incidence_model(const Word& word, std::size_t curve) {
  return bs_incidence_model(word.size(), curve);
}

struct CertificateChecks {
  bool lemma_positive_b = false;
  bool gammas_positive = false;
  bool gammas_distinct = false;
  bool pullback_identity = false;
  bool floor_condition = false;
  bool pushforward_match = false;
  bool delta_effective_subunit = false;
  bool anti_ample_coefficients = false;

  bool all() const {
    return lemma_positive_b && gammas_positive && gammas_distinct && pullback_identity && floor_condition &&
           pushforward_match && delta_effective_subunit && anti_ample_coefficients;
  }
};

struct LogFanoCertificate {
  Word word;
  std::int64_t m = 0;
  std::vector<RootVector> gamma;
  std::vector<CorootVector> gamma_coroot;
  std::vector<std::int64_t> b;
  SchubertBoundary schubert;
  std::vector<std::int64_t> a;
  RationalDivisor k_bs;
  RationalDivisor k_schubert;
  RationalDivisor delta;
  RationalDivisor delta_tilde;
  std::vector<Rational> anti_canonical_pair;  // -(K_X + Delta)
  std::vector<Rational> pullback_residuals;
  CertificateChecks checks;
  bool overall = false;
};

/// Runs every coefficient-level step of the log Fano argument for a reduced
/// word. The default M is max a_j + 1.
inline LogFanoCertificate log_fano_certificate(const CartanMatrix& gcm, const Word& word,
                                               std::optional<std::int64_t> m = std::nullopt) {
  LogFanoCertificate cert;
  cert.word = word;
  cert.gamma = gamma_sequence(gcm, word);
  cert.gamma_coroot = gamma_coroot_sequence(gcm, word);
  require_reduced(gcm, word);

  const BSBoundary bs = bs_boundary(gcm, word);
  cert.b = bs.b;
  cert.schubert = schubert_boundary(gcm, word, bs);
  cert.a = cert.schubert.a();
  cert.m = m.value_or(max_a(cert.schubert) + 1);
  const BoundaryDelta deltas = boundary_delta(bs, cert.schubert, cert.m);
  cert.delta = deltas.delta;
  cert.delta_tilde = deltas.delta_tilde;
  cert.k_bs = canonical_divisor_bs(gcm, word);
  cert.k_schubert = canonical_divisor_schubert(cert.schubert);

  auto& checks = cert.checks;
  checks.gammas_positive = std::all_of(cert.gamma.begin(), cert.gamma.end(), [](const auto& g) { return g.is_positive(); }) &&
                           std::all_of(cert.gamma_coroot.begin(), cert.gamma_coroot.end(),
                                       [](const auto& g) { return g.is_positive(); });
  checks.gammas_distinct = std::set<RootVector>(cert.gamma.begin(), cert.gamma.end()).size() == cert.gamma.size();
  checks.lemma_positive_b = std::all_of(cert.b.begin(), cert.b.end(), [](std::int64_t b) { return b >= 1; });

  const PullbackCheck pullback = pullback_identity_check(bs, cert.k_bs, cert.delta_tilde, cert.m);
  cert.pullback_residuals = pullback.residuals;
  checks.pullback_identity = pullback.holds;
  checks.floor_condition = floor_condition(cert.delta_tilde);

  std::vector<Rational> b_section;
  for (std::int64_t b : cert.b) b_section.emplace_back(b);
  RationalDivisor a_section{DivisorSpace::Schubert, {}, cert.schubert.labels()};
  for (std::int64_t a : cert.a) a_section.coefficients.emplace_back(a);
  checks.pushforward_match = pushforward(cert.schubert, word.size(), cert.delta_tilde) == cert.delta &&
                             pushforward(cert.schubert, word.size(), cert.k_bs) == cert.k_schubert &&
                             pushforward(cert.schubert, word.size(), bs_divisor(b_section)) == a_section;

  checks.delta_effective_subunit = std::all_of(cert.delta.coefficients.begin(), cert.delta.coefficients.end(),
                                               [](const Rational& c) { return c > Rational(0) && c < Rational(1); });

  // -(K + Delta) = ((M+1)/M) a_j, and M (K + Delta) = -(M+1) a_j is integral.
  checks.anti_ample_coefficients = true;
  for (std::size_t j = 0; j < cert.a.size(); ++j) {
    const Rational anti = -(cert.k_schubert.coefficients[j] + cert.delta.coefficients[j]);
    cert.anti_canonical_pair.push_back(anti);
    const Rational scaled = Rational(cert.m) * -anti;
    const bool ok = anti > Rational(0) && anti == Rational(cert.m + 1, cert.m) * cert.a[j] && scaled.denominator() == 1 &&
                    scaled.numerator() == -(cert.m + 1) * cert.a[j];
    checks.anti_ample_coefficients = checks.anti_ample_coefficients && ok;
  }

  cert.overall = checks.all();
  return cert;
}

}  // namespace logfano

#endif  // LOGFANO_DIVISOR_HPP

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

// JSON documents: Cartan matrix files, words, certificates, single-word
// reports and sweep reports. Keys keep insertion order and every list has
// a fixed order, so identical inputs serialize to identical bytes.

#ifndef LOGFANO_IO_HPP
#define LOGFANO_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "logfano/cartan.hpp"
#include "logfano/divisor.hpp"
#include "logfano/error.hpp"
#include "logfano/oracle.hpp"
#include "logfano/rational.hpp"
#include "logfano/weyl.hpp"

namespace logfano {

using Json = nlohmann::ordered_json;

/// A named Cartan matrix as read from the command line or a file.
struct RootDatum {
  std::string type;
  CartanMatrix cartan;
};

inline Json to_json(const CartanMatrix& gcm) { return Json(gcm.rows()); }

inline Json to_json(const Word& word) { return Json(word.letters); }

template <class Tag>
Json to_json(const LatticeVector<Tag>& v) {
  return Json(v.coeffs);
}

template <class T>
Json to_json_list(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(to_json(item));
  return out;
}

inline Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

/// Integral divisors are written as plain integers.
inline Json integer_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    if (v.denominator() != 1) throw Error(ErrorCode::InternalError, "expected an integral coefficient");
    out.push_back(v.numerator());
  }
  return out;
}

inline Json divisors_json(const SchubertBoundary& boundary) {
  Json out = Json::array();
  for (const auto& d : boundary.divisors) {
    Json item;
    item["label"] = to_json(d.label);
    item["position"] = d.position;
    item["a"] = d.a;
    out.push_back(std::move(item));
  }
  return out;
}

/// Root heights of gamma_i, present only when some differ from b_i.
inline std::vector<std::int64_t> root_heights(const std::vector<RootVector>& gamma) {
  std::vector<std::int64_t> out;
  for (const auto& g : gamma) out.push_back(g.height());
  return out;
}

inline Json checks_json(const CertificateChecks& c) {
  Json out;
  out["lemma_positive_b"] = c.lemma_positive_b;
  out["gammas_positive"] = c.gammas_positive;
  out["gammas_distinct"] = c.gammas_distinct;
  out["pullback_identity"] = c.pullback_identity;
  out["floor_condition"] = c.floor_condition;
  out["pushforward_match"] = c.pushforward_match;
  out["delta_effective_subunit"] = c.delta_effective_subunit;
  out["anti_ample_coefficients"] = c.anti_ample_coefficients;
  return out;
}

inline Json to_json(const std::string& type, const LogFanoCertificate& cert) {
  Json out;
  out["type"] = type;
  out["word"] = to_json(cert.word);
  out["M"] = cert.m;
  out["gamma"] = to_json_list(cert.gamma);
  out["b"] = cert.b;
  if (const auto heights = root_heights(cert.gamma); heights != cert.b) out["root_height"] = heights;
  out["divisors"] = divisors_json(cert.schubert);
  out["collapsed"] = cert.schubert.collapsed;
  out["K_bs"] = integer_list(cert.k_bs.coefficients);
  out["K_schubert"] = integer_list(cert.k_schubert.coefficients);
  out["delta"] = rational_list(cert.delta.coefficients);
  out["delta_tilde"] = rational_list(cert.delta_tilde.coefficients);
  out["checks"] = checks_json(cert.checks);
  out["overall"] = cert.overall;
  return out;
}

/// Full divisor data for one word. Non-reduced words get the Bott-Samelson
/// side only.
inline Json report_json(const RootDatum& datum, const Word& word, std::optional<std::int64_t> m) {
  const CartanMatrix& gcm = datum.cartan;
  const auto gamma = gamma_sequence(gcm, word);
  const auto coroots = gamma_coroot_sequence(gcm, word);
  const auto bs = bs_boundary(gcm, word);
  const auto k_bs = canonical_divisor_bs(gcm, word);
  const bool reduced = is_reduced(gcm, word);

  Json out;
  out["type"] = datum.type;
  out["cartan"] = to_json(gcm);
  out["class"] = std::string(to_string(classify_type(gcm)));
  out["word"] = to_json(word);
  out["reduced"] = reduced;
  out["length"] = length(gcm, element_of(gcm, word));
  out["gamma"] = to_json_list(gamma);
  out["gamma_coroot"] = to_json_list(coroots);
  out["b"] = bs.b;
  if (const auto heights = root_heights(gamma); heights != bs.b) out["root_height"] = heights;
  out["K_bs"] = integer_list(k_bs.coefficients);
  std::vector<Rational> anti;
  for (const auto& c : k_bs.coefficients) anti.push_back(-c);
  out["anticanonical_bs"] = integer_list(anti);
  out["nonpositive_b"] = std::any_of(bs.b.begin(), bs.b.end(), [](std::int64_t b) { return b <= 0; });
  out["negative_anticanonical"] = std::any_of(anti.begin(), anti.end(), [](const Rational& c) { return c < Rational(0); });
  if (!reduced) return out;

  const auto cert = log_fano_certificate(gcm, word, m);
  out["M"] = cert.m;
  out["divisors"] = divisors_json(cert.schubert);
  out["collapsed"] = cert.schubert.collapsed;
  out["K_schubert"] = integer_list(cert.k_schubert.coefficients);
  out["delta"] = rational_list(cert.delta.coefficients);
  out["delta_tilde"] = rational_list(cert.delta_tilde.coefficients);
  out["anticanonical_pair"] = rational_list(cert.anti_canonical_pair);
  Json incidence = Json::array();
  bool identity_pattern = true;
  for (std::size_t i = 1; i <= word.size(); ++i) {
    const auto model = bs_incidence_model(word, i);
    Json curve;
    curve["curve"] = i;
    curve["endpoints"] = Json::array({Json(model.full_endpoint), Json(model.moved_endpoint)});
    curve["meets"] = model.meets();
    identity_pattern = identity_pattern && model.meets() == std::vector<std::size_t>{i};
    incidence.push_back(std::move(curve));
  }
  out["incidence"] = std::move(incidence);
  out["incidence_identity"] = identity_pattern;
  out["overall"] = cert.overall;
  return out;
}

inline Json to_json(const SweepReport& report) {
  Json out;
  out["type"] = report.type;
  out["elements_checked"] = report.elements_checked;
  out["words_checked"] = report.words_checked;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item;
    item["word"] = to_json(f.word);
    item["check"] = f.check;
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  out["failures"] = std::move(failures);
  return out;
}

/// {"rank": n, "cartan": [[...]]}, with an optional "type" name.
inline RootDatum root_datum_from_json(const Json& doc) {
  try {
    if (!doc.contains("rank") || !doc.contains("cartan")) {
      throw Error(ErrorCode::InvalidInput, "Cartan file needs \"rank\" and \"cartan\"");
    }
    const auto rows = doc.at("cartan").get<CartanMatrix::Rows>();
    const auto rank = doc.at("rank").get<std::int64_t>();
    if (rank < 1) throw Error(ErrorCode::InvalidRank, "rank must be positive");
    if (static_cast<std::size_t>(rank) != rows.size()) {
      throw Error(ErrorCode::NonSquare, "rank does not match the number of rows");
    }
    return RootDatum{doc.value("type", std::string("custom")), validate_gcm(rows)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed Cartan file: ") + e.what());
  }
}

inline Json root_datum_to_json(const RootDatum& datum) {
  Json out;
  out["type"] = datum.type;
  out["rank"] = datum.cartan.rank();
  out["cartan"] = to_json(datum.cartan);
  return out;
}

inline RootDatum load_root_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open Cartan file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed Cartan file: ") + e.what());
  }
  return root_datum_from_json(doc);
}

/// "1,2,1" -> (1,2,1); the empty string is the empty word. Also accepts the
/// JSON array form "[1,2,1]".
inline Word parse_word(std::string text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return Word(Json::parse(text).get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidInput, "malformed word '" + text + "'");
    }
  }
  Word word;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    int letter = 0;
    try {
      letter = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "malformed word '" + text + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::InvalidInput, "malformed word '" + text + "'");
    word.letters.push_back(letter);
  }
  return word;
}

/// sum n_i alpha_i written as "a1+2a2"; `symbol` replaces "a".
template <class Tag>
std::string format_vector(const LatticeVector<Tag>& v, const std::string& symbol = "a",
                          const std::string& suffix = "") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::int64_t c = v[k];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += symbol + std::to_string(k + 1) + suffix;
  }
  return out.empty() ? "0" : out;
}

}  // namespace logfano

#endif  // LOGFANO_IO_HPP

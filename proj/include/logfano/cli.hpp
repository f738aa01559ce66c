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

// Driver behind the logfano command line tool. `run` never prints; it
// returns the exit status and the text for stdout and stderr so it can be
// tested in-process.
//
// Exit status: 0 success, 1 certificate or sweep failure, 2 invalid input.

#ifndef LOGFANO_CLI_HPP
#define LOGFANO_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "logfano/cartan.hpp"
#include "logfano/divisor.hpp"
#include "logfano/error.hpp"
#include "logfano/io.hpp"
#include "logfano/oracle.hpp"
#include "logfano/weyl.hpp"

namespace logfano {

enum class Mode { Report, Certify, Sweep, ReducedWords };
enum class Format { Json, Table };

struct RunConfig {
  std::string type;         // builtin name; empty when cartan_file is used
  std::string cartan_file;  // path to a {"rank", "cartan"} document
  std::optional<Word> word;
  std::optional<std::int64_t> m;
  Mode mode = Mode::Report;
  Format format = Format::Json;
  std::optional<std::size_t> max_length;
  bool all_words = false;
  std::optional<std::size_t> cap;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// --cap, then $LOGFANO_CAP, then the built-in default.
inline std::size_t effective_cap(const RunConfig& config) {
  if (config.cap) return *config.cap;
  if (const char* env = std::getenv("LOGFANO_CAP"); env && *env) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "LOGFANO_CAP is not a number");
    }
  }
  return kDefaultElementCap;
}

inline RootDatum resolve_root_datum(const RunConfig& config) {
  if (!config.type.empty() && !config.cartan_file.empty()) {
    throw Error(ErrorCode::InvalidInput, "give either --type or --cartan, not both");
  }
  if (!config.cartan_file.empty()) return load_root_datum(config.cartan_file);
  if (config.type.empty()) throw Error(ErrorCode::InvalidInput, "a root datum is required (--type or --cartan)");
  return RootDatum{config.type, builtin(config.type)};
}

namespace detail {

inline std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

inline std::string rationals_text(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    s += (k ? " " : "");
    s += values[k].denominator() == 1 ? std::to_string(values[k].numerator()) : to_string(values[k]);
  }
  return s;
}

inline std::string certificate_table(const RootDatum& datum, const LogFanoCertificate& cert) {
  std::ostringstream os;
  os << "type " << datum.type << "  word " << word_text(cert.word) << "  M " << cert.m << "\n\n";
  os << std::left << std::setw(5) << "i" << std::setw(8) << "letter" << std::setw(20) << "gamma" << std::setw(20)
     << "gamma^v" << std::setw(6) << "b" << std::setw(8) << "K~" << "Delta~\n";
  for (std::size_t i = 0; i < cert.word.size(); ++i) {
    os << std::setw(5) << i + 1 << std::setw(8) << cert.word[i] << std::setw(20) << format_vector(cert.gamma[i])
       << std::setw(20) << format_vector(cert.gamma_coroot[i], "a", "v") << std::setw(6) << cert.b[i] << std::setw(8)
       << rationals_text({cert.k_bs.coefficients[i]}) << rationals_text({cert.delta_tilde.coefficients[i]}) << "\n";
  }
  os << "\n" << std::setw(12) << "divisor" << std::setw(10) << "position" << std::setw(6) << "a" << std::setw(8) << "K"
     << "Delta\n";
  for (std::size_t j = 0; j < cert.schubert.divisors.size(); ++j) {
    const auto& d = cert.schubert.divisors[j];
    os << std::setw(12) << word_text(d.label) << std::setw(10) << d.position << std::setw(6) << d.a << std::setw(8)
       << rationals_text({cert.k_schubert.coefficients[j]}) << rationals_text({cert.delta.coefficients[j]}) << "\n";
  }
  std::string collapsed;
  for (std::size_t p : cert.schubert.collapsed) collapsed += (collapsed.empty() ? "" : ",") + std::to_string(p);
  os << "collapsed positions: " << (collapsed.empty() ? "none" : collapsed) << "\n\n";
  const auto& c = cert.checks;
  const std::pair<const char*, bool> verdicts[] = {
      {"lemma_positive_b", c.lemma_positive_b},   {"gammas_positive", c.gammas_positive},
      {"gammas_distinct", c.gammas_distinct},     {"pullback_identity", c.pullback_identity},
      {"floor_condition", c.floor_condition},     {"pushforward_match", c.pushforward_match},
      {"delta_effective_subunit", c.delta_effective_subunit},
      {"anti_ample_coefficients", c.anti_ample_coefficients}};
  for (const auto& [name, ok] : verdicts) os << std::setw(26) << name << (ok ? "pass" : "FAIL") << "\n";
  os << std::setw(26) << "overall" << (cert.overall ? "pass" : "FAIL") << "\n";
  return os.str();
}

inline std::string nonreduced_table(const RootDatum& datum, const Word& word) {
  const auto gamma = gamma_sequence(datum.cartan, word);
  const auto coroots = gamma_coroot_sequence(datum.cartan, word);
  const auto k = canonical_divisor_bs(datum.cartan, word);
  std::ostringstream os;
  os << "type " << datum.type << "  word " << word_text(word) << "  (not reduced)\n\n";
  os << std::left << std::setw(5) << "i" << std::setw(8) << "letter" << std::setw(20) << "gamma" << std::setw(20)
     << "gamma^v" << std::setw(6) << "b" << "-K~\n";
  for (std::size_t i = 0; i < word.size(); ++i) {
    os << std::setw(5) << i + 1 << std::setw(8) << word[i] << std::setw(20) << format_vector(gamma[i]) << std::setw(20)
       << format_vector(coroots[i], "a", "v") << std::setw(6) << pairing(Weight::rho(datum.cartan.rank()), coroots[i])
       << rationals_text({-k.coefficients[i]}) << "\n";
  }
  return os.str();
}

inline std::string sweep_table(const SweepReport& report) {
  std::ostringstream os;
  os << "type " << report.type << "\n";
  os << "elements checked: " << report.elements_checked << "\n";
  os << "words checked:    " << report.words_checked << "\n";
  os << "failures:         " << report.failures.size() << "\n";
  for (const auto& f : report.failures) os << "  " << word_text(f.word) << "  " << f.check << "  " << f.detail << "\n";
  return os.str();
}

inline int exit_code_for(ErrorCode code) {
  return (code == ErrorCode::InternalError) ? 1 : 2;
}

}  // namespace detail

inline RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    const RootDatum datum = resolve_root_datum(config);
    const CartanMatrix& gcm = datum.cartan;
    auto require_word = [&]() -> const Word& {
      if (!config.word) throw Error(ErrorCode::InvalidInput, "this mode needs --word");
      check_word(gcm, *config.word);
      return *config.word;
    };

    switch (config.mode) {
      case Mode::Report: {
        const Word& word = require_word();
        if (config.format == Format::Json) {
          result.out = report_json(datum, word, config.m).dump(2) + "\n";
        } else if (is_reduced(gcm, word)) {
          result.out = detail::certificate_table(datum, log_fano_certificate(gcm, word, config.m));
        } else {
          result.out = detail::nonreduced_table(datum, word);
        }
        return result;
      }
      case Mode::Certify: {
        const Word& word = require_word();
        const auto cert = log_fano_certificate(gcm, word, config.m);
        result.out = config.format == Format::Json ? to_json(datum.type, cert).dump(2) + "\n"
                                                   : detail::certificate_table(datum, cert);
        result.exit_code = cert.overall ? 0 : 1;
        return result;
      }
      case Mode::Sweep: {
        SweepOptions options;
        options.max_length = config.max_length;
        options.all_words = config.all_words;
        options.fixed_m = config.m;
        if (classify_type(gcm) != CartanClass::Finite || config.cap || std::getenv("LOGFANO_CAP")) {
          options.cap = effective_cap(config);
        }
        const auto report = sweep_certificates(gcm, datum.type, options);
        result.out = config.format == Format::Json ? to_json(report).dump(2) + "\n" : detail::sweep_table(report);
        result.exit_code = report.failures.empty() ? 0 : 1;
        return result;
      }
      case Mode::ReducedWords: {
        const Word& word = require_word();
        const WeylElement element = element_of(gcm, word);
        const auto words = all_reduced_words(gcm, element, effective_cap(config));
        if (config.format == Format::Json) {
          Json out;
          out["type"] = datum.type;
          out["word"] = to_json(word);
          out["length"] = length(gcm, element);
          out["canonical"] = to_json(canonical_reduced_word(gcm, element));
          out["reduced_words"] = to_json_list(words);
          result.out = out.dump(2) + "\n";
        } else {
          std::ostringstream os;
          os << "type " << datum.type << "  element " << detail::word_text(word) << "  length "
             << length(gcm, element) << "  (" << words.size() << " reduced words)\n";
          for (const auto& w : words) os << "  " << detail::word_text(w) << "\n";
          result.out = os.str();
        }
        return result;
      }
    }
  } catch (const Error& e) {
    result.exit_code = detail::exit_code_for(e.code());
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace logfano

#endif  // LOGFANO_CLI_HPP

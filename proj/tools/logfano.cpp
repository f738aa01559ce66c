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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "logfano/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bott-Samelson and Schubert boundary divisors, log Fano certificates"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  logfano::RunConfig config;
  std::string word_text;
  std::string mode_text = "report";
  std::string format_text = "json";
  std::int64_t m = 0;
  std::size_t max_length = 0;
  std::size_t cap = 0;

  app.add_option("mode", mode_text, "report | certify | sweep | reduced-words")
      ->check(CLI::IsMember({"report", "certify", "sweep", "reduced-words"}));
  auto* type_opt = app.add_option("--type", config.type, "Builtin type, e.g. A3, B2, G2, A1~");
  auto* cartan_opt = app.add_option("--cartan", config.cartan_file, "Cartan matrix JSON file");
  type_opt->excludes(cartan_opt);
  auto* word_opt = app.add_option("--word", word_text, "Comma-separated 1-based letters, e.g. 1,2,1");
  auto* m_opt = app.add_option("--M", m, "Boundary denominator M (default: max a_j + 1)");
  auto* len_opt = app.add_option("--max-length", max_length, "Longest element length to sweep");
  app.add_flag("--all-words", config.all_words, "Sweep every reduced word of every element");
  auto* cap_opt = app.add_option("--cap", cap, "Element / reduced-word enumeration cap");
  app.add_option("--format", format_text, "json | table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
    if (*word_opt) config.word = logfano::parse_word(word_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const logfano::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  static const std::map<std::string, logfano::Mode> modes = {{"report", logfano::Mode::Report},
                                                             {"certify", logfano::Mode::Certify},
                                                             {"sweep", logfano::Mode::Sweep},
                                                             {"reduced-words", logfano::Mode::ReducedWords}};
  config.mode = modes.at(mode_text);
  config.format = format_text == "table" ? logfano::Format::Table : logfano::Format::Json;
  if (*m_opt) config.m = m;
  if (*len_opt) config.max_length = max_length;
  if (*cap_opt) config.cap = cap;

  const auto result = logfano::run(config);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

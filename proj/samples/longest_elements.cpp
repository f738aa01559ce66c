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

// Prints the boundary coefficients of the longest element in a few finite
// types together with the certificate verdict.

#include <iostream>

#include "logfano/logfano.hpp"

int main() {
  for (const char* type : {"A3", "B3", "C3", "G2", "F4"}) {
    const auto gcm = logfano::builtin(type);
    const auto table = logfano::enumerate_group(gcm, std::nullopt);
    std::size_t longest = 0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table.lengths[k] > table.lengths[longest]) longest = k;
    }
    const auto cert = logfano::log_fano_certificate(gcm, table.words[longest]);
    std::cout << type << "  |W| = " << table.size() << "  l(w0) = " << cert.word.size() << "\n  b =";
    for (auto b : cert.b) std::cout << ' ' << b;
    std::cout << "\n  a =";
    for (auto a : cert.a) std::cout << ' ' << a;
    std::cout << "\n  M = " << cert.m << "  log Fano certificate: " << (cert.overall ? "pass" : "FAIL") << "\n";
  }
}

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


#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "logfano/cartan.hpp"

using namespace logfano;

namespace {

ErrorCode code_of(const CartanMatrix::Rows& rows) {
  try {
    validate_gcm(rows);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validation error";
  return ErrorCode::InternalError;
}

const char* kFiniteTypes[] = {"A1", "A2", "A3", "A7", "B2", "B3", "B5", "C2", "C3", "C4", "D4",
                              "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST(ValidateGcm, AcceptsStandardMatrices) {
  EXPECT_EQ(validate_gcm({{2, -1}, {-1, 2}}).rank(), 2);
  EXPECT_EQ(validate_gcm({{2, -2}, {-2, 2}}).rank(), 2);
  EXPECT_EQ(validate_gcm({{2}}).rank(), 1);
}

TEST(ValidateGcm, RejectsEachAxiomViolation) {
  EXPECT_EQ(code_of({{2, 0}, {-1, 2}}), ErrorCode::AsymmetricZeroPattern);
  EXPECT_EQ(code_of({{2, -1}, {-1, 3}}), ErrorCode::DiagonalNotTwo);
  EXPECT_EQ(code_of({{2, 1}, {-1, 2}}), ErrorCode::PositiveOffDiagonal);
  EXPECT_EQ(code_of({{2, -1}, {-1}}), ErrorCode::NonSquare);
  EXPECT_EQ(code_of({{2, -1, 0}, {-1, 2, 0}}), ErrorCode::NonSquare);
  EXPECT_EQ(code_of({}), ErrorCode::InvalidRank);
}

TEST(ValidateGcm, DoesNotNormalize) {
  const CartanMatrix::Rows rows = {{2, -3, 0}, {-1, 2, -4}, {0, -1, 2}};
  EXPECT_EQ(validate_gcm(rows).rows(), rows);
}

TEST(Builtin, TableEntries) {
  EXPECT_EQ(builtin("A2").rows(), (CartanMatrix::Rows{{2, -1}, {-1, 2}}));
  EXPECT_EQ(builtin("B2").rows(), (CartanMatrix::Rows{{2, -1}, {-2, 2}}));
  EXPECT_EQ(builtin("C2").rows(), (CartanMatrix::Rows{{2, -2}, {-1, 2}}));
  EXPECT_EQ(builtin("G2").rows(), (CartanMatrix::Rows{{2, -3}, {-1, 2}}));
  EXPECT_EQ(builtin("A1~").rows(), (CartanMatrix::Rows{{2, -2}, {-2, 2}}));
  EXPECT_EQ(builtin("B3").rows(), (CartanMatrix::Rows{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  EXPECT_EQ(builtin("F4").rows(),
            (CartanMatrix::Rows{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  EXPECT_EQ(builtin("A2~").rows(), (CartanMatrix::Rows{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

// B2 with alpha_1 long: s_1(alpha_2) = alpha_1 + alpha_2 and
// s_2(alpha_1) = alpha_1 + 2 alpha_2 force A(1,2) = -1 and A(2,1) = -2.
TEST(Builtin, B2PairingsFromReflectionIdentities) {
  const auto b2 = builtin("B2");
  EXPECT_EQ(-b2.at(0, 1), 1);
  EXPECT_EQ(-b2.at(1, 0), 2);
}

TEST(Builtin, DynkinShapes) {
  auto degree = [](const CartanMatrix& m, int i) {
    int d = 0;
    for (int j = 0; j < m.rank(); ++j) d += (i != j && m.at(i, j) != 0);
    return d;
  };
  const auto d5 = builtin("D5");
  EXPECT_EQ(degree(d5, 2), 3);  // branch node alpha_{n-2}
  const auto e8 = builtin("E8");
  EXPECT_EQ(degree(e8, 3), 3);  // branch node alpha_4
  EXPECT_EQ(degree(e8, 1), 1);  // alpha_2 hangs off alpha_4
  EXPECT_NE(e8.at(1, 3), 0);
}

TEST(Builtin, Errors) {
  for (const char* name : {"X3", "A", "", "B2~", "a2", "A2~~"}) {
    try {
      builtin(name);
      ADD_FAILURE() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownType) << name;
    }
  }
  for (const char* name : {"A0", "B1", "D3", "E5", "E9", "F3", "G3", "A0~", "A99999999999"}) {
    try {
      builtin(name);
      ADD_FAILURE() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidRank) << name;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_type(builtin("A2")), CartanClass::Finite);
  EXPECT_EQ(classify_type(validate_gcm({{2, -2}, {-2, 2}})), CartanClass::Affine);
  EXPECT_EQ(classify_type(validate_gcm({{2, -3}, {-3, 2}})), CartanClass::Indefinite);
  EXPECT_EQ(classify_type(validate_gcm({{2, -1}, {-4, 2}})), CartanClass::Affine);  // A_2^(2)
  EXPECT_EQ(classify_type(validate_gcm({{2, -1}, {-5, 2}})), CartanClass::Indefinite);
  EXPECT_EQ(classify_type(builtin("A4~")), CartanClass::Affine);
  // two affine components: kernel is two-dimensional
  EXPECT_EQ(classify_type(validate_gcm({{2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}})),
            CartanClass::Indefinite);
  // cycle with inconsistent products A(i,j) A(j,k) A(k,i) vs transpose
  EXPECT_EQ(classify_type(validate_gcm({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})), CartanClass::NotSymmetrizable);
}

TEST(Classify, EveryBuiltinFiniteTypeIsFinite) {
  for (const char* t : kFiniteTypes) EXPECT_EQ(classify_type(builtin(t)), CartanClass::Finite) << t;
}

TEST(Symmetrizer, LongAndShortRoots) {
  // D_i = (alpha_i, alpha_i) / 2 up to scale
  EXPECT_EQ(*symmetrizer(builtin("B2")), (std::vector<Rational>{2, 1}));
  EXPECT_EQ(*symmetrizer(builtin("C3")), (std::vector<Rational>{1, 1, 2}));
  EXPECT_EQ(*symmetrizer(builtin("G2")), (std::vector<Rational>{1, 3}));
  EXPECT_EQ(*symmetrizer(builtin("F4")), (std::vector<Rational>{2, 2, 1, 1}));
}

TEST(Classify, InvariantUnderSimultaneousPermutation) {
  std::mt19937 rng(7);
  std::vector<CartanMatrix> samples;
  for (const char* t : {"A4", "B4", "D5", "F4", "A3~", "A1~", "E6", "G2"}) samples.push_back(builtin(t));
  samples.push_back(validate_gcm({{2, -3, 0}, {-3, 2, -1}, {0, -1, 2}}));
  samples.push_back(validate_gcm({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}));
  for (const auto& gcm : samples) {
    const int n = gcm.rank();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CartanMatrix::Rows rows(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = gcm.at(perm[i], perm[j]);
      EXPECT_EQ(classify_type(validate_gcm(rows)), classify_type(gcm));
    }
  }
}

TEST(Validate, BuiltinsRevalidate) {
  for (const char* t : kFiniteTypes) EXPECT_NO_THROW(validate_gcm(builtin(t).rows())) << t;
  for (const char* t : {"A1~", "A2~", "A5~"}) EXPECT_NO_THROW(validate_gcm(builtin(t).rows())) << t;
}

/*
 * Copyright 2026 The ghnets Authors
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

#include <gtest/gtest.h>

#include "ghnets/errors.hpp"
#include "ghnets/scalar.hpp"
#include "test_support.hpp"

namespace ghnets {
namespace {

using testing::S;

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar(2, 4).to_string(), "1/2");
  EXPECT_EQ(Scalar(-6, 3).to_string(), "-2");
  EXPECT_EQ(Scalar(3, -9).to_string(), "-1/3");
  EXPECT_EQ(Scalar(0, 5).to_string(), "0");
}

TEST(Scalar, ParsesRationalAndDecimalLiterals) {
  EXPECT_EQ(S("3/4"), Scalar(3, 4));
  EXPECT_EQ(S("-10/4"), Scalar(-5, 2));
  EXPECT_EQ(S("1.25"), Scalar(5, 4));
  EXPECT_EQ(S("-0.5"), Scalar(-1, 2));
  EXPECT_EQ(S(".5"), Scalar(1, 2));
  EXPECT_EQ(S("7."), Scalar(7));
  EXPECT_EQ(S("+12"), Scalar(12));
  EXPECT_EQ(S(" 3 "), Scalar(3));
  EXPECT_EQ(S("123456789012345678901234567890"), Scalar::parse("246913578024691357802469135780/2"));
}

TEST(Scalar, RejectsMalformedLiterals) {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "--1", "1e5", ".", "1/2/3", "0x10"}) {
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
  }
}

TEST(Scalar, ExactArithmetic) {
  EXPECT_EQ(Scalar(1, 3) + Scalar(1, 6), Scalar(1, 2));
  EXPECT_EQ(Scalar(1, 3) - Scalar(1, 2), Scalar(-1, 6));
  EXPECT_EQ(Scalar(2, 3) * Scalar(9, 4), Scalar(3, 2));
  EXPECT_EQ(Scalar(2, 3) / Scalar(4, 9), Scalar(3, 2));
  EXPECT_EQ(abs(Scalar(-7, 2)), Scalar(7, 2));
  EXPECT_EQ(min(Scalar(1, 3), Scalar(1, 4)), Scalar(1, 4));
  EXPECT_EQ(max(Scalar(1, 3), Scalar(1, 4)), Scalar(1, 3));
  EXPECT_LT(Scalar(1, 3), Scalar(1, 2));
  EXPECT_THROW(Scalar(1) / Scalar(0), DomainError);
  // 0.1 + 0.2 is exactly 0.3 here.
  EXPECT_EQ(S("0.1") + S("0.2"), S("0.3"));
}

TEST(Scalar, DecimalRendering) {
  EXPECT_EQ(Scalar(1, 3).to_decimal(4), "0.3333");
  EXPECT_EQ(Scalar(2, 3).to_decimal(4), "0.6667");
  EXPECT_EQ(Scalar(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Scalar(5).to_decimal(0), "5");
  EXPECT_EQ(Scalar(-1, 1000).to_decimal(2), "0.00");
}

TEST(Scalar, PrintParseRoundTripProperty) {
  testing::RationalSource gen(7);
  for (int i = 0; i < 2000; ++i) {
    const Scalar v = gen.in(-1000, 1000, 997);
    EXPECT_EQ(Scalar::parse(v.to_string()), v);
    EXPECT_EQ(Scalar::parse(v.to_string()).to_string(), v.to_string());
  }
}

}  // namespace
}  // namespace ghnets

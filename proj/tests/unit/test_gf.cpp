/*
   Copyright 2026 The cyclo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include <gtest/gtest.h>

#include "cyclo/gf.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using cyclo::gf::Code;
using cyclo::gf::Field;

TEST(FieldOps, PrimeFieldExamples) {
    auto f7 = Field::make(7);
    EXPECT_EQ((f7->one() / f7->from_integer(3)).code(), 5u);
    auto f5 = Field::make(5);
    EXPECT_EQ((f5->from_integer(2) * f5->from_integer(3)).code(), 1u);
    EXPECT_EQ(f7->from_integer(-1).code(), 6u);
}

TEST(FieldOps, ExtensionSquareOfGenerator) {
    auto f9 = Field::make(3, {1, 0, 1});
    const std::int64_t zc[] = {0, 1};
    const auto z = f9->from_coordinates(zc);
    EXPECT_EQ(z * z, f9->from_integer(2));
    EXPECT_EQ(z.to_string(), "[0,1]");
}

TEST(FieldOps, Errors) {
    auto f7 = Field::make(7);
    EXPECT_THROW(f7->one() / f7->zero(), std::domain_error);
    EXPECT_THROW(f7->zero().pow(-1), std::domain_error);
    auto f5 = Field::make(5);
    EXPECT_THROW((void)(f7->one() + f5->one()), std::invalid_argument);
    EXPECT_THROW(Field::make(6), std::invalid_argument);
    EXPECT_THROW(Field::make(3, {2, 0, 1}), std::invalid_argument);  // z^2 + 2 = (z-1)(z+1)
    EXPECT_THROW(Field::make(3, {1, 0, 2}), std::invalid_argument);  // not monic
}

TEST(FieldPow, Examples) {
    auto f5 = Field::make(5);
    auto f7 = Field::make(7);
    EXPECT_EQ(f5->from_integer(2).pow(4), f5->one());
    EXPECT_EQ(f7->from_integer(3).pow(6), f7->one());
    EXPECT_EQ(f7->from_integer(2).pow(-1), f7->from_integer(4));
    EXPECT_EQ(f7->from_integer(3).pow(0), f7->one());
}

TEST(RootOfUnity, Examples) {
    EXPECT_EQ(Field::make(5)->nth_root_of_unity(4).code(), 2u);
    EXPECT_EQ(Field::make(7)->nth_root_of_unity(3).code(), 2u);
    try {
        Field::make(5)->nth_root_of_unity(3);
        FAIL() << "expected an error";
    } catch (const std::invalid_argument& e) {
        EXPECT_EQ(std::string(e.what()).rfind("no primitive n-th root in field", 0), 0u);
    }
}

TEST(RootOfUnity, MatchesBruteForceOracle) {
    for (auto [p, mod] : std::vector<std::pair<int, std::vector<std::int64_t>>>{
             {3, {}}, {5, {}}, {7, {}}, {11, {}}, {13, {}}, {3, {1, 0, 1}}, {5, {2, 0, 1}}, {7, {1, 0, 1}}}) {
        auto f = Field::make(p, mod);
        for (std::uint64_t n = 2; n < f->order(); ++n) {
            if ((f->order() - 1) % n != 0) {
                EXPECT_THROW(f->nth_root_of_unity(static_cast<std::int64_t>(n)), std::invalid_argument);
                continue;
            }
            const auto z = f->nth_root_of_unity(static_cast<std::int64_t>(n));
            EXPECT_EQ(z.code(), oracle::primitive_root_of_unity(*f, n)) << "q=" << f->order() << " n=" << n;
            EXPECT_TRUE(z.pow(static_cast<std::int64_t>(n)).is_one());
            for (std::uint64_t d = 1; d < n; ++d) {
                if (n % d == 0) EXPECT_FALSE(z.pow(static_cast<std::int64_t>(d)).is_one());
            }
        }
    }
}

TEST(FieldAxioms, RandomizedTriples) {
    std::mt19937_64 rng(7);
    for (auto [p, mod] : std::vector<std::pair<int, std::vector<std::int64_t>>>{
             {2, {1, 1, 1}}, {3, {}}, {7, {}}, {3, {1, 0, 1}}, {5, {2, 0, 1}}, {101, {}}, {2, {1, 1, 0, 0, 1}}}) {
        auto f = Field::make(p, mod);
        std::uniform_int_distribution<Code> any(0, f->order() - 1);
        for (int k = 0; k < 300; ++k) {
            const auto a = f->element(any(rng));
            const auto b = f->element(any(rng));
            const auto c = f->element(any(rng));
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a - a, f->zero());
            if (!a.is_zero()) {
                EXPECT_TRUE(a.pow(static_cast<std::int64_t>(f->order() - 1)).is_one());
                EXPECT_TRUE((a * a.inverse()).is_one());
                EXPECT_EQ(a.pow(-2), (a * a).inverse());
            }
        }
    }
}

TEST(FieldTables, LogTablesAgreeWithSchoolbook) {
    // Products in F_25 against the schoolbook rule z^2 = -2.
    auto f = Field::make(5, {2, 0, 1});
    for (Code a = 0; a < 25; ++a) {
        for (Code b = 0; b < 25; ++b) {
            const std::int64_t a0 = a % 5, a1 = a / 5, b0 = b % 5, b1 = b / 5;
            const std::int64_t c0 = ((a0 * b0 - 2 * a1 * b1) % 5 + 5) % 5;
            const std::int64_t c1 = (a0 * b1 + a1 * b0) % 5;
            EXPECT_EQ(f->mul(a, b), static_cast<Code>(c0 + 5 * c1));
        }
    }
}

TEST(Irreducibility, SmallestIrreducible) {
    EXPECT_EQ(cyclo::gf::smallest_irreducible(3, 2), (std::vector<std::int64_t>{1, 0, 1}));
    EXPECT_EQ(cyclo::gf::smallest_irreducible(2, 2), (std::vector<std::int64_t>{1, 1, 1}));
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        for (int d = 2; d <= 4; ++d) {
            const auto m = cyclo::gf::smallest_irreducible(p, d);
            ASSERT_EQ(static_cast<int>(m.size()), d + 1);
            auto f = Field::make(static_cast<std::int64_t>(p), m);
            // A field: every nonzero element has order dividing q - 1 and some element generates.
            std::uint64_t best = 0;
            for (Code c = 1; c < f->order(); ++c) best = std::max(best, f->multiplicative_order(c));
            EXPECT_EQ(best, f->order() - 1);
        }
    }
}

TEST(Primes, Helpers) {
    EXPECT_TRUE(cyclo::gf::is_prime(13));
    EXPECT_FALSE(cyclo::gf::is_prime(1));
    EXPECT_FALSE(cyclo::gf::is_prime(91));
    EXPECT_EQ(cyclo::gf::prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

}  // namespace

/*
 * Copyright 2026 The mrbwt Authors
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

#include "mrbwt/bwt.hpp"
#include "mrbwt/corpus.hpp"
#include "mrbwt/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mrbwt;
using mrbwt::testing::dollar_text;
using mrbwt::testing::make_engine;
using mrbwt::testing::show;

namespace
{

PipelineConfig small_pipeline()
{
    PipelineConfig c;
    c.engine = {2, 3, 300, 9};
    c.smr.k = 3;
    c.smr.r = 3;
    return c;
}

constexpr Algorithm kAll[] = {Algorithm::Pda, Algorithm::SmrRadix, Algorithm::SmrTimsort, Algorithm::Naive};

} // namespace

TEST(SaToBwtTest, Examples)
{
    const auto eng = make_engine();
    const auto largest = sa_to_bwt({{1, 3, 5, 0, 2, 4, 6}}, dollar_text("BANANA$", SentinelOrder::Largest), eng);
    EXPECT_EQ(show(largest.transformed), "BNN$AAA");
    EXPECT_EQ(largest.row_index, 3u);

    const auto smallest = sa_to_bwt({{6, 5, 3, 1, 0, 4, 2}}, dollar_text("BANANA$", SentinelOrder::Smallest), eng);
    EXPECT_EQ(show(smallest.transformed), "ANNB$AA");
    EXPECT_EQ(smallest.row_index, 4u);

    const auto lone = sa_to_bwt({{0}}, Text(""), eng);
    EXPECT_EQ(show(lone.transformed), "$");
    EXPECT_EQ(lone.row_index, 0u);
}

TEST(SaToBwtTest, RejectsBadSuffixArrays)
{
    const auto eng = make_engine();
    const Text t("AB");
    EXPECT_THROW(sa_to_bwt({{0, 1}}, t, eng), InvalidPermutation);
    EXPECT_THROW(sa_to_bwt({{2, 1, 1}}, t, eng), InvalidPermutation);
    EXPECT_THROW(sa_to_bwt({{3, 1, 2}}, t, eng), InvalidPermutation);
}

TEST(AlgorithmNamesTest, RoundTrip)
{
    for (auto a : kAll)
        EXPECT_EQ(parse_algorithm(algorithm_name(a)), a);
    EXPECT_FALSE(parse_algorithm("dc3").has_value());
}

TEST(PipelineTest, BananaAgreesAcrossAlgorithms)
{
    const Text t = dollar_text("BANANA$", SentinelOrder::Largest);
    for (auto a : kAll) {
        const auto r = bwt_pipeline(t, a, small_pipeline());
        EXPECT_EQ(show(r.transformed), "BNN$AAA") << algorithm_name(a);
        EXPECT_EQ(r.row_index, 3u) << algorithm_name(a);
    }
}

TEST(PipelineTest, RandomTextsAgreeAndRoundTrip)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const Text t(mrbwt::testing::random_case(rng, 600),
                     trial % 2 ? SentinelOrder::Largest : SentinelOrder::Smallest);
        const auto reference = oracle::naive_bwt(t);
        for (auto a : kAll) {
            const auto r = bwt_pipeline(t, a, small_pipeline());
            ASSERT_EQ(r, reference) << algorithm_name(a) << " trial " << trial;
            ASSERT_EQ(oracle::inverse_bwt(r, t.order()), t.with_sentinel());
        }
    }
}

TEST(PipelineTest, DnaMegabyteRoundTripsThroughPda)
{
    const Text t(corpus::dna_like(1 << 20, 5));
    PipelineConfig c;
    c.engine = {4, 4, 1024, 3};
    const auto r = bwt_pipeline(t, Algorithm::Pda, c);
    EXPECT_EQ(oracle::inverse_bwt(r, t.order()), t.with_sentinel());
}

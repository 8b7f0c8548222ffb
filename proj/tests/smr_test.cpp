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

#include "mrbwt/oracle.hpp"
#include "mrbwt/smr.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace mrbwt;
using namespace mrbwt::smr;
using mrbwt::testing::dollar_text;
using mrbwt::testing::make_engine;
using mrbwt::testing::show;

namespace
{

using Tuple = std::pair<std::string, std::uint64_t>;

std::vector<std::vector<Tuple>> shown_partitions(const KmerDataset& ds)
{
    std::vector<std::vector<Tuple>> out;
    for (const auto& part : ds.partitions()) {
        out.emplace_back();
        for (const auto& [k, v] : part)
            out.back().emplace_back(show(k), v);
    }
    return out;
}

// Naive suffix order restricted to the given positions.
std::vector<std::uint64_t> naive_restricted(const Text& t, std::vector<std::uint64_t> p)
{
    std::sort(p.begin(), p.end(), [&](auto a, auto b) { return t.compare_suffixes(a, b) < 0; });
    return p;
}

} // namespace

TEST(KmerMapTest, CattattaggaTuples)
{
    const auto eng = make_engine();
    const Text t("CATTATTAGGA");
    std::vector<Tuple> got;
    for (const auto& [k, v] : kmer_map(t, 3, eng).collect())
        got.emplace_back(show(k), v);
    const std::vector<Tuple> expected{{"CAT", 0}, {"ATT", 1}, {"TTA", 2}, {"TAT", 3},
                                      {"ATT", 4}, {"TTA", 5}, {"TAG", 6}, {"AGG", 7},
                                      {"GGA", 8}, {"GA$", 9}, {"A$$", 10}, {"$$$", 11}};
    EXPECT_EQ(got, expected);
}

TEST(KmerMapTest, SingleCharacterAndLongKeys)
{
    const auto eng = make_engine();
    const Text t("BANANA");
    std::multiset<std::string> firsts;
    for (const auto& [k, v] : kmer_map(t, 1, eng).collect())
        firsts.insert(show(k));
    EXPECT_EQ(firsts, (std::multiset<std::string>{"$", "A", "A", "A", "B", "N", "N"}));

    std::set<std::string> long_keys;
    for (const auto& [k, v] : kmer_map(t, 8, eng).collect()) {
        EXPECT_EQ(k.size(), 8u);
        EXPECT_EQ(k, t.substring(v, 8));
        long_keys.insert(k);
    }
    EXPECT_EQ(long_keys.size(), 7u);
    EXPECT_THROW(kmer_map(t, 0, eng), std::invalid_argument);
}

TEST(PartitionSuffixesTest, CattattaggaFourPartitions)
{
    engine::EngineConfig c{2, 3, 64, 5};
    const engine::Engine eng(c);
    const Text t("CATTATTAGGA");
    const auto parts = shown_partitions(partition_suffixes(kmer_map(t, 3, eng), 4, t.order(), eng));
    const std::vector<std::vector<Tuple>> expected{
        {{"$$$", 11}, {"A$$", 10}},
        {{"AGG", 7}, {"ATT", 1}, {"ATT", 4}},
        {{"CAT", 0}, {"GA$", 9}, {"GGA", 8}},
        {{"TAG", 6}, {"TAT", 3}, {"TTA", 2}, {"TTA", 5}},
    };
    EXPECT_EQ(parts, expected);
}

TEST(PartitionSuffixesTest, SinglePartitionAndSingleKey)
{
    const auto eng = make_engine();
    const Text t("CATTATTAGGA");
    const auto one = partition_suffixes(kmer_map(t, 3, eng), 1, t.order(), eng);
    ASSERT_EQ(one.num_partitions(), 1u);
    EXPECT_TRUE(std::is_sorted(one.partitions()[0].begin(), one.partitions()[0].end(),
                               [&](const auto& a, const auto& b) { return KmerLess{t.order()}(a.first, b.first); }));

    const Text same("AAAA");
    auto ds = kmer_map(same, 2, eng);
    ds = eng.filter(ds, [](const std::string& k, std::uint64_t) { return k == "AA"; });
    const auto split = partition_suffixes(ds, 3, same.order(), eng);
    int non_empty = 0;
    for (const auto& p : split.partitions())
        non_empty += !p.empty();
    EXPECT_EQ(non_empty, 1);
}

TEST(PartitionBlockTest, LmaxCountsTailDistance)
{
    const Text t("CATTATTAGGA");
    const PartitionBlock block({5, 2, 3}, t.size());
    EXPECT_EQ(block.positions(), (std::vector<std::uint64_t>{2, 3, 5}));
    EXPECT_EQ(block.l_max(), 7u);
    EXPECT_EQ(show(block.block(t, 0)), "TTATTAG");
    EXPECT_EQ(show(block.block(t, 1)), "TATTAGG");
    EXPECT_EQ(show(block.block(t, 2)), "TTAGGA$");
}

TEST(PartialSaTest, CattattaggaPartition)
{
    const Text t("CATTATTAGGA");
    const PartitionBlock block({2, 3, 5}, t.size());
    for (auto sorter : {Sorter::RadixLsd, Sorter::StableComparison}) {
        EXPECT_EQ(partial_sa(block, t, sorter), (std::vector<std::uint64_t>{3, 5, 2}));
        EXPECT_EQ(partial_sa(block, t, sorter), naive_restricted(t, {2, 3, 5}));
    }
}

TEST(PartialSaTest, SingletonUnchanged)
{
    const Text t("ACGT");
    EXPECT_EQ(partial_sa(PartitionBlock({2}, t.size()), t, Sorter::RadixLsd), (std::vector<std::uint64_t>{2}));
}

TEST(PartialSaTest, IdenticalBlocksFallBackToSuffixComparison)
{
    // l_max = 6, and the blocks at 0 and 1 are both "AAAAAA".
    const Text t("AAAAAAAA");
    const PartitionBlock block({0, 1, 7, 8}, t.size());
    ASSERT_EQ(block.l_max(), 6u);
    ASSERT_EQ(block.block(t, 0), block.block(t, 1));
    for (auto sorter : {Sorter::RadixLsd, Sorter::StableComparison}) {
        PartialSaStats stats;
        EXPECT_EQ(partial_sa(block, t, sorter, &stats), naive_restricted(t, {0, 1, 7, 8}));
        EXPECT_EQ(stats.tie_runs, 1u);
        EXPECT_EQ(stats.tie_positions, 2u);
    }

    const Text abab("ABABAB");
    const PartitionBlock even({0, 2}, abab.size());
    EXPECT_EQ(partial_sa(even, abab, Sorter::RadixLsd), naive_restricted(abab, {0, 2}));
}

TEST(RadixSortBlocksTest, Examples)
{
    const CharOrder order(SentinelOrder::Smallest, '$');
    std::vector<Block> blocks{{"TTATTAG", 2}, {"TATTAGG", 3}, {"TTAGGA$", 5}};
    const auto sorted = radix_sort_blocks(blocks, order);
    EXPECT_EQ(sorted, (std::vector<Block>{{"TATTAGG", 3}, {"TTAGGA$", 5}, {"TTATTAG", 2}}));
    EXPECT_EQ(comparison_sort_blocks(blocks, order), sorted);

    EXPECT_EQ(radix_sort_blocks(sorted, order), sorted);

    std::vector<Block> dups{{"AC", 0}, {"AB", 1}, {"AC", 2}, {"AB", 3}};
    EXPECT_EQ(radix_sort_blocks(dups, order), (std::vector<Block>{{"AB", 1}, {"AB", 3}, {"AC", 0}, {"AC", 2}}));

    EXPECT_THROW(radix_sort_blocks({{"AB", 0}, {"ABC", 1}}, order), std::invalid_argument);
    EXPECT_THROW(comparison_sort_blocks({{"AB", 0}, {"ABC", 1}}, order), std::invalid_argument);
}

TEST(RadixSortBlocksTest, AgreesWithComparisonSort)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const CharOrder order(trial % 2 ? SentinelOrder::Largest : SentinelOrder::Smallest, '$');
        const std::size_t width = 1 + rng() % 6;
        std::vector<Block> blocks(rng() % 60);
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            blocks[j].position = j;
            blocks[j].bytes.resize(width);
            for (auto& c : blocks[j].bytes)
                c = "AB$"[rng() % 3];
        }
        EXPECT_EQ(radix_sort_blocks(blocks, order), comparison_sort_blocks(blocks, order));
    }
}

TEST(SmrSaTest, Examples)
{
    const auto eng = make_engine();
    SmrConfig config{2, 2, Sorter::RadixLsd};
    EXPECT_EQ(smr_sa(dollar_text("BANANA$", SentinelOrder::Smallest), config, eng).entries,
              (std::vector<std::uint64_t>{6, 5, 3, 1, 0, 4, 2}));
    const Text catt("CATTATTAGGA");
    for (auto sorter : {Sorter::RadixLsd, Sorter::StableComparison})
        EXPECT_EQ(smr_sa(catt, {3, 4, sorter}, eng), oracle::naive_sa(catt));
    EXPECT_THROW(smr_sa(catt, {0, 4, Sorter::RadixLsd}, eng), std::invalid_argument);
}

TEST(SmrSaTest, MatchesNaiveOnRandomTexts)
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        const Text t(mrbwt::testing::random_case(rng, 2048),
                     trial % 2 ? SentinelOrder::Largest : SentinelOrder::Smallest);
        const SmrConfig config{1 + rng() % 8, 1 + rng() % 8,
                               trial % 3 == 0 ? Sorter::RadixLsd : Sorter::StableComparison};
        const auto eng = make_engine(1 + rng() % 4, 1 + rng() % 5, trial);
        const auto sa = smr_sa(t, config, eng);
        ASSERT_EQ(sa, oracle::naive_sa(t)) << "trial " << trial;
    }
}

// Property 1 on keys: the largest k-mer of a partition is strictly below the
// smallest k-mer of the next non-empty one.
TEST(SmrSaTest, PartitionsRespectKeyOrder)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const Text t(mrbwt::testing::random_case(rng, 1000));
        const auto eng = make_engine(2, 2, trial);
        const std::size_t k = 1 + rng() % 5;
        const auto ds = partition_suffixes(kmer_map(t, k, eng), 1 + rng() % 8, t.order(), eng);
        const KmerLess less{t.order()};
        const std::string* prev = nullptr;
        for (const auto& part : ds.partitions()) {
            if (part.empty())
                continue;
            if (prev)
                EXPECT_TRUE(less(*prev, part.front().first));
            prev = &part.back().first;
        }
    }
}

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

#include "mrbwt/cli.hpp"
#include "mrbwt/corpus.hpp"
#include "mrbwt/io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace mrbwt;
using namespace mrbwt::cli;
namespace fs = std::filesystem;

namespace
{

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path()
               / ("mrbwt_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_"
                  + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }

    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& bytes)
    {
        const auto p = dir_ / name;
        io::write_file(p, bytes);
        return p;
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

    fs::path dir_;
};

RunConfig banana_config(const fs::path& input)
{
    RunConfig c;
    c.input = input;
    c.sentinel = '$';
    c.sentinel_order = SentinelOrder::Largest;
    return c;
}

} // namespace

TEST_F(CliTest, IngestTruncatesAndRejectsSentinel)
{
    const auto banana = write("banana.txt", "BANANA\n");
    EXPECT_EQ(io::ingest(banana, 6, 0, SentinelOrder::Smallest).payload(), "BANANA");
    EXPECT_EQ(io::ingest(banana, std::nullopt, 0, SentinelOrder::Smallest).payload(), "BANANA\n");

    const auto bad = write("bad.bin", std::string("ACG\0T", 5));
    try {
        io::ingest(bad, std::nullopt, 0, SentinelOrder::Smallest);
        FAIL() << "expected InvalidText";
    } catch (const InvalidText& e) {
        EXPECT_EQ(e.offset(), 3u);
        EXPECT_NE(std::string(e.what()).find("offset 3"), std::string::npos);
    }

    const auto empty = write("empty.txt", "");
    EXPECT_EQ(io::ingest(empty, std::nullopt, 0, SentinelOrder::Smallest).size(), 1u);
    EXPECT_THROW(io::ingest(banana, 0, 0, SentinelOrder::Smallest), io::IoError);
}

TEST_F(CliTest, IngestPrefixIsExact)
{
    const auto big = write("big.txt", corpus::dna_like(2 << 20, 1));
    EXPECT_EQ(io::ingest(big, std::uint64_t{1} << 20, 0, SentinelOrder::Smallest).payload_size(), 1u << 20);
}

TEST(IoFormatTest, BwtFooterRoundTrip)
{
    const BwtResult r{std::string("BN\nI=9\0AAA", 10), 3};
    const auto encoded = io::encode_bwt(r);
    EXPECT_EQ(encoded.substr(encoded.size() - 4), "I=3\n");
    EXPECT_EQ(io::decode_bwt(encoded), r);
    EXPECT_THROW(io::decode_bwt("ABC"), io::IoError);
    EXPECT_THROW(io::decode_bwt("ABC\nI=x\n"), io::IoError);
}

TEST(IoFormatTest, SuffixArrayEncodingsRoundTrip)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        SuffixArray sa;
        sa.entries.resize(rng() % 300);
        std::iota(sa.entries.begin(), sa.entries.end(), std::uint64_t{0});
        std::shuffle(sa.entries.begin(), sa.entries.end(), rng);
        if (!sa.entries.empty())
            sa.entries[0] = rng();
        for (auto f : {io::SaFormat::Binary, io::SaFormat::Text})
            EXPECT_EQ(io::decode_sa(io::encode_sa(sa, f), f), sa);
    }
    EXPECT_EQ(io::encode_sa({{1, 258}}, io::SaFormat::Binary),
              std::string("\x01\0\0\0\0\0\0\0\x02\x01\0\0\0\0\0\0", 16));
    EXPECT_EQ(io::encode_sa({{1, 258}}, io::SaFormat::Text), "1\n258\n");
    EXPECT_THROW(io::decode_sa("1234567", io::SaFormat::Binary), io::IoError);
    EXPECT_THROW(io::decode_sa("1\nx\n", io::SaFormat::Text), io::IoError);
}

TEST_F(CliTest, BwtCommandWritesFooterAndAgreesAcrossAlgorithms)
{
    auto c = banana_config(write("banana.txt", "BANANA"));
    std::ostringstream out;
    std::ostringstream err;
    for (auto a : {Algorithm::Pda, Algorithm::SmrTimsort, Algorithm::SmrRadix, Algorithm::Naive}) {
        c.algorithm = a;
        c.out = path(std::string(algorithm_name(a)) + ".bwt");
        ASSERT_EQ(cmd_bwt(c, out, err), 0) << err.str();
        EXPECT_EQ(io::read_file(*c.out), "BNN$AAA\nI=3\n");
    }
}

TEST_F(CliTest, SaCommandWritesOneEntryPerSuffix)
{
    RunConfig c;
    c.input = write("random.txt", corpus::random_text(4096, "ACGT", 3));
    c.algorithm = Algorithm::Naive;
    c.out = path("random.sa");
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(cmd_sa(c, out, err), 0) << err.str();
    EXPECT_EQ(fs::file_size(*c.out), 4097u * 8);

    c.sa_format = io::SaFormat::Text;
    c.out = path("random.txt.sa");
    ASSERT_EQ(cmd_sa(c, out, err), 0);
    EXPECT_EQ(io::decode_sa(io::read_file(*c.out), io::SaFormat::Text).size(), 4097u);
}

TEST_F(CliTest, OptionValidation)
{
    auto c = banana_config(write("banana.txt", "BANANA"));
    c.out = path("x.bwt");
    c.k = 4;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_bwt(c, out, err), 1);
    EXPECT_NE(err.str().find("--kmer"), std::string::npos);

    c.algorithm = Algorithm::SmrRadix;
    EXPECT_EQ(cmd_bwt(c, out, err), 0);

    c.input = write("dollar.txt", "BAN$ANA");
    EXPECT_EQ(cmd_bwt(c, out, err), 1);
}

TEST_F(CliTest, VerifyPassesAndCatchesCorruptSuffixArray)
{
    auto c = banana_config(write("banana.txt", "BANANA"));
    c.cross_check = Algorithm::SmrTimsort;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(c, out, err), 0) << out.str() << err.str();
    EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
    EXPECT_NE(out.str().find("PASS round-trip"), std::string::npos);
    EXPECT_NE(out.str().find("PASS cross-check smr-t"), std::string::npos);

    c.cross_check.reset();
    c.sa_in = write("bad.sa", io::encode_sa({{1, 3, 5, 0, 2, 4, 4}}, io::SaFormat::Binary));
    std::ostringstream bad;
    EXPECT_EQ(cmd_verify(c, bad, err), 1);
    EXPECT_NE(bad.str().find("FAIL permutation"), std::string::npos);

    c.sa_in = write("good.sa", io::encode_sa({{1, 3, 5, 0, 2, 4, 6}}, io::SaFormat::Binary));
    std::ostringstream good;
    EXPECT_EQ(cmd_verify(c, good, err), 0) << good.str();

    // A permutation in the wrong order fails sortedness and the comparison.
    c.sa_in = write("swapped.sa", io::encode_sa({{3, 1, 5, 0, 2, 4, 6}}, io::SaFormat::Binary));
    std::ostringstream swapped;
    EXPECT_EQ(cmd_verify(c, swapped, err), 1);
    EXPECT_NE(swapped.str().find("FAIL sortedness"), std::string::npos);
}

TEST_F(CliTest, VerifyJsonReport)
{
    auto c = banana_config(write("banana.txt", "BANANA"));
    c.format = ReportFormat::Json;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(c, out, err), 0);
    EXPECT_EQ(out.str().front(), '[');
    EXPECT_NE(out.str().find("\"status\":\"PASS\""), std::string::npos);
}

TEST_F(CliTest, BenchEmptyDatasetList)
{
    BenchConfig b;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_bench(b, out, err), 0);
    EXPECT_TRUE(run_bench(b).empty());

    b.base.format = ReportFormat::Json;
    std::ostringstream json;
    EXPECT_EQ(cmd_bench(b, json, err), 0);
    EXPECT_EQ(json.str(), "[]\n");
}

TEST_F(CliTest, BenchRowsAreVerified)
{
    BenchConfig b;
    b.datasets = {write("dna.txt", corpus::dna_like(20000, 4))};
    b.prefixes = {5000, 20000};
    b.base.workers = 2;
    const auto rows = run_bench(b);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.status, CellStatus::Ok) << r.note;
        EXPECT_TRUE(r.seconds.has_value());
        EXPECT_EQ(r.workers, 2u);
        EXPECT_EQ(r.iterations.has_value(), r.algorithm == Algorithm::Pda);
    }
    EXPECT_EQ(rows[0].bytes, 5000u);
    EXPECT_EQ(rows[2].bytes, 20000u);

    std::ostringstream table;
    print_bench(rows, ReportFormat::Text, b.timeout_seconds, table);
    EXPECT_NE(table.str().find("dataset"), std::string::npos);
    EXPECT_NE(table.str().find("smr-t"), std::string::npos);
}

TEST_F(CliTest, BenchTimeoutIsReportedNotTimed)
{
    BenchConfig b;
    b.datasets = {write("skewed.txt", corpus::skewed(60000, 2))};
    b.algorithms = {Algorithm::SmrRadix};
    b.timeout_seconds = 0.2;
    b.base.workers = 2;
    const auto rows = run_bench(b);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].status, CellStatus::Timeout);
    EXPECT_FALSE(rows[0].seconds.has_value());

    std::ostringstream table;
    print_bench(rows, ReportFormat::Text, b.timeout_seconds, table);
    EXPECT_NE(table.str().find("> 0.2 s"), std::string::npos) << table.str();
}

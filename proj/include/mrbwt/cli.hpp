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

#ifndef MRBWT_CLI_HPP
#define MRBWT_CLI_HPP

#include "mrbwt/bwt.hpp"
#include "mrbwt/io.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mrbwt::cli
{

enum class ReportFormat : std::uint8_t
{
    Text,
    Json,
};

struct RunConfig
{
    std::filesystem::path input;
    std::optional<std::uint64_t> max_bytes;
    Algorithm algorithm = Algorithm::Pda;
    // Only meaningful for the SMR variants.
    std::optional<std::size_t> k;
    // 0 means one partition per worker.
    std::size_t partitions = 0;
    std::size_t workers = 1;
    std::uint64_t seed = 0x6d72627774ULL;
    std::uint8_t sentinel = 0;
    SentinelOrder sentinel_order = SentinelOrder::Smallest;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> sa_out;
    io::SaFormat sa_format = io::SaFormat::Binary;
    ReportFormat format = ReportFormat::Text;

    // verify only
    std::optional<std::filesystem::path> sa_in;
    std::optional<Algorithm> cross_check;
    std::size_t spot_checks = 1000;

    // Throws std::invalid_argument on inconsistent options.
    void validate() const;
    PipelineConfig pipeline() const;
};

int cmd_bwt(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sa(const RunConfig& config, std::ostream& out, std::ostream& err);

// Exit status 0 only when every check passes.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchConfig
{
    std::vector<std::filesystem::path> datasets;
    std::vector<Algorithm> algorithms{Algorithm::Pda, Algorithm::SmrTimsort};
    // Prefix sizes in bytes; empty means whole files.
    std::vector<std::uint64_t> prefixes;
    double timeout_seconds = 3600;
    RunConfig base;
};

enum class CellStatus : std::uint8_t
{
    Ok,
    Timeout,
    Failed,
};

struct BenchRow
{
    std::string dataset;
    std::uint64_t bytes = 0;
    Algorithm algorithm = Algorithm::Pda;
    CellStatus status = CellStatus::Failed;
    // Present only for verified runs.
    std::optional<double> seconds;
    std::optional<unsigned> iterations;
    std::size_t partitions = 0;
    std::size_t workers = 0;
    std::string note;
};

// Each cell runs in a child process so it can be cut off at the timeout.
std::vector<BenchRow> run_bench(const BenchConfig& config);
void print_bench(const std::vector<BenchRow>& rows, ReportFormat format, double timeout_seconds,
                 std::ostream& out);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

} // namespace mrbwt::cli

#endif

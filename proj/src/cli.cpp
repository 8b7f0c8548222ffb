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

#include "mrbwt/oracle.hpp"
#include "mrbwt/pda.hpp"

#include <nlohmann/json.hpp>

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mrbwt::cli
{

namespace
{

constexpr std::uint64_t kNaiveCheckLimit = 64 * 1024;

bool is_smr(Algorithm a)
{
    return a == Algorithm::SmrRadix || a == Algorithm::SmrTimsort;
}

struct Construction
{
    SuffixArray sa;
    std::optional<unsigned> iterations;
};

Construction construct(const Text& text, Algorithm algorithm, const PipelineConfig& config)
{
    if (algorithm == Algorithm::Pda) {
        const engine::Engine engine(config.engine);
        auto result = pda::compute_isa(text, engine);
        return {isa_to_sa(result.isa), result.iterations};
    }
    return {build_suffix_array(text, algorithm, config), std::nullopt};
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

std::string format_limit(double s)
{
    std::ostringstream os;
    os << "> " << s << " s";
    return os.str();
}

void report_run(const RunConfig& config, const Text& text, const Construction& built, double seconds,
                const std::optional<BwtResult>& bwt, std::ostream& out)
{
    if (config.format == ReportFormat::Json) {
        nlohmann::json j;
        j["input"] = config.input.string();
        j["bytes"] = text.payload_size();
        j["algorithm"] = algorithm_name(config.algorithm);
        j["workers"] = config.workers;
        j["partitions"] = config.pipeline().engine.num_partitions;
        j["seconds"] = seconds;
        j["iterations"] = built.iterations ? nlohmann::json(*built.iterations) : nlohmann::json();
        if (bwt)
            j["row_index"] = bwt->row_index;
        out << j.dump() << '\n';
        return;
    }
    out << "input=" << config.input.string() << " bytes=" << text.payload_size()
        << " algorithm=" << algorithm_name(config.algorithm) << " seconds=" << format_seconds(seconds);
    if (built.iterations)
        out << " iterations=" << *built.iterations;
    if (bwt)
        out << " I=" << bwt->row_index;
    out << '\n';
}

template <class Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

void RunConfig::validate() const
{
    if (workers == 0)
        throw std::invalid_argument("--workers must be positive");
    if (max_bytes && *max_bytes == 0)
        throw std::invalid_argument("--max-bytes must be at least 1");
    if (k) {
        if (!is_smr(algorithm))
            throw std::invalid_argument("--kmer applies only to smr-r and smr-t");
        if (*k == 0)
            throw std::invalid_argument("--kmer must be positive");
    }
}

PipelineConfig RunConfig::pipeline() const
{
    PipelineConfig config;
    const std::size_t r = partitions != 0 ? partitions : workers;
    config.engine.num_workers = workers;
    config.engine.num_partitions = r;
    config.engine.sample_size = std::max<std::size_t>(1024, 100 * r);
    config.engine.rng_seed = seed;
    config.smr.k = k.value_or(8);
    config.smr.r = r;
    return config;
}

int cmd_bwt(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        if (!config.out)
            throw std::invalid_argument("bwt needs --out");
        const Text text = io::ingest(config.input, config.max_bytes, config.sentinel, config.sentinel_order);
        const auto pipeline = config.pipeline();
        const auto start = std::chrono::steady_clock::now();
        const auto built = construct(text, config.algorithm, pipeline);
        const auto bwt = sa_to_bwt(built.sa, text, engine::Engine(pipeline.engine));
        const double elapsed = seconds_since(start);

        io::write_file(*config.out, io::encode_bwt(bwt));
        if (config.sa_out)
            io::write_file(*config.sa_out, io::encode_sa(built.sa, config.sa_format));
        report_run(config, text, built, elapsed, bwt, out);
        return 0;
    });
}

int cmd_sa(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        const auto target = config.out ? config.out : config.sa_out;
        if (!target)
            throw std::invalid_argument("sa needs --out");
        const Text text = io::ingest(config.input, config.max_bytes, config.sentinel, config.sentinel_order);
        const auto start = std::chrono::steady_clock::now();
        const auto built = construct(text, config.algorithm, config.pipeline());
        const double elapsed = seconds_since(start);

        io::write_file(*target, io::encode_sa(built.sa, config.sa_format));
        report_run(config, text, built, elapsed, std::nullopt, out);
        return 0;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        config.validate();
        const Text text = io::ingest(config.input, config.max_bytes, config.sentinel, config.sentinel_order);
        const auto pipeline = config.pipeline();
        const engine::Engine engine(pipeline.engine);

        SuffixArray sa;
        if (config.sa_in)
            sa = io::decode_sa(io::read_file(*config.sa_in), config.sa_format);
        else
            sa = construct(text, config.algorithm, pipeline).sa;

        struct Check
        {
            std::string name;
            bool pass;
            std::string detail;
        };
        std::vector<Check> checks;
        const std::size_t n = text.size();

        const bool length_ok = sa.size() == n;
        checks.push_back({"length", length_ok,
                          std::to_string(sa.size()) + " entries, expected " + std::to_string(n)});
        const bool perm_ok = length_ok && is_permutation(sa.entries);
        checks.push_back({"permutation", perm_ok, perm_ok ? "" : "entries are not a permutation of 0..n-1"});

        if (perm_ok) {
            std::size_t bad = 0;
            std::size_t tested = 0;
            auto check_pair = [&](std::size_t j) {
                ++tested;
                if (text.compare_suffixes(sa.entries[j], sa.entries[j + 1]) >= 0)
                    ++bad;
            };
            if (n >= 2) {
                if (n - 1 <= config.spot_checks) {
                    for (std::size_t j = 0; j + 1 < n; ++j)
                        check_pair(j);
                } else {
                    std::mt19937_64 rng(config.seed);
                    for (std::size_t s = 0; s < config.spot_checks; ++s)
                        check_pair(rng() % (n - 1));
                }
            }
            checks.push_back({"sortedness", bad == 0,
                              std::to_string(tested) + " adjacent pairs, " + std::to_string(bad)
                                  + " out of order"});

            const auto bwt = sa_to_bwt(sa, text, engine);
            bool round_trip = false;
            std::string detail;
            try {
                round_trip = oracle::inverse_bwt(bwt, text.order()) == text.with_sentinel();
                if (!round_trip)
                    detail = "inverse BWT differs from the input";
            } catch (const DecodeError& e) {
                detail = e.what();
            }
            checks.push_back({"round-trip", round_trip, detail});
        } else {
            checks.push_back({"sortedness", false, "skipped: not a permutation"});
            checks.push_back({"round-trip", false, "skipped: not a permutation"});
        }

        if (text.payload_size() <= kNaiveCheckLimit) {
            const bool same = oracle::naive_sa(text) == sa;
            checks.push_back({"naive", same, same ? "" : "differs from the brute-force suffix array"});
        }
        if (config.cross_check) {
            const bool same = construct(text, *config.cross_check, pipeline).sa == sa;
            checks.push_back({"cross-check " + std::string(algorithm_name(*config.cross_check)), same,
                              same ? "" : "suffix arrays differ"});
        }

        bool all = true;
        nlohmann::json report = nlohmann::json::array();
        for (const auto& c : checks) {
            all = all && c.pass;
            if (config.format == ReportFormat::Json) {
                report.push_back({{"check", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
            } else {
                out << (c.pass ? "PASS " : "FAIL ") << c.name;
                if (!c.detail.empty())
                    out << ": " << c.detail;
                out << '\n';
            }
        }
        if (config.format == ReportFormat::Json)
            out << report.dump() << '\n';
        return all ? 0 : 1;
    });
}

namespace
{

// Runs in the forked child: build, time, verify, and report one line.
std::string run_cell(const BenchConfig& config, const std::filesystem::path& dataset,
                     std::optional<std::uint64_t> prefix, Algorithm algorithm)
{
    RunConfig run = config.base;
    run.algorithm = algorithm;
    const Text text = io::ingest(dataset, prefix, run.sentinel, run.sentinel_order);
    const auto pipeline = run.pipeline();

    const auto start = std::chrono::steady_clock::now();
    const auto built = construct(text, algorithm, pipeline);
    const auto bwt = sa_to_bwt(built.sa, text, engine::Engine(pipeline.engine));
    const double elapsed = seconds_since(start);

    if (!is_permutation(built.sa.entries))
        return "failed suffix array is not a permutation";
    if (oracle::inverse_bwt(bwt, text.order()) != text.with_sentinel())
        return "failed inverse BWT does not reproduce the input";
    std::ostringstream os;
    os << "ok " << std::setprecision(17) << elapsed << ' '
       << (built.iterations ? static_cast<long>(*built.iterations) : -1L);
    return os.str();
}

BenchRow bench_cell(const BenchConfig& config, const std::filesystem::path& dataset,
                    std::optional<std::uint64_t> prefix, Algorithm algorithm)
{
    BenchRow row;
    row.dataset = dataset.filename().string();
    row.algorithm = algorithm;
    row.workers = config.base.workers;
    row.partitions = config.base.pipeline().engine.num_partitions;
    std::error_code ec;
    const auto size = std::filesystem::file_size(dataset, ec);
    if (ec) {
        row.note = "cannot stat " + dataset.string();
        return row;
    }
    row.bytes = prefix ? std::min<std::uint64_t>(size, *prefix) : size;

    int fds[2];
    if (pipe(fds) != 0) {
        row.note = "pipe failed";
        return row;
    }
    std::fflush(nullptr);
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        row.note = "fork failed";
        return row;
    }
    if (pid == 0) {
        close(fds[0]);
        std::string line;
        try {
            line = run_cell(config, dataset, prefix, algorithm);
        } catch (const std::exception& e) {
            line = std::string("failed ") + e.what();
        }
        line += '\n';
        [[maybe_unused]] auto written = write(fds[1], line.data(), line.size());
        close(fds[1]);
        _exit(0);
    }
    close(fds[1]);

    std::string reply;
    const auto deadline = std::chrono::steady_clock::now()
                          + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(config.timeout_seconds));
    bool timed_out = false;
    char buffer[512];
    for (;;) {
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                              deadline - std::chrono::steady_clock::now())
                              .count();
        if (config.timeout_seconds > 0 && left <= 0) {
            timed_out = true;
            break;
        }
        pollfd pfd{fds[0], POLLIN, 0};
        const int wait_ms = config.timeout_seconds > 0 ? static_cast<int>(std::min<long long>(left, 1000)) : 1000;
        const int ready = poll(&pfd, 1, wait_ms);
        if (ready < 0)
            break;
        if (ready == 0)
            continue;
        const auto got = read(fds[0], buffer, sizeof buffer);
        if (got <= 0)
            break;
        reply.append(buffer, static_cast<std::size_t>(got));
    }
    close(fds[0]);
    if (timed_out)
        kill(pid, SIGKILL);
    int wstatus = 0;
    waitpid(pid, &wstatus, 0);

    if (timed_out) {
        row.status = CellStatus::Timeout;
        return row;
    }
    std::istringstream in(reply);
    std::string tag;
    in >> tag;
    if (tag == "ok") {
        double seconds = 0;
        long iterations = -1;
        in >> seconds >> iterations;
        row.status = CellStatus::Ok;
        row.seconds = seconds;
        if (iterations >= 0)
            row.iterations = static_cast<unsigned>(iterations);
    } else {
        row.status = CellStatus::Failed;
        std::getline(in, row.note);
        if (!row.note.empty() && row.note.front() == ' ')
            row.note.erase(0, 1);
        if (row.note.empty())
            row.note = "run terminated abnormally";
    }
    return row;
}

} // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config)
{
    config.base.validate();
    std::vector<std::optional<std::uint64_t>> prefixes;
    for (const auto p : config.prefixes)
        prefixes.emplace_back(p);
    if (prefixes.empty())
        prefixes.emplace_back(config.base.max_bytes);

    std::vector<BenchRow> rows;
    for (const auto& dataset : config.datasets)
        for (const auto& prefix : prefixes)
            for (const auto algorithm : config.algorithms)
                rows.push_back(bench_cell(config, dataset, prefix, algorithm));
    return rows;
}

void print_bench(const std::vector<BenchRow>& rows, ReportFormat format, double timeout_seconds,
                 std::ostream& out)
{
    auto time_cell = [&](const BenchRow& r) -> std::string {
        switch (r.status) {
        case CellStatus::Ok:
            return format_seconds(*r.seconds) + " s";
        case CellStatus::Timeout:
            return format_limit(timeout_seconds);
        case CellStatus::Failed:
            return "FAILED";
        }
        return "";
    };

    if (format == ReportFormat::Json) {
        nlohmann::json report = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["dataset"] = r.dataset;
            j["bytes"] = r.bytes;
            j["algorithm"] = algorithm_name(r.algorithm);
            j["status"] = r.status == CellStatus::Ok ? "ok" : r.status == CellStatus::Timeout ? "timeout" : "failed";
            j["seconds"] = r.seconds ? nlohmann::json(*r.seconds) : nlohmann::json();
            j["time"] = time_cell(r);
            j["iterations"] = r.iterations ? nlohmann::json(*r.iterations) : nlohmann::json();
            j["partitions"] = r.partitions;
            j["workers"] = r.workers;
            if (!r.note.empty())
                j["note"] = r.note;
            report.push_back(std::move(j));
        }
        out << report.dump(2) << '\n';
        return;
    }

    const std::vector<std::string> header{"dataset", "bytes", "algorithm", "time", "iterations",
                                          "partitions", "workers"};
    std::vector<std::vector<std::string>> table{header};
    for (const auto& r : rows) {
        table.push_back({r.dataset, std::to_string(r.bytes), std::string(algorithm_name(r.algorithm)),
                         time_cell(r), r.iterations ? std::to_string(*r.iterations) : "-",
                         std::to_string(r.partitions), std::to_string(r.workers)});
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : table)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
            out << (c + 1 < line.size() ? "  " : "\n");
        }
    }
    for (const auto& r : rows)
        if (r.status == CellStatus::Failed)
            out << "# " << r.dataset << " " << algorithm_name(r.algorithm) << ": " << r.note << '\n';
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto rows = run_bench(config);
        print_bench(rows, config.base.format, config.timeout_seconds, out);
        for (const auto& r : rows)
            if (r.status == CellStatus::Failed)
                return 1;
        return 0;
    });
}

} // namespace mrbwt::cli

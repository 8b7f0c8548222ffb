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

// mrbwt: build, verify and benchmark BWT / suffix array construction.

#include "mrbwt/cli.hpp"
#include "mrbwt/corpus.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace
{

using mrbwt::Algorithm;
using mrbwt::SentinelOrder;
using mrbwt::cli::ReportFormat;

const std::map<std::string, Algorithm> kAlgorithms{
    {"pda", Algorithm::Pda},
    {"smr-r", Algorithm::SmrRadix},
    {"smr-t", Algorithm::SmrTimsort},
    {"naive", Algorithm::Naive},
};

std::uint8_t parse_sentinel(const std::string& value)
{
    if (value.size() == 1 && !std::isdigit(static_cast<unsigned char>(value[0])))
        return static_cast<std::uint8_t>(value[0]);
    const auto parsed = std::stoul(value, nullptr, 0);
    if (parsed > 255)
        throw CLI::ValidationError("--sentinel", "must be a byte value");
    return static_cast<std::uint8_t>(parsed);
}

// Options shared by every command that reads an input text.
struct CommonOptions
{
    mrbwt::cli::RunConfig run;
    std::string sentinel = "0";
    std::size_t kmer = 0;
    CLI::Option* kmer_option = nullptr;
    std::uint64_t max_bytes = 0;
    CLI::Option* max_bytes_option = nullptr;

    void add(CLI::App& app, bool with_input, bool with_algorithm)
    {
        if (with_input)
            app.add_option("input", run.input, "Raw input file")->required()->check(CLI::ExistingFile);
        if (with_algorithm)
            app.add_option("--algorithm", run.algorithm, "Construction algorithm")
                ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
        kmer_option = app.add_option("--kmer", kmer, "k-mer length for smr-r / smr-t (default 8)");
        app.add_option("--partitions", run.partitions, "Partition count (default: workers)");
        app.add_option("--workers", run.workers, "Worker threads")->check(CLI::PositiveNumber);
        app.add_option("--seed", run.seed, "Sampling seed");
        app.add_option("--sentinel", sentinel, "Sentinel byte: a character or a number (default 0)");
        app.add_option("--sentinel-order", run.sentinel_order, "Where the sentinel sorts")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, SentinelOrder>{{"smallest", SentinelOrder::Smallest},
                                                     {"largest", SentinelOrder::Largest}},
                CLI::ignore_case));
        max_bytes_option = app.add_option("--max-bytes", max_bytes, "Read at most this many bytes");
        app.add_option("--format", run.format, "Report format")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, ReportFormat>{{"text", ReportFormat::Text}, {"json", ReportFormat::Json}},
                CLI::ignore_case));
        app.add_option("--sa-format", run.sa_format, "Suffix array encoding")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, mrbwt::io::SaFormat>{{"binary", mrbwt::io::SaFormat::Binary},
                                                           {"text", mrbwt::io::SaFormat::Text}},
                CLI::ignore_case));
    }

    void finish()
    {
        run.sentinel = parse_sentinel(sentinel);
        if (kmer_option->count() > 0)
            run.k = kmer;
        if (max_bytes_option->count() > 0)
            run.max_bytes = max_bytes;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Burrows-Wheeler transform and suffix array construction"};
    app.require_subcommand(1);

    CommonOptions bwt_opts;
    auto* bwt = app.add_subcommand("bwt", "Write the BWT (and optionally the suffix array)");
    bwt_opts.add(*bwt, true, true);
    std::string bwt_out;
    std::string bwt_sa_out;
    bwt->add_option("--out", bwt_out, "BWT output path")->required();
    bwt->add_option("--sa-out", bwt_sa_out, "Suffix array output path");

    CommonOptions sa_opts;
    auto* sa = app.add_subcommand("sa", "Write the suffix array");
    sa_opts.add(*sa, true, true);
    std::string sa_out;
    sa->add_option("--out,--sa-out", sa_out, "Suffix array output path")->required();

    CommonOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Check a construction (or an existing suffix array file)");
    verify_opts.add(*verify, true, true);
    std::string verify_sa;
    Algorithm cross = Algorithm::Naive;
    auto* cross_option = verify->add_option("--cross-check", cross, "Also compare against this algorithm")
                             ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
    verify->add_option("--sa", verify_sa, "Verify this suffix array file instead of building one")
        ->check(CLI::ExistingFile);
    verify->add_option("--spot-checks", verify_opts.run.spot_checks, "Sampled adjacent-pair checks");

    CommonOptions bench_opts;
    auto* bench = app.add_subcommand("bench", "Time verified constructions over datasets and prefixes");
    bench_opts.add(*bench, false, false);
    mrbwt::cli::BenchConfig bench_config;
    std::vector<std::string> bench_algorithms;
    bench->add_option("datasets", bench_config.datasets, "Dataset files")->check(CLI::ExistingFile);
    bench->add_option("--algorithms", bench_algorithms, "Algorithms to run (default pda,smr-t)")
        ->delimiter(',');
    bench->add_option("--prefix", bench_config.prefixes, "Prefix sizes in bytes (repeatable)")->delimiter(',');
    bench->add_option("--timeout", bench_config.timeout_seconds, "Per-cell timeout in seconds (0 = none)");

    std::string gen_out;
    std::size_t gen_bytes = 1 << 20;
    std::uint64_t gen_seed = 1;
    std::string gen_kind = "dna";
    auto* gen = app.add_subcommand("gen", "Write a synthetic input file");
    gen->add_option("--out", gen_out, "Output path")->required();
    gen->add_option("--bytes", gen_bytes, "Length in bytes");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--kind", gen_kind, "dna | skewed")->check(CLI::IsMember({"dna", "skewed"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (bwt->parsed()) {
            bwt_opts.finish();
            bwt_opts.run.out = bwt_out;
            if (!bwt_sa_out.empty())
                bwt_opts.run.sa_out = bwt_sa_out;
            return mrbwt::cli::cmd_bwt(bwt_opts.run, std::cout, std::cerr);
        }
        if (sa->parsed()) {
            sa_opts.finish();
            sa_opts.run.out = sa_out;
            return mrbwt::cli::cmd_sa(sa_opts.run, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            verify_opts.finish();
            if (!verify_sa.empty())
                verify_opts.run.sa_in = verify_sa;
            if (cross_option->count() > 0)
                verify_opts.run.cross_check = cross;
            return mrbwt::cli::cmd_verify(verify_opts.run, std::cout, std::cerr);
        }
        if (bench->parsed()) {
            bench_opts.finish();
            bench_config.base = bench_opts.run;
            if (!bench_algorithms.empty()) {
                bench_config.algorithms.clear();
                for (const auto& name : bench_algorithms) {
                    const auto a = mrbwt::parse_algorithm(name);
                    if (!a)
                        throw CLI::ValidationError("--algorithms", "unknown algorithm " + name);
                    bench_config.algorithms.push_back(*a);
                }
            }
            return mrbwt::cli::cmd_bench(bench_config, std::cout, std::cerr);
        }
        if (gen->parsed()) {
            const auto text = gen_kind == "dna" ? mrbwt::corpus::dna_like(gen_bytes, gen_seed)
                                                : mrbwt::corpus::skewed(gen_bytes, gen_seed);
            mrbwt::io::write_file(gen_out, text);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

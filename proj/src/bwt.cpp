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

#include "mrbwt/oracle.hpp"
#include "mrbwt/pda.hpp"

namespace mrbwt
{

std::string_view algorithm_name(Algorithm algorithm) noexcept
{
    switch (algorithm) {
    case Algorithm::Pda:
        return "pda";
    case Algorithm::SmrRadix:
        return "smr-r";
    case Algorithm::SmrTimsort:
        return "smr-t";
    case Algorithm::Naive:
        return "naive";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept
{
    for (auto a : {Algorithm::Pda, Algorithm::SmrRadix, Algorithm::SmrTimsort, Algorithm::Naive})
        if (algorithm_name(a) == name)
            return a;
    return std::nullopt;
}

BwtResult sa_to_bwt(const SuffixArray& sa, const Text& text, const engine::Engine& engine)
{
    const std::size_t n = text.size();
    if (sa.size() != n)
        throw InvalidPermutation("suffix array length " + std::to_string(sa.size())
                                 + " does not match text length " + std::to_string(n));
    if (!is_permutation(sa.entries))
        throw InvalidPermutation("suffix array is not a permutation");

    auto predecessors = engine.generate(n, [&](std::size_t row) {
        return std::pair<std::uint64_t, std::uint64_t>((sa.entries[row] + n - 1) % n, row);
    });
    auto characters = engine.generate(n, [&](std::size_t i) {
        return std::pair<std::uint64_t, std::uint8_t>(i, text.at(i));
    });
    auto joined = engine.join(std::move(predecessors), std::move(characters));
    auto by_row = engine.map(std::move(joined), [](std::uint64_t, const auto& rc) {
        return std::pair<std::uint64_t, std::uint8_t>(rc.first, rc.second);
    });
    auto sorted = engine.range_partition_and_sort(std::move(by_row), engine.config().num_partitions);

    BwtResult out;
    out.transformed.reserve(n);
    for (const auto& part : sorted.partitions())
        for (const auto& rec : part)
            out.transformed.push_back(static_cast<char>(rec.second));

    auto origin = engine.filter(engine.generate(n, [&](std::size_t row) {
        return std::pair<std::uint64_t, std::uint64_t>(sa.entries[row], row);
    }), [](std::uint64_t pos, std::uint64_t) { return pos == 0; });
    const auto hits = origin.collect();
    if (hits.size() != 1)
        throw InvalidPermutation("suffix array has no entry for position 0");
    out.row_index = hits.front().second;
    return out;
}

SuffixArray build_suffix_array(const Text& text, Algorithm algorithm, const PipelineConfig& config)
{
    const engine::Engine engine(config.engine);
    switch (algorithm) {
    case Algorithm::Pda:
        return pda::compute_sa(text, engine);
    case Algorithm::SmrRadix:
    case Algorithm::SmrTimsort: {
        auto smr_config = config.smr;
        smr_config.sorter = algorithm == Algorithm::SmrRadix ? smr::Sorter::RadixLsd
                                                             : smr::Sorter::StableComparison;
        return smr::smr_sa(text, smr_config, engine);
    }
    case Algorithm::Naive:
        return oracle::naive_sa(text);
    }
    throw Error("unknown algorithm");
}

BwtResult bwt_pipeline(const Text& text, Algorithm algorithm, const PipelineConfig& config)
{
    const engine::Engine engine(config.engine);
    return sa_to_bwt(build_suffix_array(text, algorithm, config), text, engine);
}

} // namespace mrbwt

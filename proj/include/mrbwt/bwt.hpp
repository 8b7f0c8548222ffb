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

#ifndef MRBWT_BWT_HPP
#define MRBWT_BWT_HPP

#include "mrbwt/engine.hpp"
#include "mrbwt/smr.hpp"
#include "mrbwt/text.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace mrbwt
{

enum class Algorithm : std::uint8_t
{
    Pda,
    SmrRadix,
    SmrTimsort,
    Naive,
};

std::string_view algorithm_name(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct PipelineConfig
{
    engine::EngineConfig engine;
    // k and r for the SMR variants; the sorter follows from the algorithm.
    smr::SmrConfig smr;
};

// BWT from a suffix array through an engine join: (predecessor position, row)
// joined with (position, character), then ordered by row.
BwtResult sa_to_bwt(const SuffixArray& sa, const Text& text, const engine::Engine& engine);

SuffixArray build_suffix_array(const Text& text, Algorithm algorithm, const PipelineConfig& config);

BwtResult bwt_pipeline(const Text& text, Algorithm algorithm, const PipelineConfig& config);

} // namespace mrbwt

#endif

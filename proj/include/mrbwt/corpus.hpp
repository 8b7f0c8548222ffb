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

#ifndef MRBWT_CORPUS_HPP
#define MRBWT_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Synthetic inputs for tests and benchmarks.
namespace mrbwt::corpus
{

std::string random_text(std::size_t length, std::string_view alphabet, std::uint64_t seed);

// Newline-separated lines over {A,C,G,T}, with the occasional N.
std::string dna_like(std::size_t length, std::uint64_t seed, std::size_t line_width = 60);

// Two thirds T's, then random bytes over {A,C,G}. The all-T k-mer is both the
// most frequent and the largest key, so with two range partitions the upper
// one holds the whole run while its last position sits a third of the input
// from the end: its block width grows with the input.
std::string skewed(std::size_t length, std::uint64_t seed);

} // namespace mrbwt::corpus

#endif

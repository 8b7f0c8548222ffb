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

#include "mrbwt/corpus.hpp"

#include <random>
#include <stdexcept>

namespace mrbwt::corpus
{

std::string random_text(std::size_t length, std::string_view alphabet, std::uint64_t seed)
{
    if (alphabet.empty())
        throw std::invalid_argument("alphabet must not be empty");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string out(length, '\0');
    for (auto& c : out)
        c = alphabet[pick(rng)];
    return out;
}

std::string dna_like(std::size_t length, std::uint64_t seed, std::size_t line_width)
{
    std::mt19937_64 rng(seed);
    std::string out(length, '\0');
    for (std::size_t i = 0; i < length; ++i) {
        if (line_width > 0 && (i + 1) % (line_width + 1) == 0) {
            out[i] = '\n';
            continue;
        }
        const auto roll = rng() % 1000;
        out[i] = roll == 0 ? 'N' : "ACGT"[roll % 4];
    }
    return out;
}

std::string skewed(std::size_t length, std::uint64_t seed)
{
    const std::size_t run = length / 3 * 2 + length % 3;
    return std::string(run, 'T') + random_text(length - run, "ACG", seed);
}

} // namespace mrbwt::corpus

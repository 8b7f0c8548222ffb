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

#ifndef MRBWT_SMR_HPP
#define MRBWT_SMR_HPP

#include "mrbwt/engine.hpp"
#include "mrbwt/text.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Sorting-based suffix array construction: suffixes keyed by their k-mer are
// range partitioned so that every partition covers a contiguous slice of the
// suffix order, then each partition is sorted on its own.
namespace mrbwt::smr
{

enum class Sorter : std::uint8_t
{
    RadixLsd,
    StableComparison,
};

struct SmrConfig
{
    std::size_t k = 8;
    // 0 means one partition per engine worker.
    std::size_t r = 0;
    Sorter sorter = Sorter::StableComparison;

    void validate() const;
};

using KmerDataset = engine::KeyedDataset<std::string, std::uint64_t>;

// Orders k-mers (raw bytes, sentinel included) by the text's character order.
struct KmerLess
{
    CharOrder order;

    bool operator()(const std::string& a, const std::string& b) const noexcept
    {
        return order.compare(a, b) < 0;
    }
};

// One (k-mer, i) tuple per suffix position, sentinel padded past the end.
KmerDataset kmer_map(const Text& text, std::size_t k, const engine::Engine& engine);

// Range partitions the tuples on their k-mer keys. Partitions come out
// ordered and key sorted, so every k-mer of partition j precedes every k-mer
// of partition j+1.
KmerDataset partition_suffixes(KmerDataset tuples, std::size_t r, const CharOrder& order,
                               const engine::Engine& engine);

// The suffix positions of one partition, sorted by position. l_max is the
// largest gap between consecutive positions, the gap from the last position
// to the end of the text included.
class PartitionBlock
{
public:
    PartitionBlock(std::vector<std::uint64_t> positions, std::size_t text_size);

    const std::vector<std::uint64_t>& positions() const noexcept { return positions_; }
    std::size_t l_max() const noexcept { return l_max_; }

    // text[p_j .. p_j + l_max) with sentinel padding.
    std::string block(const Text& text, std::size_t j) const;

private:
    std::vector<std::uint64_t> positions_;
    std::size_t l_max_ = 0;
};

struct PartialSaStats
{
    // Runs of byte-identical blocks that needed full suffix comparison.
    std::size_t tie_runs = 0;
    std::size_t tie_positions = 0;
};

// Orders the positions of one partition by suffix: sort fixed-length blocks,
// then settle any identical blocks by comparing whole suffixes.
std::vector<std::uint64_t> partial_sa(const PartitionBlock& block, const Text& text, Sorter sorter,
                                      PartialSaStats* stats = nullptr);

struct Block
{
    std::string bytes;
    std::uint64_t position = 0;

    bool operator==(const Block&) const = default;
};

// Stable LSD radix sort of equal-length blocks. Throws std::invalid_argument
// on unequal lengths.
std::vector<Block> radix_sort_blocks(std::vector<Block> blocks, const CharOrder& order);

// Stable comparison sort with the same contract as radix_sort_blocks.
std::vector<Block> comparison_sort_blocks(std::vector<Block> blocks, const CharOrder& order);

SuffixArray smr_sa(const Text& text, const SmrConfig& config, const engine::Engine& engine);

} // namespace mrbwt::smr

#endif

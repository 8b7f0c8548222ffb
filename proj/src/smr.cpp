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

#include "mrbwt/smr.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mrbwt::smr
{

void SmrConfig::validate() const
{
    if (k == 0)
        throw std::invalid_argument("k-mer length must be positive");
}

KmerDataset kmer_map(const Text& text, std::size_t k, const engine::Engine& engine)
{
    if (k == 0)
        throw std::invalid_argument("k-mer length must be positive");
    return engine.generate(text.size(), [&](std::size_t i) {
        return std::pair<std::string, std::uint64_t>(text.substring(i, k), i);
    });
}

KmerDataset partition_suffixes(KmerDataset tuples, std::size_t r, const CharOrder& order,
                               const engine::Engine& engine)
{
    return engine.range_partition_and_sort(std::move(tuples), r, KmerLess{order});
}

PartitionBlock::PartitionBlock(std::vector<std::uint64_t> positions, std::size_t text_size)
    : positions_(std::move(positions))
{
    std::sort(positions_.begin(), positions_.end());
    if (positions_.empty())
        return;
    for (std::size_t j = 1; j < positions_.size(); ++j)
        l_max_ = std::max<std::size_t>(l_max_, positions_[j] - positions_[j - 1]);
    l_max_ = std::max<std::size_t>(l_max_, text_size - positions_.back());
}

std::string PartitionBlock::block(const Text& text, std::size_t j) const
{
    return text.substring(positions_.at(j), l_max_);
}

namespace
{

// Stable LSD counting sort over `width` byte columns; code(item, d) yields the
// order code of column d.
template <class Item, class CodeAt>
void lsd_radix(std::vector<Item>& items, std::size_t width, CodeAt code)
{
    std::vector<Item> scratch(items.size());
    std::array<std::size_t, CharOrder::kAlphabetSize + 1> start{};
    for (std::size_t d = width; d-- > 0;) {
        start.fill(0);
        for (const auto& item : items)
            ++start[code(item, d) + 1];
        for (std::size_t c = 0; c < CharOrder::kAlphabetSize; ++c)
            start[c + 1] += start[c];
        for (auto& item : items)
            scratch[start[code(item, d)]++] = std::move(item);
        items.swap(scratch);
    }
}

void require_equal_lengths(const std::vector<Block>& blocks)
{
    for (const auto& b : blocks)
        if (b.bytes.size() != blocks.front().bytes.size())
            throw std::invalid_argument("blocks must all have the same length");
}

} // namespace

std::vector<Block> radix_sort_blocks(std::vector<Block> blocks, const CharOrder& order)
{
    if (blocks.empty())
        return blocks;
    require_equal_lengths(blocks);
    lsd_radix(blocks, blocks.front().bytes.size(), [&](const Block& b, std::size_t d) {
        return order.code(static_cast<std::uint8_t>(b.bytes[d]));
    });
    return blocks;
}

std::vector<Block> comparison_sort_blocks(std::vector<Block> blocks, const CharOrder& order)
{
    if (blocks.empty())
        return blocks;
    require_equal_lengths(blocks);
    std::stable_sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
        return order.compare(a.bytes, b.bytes) < 0;
    });
    return blocks;
}

std::vector<std::uint64_t> partial_sa(const PartitionBlock& block, const Text& text, Sorter sorter,
                                      PartialSaStats* stats)
{
    std::vector<std::uint64_t> order = block.positions();
    const std::size_t width = block.l_max();
    if (order.size() <= 1)
        return order;

    // Blocks are read straight from the text; positions past the end read as
    // the sentinel, which matches the padded block bytes.
    if (sorter == Sorter::RadixLsd) {
        lsd_radix(order, width, [&](std::uint64_t p, std::size_t d) { return text.code_at(p + d); });
    } else {
        std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
            return text.compare_prefixes(a, b, width) < 0;
        });
    }

    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && text.compare_prefixes(order[i], order[j], width) == 0)
            ++j;
        if (j - i > 1) {
            std::sort(order.begin() + static_cast<std::ptrdiff_t>(i),
                      order.begin() + static_cast<std::ptrdiff_t>(j),
                      [&](std::uint64_t a, std::uint64_t b) { return text.compare_suffixes(a, b) < 0; });
            if (stats) {
                ++stats->tie_runs;
                stats->tie_positions += j - i;
            }
        }
        i = j;
    }
    return order;
}

SuffixArray smr_sa(const Text& text, const SmrConfig& config, const engine::Engine& engine)
{
    config.validate();
    const std::size_t r = config.r != 0 ? config.r : engine.config().num_workers;
    auto partitions = partition_suffixes(kmer_map(text, config.k, engine), r, text.order(), engine);

    auto partial = engine.map_partitions(partitions, [&](std::size_t, const auto& part) {
        std::vector<std::uint64_t> positions;
        positions.reserve(part.size());
        for (const auto& rec : part)
            positions.push_back(rec.second);
        const PartitionBlock block(std::move(positions), text.size());
        auto sorted = partial_sa(block, text, config.sorter);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        out.reserve(sorted.size());
        for (std::size_t j = 0; j < sorted.size(); ++j)
            out.emplace_back(j, sorted[j]);
        return out;
    });

    SuffixArray sa;
    sa.entries.reserve(text.size());
    for (const auto& part : partial.partitions())
        for (const auto& rec : part)
            sa.entries.push_back(rec.second);
    return sa;
}

} // namespace mrbwt::smr

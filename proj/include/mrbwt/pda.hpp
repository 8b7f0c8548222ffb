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

#ifndef MRBWT_PDA_HPP
#define MRBWT_PDA_HPP

#include "mrbwt/engine.hpp"
#include "mrbwt/text.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

// Prefix doubling over engine datasets: ranks by first character, then
// repeated shift / pair / re-rank rounds until every suffix has its own rank.
namespace mrbwt::pda
{

using Position = std::int64_t;
using Rank = std::int64_t;

// Occ(c): number of characters of the text (sentinel included) that are
// strictly smaller than c.
class OccTable
{
public:
    OccTable() = default;
    OccTable(const CharOrder& order, const std::array<std::uint64_t, CharOrder::kAlphabetSize>& counts);

    Rank of_code(std::uint16_t code) const noexcept { return occ_[code]; }
    Rank of_byte(std::uint8_t byte) const noexcept { return occ_[order_.code(byte)]; }
    bool contains(std::uint8_t byte) const noexcept { return present_[order_.code(byte)]; }

    // (byte, Occ) for every character present, in character order.
    std::vector<std::pair<std::uint8_t, Rank>> entries() const;

private:
    CharOrder order_;
    std::array<Rank, CharOrder::kAlphabetSize> occ_{};
    std::array<bool, CharOrder::kAlphabetSize> present_{};
};

enum class Origin : std::uint8_t
{
    Original,
    Shifted,
};

// Value of a shift record: a rank tagged with where it came from. The tag
// replaces a sign encoding, which cannot mark a shifted rank of zero.
struct ShiftValue
{
    Rank rank = 0;
    Origin origin = Origin::Original;

    auto operator<=>(const ShiftValue&) const = default;
};

// (rank at i, rank at i + 2^k). second is 0 when i + 2^k runs past the text;
// has_successor tells that case apart from a genuine rank 0.
struct RankPair
{
    Rank first = 0;
    Rank second = 0;
    bool has_successor = false;

    bool operator==(const RankPair&) const = default;
};

using IsaDataset = engine::KeyedDataset<Position, Rank>;
using ShiftDataset = engine::KeyedDataset<Position, ShiftValue>;
using PairDataset = engine::KeyedDataset<Position, RankPair>;

OccTable compute_occ(const Text& text, const engine::Engine& engine);

// One (i, Occ(text[i])) record per position.
IsaDataset init_isa(const Text& text, const OccTable& occ, const engine::Engine& engine);

// Union of (i, (r, Original)) and (i - 2^k, (r, Shifted)), before dropping
// negative keys.
ShiftDataset shift_records(const IsaDataset& isa, unsigned k, const engine::Engine& engine);

// Pairs every position's rank with the rank 2^k positions later.
PairDataset shift_and_pair(const IsaDataset& isa, unsigned k, const engine::Engine& engine);

struct RerankOutcome
{
    IsaDataset isa;
    std::uint64_t distinct_ranks = 0;
};

// Sorts pairs lexicographically and gives each position the sorted index of
// the first pair equal to its own.
RerankOutcome rerank_counted(const PairDataset& pairs, const engine::Engine& engine);
IsaDataset rerank(const PairDataset& pairs, const engine::Engine& engine);

struct IterationTrace
{
    // Shift used by the round that produced `ranks`; -1 for the initial ranks.
    int k = -1;
    // ranks[i] is the rank of suffix i.
    const std::vector<Rank>& ranks;
};

struct PdaResult
{
    InverseSuffixArray isa;
    unsigned iterations = 0;
};

// Runs the full doubling loop. When `observer` is set, ranks are collected
// and reported after initialization and after every round.
PdaResult compute_isa(const Text& text, const engine::Engine& engine,
                      const std::function<void(const IterationTrace&)>& observer = {});

SuffixArray compute_sa(const Text& text, const engine::Engine& engine);

// Ranks ordered by position; throws if the dataset is not one rank per position.
std::vector<Rank> ranks_by_position(const IsaDataset& isa, std::size_t n);

} // namespace mrbwt::pda

#endif

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

#include "mrbwt/pda.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace mrbwt::pda
{

OccTable::OccTable(const CharOrder& order,
                   const std::array<std::uint64_t, CharOrder::kAlphabetSize>& counts)
    : order_(order)
{
    Rank running = 0;
    for (std::size_t c = 0; c < CharOrder::kAlphabetSize; ++c) {
        occ_[c] = running;
        present_[c] = counts[c] > 0;
        running += static_cast<Rank>(counts[c]);
    }
}

std::vector<std::pair<std::uint8_t, Rank>> OccTable::entries() const
{
    std::vector<std::pair<std::uint8_t, Rank>> out;
    for (unsigned code = 0; code < CharOrder::kAlphabetSize; ++code) {
        if (!present_[code])
            continue;
        // Recover the byte carrying this code.
        for (unsigned b = 0; b < 256; ++b) {
            if (order_.code(static_cast<std::uint8_t>(b)) == code) {
                out.emplace_back(static_cast<std::uint8_t>(b), occ_[code]);
                break;
            }
        }
    }
    return out;
}

OccTable compute_occ(const Text& text, const engine::Engine& engine)
{
    auto ones = engine.generate(text.size(), [&](std::size_t i) {
        return std::pair<std::uint16_t, std::uint64_t>(text.code_at(i), 1);
    });
    auto counts = engine.reduce_by_key(std::move(ones),
                                       [](std::uint64_t a, std::uint64_t b) { return a + b; });

    std::array<std::uint64_t, CharOrder::kAlphabetSize> table{};
    for (const auto& [code, count] : counts.collect())
        table[code] = count;
    return OccTable(text.order(), table);
}

IsaDataset init_isa(const Text& text, const OccTable& occ, const engine::Engine& engine)
{
    return engine.generate(text.size(), [&](std::size_t i) {
        return std::pair<Position, Rank>(static_cast<Position>(i), occ.of_code(text.code_at(i)));
    });
}

namespace
{

Position shift_distance(unsigned k)
{
    if (k >= 62)
        return std::numeric_limits<Position>::max();
    return Position{1} << k;
}

} // namespace

ShiftDataset shift_records(const IsaDataset& isa, unsigned k, const engine::Engine& engine)
{
    const Position shift = shift_distance(k);
    auto original = engine.map(isa, [](Position i, Rank r) {
        return std::pair<Position, ShiftValue>(i, {r, Origin::Original});
    });
    auto shifted = engine.map(isa, [shift](Position i, Rank r) {
        return std::pair<Position, ShiftValue>(i - shift, {r, Origin::Shifted});
    });
    return engine.unite(std::move(original), std::move(shifted));
}

PairDataset shift_and_pair(const IsaDataset& isa, unsigned k, const engine::Engine& engine)
{
    auto records = engine.filter(shift_records(isa, k, engine),
                                 [](Position i, const ShiftValue&) { return i >= 0; });
    return engine.reduce_groups(std::move(records), [](Position, std::span<const ShiftValue> values) {
        RankPair pair;
        int originals = 0;
        int shifted = 0;
        for (const auto& v : values) {
            if (v.origin == Origin::Original) {
                pair.first = v.rank;
                ++originals;
            } else {
                pair.second = v.rank;
                pair.has_successor = true;
                ++shifted;
            }
        }
        if (originals != 1 || shifted > 1) {
            throw std::invalid_argument("expected one original and at most one shifted rank, got "
                                        + std::to_string(originals) + " and "
                                        + std::to_string(shifted));
        }
        return pair;
    });
}

RerankOutcome rerank_counted(const PairDataset& pairs, const engine::Engine& engine)
{
    using Key = std::pair<Rank, Rank>;
    auto keyed = engine.map(pairs, [](Position i, const RankPair& p) {
        return std::pair<Key, Position>(Key(p.first, p.second), i);
    });
    auto sorted = engine.range_partition_and_sort(std::move(keyed), engine.config().num_partitions);

    // Offsets are the only cross-partition information the local pass needs.
    const auto& parts = sorted.partitions();
    std::vector<Rank> offset(parts.size() + 1, 0);
    for (std::size_t p = 0; p < parts.size(); ++p)
        offset[p + 1] = offset[p] + static_cast<Rank>(parts[p].size());

    std::vector<std::vector<std::pair<Position, Rank>>> ranked(parts.size());
    std::vector<std::uint64_t> fresh(parts.size(), 0);
    engine.parallel_for(parts.size(), [&](std::size_t p) {
        const auto& part = parts[p];
        auto& out = ranked[p];
        out.reserve(part.size());
        for (std::size_t j = 0; j < part.size(); ++j) {
            if (j > 0 && part[j].first == part[j - 1].first) {
                out.emplace_back(part[j].second, out.back().second);
            } else {
                out.emplace_back(part[j].second, offset[p] + static_cast<Rank>(j));
                ++fresh[p];
            }
        }
    });

    // A run of equal pairs may straddle a partition boundary; the leading run
    // of a partition then inherits the rank of the previous partition's tail.
    const std::pair<Key, Rank>* tail = nullptr;
    std::pair<Key, Rank> last{};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty())
            continue;
        if (tail != nullptr && parts[p].front().first == tail->first) {
            --fresh[p];
            for (std::size_t j = 0; j < parts[p].size() && parts[p][j].first == tail->first; ++j)
                ranked[p][j].second = tail->second;
        }
        last = {parts[p].back().first, ranked[p].back().second};
        tail = &last;
    }

    RerankOutcome result;
    for (const auto f : fresh)
        result.distinct_ranks += f;
    result.isa = IsaDataset(std::move(ranked));
    return result;
}

IsaDataset rerank(const PairDataset& pairs, const engine::Engine& engine)
{
    return rerank_counted(pairs, engine).isa;
}

std::vector<Rank> ranks_by_position(const IsaDataset& isa, std::size_t n)
{
    std::vector<Rank> ranks(n, -1);
    for (const auto& part : isa.partitions()) {
        for (const auto& [i, r] : part) {
            if (i < 0 || static_cast<std::size_t>(i) >= n)
                throw Error("rank record for out-of-range position " + std::to_string(i));
            if (ranks[static_cast<std::size_t>(i)] != -1)
                throw Error("duplicate rank record for position " + std::to_string(i));
            ranks[static_cast<std::size_t>(i)] = r;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (ranks[i] == -1)
            throw Error("missing rank record for position " + std::to_string(i));
    return ranks;
}

namespace
{

unsigned ceil_log2(std::size_t n)
{
    unsigned bits = 0;
    while ((std::size_t{1} << bits) < n)
        ++bits;
    return bits;
}

} // namespace

PdaResult compute_isa(const Text& text, const engine::Engine& engine,
                      const std::function<void(const IterationTrace&)>& observer)
{
    const std::size_t n = text.size();
    const OccTable occ = compute_occ(text, engine);
    IsaDataset isa = init_isa(text, occ, engine);

    std::uint64_t distinct = occ.entries().size();
    if (observer) {
        const auto ranks = ranks_by_position(isa, n);
        observer({-1, ranks});
    }

    PdaResult result;
    const unsigned max_rounds = ceil_log2(n) + 1;
    for (unsigned k = 0; k < max_rounds && distinct < n; ++k) {
        auto pairs = shift_and_pair(isa, k, engine);
        auto next = rerank_counted(pairs, engine);
        isa = std::move(next.isa);
        distinct = next.distinct_ranks;
        ++result.iterations;
        if (observer) {
            const auto ranks = ranks_by_position(isa, n);
            observer({static_cast<int>(k), ranks});
        }
    }

    const auto ranks = ranks_by_position(isa, n);
    result.isa.ranks.assign(ranks.begin(), ranks.end());
    if (!is_permutation(result.isa.ranks))
        throw Error("prefix doubling did not converge to distinct ranks");
    return result;
}

SuffixArray compute_sa(const Text& text, const engine::Engine& engine)
{
    return isa_to_sa(compute_isa(text, engine).isa);
}

} // namespace mrbwt::pda

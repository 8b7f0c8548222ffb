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

#ifndef MRBWT_ENGINE_HPP
#define MRBWT_ENGINE_HPP

#include "mrbwt/text.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

// An in-process partitioned-dataset engine. Datasets are immutable values made
// of ordered partitions; stages run one task per partition on a bounded pool
// of OpenMP threads and exchange records across partitions only at shuffle
// boundaries (reduce, join, range partitioning). Results never depend on the
// worker count.
namespace mrbwt::engine
{

class EngineError : public Error
{
public:
    using Error::Error;
};

struct EngineConfig
{
    std::size_t num_workers = 1;
    std::size_t num_partitions = 1;
    std::size_t sample_size = 1024;
    std::uint64_t rng_seed = 0x6d72627774ULL;

    void validate() const
    {
        if (num_workers == 0)
            throw EngineError("num_workers must be positive");
        if (num_partitions == 0)
            throw EngineError("num_partitions must be positive");
        if (sample_size < num_partitions)
            throw EngineError("sample_size must be at least num_partitions");
    }
};

template <class K, class V>
class KeyedDataset
{
public:
    using key_type = K;
    using value_type = V;
    using Record = std::pair<K, V>;
    using Partition = std::vector<Record>;

    KeyedDataset() = default;

    explicit KeyedDataset(std::vector<Partition> partitions,
                          std::optional<std::vector<K>> range_bounds = std::nullopt)
        : partitions_(std::move(partitions)), range_bounds_(std::move(range_bounds))
    {
    }

    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t num_partitions() const noexcept { return partitions_.size(); }

    std::size_t size() const noexcept
    {
        std::size_t total = 0;
        for (const auto& p : partitions_)
            total += p.size();
        return total;
    }

    // Set when the dataset came out of range partitioning: partition j holds
    // keys in [bounds[j-1], bounds[j]).
    const std::optional<std::vector<K>>& range_bounds() const noexcept { return range_bounds_; }

    // Partitions concatenated in partition order.
    std::vector<Record> collect() const
    {
        std::vector<Record> out;
        out.reserve(size());
        for (const auto& p : partitions_)
            out.insert(out.end(), p.begin(), p.end());
        return out;
    }

    std::vector<Partition> release() && { return std::move(partitions_); }

private:
    std::vector<Partition> partitions_;
    std::optional<std::vector<K>> range_bounds_;
};

namespace detail
{

inline std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <class T>
struct ShuffleHash
{
    std::uint64_t operator()(const T& key) const
    {
        if constexpr (std::is_integral_v<T> || std::is_enum_v<T>)
            return mix64(static_cast<std::uint64_t>(key));
        else
            return mix64(std::hash<T>{}(key));
    }
};

template <class A, class B>
struct ShuffleHash<std::pair<A, B>>
{
    std::uint64_t operator()(const std::pair<A, B>& key) const
    {
        return mix64(ShuffleHash<A>{}(key.first) ^ (ShuffleHash<B>{}(key.second) << 1));
    }
};

template <class T>
concept Streamable = requires(std::ostream& os, const T& t) { os << t; };

template <class T>
std::string describe(const T& value)
{
    if constexpr (Streamable<T>) {
        std::ostringstream os;
        if constexpr (std::is_same_v<T, char> || std::is_same_v<T, unsigned char>
                      || std::is_same_v<T, signed char>)
            os << static_cast<int>(value);
        else
            os << value;
        return os.str();
    } else if constexpr (requires { value.first; value.second; }) {
        return "(" + describe(value.first) + ", " + describe(value.second) + ")";
    } else {
        return "<key>";
    }
}

// Sort records by key under `less`, breaking key ties by value when values are
// ordered so that the result is independent of arrival order.
template <class Record, class Less>
void sort_records(std::vector<Record>& records, const Less& less)
{
    using V = typename Record::second_type;
    if constexpr (std::totally_ordered<V>) {
        std::sort(records.begin(), records.end(), [&](const Record& a, const Record& b) {
            if (less(a.first, b.first))
                return true;
            if (less(b.first, a.first))
                return false;
            return a.second < b.second;
        });
    } else {
        std::stable_sort(records.begin(), records.end(),
                         [&](const Record& a, const Record& b) { return less(a.first, b.first); });
    }
}

} // namespace detail

class Engine
{
public:
    explicit Engine(EngineConfig config) : config_(config) { config_.validate(); }

    const EngineConfig& config() const noexcept { return config_; }

    // Runs body(0) .. body(count-1) on the worker pool. The first exception
    // by task index is rethrown once every task has finished.
    template <class F>
    void parallel_for(std::size_t count, F&& body) const
    {
        std::vector<std::exception_ptr> errors(count);
        const int threads = static_cast<int>(
            std::max<std::size_t>(1, std::min(config_.num_workers, count)));
        const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < total; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // Builds a dataset from f(0) .. f(count-1), split into contiguous chunks.
    template <class F>
    auto generate(std::size_t count, F&& f) const
    {
        using Record = std::invoke_result_t<F&, std::size_t>;
        using K = typename Record::first_type;
        using V = typename Record::second_type;
        const std::size_t parts = config_.num_partitions;
        std::vector<std::vector<Record>> out(parts);
        parallel_for(parts, [&](std::size_t p) {
            const std::size_t begin = count * p / parts;
            const std::size_t end = count * (p + 1) / parts;
            out[p].reserve(end - begin);
            for (std::size_t i = begin; i < end; ++i)
                out[p].push_back(f(i));
        });
        return KeyedDataset<K, V>(std::move(out));
    }

    template <class K, class V>
    KeyedDataset<K, V> parallelize(std::vector<std::pair<K, V>> records) const
    {
        return generate(records.size(), [&](std::size_t i) { return std::move(records[i]); });
    }

    // Element-wise f(key, value) -> (key', value'). Drops any partitioner.
    template <class K, class V, class F>
    auto map(KeyedDataset<K, V> ds, F&& f) const
    {
        using Out = std::invoke_result_t<F&, const K&, const V&>;
        using K2 = typename Out::first_type;
        using V2 = typename Out::second_type;
        auto in = std::move(ds).release();
        std::vector<std::vector<Out>> out(in.size());
        parallel_for(in.size(), [&](std::size_t p) {
            out[p].reserve(in[p].size());
            for (const auto& [k, v] : in[p])
                out[p].push_back(f(k, v));
            std::vector<std::pair<K, V>>().swap(in[p]);
        });
        return KeyedDataset<K2, V2>(std::move(out));
    }

    // f(partition_index, partition) -> vector of records. Drops any partitioner.
    template <class K, class V, class F>
    auto map_partitions(const KeyedDataset<K, V>& ds, F&& f) const
    {
        using Out = std::invoke_result_t<F&, std::size_t, const std::vector<std::pair<K, V>>&>;
        using Record = typename Out::value_type;
        using K2 = typename Record::first_type;
        using V2 = typename Record::second_type;
        const auto& in = ds.partitions();
        std::vector<std::vector<Record>> out(in.size());
        parallel_for(in.size(), [&](std::size_t p) { out[p] = f(p, in[p]); });
        return KeyedDataset<K2, V2>(std::move(out));
    }

    template <class K, class V, class Pred>
    KeyedDataset<K, V> filter(KeyedDataset<K, V> ds, Pred&& keep) const
    {
        // release() only gives up the partitions; the bounds stay readable.
        auto parts = std::move(ds).release();
        parallel_for(parts.size(), [&](std::size_t p) {
            std::erase_if(parts[p], [&](const auto& r) { return !keep(r.first, r.second); });
        });
        return KeyedDataset<K, V>(std::move(parts), ds.range_bounds());
    }

    // Multiset union: partitions of a followed by partitions of b.
    template <class K, class V>
    KeyedDataset<K, V> unite(KeyedDataset<K, V> a, KeyedDataset<K, V> b) const
    {
        auto parts = std::move(a).release();
        for (auto& p : std::move(b).release())
            parts.push_back(std::move(p));
        return KeyedDataset<K, V>(std::move(parts));
    }

    template <class K, class V>
    std::vector<std::pair<K, V>> collect(const KeyedDataset<K, V>& ds) const
    {
        return ds.collect();
    }

    // Folds the values of each key with combine(V, V) -> V, visiting values in
    // ascending order. Output is hash partitioned and key sorted per partition.
    template <class K, class V, class Combine>
    KeyedDataset<K, V> reduce_by_key(KeyedDataset<K, V> ds, Combine&& combine) const
    {
        return reduce_groups(std::move(ds), [&](const K&, std::span<const V> values) {
            V acc = values.front();
            for (std::size_t i = 1; i < values.size(); ++i)
                acc = combine(acc, values[i]);
            return acc;
        });
    }

    // Hands every key and its ascending value list to reducer(key, values).
    // Exceptions from the reducer are rethrown as EngineError naming the key.
    template <class K, class V, class Reducer>
    auto reduce_groups(KeyedDataset<K, V> ds, Reducer&& reducer) const
    {
        using V2 = std::invoke_result_t<Reducer&, const K&, std::span<const V>>;
        auto buckets = hash_shuffle(std::move(ds));
        std::vector<std::vector<std::pair<K, V2>>> out(buckets.size());
        std::less<K> less;
        parallel_for(buckets.size(), [&](std::size_t p) {
            auto& part = buckets[p];
            detail::sort_records(part, less);
            std::vector<V> values;
            std::size_t i = 0;
            while (i < part.size()) {
                std::size_t j = i;
                values.clear();
                while (j < part.size() && !less(part[i].first, part[j].first)) {
                    values.push_back(part[j].second);
                    ++j;
                }
                try {
                    out[p].emplace_back(part[i].first,
                                        reducer(part[i].first, std::span<const V>(values)));
                } catch (const std::exception& e) {
                    throw EngineError("reduce_by_key: key " + detail::describe(part[i].first) + ": "
                                      + e.what());
                }
                i = j;
            }
            std::vector<std::pair<K, V>>().swap(part);
        });
        return KeyedDataset<K, V2>(std::move(out));
    }

    // Sampled range partitioning into r partitions, each sorted by key (then by
    // value when values are ordered). The concatenation is globally sorted.
    template <class K, class V, class Less = std::less<K>>
    KeyedDataset<K, V> range_partition_and_sort(KeyedDataset<K, V> ds, std::size_t r,
                                                Less less = Less{}) const
    {
        if (r == 0)
            throw EngineError("range_partition_and_sort: partition count must be positive");

        std::vector<K> splitters = choose_splitters(ds, r, less);
        auto in = std::move(ds).release();

        std::vector<std::vector<std::vector<std::pair<K, V>>>> local(in.size());
        parallel_for(in.size(), [&](std::size_t p) {
            local[p].resize(r);
            for (auto& rec : in[p]) {
                const auto dest = static_cast<std::size_t>(
                    std::upper_bound(splitters.begin(), splitters.end(), rec.first, less)
                    - splitters.begin());
                local[p][dest].push_back(std::move(rec));
            }
            std::vector<std::pair<K, V>>().swap(in[p]);
        });

        std::vector<std::vector<std::pair<K, V>>> out(r);
        parallel_for(r, [&](std::size_t dest) {
            std::size_t total = 0;
            for (const auto& l : local)
                total += l[dest].size();
            out[dest].reserve(total);
            for (auto& l : local) {
                std::move(l[dest].begin(), l[dest].end(), std::back_inserter(out[dest]));
                std::vector<std::pair<K, V>>().swap(l[dest]);
            }
            detail::sort_records(out[dest], less);
        });
        return KeyedDataset<K, V>(std::move(out), std::move(splitters));
    }

    // Inner join on keys. Each key may appear at most once per input.
    template <class K, class V, class W>
    KeyedDataset<K, std::pair<V, W>> join(KeyedDataset<K, V> a, KeyedDataset<K, W> b) const
    {
        auto left = hash_shuffle(std::move(a));
        auto right = hash_shuffle(std::move(b));
        std::vector<std::vector<std::pair<K, std::pair<V, W>>>> out(left.size());
        std::less<K> less;
        auto by_key = [&](const auto& x, const auto& y) { return less(x.first, y.first); };
        auto check_unique = [&](const auto& part, const char* side) {
            for (std::size_t i = 1; i < part.size(); ++i)
                if (!less(part[i - 1].first, part[i].first))
                    throw EngineError(std::string("join: duplicate key ")
                                      + detail::describe(part[i].first) + " in " + side + " input");
        };
        parallel_for(left.size(), [&](std::size_t p) {
            auto& l = left[p];
            auto& rt = right[p];
            std::sort(l.begin(), l.end(), by_key);
            std::sort(rt.begin(), rt.end(), by_key);
            check_unique(l, "left");
            check_unique(rt, "right");
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < l.size() && j < rt.size()) {
                if (less(l[i].first, rt[j].first)) {
                    ++i;
                } else if (less(rt[j].first, l[i].first)) {
                    ++j;
                } else {
                    out[p].emplace_back(l[i].first,
                                        std::pair<V, W>(std::move(l[i].second), std::move(rt[j].second)));
                    ++i;
                    ++j;
                }
            }
        });
        return KeyedDataset<K, std::pair<V, W>>(std::move(out));
    }

private:
    template <class K, class V>
    std::vector<std::vector<std::pair<K, V>>> hash_shuffle(KeyedDataset<K, V> ds) const
    {
        const std::size_t parts = config_.num_partitions;
        auto in = std::move(ds).release();
        std::vector<std::vector<std::vector<std::pair<K, V>>>> local(in.size());
        detail::ShuffleHash<K> hash;
        parallel_for(in.size(), [&](std::size_t p) {
            local[p].resize(parts);
            for (auto& rec : in[p])
                local[p][hash(rec.first) % parts].push_back(std::move(rec));
            std::vector<std::pair<K, V>>().swap(in[p]);
        });
        std::vector<std::vector<std::pair<K, V>>> out(parts);
        parallel_for(parts, [&](std::size_t dest) {
            std::size_t total = 0;
            for (const auto& l : local)
                total += l[dest].size();
            out[dest].reserve(total);
            for (auto& l : local) {
                std::move(l[dest].begin(), l[dest].end(), std::back_inserter(out[dest]));
                std::vector<std::pair<K, V>>().swap(l[dest]);
            }
        });
        return out;
    }

    // Reservoir sample of the keys in partition order, sorted; splitter j is
    // the last sample element of the j-th equal slice. Keys equal to a
    // splitter route to the upper partition.
    template <class K, class V, class Less>
    std::vector<K> choose_splitters(const KeyedDataset<K, V>& ds, std::size_t r, const Less& less) const
    {
        const std::size_t capacity = config_.sample_size;
        std::vector<K> sample;
        sample.reserve(std::min(capacity, ds.size()));
        std::mt19937_64 rng(config_.rng_seed);
        std::uint64_t seen = 0;
        for (const auto& part : ds.partitions()) {
            for (const auto& rec : part) {
                if (sample.size() < capacity) {
                    sample.push_back(rec.first);
                } else {
                    const std::uint64_t slot = rng() % (seen + 1);
                    if (slot < capacity)
                        sample[slot] = rec.first;
                }
                ++seen;
            }
        }
        std::vector<K> splitters;
        if (sample.empty())
            return splitters;
        std::sort(sample.begin(), sample.end(), less);
        const std::size_t m = sample.size();
        splitters.reserve(r - 1);
        for (std::size_t j = 1; j < r; ++j) {
            const std::size_t idx = (j * m + r - 1) / r - 1;
            splitters.push_back(sample[idx]);
        }
        return splitters;
    }

    EngineConfig config_;
};

} // namespace mrbwt::engine

#endif

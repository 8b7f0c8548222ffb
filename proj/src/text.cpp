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

#include "mrbwt/text.hpp"

#include <algorithm>
#include <cstring>

namespace mrbwt
{

CharOrder::CharOrder(SentinelOrder order, std::uint8_t sentinel)
    : order_(order), sentinel_(sentinel)
{
    for (unsigned b = 0; b < 256; ++b) {
        table_[b] = order == SentinelOrder::Smallest ? static_cast<std::uint16_t>(b + 1)
                                                     : static_cast<std::uint16_t>(b);
    }
    table_[sentinel] = order == SentinelOrder::Smallest ? 0 : kMaxCode;
    monotone_ = (order == SentinelOrder::Smallest && sentinel == 0)
                || (order == SentinelOrder::Largest && sentinel == 255);
}

int CharOrder::compare(std::string_view a, std::string_view b) const noexcept
{
    const std::size_t len = std::min(a.size(), b.size());
    if (monotone_) {
        const int c = std::memcmp(a.data(), b.data(), len);
        if (c != 0)
            return c < 0 ? -1 : 1;
    } else {
        for (std::size_t i = 0; i < len; ++i) {
            const auto ca = code(static_cast<std::uint8_t>(a[i]));
            const auto cb = code(static_cast<std::uint8_t>(b[i]));
            if (ca != cb)
                return ca < cb ? -1 : 1;
        }
    }
    if (a.size() == b.size())
        return 0;
    return a.size() < b.size() ? -1 : 1;
}

Text::Text(std::string payload, SentinelOrder order, std::uint8_t sentinel)
    : data_(std::move(payload)), order_(order, sentinel)
{
    const auto hit = data_.find(static_cast<char>(sentinel));
    if (hit != std::string::npos) {
        throw InvalidText("sentinel byte " + std::to_string(sentinel)
                              + " occurs in payload at offset " + std::to_string(hit),
                          hit);
    }
    data_.push_back(static_cast<char>(sentinel));
}

int Text::compare_suffixes(std::size_t a, std::size_t b) const noexcept
{
    if (a == b)
        return 0;
    // The unique sentinel guarantees a difference within the shorter suffix.
    const std::size_t len = data_.size() - std::max(a, b);
    return order_.compare({data_.data() + a, len}, {data_.data() + b, len});
}

int Text::compare_prefixes(std::size_t a, std::size_t b, std::size_t len) const noexcept
{
    if (a == b)
        return 0;
    const std::size_t avail = data_.size() - std::max(a, b);
    const std::size_t span = std::min(len, avail);
    return order_.compare({data_.data() + a, span}, {data_.data() + b, span});
}

std::string Text::substring(std::size_t i, std::size_t len) const
{
    std::string out(len, static_cast<char>(sentinel()));
    if (i < data_.size()) {
        const std::size_t avail = std::min(len, data_.size() - i);
        std::memcpy(out.data(), data_.data() + i, avail);
    }
    return out;
}

bool is_permutation(const std::vector<std::uint64_t>& values)
{
    std::vector<bool> seen(values.size(), false);
    for (const auto v : values) {
        if (v >= values.size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

namespace
{

std::vector<std::uint64_t> invert(const std::vector<std::uint64_t>& values, const char* what)
{
    if (!is_permutation(values))
        throw InvalidPermutation(std::string(what) + " is not a permutation");
    std::vector<std::uint64_t> out(values.size());
    for (std::size_t j = 0; j < values.size(); ++j)
        out[values[j]] = j;
    return out;
}

} // namespace

InverseSuffixArray sa_to_isa(const SuffixArray& sa)
{
    return {invert(sa.entries, "suffix array")};
}

SuffixArray isa_to_sa(const InverseSuffixArray& isa)
{
    return {invert(isa.ranks, "inverse suffix array")};
}

} // namespace mrbwt

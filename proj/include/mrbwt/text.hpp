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

#ifndef MRBWT_TEXT_HPP
#define MRBWT_TEXT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mrbwt
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidText : public Error
{
public:
    InvalidText(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class DecodeError : public Error
{
public:
    using Error::Error;
};

class InvalidPermutation : public Error
{
public:
    using Error::Error;
};

enum class SentinelOrder : std::uint8_t
{
    Smallest,
    Largest,
};

// Maps raw bytes onto order codes in [0, 256]. The sentinel byte gets code 0
// (Smallest) or 256 (Largest); every other byte keeps its unsigned order.
class CharOrder
{
public:
    static constexpr std::size_t kAlphabetSize = 257;
    static constexpr std::uint16_t kMaxCode = 256;

    CharOrder(SentinelOrder order = SentinelOrder::Smallest, std::uint8_t sentinel = 0);

    std::uint16_t code(std::uint8_t byte) const noexcept { return table_[byte]; }
    std::uint16_t sentinel_code() const noexcept { return table_[sentinel_]; }

    SentinelOrder sentinel_order() const noexcept { return order_; }
    std::uint8_t sentinel() const noexcept { return sentinel_; }

    // True when comparing raw bytes gives the same result as comparing codes.
    bool byte_monotone() const noexcept { return monotone_; }

    bool less(std::uint8_t a, std::uint8_t b) const noexcept { return code(a) < code(b); }

    // Three-way comparison of equal-length byte strings under this order.
    int compare(std::string_view a, std::string_view b) const noexcept;

private:
    std::array<std::uint16_t, 256> table_{};
    SentinelOrder order_;
    std::uint8_t sentinel_;
    bool monotone_;
};

// A payload with a logically appended sentinel. Immutable after construction.
class Text
{
public:
    explicit Text(std::string payload,
                  SentinelOrder order = SentinelOrder::Smallest,
                  std::uint8_t sentinel = 0);

    // n_eff: payload length plus one for the sentinel.
    std::size_t size() const noexcept { return data_.size(); }
    std::size_t payload_size() const noexcept { return data_.size() - 1; }

    std::string_view payload() const noexcept { return {data_.data(), payload_size()}; }

    // Payload followed by the sentinel byte.
    std::string_view with_sentinel() const noexcept { return data_; }

    // Any position at or past the payload end reads as the sentinel.
    std::uint8_t at(std::size_t i) const noexcept
    {
        return i < data_.size() ? static_cast<std::uint8_t>(data_[i]) : order_.sentinel();
    }

    std::uint16_t code_at(std::size_t i) const noexcept { return order_.code(at(i)); }

    const CharOrder& order() const noexcept { return order_; }
    SentinelOrder sentinel_order() const noexcept { return order_.sentinel_order(); }
    std::uint8_t sentinel() const noexcept { return order_.sentinel(); }

    // Three-way comparison of the suffixes starting at a and b.
    int compare_suffixes(std::size_t a, std::size_t b) const noexcept;

    // Three-way comparison of the first len characters of two suffixes,
    // where a suffix shorter than len is compared as-is.
    int compare_prefixes(std::size_t a, std::size_t b, std::size_t len) const noexcept;

    // text[i .. i+len) with sentinel padding past the end.
    std::string substring(std::size_t i, std::size_t len) const;

private:
    std::string data_;
    CharOrder order_;
};

struct SuffixArray
{
    std::vector<std::uint64_t> entries;

    std::size_t size() const noexcept { return entries.size(); }
    bool operator==(const SuffixArray&) const = default;
};

struct InverseSuffixArray
{
    std::vector<std::uint64_t> ranks;

    std::size_t size() const noexcept { return ranks.size(); }
    bool operator==(const InverseSuffixArray&) const = default;
};

struct BwtResult
{
    std::string transformed;
    std::uint64_t row_index = 0;

    bool operator==(const BwtResult&) const = default;
};

bool is_permutation(const std::vector<std::uint64_t>& values);

// Throws InvalidPermutation if the argument is not a permutation of 0..n-1.
InverseSuffixArray sa_to_isa(const SuffixArray& sa);
SuffixArray isa_to_sa(const InverseSuffixArray& isa);

} // namespace mrbwt

#endif

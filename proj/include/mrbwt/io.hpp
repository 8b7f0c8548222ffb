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

#ifndef MRBWT_IO_HPP
#define MRBWT_IO_HPP

#include "mrbwt/text.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace mrbwt::io
{

class IoError : public Error
{
public:
    using Error::Error;
};

// Reads at most max_bytes raw bytes (newlines included) as the payload.
// Throws InvalidText naming the first offset holding the sentinel byte.
Text ingest(const std::filesystem::path& path, std::optional<std::uint64_t> max_bytes,
            std::uint8_t sentinel, SentinelOrder order);

std::string read_file(const std::filesystem::path& path,
                      std::optional<std::uint64_t> max_bytes = std::nullopt);
void write_file(const std::filesystem::path& path, const std::string& bytes);

// Transformed bytes, then a footer line "I=<row index>".
std::string encode_bwt(const BwtResult& bwt);
BwtResult decode_bwt(const std::string& bytes);

enum class SaFormat : std::uint8_t
{
    // Little-endian unsigned 64-bit integers, no header.
    Binary,
    // One decimal entry per line.
    Text,
};

std::string encode_sa(const SuffixArray& sa, SaFormat format);
SuffixArray decode_sa(const std::string& bytes, SaFormat format);

} // namespace mrbwt::io

#endif

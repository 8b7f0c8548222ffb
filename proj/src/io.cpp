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

#include "mrbwt/io.hpp"

#include <charconv>
#include <fstream>

namespace mrbwt::io
{

std::string read_file(const std::filesystem::path& path, std::optional<std::uint64_t> max_bytes)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    in.seekg(0, std::ios::end);
    const auto size = static_cast<std::uint64_t>(in.tellg());
    in.seekg(0, std::ios::beg);
    const std::uint64_t take = max_bytes ? std::min(size, *max_bytes) : size;
    std::string bytes(take, '\0');
    if (take > 0 && !in.read(bytes.data(), static_cast<std::streamsize>(take)))
        throw IoError("short read from " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot create " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("write failed for " + path.string());
}

Text ingest(const std::filesystem::path& path, std::optional<std::uint64_t> max_bytes,
            std::uint8_t sentinel, SentinelOrder order)
{
    if (max_bytes && *max_bytes == 0)
        throw IoError("max_bytes must be at least 1");
    return Text(read_file(path, max_bytes), order, sentinel);
}

std::string encode_bwt(const BwtResult& bwt)
{
    std::string out = bwt.transformed;
    out += "\nI=";
    out += std::to_string(bwt.row_index);
    out += '\n';
    return out;
}

BwtResult decode_bwt(const std::string& bytes)
{
    if (bytes.empty() || bytes.back() != '\n')
        throw IoError("BWT file lacks a footer line");
    const auto footer = bytes.rfind('\n', bytes.size() - 2);
    if (footer == std::string::npos || bytes.compare(footer + 1, 2, "I=") != 0)
        throw IoError("BWT file lacks an I= footer");

    BwtResult out;
    const char* first = bytes.data() + footer + 3;
    const char* last = bytes.data() + bytes.size() - 1;
    const auto [ptr, ec] = std::from_chars(first, last, out.row_index);
    if (ec != std::errc() || ptr != last || first == last)
        throw IoError("malformed I= footer");
    out.transformed = bytes.substr(0, footer);
    return out;
}

std::string encode_sa(const SuffixArray& sa, SaFormat format)
{
    std::string out;
    if (format == SaFormat::Binary) {
        out.resize(sa.size() * 8);
        for (std::size_t j = 0; j < sa.size(); ++j) {
            std::uint64_t v = sa.entries[j];
            for (int b = 0; b < 8; ++b) {
                out[j * 8 + b] = static_cast<char>(v & 0xff);
                v >>= 8;
            }
        }
    } else {
        for (const auto v : sa.entries) {
            out += std::to_string(v);
            out += '\n';
        }
    }
    return out;
}

SuffixArray decode_sa(const std::string& bytes, SaFormat format)
{
    SuffixArray sa;
    if (format == SaFormat::Binary) {
        if (bytes.size() % 8 != 0)
            throw IoError("binary suffix array length is not a multiple of 8");
        sa.entries.resize(bytes.size() / 8);
        for (std::size_t j = 0; j < sa.entries.size(); ++j) {
            std::uint64_t v = 0;
            for (int b = 7; b >= 0; --b)
                v = (v << 8) | static_cast<std::uint8_t>(bytes[j * 8 + b]);
            sa.entries[j] = v;
        }
        return sa;
    }

    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const auto eol = bytes.find('\n', pos);
        const auto end = eol == std::string::npos ? bytes.size() : eol;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(bytes.data() + pos, bytes.data() + end, v);
        if (ec != std::errc() || ptr != bytes.data() + end || end == pos)
            throw IoError("malformed suffix array line at byte " + std::to_string(pos));
        sa.entries.push_back(v);
        pos = end + 1;
    }
    return sa;
}

} // namespace mrbwt::io

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

#include "mrbwt/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace mrbwt::oracle
{

namespace
{

// Cyclic comparison of the rotations starting at a and b.
int compare_rotations(const Text& text, std::size_t a, std::size_t b)
{
    const std::size_t n = text.size();
    for (std::size_t d = 0; d < n; ++d) {
        const auto ca = text.code_at((a + d) % n);
        const auto cb = text.code_at((b + d) % n);
        if (ca != cb)
            return ca < cb ? -1 : 1;
    }
    return 0;
}

} // namespace

BwtResult naive_bwt(const Text& text)
{
    const std::size_t n = text.size();
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        return compare_rotations(text, a, b) < 0;
    });

    BwtResult out;
    out.transformed.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.transformed[j] = static_cast<char>(text.at((rows[j] + n - 1) % n));
        if (rows[j] == 0)
            out.row_index = j;
    }
    return out;
}

SuffixArray naive_sa(const Text& text)
{
    SuffixArray sa;
    sa.entries.resize(text.size());
    std::iota(sa.entries.begin(), sa.entries.end(), std::uint64_t{0});
    std::sort(sa.entries.begin(), sa.entries.end(), [&](std::uint64_t a, std::uint64_t b) {
        return text.compare_suffixes(a, b) < 0;
    });
    return sa;
}

std::string inverse_bwt(const BwtResult& result, const CharOrder& order)
{
    const auto& last = result.transformed;
    const std::size_t n = last.size();
    if (n == 0)
        throw DecodeError("empty transform");
    if (result.row_index >= n)
        throw DecodeError("row index " + std::to_string(result.row_index) + " out of range for length "
                          + std::to_string(n));

    // first[c] = number of characters with a smaller code; rank[j] = occurrences
    // of last[j] in last[0..j).
    std::array<std::size_t, CharOrder::kAlphabetSize + 1> first{};
    std::vector<std::size_t> rank(n);
    std::array<std::size_t, CharOrder::kAlphabetSize> seen{};
    for (std::size_t j = 0; j < n; ++j) {
        const auto c = order.code(static_cast<std::uint8_t>(last[j]));
        rank[j] = seen[c]++;
    }
    for (std::size_t c = 0; c < CharOrder::kAlphabetSize; ++c)
        first[c + 1] = first[c] + seen[c];

    if (seen[order.sentinel_code()] != 1)
        throw DecodeError("transform must contain exactly one sentinel");

    std::string out(n, '\0');
    std::vector<bool> visited(n, false);
    std::size_t row = result.row_index;
    for (std::size_t t = n; t-- > 0;) {
        if (visited[row])
            throw DecodeError("LF walk revisits row " + std::to_string(row));
        visited[row] = true;
        const auto byte = static_cast<std::uint8_t>(last[row]);
        out[t] = static_cast<char>(byte);
        row = first[order.code(byte)] + rank[row];
    }
    if (row != result.row_index)
        throw DecodeError("LF walk does not close on the row index");
    if (static_cast<std::uint8_t>(out.back()) != order.sentinel())
        throw DecodeError("decoded text does not end with the sentinel");
    return out;
}

} // namespace mrbwt::oracle

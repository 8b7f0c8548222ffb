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

#ifndef MRBWT_ORACLE_HPP
#define MRBWT_ORACLE_HPP

#include "mrbwt/text.hpp"

#include <string>

// Serial brute-force references. Every parallel construction is checked
// against these.
namespace mrbwt::oracle
{

// Last column of the sorted rotation matrix and the row of the original text.
BwtResult naive_bwt(const Text& text);

// Comparison sort of all n_eff suffixes.
SuffixArray naive_sa(const Text& text);

// LF-mapping reconstruction. Returns the text including its sentinel, or
// throws DecodeError if the input cannot be a BWT under this order.
std::string inverse_bwt(const BwtResult& result, const CharOrder& order);

} // namespace mrbwt::oracle

#endif

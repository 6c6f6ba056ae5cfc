/*
 * Copyright 2026 the sprat authors
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

#ifndef SPRAT_SYMBOL_HPP
#define SPRAT_SYMBOL_HPP

#include <compare>
#include <string>
#include <vector>

namespace sprat {

/// An event label drawn from a finite alphabet.
struct Symbol {
    std::string name;

    Symbol() = default;
    explicit Symbol(std::string n) : name(std::move(n)) {}

    auto operator<=>(const Symbol&) const = default;
};

/// Sorted, duplicate-free list of symbols.
using Alphabet = std::vector<Symbol>;

/// Inserts `s` into the sorted alphabet if not already present.
void alphabet_insert(Alphabet& sigma, const Symbol& s);

/// True if `s` occurs in the sorted alphabet.
bool alphabet_contains(const Alphabet& sigma, const Symbol& s);

} // namespace sprat

#endif

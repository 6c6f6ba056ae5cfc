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

#ifndef SPRAT_ERRORS_HPP
#define SPRAT_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sprat {

/// Malformed textual input; `column` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t column)
        : std::runtime_error(std::move(msg)), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Requested a factorization of the empty pomset.
class EmptyPomsetError : public std::runtime_error {
public:
    EmptyPomsetError() : std::runtime_error("empty pomset has no factorization") {}
};

/// The poset embeds the forbidden "N" pattern and is not series-parallel.
class NotSeriesParallelError : public std::runtime_error {
public:
    NotSeriesParallelError() : std::runtime_error("poset is not series-parallel") {}
};

/// A structurally invalid poset (cyclic order, duplicate node ids, ...).
class InvalidPosetError : public std::runtime_error {
public:
    explicit InvalidPosetError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// A structurally invalid automaton description.
class InvalidAutomatonError : public std::runtime_error {
public:
    explicit InvalidAutomatonError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// A state set failed the closure rules required of a generated sub-automaton.
class NotClosedError : public std::runtime_error {
public:
    explicit NotClosedError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

/// No fork hierarchy exists; `cycle` lists states forming a witness cycle
/// (each strictly below the next, wrapping around).
class NotForkAcyclicError : public std::runtime_error {
public:
    explicit NotForkAcyclicError(std::vector<std::uint32_t> cycle)
        : std::runtime_error("automaton is not fork-acyclic"), cycle_(std::move(cycle)) {}
    const std::vector<std::uint32_t>& cycle() const { return cycle_; }

private:
    std::vector<std::uint32_t> cycle_;
};

/// State-space exploration exceeded the configured cap.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(std::size_t cap)
        : std::runtime_error("state exploration exceeded cap of " + std::to_string(cap)),
          cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

} // namespace sprat

#endif

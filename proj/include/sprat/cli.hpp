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

#ifndef SPRAT_CLI_HPP
#define SPRAT_CLI_HPP

#include <iosfwd>
#include <string>

namespace sprat {

enum class OutputFormat { Text, Json, Dot };

/// Knobs shared by the subcommands. Exit codes across all commands: 0 on
/// success, 1 for input errors, 2 when the state cap is exceeded, 3 when a
/// structural precondition fails (not closed / not fork-acyclic).
struct CliConfig {
    std::size_t max_size = 6;      // enumeration bound
    std::size_t state_cap = 10000; // compilation safety valve
    OutputFormat format = OutputFormat::Text;
};

int cmd_parse(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
              std::ostream& err);
int cmd_normalize(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
                  std::ostream& err);
int cmd_nullable(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_empty(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
              std::ostream& err);
int cmd_enum(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
             std::ostream& err);
int cmd_member(const std::string& expr_text, const std::string& pomset_text, const CliConfig& cfg,
               std::ostream& out, std::ostream& err);
int cmd_compile(const std::string& expr_text, const CliConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_extract(const std::string& automaton_path, const std::string& state_name,
                const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_equiv(const std::string& expr_text1, const std::string& expr_text2, std::size_t bound,
              const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_pa(const std::string& automaton_path, const CliConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_dot(const std::string& automaton_path, const CliConfig& cfg, std::ostream& out,
            std::ostream& err);

} // namespace sprat

#endif

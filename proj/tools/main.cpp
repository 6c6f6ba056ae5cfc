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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "sprat/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"series-rational expressions and pomset automata"};
    app.require_subcommand(1);

    sprat::CliConfig cfg;
    std::string format = "";
    std::string expr1, expr2, pomset_text, path, state_name;
    std::size_t bound = cfg.max_size;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text, json or dot");
    };

    CLI::App* parse = app.add_subcommand("parse", "parse an expression and print its tree");
    parse->add_option("expr", expr1, "series-rational expression")->required();
    add_format(parse);

    CLI::App* normalize = app.add_subcommand("normalize", "print the additive normal form");
    normalize->add_option("expr", expr1)->required();

    CLI::App* nullable = app.add_subcommand("nullable", "does the language contain the empty pomset?");
    nullable->add_option("expr", expr1)->required();

    CLI::App* empty = app.add_subcommand("empty", "is the language empty?");
    empty->add_option("expr", expr1)->required();

    CLI::App* enumerate = app.add_subcommand("enum", "list language members up to a size bound");
    enumerate->add_option("expr", expr1)->required();
    enumerate->add_option("--max-size", cfg.max_size, "size bound (default 6)");

    CLI::App* member = app.add_subcommand("member", "decide pomset membership via compilation");
    member->add_option("expr", expr1)->required();
    member->add_option("pomset", pomset_text, "pomset term, e.g. a.(b|c)")->required();
    member->add_option("--state-cap", cfg.state_cap, "state exploration cap");

    CLI::App* compile = app.add_subcommand("compile", "compile an expression to an automaton");
    compile->add_option("expr", expr1)->required();
    compile->add_option("--state-cap", cfg.state_cap);
    add_format(compile);

    CLI::App* extract = app.add_subcommand("extract", "turn an automaton state back into an expression");
    extract->add_option("automaton", path, "automaton JSON file")->required();
    extract->add_option("state", state_name, "state name")->required();

    CLI::App* equiv = app.add_subcommand("equiv", "compare bounded languages of two expressions");
    equiv->add_option("expr1", expr1)->required();
    equiv->add_option("expr2", expr2)->required();
    equiv->add_option("--bound", bound, "size bound (default 6)");

    CLI::App* check = app.add_subcommand("check-pa", "validate an automaton and report its fork order");
    check->add_option("automaton", path)->required();
    add_format(check);

    CLI::App* dot = app.add_subcommand("dot", "render an automaton JSON file as graphviz");
    dot->add_option("automaton", path)->required();

    CLI11_PARSE(app, argc, argv);

    if (format == "json")
        cfg.format = sprat::OutputFormat::Json;
    else if (format == "dot")
        cfg.format = sprat::OutputFormat::Dot;
    else if (format == "text" || format.empty())
        cfg.format = sprat::OutputFormat::Text;
    else {
        std::cerr << "unknown format: " << format << "\n";
        return 1;
    }
    // compile defaults to JSON, its natural interchange form.
    if (format.empty() && compile->parsed()) cfg.format = sprat::OutputFormat::Json;

    if (parse->parsed()) return sprat::cmd_parse(expr1, cfg, std::cout, std::cerr);
    if (normalize->parsed()) return sprat::cmd_normalize(expr1, cfg, std::cout, std::cerr);
    if (nullable->parsed()) return sprat::cmd_nullable(expr1, cfg, std::cout, std::cerr);
    if (empty->parsed()) return sprat::cmd_empty(expr1, cfg, std::cout, std::cerr);
    if (enumerate->parsed()) return sprat::cmd_enum(expr1, cfg, std::cout, std::cerr);
    if (member->parsed()) return sprat::cmd_member(expr1, pomset_text, cfg, std::cout, std::cerr);
    if (compile->parsed()) return sprat::cmd_compile(expr1, cfg, std::cout, std::cerr);
    if (extract->parsed()) return sprat::cmd_extract(path, state_name, cfg, std::cout, std::cerr);
    if (equiv->parsed()) return sprat::cmd_equiv(expr1, expr2, bound, cfg, std::cout, std::cerr);
    if (check->parsed()) return sprat::cmd_check_pa(path, cfg, std::cout, std::cerr);
    if (dot->parsed()) return sprat::cmd_dot(path, cfg, std::cout, std::cerr);
    return 1;
}

// Copyright 2026 The sgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include <CLI11.hpp>

#include "sgkit/acceptance.hpp"
#include "sgkit/cli.hpp"

namespace {
  using namespace sgkit;

  int print(Report const& r) {
    std::cout << r.render();
    return r.exit_code();
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup constructions: covers, embeddings, S-ranks"};
  app.require_subcommand(1);

  cli::Options               opts;
  std::string                mode = "full";
  std::optional<std::string> defs_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--cap", opts.cap, "closure cap")->capture_default_str();
  };

  std::string file, name, group, simple;
  std::size_t n = 0;
  std::vector<std::string> embed_names;

  auto analyze = app.add_subcommand("analyze", "Green structure, minimal ideal and Rees data of a declared object");
  analyze->add_option("file", file, "definition file")->required();
  analyze->add_option("name", name, "object name")->required();
  common(analyze);

  auto cover = app.add_subcommand("cover", "build and verify the idempotent cover of a group");
  cover->add_option("group", group, "library name or group declared with --defs")->required();
  cover->add_option("n", n, "cycle length")->required();
  cover->add_option("--mode", mode, "full or cheap")
      ->check(CLI::IsMember({"full", "cheap"}))
      ->capture_default_str();
  cover->add_option("--out", opts.out, "write the monoid as a definition file");
  cover->add_option("--defs", defs_path, "definition file");
  common(cover);

  auto embed = app.add_subcommand("embed", "solve and verify an embedding problem");
  embed->add_option("file", file, "definition file")->required();
  embed->add_option("names", embed_names, "a problem, or a base monoid and a hom")
      ->required()
      ->expected(1, 2);
  embed->add_option("--prime", opts.prime, "the prime p");
  embed->add_option("--sample", opts.sample, "sampled words when M' exceeds the cap")
      ->capture_default_str();
  embed->add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
  common(embed);

  auto srank = app.add_subcommand("srank", "S-rank of a group for a simple group S");
  srank->add_option("group", group, "library name or declared group")->required();
  srank->add_option("simple", simple, "library name or declared group")->required();
  srank->add_option("--defs", defs_path, "definition file");

  auto selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      auto defs = cli::Definitions::load(file, opts.cap);
      return print(cli::cmd_analyze(defs, name, opts));
    }
    if (*cover) {
      opts.mode = mode == "full" ? CoverMode::full : CoverMode::cheap;
      std::optional<cli::Definitions> defs;
      if (defs_path) {
        defs = cli::Definitions::load(*defs_path, opts.cap);
      }
      auto H = cli::resolve_group(group, defs ? &*defs : nullptr);
      return print(cli::cmd_cover(H, group, n, opts));
    }
    if (*embed) {
      auto        defs  = cli::Definitions::load(file, opts.cap);
      std::string base  = embed_names.front();
      std::string alpha = embed_names.size() > 1 ? embed_names[1] : "";
      if (embed_names.size() == 1) {
        auto const& problem = defs.problem(base);
        base                = problem.base;
        alpha               = problem.alpha;
      }
      return print(cli::cmd_embed(defs, base, alpha, opts));
    }
    if (*srank) {
      std::optional<cli::Definitions> defs;
      if (defs_path) {
        defs = cli::Definitions::load(*defs_path);
      }
      auto G = cli::resolve_group(group, defs ? &*defs : nullptr);
      auto S = cli::resolve_group(simple, defs ? &*defs : nullptr);
      return print(cli::cmd_srank(G, S, group, simple));
    }
    if (*selftest) {
      auto results = acceptance::run(
          [](auto const& c) { std::cerr << acceptance::format_line(c) << '\n'; });
      return print(acceptance::to_report(results));
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code(e);
  }
  return 0;
}

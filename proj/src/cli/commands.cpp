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

#include <chrono>
#include <fstream>

#include <fmt/format.h>

#include "sgkit/cli.hpp"
#include "sgkit/embedding.hpp"
#include "sgkit/green.hpp"
#include "sgkit/rees.hpp"
#include "sgkit/schutzenberger.hpp"
#include "sgkit/srank.hpp"

namespace sgkit::cli {

  namespace {
    using Clock = std::chrono::steady_clock;

    std::string elapsed(Clock::time_point start) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
      return fmt::format("elapsed {} ms", ms.count());
    }

    std::string group_name(FiniteGroup const& G) {
      if (auto name = identify_group(G)) {
        return *name;
      }
      return fmt::format("order {}", G.size());
    }
  }  // namespace

  FiniteGroup resolve_group(std::string const& name, Definitions const* defs) {
    if (defs != nullptr && defs->has_object(name)) {
      return defs->group(name);
    }
    if (name == "1" || name == "trivial") {
      return cyclic_group(1);
    }
    if (auto G = library_group(name)) {
      return std::move(*G);
    }
    throw Error(ErrorCode::unknown_object, fmt::format("unknown group '{}'", name));
  }

  Report cmd_analyze(Definitions const& defs, std::string const& name, Options const&) {
    auto        start = Clock::now();
    auto const& obj   = defs.object(name);
    auto const& M     = obj.monoid;
    Report      r("analyze");
    r.set("object", name);
    r.set("size", M.size());
    r.set("generators", M.generator_count());
    auto gs = green_structure(M);
    r.set("r_classes", gs.r.size());
    r.set("l_classes", gs.l.size());
    r.set("j_classes", gs.j.size());
    r.set("h_classes", gs.h.size());
    r.set("idempotents", idempotents(M).size());
    auto I = minimal_ideal(M);
    r.set("min_ideal_size", I.elements.size());
    r.set("min_ideal_idempotents", I.idempotents.size());
    auto R = rees_coordinates(M);
    r.set("rees_rows", R.a_size());
    r.set("rees_columns", R.b_size());
    r.set("maximal_subgroup", group_name(R.group));
    r.set("maximal_subgroup_size", R.group.size());
    r.set("faithful", is_faithful_on_min_ideal(M));
    r.merge(verify_rees(R), "rees");
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
      r.note(fmt::format("generator {}: {}", g + 1, M.format(M.generators()[g])));
    }
    std::string ideal;
    for (std::size_t k = 0; k < I.elements.size() && k < 8; ++k) {
      ideal += (k == 0 ? "" : ", ") + M.format(I.elements[k]);
    }
    if (I.elements.size() > 8) {
      ideal += ", ...";
    }
    r.note(fmt::format("minimal ideal: {{{}}}", ideal));
    r.note(elapsed(start));
    return r;
  }

  Report cmd_cover(FiniteGroup const& H,
                   std::string const& name,
                   std::size_t        n,
                   Options const&     opts) {
    auto         start = Clock::now();
    CoverOptions options;
    options.mode = opts.mode;
    options.cap  = opts.cap;
    auto c       = build_idempotent_cover(H, n, options);
    auto r       = verify_cover(c, opts.mode);
    r.set("group", name);
    if (opts.out) {
      std::ofstream out(*opts.out);
      if (!out) {
        throw Error(ErrorCode::invalid_argument,
                    fmt::format("{}: cannot be written", *opts.out));
      }
      out << write_cover(c);
      r.note(fmt::format("wrote {}", *opts.out));
    }
    r.note(elapsed(start));
    return r;
  }

  Report cmd_embed(Definitions const& defs,
                   std::string const& base,
                   std::string const& alpha,
                   Options const&     opts) {
    auto        start = Clock::now();
    auto const& decl  = defs.hom(alpha);
    auto        H     = defs.group(decl.from);
    auto        K     = defs.group(decl.to);
    auto        B     = prepare_base(defs.object(base).monoid);
    auto        P     = make_embedding_problem(H, K, decl.hom, B);

    EmbeddingOptions options;
    options.prime         = opts.prime;
    options.cap           = opts.cap;
    options.allow_partial = true;
    auto sol              = solve_embedding(P, options);
    auto r                = verify_embedding(sol, opts.sample, opts.seed);
    r.set("base", base);
    r.set("alpha", alpha);
    r.set("H_name", group_name(H));
    r.set("K_name", group_name(K));
    if (sol.g_e) {
      r.set("g_e_name", group_name(*sol.g_e));
    }
    r.note(elapsed(start));
    return r;
  }

  Report cmd_srank(FiniteGroup const& G,
                   FiniteGroup const& S,
                   std::string const& g_name,
                   std::string const& s_name) {
    Report r("srank");
    r.set("group", g_name);
    r.set("simple", s_name);
    r.set("order", G.size());
    r.set("simple_order", S.size());
    auto result = s_rank(G, S);
    r.set("m_s_size", result.m_s.size());
    r.set("rank", result.rank);
    r.add_check("m_s_normal", normal_closure(G, result.m_s) == result.m_s);
    std::size_t index = 1;
    for (std::size_t k = 0; k < result.rank; ++k) {
      index *= S.size();
    }
    r.add_check("index_is_power",
                index * result.m_s.size() == G.size(),
                fmt::format("|G : M_S| = {}", G.size() / result.m_s.size()));
    return r;
  }

  int exit_code(Error const& e) {
    switch (e.code()) {
      case ErrorCode::cap_exceeded:
        return 3;
      case ErrorCode::internal_inconsistency:
      case ErrorCode::inconsistent_product:
        return 1;
      default:
        return 2;
    }
  }

}  // namespace sgkit::cli

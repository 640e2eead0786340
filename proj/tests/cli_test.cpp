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

#include <fstream>
#include <sstream>
#include <string>

#include <catch_amalgamated.hpp>

#include "sgkit/acceptance.hpp"
#include "sgkit/cli.hpp"
#include "sgkit/green.hpp"
#include "sgkit/isomorphism.hpp"

#include "support.hpp"

using namespace sgkit;
using test::error_of;

namespace {
  std::string data(char const* name) {
    return std::string(SGKIT_DATA_DIR) + "/" + name;
  }

  std::string message_of(std::string_view text) {
    try {
      cli::Definitions::parse(text, "t.def");
    } catch (Error const& e) {
      return e.what();
    }
    return "";
  }
}  // namespace

TEST_CASE("definitions: shipped files load", "[cli]") {
  auto groups = cli::Definitions::load(data("cover_groups.def"));
  CHECK(groups.group("S3").size() == 6);
  CHECK(is_isomorphic(groups.group("V4"), test::group("C2xC2")));
  CHECK(is_isomorphic(groups.group("C4"), cyclic_group(4)));
  CHECK(groups.group("Triv").size() == 1);

  auto one_zero = cli::Definitions::load(data("embed_one_zero.def"));
  CHECK(one_zero.object("Z").monoid.size() == 2);
  CHECK(one_zero.problem("E1").alpha == "a");

  auto cyclic = cli::Definitions::load(data("embed_cyclic.def"));
  CHECK(cyclic.object("B").monoid.generator_count() == 2);
  CHECK(kernel(cyclic.hom("q").hom).size() == 2);
  CHECK(cyclic.names().size() == 7);
}

TEST_CASE("definitions: the shipped files match the self-test", "[cli]") {
  auto read = [](std::string const& path) {
    std::ifstream     in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  CHECK(read(data("embed_one_zero.def")) == acceptance::kEmbedOneZero);
  CHECK(read(data("embed_cyclic.def")) == acceptance::kEmbedCyclic);
}

TEST_CASE("definitions: all declaration forms", "[cli]") {
  auto defs = cli::Definitions::parse(R"(
# comment
group G table 3:
  0 1 2
  1 2 0
  2 0 1   # trailing comment
group S library S3
group P perm 3: (1 2 3), ()
monoid T transf 3: [2 3 1]
  [1 1 1]
monoid R rowmono 2 over G: {2:1; 1:0} {1:2; 1:2}
hom h from S to G: 0, 0
hom k from P to P: (1 3 2), @0
problem E base R alpha h
)");
  CHECK(defs.group("G").size() == 3);
  CHECK(defs.object("S").monoid.size() == 6);
  CHECK(defs.group("P").size() == 3);
  CHECK(defs.object("T").monoid.size() == 6);
  CHECK(defs.object("R").literal == cli::Literal::row_monomial);
  CHECK(image(defs.hom("h").hom).size() == 1);
  CHECK(is_surjective(defs.hom("k").hom));
  auto const& T = defs.object("T");
  CHECK(T.monoid.find(defs.literal(T, "(1 3 2)")).has_value());
  CHECK(defs.literal(T, "[1 1 1]") == constant_transformation(3, 0));
  CHECK(error_of([&] { defs.literal(T, "[1 2 2]"); }) == ErrorCode::parse_error);
}

TEST_CASE("definitions: errors carry line and column", "[cli]") {
  CHECK(message_of("group G perm 2: (1 3)\n") == "ParseError: t.def:1:20: point 3 is outside 1..2");
  CHECK(message_of("group G perm 2: (1 2)\n  x\n")
        == "ParseError: t.def:2:3: expected ',', found 'x'");
  CHECK(message_of("widget W\n") == "ParseError: t.def:1:1: unknown declaration 'widget'");
  CHECK(message_of("  group G perm 2: (1 2)\n")
        == "ParseError: t.def:1:3: declarations start in column 1");
  CHECK(message_of("group G table 2:\n 0 1\n 1\n") == "ParseError: t.def:4:1: unexpected end of declaration");
  CHECK(message_of("group G perm 2: (1 2)\ngroup G perm 2: ()\n")
        == "ParseError: t.def:2:7: 'G' is declared twice");
  CHECK(message_of("group G perm 2: (1 2) $\n") == "ParseError: t.def:1:23: unexpected character '$'");
  CHECK(message_of("hom h from A to B:\n") == "UnknownObject: t.def:1:12: unknown object 'A'");
  CHECK(message_of("group G perm 2: (1 2)\nproblem P base G alpha q\n")
        == "UnknownObject: t.def:2:24: unknown hom 'q'");
}

TEST_CASE("definitions: objects are validated on load", "[cli]") {
  CHECK(error_of([] { cli::Definitions::parse("group G table 2:\n 0 1\n 1 1\n"); }).has_value());
  CHECK(error_of([] {
          cli::Definitions::parse(
              "group A perm 2: (1 2)\ngroup B perm 3: (1 2 3)\nhom h from A to B: (1 2 3)\n");
        })
        == ErrorCode::not_well_defined);
  CHECK(error_of([] {
          cli::Definitions::parse("group A perm 2: (1 2)\nhom h from A to A: (1 2), ()\n");
        })
        == ErrorCode::parse_error);
  CHECK(error_of([] { cli::Definitions::parse("monoid T transf 4: [2 3 4 1] [2 1 3 4]\n", "t", 10); })
        == ErrorCode::cap_exceeded);
  CHECK(error_of([] {
          cli::Definitions::parse("group A perm 2: (1 2)\nmonoid R rowmono 2 over A: {3:()}\n");
        })
        == ErrorCode::parse_error);
  CHECK(error_of([] { cli::Definitions::load("/nonexistent/file.def"); }) == ErrorCode::parse_error);
}

TEST_CASE("write_cover: reloads to an isomorphic monoid", "[cli]") {
  for (auto const* name : {"C2", "C3", "C2xC2"}) {
    auto H    = test::group(name);
    auto c    = build_idempotent_cover(H, 2 * H.size() - 1);
    auto defs = cli::Definitions::parse(cli::write_cover(c));
    auto M2   = defs.object("M").monoid;
    auto const& M = *c.monoid;
    REQUIRE(M2.size() == M.size());
    auto f = hom_from_images(M, M2, M2.generators());
    CHECK(is_injective(f));
    CHECK(is_surjective(f));
    cli::Options opts;
    auto         r = cli::cmd_analyze(defs, "M", opts);
    CHECK(r.param("maximal_subgroup") == name);
    CHECK(r.param("min_ideal_size") == std::to_string(c.ideal->elements.size()));
  }
}

TEST_CASE("cmd_analyze: examples", "[cli]") {
  auto defs = cli::Definitions::parse("monoid One transf 2: [1 2]\nmonoid Z transf 2: [1 2] [1 1]\n");
  cli::Options opts;
  auto         one = cli::cmd_analyze(defs, "One", opts);
  CHECK(one.param("size") == "1");
  CHECK(one.param("j_classes") == "1");
  auto z = cli::cmd_analyze(defs, "Z", opts);
  CHECK(z.param("min_ideal_size") == "1");
  CHECK(z.param("faithful") == "false");
  CHECK(z.ok());
  CHECK(error_of([&] { cli::cmd_analyze(defs, "Q", opts); }) == ErrorCode::unknown_object);
}

TEST_CASE("cmd_cover: examples", "[cli]") {
  cli::Options opts;
  CHECK(cli::cmd_cover(cyclic_group(1), "1", 2, opts).ok());
  auto r = cli::cmd_cover(cyclic_group(2), "C2", 3, opts);
  CHECK(r.ok());
  CHECK(r.find("idempotents_generate_ideal")->outcome == Outcome::pass);
  opts.mode = CoverMode::cheap;
  auto s    = cli::cmd_cover(test::group("S3"), "S3", 11, opts);
  CHECK(s.ok());
  CHECK(s.count(Outcome::skipped) == 6);
  try {
    cli::cmd_cover(test::group("S3"), "S3", 10, opts);
    FAIL("expected NTooSmall");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::n_too_small);
    CHECK(std::string(e.what()).find("= 11") != std::string::npos);
    CHECK(cli::exit_code(e) == 2);
  }
}

TEST_CASE("cmd_embed: shipped problems", "[cli]") {
  cli::Options opts;
  auto         one_zero = cli::Definitions::load(data("embed_one_zero.def"));
  auto         e1       = cli::cmd_embed(one_zero, "Z", "a", opts);
  CHECK(e1.ok());
  CHECK(e1.param("g_e_name") == "C2");
  auto cyclic = cli::Definitions::load(data("embed_cyclic.def"));
  auto e2     = cli::cmd_embed(cyclic, "B", "q", opts);
  CHECK(e2.ok());
  CHECK(e2.param("g_e_name") == "C4");
  CHECK(e2.find("rho_theta_inverse_is_alpha")->outcome == Outcome::pass);
  auto e3 = cli::cmd_embed(cyclic, "B", "id", opts);
  CHECK(e3.ok());
  CHECK(e3.param("ell") == "1");
  opts.prime = 7;
  CHECK(cli::cmd_embed(cyclic, "B", "q", opts).param("p") == "7");
  opts.prime = 3;
  CHECK(error_of([&] { cli::cmd_embed(cyclic, "B", "q", opts); })
        == ErrorCode::prime_bound_violated);
}

TEST_CASE("cmd_embed: K mismatch", "[cli]") {
  auto defs = cli::Definitions::parse(R"(monoid B transf 2: [2 1] [2 1]
group C4 perm 4: (1 2 3 4)
hom id from C4 to C4: (1 2 3 4)
)");
  try {
    cli::cmd_embed(defs, "B", "id", {});
    FAIL("expected KMismatch");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::k_mismatch);
    std::string what = e.what();
    CHECK(what.find("C4") != std::string::npos);
    CHECK(what.find("C2") != std::string::npos);
  }
}

TEST_CASE("cmd_srank: examples", "[cli]") {
  CHECK(cli::cmd_srank(test::group("C2xC2"), cyclic_group(2), "C2xC2", "C2").param("rank") == "2");
  CHECK(cli::cmd_srank(cyclic_group(3), cyclic_group(2), "C3", "C2").param("rank") == "0");
  auto r = cli::cmd_srank(cyclic_group(2), cyclic_group(2), "C2", "C2");
  CHECK(r.param("rank") == "1");
  CHECK(r.param("m_s_size") == "1");
  CHECK(r.ok());
}

TEST_CASE("resolve_group and exit codes", "[cli]") {
  CHECK(cli::resolve_group("trivial", nullptr).size() == 1);
  CHECK(cli::resolve_group("Q8", nullptr).size() == 8);
  CHECK(error_of([] { cli::resolve_group("Nope", nullptr); }) == ErrorCode::unknown_object);
  CHECK(cli::exit_code(Error(ErrorCode::parse_error, "")) == 2);
  CHECK(cli::exit_code(CapExceeded(1, 2, "x")) == 3);
  CHECK(cli::exit_code(Error(ErrorCode::internal_inconsistency, "")) == 1);
}

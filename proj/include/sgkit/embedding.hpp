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

#ifndef SGKIT_EMBEDDING_HPP_
#define SGKIT_EMBEDDING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgkit/green.hpp"
#include "sgkit/group.hpp"
#include "sgkit/hom.hpp"
#include "sgkit/report.hpp"
#include "sgkit/row_monomial.hpp"
#include "sgkit/schutzenberger.hpp"

namespace sgkit {

  //! A finite X-generated monoid made ready for the embedding construction.
  struct PreparedBase {
    //! The monoid as given.
    FiniteMonoid original;
    //! original -> monoid, present when the Schutzenberger representation of
    //! `original` was not faithful and `monoid` is its image.
    std::optional<MonoidHom> reduction;
    //! Faithful on its minimal ideal; same generator list as `original`.
    FiniteMonoid monoid;
    //! w0 g1 ... gn with w0 the first element of the minimal ideal in
    //! enumeration order, as generator positions.
    Word  word;
    Index f;
    //! Schutzenberger representation at f (f's L-class first).
    SchutzenbergerRep schutz;
    //! M_g for each generator g.
    std::vector<RowMonomialMatrix> matrices;
    RowMonomialMatrix              m_f;

    FiniteGroup const& K() const noexcept {
      return schutz.rees.group;
    }
    std::size_t b() const noexcept {
      return schutz.rees.b_size();
    }
  };

  //! Replaces M by its Schutzenberger image if needed, then picks
  //! f = (g1^w z g2^w)^w for z the image of `word`. Throws TooFewGenerators
  //! if M has fewer than two generators.
  PreparedBase prepare_base(FiniteMonoid const& M);

  struct EmbeddingProblem {
    FiniteGroup  H;
    FiniteGroup  K;
    MonoidHom    alpha;
    PreparedBase base;
    //! The recorded isomorphism K -> base.K().
    MonoidHom iso;
    //! iso after alpha: H -> base.K().
    MonoidHom alpha_base;
  };

  //! Throws NonSurjectiveAlpha if alpha is not onto and KMismatch if K is
  //! not isomorphic to the maximal subgroup of the base.
  EmbeddingProblem make_embedding_problem(FiniteGroup const&  H,
                                          FiniteGroup const&  K,
                                          MonoidHom const&    alpha,
                                          PreparedBase const& base);

  struct EmbeddingOptions {
    std::optional<std::uint64_t>              prime;
    std::optional<std::vector<std::uint64_t>> allowed_primes;
    std::size_t                               cap = kDefaultCap;
    //! If the closure M' exceeds the cap, return a solution without M'
    //! instead of throwing.
    bool allow_partial = false;
  };

  struct EmbeddingParameters {
    //! Generator count.
    std::size_t n;
    //! |B|
    std::size_t b;
    //! |ker alpha|
    std::size_t nu;
    //! nu^b
    std::size_t ell;
    //! Least m >= 1 with (M^sigma_g1)^m idempotent.
    std::size_t m;
    std::uint64_t p;
    //! Least r >= 1 with r m = 1 mod p.
    std::uint64_t r;
  };

  //! Throws PrimeBoundViolated if the requested prime (or every allowed
  //! prime) fails p > max(m, nu^b) or is not prime.
  EmbeddingParameters choose_parameters(EmbeddingProblem const& problem,
                                        EmbeddingOptions const& options = {});

  struct EmbeddingSolution {
    EmbeddingProblem    problem;
    EmbeddingParameters params;
    //! ker alpha as sorted indices of H (identity first).
    std::vector<Index> kernel;
    Section            sigma;
    //! M^sigma_g for each generator (b x b over H).
    std::vector<RowMonomialMatrix> sigma_matrices;
    //! N_1 = 1, N_2, ..., N_ell as diagonal matrices.
    std::vector<RowMonomialMatrix> diagonals;
    //! x~_1, ..., x~_n and their (p b) x (p b) flattenings.
    std::vector<BlockRowMonomialMatrix> generators;
    std::vector<RowMonomialMatrix>      flat_generators;
    //! x~_1^(m r), flattened.
    RowMonomialMatrix cycler;
    RowMonomialMatrix e_prime;

    //! Absent when the closure exceeded the cap.
    std::optional<FiniteMonoid> monoid;
    std::optional<MinimalIdeal> ideal;
    //! rho on M' (kNoIndex where block row 0 is not a base matrix).
    std::vector<Index> rho_map;
    //! Schutzenberger image index -> base monoid index.
    std::vector<Index> image_to_base;
    //! The maximal subgroup at e', as a group on flattened matrices.
    std::optional<FiniteGroup> g_e;
    //! The (1,1) entry on G_e', when it is a homomorphism.
    std::optional<MonoidHom> theta;

    bool partial() const noexcept {
      return !monoid.has_value();
    }
    //! alpha-bar of block row 0, as an element of the base monoid, or
    //! kNoIndex.
    Index rho_of(RowMonomialMatrix const& u) const;
    //! The (1,1) entry, as an index of H.
    Index theta_of(RowMonomialMatrix const& u) const;
    //! alpha-bar applied to a b x b matrix over H.
    RowMonomialMatrix alpha_bar(RowMonomialMatrix const& U) const;
    //! The flattened image of a word over the generators.
    RowMonomialMatrix eta(Word const& w) const;
  };

  //! x~_1 moves block row i to block column i + 1 mod p with block
  //! M^sigma_g1; for i >= 2, x~_i has block row j in block column 0 with
  //! block N_j M^sigma_gi for j <= ell and M^sigma_gi below.
  std::vector<BlockRowMonomialMatrix> embedding_generators(
      EmbeddingProblem const&    problem,
      EmbeddingParameters const& params);

  //! Closes the given generators and computes e', G_e', theta and rho
  //! without insisting that they have the required properties, so that
  //! corrupted generators can be verified too.
  EmbeddingSolution assemble_solution(EmbeddingProblem const&             problem,
                                      EmbeddingParameters const&          params,
                                      std::vector<BlockRowMonomialMatrix> generators,
                                      EmbeddingOptions const& options = {});

  //! The full construction. Throws PrimeBoundViolated, CapExceeded (unless
  //! partial solutions are allowed), and InternalInconsistency if theta is
  //! not an isomorphism or rho not a homomorphism.
  EmbeddingSolution solve_embedding(EmbeddingProblem const& problem,
                                    EmbeddingOptions const& options = {});

  //! Checks (1)-(6) of the construction. With M' available the checks are
  //! exhaustive; otherwise (1)-(3) use `sample` random words drawn with
  //! `seed` and are reported as sampled.
  Report verify_embedding(EmbeddingSolution const& sol,
                          std::size_t              sample = 1000,
                          std::uint64_t            seed   = 0);

}  // namespace sgkit

#endif  // SGKIT_EMBEDDING_HPP_

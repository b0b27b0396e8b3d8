#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singidx/polynomial.hpp"

namespace singidx {

/// Vector-space dimension over ℚ (stand-in for ℂ); nullopt means INFINITE,
/// i.e. the quotient is supported on a positive-dimensional locus.
using Dim = std::optional<std::int64_t>;

struct Ideal {
  std::vector<Polynomial> gens;
  CtxPtr ctx;

  static Ideal make(std::vector<Polynomial> gens, CtxPtr ctx);
};

/// Element of a free module P^rank: one polynomial per component.
using PolyVec = std::vector<Polynomial>;

PolyVec zero_vec(std::size_t rank, const CtxPtr& ctx);
bool vec_is_zero(const PolyVec& v);
PolyVec vec_add(const PolyVec& a, const PolyVec& b);
PolyVec vec_scale(const PolyVec& a, const Polynomial& p);
/// matrix (columns) * vector of column coefficients
PolyVec mat_apply(const std::vector<PolyVec>& cols, const PolyVec& coeffs);

/// Module monomial ordering on P^rank. Components below block_split form a
/// high block that dominates everything else (elimination); within a block
/// the ring ordering decides, ties broken by the smaller component.
struct ModOrder {
  CtxPtr ctx;
  std::size_t block_split;  // == rank (or larger) for a plain TOP order

  static ModOrder top(CtxPtr ctx) { return ModOrder{std::move(ctx), SIZE_MAX}; }
  static ModOrder eliminate(CtxPtr ctx, std::size_t split) {
    return ModOrder{std::move(ctx), split};
  }
};

struct ModTerm {
  std::size_t comp;
  Monomial mon;
};

/// Leading term of a nonzero vector; nullopt for zero.
std::optional<ModTerm> lead_term(const PolyVec& v, const ModOrder& ord);

/// Mora weak normal form of f against G: returns r with u·f ≡ r modulo ⟨G⟩
/// for some unit u of the local ring, and with lead(r) not divisible by any
/// lead(g). With a global ordering this is ordinary lead reduction.
/// Terminates by ecart-controlled reduction.
PolyVec mora_normal_form(const PolyVec& f, const std::vector<PolyVec>& G, const ModOrder& ord);
Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                            const CtxPtr& ctx);

/// Standard basis of the submodule of P^rank generated by gens, wrt ord.
/// Deterministic: S-pairs processed in a fixed normal strategy
/// (by lcm degree, then lex on the lcm, then input indices).
std::vector<PolyVec> standard_basis(std::vector<PolyVec> gens, std::size_t rank,
                                    const ModOrder& ord);
std::vector<Polynomial> standard_basis(const Ideal& I);

/// Membership f ∈ ⟨G⟩ (locally) for a standard basis G.
bool reduces_to_zero(const PolyVec& f, const std::vector<PolyVec>& G, const ModOrder& ord);

/// Generators of the syzygy module of the given columns over P
/// (block-elimination standard basis).
std::vector<PolyVec> syzygies_over_P(const std::vector<PolyVec>& cols, std::size_t rank,
                                     const CtxPtr& ctx);

/// Syzygies of the columns over R = P/ambient: ambient relations are adjoined
/// on each target coordinate and the auxiliary coordinates projected away.
std::vector<PolyVec> syzygies(const std::vector<PolyVec>& cols, std::size_t rank,
                              const Ideal& ambient);

/// dim of P^rank / ⟨gens⟩ via the staircase of a standard basis.
Dim module_colength(const std::vector<PolyVec>& gens, std::size_t rank, const CtxPtr& ctx);

/// dim_ℂ of the local quotient ring (ctx must be local).
Dim colength(const Ideal& I);
/// dim over the polynomial ring (ctx must be global); equals the sum of
/// local colengths over all zeros, with multiplicity.
Dim global_colength(const Ideal& I);

/// Finitely presented module over R = P/ambient_ideal: free cover R^rank
/// modulo the span of the relation columns.
struct FPModule {
  Ideal ambient_ideal;
  std::size_t rank = 0;
  std::vector<PolyVec> relations;  // columns, each of length rank

  static FPModule free(std::size_t rank, const Ideal& ambient);
  /// Relation columns plus ambient·e_c for every component.
  std::vector<PolyVec> relations_full() const;
  const CtxPtr& ctx() const { return ambient_ideal.ctx; }
};

struct ModuleMap {
  FPModule source;
  FPModule target;
  std::vector<PolyVec> cols;  // source.rank columns of length target.rank

  static ModuleMap make(FPModule source, FPModule target, std::vector<PolyVec> cols);
  static ModuleMap zero(FPModule source, FPModule target);
  /// matrix·(source relations) must land in the target relation span.
  bool well_defined() const;
};

struct CompositionNonzero : std::runtime_error {
  CompositionNonzero() : std::runtime_error("composite map g∘f is not zero") {}
};

/// dim_ℂ ker(g)/im(f) for composable maps A --f--> B --g--> C with g∘f = 0
/// (checked; throws CompositionNonzero). nullopt signals a non-isolated
/// degeneracy locus.
Dim subquotient_dim(const ModuleMap& f, const ModuleMap& g);

}  // namespace singidx

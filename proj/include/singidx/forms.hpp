#pragma once

#include <map>
#include <vector>

#include "singidx/localalg.hpp"
#include "singidx/polynomial.hpp"

namespace singidx {

using IndexTuple = std::vector<std::size_t>;  // strictly increasing, 0-based

/// All strictly increasing j-tuples from {0..n-1}, lexicographic.
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t j);
std::int64_t binom(std::size_t n, std::size_t k);

/// Holomorphic j-form at the origin of ℂ^N with polynomial coefficients,
/// stored on the basis dz_I, I strictly increasing. Only nonzero components
/// are kept.
struct KForm {
  CtxPtr ctx;
  std::size_t degree = 0;
  std::map<IndexTuple, Polynomial> components;

  static KForm zero(const CtxPtr& ctx, std::size_t degree);
  /// 1-form from its N coefficient polynomials.
  static KForm one_form(const CtxPtr& ctx, const std::vector<Polynomial>& coeffs);
  /// Single basis component c·dz_I.
  static KForm basis(const CtxPtr& ctx, const IndexTuple& I, const Polynomial& c);

  bool is_zero() const { return components.empty(); }
  Polynomial coeff(const IndexTuple& I) const;
  KForm operator+(const KForm& o) const;
  KForm scale(const Polynomial& p) const;
};

/// df = Σ ∂f/∂z_i dz_i.
KForm exterior_derivative(const Polynomial& f);

/// Exact exterior product with standard sign conventions (signs from the
/// sorting permutation). If the total degree exceeds N the result is the
/// zero form of degree N and *overflow, when given, is set.
KForm wedge(const KForm& a, const KForm& b, bool* overflow = nullptr);
KForm wedge(const std::vector<KForm>& forms, bool* overflow = nullptr);

/// All t×t minors of M (rows × cols of polynomials), expanded exactly and
/// ordered lexicographically by (row tuple, column tuple).
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& M, std::size_t t);

/// Germ (X,0) ⊂ (ℂ^N,0) of declared pure dimension n.
struct GermSpec {
  CtxPtr ctx;                       // N variables, local ordering
  std::vector<Polynomial> ideal_gens;
  std::size_t dim_n = 0;
  bool is_ici = false;              // asserts ideal_gens count == N - n

  static GermSpec make(CtxPtr ctx, std::vector<Polynomial> ideal_gens, std::size_t dim_n);
  std::size_t embedding_dim() const { return ctx->nvars(); }
  Ideal ambient_ideal() const { return Ideal::make(ideal_gens, ctx); }
  /// Coefficient matrix columns df_1..df_{N-n} (each an N-vector).
  std::vector<std::vector<Polynomial>> differential_columns() const;
};

/// Partition (k_1..k_s) with Σk_i = n and, per block, the 1-forms
/// ω_1^(i)..ω_{n-k_i+1}^(i).
struct CollectionSpec {
  std::vector<std::size_t> partition;
  std::vector<std::vector<KForm>> forms;

  static CollectionSpec make(std::vector<std::size_t> partition,
                             std::vector<std::vector<KForm>> forms, std::size_t dim_n);
};

/// Presentation of Ω^j_{X,0} over R = P/⟨ideal_gens⟩: free cover of rank
/// C(N,j) on the basis j-forms dz_I, relations g_r·e_I and dg_r ∧ dz_K for
/// the basis (j-1)-forms dz_K.
FPModule omega_presentation(const GermSpec& X, std::size_t j);

}  // namespace singidx

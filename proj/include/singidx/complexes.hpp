#pragma once

#include "singidx/forms.hpp"
#include "singidx/localalg.hpp"

namespace singidx {

/// Finite chain complex of finitely presented modules over R = P/ambient:
/// terms in homological degrees 0..L, diffs[t] : terms[t+1] -> terms[t].
struct ChainComplex {
  Ideal ambient;
  std::vector<FPModule> terms;
  std::vector<ModuleMap> diffs;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Exponent vectors of total degree d in m symbols, fixed lexicographic
/// order (first symbol's exponent descending).
std::vector<std::vector<std::uint32_t>> sym_monomials(std::size_t m, std::size_t d);

/// One-term complex [R].
ChainComplex unit_complex(const Ideal& ambient);

/// true iff every composite d_t ∘ d_{t+1} is zero as a map of presented
/// modules (each column reduces to 0 modulo the target relations).
bool verify_d_squared(const ChainComplex& C);

/// Per-slot dim H^t = ker(d_t)/im(d_{t+1}); nullopt in a slot signals a
/// non-isolated special point.
std::vector<Dim> cohomology_dims(const ChainComplex& C);

/// Σ (-1)^t dim H^t; nullopt when any slot is infinite.
Dim euler_characteristic(const ChainComplex& C);

/// Tensor product over R with the Koszul sign d(c⊗d') = dc⊗d' + (-1)^p c⊗dd'.
ChainComplex tensor(const ChainComplex& C, const ChainComplex& D);

/// k-th exterior power of the two-term complex [free A <- free B], B in
/// homological degree 1; mat holds rB columns of length rA (images of the
/// B-basis). Terms ∧^{k-t}A ⊗ S^t B for t = 0..k.
ChainComplex exterior_power_two_term(std::size_t rank_a, std::size_t rank_b,
                                     const std::vector<PolyVec>& mat, std::size_t k,
                                     const Ideal& ambient);

/// Eagon-Northcott complex of an s×r matrix (s ≤ r) over R = P/ambient:
/// E_0 = R, E_j = ∧^{s+j-1}V ⊗ S^{j-1}W, d_1 = maximal minors, higher
/// differentials contract one exterior slot against one symmetric slot.
ChainComplex eagon_northcott(const std::vector<std::vector<Polynomial>>& M, const Ideal& ambient);

/// The complex 𝒞 of one block: 𝒞_0 = Ω^n, 𝒞_t = Ω^{k-t} ⊗ S^{t-1}W for
/// 1 ≤ t ≤ k, d_1(β) = β∧ω_1∧…∧ω_{n-k+1}, d_t(β⊗φ) = Σ_l (β∧ω_l)⊗∂φ/∂u_l.
ChainComplex build_collection_complex(const GermSpec& X, std::size_t k,
                                      const std::vector<KForm>& block_forms);

}  // namespace singidx

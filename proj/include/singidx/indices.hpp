#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singidx/complexes.hpp"
#include "singidx/forms.hpp"

namespace singidx {

struct NotICIS : std::runtime_error {
  NotICIS() : std::runtime_error("germ is not a complete intersection (is_ici is false)") {}
};

struct NonIsolated : std::runtime_error {
  int block;  // 0-based offending block when identifiable, else -1
  explicit NonIsolated(int block_ = -1)
      : std::runtime_error(block_ >= 0
                               ? "special point is not isolated (block " +
                                     std::to_string(block_ + 1) + ")"
                               : "special point of the collection is not isolated"),
        block(block_) {}
};

struct SamplingExhausted : std::runtime_error {
  SamplingExhausted()
      : std::runtime_error("could not sample a collection with an isolated special point") {}
};

struct Disagreement : std::runtime_error {
  explicit Disagreement(const std::string& what) : std::runtime_error(what) {}
};

struct IndexReport {
  std::int64_t value = 0;
  std::string method;  // "gsv-minors" | "gsv-forms" | "homological"
  std::optional<std::vector<std::int64_t>> cohomology_profile;
  std::vector<std::string> witnesses;
};

struct InvariantReport {
  std::vector<std::size_t> partition;
  std::size_t samples = 0;
  std::vector<std::int64_t> values;
  std::int64_t invariant = 0;
};

struct ConservationReport {
  std::int64_t local_index = 0;
  std::int64_t global_count = 0;
  std::int64_t difference = 0;
};

/// Colength of the ideal of the f_r plus, per block, the maximal minors of
/// (df_1,…,df_{N-n}, ω_1^(i),…,ω_{n-k_i+1}^(i)).
IndexReport gsv_index_minors(const GermSpec& X, const CollectionSpec& c);

/// dim Ω^n_{X,0} / Σ_i (∧_j ω_j^(i)) ∧ Ω^{k_i-1}_{X,0}.
IndexReport gsv_index_forms(const GermSpec& X, const CollectionSpec& c);

/// Euler characteristic of ⊗_i 𝒞^(i) with the (-1)^t sign convention.
IndexReport hom_index(const GermSpec& X, const CollectionSpec& c);

/// (dim T, dim T') = cohomology of the Eagon-Northcott complex of the
/// df-matrix in slots 0 and 1; slots >= 2 are asserted zero.
std::pair<std::int64_t, std::int64_t> torsion_dims(const GermSpec& X);

/// Homological index of seeded generic collections (differentials of random
/// linear functions, coefficients in [-9, 9]); asserts all sampled values
/// agree and returns the common value.
InvariantReport singularity_invariant(const GermSpec& X, const std::vector<std::size_t>& partition,
                                      std::size_t samples, std::uint64_t seed);

/// Local index at the origin vs the global count of the perturbed
/// degeneracy ideal ω + t·perturbation over the polynomial ring.
ConservationReport conservation_probe(const GermSpec& X, const CollectionSpec& c,
                                      const CollectionSpec& perturbation, const Rational& t);

/// Rebuild a polynomial in another context (same variables).
Polynomial reorder(const Polynomial& p, const CtxPtr& ctx);

/// The combined GSV minor ideal (f's + all block minors) in X's local context.
Ideal gsv_minor_ideal(const GermSpec& X, const CollectionSpec& c);

}  // namespace singidx

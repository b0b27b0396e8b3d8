#include "singidx/indices.hpp"

#include <algorithm>
#include <stdexcept>

namespace singidx {

namespace {

// matrix (rows = variables) of the block columns df_1..df_{N-n}, ω_1..ω_{n-k+1}
std::vector<std::vector<Polynomial>> block_matrix(const GermSpec& X,
                                                  const std::vector<KForm>& forms) {
  const std::size_t N = X.embedding_dim();
  auto dcols = X.differential_columns();
  std::vector<std::vector<Polynomial>> M(N);
  for (std::size_t v = 0; v < N; ++v) {
    for (const auto& col : dcols) M[v].push_back(col[v]);
    for (const auto& w : forms) M[v].push_back(w.coeff({v}));
  }
  return M;
}

std::vector<Polynomial> block_minors(const GermSpec& X, const std::vector<KForm>& forms) {
  auto M = block_matrix(X, forms);
  const std::size_t t = M.empty() ? 0 : M[0].size();  // N-k_i+1 columns, maximal minors
  return minors(M, t);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long draw_coeff(std::uint64_t& state) {
  return static_cast<long>(splitmix64(state) % 19ULL) - 9;  // uniform in [-9, 9]
}

}  // namespace

Ideal gsv_minor_ideal(const GermSpec& X, const CollectionSpec& c) {
  std::vector<Polynomial> gens = X.ideal_gens;
  for (const auto& forms : c.forms) {
    auto mins = block_minors(X, forms);
    gens.insert(gens.end(), mins.begin(), mins.end());
  }
  return Ideal::make(std::move(gens), X.ctx);
}

IndexReport gsv_index_minors(const GermSpec& X, const CollectionSpec& c) {
  if (!X.is_ici) throw NotICIS();
  Ideal I = gsv_minor_ideal(X, c);
  Dim d = colength(I);
  if (!d) {
    // attribute the failure when a single block is already non-isolated
    if (c.forms.size() == 1) throw NonIsolated(0);
    for (std::size_t i = 0; i < c.forms.size(); ++i) {
      std::vector<Polynomial> gens = X.ideal_gens;
      auto mins = block_minors(X, c.forms[i]);
      gens.insert(gens.end(), mins.begin(), mins.end());
      // a single block is allowed a positive-dimensional locus unless k_i = n
      if (c.partition[i] == X.dim_n && !colength(Ideal::make(std::move(gens), X.ctx)))
        throw NonIsolated(static_cast<int>(i));
    }
    throw NonIsolated(-1);
  }
  IndexReport rep;
  rep.value = *d;
  rep.method = "gsv-minors";
  rep.witnesses.push_back("ideal with " + std::to_string(I.gens.size()) + " generators");
  return rep;
}

IndexReport gsv_index_forms(const GermSpec& X, const CollectionSpec& c) {
  if (!X.is_ici) throw NotICIS();
  const std::size_t N = X.embedding_dim();
  const std::size_t n = X.dim_n;
  FPModule top = omega_presentation(X, n);
  auto tgt = index_tuples(N, n);
  std::map<IndexTuple, std::size_t> pos;
  for (std::size_t i = 0; i < tgt.size(); ++i) pos[tgt[i]] = i;

  std::vector<PolyVec> L = top.relations_full();
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    KForm wi = wedge(c.forms[i]);
    for (const auto& K : index_tuples(N, c.partition[i] - 1)) {
      KForm w = wedge(KForm::basis(X.ctx, K, Polynomial::constant(X.ctx, Rational(1))), wi);
      PolyVec col = zero_vec(top.rank, X.ctx);
      for (const auto& [J, cf] : w.components) col[pos.at(J)] = cf;
      if (!vec_is_zero(col)) L.push_back(std::move(col));
    }
  }
  Dim d = module_colength(L, top.rank, X.ctx);
  if (!d) throw NonIsolated(-1);
  IndexReport rep;
  rep.value = *d;
  rep.method = "gsv-forms";
  rep.witnesses.push_back("quotient of Omega^" + std::to_string(n) + " by " +
                          std::to_string(c.forms.size()) + " wedge image(s)");
  return rep;
}

IndexReport hom_index(const GermSpec& X, const CollectionSpec& c) {
  ChainComplex C = build_collection_complex(X, c.partition[0], c.forms[0]);
  for (std::size_t i = 1; i < c.forms.size(); ++i)
    C = tensor(C, build_collection_complex(X, c.partition[i], c.forms[i]));
  auto dims = cohomology_dims(C);
  std::vector<std::int64_t> profile;
  std::int64_t chi = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (!dims[t]) throw NonIsolated(c.forms.size() == 1 ? 0 : -1);
    profile.push_back(*dims[t]);
    chi += (t % 2 == 0) ? *dims[t] : -*dims[t];
  }
  if (c.forms.size() == 1) {
    // single-form sanity: the Σ(-1)^{n-i} dim H^i reading of the same
    // profile (slot t holds H^{n-t}) must give the same number
    std::int64_t alt = 0;
    for (std::size_t t = 0; t < profile.size(); ++t)
      alt += (t % 2 == 0) ? profile[t] : -profile[t];
    if (alt != chi) throw Disagreement("sign-convention readings of the profile differ");
  }
  IndexReport rep;
  rep.value = chi;
  rep.method = "homological";
  rep.cohomology_profile = profile;
  rep.witnesses.push_back("complex of length " + std::to_string(C.length()));
  return rep;
}

std::pair<std::int64_t, std::int64_t> torsion_dims(const GermSpec& X) {
  if (!X.is_ici) throw NotICIS();
  if (X.ideal_gens.empty()) return {0, 0};  // smooth: φ is an isomorphism
  const std::size_t N = X.embedding_dim();
  std::vector<std::vector<Polynomial>> M(X.ideal_gens.size(),
                                         std::vector<Polynomial>(N));
  for (std::size_t r = 0; r < X.ideal_gens.size(); ++r)
    for (std::size_t v = 0; v < N; ++v) M[r][v] = X.ideal_gens[r].derivative(v);
  ChainComplex E = eagon_northcott(M, X.ambient_ideal());
  auto dims = cohomology_dims(E);
  if (!dims[0] || dims.size() < 2 || !dims[1]) throw NonIsolated(-1);
  for (std::size_t t = 2; t < dims.size(); ++t) {
    if (!dims[t]) throw NonIsolated(-1);
    if (*dims[t] != 0)
      throw Disagreement("Eagon-Northcott cohomology above slot 1 is nonzero");
  }
  return {*dims[0], *dims[1]};
}

namespace {

// one seeded draw: differentials of random linear functions per block
std::optional<std::int64_t> sample_index(const GermSpec& X,
                                         const std::vector<std::size_t>& partition,
                                         std::uint64_t seed, std::size_t s, int attempt) {
  const std::size_t N = X.embedding_dim();
  const std::size_t n = X.dim_n;
  std::uint64_t state = seed * 0x2545f4914f6cdd1dULL + s * 0x9e3779b97f4a7c15ULL +
                        static_cast<std::uint64_t>(attempt) + 1;
  std::vector<std::vector<KForm>> blocks;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    std::vector<KForm> forms;
    for (std::size_t j = 0; j + partition[i] < n + 1; ++j) {
      std::vector<Polynomial> coeffs;
      bool all_zero = true;
      for (std::size_t v = 0; v < N; ++v) {
        long cv = draw_coeff(state);
        all_zero = all_zero && cv == 0;
        coeffs.push_back(Polynomial::constant(X.ctx, Rational(cv)));
      }
      if (all_zero) coeffs[0] = Polynomial::constant(X.ctx, Rational(1));
      forms.push_back(KForm::one_form(X.ctx, coeffs));
    }
    blocks.push_back(std::move(forms));
  }
  try {
    CollectionSpec c = CollectionSpec::make(partition, std::move(blocks), n);
    return hom_index(X, c).value;
  } catch (const NonIsolated&) {
    return std::nullopt;
  }
}

}  // namespace

InvariantReport singularity_invariant(const GermSpec& X, const std::vector<std::size_t>& partition,
                                      std::size_t samples, std::uint64_t seed) {
  constexpr int kMaxAttempts = 40;
  InvariantReport rep;
  rep.partition = partition;
  rep.samples = samples;
  std::vector<int> next_attempt(samples, 0);
  auto draw = [&](std::size_t s) -> std::int64_t {
    while (next_attempt[s] < kMaxAttempts) {
      auto v = sample_index(X, partition, seed, s, next_attempt[s]++);
      if (v) return *v;
    }
    throw SamplingExhausted();
  };
  for (std::size_t s = 0; s < samples; ++s) rep.values.push_back(draw(s));

  // the index is upper semicontinuous in the collection, so degenerate draws
  // can only overshoot the generic value; redraw anything above the minimum
  for (int round = 0; round < kMaxAttempts; ++round) {
    std::int64_t m = *std::min_element(rep.values.begin(), rep.values.end());
    bool settled = true;
    for (std::size_t s = 0; s < samples; ++s) {
      if (rep.values[s] != m) {
        rep.values[s] = draw(s);
        settled = false;
      }
    }
    if (settled) break;
  }
  for (auto v : rep.values)
    if (v != rep.values[0])
      throw Disagreement("sampled homological indices disagree across collections");
  rep.invariant = rep.values.empty() ? 0 : rep.values[0];
  return rep;
}

Polynomial reorder(const Polynomial& p, const CtxPtr& ctx) {
  std::vector<Term> terms = p.terms();
  return Polynomial::from_terms(ctx, std::move(terms));
}

ConservationReport conservation_probe(const GermSpec& X, const CollectionSpec& c,
                                      const CollectionSpec& perturbation, const Rational& t) {
  if (c.partition != perturbation.partition)
    throw std::invalid_argument("conservation_probe: perturbation shape mismatch");
  IndexReport local = gsv_index_minors(X, c);

  // perturbed collection ω + t·perturbation
  std::vector<std::vector<KForm>> blocks;
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    std::vector<KForm> forms;
    for (std::size_t j = 0; j < c.forms[i].size(); ++j) {
      Polynomial tc = Polynomial::constant(X.ctx, t);
      forms.push_back(c.forms[i][j] + perturbation.forms[i][j].scale(tc));
    }
    blocks.push_back(std::move(forms));
  }
  CollectionSpec cp = CollectionSpec::make(c.partition, std::move(blocks), X.dim_n);

  Ideal I = gsv_minor_ideal(X, cp);
  CtxPtr global = RingContext::with_ordering(X.ctx, Ordering::GlobalDeg);
  std::vector<Polynomial> ggens;
  for (const auto& g : I.gens) ggens.push_back(reorder(g, global));
  Dim d = global_colength(Ideal::make(std::move(ggens), global));
  if (!d) throw NonIsolated(-1);

  ConservationReport rep;
  rep.local_index = local.value;
  rep.global_count = *d;
  rep.difference = rep.global_count - rep.local_index;
  return rep;
}

}  // namespace singidx

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singidx/polynomial.hpp"

namespace testutil {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // inclusive bounds
  long pick(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline singidx::CtxPtr local_ctx(std::vector<std::string> vars) {
  return singidx::RingContext::make(std::move(vars), singidx::Ordering::LocalDeg);
}

inline singidx::CtxPtr global_ctx(std::vector<std::string> vars) {
  return singidx::RingContext::make(std::move(vars), singidx::Ordering::GlobalDeg);
}

inline singidx::Polynomial random_poly(const singidx::CtxPtr& ctx, Rng& rng,
                                       int nterms = 4, long max_exp = 3) {
  std::vector<singidx::Term> terms;
  for (int t = 0; t < nterms; ++t) {
    singidx::Monomial m(ctx->nvars());
    for (std::size_t v = 0; v < ctx->nvars(); ++v)
      m.exps[v] = static_cast<std::uint32_t>(rng.pick(0, max_exp));
    terms.push_back({singidx::Rational(rng.pick(-9, 9), rng.pick(1, 4)), m});
  }
  return singidx::Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace testutil

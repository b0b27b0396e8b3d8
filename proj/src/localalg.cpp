#include "singidx/localalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace singidx {

Ideal Ideal::make(std::vector<Polynomial> gens, CtxPtr ctx) {
  std::vector<Polynomial> nz;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    merge_ctx(g.ctx(), ctx);
    nz.push_back(std::move(g));
  }
  return Ideal{std::move(nz), std::move(ctx)};
}

PolyVec zero_vec(std::size_t rank, const CtxPtr& ctx) {
  return PolyVec(rank, Polynomial::zero(ctx));
}

bool vec_is_zero(const PolyVec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

PolyVec vec_add(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: rank mismatch");
  PolyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

PolyVec vec_scale(const PolyVec& a, const Polynomial& p) {
  PolyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * p;
  return r;
}

PolyVec mat_apply(const std::vector<PolyVec>& cols, const PolyVec& coeffs) {
  if (cols.size() != coeffs.size()) throw std::invalid_argument("mat_apply: shape mismatch");
  if (cols.empty()) return {};
  PolyVec acc = zero_vec(cols[0].size(), coeffs.empty() ? CtxPtr() : coeffs[0].ctx());
  for (std::size_t j = 0; j < cols.size(); ++j)
    acc = vec_add(acc, vec_scale(cols[j], coeffs[j]));
  return acc;
}

namespace {

PolyVec vec_mul_term(const PolyVec& v, const Rational& c, const Monomial& m) {
  PolyVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].mul_term(c, m);
  return r;
}

// true iff term a strictly precedes term b in ord
bool term_greater(const ModTerm& a, const ModTerm& b, const ModOrder& ord) {
  int ba = a.comp < ord.block_split ? 0 : 1;
  int bb = b.comp < ord.block_split ? 0 : 1;
  if (ba != bb) return ba < bb;
  Cmp c = compare_monomials(a.mon, b.mon, *ord.ctx);
  if (c != Cmp::EQ) return c == Cmp::GT;
  return a.comp < b.comp;
}

long vec_total_degree(const PolyVec& v) {
  long d = 0;
  for (const auto& p : v)
    if (!p.is_zero()) d = std::max(d, p.total_degree());
  return d;
}

// Greuel-Pfister ecart: deg(v) - deg(LM(v)).
long ecart(const PolyVec& v, const ModOrder& ord) {
  auto lt = lead_term(v, ord);
  return vec_total_degree(v) - lt->mon.total_degree();
}

const Rational& lead_coeff_of(const PolyVec& v, const ModTerm& lt) {
  return v[lt.comp].lead_coeff();
}

// h := h - (LC(h)/LC(g)) x^{LM(h)-LM(g)} g
PolyVec reduce_lead(const PolyVec& h, const ModTerm& lh, const PolyVec& g, const ModTerm& lg,
                    const ModOrder& ord) {
  Rational c = lead_coeff_of(h, lh) / lead_coeff_of(g, lg);
  Monomial q = lh.mon.quotient(lg.mon);
  PolyVec scaled = vec_mul_term(g, -c, q);
  return vec_add(h, scaled);
}

PolyVec spoly(const PolyVec& f, const ModTerm& lf, const PolyVec& g, const ModTerm& lg) {
  Monomial m = Monomial::lcm(lf.mon, lg.mon);
  PolyVec a = vec_mul_term(f, Rational(1) / lead_coeff_of(f, lf), m.quotient(lf.mon));
  PolyVec b = vec_mul_term(g, Rational(1) / lead_coeff_of(g, lg), m.quotient(lg.mon));
  PolyVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace

std::optional<ModTerm> lead_term(const PolyVec& v, const ModOrder& ord) {
  std::optional<ModTerm> best;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    ModTerm t{c, v[c].lead_mon()};
    if (!best || term_greater(t, *best, ord)) best = std::move(t);
  }
  return best;
}

PolyVec mora_normal_form(const PolyVec& f, const std::vector<PolyVec>& G, const ModOrder& ord) {
  std::vector<PolyVec> T = G;  // may grow by intermediate results (Mora's trick)
  PolyVec h = f;
  while (true) {
    auto lh = lead_term(h, ord);
    if (!lh) return h;
    // admissible reducers: same component, dividing leading monomial
    int best = -1;
    long best_ecart = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      auto lg = lead_term(T[i], ord);
      if (!lg || lg->comp != lh->comp || !lg->mon.divides(lh->mon)) continue;
      long e = ecart(T[i], ord);
      if (best < 0 || e < best_ecart) {
        best = static_cast<int>(i);
        best_ecart = e;
      }
    }
    if (best < 0) return h;
    if (best_ecart > ecart(h, ord)) T.push_back(h);
    auto lg = lead_term(T[static_cast<std::size_t>(best)], ord);
    h = reduce_lead(h, *lh, T[static_cast<std::size_t>(best)], *lg, ord);
  }
}

Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                            const CtxPtr& ctx) {
  std::vector<PolyVec> Gv;
  for (const auto& g : G)
    if (!g.is_zero()) Gv.push_back(PolyVec{g});
  PolyVec r = mora_normal_form(PolyVec{f}, Gv, ModOrder::top(ctx));
  return r[0];
}

std::vector<PolyVec> standard_basis(std::vector<PolyVec> gens, std::size_t rank,
                                    const ModOrder& ord) {
  std::vector<PolyVec> G;
  for (auto& g : gens)
    if (!vec_is_zero(g)) G.push_back(std::move(g));

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    auto lj = lead_term(G[j], ord);
    for (std::size_t i = 0; i < j; ++i) {
      auto li = lead_term(G[i], ord);
      if (li->comp != lj->comp) continue;
      pairs.push_back(Pair{i, j, Monomial::lcm(li->mon, lj->mon)});
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs(j);

  // normal strategy: lowest lcm degree first, deterministic tie-break
  auto pick = [&]() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto &a = pairs[k], &b = pairs[best];
      if (std::make_tuple(a.lcm.total_degree(), a.lcm.exps, a.i, a.j) <
          std::make_tuple(b.lcm.total_degree(), b.lcm.exps, b.i, b.j))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    return p;
  };

  while (!pairs.empty()) {
    Pair p = pick();
    auto li = lead_term(G[p.i], ord);
    auto lj = lead_term(G[p.j], ord);
    PolyVec s = spoly(G[p.i], *li, G[p.j], *lj);
    PolyVec h = mora_normal_form(s, G, ord);
    if (!vec_is_zero(h)) {
      G.push_back(std::move(h));
      add_pairs(G.size() - 1);
    }
  }
  (void)rank;
  return G;
}

std::vector<Polynomial> standard_basis(const Ideal& I) {
  std::vector<PolyVec> gens;
  for (const auto& g : I.gens) gens.push_back(PolyVec{g});
  auto G = standard_basis(std::move(gens), 1, ModOrder::top(I.ctx));
  std::vector<Polynomial> out;
  for (auto& g : G) out.push_back(std::move(g[0]));
  return out;
}

bool reduces_to_zero(const PolyVec& f, const std::vector<PolyVec>& G, const ModOrder& ord) {
  return vec_is_zero(mora_normal_form(f, G, ord));
}

std::vector<PolyVec> syzygies_over_P(const std::vector<PolyVec>& cols, std::size_t rank,
                                     const CtxPtr& ctx) {
  const std::size_t q = cols.size();
  std::vector<PolyVec> ext;
  ext.reserve(q);
  for (std::size_t j = 0; j < q; ++j) {
    PolyVec v = cols[j];
    if (v.size() != rank) throw std::invalid_argument("syzygies_over_P: column rank mismatch");
    v.resize(rank + q, Polynomial::zero(ctx));
    v[rank + j] = Polynomial::constant(ctx, Rational(1));
    ext.push_back(std::move(v));
  }
  auto G = standard_basis(std::move(ext), rank + q, ModOrder::eliminate(ctx, rank));
  std::vector<PolyVec> syz;
  for (const auto& g : G) {
    bool top_zero = true;
    for (std::size_t c = 0; c < rank && top_zero; ++c) top_zero = g[c].is_zero();
    if (!top_zero) continue;
    syz.emplace_back(g.begin() + static_cast<long>(rank), g.end());
  }
  return syz;
}

std::vector<PolyVec> syzygies(const std::vector<PolyVec>& cols, std::size_t rank,
                              const Ideal& ambient) {
  std::vector<PolyVec> all = cols;
  for (std::size_t c = 0; c < rank; ++c)
    for (const auto& h : ambient.gens) {
      PolyVec v = zero_vec(rank, ambient.ctx);
      v[c] = h;
      all.push_back(std::move(v));
    }
  auto syz = syzygies_over_P(all, rank, ambient.ctx);
  std::vector<PolyVec> out;
  for (auto& s : syz) {
    PolyVec head(s.begin(), s.begin() + static_cast<long>(cols.size()));
    if (!vec_is_zero(head)) out.push_back(std::move(head));
  }
  return out;
}

Dim module_colength(const std::vector<PolyVec>& gens, std::size_t rank, const CtxPtr& ctx) {
  if (rank == 0) return 0;
  auto G = standard_basis(gens, rank, ModOrder::top(ctx));
  ModOrder ord = ModOrder::top(ctx);
  std::vector<std::vector<Monomial>> leads(rank);
  for (const auto& g : G) {
    auto lt = lead_term(g, ord);
    leads[lt->comp].push_back(lt->mon);
  }
  const std::size_t n = ctx->nvars();
  std::int64_t total = 0;
  for (std::size_t c = 0; c < rank; ++c) {
    bool unit = false;
    for (const auto& m : leads[c])
      if (m.is_one()) unit = true;
    if (unit) continue;
    // pure-power box bound per variable; missing power => infinite quotient
    std::vector<std::uint32_t> box(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::uint32_t best = 0;
      for (const auto& m : leads[c]) {
        bool pure = m.exps[v] > 0;
        for (std::size_t w = 0; w < n && pure; ++w)
          if (w != v && m.exps[w] > 0) pure = false;
        if (pure && (best == 0 || m.exps[v] < best)) best = m.exps[v];
      }
      if (best == 0) return std::nullopt;
      box[v] = best;
    }
    // enumerate the staircase box
    Monomial e(n);
    std::int64_t count = 0;
    while (true) {
      bool standard = true;
      for (const auto& m : leads[c])
        if (m.divides(e)) {
          standard = false;
          break;
        }
      if (standard) ++count;
      std::size_t v = 0;
      while (v < n) {
        if (++e.exps[v] < box[v]) break;
        e.exps[v] = 0;
        ++v;
      }
      if (v == n) break;
    }
    total += count;
  }
  return total;
}

Dim colength(const Ideal& I) {
  if (!I.ctx->is_local()) throw std::invalid_argument("colength: local context required");
  std::vector<PolyVec> gens;
  for (const auto& g : I.gens) gens.push_back(PolyVec{g});
  return module_colength(gens, 1, I.ctx);
}

Dim global_colength(const Ideal& I) {
  if (I.ctx->is_local()) throw std::invalid_argument("global_colength: global context required");
  std::vector<PolyVec> gens;
  for (const auto& g : I.gens) gens.push_back(PolyVec{g});
  return module_colength(gens, 1, I.ctx);
}

FPModule FPModule::free(std::size_t rank, const Ideal& ambient) {
  return FPModule{ambient, rank, {}};
}

std::vector<PolyVec> FPModule::relations_full() const {
  std::vector<PolyVec> out = relations;
  for (std::size_t c = 0; c < rank; ++c)
    for (const auto& h : ambient_ideal.gens) {
      PolyVec v = zero_vec(rank, ctx());
      v[c] = h;
      out.push_back(std::move(v));
    }
  return out;
}

ModuleMap ModuleMap::make(FPModule source, FPModule target, std::vector<PolyVec> cols) {
  if (cols.size() != source.rank)
    throw std::invalid_argument("ModuleMap: expected one column per source generator");
  for (const auto& c : cols)
    if (c.size() != target.rank)
      throw std::invalid_argument("ModuleMap: column length != target rank");
  return ModuleMap{std::move(source), std::move(target), std::move(cols)};
}

ModuleMap ModuleMap::zero(FPModule source, FPModule target) {
  std::vector<PolyVec> cols(source.rank, zero_vec(target.rank, target.ctx()));
  return ModuleMap{std::move(source), std::move(target), std::move(cols)};
}

bool ModuleMap::well_defined() const {
  auto trel = target.relations_full();
  ModOrder ord = ModOrder::top(target.ctx());
  auto G = standard_basis(trel, target.rank, ord);
  for (const auto& rel : source.relations_full()) {
    PolyVec img = mat_apply(cols, rel);
    if (!reduces_to_zero(img, G, ord)) return false;
  }
  return true;
}

Dim subquotient_dim(const ModuleMap& f, const ModuleMap& g) {
  const FPModule& B = g.source;
  const CtxPtr& ctx = B.ctx();
  const std::size_t b = B.rank;
  auto brelfull = B.relations_full();
  auto crelfull = g.target.relations_full();

  // g∘f = 0 as maps of presented modules
  {
    ModOrder ord = ModOrder::top(ctx);
    auto G = standard_basis(crelfull, g.target.rank, ord);
    for (const auto& col : f.cols) {
      PolyVec img = mat_apply(g.cols, col);
      if (!reduces_to_zero(img, G, ord)) throw CompositionNonzero();
    }
  }

  // kernel of g: preimage of the target relation span under the matrix of g
  std::vector<PolyVec> combined = g.cols;
  combined.insert(combined.end(), crelfull.begin(), crelfull.end());
  auto syz = syzygies_over_P(combined, g.target.rank, ctx);
  std::vector<PolyVec> K;
  for (const auto& s : syz) {
    PolyVec v(s.begin(), s.begin() + static_cast<long>(b));
    if (!vec_is_zero(v)) K.push_back(std::move(v));
  }
  for (const auto& r : brelfull) K.push_back(r);
  if (K.empty()) return 0;

  // relations of ker/im in the kernel generators: c with K·c ∈ im(f) + rel(B)
  std::vector<PolyVec> L = f.cols;
  L.insert(L.end(), brelfull.begin(), brelfull.end());
  std::vector<PolyVec> KL = K;
  KL.insert(KL.end(), L.begin(), L.end());
  auto syz2 = syzygies_over_P(KL, b, ctx);
  std::vector<PolyVec> relH;
  for (const auto& s : syz2)
    relH.emplace_back(s.begin(), s.begin() + static_cast<long>(K.size()));
  return module_colength(relH, K.size(), ctx);
}

}  // namespace singidx

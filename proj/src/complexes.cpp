#include "singidx/complexes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace singidx {

std::vector<std::vector<std::uint32_t>> sym_monomials(std::size_t m, std::size_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<std::uint32_t> cur(m, 0);
  // first exponent descending, recurse on the rest
  struct Rec {
    std::size_t m;
    std::vector<std::uint32_t>& cur;
    std::vector<std::vector<std::uint32_t>>& out;
    void go(std::size_t pos, std::uint32_t rem) {
      if (pos + 1 == m) {
        cur[pos] = rem;
        out.push_back(cur);
        return;
      }
      for (std::uint32_t e = rem; e + 1 > 0; --e) {
        cur[pos] = e;
        go(pos + 1, rem - e);
        if (e == 0) break;
      }
    }
  } rec{m, cur, out};
  rec.go(0, static_cast<std::uint32_t>(d));
  return out;
}

ChainComplex unit_complex(const Ideal& ambient) {
  ChainComplex C;
  C.ambient = ambient;
  C.terms.push_back(FPModule::free(1, ambient));
  return C;
}

bool verify_d_squared(const ChainComplex& C) {
  for (std::size_t t = 0; t + 1 < C.diffs.size(); ++t) {
    const ModuleMap& dlow = C.diffs[t];       // terms[t+1] -> terms[t]
    const ModuleMap& dhigh = C.diffs[t + 1];  // terms[t+2] -> terms[t+1]
    ModOrder ord = ModOrder::top(dlow.target.ctx());
    auto G = standard_basis(dlow.target.relations_full(), dlow.target.rank, ord);
    for (const auto& col : dhigh.cols) {
      PolyVec img = mat_apply(dlow.cols, col);
      if (!reduces_to_zero(img, G, ord)) return false;
    }
  }
  return true;
}

std::vector<Dim> cohomology_dims(const ChainComplex& C) {
  std::vector<Dim> out;
  const std::size_t L = C.length();
  FPModule zero_mod = FPModule::free(0, C.ambient);
  for (std::size_t t = 0; t <= L; ++t) {
    ModuleMap in = (t < L) ? C.diffs[t] : ModuleMap::zero(zero_mod, C.terms[t]);
    ModuleMap outm = (t > 0) ? C.diffs[t - 1] : ModuleMap::zero(C.terms[t], zero_mod);
    out.push_back(subquotient_dim(in, outm));
  }
  return out;
}

Dim euler_characteristic(const ChainComplex& C) {
  auto dims = cohomology_dims(C);
  std::int64_t chi = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (!dims[t]) return std::nullopt;
    chi += (t % 2 == 0) ? *dims[t] : -*dims[t];
  }
  return chi;
}

namespace {

FPModule tensor_modules(const FPModule& A, const FPModule& B) {
  FPModule T;
  T.ambient_ideal = A.ambient_ideal;
  T.rank = A.rank * B.rank;
  const CtxPtr& ctx = A.ctx();
  for (const auto& r : A.relations)  // r ⊗ e_j
    for (std::size_t j = 0; j < B.rank; ++j) {
      PolyVec col = zero_vec(T.rank, ctx);
      for (std::size_t i = 0; i < A.rank; ++i) col[i * B.rank + j] = r[i];
      T.relations.push_back(std::move(col));
    }
  for (std::size_t i = 0; i < A.rank; ++i)  // e_i ⊗ s
    for (const auto& s : B.relations) {
      PolyVec col = zero_vec(T.rank, ctx);
      for (std::size_t j = 0; j < B.rank; ++j) col[i * B.rank + j] = s[j];
      T.relations.push_back(std::move(col));
    }
  return T;
}

}  // namespace

ChainComplex tensor(const ChainComplex& C, const ChainComplex& D) {
  if (!(C.ambient.ctx == D.ambient.ctx || *C.ambient.ctx == *D.ambient.ctx))
    throw std::invalid_argument("tensor: ambient context mismatch");
  {
    // same ambient ideal required, generator-by-generator
    if (C.ambient.gens.size() != D.ambient.gens.size())
      throw std::invalid_argument("tensor: ambient ideal mismatch");
    for (std::size_t i = 0; i < C.ambient.gens.size(); ++i)
      if (!(C.ambient.gens[i] == D.ambient.gens[i]))
        throw std::invalid_argument("tensor: ambient ideal mismatch");
  }
  const CtxPtr& ctx = C.ambient.ctx;
  const std::size_t LC = C.length(), LD = D.length();
  ChainComplex T;
  T.ambient = C.ambient;

  // block layout per degree: (p, q = t - p) with p ascending
  struct Block {
    std::size_t p, q, offset;
  };
  std::vector<std::vector<Block>> blocks(LC + LD + 1);
  std::vector<FPModule> mods(LC + LD + 1);
  for (std::size_t t = 0; t <= LC + LD; ++t) {
    FPModule sum;
    sum.ambient_ideal = C.ambient;
    sum.rank = 0;
    for (std::size_t p = 0; p <= std::min(t, LC); ++p) {
      std::size_t q = t - p;
      if (q > LD) continue;
      blocks[t].push_back(Block{p, q, sum.rank});
      FPModule piece = tensor_modules(C.terms[p], D.terms[q]);
      for (const auto& r : piece.relations) {
        PolyVec col = zero_vec(sum.rank + piece.rank, ctx);
        for (std::size_t i = 0; i < piece.rank; ++i) col[sum.rank + i] = r[i];
        // pad previous relations as we grow: handled below by re-padding
        sum.relations.push_back(std::move(col));
      }
      sum.rank += piece.rank;
    }
    // pad all relation columns to the final rank
    for (auto& col : sum.relations) col.resize(sum.rank, Polynomial::zero(ctx));
    mods[t] = std::move(sum);
    T.terms.push_back(mods[t]);
  }

  for (std::size_t t = 0; t + 1 <= LC + LD; ++t) {
    const FPModule& src = T.terms[t + 1];
    const FPModule& tgt = T.terms[t];
    std::vector<PolyVec> cols(src.rank, zero_vec(tgt.rank, ctx));
    auto find_block = [&](std::size_t deg, std::size_t p) -> const Block* {
      for (const auto& b : blocks[deg])
        if (b.p == p) return &b;
      return nullptr;
    };
    for (const auto& sb : blocks[t + 1]) {
      const std::size_t ra = C.terms[sb.p].rank, rb = D.terms[sb.q].rank;
      for (std::size_t a = 0; a < ra; ++a)
        for (std::size_t bidx = 0; bidx < rb; ++bidx) {
          const std::size_t src_idx = sb.offset + a * rb + bidx;
          if (sb.p >= 1) {  // dC ⊗ id
            const Block* tb = find_block(t, sb.p - 1);
            const ModuleMap& dC = C.diffs[sb.p - 1];
            const std::size_t rb_t = D.terms[sb.q].rank;
            for (std::size_t g = 0; g < dC.target.rank; ++g) {
              const Polynomial& e = dC.cols[a][g];
              if (e.is_zero()) continue;
              cols[src_idx][tb->offset + g * rb_t + bidx] =
                  cols[src_idx][tb->offset + g * rb_t + bidx] + e;
            }
          }
          if (sb.q >= 1) {  // (-1)^p id ⊗ dD
            const Block* tb = find_block(t, sb.p);
            const ModuleMap& dD = D.diffs[sb.q - 1];
            const std::size_t rb_t = dD.target.rank;
            Rational sign(sb.p % 2 == 0 ? 1 : -1);
            for (std::size_t g = 0; g < rb_t; ++g) {
              const Polynomial& e = dD.cols[bidx][g];
              if (e.is_zero()) continue;
              cols[src_idx][tb->offset + a * rb_t + g] =
                  cols[src_idx][tb->offset + a * rb_t + g] + e.scale(sign);
            }
          }
        }
    }
    T.diffs.push_back(ModuleMap::make(src, tgt, std::move(cols)));
  }
  return T;
}

ChainComplex exterior_power_two_term(std::size_t rank_a, std::size_t rank_b,
                                     const std::vector<PolyVec>& mat, std::size_t k,
                                     const Ideal& ambient) {
  if (k < 1) throw std::invalid_argument("exterior_power_two_term: k must be >= 1");
  if (mat.size() != rank_b)
    throw std::invalid_argument("exterior_power_two_term: expected one column per B generator");
  for (const auto& c : mat)
    if (c.size() != rank_a)
      throw std::invalid_argument("exterior_power_two_term: column length != rank of A");
  const CtxPtr& ctx = ambient.ctx;

  ChainComplex C;
  C.ambient = ambient;
  std::vector<std::vector<IndexTuple>> abasis(k + 1);
  std::vector<std::vector<std::vector<std::uint32_t>>> bbasis(k + 1);
  for (std::size_t t = 0; t <= k; ++t) {
    abasis[t] = index_tuples(rank_a, k - t);
    bbasis[t] = sym_monomials(rank_b, t);
    FPModule M = FPModule::free(abasis[t].size() * bbasis[t].size(), ambient);
    C.terms.push_back(std::move(M));
  }
  for (std::size_t t = 1; t <= k; ++t) {
    const auto& sa = abasis[t];
    const auto& sbm = bbasis[t];
    const auto& ta = abasis[t - 1];
    const auto& tbm = bbasis[t - 1];
    std::map<IndexTuple, std::size_t> ta_pos;
    for (std::size_t i = 0; i < ta.size(); ++i) ta_pos[ta[i]] = i;
    std::map<std::vector<std::uint32_t>, std::size_t> tb_pos;
    for (std::size_t i = 0; i < tbm.size(); ++i) tb_pos[tbm[i]] = i;

    const std::size_t src_rank = sa.size() * sbm.size();
    const std::size_t tgt_rank = ta.size() * tbm.size();
    std::vector<PolyVec> cols(src_rank, zero_vec(tgt_rank, ctx));
    for (std::size_t ai = 0; ai < sa.size(); ++ai)
      for (std::size_t bi = 0; bi < sbm.size(); ++bi) {
        const IndexTuple& I = sa[ai];
        const auto& alpha = sbm[bi];
        PolyVec& col = cols[ai * sbm.size() + bi];
        for (std::size_t l = 0; l < rank_b; ++l) {
          if (alpha[l] == 0) continue;
          auto beta = alpha;
          beta[l] -= 1;
          const std::size_t bpos = tb_pos.at(beta);
          for (std::size_t p = 0; p < rank_a; ++p) {
            const Polynomial& e = mat[l][p];
            if (e.is_zero()) continue;
            // insert p into I with wedge sign
            if (std::find(I.begin(), I.end(), p) != I.end()) continue;
            IndexTuple J = I;
            auto it = std::lower_bound(J.begin(), J.end(), p);
            const std::size_t before = static_cast<std::size_t>(it - J.begin());
            J.insert(it, p);
            Rational coeff(static_cast<long>(alpha[l]) * (before % 2 == 0 ? 1 : -1));
            const std::size_t tgt = ta_pos.at(J) * tbm.size() + bpos;
            col[tgt] = col[tgt] + e.scale(coeff);
          }
        }
      }
    C.diffs.push_back(ModuleMap::make(C.terms[t], C.terms[t - 1], std::move(cols)));
  }
  return C;
}

ChainComplex eagon_northcott(const std::vector<std::vector<Polynomial>>& M, const Ideal& ambient) {
  const std::size_t s = M.size();
  const std::size_t r = s ? M[0].size() : 0;
  if (s == 0 || s > r) throw std::invalid_argument("eagon_northcott: need 1 <= s <= r rows");
  for (const auto& row : M)
    if (row.size() != r) throw std::invalid_argument("eagon_northcott: ragged matrix");
  const CtxPtr& ctx = ambient.ctx;

  ChainComplex C;
  C.ambient = ambient;
  C.terms.push_back(FPModule::free(1, ambient));  // E_0 = R

  std::vector<std::vector<IndexTuple>> vbasis(r - s + 2);
  std::vector<std::vector<std::vector<std::uint32_t>>> wbasis(r - s + 2);
  for (std::size_t j = 1; j <= r - s + 1; ++j) {
    vbasis[j] = index_tuples(r, s + j - 1);
    wbasis[j] = sym_monomials(s, j - 1);
    C.terms.push_back(FPModule::free(vbasis[j].size() * wbasis[j].size(), ambient));
  }

  // d_1: e_I -> Δ_I(M)
  {
    std::vector<PolyVec> cols;
    for (const auto& I : vbasis[1]) {
      std::vector<std::vector<Polynomial>> sub(s, std::vector<Polynomial>(s));
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) sub[a][b] = M[a][I[b]];
      auto d = minors(sub, s);
      cols.push_back(PolyVec{d[0]});
    }
    C.diffs.push_back(ModuleMap::make(C.terms[1], C.terms[0], std::move(cols)));
  }

  for (std::size_t j = 2; j <= r - s + 1; ++j) {
    const auto& sv = vbasis[j];
    const auto& sw = wbasis[j];
    const auto& tv = vbasis[j - 1];
    const auto& tw = wbasis[j - 1];
    std::map<IndexTuple, std::size_t> tv_pos;
    for (std::size_t i = 0; i < tv.size(); ++i) tv_pos[tv[i]] = i;
    std::map<std::vector<std::uint32_t>, std::size_t> tw_pos;
    for (std::size_t i = 0; i < tw.size(); ++i) tw_pos[tw[i]] = i;

    std::vector<PolyVec> cols(sv.size() * sw.size(), zero_vec(tv.size() * tw.size(), ctx));
    for (std::size_t vi = 0; vi < sv.size(); ++vi)
      for (std::size_t wi = 0; wi < sw.size(); ++wi) {
        const IndexTuple& I = sv[vi];
        const auto& alpha = sw[wi];
        PolyVec& col = cols[vi * sw.size() + wi];
        for (std::size_t l = 0; l < I.size(); ++l) {
          IndexTuple J;
          for (std::size_t x = 0; x < I.size(); ++x)
            if (x != l) J.push_back(I[x]);
          const std::size_t vpos = tv_pos.at(J);
          for (std::size_t t = 0; t < s; ++t) {
            if (alpha[t] == 0) continue;
            const Polynomial& e = M[t][I[l]];
            if (e.is_zero()) continue;
            auto beta = alpha;
            beta[t] -= 1;
            Rational coeff(static_cast<long>(alpha[t]) * (l % 2 == 0 ? 1 : -1));
            const std::size_t tgt = vpos * tw.size() + tw_pos.at(beta);
            col[tgt] = col[tgt] + e.scale(coeff);
          }
        }
      }
    C.diffs.push_back(ModuleMap::make(C.terms[j], C.terms[j - 1], std::move(cols)));
  }
  return C;
}

ChainComplex build_collection_complex(const GermSpec& X, std::size_t k,
                                      const std::vector<KForm>& block_forms) {
  const std::size_t n = X.dim_n;
  const std::size_t N = X.embedding_dim();
  if (k == 0 || k > n) throw std::invalid_argument("collection complex: need 1 <= k <= n");
  if (block_forms.size() != n - k + 1)
    throw std::invalid_argument("collection complex: block must hold n-k+1 forms");
  const std::size_t m = block_forms.size();
  const CtxPtr& ctx = X.ctx;

  ChainComplex C;
  C.ambient = X.ambient_ideal();
  C.terms.push_back(omega_presentation(X, n));

  std::vector<FPModule> omegas(k);  // omegas[d] = Ω^d presentation
  for (std::size_t d = 0; d < k; ++d) omegas[d] = omega_presentation(X, d);

  std::vector<std::vector<std::vector<std::uint32_t>>> wmons(k + 1);
  for (std::size_t t = 1; t <= k; ++t) {
    wmons[t] = sym_monomials(m, t - 1);
    const FPModule& om = omegas[k - t];
    FPModule term;
    term.ambient_ideal = C.ambient;
    term.rank = om.rank * wmons[t].size();
    for (std::size_t c = 0; c < wmons[t].size(); ++c)
      for (const auto& rel : om.relations) {
        PolyVec col = zero_vec(term.rank, ctx);
        for (std::size_t i = 0; i < om.rank; ++i) col[c * om.rank + i] = rel[i];
        term.relations.push_back(std::move(col));
      }
    C.terms.push_back(std::move(term));
  }

  auto basis_pos = [&](std::size_t deg) {
    std::map<IndexTuple, std::size_t> pos;
    auto tup = index_tuples(N, deg);
    for (std::size_t i = 0; i < tup.size(); ++i) pos[tup[i]] = i;
    return pos;
  };

  // d_1(β) = β ∧ ω_1 ∧ ... ∧ ω_m : Ω^{k-1} -> Ω^n
  {
    KForm all = block_forms[0];
    for (std::size_t l = 1; l < m; ++l) all = wedge(all, block_forms[l]);
    auto tgt_pos = basis_pos(n);
    std::vector<PolyVec> cols;
    for (const auto& I : index_tuples(N, k - 1)) {
      KForm w = wedge(KForm::basis(ctx, I, Polynomial::constant(ctx, Rational(1))), all);
      PolyVec col = zero_vec(C.terms[0].rank, ctx);
      for (const auto& [J, c] : w.components) col[tgt_pos.at(J)] = c;
      cols.push_back(std::move(col));
    }
    C.diffs.push_back(ModuleMap::make(C.terms[1], C.terms[0], std::move(cols)));
  }

  // d_t(β ⊗ φ) = Σ_l (β ∧ ω_l) ⊗ ∂φ/∂u_l
  for (std::size_t t = 2; t <= k; ++t) {
    const auto& smons = wmons[t];
    const auto& tmons = wmons[t - 1];
    std::map<std::vector<std::uint32_t>, std::size_t> tm_pos;
    for (std::size_t i = 0; i < tmons.size(); ++i) tm_pos[tmons[i]] = i;
    auto src_tuples = index_tuples(N, k - t);
    auto tgt_pos = basis_pos(k - t + 1);
    const std::size_t src_om = omegas[k - t].rank;
    const std::size_t tgt_om = omegas[k - t + 1].rank;

    std::vector<PolyVec> cols(smons.size() * src_om,
                              zero_vec(tmons.size() * tgt_om, ctx));
    for (std::size_t c = 0; c < smons.size(); ++c) {
      const auto& alpha = smons[c];
      for (std::size_t bi = 0; bi < src_tuples.size(); ++bi) {
        PolyVec& col = cols[c * src_om + bi];
        for (std::size_t l = 0; l < m; ++l) {
          if (alpha[l] == 0) continue;
          auto beta = alpha;
          beta[l] -= 1;
          const std::size_t tc = tm_pos.at(beta);
          KForm w = wedge(KForm::basis(ctx, src_tuples[bi],
                                       Polynomial::constant(ctx, Rational(static_cast<long>(alpha[l])))),
                          block_forms[l]);
          for (const auto& [J, cf] : w.components)
            col[tc * tgt_om + tgt_pos.at(J)] = col[tc * tgt_om + tgt_pos.at(J)] + cf;
        }
      }
    }
    C.diffs.push_back(ModuleMap::make(C.terms[t], C.terms[t - 1], std::move(cols)));
  }
  return C;
}

}  // namespace singidx

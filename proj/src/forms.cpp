#include "singidx/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace singidx {

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t j) {
  std::vector<IndexTuple> out;
  if (j > n) return out;
  IndexTuple cur(j);
  for (std::size_t i = 0; i < j; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (j == 0) break;
    // next lexicographic combination
    std::size_t i = j;
    while (i > 0) {
      --i;
      if (cur[i] + 1 <= n - (j - i)) {
        ++cur[i];
        for (std::size_t l = i + 1; l < j; ++l) cur[l] = cur[l - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

std::int64_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::int64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<std::int64_t>(n - i) / static_cast<std::int64_t>(i + 1);
  return r;
}

KForm KForm::zero(const CtxPtr& ctx, std::size_t degree) {
  return KForm{ctx, degree, {}};
}

KForm KForm::one_form(const CtxPtr& ctx, const std::vector<Polynomial>& coeffs) {
  if (coeffs.size() != ctx->nvars())
    throw std::invalid_argument("one_form: expected one coefficient per variable");
  KForm w = zero(ctx, 1);
  for (std::size_t v = 0; v < coeffs.size(); ++v)
    if (!coeffs[v].is_zero()) w.components[{v}] = coeffs[v];
  return w;
}

KForm KForm::basis(const CtxPtr& ctx, const IndexTuple& I, const Polynomial& c) {
  KForm w = zero(ctx, I.size());
  if (!std::is_sorted(I.begin(), I.end()) ||
      std::adjacent_find(I.begin(), I.end()) != I.end())
    throw std::invalid_argument("KForm::basis: index tuple must be strictly increasing");
  if (!c.is_zero()) w.components[I] = c;
  return w;
}

Polynomial KForm::coeff(const IndexTuple& I) const {
  auto it = components.find(I);
  return it == components.end() ? Polynomial::zero(ctx) : it->second;
}

KForm KForm::operator+(const KForm& o) const {
  if (degree != o.degree) throw std::invalid_argument("KForm addition: degree mismatch");
  KForm r = *this;
  for (const auto& [I, g] : o.components) {
    auto it = r.components.find(I);
    if (it == r.components.end()) {
      r.components[I] = g;
    } else {
      it->second = it->second + g;
      if (it->second.is_zero()) r.components.erase(it);
    }
  }
  return r;
}

KForm KForm::scale(const Polynomial& p) const {
  KForm r = zero(ctx, degree);
  for (const auto& [I, g] : components) {
    Polynomial q = g * p;
    if (!q.is_zero()) r.components[I] = q;
  }
  return r;
}

KForm exterior_derivative(const Polynomial& f) {
  const CtxPtr& ctx = f.ctx();
  if (!ctx) throw std::invalid_argument("exterior_derivative: polynomial without context");
  std::vector<Polynomial> coeffs;
  for (std::size_t v = 0; v < ctx->nvars(); ++v) coeffs.push_back(f.derivative(v));
  return KForm::one_form(ctx, coeffs);
}

namespace {

// Sign of sorting I++J into increasing order; 0 when indices repeat.
int merge_sign(const IndexTuple& I, const IndexTuple& J, IndexTuple& out) {
  out.clear();
  out.reserve(I.size() + J.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < I.size() && j < J.size()) {
    if (I[i] == J[j]) return 0;
    if (I[i] < J[j]) {
      out.push_back(I[i++]);
    } else {
      // J[j] jumps over the remaining entries of I
      if ((I.size() - i) % 2 == 1) sign = -sign;
      out.push_back(J[j++]);
    }
  }
  while (i < I.size()) out.push_back(I[i++]);
  while (j < J.size()) out.push_back(J[j++]);
  return sign;
}

}  // namespace

KForm wedge(const KForm& a, const KForm& b, bool* overflow) {
  CtxPtr ctx = merge_ctx(a.ctx, b.ctx);
  const std::size_t N = ctx->nvars();
  if (a.degree + b.degree > N) {
    if (overflow) *overflow = true;
    return KForm::zero(ctx, N);
  }
  KForm r = KForm::zero(ctx, a.degree + b.degree);
  IndexTuple merged;
  for (const auto& [I, f] : a.components)
    for (const auto& [J, g] : b.components) {
      int s = merge_sign(I, J, merged);
      if (s == 0) continue;
      Polynomial c = (f * g).scale(Rational(s));
      auto it = r.components.find(merged);
      if (it == r.components.end()) {
        if (!c.is_zero()) r.components[merged] = c;
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.components.erase(it);
      }
    }
  return r;
}

KForm wedge(const std::vector<KForm>& forms, bool* overflow) {
  if (forms.empty()) throw std::invalid_argument("wedge: empty sequence");
  KForm acc = forms[0];
  for (std::size_t i = 1; i < forms.size(); ++i) acc = wedge(acc, forms[i], overflow);
  return acc;
}

namespace {

Polynomial det_expand(const std::vector<std::vector<Polynomial>>& M, const IndexTuple& rows,
                      const IndexTuple& cols, const CtxPtr& ctx) {
  const std::size_t t = rows.size();
  if (t == 0) return Polynomial::constant(ctx, Rational(1));
  if (t == 1) return M[rows[0]][cols[0]];
  // Laplace expansion along the first row
  Polynomial acc = Polynomial::zero(ctx);
  IndexTuple sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < t; ++j) {
    const Polynomial& e = M[rows[0]][cols[j]];
    if (e.is_zero()) continue;
    IndexTuple sub_cols;
    for (std::size_t l = 0; l < t; ++l)
      if (l != j) sub_cols.push_back(cols[l]);
    Polynomial minor = det_expand(M, sub_rows, sub_cols, ctx);
    Polynomial term = e * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& M, std::size_t t) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  if (t > rows || t > cols) throw std::invalid_argument("minors: size exceeds matrix shape");
  CtxPtr ctx;
  for (const auto& row : M)
    for (const auto& e : row) ctx = merge_ctx(ctx, e.ctx());
  std::vector<Polynomial> out;
  for (const auto& R : index_tuples(rows, t))
    for (const auto& C : index_tuples(cols, t)) out.push_back(det_expand(M, R, C, ctx));
  return out;
}

GermSpec GermSpec::make(CtxPtr ctx, std::vector<Polynomial> ideal_gens, std::size_t dim_n) {
  const std::size_t N = ctx->nvars();
  if (dim_n == 0 || dim_n > N)
    throw std::invalid_argument("GermSpec: need 0 < n <= N");
  std::vector<Polynomial> gens;
  for (auto& g : ideal_gens) {
    if (g.is_zero()) continue;
    if (!g.constant_term().is_zero())
      throw std::invalid_argument("GermSpec: ideal generator does not vanish at the origin");
    merge_ctx(g.ctx(), ctx);
    gens.push_back(std::move(g));
  }
  GermSpec X;
  X.ctx = std::move(ctx);
  X.ideal_gens = std::move(gens);
  X.dim_n = dim_n;
  X.is_ici = (X.ideal_gens.size() == N - dim_n);
  return X;
}

std::vector<std::vector<Polynomial>> GermSpec::differential_columns() const {
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& f : ideal_gens) {
    std::vector<Polynomial> c;
    for (std::size_t v = 0; v < ctx->nvars(); ++v) c.push_back(f.derivative(v));
    cols.push_back(std::move(c));
  }
  return cols;
}

CollectionSpec CollectionSpec::make(std::vector<std::size_t> partition,
                                    std::vector<std::vector<KForm>> forms, std::size_t dim_n) {
  std::size_t sum = 0;
  for (auto k : partition) {
    if (k == 0) throw std::invalid_argument("CollectionSpec: parts must be positive");
    sum += k;
  }
  if (sum != dim_n) throw std::invalid_argument("CollectionSpec: partition must sum to dim X");
  if (forms.size() != partition.size())
    throw std::invalid_argument("CollectionSpec: one form block per part");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (forms[i].size() != dim_n - partition[i] + 1)
      throw std::invalid_argument("CollectionSpec: block " + std::to_string(i) +
                                  " must hold n-k_i+1 forms");
    for (const auto& w : forms[i])
      if (w.degree != 1) throw std::invalid_argument("CollectionSpec: blocks hold 1-forms");
  }
  return CollectionSpec{std::move(partition), std::move(forms)};
}

FPModule omega_presentation(const GermSpec& X, std::size_t j) {
  const std::size_t N = X.embedding_dim();
  if (j > N) throw std::invalid_argument("omega_presentation: degree exceeds variable count");
  auto basis_j = index_tuples(N, j);
  std::map<IndexTuple, std::size_t> pos;
  for (std::size_t i = 0; i < basis_j.size(); ++i) pos[basis_j[i]] = i;

  FPModule M;
  M.ambient_ideal = X.ambient_ideal();
  M.rank = basis_j.size();

  // g_r · e_I (redundant with the ambient ideal but kept in the raw presentation)
  for (const auto& g : X.ideal_gens)
    for (std::size_t i = 0; i < M.rank; ++i) {
      PolyVec col = zero_vec(M.rank, X.ctx);
      col[i] = g;
      M.relations.push_back(std::move(col));
    }
  // dg_r ∧ dz_K for basis (j-1)-forms
  if (j >= 1) {
    for (const auto& g : X.ideal_gens) {
      KForm dg = exterior_derivative(g);
      for (const auto& K : index_tuples(N, j - 1)) {
        KForm w = wedge(dg, KForm::basis(X.ctx, K, Polynomial::constant(X.ctx, Rational(1))));
        if (w.is_zero()) continue;
        PolyVec col = zero_vec(M.rank, X.ctx);
        for (const auto& [I, c] : w.components) col[pos.at(I)] = c;
        M.relations.push_back(std::move(col));
      }
    }
  }
  return M;
}

}  // namespace singidx

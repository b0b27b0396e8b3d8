#include "singidx/ring.hpp"

#include <set>
#include <stdexcept>

namespace singidx {

int RingContext::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  return -1;
}

CtxPtr RingContext::make(std::vector<std::string> vars, Ordering ord) {
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size())
    throw std::invalid_argument("RingContext: duplicate variable names");
  auto ctx = std::make_shared<RingContext>();
  ctx->variables = std::move(vars);
  ctx->ordering = ord;
  return ctx;
}

CtxPtr RingContext::with_ordering(const CtxPtr& ctx, Ordering ord) {
  if (ctx->ordering == ord) return ctx;
  return make(ctx->variables, ord);
}

Cmp compare_monomials(const Monomial& a, const Monomial& b, const RingContext& ctx) {
  if (a.exps.size() != ctx.nvars() || b.exps.size() != ctx.nvars())
    throw std::invalid_argument("compare_monomials: exponent length mismatch");
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) {
    bool a_greater = ctx.is_local() ? da < db : da > db;
    return a_greater ? Cmp::GT : Cmp::LT;
  }
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i])
      return a.exps[i] > b.exps[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

}  // namespace singidx

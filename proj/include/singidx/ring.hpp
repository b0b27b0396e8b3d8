#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace singidx {

/// Monomial orderings. Both break total-degree ties lexicographically
/// (the earlier variable with the larger exponent wins). In the local
/// ordering lower total degree is *greater*, so 1 is the top monomial
/// and leading terms pick out the tangent-cone part.
enum class Ordering { LocalDeg, GlobalDeg };

enum class Cmp { LT, EQ, GT };

struct RingContext;
using CtxPtr = std::shared_ptr<const RingContext>;

struct RingContext {
  std::vector<std::string> variables;
  Ordering ordering = Ordering::LocalDeg;

  std::size_t nvars() const { return variables.size(); }
  bool is_local() const { return ordering == Ordering::LocalDeg; }

  /// Index of a variable name, or -1.
  int var_index(const std::string& name) const;

  static CtxPtr make(std::vector<std::string> vars, Ordering ord);

  /// Same variables + ordering, local flavor. Used to reinterpret
  /// global problems locally and vice versa.
  static CtxPtr with_ordering(const CtxPtr& ctx, Ordering ord);

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.ordering == b.ordering && a.variables == b.variables;
  }
};

/// Exponent vector; length always equals the ambient variable count.
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}

  long total_degree() const {
    long d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const {
    for (auto e : exps)
      if (e) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > m.exps[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
    return r;
  }
  /// Quotient this / m; caller guarantees divisibility.
  Monomial quotient(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i)
      if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps != b.exps; }
};

/// Total multiplicative comparison in the context ordering.
/// Throws std::invalid_argument on length mismatch.
Cmp compare_monomials(const Monomial& a, const Monomial& b, const RingContext& ctx);

inline bool mon_greater(const Monomial& a, const Monomial& b, const RingContext& ctx) {
  return compare_monomials(a, b, ctx) == Cmp::GT;
}

}  // namespace singidx

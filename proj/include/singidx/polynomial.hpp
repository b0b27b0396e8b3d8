#pragma once

#include <string>
#include <vector>

#include "singidx/rational.hpp"
#include "singidx/ring.hpp"

namespace singidx {

struct Term {
  Rational coeff;  // never zero in a canonical polynomial
  Monomial mon;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored strictly descending in the context ordering, so the
/// leading term is terms()[0]. Immutable after construction; all
/// operations return new values.
class Polynomial {
 public:
  /// Zero polynomial with no context; compatible with any context.
  Polynomial() = default;

  static Polynomial zero(const CtxPtr& ctx) { return Polynomial(ctx, {}); }
  static Polynomial constant(const CtxPtr& ctx, const Rational& c);
  static Polynomial variable(const CtxPtr& ctx, std::size_t var);
  static Polynomial term(const CtxPtr& ctx, const Rational& c, const Monomial& m);

  /// From an arbitrary term list: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(const CtxPtr& ctx, std::vector<Term> terms);

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mon.is_one(); }

  const Monomial& lead_mon() const;
  const Rational& lead_coeff() const;
  /// Maximal total degree over all terms (0 for the zero polynomial).
  long total_degree() const;
  /// Minimal total degree over all terms (the order of vanishing).
  long min_degree() const;
  Rational constant_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial derivative(std::size_t var) const;
  /// Simultaneous substitution; images indexed by variable.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text form, re-parsable by parse_poly.
  std::string str() const;

 private:
  Polynomial(CtxPtr ctx, std::vector<Term> terms)
      : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  CtxPtr ctx_;
  std::vector<Term> terms_;
};

/// Shared context of two operands; throws on mismatch. A context-free
/// zero is compatible with everything.
CtxPtr merge_ctx(const CtxPtr& a, const CtxPtr& b);

/// Parse error with 0-based character position.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Recursive-descent parser for
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := rational | var ('^' uint)?
Polynomial parse_poly(const std::string& text, const CtxPtr& ctx);

}  // namespace singidx

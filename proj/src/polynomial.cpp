#include "singidx/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace singidx {

namespace {

// Descending-order comparator for canonical term storage.
struct MonGreater {
  const RingContext* ctx;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, *ctx) == Cmp::GT;
  }
};

}  // namespace

CtxPtr merge_ctx(const CtxPtr& a, const CtxPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || *a == *b) return a;
  throw std::invalid_argument("polynomial operands live in different ring contexts");
}

Polynomial Polynomial::constant(const CtxPtr& ctx, const Rational& c) {
  if (c.is_zero()) return zero(ctx);
  return Polynomial(ctx, {Term{c, Monomial(ctx->nvars())}});
}

Polynomial Polynomial::variable(const CtxPtr& ctx, std::size_t var) {
  Monomial m(ctx->nvars());
  m.exps.at(var) = 1;
  return Polynomial(ctx, {Term{Rational(1), m}});
}

Polynomial Polynomial::term(const CtxPtr& ctx, const Rational& c, const Monomial& m) {
  if (m.exps.size() != ctx->nvars())
    throw std::invalid_argument("Polynomial::term: monomial length mismatch");
  if (c.is_zero()) return zero(ctx);
  return Polynomial(ctx, {Term{c, m}});
}

Polynomial Polynomial::from_terms(const CtxPtr& ctx, std::vector<Term> terms) {
  std::map<Monomial, Rational, MonGreater> acc{MonGreater{ctx.get()}};
  for (auto& t : terms) {
    if (t.mon.exps.size() != ctx->nvars())
      throw std::invalid_argument("Polynomial::from_terms: monomial length mismatch");
    auto it = acc.find(t.mon);
    if (it == acc.end())
      acc.emplace(std::move(t.mon), std::move(t.coeff));
    else
      it->second += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back(Term{c, m});
  return Polynomial(ctx, std::move(out));
}

const Monomial& Polynomial::lead_mon() const {
  if (is_zero()) throw std::logic_error("lead_mon of zero polynomial");
  return terms_[0].mon;
}

const Rational& Polynomial::lead_coeff() const {
  if (is_zero()) throw std::logic_error("lead_coeff of zero polynomial");
  return terms_[0].coeff;
}

long Polynomial::total_degree() const {
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.total_degree());
  return d;
}

long Polynomial::min_degree() const {
  if (is_zero()) return 0;
  long d = terms_[0].mon.total_degree();
  for (const auto& t : terms_) d = std::min(d, t.mon.total_degree());
  return d;
}

Rational Polynomial::constant_term() const {
  for (const auto& t : terms_)
    if (t.mon.is_one()) return t.coeff;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  CtxPtr ctx = merge_ctx(ctx_, o.ctx_);
  if (!ctx) return Polynomial();  // 0 + 0 without context
  // Merge of two descending term lists.
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Cmp c = compare_monomials(terms_[i].mon, o.terms_[j].mon, *ctx);
    if (c == Cmp::GT) {
      out.push_back(terms_[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{s, terms_[i].mon});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ctx, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  CtxPtr ctx = merge_ctx(ctx_, o.ctx_);
  if (is_zero() || o.is_zero()) return ctx ? zero(ctx) : Polynomial();
  std::map<Monomial, Rational, MonGreater> acc{MonGreater{ctx.get()}};
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mon * b.mon;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), a.coeff * b.coeff);
      else
        it->second += a.coeff * b.coeff;
    }
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back(Term{c, m});
  return Polynomial(ctx, std::move(out));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c.is_zero()) return ctx_ ? zero(ctx_) : Polynomial();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (c.is_zero()) return ctx_ ? zero(ctx_) : Polynomial();
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff *= c;
    t.mon = t.mon * m;
  }
  // multiplication by a monomial preserves the term order
  return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mon.exps.at(var) == 0) continue;
    Term d = t;
    d.coeff *= Rational(static_cast<long>(d.mon.exps[var]));
    d.mon.exps[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (!ctx_) return Polynomial();
  if (images.size() != ctx_->nvars())
    throw std::invalid_argument("substitute: expected one image per variable");
  Polynomial acc = zero(ctx_);
  for (const auto& t : terms_) {
    Polynomial p = constant(ctx_, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      for (std::uint32_t e = 0; e < t.mon.exps[v]; ++e) p = p * images[v];
    acc = acc + p;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].mon != b.terms_[i].mon)
      return false;
  return true;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rational c = t.coeff;
    if (i == 0) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    bool unit_coeff = (c == Rational(1));
    bool wrote = false;
    if (!unit_coeff || t.mon.is_one()) {
      out += c.str();
      wrote = true;
    }
    for (std::size_t v = 0; v < t.mon.exps.size(); ++v) {
      if (t.mon.exps[v] == 0) continue;
      if (wrote) out += "*";
      out += ctx_->variables[v];
      if (t.mon.exps[v] > 1) out += "^" + std::to_string(t.mon.exps[v]);
      wrote = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const CtxPtr& ctx) : s_(text), ctx_(ctx) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      sign = c == '-' ? -1 : 1;
    }
    Polynomial acc = term().scale(Rational(sign));
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    char c = peek();
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ctx_, rational());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      int v = ctx_->var_index(name);
      if (v < 0) throw ParseError("unknown variable '" + name + "'", start);
      std::uint32_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = uint_lit();
      }
      Monomial m(ctx_->nvars());
      m.exps[static_cast<std::size_t>(v)] = e;
      return Polynomial::term(ctx_, Rational(1), m);
    }
    throw ParseError("expected a rational literal or a variable", pos_);
  }

  Rational rational() {
    std::string num = digits();
    if (peek() == '/') {
      ++pos_;
      std::size_t dpos = pos_;
      std::string den = digits();
      Rational r = Rational::from_string(num + "/" + den);
      if (r.denominator() == 0) throw ParseError("zero denominator", dpos);
      return r;
    }
    return Rational::from_string(num);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", start);
    return s_.substr(start, pos_ - start);
  }

  std::uint32_t uint_lit() {
    std::size_t start = pos_;
    unsigned long v = std::stoul(digits());
    if (v > 1u << 20) throw ParseError("exponent too large", start);
    return static_cast<std::uint32_t>(v);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  CtxPtr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace singidx

#include "loopdual/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace loopdual {

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

PolyRingPtr make_ring(const Ring& coefficients, std::vector<std::string> names,
                      std::vector<int> weights, std::size_t elimination_block) {
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw InvalidInput("one weight per variable required");
  for (int w : weights)
    if (w <= 0) throw InvalidInput("variable weights must be positive");
  if (elimination_block > names.size()) throw InvalidInput("elimination block too large");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw InvalidInput("duplicate variable name " + names[i]);
  auto r = std::make_shared<PolyRing>();
  r->coefficients = coefficients;
  r->names = std::move(names);
  r->weights = std::move(weights);
  r->elimination_block = elimination_block;
  return r;
}

PolyRingPtr with_coefficients(const PolyRingPtr& ring, const Ring& coefficients) {
  return make_ring(coefficients, ring->names, ring->weights, ring->elimination_block);
}

PolyRingPtr with_elimination(const PolyRingPtr& ring, std::size_t block) {
  return make_ring(ring->coefficients, ring->names, ring->weights, block);
}

Monomial make_monomial(const PolyRing& ring, Exponents exp) {
  if (exp.size() != ring.size()) throw InvalidInput("exponent vector has the wrong length");
  Monomial m;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] < 0) throw InvalidInput("negative exponent");
    m.degree += exp[i] * ring.weights[i];
    if (i < ring.elimination_block) m.block_degree += exp[i] * ring.weights[i];
  }
  m.exp = std::move(exp);
  return m;
}

int compare(const PolyRing& ring, const Monomial& a, const Monomial& b) {
  if (ring.elimination_block > 0 && a.block_degree != b.block_degree)
    return a.block_degree < b.block_degree ? -1 : 1;
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = a.exp.size(); i-- > 0;)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial monomial_mul(const PolyRing& ring, const Monomial& a, const Monomial& b) {
  (void)ring;
  Monomial m = a;
  for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += b.exp[i];
  m.degree += b.degree;
  m.block_degree += b.block_degree;
  return m;
}

Monomial monomial_div(const PolyRing& ring, const Monomial& a, const Monomial& b) {
  (void)ring;
  Monomial m = a;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    m.exp[i] -= b.exp[i];
    if (m.exp[i] < 0) throw Error("monomial division is not exact");
  }
  m.degree -= b.degree;
  m.block_degree -= b.block_degree;
  return m;
}

Monomial monomial_lcm(const PolyRing& ring, const Monomial& a, const Monomial& b) {
  Exponents e(a.exp.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp[i], b.exp[i]);
  return make_monomial(ring, std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

namespace {

bool same_ring(const PolyRing& a, const PolyRing& b) {
  return a.coefficients == b.coefficients && a.names == b.names && a.weights == b.weights &&
         a.elimination_block == b.elimination_block;
}

}  // namespace

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !same_ring(*ring_, *o.ring_))
    throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return compare(r, a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && compare(r, p.terms_.back().mono, t.mono) == 0) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty()) {
        p.terms_.back().coeff = r.coefficients.normalize(p.terms_.back().coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      }
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty()) {
    p.terms_.back().coeff = r.coefficients.normalize(p.terms_.back().coeff);
    if (p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  Monomial one = make_monomial(*ring, Exponents(ring->size(), 0));
  return monomial(std::move(ring), one, c);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const Scalar& c) {
  const Scalar v = ring->coefficients.image(c);
  Polynomial p(std::move(ring));
  if (v != 0) p.terms_.push_back(Term{m, v});
  return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw InvalidInput("variable index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  Monomial m = make_monomial(*ring, std::move(e));
  return monomial(std::move(ring), m, Scalar(1));
}

Polynomial Polynomial::variable(PolyRingPtr ring, const std::string& name) {
  const int i = ring->index_of(name);
  if (i < 0) throw InvalidInput("unknown variable " + name);
  return variable(std::move(ring), static_cast<std::size_t>(i));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree == 0) return terms_.back().coeff;
  return Scalar(0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const PolyRing& r = *ring_;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = compare(r, terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = r.coefficients.normalize(terms_[i].coeff + o.terms_[j].coeff);
      if (s != 0) out.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(-1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Ring& k = ring_->coefficients;
  const Scalar v = k.image(c);
  Polynomial out(ring_);
  if (v == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = k.normalize(t.coeff * v);
    if (s != 0) out.terms_.push_back(Term{t.mono, std::move(s)});
  }
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  const PolyRing& r = *ring_;
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = r.coefficients.normalize(t.coeff * c);
    if (s != 0) out.terms_.push_back(Term{monomial_mul(r, t.mono, m), std::move(s)});
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prods.push_back(Term{monomial_mul(*ring_, a.mono, b.mono), a.coeff * b.coeff});
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->coefficients.inverse(terms_.front().coeff));
}

Polynomial Polynomial::drop_leading() const {
  Polynomial out(ring_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->size()) throw InvalidInput("substitute needs one image per variable");
  if (images.empty()) throw InvalidInput("substitute into a ring without variables");
  const PolyRingPtr& target = images.front().ring();
  for (const auto& im : images) images.front().check_ring(im);
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial out(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int e = t.mono.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, Scalar(1)));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[static_cast<std::size_t>(e)];
    }
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::map_to(const PolyRingPtr& target) const {
  std::vector<int> where(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    where[i] = target->index_of(ring_->names[i]);
    if (where[i] < 0) throw RingMismatch("variable " + ring_->names[i] + " missing in target ring");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < where.size(); ++i) e[static_cast<std::size_t>(where[i])] = t.mono.exp[i];
    out.push_back(Term{make_monomial(*target, std::move(e)), target->coefficients.image(t.coeff)});
  }
  return from_terms(target, std::move(out));
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_->size()) throw InvalidInput("evaluation point has the wrong length");
  const Ring& k = ring_->coefficients;
  Scalar sum = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.mono.exp[i]; ++e) v = k.normalize(v * point[i]);
    sum = k.normalize(sum + v);
  }
  return sum;
}

Exponents Polynomial::support_degrees() const {
  Exponents e(ring_->size(), 0);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], t.mono.exp[i]);
  return e;
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_ring(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono.exp != o.terms_[i].mono.exp || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string monomial_string(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Scalar c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (i == 0) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    const bool unit_coeff = c == 1;
    if (t.mono.degree == 0) {
      s += c.get_str();
    } else {
      if (!unit_coeff) s += c.get_str() + "*";
      s += monomial_string(*ring_, t.mono);
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(PolyRingPtr ring, const std::string& text) : ring_(std::move(ring)), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("cannot parse polynomial '" + text_ + "': " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }
  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->coefficients.inverse(d.leading().coeff));
      } else {
        break;
      }
    }
    return acc;
  }
  Polynomial power() {
    Polynomial b = base();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      b = b.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
    }
    return b;
  }
  Polynomial base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, Scalar(mpz_class(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (ring_->index_of(name) < 0) fail("unknown variable " + name);
      return Polynomial::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyRingPtr ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(PolyRingPtr ring, const std::string& text) {
  return Parser(std::move(ring), text).run();
}

}  // namespace loopdual

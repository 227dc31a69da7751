#ifndef CHORDAL_POLYNOMIAL_HPP
#define CHORDAL_POLYNOMIAL_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "chordal/ring.hpp"

namespace chordal {

// Sparse polynomial: terms sorted strictly descending under the ring's
// monomial order, no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Monomial mono;
    Elem coef;
  };

  Polynomial() = default;

  static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring), {}); }
  static Polynomial constant(RingPtr<F> ring, Elem c) {
    std::vector<Term> t;
    if (!ring->field.is_zero(c)) t.push_back({Monomial::one(ring->nvars), c});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial variable(const RingPtr<F>& ring, int i) {
    if (i < 0 || i >= ring->nvars) throw InvalidArgument("variable index out of range");
    return Polynomial(ring, {{Monomial::var(ring->nvars, i), ring->field.one()}});
  }
  static Polynomial term(RingPtr<F> ring, const Monomial& m, Elem c) {
    std::vector<Term> t;
    if (!ring->field.is_zero(c)) t.push_back({m, c});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    normalize(*ring, terms);
    return Polynomial(std::move(ring), std::move(terms));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  int degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.deg());
    return d;
  }
  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.deg() != terms_[0].mono.deg()) return false;
    return true;
  }

  const Monomial& leading_monomial() const {
    require_nonzero();
    return terms_[0].mono;
  }
  const Elem& leading_coeff() const {
    require_nonzero();
    return terms_[0].coef;
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    const F& k = ring_->field;
    if (k.is_one(terms_[0].coef)) return *this;
    Elem c = k.inv(terms_[0].coef);
    return scaled(c);
  }

  Polynomial operator-() const {
    std::vector<Term> t = terms_;
    for (Term& x : t) x.coef = ring_->field.neg(x.coef);
    return Polynomial(ring_, std::move(t));
  }
  Polynomial drop_leading() const {
    require_nonzero();
    return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
  }
  Polynomial scaled(const Elem& c) const {
    const F& k = ring_->field;
    if (k.is_zero(c)) return zero(ring_);
    std::vector<Term> t = terms_;
    for (Term& x : t) x.coef = k.mul(x.coef, c);
    return Polynomial(ring_, std::move(t));
  }
  // c * m * (*this)
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    const F& k = ring_->field;
    if (k.is_zero(c)) return zero(ring_);
    std::vector<Term> t = terms_;
    for (Term& x : t) {
      x.mono = x.mono.times(m);
      x.coef = k.mul(x.coef, c);
    }
    return Polynomial(ring_, std::move(t));
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  // *this - c * m * o, the division-step workhorse.
  Polynomial sub_scaled(const Polynomial& o, const Elem& c, const Monomial& m) const {
    check_ring(o);
    const F& k = ring_->field;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial om = o.terms_[j].mono.times(m);
      int cmp = i == terms_.size() ? -1 : ring_->order.compare(terms_[i].mono, om);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        Elem v = k.neg(k.mul(o.terms_[j].coef, c));
        if (!k.is_zero(v)) out.push_back({om, v});
        ++j;
      } else {
        Elem v = k.sub(terms_[i].coef, k.mul(o.terms_[j].coef, c));
        if (!k.is_zero(v)) out.push_back({terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return Polynomial(ring_, std::move(out));
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    const F& k = ring_->field;
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
      for (const Term& b : o.terms_)
        acc.push_back({a.mono.times(b.mono), k.mul(a.coef, b.coef)});
    normalize(*ring_, acc);
    return Polynomial(ring_, std::move(acc));
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].mono != o.terms_[i].mono) return false;
      if (!(terms_[i].coef == o.terms_[i].coef)) return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Image under x_i -> images[i]; the result lives in the images' ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars)
      throw InvalidArgument("substitute: expected one image per variable");
    if (images.empty())
      throw InvalidArgument("substitute: empty ring");
    RingPtr<F> target = images[0].ring();
    for (const Polynomial& im : images)
      if (!same_ring(target, im.ring()))
        throw RingMismatch("substitute: images live in different rings");
    const F& k = target->field;

    bool all_terms = true;
    for (const Polynomial& im : images)
      if (im.num_terms() > 1) all_terms = false;

    if (all_terms) {
      // Every image is a single term (or zero): map terms directly.
      std::vector<Term> acc;
      acc.reserve(terms_.size());
      for (const Term& t : terms_) {
        Monomial m = Monomial::one(target->nvars);
        Elem c = t.coef;
        bool dead = false;
        for (int v = 0; v < ring_->nvars && !dead; ++v) {
          for (int rep = 0; rep < t.mono[v]; ++rep) {
            if (images[v].is_zero()) {
              dead = true;
              break;
            }
            m = m.times(images[v].terms()[0].mono);
            c = k.mul(c, images[v].terms()[0].coef);
          }
        }
        if (!dead) acc.push_back({m, c});
      }
      normalize(*target, acc);
      return Polynomial(target, std::move(acc));
    }

    // General case: per-variable power cache, then expand term by term.
    std::vector<std::vector<Polynomial>> powers(ring_->nvars);
    for (int v = 0; v < ring_->nvars; ++v)
      powers[v].push_back(constant(target, k.one()));
    Polynomial result = zero(target);
    for (const Term& t : terms_) {
      Polynomial prod = constant(target, t.coef);
      for (int v = 0; v < ring_->nvars; ++v) {
        int e = t.mono[v];
        if (e == 0) continue;
        auto& pw = powers[v];
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
        prod = prod * pw[e];
      }
      result = result + prod;
    }
    return result;
  }

  Polynomial derivative(int v) const {
    if (v < 0 || v >= ring_->nvars) throw InvalidArgument("derivative: bad variable");
    const F& k = ring_->field;
    std::vector<Term> out;
    for (const Term& t : terms_) {
      int e = t.mono[v];
      if (e == 0) continue;
      Elem c = k.mul(t.coef, k.from_int(e));
      if (k.is_zero(c)) continue;
      Monomial m = t.mono;
      m.set(v, e - 1);
      out.push_back({m, c});
    }
    // Term order is preserved by lowering one exponent only if the order is
    // multiplicative, which it is; still, normalize defensively.
    normalize(*ring_, out);
    return Polynomial(ring_, std::move(out));
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars)
      throw InvalidArgument("evaluate: wrong point size");
    const F& k = ring_->field;
    Elem acc = k.zero();
    for (const Term& t : terms_) {
      Elem v = t.coef;
      for (int i = 0; i < ring_->nvars; ++i)
        for (int rep = 0; rep < t.mono[i]; ++rep) v = k.mul(v, point[i]);
      acc = k.add(acc, v);
    }
    return acc;
  }

  // Same variables, possibly different order: re-sort terms.
  Polynomial convert(const RingPtr<F>& target) const {
    if (!same_variables(*ring_, *target))
      throw RingMismatch("convert: rings have different variables");
    std::vector<Term> t = terms_;
    normalize(*target, t);
    return Polynomial(target, std::move(t));
  }

 private:
  Polynomial(RingPtr<F> ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}

  void require_nonzero() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  }
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
      throw RingMismatch("polynomials from different rings");
  }

  Polynomial merged(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const F& k = ring_->field;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size())
        cmp = -1;
      else if (j == o.terms_.size())
        cmp = 1;
      else
        cmp = ring_->order.compare(terms_[i].mono, o.terms_[j].mono);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        Elem v = subtract ? k.neg(o.terms_[j].coef) : o.terms_[j].coef;
        out.push_back({o.terms_[j].mono, v});
        ++j;
      } else {
        Elem v = subtract ? k.sub(terms_[i].coef, o.terms_[j].coef)
                          : k.add(terms_[i].coef, o.terms_[j].coef);
        if (!k.is_zero(v)) out.push_back({terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return Polynomial(ring_, std::move(out));
  }

  static void normalize(const Ring<F>& ring, std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ring.order.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef = ring.field.add(out.back().coef, t.coef);
        if (ring.field.is_zero(out.back().coef)) out.pop_back();
      } else if (!ring.field.is_zero(t.coef)) {
        out.push_back(std::move(t));
      }
    }
    terms = std::move(out);
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

// Renames variables: source variable i becomes target variable where[i].
// where[i] == -1 asserts the variable does not occur.
template <class F>
Polynomial<F> map_variables(const Polynomial<F>& p, const RingPtr<F>& target,
                            const std::vector<int>& where) {
  if (static_cast<int>(where.size()) != p.ring()->nvars)
    throw InvalidArgument("map_variables: one target index per source variable");
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(target->nvars);
    for (int v = 0; v < p.ring()->nvars; ++v) {
      if (t.mono[v] == 0) continue;
      if (where[v] < 0)
        throw InvalidArgument("map_variables: variable '" + p.ring()->names[v] +
                              "' has no image");
      m.set(where[v], m[where[v]] + t.mono[v]);
    }
    terms.push_back({m, t.coef});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

}  // namespace chordal

#endif

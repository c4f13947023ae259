#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "postlie/envelope.hpp"
#include "postlie/rational.hpp"
#include "postlie/struct_algebra.hpp"
#include "postlie/uea.hpp"

namespace postlie {

/// Bernoulli number B_k with B_1 = -1/2.
Rational bernoulli(int k);

/// Carrier over the free envelope: elements are forest combinations graded by
/// vertex count. With nonplanar set, every product is followed by the
/// planarity-forgetting projection, under which concatenation is commutative
/// and the carrier is pre-Lie.
struct FreeCarrier {
  using Elem = EnvElement;
  bool nonplanar = false;

  Elem norm(const Elem& a) const { return nonplanar ? project_nonplanar(a) : a; }
  Elem zero() const { return env_zero(); }
  Elem unit() const { return env_unit(); }
  Elem add(const Elem& a, const Elem& b) const { return env_add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return env_sub(a, b); }
  Elem scale(const Rational& c, const Elem& a) const { return env_scale(c, a); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem prod(const Elem& a, const Elem& b) const { return norm(concat(a, b)); }
  Elem gl(const Elem& a, const Elem& b) const { return norm(gl_product(a, b)); }
  Elem tri(const Elem& a, const Elem& b) const { return norm(triangle(a, b)); }
  bool primitive(const Elem& a) const { return is_primitive(a); }
  bool prelie() const { return nonplanar; }
};

/// Carrier over the enveloping algebra of a validated StructAlgebra. Degrees
/// are powers of a formal parameter attached by the series layer, so a
/// component may mix word lengths.
struct AlgCarrier {
  using Elem = UElement;
  StructAlgebra A;

  Elem zero() const { return u_zero(); }
  Elem unit() const { return u_unit(); }
  Elem add(const Elem& a, const Elem& b) const { return u_add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return u_sub(a, b); }
  Elem scale(const Rational& c, const Elem& a) const { return u_scale(c, a); }
  bool is_zero(const Elem& a) const { return u_is_zero(a); }
  Elem prod(const Elem& a, const Elem& b) const { return u_mul(A, a, b); }
  Elem gl(const Elem& a, const Elem& b) const { return u_gl(A, a, b); }
  Elem tri(const Elem& a, const Elem& b) const { return u_tri(A, a, b); }
  bool primitive(const Elem& a) const { return u_primitive(a); }
  bool prelie() const {
    for (const auto& [key, c] : A.bracket_c)
      if (c != 0) return false;
    return true;
  }
};

/// Truncated graded series over a carrier: degree -> component, with zero
/// components absent.
template <class C>
struct Series {
  std::map<int, typename C::Elem> comp;

  bool operator==(const Series& o) const = default;
};

enum class Prod { Cat, GL };
enum class Bracket { Lie, Double };

template <class C>
typename C::Elem series_at(const C& c, const Series<C>& s, int k) {
  auto it = s.comp.find(k);
  return it == s.comp.end() ? c.zero() : it->second;
}

template <class C>
Series<C> series_from(const C& c, const typename C::Elem& e, int deg) {
  Series<C> s;
  if (!c.is_zero(e)) s.comp[deg] = e;
  return s;
}

template <class C>
void series_set(const C& c, Series<C>& s, int deg, const typename C::Elem& e) {
  if (c.is_zero(e))
    s.comp.erase(deg);
  else
    s.comp[deg] = e;
}

template <class C>
void series_accum(const C& c, Series<C>& acc, const Series<C>& more,
                  const Rational& coef = 1) {
  if (coef == 0) return;
  for (const auto& [k, e] : more.comp) {
    auto it = acc.comp.find(k);
    if (it == acc.comp.end()) {
      acc.comp.emplace(k, c.scale(coef, e));
    } else {
      it->second = c.add(it->second, c.scale(coef, e));
      if (c.is_zero(it->second)) acc.comp.erase(it);
    }
  }
}

template <class C>
Series<C> series_add(const C& c, const Series<C>& a, const Series<C>& b) {
  Series<C> r = a;
  series_accum(c, r, b);
  return r;
}

template <class C>
Series<C> series_sub(const C& c, const Series<C>& a, const Series<C>& b) {
  Series<C> r = a;
  series_accum(c, r, b, Rational(-1));
  return r;
}

template <class C>
Series<C> series_scale(const C& c, const Rational& coef, const Series<C>& a) {
  Series<C> r;
  series_accum(c, r, a, coef);
  return r;
}

template <class C>
Series<C> series_truncate(const C&, const Series<C>& a, int cap) {
  Series<C> r;
  for (const auto& [k, e] : a.comp)
    if (k <= cap) r.comp.emplace(k, e);
  return r;
}

template <class C>
bool series_is_zero(const C&, const Series<C>& a) {
  return a.comp.empty();
}

template <class C>
using BinOp = typename C::Elem (C::*)(const typename C::Elem&,
                                      const typename C::Elem&) const;

template <class C>
BinOp<C> series_op(Prod which) {
  return which == Prod::Cat ? &C::prod : &C::gl;
}

/// Degree-wise convolution of two series by the selected product,
/// truncated at degree cap.
template <class C>
Series<C> series_prod(const C& c, Prod which, const Series<C>& a,
                      const Series<C>& b, int cap) {
  BinOp<C> op = series_op<C>(which);
  Series<C> r;
  for (const auto& [i, ea] : a.comp) {
    if (i > cap) break;
    for (const auto& [j, eb] : b.comp) {
      if (i + j > cap) break;
      series_accum(c, r, series_from(c, (c.*op)(ea, eb), i + j));
    }
  }
  return r;
}

/// Degree-wise convolution by the D-product.
template <class C>
Series<C> series_tri(const C& c, const Series<C>& a, const Series<C>& b,
                     int cap) {
  Series<C> r;
  for (const auto& [i, ea] : a.comp) {
    if (i > cap) break;
    for (const auto& [j, eb] : b.comp) {
      if (i + j > cap) break;
      series_accum(c, r, series_from(c, c.tri(ea, eb), i + j));
    }
  }
  return r;
}

/// Exponential with respect to the selected product; requires the degree-zero
/// component to vanish.
template <class C>
Series<C> exp_wrt(const C& c, Prod which, const Series<C>& a, int cap) {
  if (!c.is_zero(series_at(c, a, 0)))
    throw std::invalid_argument("exp_wrt: nonzero degree-zero component");
  Series<C> r = series_from(c, c.unit(), 0);
  Series<C> power = r;
  Rational inv_fact(1);
  for (int k = 1; k <= cap; ++k) {
    power = series_prod(c, which, power, a, cap);
    if (series_is_zero(c, power)) break;
    inv_fact /= k;
    series_accum(c, r, power, inv_fact);
  }
  return r;
}

/// Logarithm with respect to the selected product; requires the degree-zero
/// component to equal the unit.
template <class C>
Series<C> log_wrt(const C& c, Prod which, const Series<C>& g, int cap) {
  if (!c.is_zero(c.sub(series_at(c, g, 0), c.unit())))
    throw std::invalid_argument("log_wrt: degree-zero component is not the unit");
  Series<C> h = g;
  h.comp.erase(0);
  Series<C> r;
  Series<C> power = series_from(c, c.unit(), 0);
  for (int k = 1; k <= cap; ++k) {
    power = series_prod(c, which, power, h, cap);
    if (series_is_zero(c, power)) break;
    series_accum(c, r, power, Rational(k % 2 == 1 ? 1 : -1) / k);
  }
  return r;
}

/// Post-Lie Magnus argument: the primitive series chi(x) with
/// exp_GL(chi(x)) = exp_Cat(x), solved degree by degree. Accepts any series
/// of primitive components with no degree-zero part.
template <class C>
Series<C> chi(const C& c, const Series<C>& x, int cap) {
  if (!c.is_zero(series_at(c, x, 0)))
    throw std::invalid_argument("chi: nonzero degree-zero component");
  for (const auto& [k, e] : x.comp)
    if (!c.primitive(e))
      throw std::invalid_argument("chi: component is not primitive");
  Series<C> target = exp_wrt(c, Prod::Cat, x, cap);
  Series<C> r;
  for (int k = 1; k <= cap; ++k) {
    Series<C> approx = exp_wrt(c, Prod::GL, r, k);
    series_set(c, r, k,
               c.sub(series_at(c, target, k), series_at(c, approx, k)));
  }
  return r;
}

/// Inverse direction: eta(x) = log_Cat(exp_GL(x)).
template <class C>
Series<C> eta(const C& c, const Series<C>& x, int cap) {
  return log_wrt(c, Prod::Cat, exp_wrt(c, Prod::GL, x, cap), cap);
}

/// Composition law x # y = log_Cat(exp_Cat(x) * exp_Cat(y)) with * the
/// Grossman-Larson product.
template <class C>
Series<C> sharp(const C& c, const Series<C>& x, const Series<C>& y, int cap) {
  Series<C> g = series_prod(c, Prod::GL, exp_wrt(c, Prod::Cat, x, cap),
                            exp_wrt(c, Prod::Cat, y, cap), cap);
  return log_wrt(c, Prod::Cat, g, cap);
}

/// Baker-Campbell-Hausdorff series of the bracket selected by which: Lie uses
/// the concatenation commutator, Double the Grossman-Larson commutator.
template <class C>
Series<C> bch(const C& c, Bracket which, const Series<C>& x, const Series<C>& y,
              int cap) {
  Prod p = which == Bracket::Lie ? Prod::Cat : Prod::GL;
  Series<C> g =
      series_prod(c, p, exp_wrt(c, p, x, cap), exp_wrt(c, p, y, cap), cap);
  return log_wrt(c, p, g, cap);
}

/// Pre-Lie Magnus expansion by the Bernoulli recursion
/// Omega = sum_k B_k/k! ad_tri(Omega)^k(x); requires a pre-Lie carrier.
template <class C>
Series<C> prelie_magnus(const C& c, const Series<C>& x, int cap) {
  if (!c.prelie())
    throw std::invalid_argument("prelie_magnus: carrier is not pre-Lie");
  if (!c.is_zero(series_at(c, x, 0)))
    throw std::invalid_argument("prelie_magnus: nonzero degree-zero component");
  Series<C> r;
  for (int m = 1; m <= cap; ++m) {
    Series<C> iter = x;
    typename C::Elem comp = series_at(c, x, m);
    for (int k = 1; k < m; ++k) {
      iter = series_tri(c, r, iter, cap);
      if (series_is_zero(c, iter)) break;
      Rational b = bernoulli(k) / factorial(k);
      comp = c.add(comp, c.scale(b, series_at(c, iter, m)));
    }
    series_set(c, r, m, comp);
  }
  return r;
}

/// Exponential of the left D-multiplication operator applied to y:
/// y + sum_n tri^n_x(y)/n!.
template <class C>
Series<C> exp_nabla(const C& c, const Series<C>& x, const Series<C>& y,
                    int cap) {
  Series<C> r = y;
  Series<C> term = y;
  for (int n = 1; n <= cap; ++n) {
    term = series_scale(c, Rational(1) / n, series_tri(c, x, term, cap));
    if (series_is_zero(c, term)) break;
    series_accum(c, r, term);
  }
  return r;
}

/// Right-nested D-exponential 1 + a + a>a/2 + a>(a>a)/6 + ...; inverse of the
/// Magnus expansion on pre-Lie carriers.
template <class C>
Series<C> exp_rt(const C& c, const Series<C>& a, int cap) {
  if (!c.is_zero(series_at(c, a, 0)))
    throw std::invalid_argument("exp_rt: nonzero degree-zero component");
  Series<C> r = series_from(c, c.unit(), 0);
  Series<C> power = a;
  series_accum(c, r, power);
  Rational inv_fact(1);
  for (int n = 2; n <= cap; ++n) {
    power = series_tri(c, a, power, cap);
    if (series_is_zero(c, power)) break;
    inv_fact /= n;
    series_accum(c, r, power, inv_fact);
  }
  return r;
}

/// Formal flow composition f(x, y) = x + exp_nabla(chi(x), y) on a pre-Lie
/// carrier.
template <class C>
Series<C> formal_flow(const C& c, const Series<C>& x, const Series<C>& y,
                      int cap) {
  if (!c.prelie())
    throw std::invalid_argument("formal_flow: carrier is not pre-Lie");
  return series_add(c, x, exp_nabla(c, chi(c, x, cap), y, cap));
}

/// Residual of the flow equation dx/dt = -x(t) > x(t), x(0) = x0, for the
/// curve x(t) = exp_GL(-chi(t x0)) > x0. Component m is the t^m coefficient
/// of dx/dt + x(t) > x(t); the contract is that all of them vanish. x0 must
/// be primitive.
template <class C>
Series<C> flow_residual(const C& c, const typename C::Elem& x0, int N) {
  if (!c.primitive(x0))
    throw std::invalid_argument("flow_residual: x0 is not primitive");
  Series<C> x = series_from(c, x0, 1);
  Series<C> g = exp_wrt(c, Prod::GL,
                        series_scale(c, Rational(-1), chi(c, x, N)), N);
  std::vector<typename C::Elem> xi;
  xi.reserve(N + 1);
  for (int k = 0; k <= N; ++k) xi.push_back(c.tri(series_at(c, g, k), x0));
  Series<C> r;
  for (int m = 0; m < N; ++m) {
    typename C::Elem res = c.scale(Rational(m + 1), xi[m + 1]);
    for (int a = 0; a <= m; ++a)
      res = c.add(res, c.tri(xi[a], xi[m - a]));
    series_set(c, r, m, res);
  }
  return r;
}

}  // namespace postlie

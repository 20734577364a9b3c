#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace xxz {

/// Truncated complex Taylor series c_0 + c_1 e + ... + c_K e^K, closed
/// under arithmetic and the analytic functions used by the model
/// (exp, sinh, cosh). Coefficients are raw Taylor coefficients; the k-th
/// derivative is k! * c_k and the factorial is applied only on extraction.
class Jet {
 public:
  using C = std::complex<double>;

  explicit Jet(std::size_t order, C c0 = C{}) : c_(order + 1, C{}) { c_[0] = c0; }

  static Jet variable(std::size_t order, C at) {
    Jet j(order, at);
    if (order >= 1) j.c_[1] = C{1.0, 0.0};
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t k) const { return c_[k]; }
  C& operator[](std::size_t k) { return c_[k]; }
  C value() const { return c_[0]; }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator+=(C s) {
    c_[0] += s;
    return *this;
  }
  Jet& operator-=(C s) {
    c_[0] -= s;
    return *this;
  }
  Jet& operator*=(C s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, C b) { return a += b; }
  friend Jet operator+(C a, Jet b) { return b += a; }
  friend Jet operator-(Jet a, C b) { return a -= b; }
  friend Jet operator-(C a, const Jet& b) {
    Jet r = -b;
    return r += a;
  }
  friend Jet operator*(Jet a, C b) { return a *= b; }
  friend Jet operator*(C a, Jet b) { return b *= a; }
  friend Jet operator/(Jet a, C b) { return a *= (C{1.0, 0.0} / b); }

  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  // Cauchy product truncated at the jet order.
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
      C s{};
      for (std::size_t j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    a.check(b);
    if (b.c_[0] == C{}) throw std::domain_error("jet division: zero constant term");
    Jet r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
      C s = a.c_[k];
      for (std::size_t j = 0; j < k; ++j) s -= r.c_[j] * b.c_[k - j];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }
  friend Jet operator/(C a, const Jet& b) { return Jet(b.order(), a) / b; }

 private:
  void check(const Jet& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("jet order mismatch");
  }
  std::vector<C> c_;
};

/// exp via the standard recurrence e_k = (1/k) sum_{j=1..k} j f_j e_{k-j}.
inline Jet exp(const Jet& f) {
  Jet e(f.order());
  e[0] = std::exp(f[0]);
  for (std::size_t k = 1; k <= f.order(); ++k) {
    std::complex<double> s{};
    for (std::size_t j = 1; j <= k; ++j)
      s += static_cast<double>(j) * f[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  return e;
}

inline Jet sinh(const Jet& f) {
  Jet r = exp(f) - exp(-f);
  return r * std::complex<double>{0.5, 0.0};
}

inline Jet cosh(const Jet& f) {
  Jet r = exp(f) + exp(-f);
  return r * std::complex<double>{0.5, 0.0};
}

inline Jet pow_int(const Jet& f, int p) {
  if (p < 0) return Jet(f.order(), {1.0, 0.0}) / pow_int(f, -p);
  Jet r(f.order(), {1.0, 0.0});
  for (int i = 0; i < p; ++i) r = r * f;
  return r;
}

/// Derivatives (f(at), f'(at), ..., f^(K)(at)) extracted from an order-K
/// jet of f expanded at `at`.
template <class F>
std::vector<std::complex<double>> jet_derivatives(F&& f, std::complex<double> at,
                                                  std::size_t upto) {
  Jet x = Jet::variable(upto, at);
  Jet y = f(x);
  std::vector<std::complex<double>> d(upto + 1);
  double fact = 1.0;
  for (std::size_t k = 0; k <= upto; ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    d[k] = y[k] * fact;
  }
  return d;
}

}  // namespace xxz

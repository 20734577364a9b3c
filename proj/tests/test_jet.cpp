#include <doctest.h>

#include "test_common.hpp"
#include "xxz/homolimit.hpp"
#include "xxz/jet.hpp"

using namespace xxz;
using namespace xxz::testutil;

TEST_CASE("exp series coefficients") {
  Jet x = Jet::variable(4, {0.0, 0.0});
  Jet e = exp(x);
  const double expect[] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(std::abs(e[k] - Complex{expect[k], 0.0}) < 1e-15);
}

TEST_CASE("sinh series coefficients") {
  Jet x = Jet::variable(3, {0.0, 0.0});
  Jet s = sinh(x);
  const double expect[] = {0.0, 1.0, 0.0, 1.0 / 6.0};
  for (std::size_t k = 0; k <= 3; ++k)
    CHECK(std::abs(s[k] - Complex{expect[k], 0.0}) < 1e-15);
}

TEST_CASE("jet division needs a nonzero constant term") {
  Jet x = Jet::variable(3, {0.0, 0.0});
  Jet one(3, {1.0, 0.0});
  CHECK_THROWS_AS(one / sinh(x), std::domain_error);
}

TEST_CASE("product coefficients are the Cauchy convolution") {
  Jet a(3), b(3);
  a[0] = {1.0, 0.5};
  a[1] = {-0.3, 0.2};
  a[2] = {0.1, 0.0};
  a[3] = {0.0, -1.0};
  b[0] = {2.0, 0.0};
  b[1] = {0.4, 0.4};
  b[2] = {-0.5, 0.3};
  b[3] = {0.2, 0.1};
  Jet p = a * b;
  for (std::size_t k = 0; k <= 3; ++k) {
    Complex s{};
    for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
    CHECK(std::abs(p[k] - s) == 0.0);
  }
}

TEST_CASE("jet derivative of sinh(u+eta)/sinh(u-eta) matches finite differences") {
  const Complex eta{1.0, 0.0};
  auto f = [eta](const auto& u) { return sinh(u + eta) / sinh(u - eta); };
  auto fc = [eta](Complex u) {
    return std::sinh(u + eta) / std::sinh(u - eta);
  };
  const Complex at{0.3, 0.0};
  auto d = jet_derivatives(f, at, 1);
  const double h = 1e-5;
  const Complex fd = (fc(at + h) - fc(at - h)) / (2.0 * h);
  CHECK(std::abs(d[1] - fd) < 1e-8);
}

TEST_CASE("jet_derivatives basics") {
  auto de = jet_derivatives([](const Jet& x) { return exp(x); }, {0.0, 0.0}, 3);
  for (const Complex& v : de) CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-15);

  auto ds = jet_derivatives([](const Jet& x) { return sinh(x); }, {0.0, 0.0}, 2);
  CHECK(std::abs(ds[0]) < 1e-15);
  CHECK(std::abs(ds[1] - Complex{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(ds[2]) < 1e-15);
}

TEST_CASE("phi_1(0) for the reference lambda roots") {
  ChainParams p = hom3();
  RootSet l = polished(p, table_l_roots());
  Jet phi = phi_n(l.roots, l.roots, p.eta, p.n, 1, 2);
  CHECK(std::abs(phi.value() - Complex{0.667228749898571, 0.0}) < 1e-12);
}

TEST_CASE("pow_int with negative exponent") {
  Jet x = Jet::variable(3, {0.4, 0.1});
  Jet prod = pow_int(x, -2) * x * x;
  CHECK(std::abs(prod[0] - Complex{1.0, 0.0}) < 1e-13);
  CHECK(std::abs(prod[1]) < 1e-13);
}

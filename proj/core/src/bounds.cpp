#include "quadrics/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "quadrics/strata.hpp"

namespace quadrics {

BoundValue make_bound(const Rational& exact) {
  return BoundValue{exact, ceil_rational(exact)};
}

Integer milnor_projective(int n, int d) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("milnor_projective: need n, d >= 1");
  return Integer(n) * d *
         pow_integer(Integer(2 * d - 1), static_cast<unsigned long>(n - 1));
}

BoundValue basu_s(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("basu_s: need k, n >= 1");
  Rational sum(0);
  for (int j = 0; j <= k; ++j) {
    sum += Rational(binomial(static_cast<unsigned long>(k),
                             static_cast<unsigned long>(j)) *
                    binomial(static_cast<unsigned long>(n + 1),
                             static_cast<unsigned long>(j)) *
                    pow_integer(2, static_cast<unsigned long>(j)));
  }
  return make_bound(Rational(n) / 2 * sum);
}

Integer det_variety_bound(int d, int n, int r, int k) {
  if (d < 1 || n < 1 || r < 1 || k < 1 || r > n)
    throw std::invalid_argument("det_variety_bound: bad parameters");
  const int delta = std::max(d, n - r + 1);
  return Integer(delta) *
         pow_integer(Integer(2 * delta - 1), static_cast<unsigned long>(k - 1));
}

namespace {

// chi as the (k-2)nd coefficient of 2 delta (1+x)^(k+1) / ((1+2x)(1+delta x)),
// by truncated power-series division.
Rational chi_by_series(int k, int delta) {
  const int order = k - 2;
  std::vector<Rational> numerator(order + 1, Rational(0));
  for (int i = 0; i <= order; ++i)
    numerator[i] = Rational(2 * delta) *
                   Rational(binomial(static_cast<unsigned long>(k + 1),
                                     static_cast<unsigned long>(i)));
  // Denominator (1+2x)(1+delta x) = 1 + (2+delta) x + 2 delta x^2.
  const Rational d1(2 + delta), d2(2 * delta);
  std::vector<Rational> series(order + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    Rational c = numerator[i];
    if (i >= 1) c -= d1 * series[i - 1];
    if (i >= 2) c -= d2 * series[i - 2];
    series[i] = c;
  }
  return series[order];
}

// The same coefficient from the expanded double sum
// (-1)^k sum_{j=0}^{k-2} (sum_{i=0}^{j} binom(k+1,i) (-1/2)^i) 2^(j+1) delta^(k-j-1).
Rational chi_by_closed_sum(int k, int delta) {
  Rational total(0);
  Rational inner(0);
  for (int j = 0; j <= k - 2; ++j) {
    inner += Rational(binomial(static_cast<unsigned long>(k + 1),
                               static_cast<unsigned long>(j))) *
             pow_rational(Rational(-1, 2), static_cast<unsigned long>(j));
    total += inner *
             Rational(pow_integer(2, static_cast<unsigned long>(j + 1))) *
             Rational(pow_integer(Integer(delta),
                                  static_cast<unsigned long>(k - j - 1)));
  }
  if (k % 2 != 0) total = -total;
  return total;
}

}  // namespace

Integer hirzebruch_chi(int k, int delta) {
  if (k < 2 || delta < 1)
    throw std::invalid_argument("hirzebruch_chi: need k >= 2, delta >= 1");
  const Rational by_series = chi_by_series(k, delta);
  const Rational by_sum = chi_by_closed_sum(k, delta);
  if (by_series != by_sum)
    throw std::logic_error("hirzebruch_chi: series and closed sum disagree");
  if (by_series.get_den() != 1)
    throw std::logic_error("hirzebruch_chi: non-integer chi");
  return by_series.get_num();
}

Integer ci_betti(int k, int delta) {
  if (k < 2) throw std::invalid_argument("ci_betti: need k >= 2");
  Integer value = Integer(k - 1) * (1 + (k % 2 == 0 ? -1 : 1));
  Integer chi = hirzebruch_chi(k, delta);
  value += (k % 2 == 0 ? chi : -chi);
  if (value < 0) throw std::logic_error("ci_betti: negative value");
  return value;
}

BoundValue ci_betti_bound(int k, int delta) {
  if (k < 2 || delta < 1)
    throw std::invalid_argument("ci_betti_bound: need k >= 2, delta >= 1");
  Rational value =
      Rational(2) * Rational(pow_integer(Integer(delta),
                                         static_cast<unsigned long>(k - 1)));
  value += Rational(binomial(static_cast<unsigned long>(k + 1), 3)) / 4 *
           Rational(pow_integer(Integer(3 * delta),
                                static_cast<unsigned long>(k - 2)));
  return make_bound(value);
}

BoundValue spherical_bound(int k, int d) {
  if (k < 1 || d < 1)
    throw std::invalid_argument("spherical_bound: need k, d >= 1");
  Rational value(pow_integer(Integer(2 * d), static_cast<unsigned long>(k - 1)));
  if (k >= 2) {
    value += Rational(binomial(static_cast<unsigned long>(k + 1), 3)) / 8 *
             Rational(pow_integer(Integer(6 * d),
                                  static_cast<unsigned long>(k - 2)));
  }
  return make_bound(value);
}

BoundValue numerical_bound(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("numerical_bound: need k, n >= 1");
  Rational total(n + 1);
  for (int r = 1; r <= sigma_k(k); ++r)
    total += spherical_bound(k, n - r + 2).exact / 2;
  return make_bound(total);
}

TopologicalBound topological_bound_from_data(int n, int mu, int nu,
                                             const std::vector<int>& stratum_bettis) {
  if (nu < 0 || mu < nu || mu > n + 1)
    throw std::invalid_argument("topological_bound_from_data: need 0 <= nu <= mu <= n+1");
  Rational value(n + 1 - 2 * (mu - nu));
  for (int b : stratum_bettis) {
    if (b < 0)
      throw std::invalid_argument("topological_bound_from_data: negative Betti");
    value += Rational(b) / 2;
  }
  TopologicalBound result;
  result.bound = ceil_rational(value);
  result.rounded_up = value.get_den() != 1;
  return result;
}

std::string barvinok_bound(int k, int constant) {
  std::ostringstream out;
  out << "n^(" << constant << "*" << k << ")";
  return out.str();
}

ReferenceConstants reference_constants() {
  ReferenceConstants rc;
  rc.ck = {{2, Rational(2)},
           {3, Rational(1)},
           {4, Rational(2, 3)},
           {5, Rational(1, 3)},
           {6, Rational(2, 15)}};
  return rc;
}

}  // namespace quadrics

#include "quadrics/strata.hpp"

#include <stdexcept>

namespace quadrics {

int codim(int r) {
  if (r < 0) throw std::invalid_argument("codim: r must be >= 0");
  return r * (r + 1) / 2;
}

StratumDescriptor stratum_descriptor(int r) {
  StratumDescriptor d;
  d.r = r;
  d.codim = codim(r);
  d.smallest_nonempty_k = d.codim + 1;
  return d;
}

int sigma_k(int k) {
  if (k < 1) throw std::invalid_argument("sigma_k: k must be >= 1");
  int r = 0;
  while ((r + 1) * (r + 2) / 2 < k) ++r;
  return r;
}

Integer grassmannian_betti(int j, int n) {
  if (j < 0 || n < 0 || j > n)
    throw std::invalid_argument("grassmannian_betti: need 0 <= j <= n");
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
}

Integer discriminant_betti(int n) {
  if (n < 1) throw std::invalid_argument("discriminant_betti: n must be >= 1");
  Integer sum = 0;
  for (int j = 0; j <= n; ++j) sum += grassmannian_betti(j, n);
  Integer two_n = pow_integer(2, static_cast<unsigned long>(n));
  if (sum != two_n)
    throw std::logic_error("discriminant_betti: binomial sum != 2^n");
  return sum;
}

Integer harris_tu_degree(int r, int n) {
  if (r < 1 || n < r)
    throw std::invalid_argument("harris_tu_degree: need 1 <= r <= n");
  Rational product(1);
  for (int a = 0; a < r; ++a) {
    Rational num(binomial(static_cast<unsigned long>(n + a),
                          static_cast<unsigned long>(r - a)));
    Rational den(binomial(static_cast<unsigned long>(2 * a + 1),
                          static_cast<unsigned long>(a)));
    product *= num / den;
  }
  if (product.get_den() != 1)
    throw std::logic_error("harris_tu_degree: non-integer product");
  return product.get_num();
}

IntervalFamily stratum_decomposition(int r, int l) {
  if (r < 1) throw std::invalid_argument("stratum_decomposition: r must be >= 1");
  IntervalFamily family;
  family.r = r;
  family.l = l;
  for (int first = 0; first + r <= l; ++first) {
    std::vector<int> run;
    for (int j = 0; j < r; ++j) run.push_back(first + j);
    family.intervals.push_back(std::move(run));
  }
  return family;
}

}  // namespace quadrics

#include "quadrics/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace quadrics {

namespace {
void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}
}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  trim(c_);
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading of zero polynomial");
  return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * static_cast<int>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x = -x;
  return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::remainder(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("remainder by zero polynomial");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    trim(rem);
    if (static_cast<int>(rem.size()) - 1 < dd) break;
    const Rational factor = rem.back() / divisor.leading();
    const std::size_t shift = rem.size() - 1 - dd;
    for (int i = 0; i <= dd; ++i)
      rem[shift + i] -= factor * divisor.c_[static_cast<std::size_t>(i)];
    rem.pop_back();
  }
  return Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(const Polynomial& other) const {
  Polynomial a = *this, b = other;
  while (!b.is_zero()) {
    Polynomial r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic normalization keeps coefficient growth in check
  std::vector<Rational> c = a.coeffs();
  const Rational lead = a.leading();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

bool Polynomial::is_squarefree() const {
  if (is_zero()) return false;
  if (degree() <= 1) return true;
  return gcd(derivative()).degree() == 0;
}

bool Polynomial::has_repeated_real_root() const {
  if (is_zero()) return true;
  if (degree() <= 1) return false;
  const Polynomial g = gcd(derivative());
  if (g.degree() == 0) return false;
  return count_real_roots(g) > 0;
}

Rational Polynomial::root_bound() const {
  if (is_zero()) throw std::logic_error("root bound of zero polynomial");
  Rational best(0);
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    Rational a = abs(c_[i] / c_.back());
    if (a > best) best = a;
  }
  return best + 1;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  // Work with the squarefree part so that multiple roots are counted once.
  Polynomial g = p.gcd(p.derivative());
  Polynomial base = p;
  if (g.degree() > 0) {
    // exact division p / g via repeated remainder-free long division
    std::vector<Rational> quotient(static_cast<std::size_t>(p.degree() - g.degree() + 1),
                                   Rational(0));
    std::vector<Rational> rem = p.coeffs();
    while (static_cast<int>(rem.size()) - 1 >= g.degree()) {
      while (!rem.empty() && sgn(rem.back()) == 0) rem.pop_back();
      if (static_cast<int>(rem.size()) - 1 < g.degree()) break;
      const Rational factor = rem.back() / g.leading();
      const std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(g.degree());
      quotient[shift] = factor;
      for (int i = 0; i <= g.degree(); ++i)
        rem[shift + static_cast<std::size_t>(i)] -=
            factor * g.coeffs()[static_cast<std::size_t>(i)];
      rem.pop_back();
    }
    base = Polynomial(std::move(quotient));
  }
  chain.push_back(base);
  Polynomial d = base.derivative();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].remainder(chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {
int variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
  int variations = 0, prev = 0;
  for (const auto& p : chain) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}
}  // namespace

int count_roots_in(const std::vector<Polynomial>& chain, const Rational& a,
                   const Rational& b) {
  if (chain.empty()) return 0;
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  const Rational bound = p.root_bound();
  return count_roots_in(chain, -bound, bound);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RootInterval> result;
  if (p.degree() == 0) return result;
  const auto chain = sturm_chain(p);
  const Polynomial& sf = chain.front();  // squarefree part
  const Rational bound = p.root_bound();

  struct Segment {
    Rational lo, hi;
    int roots;
  };
  std::vector<Segment> work;
  {
    const int total = count_roots_in(chain, -bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
  }
  while (!work.empty()) {
    Segment seg = work.back();
    work.pop_back();
    if (seg.roots == 1) {
      // Shrink until endpoints are not roots themselves; (a,b] counting means
      // the right endpoint may be the root.
      if (sgn(sf(seg.hi)) == 0) {
        result.push_back({seg.hi, seg.hi});
        continue;
      }
      result.push_back({seg.lo, seg.hi});
      continue;
    }
    const Rational mid = (seg.lo + seg.hi) / 2;
    if (sgn(sf(mid)) == 0) {
      result.push_back({mid, mid});
      // Exclude an interval around mid free of other roots by shrinking both
      // halves until their variation counts stabilize without mid.
      Rational radius = (seg.hi - seg.lo) / 4;
      while (count_roots_in(chain, mid - radius, mid + radius) > 1) radius /= 2;
      const int left = count_roots_in(chain, seg.lo, mid - radius);
      const int right = count_roots_in(chain, mid + radius, seg.hi);
      if (left > 0) work.push_back({seg.lo, mid - radius, left});
      if (right > 0) work.push_back({mid + radius, seg.hi, right});
      continue;
    }
    const int left = count_roots_in(chain, seg.lo, mid);
    const int right = seg.roots - left;
    if (left > 0) work.push_back({seg.lo, mid, left});
    if (right > 0) work.push_back({mid, seg.hi, right});
  }

  std::sort(result.begin(), result.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  // Refine until intervals are separated by gaps (needed for sampling between
  // consecutive roots).
  auto refine = [&](RootInterval& iv) {
    if (iv.exact()) return;
    const Rational mid = (iv.lo + iv.hi) / 2;
    if (sgn(sf(mid)) == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (count_roots_in(chain, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < result.size(); ++i) {
      if (result[i].hi >= result[i + 1].lo) {
        refine(result[i]);
        refine(result[i + 1]);
        changed = true;
      }
    }
  }
  return result;
}

}  // namespace quadrics

#include "quadrics/perturb.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "quadrics/errors.hpp"
#include "quadrics/linalg.hpp"

namespace quadrics {

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::TransversalK2: return "TransversalK2";
    case CertKind::StableK3: return "StableK3";
    case CertKind::GenericEps0: return "GenericEps0";
    case CertKind::Failed: return "Failed";
  }
  return "Failed";
}

QForm default_p(int n) { return QForm::identity(n + 1); }

QForm randomize_p(std::uint64_t seed, int n, const Rational& magnitude) {
  if (magnitude >= 1 || sgn(magnitude) < 0)
    throw std::invalid_argument("randomize_p: need 0 <= magnitude < 1");
  QForm p = QForm::identity(n + 1);
  std::mt19937_64 rng(seed);
  // Engine output reduced explicitly; std distributions are not portable.
  constexpr std::uint64_t kGrid = 1 << 16;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const auto raw = static_cast<long>(rng() % (2 * kGrid + 1)) -
                       static_cast<long>(kGrid);
      const Rational noise = make_rational(raw, kGrid) * magnitude;
      p.set_entry(i, j, p.entry(i, j) + noise);
    }
  }
  const Inertia inertia = inertia_ldl(p);
  if (inertia.pos != n + 1)
    throw std::logic_error("randomize_p: perturbed form is not positive definite");
  return p;
}

namespace {

Rational system_scale(const QuadricSystem& sys) {
  Rational m(0);
  for (const auto& f : sys.forms) m = std::max(m, f.max_abs_entry());
  return m;
}

Rational schedule_start(const QuadricSystem& sys) {
  const Rational m = system_scale(sys);
  if (sgn(m) == 0) return Rational(1, 2);
  return m / (2 * (1 + m));
}

struct K2Signature {
  int root_count = 0;
  std::vector<int> labels;
  friend bool operator==(const K2Signature&, const K2Signature&) = default;
};

struct K3Signature {
  int components = 0;
  std::vector<int> labels;
  int mu = 0, nu = 0;
  friend bool operator==(const K3Signature&, const K3Signature&) = default;
};

K2Signature signature_of(const PencilAnalysis& a) {
  return {a.root_count, a.arc_labels};
}

K3Signature signature_of(const NetAnalysis& a) {
  K3Signature s;
  s.components = a.curve_components;
  for (const auto& r : a.regions) s.labels.push_back(r.label);
  std::sort(s.labels.begin(), s.labels.end());
  s.mu = a.mu;
  s.nu = a.nu;
  return s;
}

constexpr int kMaxHalvings = 40;
constexpr int kMaxRepeatedFailure = 5;

}  // namespace

GenericityResult genericity_check(const QuadricSystem& sys, const QForm& p,
                                  const Rational& eps, const Net3Options& options) {
  GenericityResult result;
  try {
    if (sys.k() == 1) {
      if (sgn(determinant(sys.forms[0].to_matrix())) == 0) {
        result.reason = "degenerate-form";
        return result;
      }
    } else if (sys.k() == 2) {
      const CirclePolynomial cp = circle_polynomial(sys, eps, p);
      if (sgn(cp.value_at_infinity) == 0) {
        result.reason = "root-at-infinity";
        return result;
      }
      if (cp.poly.is_zero() || cp.poly.has_repeated_real_root()) {
        result.reason = "not-squarefree";
        return result;
      }
    } else if (sys.k() == 3) {
      SphereMesh mesh = SphereMesh::at_level(options.base_level + 1);
      SignField field = evaluate_sign_field(sys, eps, p, mesh);
      trace_curve(mesh, field);
      if (!corank2_scan(sys, eps, p, mesh, options.corank_local_depth).empty()) {
        result.reason = "corank2-flags";
        return result;
      }
    } else {
      result.reason = "unsupported-k";
      return result;
    }
  } catch (const VertexOnCurve&) {
    result.reason = "vertex-on-curve";
    return result;
  } catch (const MeshTooCoarse&) {
    result.reason = "mesh-too-coarse";
    return result;
  } catch (const NotTransversal&) {
    result.reason = "not-transversal";
    return result;
  } catch (const NotGeneric&) {
    result.reason = "not-generic";
    return result;
  }
  result.pass = true;
  return result;
}

namespace {

// One epsilon walk with a fixed p. Fills pencil/net on success.
//
// Acceptance: the invariant signature must be identical for two consecutive
// epsilons AND persist at the two further halvings below the accepted value
// (the triple confirmation at eps/2 and eps/4). Plateaus of the signature
// that later break do occur in practice; the confirmation window rejects any
// shorter than four steps.
bool run_schedule(const QuadricSystem& sys, const QForm& p,
                  const Net3Options& options, ScheduleResult& out,
                  std::string& failure) {
  Rational eps = schedule_start(sys);
  struct K2Step {
    Rational eps;
    K2Signature sig;
    PencilAnalysis analysis;
  };
  struct K3Step {
    Rational eps;
    K3Signature sig;
    NetAnalysis analysis;
  };
  std::vector<K2Step> window2;
  std::vector<K3Step> window3;
  std::string last_error;
  int repeats = 0;
  for (int step = 0; step <= kMaxHalvings; ++step, eps /= 2) {
    try {
      if (sys.k() == 2) {
        PencilAnalysis analysis = index_profile(sys, eps, p);
        const K2Signature sig = signature_of(analysis);
        if (!window2.empty() && !(window2.back().sig == sig)) window2.clear();
        window2.push_back({eps, sig, std::move(analysis)});
        if (window2.size() == 4) {
          out.pencil = std::move(window2[1].analysis);
          return true;
        }
      } else {
        NetAnalysis analysis = analyze_net(sys, eps, p, options);
        if (!analysis.corank2_flags.empty())
          throw NotGeneric("corank2-flags");
        const K3Signature sig = signature_of(analysis);
        if (!window3.empty() && !(window3.back().sig == sig)) window3.clear();
        window3.push_back({eps, sig, std::move(analysis)});
        if (window3.size() == 4) {
          out.net = std::move(window3[1].analysis);
          return true;
        }
      }
      repeats = 0;
      last_error.clear();
    } catch (const std::runtime_error& e) {
      // Recoverable signal: the signature chain restarts below this epsilon.
      window2.clear();
      window3.clear();
      if (e.what() == last_error) {
        if (++repeats >= kMaxRepeatedFailure) {
          failure = std::string("persistent: ") + e.what();
          return false;
        }
      } else {
        last_error = e.what();
        repeats = 1;
      }
    }
  }
  failure = "no stabilization within 40 halvings";
  return false;
}

}  // namespace

ScheduleResult epsilon_schedule(const QuadricSystem& sys, const QForm& p,
                                const Net3Options& options) {
  if (sys.k() != 2 && sys.k() != 3)
    throw std::invalid_argument("epsilon_schedule: k must be 2 or 3");
  ScheduleResult result;
  result.cert.p = p;
  result.cert.attempts = 1;
  std::string failure;
  if (run_schedule(sys, p, options, result, failure)) {
    result.cert.kind =
        sys.k() == 2 ? CertKind::TransversalK2 : CertKind::StableK3;
    result.cert.epsilon =
        sys.k() == 2 ? result.pencil->epsilon : result.net->epsilon;
  } else {
    result.cert.kind = CertKind::Failed;
    result.cert.failure_reason = failure;
  }
  return result;
}

ScheduleResult analyze_system(const QuadricSystem& sys, const AnalyzeOptions& options) {
  if (sys.k() != 2 && sys.k() != 3)
    throw std::invalid_argument("analyze_system: k must be 2 or 3");
  const int n = sys.n;
  const QForm base_p = options.p_override ? *options.p_override : default_p(n);

  if (options.eps0) {
    ScheduleResult result;
    result.cert.p = base_p;
    result.cert.attempts = 1;
    result.cert.epsilon = Rational(0);
    const GenericityResult generic =
        genericity_check(sys, base_p, Rational(0), options.net3);
    if (!generic.pass) {
      result.cert.kind = CertKind::Failed;
      result.cert.failure_reason = "eps0: " + generic.reason;
      return result;
    }
    try {
      if (sys.k() == 2) {
        result.pencil = index_profile(sys, Rational(0), base_p);
      } else {
        result.net = analyze_net(sys, Rational(0), base_p, options.net3);
        if (!result.net->corank2_flags.empty()) {
          result.cert.kind = CertKind::Failed;
          result.cert.failure_reason = "eps0: corank2-flags";
          return result;
        }
      }
    } catch (const std::runtime_error& e) {
      result.cert.kind = CertKind::Failed;
      result.cert.failure_reason = std::string("eps0: ") + e.what();
      return result;
    }
    result.cert.kind = CertKind::GenericEps0;
    return result;
  }

  if (options.epsilon) {
    ScheduleResult result;
    result.cert.p = base_p;
    result.cert.attempts = 1;
    result.cert.epsilon = *options.epsilon;
    try {
      if (sys.k() == 2)
        result.pencil = index_profile(sys, *options.epsilon, base_p);
      else
        result.net = analyze_net(sys, *options.epsilon, base_p, options.net3);
      result.cert.kind =
          sys.k() == 2 ? CertKind::TransversalK2 : CertKind::StableK3;
    } catch (const std::runtime_error& e) {
      result.cert.kind = CertKind::Failed;
      result.cert.failure_reason = e.what();
    }
    return result;
  }

  ScheduleResult result = epsilon_schedule(sys, base_p, options.net3);
  int attempts = 1;
  const Rational magnitude = options.magnitude
                                 ? *options.magnitude
                                 : Rational(1, 2 * (n + 1) * (n + 1));
  while (result.cert.kind == CertKind::Failed &&
         attempts <= options.max_p_retries) {
    const QForm p = randomize_p(options.seed + static_cast<std::uint64_t>(attempts),
                                n, magnitude);
    std::string previous_failure = result.cert.failure_reason;
    result = epsilon_schedule(sys, p, options.net3);
    ++attempts;
    if (result.cert.kind == CertKind::Failed &&
        result.cert.failure_reason.empty())
      result.cert.failure_reason = previous_failure;
  }
  result.cert.attempts = attempts;
  return result;
}

}  // namespace quadrics

// SPDX-License-Identifier: Apache-2.0
#include "mtfcost/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "mtfcost/special_fn.hpp"

namespace mtfcost {

namespace {

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    const double fsum = f1 + f2;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
  }
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double kEps = 2.220446049250313e-16;
  if (resabs > 1e-290) err = std::max(kEps * 50.0 * resabs, err);
  return {resk * half, err};
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a,
                        double b, const QuadSpec& spec) {
  const double min_width = 1e-14 * std::abs(b - a);
  std::priority_queue<Segment> queue;
  const PanelResult first = gk15(f, a, b);
  queue.push({a, b, first.value, first.error});
  double total = first.value;
  double total_err = first.error;
  int subdivisions = 0;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (subdivisions >= spec.max_subdivisions) {
      throw NumericError("quadrature did not converge within the subdivision budget",
                         total, total_err);
    }
    const Segment worst = queue.top();
    if (worst.b - worst.a <= min_width) break;  // resolution floor
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const PanelResult left = gk15(f, worst.a, mid);
    const PanelResult right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.value, left.error});
    queue.push({mid, worst.b, right.value, right.error});
    ++subdivisions;
  }
  return {total, total_err, subdivisions};
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadSpec& spec) {
  auto mapped = [&f](double t) {
    const double om = 1.0 - t;
    const double v = t / om;
    const double fv = f(v);
    if (fv == 0.0) return 0.0;  // avoid 0 * inf at the far end
    return fv / (om * om);
  };
  return integrate_gk(mapped, 0.0, 1.0, spec);
}

namespace {

constexpr double kOuterCut = 40.0;  // exp(-40) tail, mass < 1e-17

// Closed-form kernels in (e, v) coordinates. The ratio forms never
// overflow: every power has a base in (0, 1] or a negative exponent sum.
struct EvKernel {
  enum class Family { kStableLike, kGenGamma, kGammaFamily };
  Family family;
  double gamma = 0.0;
  double u_pow_gamma = 0.0;
  double mass = 0.0;

  double g(double e, double v) const {
    switch (family) {
      case Family::kStableLike: {
        const double p = (1.0 - gamma) / gamma;
        if (e == 0.0) return 0.0;
        return (p / (e + v)) * std::pow(e / (e + v), p);
      }
      case Family::kGenGamma: {
        const double la = std::log(gamma * e / mass + u_pow_gamma);
        const double lb = std::log(gamma * (e + v) / mass + u_pow_gamma);
        return (1.0 - gamma) / mass *
               std::exp(((1.0 - gamma) * la - lb) / gamma);
      }
      case Family::kGammaFamily:
        return std::exp(-v / mass) / mass;
    }
    return 0.0;
  }

  double r(double e, double v) const {
    switch (family) {
      case Family::kStableLike: {
        if (e == 0.0) return 0.0;
        return std::pow(e / (e + v), (1.0 - gamma) / gamma);
      }
      case Family::kGenGamma: {
        const double la = std::log(gamma * e / mass + u_pow_gamma);
        const double lb = std::log(gamma * (e + v) / mass + u_pow_gamma);
        return std::exp((1.0 - gamma) / gamma * (la - lb));
      }
      case Family::kGammaFamily:
        return std::exp(-v / mass);
    }
    return 0.0;
  }
};

EvKernel make_kernel(const LaplaceExponent& exponent) {
  struct Visitor {
    EvKernel operator()(const GenGammaExponent& e) const {
      if (e.u() == 0.0) {
        return {EvKernel::Family::kStableLike, e.gamma(), 0.0, e.mass()};
      }
      return {EvKernel::Family::kGenGamma, e.gamma(),
              std::pow(e.u(), e.gamma()), e.mass()};
    }
    EvKernel operator()(const GammaExponent& e) const {
      return {EvKernel::Family::kGammaFamily, 0.0, 0.0, e.mass()};
    }
    EvKernel operator()(const StableExponent& e) const {
      return {EvKernel::Family::kStableLike, e.gamma(), 0.0, e.mass()};
    }
  };
  return std::visit(Visitor{}, exponent);
}

// Integral over e in (0, cut/outer_rate), v in (0, inf) of
// exp(-outer_rate * e) * f(e, v).
template <class F>
double nested_ev(const F& f, double outer_rate, const QuadSpec& spec) {
  QuadSpec half = spec;
  half.rel_tol = 0.5 * spec.rel_tol;
  half.abs_tol = 0.5 * spec.abs_tol;
  auto outer = [&](double e) {
    const double weight = std::exp(-outer_rate * e);
    if (weight == 0.0) return 0.0;
    const QuadResult inner = integrate_semi_infinite(
        [&](double v) { return f(e, v); }, half);
    return weight * inner.value;
  };
  return integrate_gk(outer, 0.0, kOuterCut / outer_rate, half).value;
}

void check_n(int n, int cap) {
  if (n < 2) throw std::domain_error("finite-n transform: n must be >= 2");
  if (cap > 0 && n > cap) {
    throw std::domain_error("finite-n transform: n exceeds the cost guard");
  }
}

}  // namespace

double laplace_limit(const LaplaceExponent& exponent, double s,
                     const QuadSpec& spec) {
  if (!(s >= 0.0)) throw std::domain_error("laplace_limit: s must be >= 0");
  const EvKernel kernel = make_kernel(exponent);
  const double decay = std::expm1(-s);  // e^{-s} - 1 <= 0
  return nested_ev(
      [&](double e, double v) {
        const double g = kernel.g(e, v);
        if (g == 0.0) return 0.0;
        return g * std::exp(decay * v);
      },
      1.0, spec);
}

double laplace_limit_direct_form(const LaplaceExponent& exponent, double s,
                                 const QuadSpec& spec) {
  if (!(s >= 0.0)) throw std::domain_error("laplace_limit: s must be >= 0");
  const EvKernel kernel = make_kernel(exponent);
  const double es = std::exp(-s);
  QuadSpec half = spec;
  half.rel_tol = 0.5 * spec.rel_tol;
  half.abs_tol = 0.5 * spec.abs_tol;
  // -psi''(x+y) e^{-psi(x+y)} e^{-e^{-s}[psi(x)-psi(x+y)]} with
  // psi(x) = e, psi(x+y) = e + v; the whole exponent is combined before
  // exponentiation so the tail underflows to zero instead of 0 * inf.
  auto outer = [&](double e) {
    const QuadResult inner = integrate_semi_infinite(
        [&](double v) {
          const double g = kernel.g(e, v);
          if (g == 0.0) return 0.0;
          const double log_weight = -(e + v) + es * v;
          if (log_weight < -745.0) return 0.0;
          return g * std::exp(log_weight);
        },
        half);
    return inner.value;
  };
  return integrate_gk(outer, 0.0, kOuterCut, half).value;
}

double psi_l_numeric(const LaplaceExponent& exponent, int l,
                     const QuadSpec& spec) {
  if (l < 1) throw std::domain_error("psi_l_numeric: l must be >= 1");
  const double gamma = stability_index(exponent);
  if (gamma > 0.0 && !(gamma < 1.0 / (l + 1))) {
    throw std::domain_error(
        "psi_l_numeric: integral diverges for gamma >= 1/(l+1)");
  }
  const EvKernel kernel = make_kernel(exponent);
  return nested_ev(
      [&](double e, double v) {
        const double g = kernel.g(e, v);
        if (g == 0.0) return 0.0;
        return g * std::pow(v, l);
      },
      1.0, spec);
}

double mixing_density_mass(const LaplaceExponent& exponent,
                           const QuadSpec& spec) {
  const EvKernel kernel = make_kernel(exponent);
  return nested_ev([&](double e, double v) { return kernel.g(e, v); }, 1.0,
                   spec);
}

double laplace_finite_n(const LaplaceExponent& exponent, int n, double s,
                        const QuadSpec& spec) {
  check_n(n, 200);
  if (!(s >= 0.0)) throw std::domain_error("laplace_finite_n: s must be >= 0");
  const EvKernel kernel = make_kernel(exponent);
  const double ems = std::expm1(-s);  // <= 0
  const double inv_n = 1.0 / n;
  return nested_ev(
      [&](double e, double v) {
        // h^{n-1} = e^{-(n-1)e/n} H^{n-1} with
        // H = 1 - (1-e^{-s})(1-e^{-v/n}), evaluated through log1p.
        const double log_h = std::log1p(-ems * std::expm1(-v * inv_n));
        const double log_weight = (n - 1) * log_h - v * inv_n;
        if (log_weight < -745.0) return 0.0;
        const double density = kernel.r(e, v) * inv_n + kernel.g(e, v);
        return density * std::exp(log_weight);
      },
      1.0, spec);
}

double finite_n_moment_kernel(const LaplaceExponent& exponent, int n, int l,
                              const QuadSpec& spec) {
  check_n(n, 0);
  if (l < 1 || l >= n) {
    throw std::domain_error("finite_n_moment_kernel: need 1 <= l < n");
  }
  const EvKernel kernel = make_kernel(exponent);
  const double inv_n = 1.0 / n;
  const double outer_rate = (n - l + 1) * inv_n;
  // l (n-1)(n-2)...(n-l) / n
  double prefactor = static_cast<double>(l) * inv_n;
  for (int j = 1; j <= l; ++j) prefactor *= n - j;
  const double value = nested_ev(
      [&](double e, double v) {
        const double r = kernel.r(e, v);
        if (r == 0.0) return 0.0;
        double w = std::exp(-2.0 * v * inv_n);
        for (int j = 0; j < l - 1; ++j) w *= -std::expm1(-v * inv_n);
        return r * w;
      },
      outer_rate, spec);
  return prefactor * value;
}

double finite_n_moment(const LaplaceExponent& exponent, int n, int k,
                       const QuadSpec& spec) {
  if (k < 1) throw std::domain_error("finite_n_moment: k must be >= 1");
  double sum = 0.0;
  for (int l = 1; l <= k; ++l) {
    sum += static_cast<double>(stirling2(k, l)) *
           finite_n_moment_kernel(exponent, n, l, spec);
  }
  return sum;
}

double integrability_diagnostic(const LaplaceExponent& exponent, int n, int l,
                                const QuadSpec& spec) {
  check_n(n, 0);
  if (l < 1) throw std::domain_error("integrability_diagnostic: l must be >= 1");
  const EvKernel kernel = make_kernel(exponent);
  const double inv_n = 1.0 / n;
  return nested_ev(
      [&](double e, double v) {
        const double r = kernel.r(e, v);
        if (r == 0.0) return 0.0;
        double w = std::exp(-2.0 * v * inv_n);
        for (int j = 0; j < l - 1; ++j) w *= v;
        return r * w;
      },
      1.0, spec);
}

}  // namespace mtfcost

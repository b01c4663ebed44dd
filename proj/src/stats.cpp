#include "sampnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sampnet/types.hpp"

namespace sampnet::stats {

namespace {

constexpr double kEps = 1e-15;
constexpr int kMaxIter = 500;

// Regularized lower incomplete gamma P(a,x) by its power series.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by modified Lentz continued
// fraction; valid for x >= a+1.
double gamma_q_contfrac(double a, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double regularized_gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_contfrac(a, x);
}

// Continued fraction for the regularized incomplete beta function.
double beta_contfrac(double a, double b, double x) {
  const double tiny = std::numeric_limits<double>::min() / kEps;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double regularized_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                                std::lgamma(b) + a * std::log(x) +
                                b * std::log(1.0 - x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_contfrac(a, b, x) / a;
  }
  return 1.0 - front * beta_contfrac(b, a, 1.0 - x) / b;
}

}  // namespace

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  auto check = [](double lat, double lon) {
    if (!(lat >= -90.0 && lat <= 90.0))
      throw ValidationError("latitude out of range [-90,90]: " + std::to_string(lat));
    if (!(lon >= -180.0 && lon <= 180.0))
      throw ValidationError("longitude out of range [-180,180]: " + std::to_string(lon));
  };
  check(lat1, lon1);
  check(lat2, lon2);

  const double deg = M_PI / 180.0;
  const double phi1 = lat1 * deg;
  const double phi2 = lat2 * deg;
  const double dphi = (lat2 - lat1) * deg;
  const double dlam = (lon2 - lon1) * deg;

  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double a = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

OlsResult ols(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw ValidationError("ols: x and y lengths differ");
  const std::size_t n = x.size();
  if (n < 3) throw ValidationError("ols: need at least 3 points");

  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0) throw ValidationError("ols: x is constant");

  OlsResult res;
  res.n = n;
  res.slope = sxy / sxx;
  res.intercept = my - res.slope * mx;
  if (syy <= 0.0) {
    // constant response: nothing to explain
    res.r_squared = 0.0;
    res.p_value = 1.0;
    return res;
  }
  res.r_squared = (sxy * sxy) / (sxx * syy);

  const double sse = syy - res.slope * sxy;
  if (sse <= 0.0) {
    // exact fit
    res.r_squared = 1.0;
    res.p_value = res.slope == 0.0 ? 1.0 : 0.0;
    return res;
  }
  const double se = std::sqrt(sse / (static_cast<double>(n - 2) * sxx));
  res.p_value = student_t_two_sided_p(res.slope / se, static_cast<int>(n - 2));
  return res;
}

double aicc(double log_likelihood, int k, long long n) {
  if (k < 0) throw ValidationError("aicc: negative parameter count");
  if (n <= static_cast<long long>(k) + 1)
    throw NumericError("aicc: correction undefined for n <= k+1 (n=" +
                       std::to_string(n) + ", k=" + std::to_string(k) + ")");
  const double kk = static_cast<double>(k);
  return -2.0 * log_likelihood + 2.0 * kk +
         2.0 * kk * (kk + 1.0) / (static_cast<double>(n) - kk - 1.0);
}

double chi_sq_upper_tail(double x, int df) {
  if (df < 1) throw ValidationError("chi_sq_upper_tail: df must be >= 1");
  if (!(x >= 0.0)) throw ValidationError("chi_sq_upper_tail: x must be >= 0");
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / M_SQRT2); }

double student_t_two_sided_p(double t, int df) {
  if (df < 1) throw ValidationError("student_t_two_sided_p: df must be >= 1");
  const double d = static_cast<double>(df);
  return regularized_beta(0.5 * d, 0.5, d / (d + t * t));
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double v : xs) s += v;
  return s / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double v : xs) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw ValidationError("quantile of empty sample");
  q = std::clamp(q, 0.0, 1.0);
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace sampnet::stats

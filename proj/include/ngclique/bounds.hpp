#pragma once

// Continuous layer of the fixed-size product bound: f_t, mu_t, lambda*,
// the three-variable product over the simplex, h_t and border integrals.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "ngclique/packing.hpp"
#include "ngclique/threshold.hpp"

namespace ngc {

inline constexpr double kRootTolerance = 1e-9;
inline constexpr double kGridStep = 1e-3;

namespace detail {
inline void require_t_at_least_3(int t) {
  if (t < 3) throw std::invalid_argument("needs t >= 3, got t = " + std::to_string(t));
}

// Bisection for a sign change of `fn` on [lo, hi]; stops on an exact zero.
template <typename Fn>
double bisect(Fn fn, double lo, double hi, double tol) {
  double flo = fn(lo);
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}
}  // namespace detail

/// f_t(x) = x^t (1-x)^{t-1} (1 + (t-1)x).
inline double f_t(int t, double x) {
  return std::pow(x, t) * std::pow(1.0 - x, t - 1) * (1.0 + (t - 1) * x);
}

/// f_t'(x) by the product rule on the three factors.
inline double f_t_derivative(int t, double x) {
  const double u = std::pow(x, t), du = t * std::pow(x, t - 1);
  const double v = std::pow(1.0 - x, t - 1), dv = -(t - 1) * std::pow(1.0 - x, t - 2);
  const double w = 1.0 + (t - 1) * x, dw = t - 1;
  return du * v * w + u * dv * w + u * v * dw;
}

/// Closed form mu_t = (t - 2 + sqrt(t^2 + 4t - 4)) / (4 (t - 1)).
inline double mu_t_closed_form(int t) {
  detail::require_t_at_least_3(t);
  return (t - 2 + std::sqrt(static_cast<double>(t) * t + 4.0 * t - 4.0)) / (4.0 * (t - 1));
}

/// Zero of f_t' on (0,1) by bisection; f_t' > 0 left of it and < 0 right of it.
inline double mu_t_numeric(int t, double tol = 1e-13) {
  detail::require_t_at_least_3(t);
  return detail::bisect([t](double x) { return f_t_derivative(t, x); }, 1e-6, 1.0 - 1e-6, tol);
}

/// The leading term (n^t / t!)^2 f_t(mu_t) of the pi_t upper bound.
struct LeadingTermBound {
  int t = 0;
  double mu = 0;     // mu_t
  double value = 0;  // f_t(mu_t)

  double bound(double n) const {
    double tf = 1;
    for (int k = 2; k <= t; ++k) tf *= k;
    const double lead = std::pow(n, t) / tf;
    return lead * lead * value;
  }
};

inline LeadingTermBound mu_t(int t) {
  const double mu = mu_t_closed_form(t);
  return {t, mu, f_t(t, mu)};
}

/// Unique positive root of 1 + (t-1)^2 lambda = (1 + lambda)^{t-1}.
///
/// Bisects G(l) = ((1+l)^{t-1} - 1)/l - (t-1)^2 = sum_{k>=1} C(t-1,k) l^{k-1} - (t-1)^2,
/// which is increasing on (0, inf) and negative at 0.
inline double lambda_star(int t, double tol = 1e-12) {
  detail::require_t_at_least_3(t);
  const double target = static_cast<double>(t - 1) * (t - 1);
  auto g = [t, target](double l) {
    double sum = 0, term = 1;  // term = C(t-1, k) l^{k-1}
    for (int k = 1; k <= t - 1; ++k) {
      term = (k == 1) ? (t - 1) : term * l * (t - k) / k;
      sum += term;
    }
    return sum - target;
  };
  double hi = 1;
  while (g(hi) <= 0) hi *= 2;
  return detail::bisect(g, 0.0, hi, tol * std::max(1.0, hi));
}

/// (1 + l)^{t-1} - 1 - (t-1)^2 l; zero at l = 0 and at lambda*.
inline double lambda_residual(int t, double l) {
  return std::pow(1.0 + l, t - 1) - 1.0 - static_cast<double>(t - 1) * (t - 1) * l;
}

/// ((a+b)^t + t c a^{t-1}) (c^t + t b c^{t-1}) on the simplex a + b + c = 1.
inline double l2_product(double a, double b, double c, int t) {
  if (t < 2) throw std::invalid_argument("l2_product needs t >= 2");
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("l2_product: negative coordinate");
  if (std::abs(a + b + c - 1.0) > 1e-12) throw std::invalid_argument("l2_product: coordinates must sum to 1");
  if (c == 0) return 0.0;
  return (std::pow(a + b, t) + t * c * std::pow(a, t - 1)) * (std::pow(c, t) + t * b * std::pow(c, t - 1));
}

struct SimplexMax {
  double a = 0, b = 0, c = 0;
  double value = 0;
};

/// Grid search over a + b + c = 1 with the given step, then `rounds` of local
/// refinement, each a 101 x 101 grid over +-1 previous step around the incumbent.
inline SimplexMax simplex_grid_max(int t, double step = kGridStep, int rounds = 3) {
  SimplexMax best{0, 0, 1, -1};
  auto consider = [&](double a, double b) {
    if (a < 0 || b < 0 || a + b > 1) return;
    const double c = 1.0 - a - b;
    const double v = l2_product(a, b, c < 0 ? 0 : c, t);
    if (v > best.value) best = {a, b, c, v};
  };
  const auto cells = static_cast<long>(std::llround(1.0 / step));
  for (long i = 0; i <= cells; ++i)
    for (long j = 0; i + j <= cells; ++j) consider(static_cast<double>(i) / cells, static_cast<double>(j) / cells);

  double h = step;
  for (int round = 0; round < rounds; ++round) {
    const double a0 = best.a, b0 = best.b;
    for (int i = -50; i <= 50; ++i)
      for (int j = -50; j <= 50; ++j) consider(std::max(0.0, a0 + h * i / 50.0), std::max(0.0, b0 + h * j / 50.0));
    h /= 50.0;
  }
  return best;
}

/// h_t(q) = max{f_t(q), f_t(1-q)}: the better of the two one-turn borders.
inline double h_t(int t, double q) { return std::max(f_t(t, q), f_t(t, 1.0 - q)); }

struct HtMax {
  double q = 0;
  double value = 0;
};

/// Max of h_t over q in [0,1]: grid with `step`, then golden-section refinement.
inline HtMax h_t_max(int t, double step = kGridStep) {
  detail::require_t_at_least_3(t);
  HtMax best{0, h_t(t, 0)};
  const auto cells = static_cast<long>(std::llround(1.0 / step));
  for (long i = 0; i <= cells; ++i) {
    const double q = static_cast<double>(i) / cells;
    if (const double v = h_t(t, q); v > best.value) best = {q, v};
  }
  double lo = std::max(0.0, best.q - step), hi = std::min(1.0, best.q + step);
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
    const double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    if (h_t(t, x1) < h_t(t, x2)) lo = x1;
    else hi = x2;
  }
  const double q = 0.5 * (lo + hi);
  if (const double v = h_t(t, q); v >= best.value) best = {q, v};
  return best;
}

struct BorderIntegrals {
  double ix = 0;  // integral of y^{t-1} dx
  double iy = 0;  // integral of x^{t-1} dy
};

/// Exact I_X, I_Y of a staircase: the integrands are constant along each segment.
inline BorderIntegrals border_integrals(const BorderPath<double>& path, int t) {
  BorderIntegrals out;
  for (std::size_t k = 1; k < path.turn_points.size(); ++k) {
    const auto& p = path.turn_points[k - 1];
    const auto& q = path.turn_points[k];
    if (q.x != p.x) out.ix += (q.x - p.x) * std::pow(p.y, t - 1);
    if (q.y != p.y) out.iy += (q.y - p.y) * std::pow(p.x, t - 1);
  }
  return out;
}

/// Up-then-right border to (q, p = 1 - q).
inline BorderPath<double> up_right_border(double q) {
  return {{{0, 0}, {0, 1 - q}, {q, 1 - q}}, BorderStart::up};
}

/// Right-then-up border to (q, p = 1 - q).
inline BorderPath<double> right_up_border(double q) {
  return {{{0, 0}, {q, 0}, {q, 1 - q}}, BorderStart::right};
}

/// The two one-turn extremal codes at the rounded mu_t split:
///   joined:   K_r joined to E_s with s = ceil(mu_t n), display (+)^{n-s}(-)^{s-1}
///   disjoint: K_r beside E_s with r = ceil(mu_t n),   display (-)^{n-r}(+)^{r-1}
struct ExtremalCodes {
  ThresholdCode joined;
  ThresholdCode disjoint;
};

inline int rounded_mu_block(int n, int t) {
  return std::min(n, static_cast<int>(std::ceil(mu_t_closed_form(t) * n - 1e-12)));
}

inline ExtremalCodes extremal_codes(int n, int t) {
  if (n < 1) throw std::invalid_argument("extremal_codes needs n >= 1");
  const int big = rounded_mu_block(n, t);
  return {one_turn_code(n - big, big, true), one_turn_code(big, n - big, false)};
}

}  // namespace ngc

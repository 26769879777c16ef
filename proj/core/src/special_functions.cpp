#include "honkit/special_functions.hpp"

#include <cmath>
#include <limits>

#include "honkit/errors.hpp"

namespace honkit {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;

// Power series for P(s, x); converges quickly for x < s + 1.
double gamma_p_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  double a = s;
  for (int n = 0; n < kMaxIter; ++n) {
    a += 1.0;
    term *= x / a;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Modified Lentz continued fraction for Q(s, x); used for x >= s + 1.
double gamma_q_fraction(double s, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

void check_domain(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0) || std::isnan(s) || std::isnan(x)) {
    throw ArgumentError("incomplete gamma requires s > 0 and x >= 0");
  }
}

}  // namespace

double regularized_gamma_p(double s, double x) {
  check_domain(s, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return gamma_p_series(s, x);
  return 1.0 - gamma_q_fraction(s, x);
}

double regularized_gamma_q(double s, double x) {
  check_domain(s, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_fraction(s, x);
}

double chi_square_survival(double x, double dof) {
  if (!(dof >= 0.0)) throw ArgumentError("chi-square degrees of freedom must be >= 0");
  if (x <= 0.0) return 1.0;
  if (dof == 0.0) return 0.0;
  return regularized_gamma_q(dof / 2.0, x / 2.0);
}

}  // namespace honkit

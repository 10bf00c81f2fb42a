#include "riskset/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riskset/comonotone.hpp"
#include "riskset/errors.hpp"

namespace riskset {

MeasureSpec MeasureSpec::var(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("var: alpha must lie in (0, 1)");
  return {MeasureKind::var, alpha};
}

MeasureSpec MeasureSpec::es(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("es: alpha must lie in (0, 1)");
  return {MeasureKind::es, alpha};
}

MeasureSpec MeasureSpec::entropic(double theta) {
  if (!(theta > 0.0)) throw DomainError("entropic: theta must be positive");
  return {MeasureKind::entropic, theta};
}

const char* measure_name(MeasureKind k) {
  switch (k) {
    case MeasureKind::neg_expectation: return "neg-expectation";
    case MeasureKind::var: return "var";
    case MeasureKind::es: return "es";
    case MeasureKind::entropic: return "entropic";
    case MeasureKind::sd: return "sd";
    case MeasureKind::mad: return "mad";
  }
  return "?";
}

double lower_quantile(const RandVar& x, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("lower_quantile: alpha must lie in (0, 1)");
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return x[i] < x[j] || (x[i] == x[j] && i < j);
  });
  const auto& p = x.space()->probs();
  double cum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cum += p[order[k]];
    if (cum >= alpha) return x[order[k]];
  }
  return x[order[n - 1]];  // cum fell short of alpha only by rounding
}

double value_at_risk(const RandVar& x, double alpha) {
  return -lower_quantile(x, alpha);
}

double expected_shortfall(const RandVar& x, double alpha) {
  const double q = lower_quantile(x, alpha);
  const auto& p = x.space()->probs();
  double below = 0.0, mass_below = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < q) {
      below += p[i] * x[i];
      mass_below += p[i];
    }
  }
  return -(below + q * (alpha - mass_below)) / alpha;
}

double entropic_risk(const RandVar& x, double theta) {
  if (!(theta > 0.0)) throw DomainError("entropic_risk: theta must be positive");
  double m = -theta * x[0];
  for (std::size_t i = 1; i < x.size(); ++i) m = std::max(m, -theta * x[i]);
  const auto& p = x.space()->probs();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += p[i] * std::exp(-theta * x[i] - m);
  return (m + std::log(s)) / theta;
}

double std_dev(const RandVar& x) { return std::sqrt(variance(x)); }

double mean_abs_dev(const RandVar& x) {
  const double m = expectation(x);
  const auto& p = x.space()->probs();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += p[i] * std::abs(x[i] - m);
  return s;
}

double evaluate(const MeasureSpec& spec, const RandVar& x) {
  switch (spec.kind) {
    case MeasureKind::neg_expectation: return -expectation(x);
    case MeasureKind::var: return value_at_risk(x, spec.param);
    case MeasureKind::es: return expected_shortfall(x, spec.param);
    case MeasureKind::entropic: return entropic_risk(x, spec.param);
    case MeasureKind::sd: return std_dev(x);
    case MeasureKind::mad: return mean_abs_dev(x);
  }
  throw DomainError("evaluate: unknown measure kind");
}

double comonotonic_additivity_defect(const MeasureSpec& spec, const RandVar& x,
                                     const RandVar& y) {
  if (!is_comonotonic(x, y))
    throw ContractError("comonotonic_additivity_defect: inputs not comonotonic");
  return evaluate(spec, x + y) - evaluate(spec, x) - evaluate(spec, y);
}

}  // namespace riskset

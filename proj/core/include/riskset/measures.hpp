#pragma once

#include <string>

#include "riskset/rand_var.hpp"

namespace riskset {

enum class MeasureKind { neg_expectation, var, es, entropic, sd, mad };

/// Closed-form measure selector. var/es take alpha in (0,1), entropic takes
/// theta > 0; the rest are parameter-free.
struct MeasureSpec {
  MeasureKind kind;
  double param = 0.0;

  static MeasureSpec neg_expectation() { return {MeasureKind::neg_expectation}; }
  static MeasureSpec var(double alpha);
  static MeasureSpec es(double alpha);
  static MeasureSpec entropic(double theta);
  static MeasureSpec sd() { return {MeasureKind::sd}; }
  static MeasureSpec mad() { return {MeasureKind::mad}; }
};

const char* measure_name(MeasureKind k);

/// Lower quantile q^-_alpha(X) = inf{ t : P(X <= t) >= alpha }.
double lower_quantile(const RandVar& x, double alpha);

/// VaR_alpha(X) = -q^-_alpha(X).
double value_at_risk(const RandVar& x, double alpha);

/// Tail average with atom splitting:
///   ES_alpha(X) = -(E[X 1{X<q}] + q (alpha - P(X<q))) / alpha,  q = q^-_alpha.
/// This form equals -(1/alpha) * integral of the lower quantile over (0,alpha]
/// and is additive for comonotonic pairs on atomic spaces at every alpha.
double expected_shortfall(const RandVar& x, double alpha);

/// (1/theta) log E[exp(-theta X)], evaluated with a max shift.
double entropic_risk(const RandVar& x, double theta);

double std_dev(const RandVar& x);
double mean_abs_dev(const RandVar& x);

double evaluate(const MeasureSpec& spec, const RandVar& x);

/// evaluate(X+Y) - evaluate(X) - evaluate(Y) for a comonotonic pair.
/// Throws ContractError when the inputs are not comonotonic.
double comonotonic_additivity_defect(const MeasureSpec& spec, const RandVar& x,
                                     const RandVar& y);

}  // namespace riskset

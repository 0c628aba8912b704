#pragma once

namespace pensemble {

// All three reject non-positive arguments with DomainError.
double log_gamma(double x);
double digamma(double x);
double log_beta(double a, double b);
/// exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b)).
double beta(double a, double b);

}  // namespace pensemble

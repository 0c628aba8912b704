#include "pensemble/special_functions.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/digamma.hpp>

#include "pensemble/errors.hpp"

namespace pensemble {

namespace {
void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": argument must be positive and finite");
  }
}
}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return std::lgamma(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  return boost::math::digamma(x);
}

double log_beta(double a, double b) {
  require_positive(a, "beta");
  require_positive(b, "beta");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

}  // namespace pensemble

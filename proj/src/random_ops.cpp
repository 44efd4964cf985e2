#include "jacspec/random_ops.hpp"

#include <cmath>

namespace jacspec {

JacobiOperator random_operator(Rng& rng, const RandomOperatorParams& params) {
  if (!(params.amplitude < 1.0))
    throw std::invalid_argument("random_operator: amplitude must be < 1 to keep a_j c_j != 0");
  long len = rng.integer(1, params.max_support);
  long lo = rng.integer(-params.center_range, params.center_range);
  std::vector<Complex> a, b, c;
  for (long i = 0; i < len; ++i) {
    a.push_back(params.schrodinger ? Complex(1.0) : 1.0 + rng.disk(params.amplitude));
    b.push_back(rng.disk(params.amplitude));
    c.push_back(params.schrodinger ? Complex(1.0) : 1.0 + rng.disk(params.amplitude));
  }
  return JacobiOperator(lo, std::move(a), std::move(b), std::move(c));
}

std::vector<Complex> random_gauge(Rng& rng, long length) {
  std::vector<Complex> r;
  for (long i = 0; i < length; ++i) {
    double mag = std::exp(rng.uniform(-std::log(3.0), std::log(3.0)));
    double theta = 2.0 * 3.14159265358979323846 * rng.uniform();
    r.push_back(std::polar(mag, theta));
  }
  return r;
}

std::vector<Complex> random_pow2_gauge(Rng& rng, long length) {
  std::vector<Complex> r;
  for (long i = 0; i < length; ++i) {
    double mag = std::ldexp(1.0, static_cast<int>(rng.integer(-3, 3)));
    // real power-of-two factors only; any phase would make a*r inexact
    double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    r.push_back(Complex(sign * mag, 0.0));
  }
  return r;
}

}  // namespace jacspec

// random_ops.hpp — deterministic random operators and gauges for family
// sweeps and stress tests. Draws go through explicit bit manipulation so
// that a seed produces the same family on every platform.

#pragma once

#include <cstdint>
#include <random>

#include "jacspec/operator_model.hpp"

namespace jacspec {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  long integer(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(uniform() * static_cast<double>(hi - lo + 1));
  }

  // Uniform on the closed disk of the given radius.
  Complex disk(double radius) {
    double r = radius * std::sqrt(uniform());
    double theta = 2.0 * 3.14159265358979323846 * uniform();
    return std::polar(r, theta);
  }

  // Uniform on the annulus r_lo <= |z| <= r_hi (area measure).
  Complex annulus(double r_lo, double r_hi) {
    double r = std::sqrt(uniform(r_lo * r_lo, r_hi * r_hi));
    double theta = 2.0 * 3.14159265358979323846 * uniform();
    return std::polar(r, theta);
  }

 private:
  std::mt19937_64 eng_;
};

struct RandomOperatorParams {
  long max_support = 9;      // window length is drawn from [1, max_support]
  double amplitude = 0.8;    // entries stay within this radius of free values
  long center_range = 4;     // support_lo drawn from [-center_range, center_range]
  bool schrodinger = false;  // keep a = c = 1
};

// Entries a_j, c_j in the disk of radius `amplitude` around 1 (never zero
// for amplitude < 1), b_j in the same disk around 0.
JacobiOperator random_operator(Rng& rng, const RandomOperatorParams& params = {});

// Finitely supported gauge with |r_j| in [1/3, 3], bounded away from zero.
std::vector<Complex> random_gauge(Rng& rng, long length);

// Gauge with power-of-two moduli; multiplying or dividing an IEEE double by
// such r_j is exact, so gauge identities hold bitwise.
std::vector<Complex> random_pow2_gauge(Rng& rng, long length);

}  // namespace jacspec

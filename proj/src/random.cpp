#include "cgf/pwl.hpp"

#include <random>
#include <stdexcept>

namespace cgf {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}
  long randint(long a, long b) { return std::uniform_int_distribution<long>(a, b)(gen_); }
  // Uniform on a 2^32 grid in [0,1), kept exact.
  Rational unit() { return Rational(mpq_class(mpz_class(static_cast<unsigned long>(gen_() & 0xffffffffu)), mpz_class(1) << 32)); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

PiecewiseFunction random_piecewise_function(const RandomOptions& o) {
  if (o.xgrid < 2 || o.ygrid < 2) throw std::invalid_argument("xgrid and ygrid must be at least 2");
  if (o.continuous_proba < 0 || o.continuous_proba > 1) throw std::invalid_argument("continuous_proba must lie in [0,1]");
  Sampler rng(o.seed);
  const long n = o.xgrid;
  const Rational ny(o.ygrid);
  std::vector<Rational> x;
  for (long i = 0; i <= n; ++i) x.emplace_back(i, n);
  const long f = rng.randint(1, n - 1);

  std::vector<Rational> y(n + 1);
  y[0] = 0;
  y[f] = 1;
  y[n] = 0;
  for (long i = 1; i < n; ++i)
    if (i != f) y[i] = Rational(rng.randint(1, o.ygrid - 1)) / ny;

  // i < f/2 mirrors onto f - i; f < i < (f + n)/2 mirrors onto f + n - i
  if (o.symmetry) {
    for (long i = 1; 2 * i < f; ++i) y[f - i] = 1 - y[i];
    if (f % 2 == 0) y[f / 2] = Rational(1, 2);
    for (long i = f + 1; 2 * i < f + n; ++i) y[f + n - i] = 1 - y[i];
    if ((f + n) % 2 == 0) y[(f + n) / 2] = Rational(1, 2);
  }
  const Rational fx(f, n);
  if (o.continuous_proba == 1) return PiecewiseFunction::from_breakpoints_and_values(x, y, fx);

  std::vector<Rational> right, left{Rational(0)};
  for (long i = 0; i < n; ++i) {
    right.push_back(rng.unit() > o.continuous_proba ? Rational(rng.randint(0, o.ygrid)) / ny : y[i]);
    left.push_back(rng.unit() > o.continuous_proba ? Rational(rng.randint(0, o.ygrid)) / ny : y[i + 1]);
  }
  right.push_back(0);
  if (o.symmetry) {
    for (long i = 1; 2 * i < f; ++i) {
      left[f - i] = 1 - right[i];
      right[f - i] = 1 - left[i];
    }
    if (f % 2 == 0) right[f / 2] = 1 - left[f / 2];
    left[f] = 1 - right[0];
    for (long i = f + 1; 2 * i < f + n; ++i) {
      left[f + n - i] = 1 - right[i];
      right[f + n - i] = 1 - left[i];
    }
    if ((f + n) % 2 == 0) right[(f + n) / 2] = 1 - left[(f + n) / 2];
    left[n] = 1 - right[f];
  }
  std::vector<LimitTriple> lim;
  for (long i = 0; i <= n; ++i) lim.push_back({y[i], right[i], left[i]});
  return PiecewiseFunction::from_breakpoints_and_limits(x, lim, fx);
}

}  // namespace cgf

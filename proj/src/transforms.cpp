#include "cgf/transforms.hpp"

#include "cgf/minimality.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace cgf {

PiecewiseFunction multiplicative_homomorphism(const PiecewiseFunction& pi, long lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda must be a nonzero integer");
  const long a = lambda < 0 ? -lambda : lambda;
  const int s = lambda < 0 ? -1 : 1;
  // Preimages of B + Z under x -> lambda x, for either sign of lambda.
  std::set<Rational> pts;
  for (const auto& b : pi.end_points())
    for (long t = 0; t <= a; ++t)
      for (const Rational& c : {b + Rational(t), Rational(1) - b + Rational(t)}) {
        Rational x = c / Rational(a);
        if (x >= 0 && x <= 1) pts.insert(x);
      }
  std::vector<Rational> bkpt(pts.begin(), pts.end());
  std::vector<LimitTriple> lim;
  for (const auto& x : bkpt) {
    Rational y = Rational(lambda) * x;
    lim.push_back({pi(y), pi.limit(y, s), pi.limit(y, -s)});
  }
  std::optional<Rational> f;
  if (pi.f()) f = lambda > 0 ? *pi.f() / Rational(a) : (Rational(1) - *pi.f()) / Rational(a);
  return PiecewiseFunction::from_breakpoints_and_limits(bkpt, lim, f);
}

PiecewiseFunction automorphism(const PiecewiseFunction& pi, long lambda) {
  if (lambda != 1 && lambda != -1)
    throw std::invalid_argument("automorphism of the infinite group requires lambda = 1 or -1, got " +
                                std::to_string(lambda));
  return multiplicative_homomorphism(pi, lambda);
}

DiscreteFunction automorphism(const DiscreteFunction& pi, long lambda) {
  const long q = pi.order();
  if (std::gcd(lambda, q) != 1)
    throw std::invalid_argument("lambda = " + std::to_string(lambda) + " is not coprime with the order " +
                                std::to_string(q));
  std::vector<Rational> values;
  for (long i = 0; i <= q; ++i) values.push_back(pi.at(lambda * i));
  std::optional<Rational> f;
  if (pi.f()) {
    const long fi = pi.index_of(*pi.f());
    for (long j = 1; j < q; ++j)
      if ((((lambda * j - fi) % q) + q) % q == 0) f = Rational(j, q);
  }
  return DiscreteFunction::from_points_and_values(pi.points(), values, f);
}

DiscreteFunction restrict_to_finite_group(const PiecewiseFunction& pi, const RestrictOptions& opts) {
  std::optional<Rational> f = opts.f ? opts.f : pi.f();
  if (!f) {
    try {
      f = find_f(pi);
    } catch (const std::invalid_argument&) {
    }
  }
  mpz_class order = 1;
  if (opts.order) {
    if (*opts.order <= 0) throw std::invalid_argument("order must be positive");
    order = *opts.order;
    if (f && order % f->den() != 0)
      throw std::invalid_argument("order " + order.get_str() + " is not a multiple of the denominator of f = " +
                                  f->str());
  } else {
    order = pi.grid_order();
    if (f) order = lcm(order, f->den());
  }
  if (opts.oversampling) {
    if (*opts.oversampling <= 0) throw std::invalid_argument("oversampling must be a positive integer");
    order *= *opts.oversampling;
  }
  if (!order.fits_slong_p()) throw std::invalid_argument("group order too large");
  const long q = order.get_si();
  std::vector<Rational> pts, values;
  for (long i = 0; i <= q; ++i) {
    pts.emplace_back(i, q);
    values.push_back(pi(Rational(i, q)));
  }
  return DiscreteFunction::from_points_and_values(pts, values, f);
}

PiecewiseFunction interpolate_to_infinite_group(const DiscreteFunction& pi) {
  return PiecewiseFunction::from_breakpoints_and_values(pi.points(), pi.values(), pi.f());
}

}  // namespace cgf

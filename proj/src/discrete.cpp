#include "cgf/pwl.hpp"

#include <stdexcept>

namespace cgf {

DiscreteFunction DiscreteFunction::from_points_and_values(const std::vector<Rational>& points,
                                                          const std::vector<Rational>& values,
                                                          std::optional<Rational> f) {
  if (points.size() != values.size()) throw std::invalid_argument("points and values have different lengths");
  if (points.size() < 2) throw std::invalid_argument("need at least the points 0 and 1");
  if (points.front() != 0 || points.back() != 1) throw std::invalid_argument("points must start at 0 and end at 1");
  if (values.front() != values.back()) throw std::invalid_argument("values at 0 and 1 must agree");
  long q = static_cast<long>(points.size()) - 1;
  for (long i = 0; i <= q; ++i)
    if (points[i] != Rational(i, q))
      throw std::invalid_argument("points must be the full grid 0, 1/q, ..., 1; offending point " + points[i].str());
  DiscreteFunction d;
  d.q_ = q;
  d.values_ = values;
  d = d.with_f(std::move(f));
  return d;
}

DiscreteFunction DiscreteFunction::with_f(std::optional<Rational> f) const {
  DiscreteFunction d = *this;
  if (f) {
    if (*f <= 0 || *f >= 1) throw std::invalid_argument("f must lie in (0,1), got " + f->str());
    if (!on_grid(*f)) throw std::invalid_argument("f = " + f->str() + " is not on the group grid");
  }
  d.f_ = std::move(f);
  return d;
}

std::vector<Rational> DiscreteFunction::points() const {
  std::vector<Rational> p;
  for (long i = 0; i <= q_; ++i) p.emplace_back(i, q_);
  return p;
}

bool DiscreteFunction::on_grid(const Rational& x) const {
  return (x * Rational(q_)).is_integer();
}

long DiscreteFunction::index_of(const Rational& x) const {
  Rational k = x * Rational(q_);
  if (!k.is_integer()) throw std::invalid_argument(x.str() + " is not on the grid (1/" + std::to_string(q_) + ")Z");
  mpz_class n = k.num() % q_;
  if (n < 0) n += q_;
  return n.get_si();
}

Rational DiscreteFunction::operator()(const Rational& x) const { return values_[index_of(x)]; }

const Rational& DiscreteFunction::at(long i) const {
  long r = i % q_;
  if (r < 0) r += q_;
  return values_[r];
}

}  // namespace cgf

#include "placeforge/ordgroup/quad.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

bool is_squarefree_radicand(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p <= d / p; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadScalar::QuadScalar(Rat a, Rat b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_squarefree_radicand(d)) {
    throw DomainError("radicand " + std::to_string(d) + " is not a squarefree integer >= 2");
  }
  a_.canonicalize();
  b_.canonicalize();
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
  if (d_ != o.d_) throw DomainError("adding quadratic scalars with different radicands");
  return QuadScalar(a_ + o.a_, b_ + o.b_, d_, Unchecked{});
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
  if (d_ != o.d_) throw DomainError("subtracting quadratic scalars with different radicands");
  return QuadScalar(a_ - o.a_, b_ - o.b_, d_, Unchecked{});
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return placeforge::to_string(a_);
  std::string out;
  if (sgn(a_) != 0) out = placeforge::to_string(a_) + (sgn(b_) > 0 ? "+" : "");
  out += placeforge::to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

int quad_sign(const QuadScalar& s) {
  const int sa = sgn(s.a());
  const int sb = sgn(s.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rat lhs = s.a() * s.a();
  const Rat rhs = s.b() * s.b() * Rat(Integer(static_cast<long>(s.d())));
  const int c = cmp(lhs, rhs);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;  // unreachable for squarefree d
}

}  // namespace placeforge

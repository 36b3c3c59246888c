#include "placeforge/ratfunc/base_field.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

Rat from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rat(z);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BaseField BaseField::prime(std::uint64_t p) {
  if (p >= (1ULL << 61)) throw DomainError("prime field characteristic must be below 2^61");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return BaseField(p);
}

std::uint64_t BaseField::residue(const Rat& x) const {
  // x is already reduced: an integer in [0, p).
  return x.get_num().get_ui();
}

Rat BaseField::from_rat(const Rat& r) const {
  if (is_rationals()) return r;
  const Integer p(static_cast<unsigned long>(p_));
  Integer num;
  mpz_fdiv_r(num.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t());
  Integer den;
  mpz_fdiv_r(den.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t());
  if (den == 0) throw DomainError("denominator of " + to_string(r) + " vanishes in F" + std::to_string(p_));
  const std::uint64_t n = num.get_ui();
  const std::uint64_t d = den.get_ui();
  return from_u64(mulmod(n, powmod(d, p_ - 2, p_), p_));
}

Rat BaseField::add(const Rat& x, const Rat& y) const {
  if (is_rationals()) return x + y;
  std::uint64_t s = residue(x) + residue(y);
  if (s >= p_) s -= p_;
  return from_u64(s);
}

Rat BaseField::sub(const Rat& x, const Rat& y) const { return add(x, neg(y)); }

Rat BaseField::mul(const Rat& x, const Rat& y) const {
  if (is_rationals()) return x * y;
  return from_u64(mulmod(residue(x), residue(y), p_));
}

Rat BaseField::neg(const Rat& x) const {
  if (is_rationals()) return -x;
  const std::uint64_t v = residue(x);
  return from_u64(v == 0 ? 0 : p_ - v);
}

Rat BaseField::inv(const Rat& x) const {
  if (is_zero(x)) throw DomainError("inverse of zero");
  if (is_rationals()) return 1 / x;
  return from_u64(powmod(residue(x), p_ - 2, p_));
}

std::string BaseField::name() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

}  // namespace placeforge

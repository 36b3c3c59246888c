#include "placeforge/approx/signature.hpp"

#include <map>

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

void canonicalize(SignEntry& e) {
  for (auto c : e.m) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : e.m) x = -x;
      e.sign = -e.sign;
    }
    return;
  }
}

class Collector {
 public:
  explicit Collector(const MonomialPlace& p) : place_(p) {}

  void add(const Exponents& m) {
    SignEntry e{m, place_.monomial_value(m).sign()};
    canonicalize(e);
    auto [it, inserted] = entries_.emplace(e.m, e.sign);
    if (!inserted && it->second != e.sign) throw DomainError("signature inconsistent");
  }

  // Exponent of the first term of minimal value.
  Exponents min_term(const Poly& p) const {
    const Exponents* best = nullptr;
    std::optional<GroupElem> best_value;
    for (const auto& [e, c] : p.terms()) {
      auto v = place_.monomial_value(e);
      if (!best_value || v < *best_value) {
        best = &e;
        best_value = std::move(v);
      }
    }
    return *best;
  }

  void add_pairs(const Poly& p) {
    const auto& terms = p.terms();
    for (auto i = terms.begin(); i != terms.end(); ++i) {
      for (auto j = std::next(i); j != terms.end(); ++j) add(sub_exponents(i->first, j->first));
    }
  }

  std::vector<SignEntry> entries() const {
    std::vector<SignEntry> out;
    for (const auto& [m, s] : entries_) out.push_back({m, s});
    return out;
  }

 private:
  const MonomialPlace& place_;
  std::map<Exponents, int> entries_;
};

}  // namespace

SignSignature signature(const Place& q, const std::vector<RatFunc>& elems, bool compare_values) {
  const MonomialPlace flat = q.flatten();
  Collector c(flat);
  SignSignature sig;
  sig.arity = q.arity();
  for (const auto& f : elems) {
    if (f.arity() != q.arity() || !(f.base() == q.base())) throw DomainError("signature: element/place mismatch");
    if (f.is_zero()) {
      sig.value_vectors.emplace_back();
      continue;
    }
    c.add_pairs(f.num());
    c.add_pairs(f.den());
    auto m = sub_exponents(c.min_term(f.num()), c.min_term(f.den()));
    c.add(m);
    sig.value_vectors.emplace_back(std::move(m));
  }
  if (compare_values) {
    for (std::size_t i = 0; i < sig.value_vectors.size(); ++i) {
      for (std::size_t j = i + 1; j < sig.value_vectors.size(); ++j) {
        if (sig.value_vectors[i] && sig.value_vectors[j]) c.add(sub_exponents(*sig.value_vectors[i], *sig.value_vectors[j]));
      }
    }
  }
  sig.entries = c.entries();
  return sig;
}

bool satisfies(const SignSignature& sig, const MonomialPlace& p) {
  for (const auto& e : sig.entries) {
    if (p.monomial_value(e.m).sign() != e.sign) return false;
  }
  return true;
}

}  // namespace placeforge

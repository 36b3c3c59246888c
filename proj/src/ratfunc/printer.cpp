#include <string>

#include "placeforge/ratfunc/expr.hpp"

namespace placeforge {

namespace {

std::string var_name(std::size_t i, const VarNames& names) {
  if (i < names.size()) return names[i];
  return "x" + std::to_string(i + 1);
}

// Monomial part of a term, "" for the constant monomial.
std::string monomial(const Exponents& e, const VarNames& names, std::size_t* factors) {
  std::string out;
  *factors = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(i, names);
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
    ++*factors;
  }
  return out;
}

std::string term(const Exponents& e, const Rat& c, const VarNames& names) {
  std::size_t factors = 0;
  const std::string mono = monomial(e, names, &factors);
  if (mono.empty()) return to_string(c);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return to_string(c) + "*" + mono;
}

std::size_t monomial_factors(const Poly& p) {
  std::size_t factors = 0;
  if (p.size() == 1) monomial(p.terms().begin()->first, {}, &factors);
  return factors;
}

}  // namespace

std::string to_expr(const Poly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string t = term(it->first, it->second, names);
    if (out.empty()) {
      out = std::move(t);
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string to_expr(const RatFunc& f, const VarNames& names) {
  std::string num = to_expr(f.num(), names);
  if (f.is_polynomial()) return num;
  if (f.num().size() > 1) num = "(" + num + ")";
  std::string den = to_expr(f.den(), names);
  if (f.den().size() > 1 || monomial_factors(f.den()) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace placeforge

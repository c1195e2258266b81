#pragma once

// Sparse multivariate polynomials with exact rational coefficients and
// nonnegative exponents, in variables T1..Tn.

#include "coxk3/numeric.hpp"

#include <string>
#include <vector>

namespace coxk3 {

struct Term {
  Rat coeff;
  std::vector<int> exps;
};

struct Polynomial {
  int nvars = 0;
  std::vector<Term> terms;  // normalized: exps unique, lex-sorted, coeffs nonzero

  bool zero() const { return terms.empty(); }
};

bool exps_lex_less(const std::vector<int>& a, const std::vector<int>& b);

/// Combine duplicate exponent vectors, drop zero coefficients, sort.
Polynomial normalized(Polynomial p);

Polynomial poly_zero(int nvars);
Polynomial monomial(int nvars, std::vector<int> exps, Rat coeff = Rat(1));
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial neg(Polynomial a);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(Polynomial a, const Rat& c);
bool poly_eq(const Polynomial& a, const Polynomial& b);

/// Same monomial support, ignoring coefficients.
bool same_support(const Polynomial& a, const Polynomial& b);

/// Widen to `nvars` variables (new variables unused).
Polynomial extend_vars(Polynomial p, int nvars);

/// Substitute T_i -> T_i * T_j for every i in `indices` (0-based); j = var.
Polynomial substitute_multiply(const Polynomial& p, const std::vector<int>& indices, int var);

/// Largest power of T_var dividing p (p nonzero).
int min_exponent(const Polynomial& p, int var);

/// Divide by T_var^k (must divide exactly).
Polynomial divide_by_power(Polynomial p, int var, int k);

/// Set the listed variables to zero.
Polynomial set_vars_to_zero(const Polynomial& p, const std::vector<int>& indices);

/// Total degree of a term under 0/1 weights on the listed variables.
int weighted_degree(const Term& t, const std::vector<int>& indices);

/// Parser for "T2*T4 + 3*T3^2*T6 - T7", integer coefficients.
/// When nvars < 0 the variable count is inferred from the largest index.
Polynomial parse_polynomial(const std::string& text, int nvars = -1);

std::string to_string(const Polynomial& p);

}  // namespace coxk3

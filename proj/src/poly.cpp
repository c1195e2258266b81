#include "coxk3/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace coxk3 {

bool exps_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial normalized(Polynomial p) {
  std::map<std::vector<int>, Rat> acc;
  for (Term& t : p.terms) {
    if (static_cast<int>(t.exps.size()) != p.nvars) throw Error("polynomial term arity mismatch");
    acc[t.exps] += t.coeff;
  }
  Polynomial out;
  out.nvars = p.nvars;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms.push_back({c, e});
  return out;
}

Polynomial poly_zero(int nvars) {
  Polynomial p;
  p.nvars = nvars;
  return p;
}

Polynomial monomial(int nvars, std::vector<int> exps, Rat coeff) {
  Polynomial p;
  p.nvars = nvars;
  p.terms.push_back({std::move(coeff), std::move(exps)});
  return normalized(std::move(p));
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  if (a.nvars != b.nvars) throw Error("polynomial arity mismatch");
  Polynomial p = a;
  p.terms.insert(p.terms.end(), b.terms.begin(), b.terms.end());
  return normalized(std::move(p));
}

Polynomial neg(Polynomial a) {
  for (Term& t : a.terms) t.coeff = -t.coeff;
  return a;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) { return add(a, neg(b)); }

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  if (a.nvars != b.nvars) throw Error("polynomial arity mismatch");
  Polynomial p;
  p.nvars = a.nvars;
  for (const Term& s : a.terms)
    for (const Term& t : b.terms) {
      Term u;
      u.coeff = s.coeff * t.coeff;
      u.exps.resize(static_cast<size_t>(a.nvars));
      for (int i = 0; i < a.nvars; ++i) u.exps[static_cast<size_t>(i)] = s.exps[static_cast<size_t>(i)] + t.exps[static_cast<size_t>(i)];
      p.terms.push_back(std::move(u));
    }
  return normalized(std::move(p));
}

Polynomial scale(Polynomial a, const Rat& c) {
  for (Term& t : a.terms) t.coeff *= c;
  return normalized(std::move(a));
}

bool poly_eq(const Polynomial& a, const Polynomial& b) {
  if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].exps != b.terms[i].exps || a.terms[i].coeff != b.terms[i].coeff) return false;
  return true;
}

bool same_support(const Polynomial& a, const Polynomial& b) {
  if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].exps != b.terms[i].exps) return false;
  return true;
}

Polynomial extend_vars(Polynomial p, int nvars) {
  if (nvars < p.nvars) throw Error("extend_vars: cannot shrink");
  for (Term& t : p.terms) t.exps.resize(static_cast<size_t>(nvars), 0);
  p.nvars = nvars;
  return p;
}

Polynomial substitute_multiply(const Polynomial& p, const std::vector<int>& indices, int var) {
  Polynomial out = p;
  if (var >= out.nvars) out = extend_vars(std::move(out), var + 1);
  for (Term& t : out.terms) {
    int total = 0;
    for (int i : indices) total += t.exps[static_cast<size_t>(i)];
    t.exps[static_cast<size_t>(var)] += total;
  }
  return normalized(std::move(out));
}

int min_exponent(const Polynomial& p, int var) {
  if (p.zero()) throw Error("min_exponent of zero polynomial");
  int m = p.terms[0].exps[static_cast<size_t>(var)];
  for (const Term& t : p.terms) m = std::min(m, t.exps[static_cast<size_t>(var)]);
  return m;
}

Polynomial divide_by_power(Polynomial p, int var, int k) {
  for (Term& t : p.terms) {
    if (t.exps[static_cast<size_t>(var)] < k) throw Error("divide_by_power: not divisible");
    t.exps[static_cast<size_t>(var)] -= k;
  }
  return p;
}

Polynomial set_vars_to_zero(const Polynomial& p, const std::vector<int>& indices) {
  Polynomial out;
  out.nvars = p.nvars;
  for (const Term& t : p.terms) {
    bool kill = false;
    for (int i : indices)
      if (t.exps[static_cast<size_t>(i)] > 0) {
        kill = true;
        break;
      }
    if (!kill) out.terms.push_back(t);
  }
  return normalized(std::move(out));
}

int weighted_degree(const Term& t, const std::vector<int>& indices) {
  int d = 0;
  for (int i : indices) d += t.exps[static_cast<size_t>(i)];
  return d;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return s[i];
  }

  Int integer() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw Error("polynomial parse: expected integer at position " + std::to_string(i));
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  }

  // factor := INT | T<k> [ ^ INT ]
  void factor(Rat& coeff, std::map<int, int>& exps, int& max_var) {
    skip();
    if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
      ++i;
      Int idx = integer();
      if (idx < 1) throw Error("polynomial parse: variable index must be >= 1");
      int v = static_cast<int>(idx.get_si()) - 1;
      int e = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        Int ee = integer();
        if (ee < 0) throw Error("polynomial parse: negative exponent");
        e = static_cast<int>(ee.get_si());
      }
      exps[v] += e;
      max_var = std::max(max_var, v);
    } else {
      coeff *= Rat(integer());
    }
  }

  // term := [sign] factor (* factor)*
  void term(std::vector<std::pair<Rat, std::map<int, int>>>& out, int& max_var, int sign) {
    Rat coeff(sign);
    std::map<int, int> exps;
    factor(coeff, exps, max_var);
    for (;;) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        factor(coeff, exps, max_var);
      } else {
        break;
      }
    }
    out.emplace_back(coeff, exps);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
  Parser p(text);
  std::vector<std::pair<Rat, std::map<int, int>>> raw;
  int max_var = -1;
  int sign = 1;
  p.skip();
  if (!p.eof() && (p.peek() == '+' || p.peek() == '-')) {
    sign = p.peek() == '-' ? -1 : 1;
    ++p.i;
  }
  if (p.eof()) throw Error("polynomial parse: empty input");
  p.term(raw, max_var, sign);
  while (!p.eof()) {
    char c = p.peek();
    if (c != '+' && c != '-')
      throw Error(std::string("polynomial parse: unexpected character '") + c + "'");
    ++p.i;
    p.term(raw, max_var, c == '-' ? -1 : 1);
  }
  int n = nvars >= 0 ? nvars : max_var + 1;
  if (max_var >= n) throw Error("polynomial parse: variable index exceeds arity");
  Polynomial out;
  out.nvars = n;
  for (auto& [coeff, exps] : raw) {
    Term t;
    t.coeff = coeff;
    t.exps.assign(static_cast<size_t>(n), 0);
    for (auto& [v, e] : exps) t.exps[static_cast<size_t>(v)] = e;
    out.terms.push_back(std::move(t));
  }
  return normalized(std::move(out));
}

std::string to_string(const Polynomial& p) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1) {
      os << c.get_str();
      printed = true;
    }
    bool any_var = false;
    for (size_t v = 0; v < t.exps.size(); ++v) {
      int e = t.exps[v];
      if (e == 0) continue;
      if (printed || any_var) os << "*";
      os << "T" << (v + 1);
      if (e > 1) os << "^" << e;
      any_var = true;
    }
    if (!printed && !any_var) os << "1";
  }
  return os.str();
}

}  // namespace coxk3

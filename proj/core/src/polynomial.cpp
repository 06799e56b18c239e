#include "gralg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gralg {

GradedPolynomial::GradedPolynomial(std::vector<GradedVariable> vars,
                                   std::vector<PolyTerm> terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  std::set<std::string> names;
  for (const auto& v : vars_)
    if (!names.insert(v.name).second)
      throw error("polynomial: duplicate variable name " + v.name);
  for (const auto& t : terms_) {
    if (t.order.size() != vars_.size())
      throw error("polynomial: term does not use every variable");
    std::vector<bool> seen(vars_.size(), false);
    for (int i : t.order) {
      if (i < 0 || i >= (int)vars_.size() || seen[i])
        throw error("polynomial: term is not a permutation of the variables");
      seen[i] = true;
    }
  }
}

int GradedPolynomial::find_var(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return (int)i;
  return -1;
}

std::string GradedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + t.coeff.to_string() + ")";
    for (int i : t.order) {
      s += " " + vars_[i].name;
      if (vars_[i].degree) s += "^" + vars_[i].degree->to_string();
    }
  }
  return s;
}

GradedPolynomial capelli(int t) {
  if (t < 1) throw error("capelli: rank must be >= 1");
  std::vector<GradedVariable> vars;
  for (int i = 1; i <= t; ++i) vars.push_back({"x" + std::to_string(i), std::nullopt});
  for (int j = 1; j <= t + 1; ++j) vars.push_back({"y" + std::to_string(j), std::nullopt});
  std::vector<PolyTerm> terms;
  std::vector<int> sigma(t);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    long long inv = 0;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (sigma[i] > sigma[j]) ++inv;
    PolyTerm term;
    term.coeff = inv % 2 == 0 ? CycScalar::one() : -CycScalar::one();
    for (int i = 0; i < t; ++i) {
      term.order.push_back(t + i);  // y_{i+1}
      term.order.push_back(sigma[i]);
    }
    term.order.push_back(2 * t);  // y_{t+1}
    terms.push_back(std::move(term));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return GradedPolynomial(std::move(vars), std::move(terms));
}

GradedPolynomial with_degree(const GradedPolynomial& p, const std::string& var,
                             const GroupElement& g) {
  int i = p.find_var(var);
  if (i < 0) throw error("with_degree: unknown variable " + var);
  std::vector<GradedVariable> vars = p.vars();
  vars[i].degree = g;
  return GradedPolynomial(std::move(vars), p.terms());
}

GradedPolynomial with_degree_all(const GradedPolynomial& p, const GroupElement& g) {
  std::vector<GradedVariable> vars = p.vars();
  for (auto& v : vars) v.degree = g;
  return GradedPolynomial(std::move(vars), p.terms());
}

GradedPolynomial append_right_factor(const GradedPolynomial& p, GradedVariable v) {
  std::vector<GradedVariable> vars = p.vars();
  vars.push_back(std::move(v));
  std::vector<PolyTerm> terms = p.terms();
  for (auto& t : terms) t.order.push_back((int)vars.size() - 1);
  return GradedPolynomial(std::move(vars), std::move(terms));
}

GradedPolynomial multiply(const GradedPolynomial& a, const GradedPolynomial& b) {
  std::vector<GradedVariable> vars = a.vars();
  for (const auto& v : b.vars()) {
    if (a.find_var(v.name) >= 0)
      throw error("polynomial multiply: variable collision on " + v.name);
    vars.push_back(v);
  }
  int na = a.nvars();
  std::vector<PolyTerm> terms;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      PolyTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.order = ta.order;
      for (int i : tb.order) t.order.push_back(na + i);
      terms.push_back(std::move(t));
    }
  return GradedPolynomial(std::move(vars), std::move(terms));
}

GradedPolynomial rename_with_prefix(const GradedPolynomial& p, const std::string& prefix) {
  std::vector<GradedVariable> vars = p.vars();
  for (auto& v : vars) v.name = prefix + v.name;
  return GradedPolynomial(std::move(vars), p.terms());
}

GradedPolynomial central_poly(int k) {
  if (k == 1)
    return GradedPolynomial({{"x1", std::nullopt}}, {{CycScalar::one(), {0}}});
  if (k == 2) {
    // multilinearization of [x1,x2]^2:
    //   [x1,x2][x3,x4] + [x3,x4][x1,x2] + [x1,x4][x3,x2] + [x3,x2][x1,x4]
    std::vector<GradedVariable> vars;
    for (int i = 1; i <= 4; ++i) vars.push_back({"x" + std::to_string(i), std::nullopt});
    std::vector<PolyTerm> terms;
    auto comm_pair = [&](int a, int b, int c, int d) {
      // [x_a, x_b][x_c, x_d], 0-based indices
      terms.push_back({CycScalar::one(), {a, b, c, d}});
      terms.push_back({-CycScalar::one(), {b, a, c, d}});
      terms.push_back({-CycScalar::one(), {a, b, d, c}});
      terms.push_back({CycScalar::one(), {b, a, d, c}});
    };
    comm_pair(0, 1, 2, 3);
    comm_pair(2, 3, 0, 1);
    comm_pair(0, 3, 2, 1);
    comm_pair(2, 1, 0, 3);
    return GradedPolynomial(std::move(vars), std::move(terms));
  }
  throw error("central_poly: unsupported rank " + std::to_string(k) +
              " (implemented for k <= 2)");
}

GradedPolynomial compose_transfer(const GradedPolynomial& g, const GradedPolynomial& f,
                                  int t) {
  if (t < 1) throw error("compose_transfer: t must be >= 1");
  FgAbelianGroup group;
  for (const auto& v : g.vars()) {
    if (!v.degree) throw error("compose_transfer: g must have typed variables");
    group = v.degree->group();
  }
  if (g.nvars() == 0) throw error("compose_transfer: g has no variables");
  GroupElement e = identity_of(group);

  // fresh copy of f per variable of g: S_i = {s<i>_...}, first variable
  // carries the degree h_i of the replaced variable, the rest degree e
  std::vector<GradedPolynomial> copies;
  for (int i = 0; i < g.nvars(); ++i) {
    GradedPolynomial fi = rename_with_prefix(f, "s" + std::to_string(i + 1) + "_");
    fi = with_degree_all(fi, e);
    fi = with_degree(fi, fi.vars()[0].name, *g.vars()[i].degree);
    copies.push_back(std::move(fi));
  }

  // substitute the copies into g: each g-term expands into products of one
  // term from each copy, in the g-term's order
  std::vector<GradedVariable> vars;
  std::vector<int> offset(g.nvars());
  for (int i = 0; i < g.nvars(); ++i) {
    offset[i] = (int)vars.size();
    for (const auto& v : copies[i].vars()) vars.push_back(v);
  }
  std::vector<PolyTerm> terms;
  for (const auto& gt : g.terms()) {
    std::vector<PolyTerm> partial = {{gt.coeff, {}}};
    for (int slot : gt.order) {
      std::vector<PolyTerm> next;
      for (const auto& acc : partial)
        for (const auto& ft : copies[slot].terms()) {
          PolyTerm tm;
          tm.coeff = acc.coeff * ft.coeff;
          tm.order = acc.order;
          for (int i : ft.order) tm.order.push_back(offset[slot] + i);
          next.push_back(std::move(tm));
        }
      partial = std::move(next);
    }
    for (auto& tm : partial) terms.push_back(std::move(tm));
  }
  GradedPolynomial inner(std::move(vars), std::move(terms));

  GradedPolynomial cap = with_degree_all(rename_with_prefix(capelli(t - 1), "c_"), e);
  return multiply(inner, cap);
}

SparseVec evaluate(const GradedAlgebra& a, const GradedPolynomial& p,
                   const std::vector<SparseVec>& values, bool check_admissible) {
  if ((int)values.size() != p.nvars())
    throw error("evaluate: substitution size mismatch");
  if (check_admissible) {
    for (int i = 0; i < p.nvars(); ++i) {
      if (!p.vars()[i].degree) continue;
      for (const auto& tm : values[i])
        if (!(a.degree(tm.index) == *p.vars()[i].degree))
          throw error("evaluate: inadmissible substitution for variable " +
                      p.vars()[i].name);
    }
  }
  SparseVec acc;
  for (const auto& t : p.terms()) {
    SparseVec prod = values[t.order[0]];
    for (size_t i = 1; i < t.order.size() && !prod.empty(); ++i)
      prod = a.multiply(prod, values[t.order[i]]);
    acc = sparse_add(acc, sparse_scale(t.coeff, prod));
  }
  return acc;
}

}  // namespace gralg

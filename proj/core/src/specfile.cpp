#include "gralg/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gralg {

namespace {

struct Tok {
  enum Kind { Ident, Int, Punct, End } kind;
  std::string text;
  long long num = 0;
  int col = 0;
};

std::vector<Tok> tokenize(const std::string& line, int lineno) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    int col = (int)i + 1;
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t j = i;
      while (j < line.size() &&
             (std::isalnum((unsigned char)line[j]) || line[j] == '_'))
        ++j;
      toks.push_back({Tok::Ident, line.substr(i, j - i), 0, col});
      i = j;
    } else if (std::isdigit((unsigned char)c)) {
      size_t j = i;
      while (j < line.size() && std::isdigit((unsigned char)line[j])) ++j;
      Tok t{Tok::Int, line.substr(i, j - i), 0, col};
      t.num = std::stoll(t.text);
      toks.push_back(t);
      i = j;
    } else if (std::string("()[],=/^+-*").find(c) != std::string::npos) {
      toks.push_back({Tok::Punct, std::string(1, c), 0, col});
      ++i;
    } else {
      throw parse_error(lineno, col, std::string("unexpected character '") + c + "'");
    }
  }
  toks.push_back({Tok::End, "", 0, (int)line.size() + 1});
  return toks;
}

struct Cursor {
  std::vector<Tok> toks;
  size_t pos = 0;
  int line = 0;

  const Tok& peek() const { return toks[pos]; }
  const Tok& next() { return toks[pos++]; }
  bool at_end() const { return peek().kind == Tok::End; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(line, peek().col, msg);
  }
  bool is_punct(const std::string& p) const {
    return peek().kind == Tok::Punct && peek().text == p;
  }
  void expect_punct(const std::string& p) {
    if (!is_punct(p)) fail("expected '" + p + "'");
    ++pos;
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail("expected " + what);
    return next().text;
  }
  long long expect_int(const std::string& what) {
    bool neg = false;
    if (is_punct("-")) {
      neg = true;
      ++pos;
    }
    if (peek().kind != Tok::Int) fail("expected " + what);
    long long v = next().num;
    return neg ? -v : v;
  }
};

GroupElement parse_element(Cursor& c, const FgAbelianGroup& g) {
  c.expect_punct("[");
  IntVec coords;
  if (!c.is_punct("]")) {
    coords.push_back(c.expect_int("integer coordinate"));
    while (c.is_punct(",")) {
      c.next();
      coords.push_back(c.expect_int("integer coordinate"));
    }
  }
  c.expect_punct("]");
  if ((int)coords.size() != g.rank())
    c.fail("element has " + std::to_string(coords.size()) +
           " coordinates, group rank is " + std::to_string(g.rank()));
  return GroupElement(g, std::move(coords));
}

std::vector<GroupElement> parse_element_list(Cursor& c, const FgAbelianGroup& g) {
  c.expect_punct("(");
  std::vector<GroupElement> out;
  if (!c.is_punct(")")) {
    out.push_back(parse_element(c, g));
    while (c.is_punct(",")) {
      c.next();
      out.push_back(parse_element(c, g));
    }
  }
  c.expect_punct(")");
  return out;
}

std::vector<long long> parse_int_list(Cursor& c) {
  c.expect_punct("(");
  std::vector<long long> out;
  if (!c.is_punct(")")) {
    out.push_back(c.expect_int("integer"));
    while (c.is_punct(",")) {
      c.next();
      out.push_back(c.expect_int("integer"));
    }
  }
  c.expect_punct(")");
  return out;
}

FgAbelianGroup parse_group(Cursor& c) {
  int free_rank = 0;
  std::vector<long long> moduli;
  bool first = true;
  while (true) {
    if (!first) {
      if (c.peek().kind == Tok::Ident && c.peek().text == "x")
        c.next();
      else
        break;
    }
    first = false;
    if (c.peek().kind != Tok::Ident || c.peek().text != "Z")
      c.fail("expected group factor 'Z', 'Z^p' or 'Z/n'");
    c.next();
    if (c.is_punct("^")) {
      c.next();
      free_rank += (int)c.expect_int("free rank");
    } else if (c.is_punct("/")) {
      c.next();
      long long n = c.expect_int("modulus");
      if (n < 2) c.fail("modulus must be >= 2");
      moduli.push_back(n);
    } else {
      free_rank += 1;
    }
  }
  if (!c.at_end()) c.fail("unexpected trailing input in group declaration");
  return FgAbelianGroup(free_rank, std::move(moduli));
}

// ---- scalar expressions ----

CycScalar parse_scalar_sum(Cursor& c);

CycScalar parse_scalar_atom(Cursor& c) {
  bool neg = false;
  if (c.is_punct("-")) {
    neg = true;
    c.next();
  }
  CycScalar v;
  if (c.is_punct("(")) {
    c.next();
    v = parse_scalar_sum(c);
    c.expect_punct(")");
  } else if (c.peek().kind == Tok::Ident && c.peek().text == "zeta") {
    c.next();
    c.expect_punct("(");
    long long n = c.expect_int("root order");
    c.expect_punct(")");
    long long k = 1;
    if (c.is_punct("^")) {
      c.next();
      k = c.expect_int("exponent");
    }
    v = CycScalar::root_of_unity(n, k);
  } else if (c.peek().kind == Tok::Int) {
    long long num = c.next().num;
    long long den = 1;
    if (c.is_punct("/")) {
      c.next();
      if (c.peek().kind != Tok::Int) c.fail("expected denominator");
      den = c.next().num;
      if (den == 0) c.fail("zero denominator");
    }
    v = CycScalar::from_rational(Rational((long)num, (long)den));
  } else {
    c.fail("expected scalar");
  }
  return neg ? -v : v;
}

CycScalar parse_scalar_prod(Cursor& c) {
  CycScalar v = parse_scalar_atom(c);
  while (c.is_punct("*")) {
    c.next();
    v = v * parse_scalar_atom(c);
  }
  return v;
}

CycScalar parse_scalar_sum(Cursor& c) {
  CycScalar v = parse_scalar_prod(c);
  while (c.is_punct("+") || c.is_punct("-")) {
    bool minus = c.next().text == "-";
    CycScalar w = parse_scalar_prod(c);
    v = minus ? v - w : v + w;
  }
  return v;
}

// ---- polynomial expressions ----

GradedPolynomial scale_poly(const GradedPolynomial& p, const CycScalar& c) {
  std::vector<PolyTerm> terms = p.terms();
  for (auto& t : terms) t.coeff = c * t.coeff;
  return GradedPolynomial(p.vars(), std::move(terms));
}

GradedPolynomial one_poly() { return GradedPolynomial({}, {{CycScalar::one(), {}}}); }

GradedPolynomial add_polys(Cursor& c, const GradedPolynomial& a,
                           const GradedPolynomial& b) {
  // multilinearity: all terms must use the same variable set
  if (a.nvars() != b.nvars())
    c.fail("terms use different variable sets (polynomial must be multilinear)");
  std::vector<int> remap(b.nvars());
  for (int i = 0; i < b.nvars(); ++i) {
    int j = a.find_var(b.vars()[i].name);
    if (j < 0) c.fail("terms use different variable sets: " + b.vars()[i].name);
    bool da = a.vars()[j].degree.has_value(), db = b.vars()[i].degree.has_value();
    if (da != db || (da && !(*a.vars()[j].degree == *b.vars()[i].degree)))
      c.fail("variable " + b.vars()[i].name + " used with two different degrees");
    remap[i] = j;
  }
  std::vector<PolyTerm> terms = a.terms();
  for (const auto& t : b.terms()) {
    PolyTerm nt;
    nt.coeff = t.coeff;
    for (int i : t.order) nt.order.push_back(remap[i]);
    terms.push_back(std::move(nt));
  }
  return GradedPolynomial(a.vars(), std::move(terms));
}

bool starts_scalar(const Cursor& c) {
  if (c.peek().kind == Tok::Int || c.is_punct("(") || c.is_punct("-")) return true;
  return c.peek().kind == Tok::Ident && c.peek().text == "zeta";
}

GradedPolynomial parse_poly_term(Cursor& c, const FgAbelianGroup& g, int& fresh) {
  CycScalar coeff = CycScalar::one();
  if (starts_scalar(c)) coeff = parse_scalar_prod(c);
  GradedPolynomial prod = one_poly();
  bool any = false;
  while (c.peek().kind == Tok::Ident && c.peek().text != "x" &&
         c.peek().text != "zeta") {
    std::string name = c.next().text;
    GradedPolynomial factor;
    if (name == "capelli" || name == "central") {
      c.expect_punct("(");
      long long k = c.expect_int("argument");
      c.expect_punct(")");
      std::string prefix = "m" + std::to_string(++fresh) + "_";
      factor = rename_with_prefix(
          name == "capelli" ? capelli((int)k) : central_poly((int)k), prefix);
    } else {
      std::optional<GroupElement> degree;
      if (c.is_punct("^")) {
        c.next();
        degree = parse_element(c, g);
      }
      factor = GradedPolynomial({{name, degree}}, {{CycScalar::one(), {0}}});
    }
    try {
      prod = multiply(prod, factor);
    } catch (const error& e) {
      c.fail(e.what());
    }
    any = true;
  }
  if (!any) c.fail("expected at least one variable factor in polynomial term");
  return scale_poly(prod, coeff);
}

GradedPolynomial parse_poly_expr(Cursor& c, const FgAbelianGroup& g) {
  int fresh = 0;
  bool lead_minus = false;
  if (c.is_punct("-")) {
    lead_minus = true;
    c.next();
  }
  GradedPolynomial acc = parse_poly_term(c, g, fresh);
  if (lead_minus) acc = scale_poly(acc, -CycScalar::one());
  while (c.is_punct("+") || c.is_punct("-")) {
    bool minus = c.next().text == "-";
    GradedPolynomial t = parse_poly_term(c, g, fresh);
    if (minus) t = scale_poly(t, -CycScalar::one());
    acc = add_polys(c, acc, t);
  }
  if (!c.at_end()) c.fail("unexpected trailing input in polynomial");
  return acc;
}

}  // namespace

const GradedAlgebra& SpecFile::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw error("no algebra named " + name);
  return it->second;
}

const GradedPolynomial& SpecFile::poly(const std::string& name) const {
  auto it = polys.find(name);
  if (it == polys.end()) throw error("no polynomial named " + name);
  return it->second;
}

SpecFile parse_spec(const std::string& text) {
  SpecFile sf;
  bool have_group = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    Cursor c{tokenize(line, lineno), 0, lineno};
    if (c.at_end()) continue;
    std::string head = c.expect_ident("declaration keyword");

    if (head == "group") {
      if (have_group) c.fail("duplicate group declaration");
      sf.group = parse_group(c);
      have_group = true;
      continue;
    }
    if (!have_group) c.fail("the group must be declared first");

    auto check_fresh = [&](const std::string& name) {
      if (sf.algebras.count(name) || sf.subgroups.count(name) || sf.polys.count(name))
        c.fail("duplicate name " + name);
    };

    if (head == "subgroup") {
      SubgroupDecl d;
      d.name = c.expect_ident("subgroup name");
      check_fresh(d.name);
      c.expect_punct("=");
      d.gens = parse_element_list(c, sf.group);
      if (!c.at_end()) c.fail("unexpected trailing input");
      sf.subgroups.emplace(d.name, Subgroup(sf.group, d.gens));
      sf.subgroup_decls.push_back(std::move(d));
    } else if (head == "poly") {
      PolyDecl d;
      d.name = c.expect_ident("polynomial name");
      check_fresh(d.name);
      c.expect_punct("=");
      d.poly = parse_poly_expr(c, sf.group);
      sf.polys.emplace(d.name, d.poly);
      sf.poly_decls.push_back(std::move(d));
    } else if (head == "algebra") {
      AlgebraDecl d;
      d.name = c.expect_ident("algebra name");
      check_fresh(d.name);
      d.kind = c.expect_ident("algebra kind");
      auto expect_key = [&](const std::string& key) {
        std::string k = c.expect_ident("'" + key + "'");
        if (k != key) c.fail("expected '" + key + "'");
        c.expect_punct("=");
      };
      auto lookup = [&](const std::string& name) -> const GradedAlgebra& {
        auto it = sf.algebras.find(name);
        if (it == sf.algebras.end()) c.fail("undefined algebra " + name);
        return it->second;
      };
      try {
        if (d.kind == "ut") {
          expect_key("blocks");
          for (long long b : parse_int_list(c)) d.blocks.push_back((int)b);
          expect_key("tuple");
          d.tuple = parse_element_list(c, sf.group);
          ElementarySpec spec{sf.group, d.blocks, d.tuple};
          spec.validate();
          sf.elementary.emplace(d.name, spec);
          sf.algebras.emplace(d.name, build_ut_elementary(spec));
        } else if (d.kind == "pauli") {
          expect_key("pairs");
          d.pairs = parse_int_list(c);
          DivisionSpec spec{d.pairs};
          FgAbelianGroup s = spec.support_group();
          GroupHom hom;
          if (!c.at_end() && c.peek().kind == Tok::Ident &&
              c.peek().text == "embed") {
            c.next();
            c.expect_punct("=");
            d.embed = parse_element_list(c, sf.group);
            if ((int)d.embed.size() != s.rank())
              c.fail("embed needs " + std::to_string(s.rank()) +
                     " generator images");
            hom = GroupHom(s, sf.group, d.embed);
          } else if (s.is_trivial()) {
            hom = GroupHom::trivial(s, sf.group);
          } else if (s == sf.group) {
            hom = GroupHom::identity(sf.group);
          } else {
            c.fail("pauli stanza needs embed=(...) when the support group "
                   "differs from the file group");
          }
          PauliAlgebra pa = build_pauli_division(spec);
          pa.bicharacter.mapped(hom);  // validates injectivity on the support
          sf.division.emplace(d.name, GradedFactor{spec, hom});
          sf.algebras.emplace(d.name, coarsen(pa.algebra, hom));
        } else if (d.kind == "tensor" || d.kind == "dsum") {
          d.lhs = c.expect_ident("algebra name");
          d.rhs = c.expect_ident("algebra name");
          const GradedAlgebra& x = lookup(d.lhs);
          const GradedAlgebra& y = lookup(d.rhs);
          sf.algebras.emplace(d.name,
                              d.kind == "tensor" ? tensor(x, y) : direct_sum(x, y));
        } else if (d.kind == "coarsen") {
          d.lhs = c.expect_ident("algebra name");
          std::string by = c.expect_ident("'by'");
          if (by != "by") c.fail("expected 'by'");
          d.rhs = c.expect_ident("subgroup name");
          const GradedAlgebra& x = lookup(d.lhs);
          auto hit = sf.subgroups.find(d.rhs);
          if (hit == sf.subgroups.end()) c.fail("undefined subgroup " + d.rhs);
          if (!(x.group() == sf.group))
            c.fail("coarsen operand is not graded by the file group");
          auto [q, proj] = quotient(sf.group, hit->second);
          sf.algebras.emplace(d.name, coarsen(x, proj));
        } else if (d.kind == "matrix") {
          d.msize = (int)c.expect_int("matrix size");
          if (!c.at_end() && c.peek().kind == Tok::Ident &&
              c.peek().text == "tuple") {
            c.next();
            c.expect_punct("=");
            d.tuple = parse_element_list(c, sf.group);
            ElementarySpec spec{sf.group, {d.msize}, d.tuple};
            spec.validate();
            sf.elementary.emplace(d.name, spec);
            sf.algebras.emplace(d.name, build_ut_elementary(spec));
          } else {
            ElementarySpec spec{sf.group, {d.msize},
                                std::vector<GroupElement>((size_t)d.msize,
                                                          identity_of(sf.group))};
            sf.elementary.emplace(d.name, spec);
            sf.algebras.emplace(d.name, matrix_algebra(d.msize, sf.group));
          }
        } else {
          c.fail("unknown algebra kind " + d.kind);
        }
      } catch (const parse_error&) {
        throw;
      } catch (const error& e) {
        c.fail(e.what());
      }
      if (!c.at_end()) c.fail("unexpected trailing input");
      sf.algebra_decls.push_back(std::move(d));
    } else {
      c.fail("unknown declaration " + head);
    }
  }
  if (!have_group) throw parse_error(lineno + 1, 1, "missing group declaration");
  return sf;
}

std::string format_group(const FgAbelianGroup& g) {
  std::string s;
  auto add = [&](const std::string& f) {
    if (!s.empty()) s += " x ";
    s += f;
  };
  if (g.free_rank() == 1) add("Z");
  else if (g.free_rank() > 1) add("Z^" + std::to_string(g.free_rank()));
  for (long long m : g.torsion_moduli()) add("Z/" + std::to_string(m));
  if (s.empty()) s = "Z^0";
  return s;
}

std::string format_scalar(const CycScalar& c) {
  CycScalar v = c.canonical();
  if (v.is_rational()) {
    Rational r = v.rational_value();
    return r.get_str();
  }
  std::string s;
  for (size_t i = 0; i < v.coeffs().size(); ++i) {
    if (v.coeffs()[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += v.coeffs()[i].get_str();
    if (i >= 1) {
      s += "*zeta(" + std::to_string(v.order()) + ")";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return "(" + s + ")";
}

namespace {

std::string format_element(const GroupElement& e) { return e.to_string(); }

std::string format_element_list(const std::vector<GroupElement>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_element(v[i]);
  }
  return s + ")";
}

std::string format_poly(const GradedPolynomial& p) {
  if (p.terms().empty()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += " + ";
    s += format_scalar(t.coeff);
    for (int i : t.order) {
      s += " " + p.vars()[i].name;
      if (p.vars()[i].degree) s += "^" + format_element(*p.vars()[i].degree);
    }
  }
  return s;
}

}  // namespace

std::string SpecFile::to_text() const {
  std::string out = "group " + format_group(group) + "\n";
  for (const auto& d : subgroup_decls)
    out += "subgroup " + d.name + " = " + format_element_list(d.gens) + "\n";
  for (const auto& d : algebra_decls) {
    out += "algebra " + d.name + " " + d.kind;
    if (d.kind == "ut") {
      out += " blocks=(";
      for (size_t i = 0; i < d.blocks.size(); ++i)
        out += (i ? "," : "") + std::to_string(d.blocks[i]);
      out += ") tuple=" + format_element_list(d.tuple);
    } else if (d.kind == "pauli") {
      out += " pairs=(";
      for (size_t i = 0; i < d.pairs.size(); ++i)
        out += (i ? "," : "") + std::to_string(d.pairs[i]);
      out += ")";
      if (!d.embed.empty()) out += " embed=" + format_element_list(d.embed);
    } else if (d.kind == "tensor" || d.kind == "dsum") {
      out += " " + d.lhs + " " + d.rhs;
    } else if (d.kind == "coarsen") {
      out += " " + d.lhs + " by " + d.rhs;
    } else if (d.kind == "matrix") {
      out += " " + std::to_string(d.msize);
      if (!d.tuple.empty()) out += " tuple=" + format_element_list(d.tuple);
    }
    out += "\n";
  }
  for (const auto& d : poly_decls)
    out += "poly " + d.name + " = " + format_poly(d.poly) + "\n";
  return out;
}

namespace {

bool poly_equal(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (a.nvars() != b.nvars()) return false;
  std::vector<int> remap(b.nvars());
  for (int i = 0; i < b.nvars(); ++i) {
    int j = a.find_var(b.vars()[i].name);
    if (j < 0) return false;
    bool da = a.vars()[j].degree.has_value(), db = b.vars()[i].degree.has_value();
    if (da != db || (da && !(*a.vars()[j].degree == *b.vars()[i].degree)))
      return false;
    remap[i] = j;
  }
  std::map<std::vector<int>, CycScalar> ta, tb;
  for (const auto& t : a.terms()) {
    auto [it, fresh] = ta.emplace(t.order, t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  for (const auto& t : b.terms()) {
    std::vector<int> order;
    for (int i : t.order) order.push_back(remap[i]);
    auto [it, fresh] = tb.emplace(std::move(order), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  if (ta.size() != tb.size()) return false;
  for (const auto& [order, coeff] : ta) {
    auto it = tb.find(order);
    if (it == tb.end() || !(it->second == coeff)) return false;
  }
  return true;
}

}  // namespace

bool SpecFile::same_declarations(const SpecFile& o) const {
  if (!(group == o.group)) return false;
  if (algebra_decls != o.algebra_decls) return false;
  if (subgroup_decls != o.subgroup_decls) return false;
  if (poly_decls.size() != o.poly_decls.size()) return false;
  for (size_t i = 0; i < poly_decls.size(); ++i) {
    if (poly_decls[i].name != o.poly_decls[i].name) return false;
    if (!poly_equal(poly_decls[i].poly, o.poly_decls[i].poly)) return false;
  }
  return true;
}

}  // namespace gralg

#include "gralg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gralg {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(b[j++]);
    } else {
      CycScalar c = a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].index, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const CycScalar& c, const SparseVec& a) {
  if (c.is_zero()) return {};
  if (c.is_one()) return a;
  SparseVec out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({t.index, c * t.coeff});
  return out;
}

bool sparse_is_zero(const SparseVec& a) { return a.empty(); }

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].coeff != b[i].coeff) return false;
  return true;
}

// ---- ElementarySpec / DivisionSpec ----

int ElementarySpec::n() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

int ElementarySpec::block_of(int i) const {
  int acc = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    acc += blocks[b];
    if (i < acc) return (int)b;
  }
  throw error("ElementarySpec: index out of range");
}

void ElementarySpec::validate() const {
  if (blocks.empty()) throw error("ElementarySpec: no blocks");
  for (int d : blocks)
    if (d < 1) throw error("ElementarySpec: block size must be >= 1");
  if ((int)tuple.size() != n())
    throw error("ElementarySpec: tuple length must equal sum of block sizes");
  for (const auto& g : tuple)
    if (g.group() != group) throw error("ElementarySpec: tuple entry outside group");
}

long long DivisionSpec::pi_degree() const {
  long long t = 1;
  for (long long n : pairs) {
    if (n < 1) throw error("DivisionSpec: pair modulus must be >= 1");
    t *= n;
  }
  return t;
}

FgAbelianGroup DivisionSpec::support_group() const {
  std::vector<long long> mods;
  for (long long n : pairs)
    if (n >= 2) {
      mods.push_back(n);
      mods.push_back(n);
    }
  return FgAbelianGroup(0, mods);
}

// ---- Bicharacter ----

Bicharacter::Bicharacter(std::vector<GroupElement> support, ScalarMat table)
    : support_(std::move(support)), table_(std::move(table)) {
  if (table_.size() != support_.size())
    throw error("Bicharacter: table size mismatch");
}

const CycScalar& Bicharacter::value(const GroupElement& g, const GroupElement& h) const {
  auto find = [&](const GroupElement& x) -> size_t {
    auto it = std::lower_bound(support_.begin(), support_.end(), x);
    if (it == support_.end() || !(*it == x))
      throw error("Bicharacter: element outside support");
    return (size_t)(it - support_.begin());
  };
  return table_[find(g)][find(h)];
}

bool Bicharacter::is_alternating() const {
  for (size_t i = 0; i < support_.size(); ++i)
    if (!table_[i][i].is_one()) return false;
  return true;
}

bool Bicharacter::is_bimultiplicative() const {
  for (size_t i = 0; i < support_.size(); ++i)
    for (size_t j = 0; j < support_.size(); ++j)
      for (size_t k = 0; k < support_.size(); ++k) {
        GroupElement gh = compose(support_[i], support_[j]);
        if (!(value(gh, support_[k]) == table_[i][k] * table_[j][k])) return false;
      }
  return true;
}

Bicharacter Bicharacter::mapped(const GroupHom& phi) const {
  std::vector<GroupElement> image;
  for (const auto& g : support_) image.push_back(phi.apply(g));
  std::vector<size_t> order(image.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return image[a] < image[b]; });
  for (size_t i = 1; i < order.size(); ++i)
    if (image[order[i - 1]] == image[order[i]])
      throw error("Bicharacter: map not injective on support");
  std::vector<GroupElement> new_support;
  ScalarMat new_table(image.size(), ScalarVec(image.size(), CycScalar::zero()));
  for (size_t i = 0; i < order.size(); ++i) new_support.push_back(image[order[i]]);
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j)
      new_table[i][j] = table_[order[i]][order[j]];
  return Bicharacter(std::move(new_support), std::move(new_table));
}

bool Bicharacter::operator==(const Bicharacter& o) const {
  if (!(support_ == o.support_)) return false;
  for (size_t i = 0; i < support_.size(); ++i)
    for (size_t j = 0; j < support_.size(); ++j)
      if (!(table_[i][j] == o.table_[i][j])) return false;
  return true;
}

// ---- GradedAlgebra ----

GradedAlgebra::GradedAlgebra(FgAbelianGroup group, std::vector<std::string> labels,
                             std::vector<GroupElement> degrees,
                             std::map<std::pair<int, int>, SparseVec> products,
                             std::optional<SparseVec> unity)
    : group_(std::move(group)),
      labels_(std::move(labels)),
      degrees_(std::move(degrees)),
      unity_(std::move(unity)) {
  int d = dim();
  if ((int)degrees_.size() != d) throw error("algebra: degree map size mismatch");
  for (const auto& g : degrees_)
    if (g.group() != group_) throw error("algebra: degree outside grading group");
  prod_.assign((size_t)d * d, {});
  for (auto& [ij, vec] : products) {
    auto [i, j] = ij;
    if (i < 0 || i >= d || j < 0 || j >= d) throw error("algebra: product index out of range");
    SparseVec v;
    for (auto& t : vec) {
      if (t.index < 0 || t.index >= d) throw error("algebra: product term out of range");
      if (!t.coeff.is_zero()) v.push_back(t);
    }
    std::sort(v.begin(), v.end(),
              [](const SparseTerm& a, const SparseTerm& b) { return a.index < b.index; });
    prod_[(size_t)i * d + j] = std::move(v);
  }
}

SparseVec GradedAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseVec acc;
  for (const auto& ta : a)
    for (const auto& tb : b) {
      const SparseVec& p = product(ta.index, tb.index);
      if (p.empty()) continue;
      acc = sparse_add(acc, sparse_scale(ta.coeff * tb.coeff, p));
    }
  return acc;
}

std::vector<GroupElement> GradedAlgebra::support() const {
  std::set<GroupElement> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::vector<int> GradedAlgebra::component(const GroupElement& g) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

std::vector<int> GradedAlgebra::neutral_indices() const {
  return component(identity_of(group_));
}

bool GradedAlgebra::verify_grading(std::pair<int, int>* offending) const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      const SparseVec& p = product(i, j);
      if (p.empty()) continue;
      GroupElement gh = compose(degrees_[i], degrees_[j]);
      for (const auto& t : p)
        if (!(degrees_[t.index] == gh)) {
          if (offending) *offending = {i, j};
          return false;
        }
    }
  return true;
}

bool GradedAlgebra::check_associativity() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      const SparseVec& ij = product(i, j);
      for (int k = 0; k < dim(); ++k) {
        SparseVec lhs = multiply(ij, AlgebraElement::basis(k).coeffs);
        SparseVec rhs = multiply(AlgebraElement::basis(i).coeffs, product(j, k));
        if (!sparse_equal(lhs, rhs)) return false;
      }
    }
  return true;
}

GradedAlgebra GradedAlgebra::subalgebra(const std::vector<int>& indices) const {
  std::vector<int> remap(dim(), -1);
  for (size_t i = 0; i < indices.size(); ++i) remap[indices[i]] = (int)i;
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (int i : indices) {
    labels.push_back(labels_[i]);
    degrees.push_back(degrees_[i]);
  }
  std::map<std::pair<int, int>, SparseVec> products;
  for (size_t a = 0; a < indices.size(); ++a)
    for (size_t b = 0; b < indices.size(); ++b) {
      const SparseVec& p = product(indices[a], indices[b]);
      SparseVec q;
      for (const auto& t : p) {
        if (remap[t.index] < 0)
          throw error("subalgebra: span not closed under product");
        q.push_back({remap[t.index], t.coeff});
      }
      if (!q.empty()) products[{(int)a, (int)b}] = std::move(q);
    }
  std::optional<SparseVec> unity;
  if (unity_) {
    SparseVec u;
    bool inside = true;
    for (const auto& t : *unity_) {
      if (remap[t.index] < 0) {
        inside = false;
        break;
      }
      u.push_back({remap[t.index], t.coeff});
    }
    if (inside) unity = std::move(u);
  }
  return GradedAlgebra(group_, std::move(labels), std::move(degrees),
                       std::move(products), std::move(unity));
}

// ---- constructors ----

GradedAlgebra build_ut_elementary(const ElementarySpec& spec) {
  spec.validate();
  int n = spec.n();
  // matrix units (i, j) with block(i) <= block(j), row-major
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (spec.block_of(i) <= spec.block_of(j)) units.push_back({i, j});
  std::map<std::pair<int, int>, int> unit_index;
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (size_t k = 0; k < units.size(); ++k) {
    auto [i, j] = units[k];
    unit_index[units[k]] = (int)k;
    labels.push_back("e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    degrees.push_back(compose(spec.tuple[i], inverse(spec.tuple[j])));
  }
  std::map<std::pair<int, int>, SparseVec> products;
  for (size_t a = 0; a < units.size(); ++a)
    for (size_t b = 0; b < units.size(); ++b) {
      if (units[a].second != units[b].first) continue;
      auto it = unit_index.find({units[a].first, units[b].second});
      if (it == unit_index.end()) continue;  // cannot happen in UT patterns
      products[{(int)a, (int)b}] = {{it->second, CycScalar::one()}};
    }
  SparseVec unity;
  for (int i = 0; i < n; ++i) unity.push_back({unit_index[{i, i}], CycScalar::one()});
  return GradedAlgebra(spec.group, std::move(labels), std::move(degrees),
                       std::move(products), std::move(unity));
}

PauliAlgebra build_pauli_division(const DivisionSpec& spec) {
  spec.pi_degree();  // validates
  FgAbelianGroup h = spec.support_group();
  std::vector<GroupElement> elems = all_elements(h);
  std::map<GroupElement, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;

  std::vector<long long> mods;
  for (long long n : spec.pairs)
    if (n >= 2) mods.push_back(n);

  // u_a u_b = prod_i zeta_{n_i}^{z_i(a) * x_i(b)} u_{a+b}, with coordinates
  // (x_i, z_i) adjacent per retained pair
  auto twist = [&](const GroupElement& a, const GroupElement& b) {
    CycScalar c = CycScalar::one();
    for (size_t i = 0; i < mods.size(); ++i) {
      long long za = a.coords()[2 * i + 1];
      long long xb = b.coords()[2 * i];
      if (za * xb % mods[i] != 0)
        c = c * CycScalar::root_of_unity(mods[i], za * xb);
    }
    return c;
  };

  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (const auto& e : elems) {
    labels.push_back("u" + e.to_string());
    degrees.push_back(e);
  }
  std::map<std::pair<int, int>, SparseVec> products;
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b) {
      int k = index.at(compose(elems[a], elems[b]));
      products[{(int)a, (int)b}] = {{k, twist(elems[a], elems[b])}};
    }
  SparseVec unity = {{index.at(identity_of(h)), CycScalar::one()}};
  GradedAlgebra alg(h, std::move(labels), std::move(degrees), std::move(products),
                    std::move(unity));

  // extract the bicharacter from the structure constants
  ScalarMat table(elems.size(), ScalarVec(elems.size(), CycScalar::zero()));
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b) {
      const SparseVec& ab = alg.product((int)a, (int)b);
      const SparseVec& ba = alg.product((int)b, (int)a);
      table[a][b] = ab[0].coeff * ba[0].coeff.inverse();
    }
  return {std::move(alg), Bicharacter(elems, std::move(table))};
}

GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.group() != b.group())
    throw error("tensor: grading group mismatch (use tensor_embedded)");
  int da = a.dim(), db = b.dim();
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
      degrees.push_back(compose(a.degree(i), b.degree(j)));
    }
  std::map<std::pair<int, int>, SparseVec> products;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          const SparseVec& pa = a.product(i, k);
          if (pa.empty()) continue;
          const SparseVec& pb = b.product(j, l);
          if (pb.empty()) continue;
          SparseVec out;
          for (const auto& ta : pa)
            for (const auto& tb : pb)
              out.push_back({ta.index * db + tb.index, ta.coeff * tb.coeff});
          std::sort(out.begin(), out.end(),
                    [](const SparseTerm& x, const SparseTerm& y) { return x.index < y.index; });
          products[{i * db + j, k * db + l}] = std::move(out);
        }
  std::optional<SparseVec> unity;
  if (a.unity() && b.unity()) {
    SparseVec u;
    for (const auto& ta : *a.unity())
      for (const auto& tb : *b.unity())
        u.push_back({ta.index * db + tb.index, ta.coeff * tb.coeff});
    std::sort(u.begin(), u.end(),
              [](const SparseTerm& x, const SparseTerm& y) { return x.index < y.index; });
    unity = std::move(u);
  }
  return GradedAlgebra(a.group(), std::move(labels), std::move(degrees),
                       std::move(products), std::move(unity));
}

EmbeddedTensor tensor_embedded(const GradedAlgebra& a, const GradedAlgebra& b) {
  ProductGroup pg = direct_product(a.group(), b.group());
  GradedAlgebra ag = coarsen(a, pg.left);
  GradedAlgebra bg = coarsen(b, pg.right);
  return {tensor(ag, bg), std::move(pg)};
}

GradedAlgebra coarsen(const GradedAlgebra& a, const GroupHom& phi) {
  if (phi.source() != a.group()) throw error("coarsen: hom source mismatch");
  std::vector<GroupElement> degrees;
  for (int i = 0; i < a.dim(); ++i) degrees.push_back(phi.apply(a.degree(i)));
  std::map<std::pair<int, int>, SparseVec> products;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).empty()) products[{i, j}] = a.product(i, j);
  return GradedAlgebra(phi.target(), a.labels(), std::move(degrees),
                       std::move(products), a.unity());
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.group() != b.group()) throw error("direct_sum: grading group mismatch");
  int da = a.dim();
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (int i = 0; i < da; ++i) {
    labels.push_back("l:" + a.labels()[i]);
    degrees.push_back(a.degree(i));
  }
  for (int i = 0; i < b.dim(); ++i) {
    labels.push_back("r:" + b.labels()[i]);
    degrees.push_back(b.degree(i));
  }
  std::map<std::pair<int, int>, SparseVec> products;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      if (!a.product(i, j).empty()) products[{i, j}] = a.product(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      const SparseVec& p = b.product(i, j);
      if (p.empty()) continue;
      SparseVec q;
      for (const auto& t : p) q.push_back({t.index + da, t.coeff});
      products[{i + da, j + da}] = std::move(q);
    }
  std::optional<SparseVec> unity;
  if (a.unity() && b.unity()) {
    SparseVec u = *a.unity();
    for (const auto& t : *b.unity()) u.push_back({t.index + da, t.coeff});
    unity = std::move(u);
  }
  return GradedAlgebra(a.group(), std::move(labels), std::move(degrees),
                       std::move(products), std::move(unity));
}

GradedAlgebra matrix_algebra(int n, const FgAbelianGroup& group) {
  ElementarySpec spec{group, {n}, std::vector<GroupElement>((size_t)n, identity_of(group))};
  return build_ut_elementary(spec);
}

GradedAlgebra transport_grading(const GradedAlgebra& b, const GroupHom& phi,
                                const std::vector<GroupElement>& s) {
  if (phi.target() != b.group()) throw error("transport: hom target mismatch");
  // phi must be injective on S u (S+S)
  std::vector<GroupElement> t = s;
  for (const auto& x : s)
    for (const auto& y : s) t.push_back(compose(x, y));
  std::map<GroupElement, GroupElement> by_image;
  for (const auto& x : t) {
    GroupElement im = phi.apply(x);
    auto [it, fresh] = by_image.emplace(im, x);
    if (!fresh && !(it->second == x))
      throw error("transport: phi not injective on S u (S+S): " +
                  it->second.to_string() + " and " + x.to_string() +
                  " map to " + im.to_string());
  }
  std::map<GroupElement, GroupElement> section;  // phi(s) -> s, s in S only
  for (const auto& x : s) section.emplace(phi.apply(x), x);
  std::vector<GroupElement> degrees;
  for (int i = 0; i < b.dim(); ++i) {
    auto it = section.find(b.degree(i));
    if (it == section.end())
      throw error("transport: supp B not contained in phi(S), degree " +
                  b.degree(i).to_string());
    degrees.push_back(it->second);
  }
  std::map<std::pair<int, int>, SparseVec> products;
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (!b.product(i, j).empty()) products[{i, j}] = b.product(i, j);
  GradedAlgebra out(phi.source(), b.labels(), std::move(degrees),
                    std::move(products), b.unity());
  std::pair<int, int> bad;
  if (!out.verify_grading(&bad))
    throw error("transport: grading axiom fails on basis pair (" +
                out.labels()[bad.first] + ", " + out.labels()[bad.second] + ")");
  return out;
}

// ---- structure of elementary gradings ----

GradedAlgebra neutral_component(const GradedAlgebra& a) {
  return a.subalgebra(a.neutral_indices());
}

std::vector<NeutralIdeal> decompose_neutral(const ElementarySpec& spec) {
  spec.validate();
  GradedAlgebra a = build_ut_elementary(spec);
  int n = spec.n();
  // distinct tuple entries in order of first occurrence
  std::vector<GroupElement> distinct;
  for (const auto& g : spec.tuple)
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end())
      distinct.push_back(g);

  // basis index of e_(i,j) in the full algebra
  std::map<std::pair<int, int>, int> unit_index;
  {
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (spec.block_of(i) <= spec.block_of(j)) unit_index[{i, j}] = k++;
  }

  std::vector<NeutralIdeal> out;
  for (const auto& h : distinct) {
    NeutralIdeal ideal;
    std::vector<int> jk;  // matrix indices with g_i = h
    for (int i = 0; i < n; ++i)
      if (spec.tuple[i] == h) jk.push_back(i);
    for (size_t b = 0; b < spec.blocks.size(); ++b) {
      std::vector<int> is;
      for (int i : jk)
        if (spec.block_of(i) == (int)b) is.push_back(i);
      ideal.index_sets.push_back(is);
      if (!is.empty()) ideal.shape.push_back((int)is.size());
    }
    for (int i : jk)
      for (int j : jk)
        if (spec.block_of(i) <= spec.block_of(j))
          ideal.basis_indices.push_back(unit_index.at({i, j}));
    std::sort(ideal.basis_indices.begin(), ideal.basis_indices.end());
    ideal.algebra = a.subalgebra(ideal.basis_indices);
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<int> radical_power(const ElementarySpec& spec, int k) {
  spec.validate();
  if (k < 0) throw error("radical_power: negative exponent");
  GradedAlgebra a = build_ut_elementary(spec);
  int n = spec.n();
  std::map<std::pair<int, int>, int> unit_index;
  std::vector<std::pair<int, int>> units;
  {
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (spec.block_of(i) <= spec.block_of(j)) {
          unit_index[{i, j}] = idx++;
          units.push_back({i, j});
        }
  }
  std::vector<int> all(a.dim());
  std::iota(all.begin(), all.end(), 0);
  if (k == 0) return all;

  std::vector<int> rad;
  for (size_t u = 0; u < units.size(); ++u)
    if (spec.block_of(units[u].first) < spec.block_of(units[u].second))
      rad.push_back((int)u);

  std::vector<int> cur = rad;
  for (int step = 1; step < k; ++step) {
    std::set<int> next;
    for (int i : cur)
      for (int j : rad)
        for (const auto& t : a.product(i, j)) next.insert(t.index);
    cur.assign(next.begin(), next.end());
  }
  return cur;
}

std::vector<AlgebraElement> center_of(const GradedAlgebra& a) {
  int d = a.dim();
  ScalarMat rows;
  for (int j = 0; j < d; ++j) {
    // constraint: sum_i c_i (b_i b_j - b_j b_i) = 0, one row per output coord
    ScalarMat coord_rows(d, ScalarVec(d, CycScalar::zero()));
    for (int i = 0; i < d; ++i) {
      for (const auto& t : a.product(i, j))
        coord_rows[t.index][i] = coord_rows[t.index][i] + t.coeff;
      for (const auto& t : a.product(j, i))
        coord_rows[t.index][i] = coord_rows[t.index][i] - t.coeff;
    }
    for (auto& r : coord_rows)
      if (!std::all_of(r.begin(), r.end(), [](const CycScalar& x) { return x.is_zero(); }))
        rows.push_back(std::move(r));
  }
  ScalarMat kernel = kernel_of_rowspace(rows, d);
  std::vector<AlgebraElement> out;
  for (const auto& v : kernel) {
    AlgebraElement e;
    for (int i = 0; i < d; ++i)
      if (!v[i].is_zero()) e.coeffs.push_back({i, v[i]});
    out.push_back(std::move(e));
  }
  return out;
}

ElementarySpec normalize_representatives(const ElementarySpec& spec, const Subgroup& h) {
  spec.validate();
  if (h.parent() != spec.group) throw error("normalize: subgroup of a different group");
  ElementarySpec out = spec;
  for (size_t i = 0; i < spec.tuple.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (h.coset_representative(spec.tuple[j]) == h.coset_representative(spec.tuple[i])) {
        out.tuple[i] = out.tuple[j];
        break;
      }
  return out;
}

OmegaInvariance omega_and_invariance(const FgAbelianGroup& g,
                                     const std::vector<GroupElement>& tuple) {
  OmegaInvariance out;
  for (const auto& x : tuple) {
    if (x.group() != g) throw error("omega: tuple entry outside group");
    ++out.omega[x];
  }
  // candidate shifts: differences of support elements
  std::set<GroupElement> candidates;
  for (const auto& [s, cs] : out.omega)
    for (const auto& [t, ct] : out.omega) candidates.insert(compose(s, inverse(t)));
  std::vector<GroupElement> valid;
  for (const auto& hcand : candidates) {
    bool ok = true;
    for (const auto& [s, cs] : out.omega) {
      auto it = out.omega.find(compose(hcand, s));
      if (it == out.omega.end() || it->second != cs) {
        ok = false;
        break;
      }
    }
    if (ok) valid.push_back(hcand);
  }
  out.invariance = Subgroup(g, valid);
  return out;
}

}  // namespace gralg

#include "gralg/group.hpp"

#include <algorithm>
#include <set>

namespace gralg {

namespace {
long long mod_pos(long long a, long long n) {
  long long r = a % n;
  if (r < 0) r += n;
  return r;
}
}  // namespace

FgAbelianGroup::FgAbelianGroup(int free_rank, std::vector<long long> torsion_moduli)
    : free_rank_(free_rank), moduli_(std::move(torsion_moduli)) {
  if (free_rank_ < 0) throw error("group: negative free rank");
  for (long long n : moduli_)
    if (n < 2) throw error("group: torsion modulus must be >= 2");
}

long long FgAbelianGroup::order() const {
  if (!is_finite()) throw error("group: infinite group has no order");
  long long o = 1;
  for (long long n : moduli_) o *= n;
  return o;
}

IntVec FgAbelianGroup::canonicalize(IntVec coords) const {
  if ((int)coords.size() != rank()) throw error("group: coordinate length mismatch");
  for (size_t i = 0; i < moduli_.size(); ++i) {
    auto& c = coords[free_rank_ + i];
    c = mod_pos(c, moduli_[i]);
  }
  return coords;
}

std::string FgAbelianGroup::to_string() const {
  if (rank() == 0) return "trivial";
  std::string s;
  if (free_rank_ == 1)
    s = "Z";
  else if (free_rank_ > 1)
    s = "Z^" + std::to_string(free_rank_);
  for (long long n : moduli_) {
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(n);
  }
  return s;
}

GroupElement::GroupElement(FgAbelianGroup group, IntVec coords)
    : group_(std::move(group)), coords_(group_.canonicalize(std::move(coords))) {}

bool GroupElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](long long c) { return c == 0; });
}

bool GroupElement::operator<(const GroupElement& o) const {
  return coords_ < o.coords_;
}

std::string GroupElement::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + "]";
}

GroupElement identity_of(const FgAbelianGroup& g) {
  return GroupElement(g, IntVec(g.rank(), 0));
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.group() != b.group()) throw error("compose: parent group mismatch");
  IntVec c = a.coords();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return GroupElement(a.group(), std::move(c));
}

GroupElement inverse(const GroupElement& a) {
  IntVec c = a.coords();
  for (auto& x : c) x = -x;
  return GroupElement(a.group(), std::move(c));
}

GroupElement scale(long long n, const GroupElement& a) {
  IntVec c = a.coords();
  for (auto& x : c) x *= n;
  return GroupElement(a.group(), std::move(c));
}

std::vector<GroupElement> all_elements(const FgAbelianGroup& g) {
  if (!g.is_finite()) throw error("all_elements: group is infinite");
  std::vector<GroupElement> out;
  IntVec cur(g.rank(), 0);
  const auto& mods = g.torsion_moduli();
  while (true) {
    out.emplace_back(g, cur);
    int i = g.rank() - 1;
    while (i >= 0) {
      if (++cur[i] < mods[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

GroupHom::GroupHom(FgAbelianGroup source, FgAbelianGroup target,
                   std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if ((int)images_.size() != source_.rank())
    throw error("hom: need one image per generator");
  for (const auto& im : images_)
    if (im.group() != target_) throw error("hom: image outside target group");
  // torsion relations must map to the identity
  const auto& mods = source_.torsion_moduli();
  for (size_t i = 0; i < mods.size(); ++i) {
    GroupElement im = scale(mods[i], images_[source_.free_rank() + i]);
    if (!im.is_identity()) throw error("hom: not well defined on torsion relation");
  }
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
  std::vector<GroupElement> images;
  for (int i = 0; i < g.rank(); ++i) {
    IntVec c(g.rank(), 0);
    c[i] = 1;
    images.emplace_back(g, std::move(c));
  }
  return GroupHom(g, g, std::move(images));
}

GroupHom GroupHom::trivial(const FgAbelianGroup& source, const FgAbelianGroup& target) {
  return GroupHom(source, target,
                  std::vector<GroupElement>(source.rank(), identity_of(target)));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.group() != source_) throw error("hom: element outside source group");
  IntVec acc(target_.rank(), 0);
  for (int i = 0; i < source_.rank(); ++i) {
    long long c = x.coords()[i];
    if (c == 0) continue;
    for (int j = 0; j < target_.rank(); ++j) acc[j] += c * images_[i].coords()[j];
  }
  return GroupElement(target_, std::move(acc));
}

Subgroup::Subgroup(FgAbelianGroup parent, std::vector<GroupElement> generators)
    : parent_(std::move(parent)), gens_(std::move(generators)) {
  IntMat rows;
  for (const auto& g : gens_) {
    if (g.group() != parent_) throw error("subgroup: generator outside parent");
    rows.push_back(g.coords());
  }
  const auto& mods = parent_.torsion_moduli();
  for (size_t i = 0; i < mods.size(); ++i) {
    IntVec rel(parent_.rank(), 0);
    rel[parent_.free_rank() + i] = mods[i];
    rows.push_back(std::move(rel));
  }
  hnf_ = hnf_rows(std::move(rows), parent_.rank());
}

bool Subgroup::contains(const GroupElement& x) const {
  if (x.group() != parent_) throw error("subgroup: element outside parent");
  IntVec r = hnf_reduce(hnf_, x.coords());
  return std::all_of(r.begin(), r.end(), [](long long c) { return c == 0; });
}

GroupElement Subgroup::coset_representative(const GroupElement& x) const {
  if (x.group() != parent_) throw error("subgroup: element outside parent");
  return GroupElement(parent_, hnf_reduce(hnf_, x.coords()));
}

bool Subgroup::is_trivial() const {
  // trivial iff the lattice is exactly the parent relation lattice
  return *this == Subgroup(parent_, {});
}

std::vector<GroupElement> Subgroup::elements() const {
  // closure of the generators under composition; bails out if the subgroup
  // turns out to be infinite
  constexpr size_t kCap = 1u << 20;
  std::set<GroupElement> seen{identity_of(parent_)};
  std::vector<GroupElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens_) {
        GroupElement y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
        if (seen.size() > kCap) throw error("subgroup: infinite subgroup enumeration");
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool Subgroup::operator==(const Subgroup& o) const {
  return parent_ == o.parent_ && hnf_ == o.hnf_;
}

Subgroup subgroup_generated(const FgAbelianGroup& g,
                            const std::vector<GroupElement>& gens) {
  return Subgroup(g, gens);
}

std::pair<FgAbelianGroup, GroupHom> quotient(const FgAbelianGroup& g, const Subgroup& h) {
  if (h.parent() != g) throw error("quotient: subgroup of a different group");
  int k = g.rank();
  // columns: subgroup generators, then parent torsion relations
  IntMat cols;  // build as k x l, column-major assembled into rows
  std::vector<IntVec> colvecs;
  for (const auto& gen : h.generators()) colvecs.push_back(gen.coords());
  const auto& mods = g.torsion_moduli();
  for (size_t i = 0; i < mods.size(); ++i) {
    IntVec rel(k, 0);
    rel[g.free_rank() + i] = mods[i];
    colvecs.push_back(std::move(rel));
  }
  int l = std::max<int>(1, (int)colvecs.size());
  IntMat A(k, IntVec(l, 0));
  for (size_t j = 0; j < colvecs.size(); ++j)
    for (int i = 0; i < k; ++i) A[i][j] = colvecs[j][i];

  SmithResult snf = smith_normal_form(std::move(A), k, l);
  int r = (int)snf.diag.size();

  std::vector<long long> qmods;
  std::vector<int> torsion_rows;  // rows of U contributing torsion coords
  for (int i = 0; i < r; ++i)
    if (snf.diag[i] >= 2) {
      qmods.push_back(snf.diag[i]);
      torsion_rows.push_back(i);
    }
  int qfree = k - r;
  FgAbelianGroup q(qfree, qmods);

  std::vector<GroupElement> images;
  for (int j = 0; j < k; ++j) {
    IntVec c(q.rank(), 0);
    for (int i = 0; i < qfree; ++i) c[i] = snf.U[r + i][j];
    for (size_t i = 0; i < torsion_rows.size(); ++i)
      c[qfree + i] = snf.U[torsion_rows[i]][j];
    images.emplace_back(q, std::move(c));
  }
  return {q, GroupHom(g, q, std::move(images))};
}

FiniteReduction finite_reduction(const FgAbelianGroup& g,
                                 const std::vector<GroupElement>& s) {
  // T = S u (S+S)
  std::set<GroupElement> t;
  for (const auto& a : s) {
    if (a.group() != g) throw error("finite_reduction: element outside group");
    t.insert(a);
    for (const auto& b : s) t.insert(compose(a, b));
  }
  int p = g.free_rank();

  auto make_phi = [&](long long m) -> GroupHom {
    std::vector<long long> mods;
    if (p > 0 && m >= 2) mods.insert(mods.end(), p, m);
    for (long long n : g.torsion_moduli()) mods.push_back(n);
    FgAbelianGroup target(0, mods);
    std::vector<GroupElement> images;
    int drop = (m >= 2) ? 0 : p;  // m == 1 kills the free part entirely
    for (int i = 0; i < g.rank(); ++i) {
      IntVec c(target.rank(), 0);
      int j = i - (i < p ? 0 : drop);
      if (i >= p || m >= 2) c[j] = 1;
      images.emplace_back(target, std::move(c));
    }
    return GroupHom(g, target, std::move(images));
  };

  if (p == 0) return {1, make_phi(1)};

  for (long long m = 1;; ++m) {
    GroupHom phi = make_phi(m);
    std::set<GroupElement> imgs;
    bool injective = true;
    for (const auto& x : t)
      if (!imgs.insert(phi.apply(x)).second) {
        injective = false;
        break;
      }
    if (injective) return {m, std::move(phi)};
  }
}

ProductGroup direct_product(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<long long> mods = a.torsion_moduli();
  mods.insert(mods.end(), b.torsion_moduli().begin(), b.torsion_moduli().end());
  FgAbelianGroup g(a.free_rank() + b.free_rank(), mods);
  // coordinate layout: free(a), free(b), torsion(a), torsion(b)
  auto include = [&](const FgAbelianGroup& src, int free_off, int tor_off) {
    std::vector<GroupElement> images;
    for (int i = 0; i < src.rank(); ++i) {
      IntVec c(g.rank(), 0);
      if (i < src.free_rank())
        c[free_off + i] = 1;
      else
        c[g.free_rank() + tor_off + (i - src.free_rank())] = 1;
      images.emplace_back(g, std::move(c));
    }
    return GroupHom(src, g, std::move(images));
  };
  return {g, include(a, 0, 0),
          include(b, a.free_rank(), (int)a.torsion_moduli().size())};
}

}  // namespace gralg

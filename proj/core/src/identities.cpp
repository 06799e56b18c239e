#include "gralg/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <set>

namespace gralg {

EngineOptions EngineOptions::from_env() {
  EngineOptions opt;
  if (const char* s = std::getenv("GRALG_MAX_SUBSTITUTIONS")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) opt.max_substitutions = v;
  }
  return opt;
}

namespace {

std::vector<int> all_indices(const GradedAlgebra& a) {
  std::vector<int> v(a.dim());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::vector<int>> candidate_lists(const GradedPolynomial& p,
                                              const GradedAlgebra& a) {
  std::vector<std::vector<int>> cands;
  for (const auto& v : p.vars())
    cands.push_back(v.degree ? a.component(*v.degree) : all_indices(a));
  return cands;
}

// ---- generic engine: alternating-class reduction + exhaustive enumeration ----

// variables i, j alternate if transposing them in every term negates the
// polynomial
bool pair_alternates(const GradedPolynomial& p, int i, int j) {
  std::map<std::vector<int>, CycScalar> orig;
  for (const auto& t : p.terms()) {
    auto it = orig.find(t.order);
    if (it == orig.end())
      orig.emplace(t.order, t.coeff);
    else
      it->second += t.coeff;
  }
  for (const auto& [order, coeff] : orig) {
    std::vector<int> swapped = order;
    for (auto& v : swapped) {
      if (v == i)
        v = j;
      else if (v == j)
        v = i;
    }
    auto it = orig.find(swapped);
    CycScalar other = it == orig.end() ? CycScalar::zero() : it->second;
    if (!((-coeff) == other)) return false;
  }
  return true;
}

struct VarGroup {
  std::vector<int> vars;       // ascending variable indices
  std::vector<int> cands;      // shared candidate list
  bool alternating = false;    // enumerate strictly increasing tuples
};

std::vector<VarGroup> group_variables(const GradedPolynomial& p,
                                      const std::vector<std::vector<int>>& cands) {
  int n = p.nvars();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cands[i] == cands[j] && find(i) != find(j) && pair_alternates(p, i, j))
        parent[find(i)] = find(j);
  std::map<int, VarGroup> groups;
  for (int i = 0; i < n; ++i) {
    VarGroup& g = groups[find(i)];
    g.vars.push_back(i);
    g.cands = cands[i];
  }
  std::vector<VarGroup> out;
  for (auto& [root, g] : groups) {
    std::sort(g.vars.begin(), g.vars.end());
    g.alternating = g.vars.size() > 1;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const VarGroup& a, const VarGroup& b) { return a.vars[0] < b.vars[0]; });
  return out;
}

}  // namespace

IdentityResult is_identity(const GradedPolynomial& p, const GradedAlgebra& a,
                           const EngineOptions& opt) {
  IdentityResult res;
  auto cands = candidate_lists(p, a);
  for (const auto& c : cands)
    if (c.empty()) {
      res.holds = true;
      res.vacuous = true;
      return res;
    }
  std::vector<VarGroup> groups = group_variables(p, cands);

  std::vector<int> assignment(p.nvars(), -1);
  std::vector<SparseVec> values(p.nvars());
  bool found = false;

  std::function<void(size_t)> walk = [&](size_t gi) {
    if (found) return;
    if (gi == groups.size()) {
      if (++res.substitutions > opt.max_substitutions)
        throw error("is_identity: substitution ceiling exceeded");
      for (int v = 0; v < p.nvars(); ++v)
        values[v] = {{assignment[v], CycScalar::one()}};
      if (!sparse_is_zero(evaluate(a, p, values, false))) {
        found = true;
        res.witness = assignment;
      }
      return;
    }
    const VarGroup& g = groups[gi];
    int k = (int)g.vars.size();
    // choose an (increasing, if alternating) tuple from the candidate list
    std::function<void(int, size_t)> pick = [&](int pos, size_t from) {
      if (found) return;
      if (pos == k) {
        walk(gi + 1);
        return;
      }
      for (size_t c = from; c < g.cands.size(); ++c) {
        assignment[g.vars[pos]] = g.cands[c];
        pick(pos + 1, g.alternating ? c + 1 : 0);
        if (found) return;
      }
    };
    pick(0, 0);
  };
  walk(0);
  res.holds = !found;
  return res;
}

// ---- product-chain engine for Capelli-shaped polynomials ----
//
// Decides polynomials of the form  F * Cap_t * x_{s_1} ... x_{s_k}  where F
// is an optional multilinear prefix and each variable carries a candidate
// basis list.  Only substitution/ordering pairs whose monomial value is
// nonzero are walked; signed values are accumulated per substitution
// (x-variables canonically sorted within alternating classes, which loses no
// information by alternation).

namespace {

struct ChainShape {
  const GradedPolynomial* prefix = nullptr;
  std::vector<std::vector<int>> prefix_cands;
  int t = 0;
  std::vector<std::vector<int>> x_cands;       // size t
  std::vector<std::vector<int>> y_cands;       // size t+1
  std::vector<std::vector<int>> suffix_cands;  // trailing right factors
};

struct ChainClass {
  std::vector<int> slots;    // x-variable indices, ascending
  std::vector<char> member;  // basis membership bitset
};

using KeyMap = std::map<std::vector<int>, SparseVec>;

std::vector<ChainClass> build_classes(const ChainShape& sh, int dim) {
  std::vector<ChainClass> classes;
  std::vector<std::vector<int>> lists;
  for (int i = 0; i < sh.t; ++i) {
    size_t c = 0;
    while (c < lists.size() && lists[c] != sh.x_cands[i]) ++c;
    if (c == lists.size()) {
      lists.push_back(sh.x_cands[i]);
      ChainClass cls;
      cls.member.assign(dim, 0);
      for (int b : sh.x_cands[i]) cls.member[b] = 1;
      classes.push_back(std::move(cls));
    }
    classes[c].slots.push_back(i);
  }
  // the sorted-key reduction needs candidate classes pairwise disjoint
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      for (int b = 0; b < dim; ++b)
        if (classes[i].member[b] && classes[j].member[b])
          throw error("chain engine: overlapping alternating candidate classes");
  return classes;
}

// true when every product of two basis elements has at most one term; all
// the built algebras (matrix units, twisted group bases, tensors and sums of
// those) satisfy this, and it admits a much cheaper chain walk
bool single_term_products(const GradedAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a.product(i, j).size() > 1) return false;
  return true;
}

// one chunk: y_1 fixed; accumulates signed values per canonical substitution
long long chain_chunk(const GradedAlgebra& a, const ChainShape& sh,
                      const std::vector<ChainClass>& classes,
                      const std::vector<int>& x_union, int y0, long long ceiling,
                      bool fast, KeyMap& out) {
  int np = sh.prefix ? sh.prefix->nvars() : 0;
  int t = sh.t;
  int ns = (int)sh.suffix_cands.size();
  long long leaves = 0;

  std::vector<int> pre_vals(np, -1), x_vals(t, -1), y_vals(t + 1, -1), suf_vals(ns, -1);
  y_vals[0] = y0;

  // a repeated x value always cancels by alternation and an over-full class
  // can never become admissible, so both prune the walk early
  std::vector<int> class_of(a.dim(), -1);
  for (int b = 0; b < a.dim(); ++b)
    for (size_t c = 0; c < classes.size(); ++c)
      if (classes[c].member[b]) {
        class_of[b] = (int)c;
        break;
      }
  std::vector<char> x_used(a.dim(), 0);
  std::vector<int> class_count(classes.size(), 0);

  std::vector<PolyTerm> pre_terms =
      sh.prefix ? sh.prefix->terms() : std::vector<PolyTerm>{{CycScalar::one(), {}}};

  for (const auto& pterm : pre_terms) {
    // value accumulation at the leaf of one nonzero chain
    auto leaf = [&](const SparseVec& value) {
      if (++leaves > ceiling) throw error("chain engine: substitution ceiling exceeded");
      // match x position values to alternating classes
      std::vector<std::vector<std::pair<int, int>>> got(classes.size());  // (value,pos)
      for (int i = 0; i < t; ++i) {
        size_t c = 0;
        while (c < classes.size() && !classes[c].member[x_vals[i]]) ++c;
        got[c].push_back({x_vals[i], i});
      }
      std::vector<int> var_of_pos(t, -1);
      for (size_t c = 0; c < classes.size(); ++c) {
        if (got[c].size() != classes[c].slots.size()) return;  // inadmissible
        std::sort(got[c].begin(), got[c].end());
        for (size_t r = 0; r + 1 < got[c].size(); ++r)
          if (got[c][r].first == got[c][r + 1].first) return;  // repeat: cancels
        for (size_t r = 0; r < got[c].size(); ++r)
          var_of_pos[got[c][r].second] = classes[c].slots[r];
      }
      long long inv = 0;
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
          if (var_of_pos[i] > var_of_pos[j]) ++inv;
      std::vector<int> key;
      key.reserve(np + t + t + 1 + ns);
      key.insert(key.end(), pre_vals.begin(), pre_vals.end());
      std::vector<int> x_by_var(t, -1);
      for (int i = 0; i < t; ++i) x_by_var[var_of_pos[i]] = x_vals[i];
      key.insert(key.end(), x_by_var.begin(), x_by_var.end());
      key.insert(key.end(), y_vals.begin(), y_vals.end());
      key.insert(key.end(), suf_vals.begin(), suf_vals.end());
      CycScalar c = inv % 2 == 0 ? pterm.coeff : -pterm.coeff;
      auto it = out.find(key);
      if (it == out.end())
        out.emplace(std::move(key), sparse_scale(c, value));
      else
        it->second = sparse_add(it->second, sparse_scale(c, value));
    };

    // word = prefix vars in term order, then y1 x.. y.. x.. y_{t+1}, then suffix
    int word_len = np + 2 * t + 1 + ns;
    auto slot_of = [&](int pos, const std::vector<int>*& cand, int*& store) {
      if (pos < np) {
        int var = pterm.order[pos];
        cand = &sh.prefix_cands[var];
        store = &pre_vals[var];
      } else if (pos < np + 2 * t + 1) {
        int rel = pos - np;
        if (rel % 2 == 0) {
          cand = &sh.y_cands[rel / 2];
          store = &y_vals[rel / 2];
        } else {
          cand = &x_union;
          store = &x_vals[rel / 2];
        }
      } else {
        int si = pos - (np + 2 * t + 1);
        cand = &sh.suffix_cands[si];
        store = &suf_vals[si];
      }
    };

    if (fast) {
      // chains through single-term product tables: the running value is one
      // basis element with a deferred product of table coefficients
      std::vector<const CycScalar*> coeff_stack;
      std::function<void(int, int)> fast_step = [&](int pos, int cur) {
        if (pos == word_len) {
          CycScalar c = CycScalar::one();
          for (const CycScalar* f : coeff_stack) c = c * *f;
          leaf({{cur, std::move(c)}});
          return;
        }
        const std::vector<int>* cand;
        int* store;
        slot_of(pos, cand, store);
        if (pos == np) {
          // chunk-fixed y_1
          int next = cur;
          size_t depth = coeff_stack.size();
          if (cur >= 0) {
            const SparseVec& p = a.product(cur, y0);
            if (p.empty()) return;
            next = p[0].index;
            if (!p[0].coeff.is_one()) coeff_stack.push_back(&p[0].coeff);
          } else {
            next = y0;
          }
          fast_step(pos + 1, next);
          coeff_stack.resize(depth);
          return;
        }
        bool is_x = pos < np + 2 * t + 1 && (pos - np) % 2 == 1;
        size_t depth = coeff_stack.size();
        for (int b : *cand) {
          int cls = -1;
          if (is_x) {
            cls = class_of[b];
            if (x_used[b] || cls < 0 ||
                class_count[cls] == (int)classes[cls].slots.size())
              continue;
          }
          int next = b;
          if (cur >= 0) {
            const SparseVec& p = a.product(cur, b);
            if (p.empty()) continue;
            next = p[0].index;
            if (!p[0].coeff.is_one()) coeff_stack.push_back(&p[0].coeff);
          }
          *store = b;
          if (is_x) {
            x_used[b] = 1;
            ++class_count[cls];
          }
          fast_step(pos + 1, next);
          if (is_x) {
            x_used[b] = 0;
            --class_count[cls];
          }
          coeff_stack.resize(depth);
        }
        *store = -1;
      };
      fast_step(0, -1);
      continue;
    }

    std::function<void(int, const SparseVec*)> step = [&](int pos, const SparseVec* run) {
      if (pos == word_len) {
        leaf(*run);
        return;
      }
      const std::vector<int>* cand;
      int* store;
      slot_of(pos, cand, store);
      if (pos == np) {
        // chunk-fixed y_1
        SparseVec b = {{y0, CycScalar::one()}};
        SparseVec next = run ? a.multiply(*run, b) : b;
        if (!next.empty()) step(pos + 1, &next);
        return;
      }
      bool is_x = pos < np + 2 * t + 1 && (pos - np) % 2 == 1;
      for (int b : *cand) {
        int cls = -1;
        if (is_x) {
          cls = class_of[b];
          if (x_used[b] || cls < 0 ||
              class_count[cls] == (int)classes[cls].slots.size())
            continue;
        }
        SparseVec bb = {{b, CycScalar::one()}};
        SparseVec next = run ? a.multiply(*run, bb) : bb;
        if (next.empty()) continue;
        *store = b;
        if (is_x) {
          x_used[b] = 1;
          ++class_count[cls];
        }
        step(pos + 1, &next);
        if (is_x) {
          x_used[b] = 0;
          --class_count[cls];
        }
      }
      *store = -1;
    };
    step(0, nullptr);
  }
  return leaves;
}

struct ChainScan {
  bool aborted = false;
  std::vector<int> witness_key;
  SparseVec witness_value;
  long long leaves = 0;
};

// runs the engine over all chunks; on_nonzero returning false aborts with
// that entry as witness
ChainScan chain_scan(const GradedAlgebra& a, const ChainShape& sh,
                     const EngineOptions& opt,
                     const std::function<bool(const std::vector<int>&,
                                              const SparseVec&)>& on_nonzero) {
  ChainScan scan;
  if (sh.t < 1) throw error("chain engine: t must be >= 1");
  for (const auto& c : sh.prefix_cands)
    if (c.empty()) return scan;  // vacuous: no substitutions at all
  for (const auto& c : sh.y_cands)
    if (c.empty()) return scan;
  // an empty x class blocks every admissible substitution but chains still
  // walk the union; classes with no candidates simply never match
  std::vector<ChainClass> classes = build_classes(sh, a.dim());
  std::set<int> xu;
  for (const auto& c : sh.x_cands) xu.insert(c.begin(), c.end());
  std::vector<int> x_union(xu.begin(), xu.end());
  if (x_union.empty()) return scan;
  for (const auto& c : sh.suffix_cands)
    if (c.empty()) return scan;

  const std::vector<int>& chunks = sh.y_cands[0];
  bool fast = single_term_products(a);
  auto process_map = [&](const KeyMap& m) {
    for (const auto& [key, value] : m) {
      if (sparse_is_zero(value)) continue;
      if (!on_nonzero(key, value)) {
        scan.aborted = true;
        scan.witness_key = key;
        scan.witness_value = value;
        return false;
      }
    }
    return true;
  };

  int nthreads = std::max(1, opt.threads);
  for (size_t base = 0; base < chunks.size(); base += nthreads) {
    size_t batch = std::min((size_t)nthreads, chunks.size() - base);
    if (batch == 1) {
      KeyMap m;
      scan.leaves += chain_chunk(a, sh, classes, x_union, chunks[base],
                                 opt.max_substitutions - scan.leaves, fast, m);
      if (!process_map(m)) return scan;
    } else {
      std::vector<std::future<std::pair<KeyMap, long long>>> futs;
      long long per = (opt.max_substitutions - scan.leaves) / (long long)batch;
      for (size_t i = 0; i < batch; ++i)
        futs.push_back(std::async(std::launch::async, [&, i]() {
          KeyMap m;
          long long l = chain_chunk(a, sh, classes, x_union, chunks[base + i], per, fast, m);
          return std::make_pair(std::move(m), l);
        }));
      bool stop = false;
      for (auto& f : futs) {
        auto [m, l] = f.get();
        scan.leaves += l;
        if (!stop && !process_map(m)) stop = true;
      }
      if (stop) return scan;
    }
  }
  return scan;
}

ChainShape untyped_capelli_shape(const GradedAlgebra& a, int t) {
  ChainShape sh;
  sh.t = t;
  sh.x_cands.assign(t, all_indices(a));
  sh.y_cands.assign(t + 1, all_indices(a));
  return sh;
}

}  // namespace

IdentityResult capelli_identity(const GradedAlgebra& a, int t,
                                const EngineOptions& opt) {
  IdentityResult res;
  if (t > a.dim()) {
    // Cap_t alternates in more variables than the dimension
    res.holds = true;
    return res;
  }
  ChainShape sh = untyped_capelli_shape(a, t);
  ChainScan scan = chain_scan(a, sh, opt, [](const std::vector<int>&, const SparseVec&) {
    return false;  // first nonzero value is a witness
  });
  res.substitutions = scan.leaves;
  res.holds = !scan.aborted;
  if (scan.aborted) res.witness = scan.witness_key;
  if (a.dim() == 0) res.vacuous = true;
  return res;
}

CapelliRank capelli_rank(const GradedAlgebra& a, const EngineOptions& opt) {
  std::optional<std::vector<int>> prev;
  for (int t = 1;; ++t) {
    IdentityResult r = capelli_identity(a, t, opt);
    if (r.holds) return {t, prev};
    prev = r.witness;
  }
}

bool capelli_values_in_span(const GradedAlgebra& a, int t,
                            const std::vector<int>& span_indices,
                            std::optional<std::vector<int>>* witness,
                            const EngineOptions& opt) {
  std::vector<char> in_span(a.dim(), 0);
  for (int i : span_indices) in_span[i] = 1;
  ChainShape sh = untyped_capelli_shape(a, t);
  ChainScan scan =
      chain_scan(a, sh, opt, [&](const std::vector<int>&, const SparseVec& v) {
        for (const auto& term : v)
          if (!in_span[term.index]) return false;
        return true;
      });
  if (scan.aborted && witness) *witness = scan.witness_key;
  return !scan.aborted;
}

bool capelli_support_test(const GradedAlgebra& r, const GroupElement& g, int t,
                          const EngineOptions& opt) {
  GroupElement e = identity_of(r.group());
  std::vector<int> neutral = r.component(e);
  std::vector<int> comp_g = r.component(g);

  // first conjunct: Cap_{t-1} x_t^g not an identity
  bool first;
  if (t - 1 == 0) {
    first = !comp_g.empty();  // Cap_0 x^g = y_1 x^g; nonzero iff slot nonzero (unital R)
  } else {
    ChainShape sh;
    sh.t = t - 1;
    sh.x_cands.assign(t - 1, neutral);
    sh.y_cands.assign(t, neutral);
    sh.suffix_cands.push_back(comp_g);
    ChainScan scan = chain_scan(
        r, sh, opt, [](const std::vector<int>&, const SparseVec&) { return false; });
    first = scan.aborted;
  }
  if (!first) return false;

  // second conjunct: Cap_t with x_t retyped to g is an identity
  ChainShape sh;
  sh.t = t;
  sh.x_cands.assign(t - 1, neutral);
  sh.x_cands.push_back(comp_g);
  sh.y_cands.assign(t + 1, neutral);
  ChainScan scan = chain_scan(
      r, sh, opt, [](const std::vector<int>&, const SparseVec&) { return false; });
  return !scan.aborted;
}

SupportRecovery recover_division_support(const GradedAlgebra& r,
                                         const EngineOptions& opt) {
  SupportRecovery rec;
  GradedAlgebra re = neutral_component(r);
  rec.capelli_rank_neutral = capelli_rank(re, opt).t;
  for (const auto& g : r.support())
    if (capelli_support_test(r, g, rec.capelli_rank_neutral, opt))
      rec.elements.push_back(g);
  std::set<GroupElement> set(rec.elements.begin(), rec.elements.end());
  rec.closed = true;
  for (const auto& x : rec.elements) {
    if (!set.count(inverse(x))) rec.closed = false;
    for (const auto& y : rec.elements)
      if (!set.count(compose(x, y))) rec.closed = false;
  }
  rec.subgroup = subgroup_generated(r.group(), rec.elements);
  return rec;
}

IdentitySpace identity_space(const std::vector<GroupElement>& signature,
                             const GradedAlgebra& a, const EngineOptions& opt) {
  IdentitySpace out;
  int n = (int)signature.size();
  if (n < 1) throw error("identity_space: empty signature");
  std::vector<std::vector<int>> cands;
  for (const auto& g : signature) {
    cands.push_back(a.component(g));
    if (cands.back().empty()) out.vacuous = true;
  }
  // columns: the n! orderings, lexicographic
  std::vector<std::vector<int>> orderings;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do orderings.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  EchelonBuilder builder((int)orderings.size());
  std::vector<int> tuple(n, 0);
  long long count = 0;
  std::function<void(int)> walk = [&](int pos) {
    if (builder.full_rank()) return;
    if (pos == n) {
      if (++count > opt.max_substitutions)
        throw error("identity_space: substitution ceiling exceeded");
      // evaluate every ordering, emit one row per occurring output coordinate
      std::vector<SparseVec> prods(orderings.size());
      std::set<int> coords;
      for (size_t o = 0; o < orderings.size(); ++o) {
        SparseVec v = {{cands[orderings[o][0]][tuple[orderings[o][0]]] , CycScalar::one()}};
        for (int i = 1; i < n && !v.empty(); ++i)
          v = a.multiply(v, {{cands[orderings[o][i]][tuple[orderings[o][i]]],
                              CycScalar::one()}});
        prods[o] = std::move(v);
        for (const auto& term : prods[o]) coords.insert(term.index);
      }
      for (int k : coords) {
        ScalarVec row(orderings.size(), CycScalar::zero());
        for (size_t o = 0; o < orderings.size(); ++o)
          for (const auto& term : prods[o])
            if (term.index == k) row[o] = term.coeff;
        if (builder.add_row(std::move(row))) ++out.rows;
      }
      return;
    }
    for (size_t c = 0; c < cands[pos].size(); ++c) {
      tuple[pos] = (int)c;
      walk(pos + 1);
      if (builder.full_rank()) return;
    }
  };
  if (!out.vacuous) walk(0);
  out.kernel = builder.kernel();
  return out;
}

IdCompare same_identities_upto(const GradedAlgebra& a, const GradedAlgebra& b,
                               int max_n, const EngineOptions& opt) {
  std::set<GroupElement> supp;
  for (const auto& g : a.support()) supp.insert(g);
  for (const auto& g : b.support()) supp.insert(g);
  std::vector<GroupElement> degrees(supp.begin(), supp.end());

  // non-decreasing signatures suffice: permuting a signature permutes the
  // ordering columns identically for both algebras
  std::vector<GroupElement> sig;
  std::function<std::optional<std::vector<GroupElement>>(int, size_t)> walk =
      [&](int remaining, size_t from) -> std::optional<std::vector<GroupElement>> {
    if (remaining == 0) {
      IdentitySpace ka = identity_space(sig, a, opt);
      IdentitySpace kb = identity_space(sig, b, opt);
      if (ka.kernel.size() != kb.kernel.size()) return sig;
      for (size_t i = 0; i < ka.kernel.size(); ++i)
        for (size_t j = 0; j < ka.kernel[i].size(); ++j)
          if (!(ka.kernel[i][j] == kb.kernel[i][j])) return sig;
      return std::nullopt;
    }
    for (size_t d = from; d < degrees.size(); ++d) {
      sig.push_back(degrees[d]);
      auto bad = walk(remaining - 1, d);
      sig.pop_back();
      if (bad) return bad;
    }
    return std::nullopt;
  };
  for (int n = 1; n <= max_n; ++n)
    if (auto bad = walk(n, 0)) return {false, bad};
  return {true, std::nullopt};
}

namespace {

// c is a scalar multiple of an idempotent acting as the identity on d:
// c d = λ d with λ != 0 and c^2 = λ c
bool scalar_action(const GradedAlgebra& a, const SparseVec& c, const SparseVec& d) {
  if (sparse_is_zero(d)) return false;
  SparseVec cd = a.multiply(c, d);
  if (sparse_is_zero(cd)) return false;
  CycScalar lambda = CycScalar::zero();
  for (const auto& term : cd)
    if (term.index == d[0].index) lambda = term.coeff * d[0].coeff.inverse();
  if (lambda.is_zero()) return false;
  return sparse_equal(cd, sparse_scale(lambda, d)) &&
         sparse_equal(a.multiply(c, c), sparse_scale(lambda, c));
}

}  // namespace

AGood a_good(const ElementarySpec& spec, const EngineOptions& opt) {
  GradedAlgebra a = build_ut_elementary(spec);
  GradedAlgebra ae = neutral_component(a);
  int t = capelli_rank(ae, opt).t;

  // k = max first-block size over the neutral ideals attaining the rank
  std::vector<NeutralIdeal> ideals = decompose_neutral(spec);
  int k = 0;
  for (const auto& ideal : ideals) {
    int tj = (int)ideal.shape.size();
    for (int d : ideal.shape) tj += d * d;
    if (tj == t) k = std::max(k, ideal.shape[0]);
  }
  if (k == 0) throw error("a_good: no neutral ideal attains the Capelli rank");
  GradedPolynomial f = rename_with_prefix(central_poly(k), "f");

  // clause (ii): f Cap_{t-1} not an identity of A_e; clause (iii): on every
  // nonvanishing substitution the f-part is a scalar multiple of the leading
  // block identity of the ideal carrying the substitution, i.e. it acts as a
  // nonzero scalar on the Capelli value and squares to that scalar times
  // itself.  (i) is structural.
  ChainShape sh;
  sh.prefix = &f;
  sh.prefix_cands.assign(f.nvars(), all_indices(ae));
  sh.t = t - 1;
  sh.x_cands.assign(t - 1, all_indices(ae));
  sh.y_cands.assign(t, all_indices(ae));

  GradedPolynomial cap = capelli(t - 1);
  bool nonzero_seen = false;
  std::optional<std::vector<int>> clause_failure;
  chain_scan(ae, sh, opt, [&](const std::vector<int>& key, const SparseVec&) {
    nonzero_seen = true;
    std::vector<SparseVec> fvals, cvals;
    for (int i = 0; i < f.nvars(); ++i) fvals.push_back({{key[i], CycScalar::one()}});
    for (int i = 0; i < cap.nvars(); ++i)
      cvals.push_back({{key[f.nvars() + i], CycScalar::one()}});
    SparseVec fv = evaluate(ae, f, fvals, false);
    SparseVec cv = evaluate(ae, cap, cvals, false);
    if (!scalar_action(ae, fv, cv)) {
      clause_failure = key;
      return false;
    }
    return true;
  });
  if (!nonzero_seen)
    throw error("a_good: f Cap_{t-1} is an identity of the neutral component");
  if (clause_failure)
    throw error("a_good: f-value does not act as a scalar on a nonvanishing substitution");
  return {std::move(f), t, k};
}

std::pair<bool, bool> division_transfer_check(const GradedPolynomial& g,
                                              const GradedAlgebra& b,
                                              const GradedAlgebra& r,
                                              const ElementarySpec& a_spec,
                                              const EngineOptions& opt) {
  bool lhs = is_identity(g, b, opt).holds;
  AGood ag = a_good(a_spec, opt);
  GradedPolynomial rhs_poly = compose_transfer(g, ag.f, ag.t);
  bool rhs = is_identity(rhs_poly, r, opt).holds;
  return {lhs, rhs};
}

}  // namespace gralg

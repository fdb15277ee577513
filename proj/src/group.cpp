#include "gfrep/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace gfrep {

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a*b)(x) = a(b(x))
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

Group Group::from_permutations(const std::vector<std::vector<int>>& gens,
                               int closure_bound) {
  size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  if (degree == 0) degree = 1;
  std::vector<std::vector<int>> padded;
  for (const auto& g : gens) {
    std::vector<int> p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> hit(degree, 0);
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0 || static_cast<size_t>(g[i]) >= degree)
        throw ValidationError("permutation image out of range");
      p[i] = g[i];
    }
    for (int v : p) {
      if (hit[v]) throw ValidationError("generator is not a bijection");
      hit[v] = 1;
    }
    padded.push_back(std::move(p));
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems = {id};
  index[id] = 0;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : padded) {
      auto prod = compose(elems[qi], g);
      if (!index.count(prod)) {
        if (static_cast<int>(elems.size()) >= closure_bound)
          throw ValidationError("group closure exceeds bound");
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
      }
    }
  }
  // Re-index in sorted image order; identity sorts first.
  std::vector<std::vector<int>> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::vector<int>, int> newindex;
  for (size_t i = 0; i < sorted.size(); ++i) newindex[sorted[i]] = int(i);

  int n = static_cast<int>(sorted.size());
  Group G;
  G.n_ = n;
  G.perms_ = sorted;
  G.table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      G.table_[static_cast<size_t>(a) * n + b] =
          newindex.at(compose(sorted[a], sorted[b]));
  for (const auto& g : padded) G.gens_.push_back(newindex.at(g));
  for (size_t i = 0; i < padded.size(); ++i)
    G.names_.push_back("g" + std::to_string(i));
  G.build_words_();
  G.validate_();
  return G;
}

Group Group::from_mult_table(std::vector<int32_t> table, std::vector<int> gens,
                             std::vector<std::string> gen_names) {
  Group G;
  size_t n2 = table.size();
  int n = static_cast<int>(std::llround(std::sqrt(double(n2))));
  if (static_cast<size_t>(n) * n != n2)
    throw ValidationError("multiplication table is not square");
  G.n_ = n;
  G.table_ = std::move(table);
  G.gens_ = std::move(gens);
  G.names_ = std::move(gen_names);
  G.build_words_();
  G.validate_();
  return G;
}

Group Group::trivial() {
  return from_permutations({});
}

void Group::build_words_() {
  words_.assign(n_, {});
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  std::vector<int> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      int f = mult(e, gens_[gi]);
      if (!seen[f]) {
        seen[f] = 1;
        words_[f] = words_[e];
        words_[f].push_back(static_cast<int>(gi));
        queue.push_back(f);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n_)
    throw ValidationError("generators do not generate the group");
}

void Group::validate_() {
  // identity & inverse laws, full
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    if (mult(0, a) != a || mult(a, 0) != a)
      throw ValidationError("index 0 is not an identity");
    for (int b = 0; b < n_; ++b) {
      if (mult(a, b) == 0) {
        if (mult(b, a) != 0)
          throw ValidationError("one-sided inverse in multiplication table");
        inv_[a] = b;
      }
      if (mult(a, b) < 0 || mult(a, b) >= n_)
        throw ValidationError("multiplication table entry out of range");
    }
    if (inv_[a] < 0) throw ValidationError("element without inverse");
  }
  // associativity: full check at desk scale, sampled above
  if (n_ <= 64) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw ValidationError("multiplication table not associative");
  } else {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 20000; ++t) {
      int a = static_cast<int>(rng() % n_);
      int b = static_cast<int>(rng() % n_);
      int c = static_cast<int>(rng() % n_);
      if (mult(mult(a, b), c) != mult(a, mult(b, c)))
        throw ValidationError("multiplication table not associative");
    }
  }
}

std::string Group::word_name(int e) const {
  const auto& w = words_[e];
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << names_[w[i]];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

int Group::element_order(int e) const {
  int ord = 1;
  int x = e;
  while (x != 0) {
    x = mult(x, e);
    ++ord;
  }
  return ord;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

void Subgroup::index_(int ambient_order) {
  pos_.assign(ambient_order, -1);
  for (size_t i = 0; i < elems_.size(); ++i) pos_[elems_[i]] = int(i);
}

Subgroup Subgroup::whole(const Group& G) {
  return generated(G, G.generators());
}

Subgroup Subgroup::trivial(const Group& G) { return generated(G, {}); }

Subgroup Subgroup::generated(const Group& G, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= G.order())
      throw ValidationError("subgroup generator out of range");
  Subgroup S;
  S.G_ = &G;
  S.gens_ = gens;
  std::vector<int> wordpos(G.order(), -1);
  std::vector<int> queue = {G.identity()};
  std::vector<std::vector<int>> wq = {{}};
  wordpos[G.identity()] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int f = G.mult(queue[qi], gens[gi]);
      if (wordpos[f] < 0) {
        wordpos[f] = static_cast<int>(queue.size());
        auto w = wq[qi];
        w.push_back(static_cast<int>(gi));
        queue.push_back(f);
        wq.push_back(std::move(w));
      }
    }
  }
  // sort elements ascending, carry words along
  std::vector<int> order(queue.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return queue[a] < queue[b]; });
  for (int i : order) {
    S.elems_.push_back(queue[i]);
    S.words_.push_back(wq[i]);
  }
  S.index_(G.order());
  return S;
}

Subgroup Subgroup::from_elements(const Group& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<char> in(G.order(), 0);
  for (int e : elems) {
    if (e < 0 || e >= G.order())
      throw ValidationError("subgroup element out of range");
    in[e] = 1;
  }
  if (elems.empty() || !in[G.identity()])
    throw ValidationError("subgroup must contain the identity");
  for (int a : elems)
    for (int b : elems)
      if (!in[G.mult(a, b)])
        throw ValidationError("element set is not closed");
  // derive a generating set greedily in ascending order
  std::vector<int> gens;
  Subgroup S = Subgroup::trivial(G);
  for (int e : elems) {
    if (!S.contains(e)) {
      gens.push_back(e);
      S = Subgroup::generated(G, gens);
    }
  }
  if (S.order() != static_cast<int>(elems.size()))
    throw CertificationError("subgroup closure mismatch");
  return S;
}

bool Subgroup::contains_subgroup(const Subgroup& s) const {
  if (G_ != s.G_) return false;
  for (int e : s.elems_)
    if (!contains(e)) return false;
  return true;
}

Subgroup Subgroup::conjugate_by(int x) const {
  const Group& G = *G_;
  if (x < 0 || x >= G.order())
    throw ValidationError("conjugating element out of range");
  std::vector<int> gens;
  gens.reserve(gens_.size());
  for (int g : gens_) gens.push_back(G.conj(x, g));
  Subgroup S = Subgroup::generated(G, gens);
  if (S.order() != order())
    throw CertificationError("conjugate subgroup order changed");
  return S;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (&a.group() != &b.group())
    throw ValidationError("intersection across different groups");
  std::vector<int> common;
  for (int e : a.elements())
    if (b.contains(e)) common.push_back(e);
  return Subgroup::from_elements(a.group(), std::move(common));
}

std::vector<int> left_coset_reps(const Subgroup& T, const Subgroup& H) {
  if (!T.contains_subgroup(H))
    throw ValidationError("coset reps: H is not a subgroup of T");
  const Group& G = T.group();
  std::vector<char> covered(G.order(), 0);
  std::vector<int> reps;
  for (int t : T.elements()) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (int h : H.elements()) covered[G.mult(t, h)] = 1;
  }
  return reps;
}

std::vector<int> double_coset_reps(const Subgroup& T, const Subgroup& H1,
                                   const Subgroup& H2) {
  if (!T.contains_subgroup(H1) || !T.contains_subgroup(H2))
    throw ValidationError("double cosets: subgroups must lie in T");
  const Group& G = T.group();
  std::vector<char> covered(G.order(), 0);
  std::vector<int> reps;
  for (int x : T.elements()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int a : H1.elements())
      for (int b : H2.elements()) covered[G.mult(G.mult(a, x), b)] = 1;
  }
  return reps;
}

Subgroup conj_intersection(const Subgroup& H, int x) {
  return intersect(H.conjugate_by(x), H);
}

}  // namespace gfrep

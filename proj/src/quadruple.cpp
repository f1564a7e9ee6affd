#include "swc/quadruple.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace swc {

namespace {

void check_face(const Quadruple& X) {
  int prev = 0;
  for (int p : X.face) {
    if (p < 1 || p > X.n()) throw ValidationError("face position out of range");
    if (p <= prev) throw ValidationError("face positions must be strictly increasing");
    prev = p;
  }
}

GroupElement complement_element(const CoxeterSystem& sys, const Word& word,
                                const std::vector<int>& face) {
  GroupElement g = GroupElement::identity(sys.rank());
  std::size_t fi = 0;
  for (int l = 1; l <= static_cast<int>(word.size()); ++l) {
    if (fi < face.size() && face[fi] == l) {
      ++fi;
      continue;
    }
    if (!g.ascends(word[l - 1]))
      throw ValidationError("face-not-facet: complement subword is not reduced");
    g = g.times_gen(sys, word[l - 1]);
  }
  return g;
}

}  // namespace

Quadruple Quadruple::make(CoxeterPtr system, Word word, std::vector<int> face,
                          std::optional<Realization> realization) {
  Quadruple X;
  X.system = std::move(system);
  X.word = std::move(word);
  X.face = std::move(face);
  X.realization = std::move(realization);
  check_word(*X.system, X.word);
  check_face(X);
  X.pi = complement_element(*X.system, X.word, X.face);
  if (X.realization) {
    if (static_cast<int>(X.realization->simples.size()) != X.rank())
      throw ValidationError("realization must give one parent vector per generator");
  }
  return X;
}

Quadruple Quadruple::make_with_pi(CoxeterPtr system, Word word, std::vector<int> face,
                                  const Word& pi_word) {
  GroupElement pi = word_to_element(*system, pi_word);
  Quadruple X = make(std::move(system), std::move(word), std::move(face));
  if (!(X.pi == pi))
    throw ValidationError("face-not-facet: complement does not spell the given element");
  return X;
}

Quadruple Quadruple::zero_object() {
  auto sys = std::make_shared<const CoxeterSystem>(CoxeterSystem::trivial());
  return make(sys, {}, {});
}

bool Quadruple::in_face(int pos) const {
  return std::binary_search(face.begin(), face.end(), pos);
}

std::vector<IntVec> Quadruple::root_function() const {
  std::vector<IntVec> roots;
  roots.reserve(word.size());
  GroupElement u = GroupElement::identity(rank());
  for (int l = 1; l <= n(); ++l) {
    IntVec alpha(rank(), 0);
    alpha[word[l - 1] - 1] = 1;
    roots.push_back(u.apply(alpha));
    if (!in_face(l)) u = u.times_gen(*system, word[l - 1]);
  }
  return roots;
}

std::vector<IntVec> Quadruple::realized_root_function() const {
  if (!realization) throw Error("quadruple carries no realization");
  auto own = root_function();
  const auto& simples = realization->simples;
  std::size_t dim = simples.empty() ? 0 : simples[0].size();
  std::vector<IntVec> out;
  out.reserve(own.size());
  for (const auto& r : own) {
    IntVec v(dim, 0);
    for (int k = 0; k < rank(); ++k)
      for (std::size_t c = 0; c < dim; ++c) v[c] += r[k] * simples[k][c];
    out.push_back(std::move(v));
  }
  return out;
}

bool Quadruple::is_irreducible() const {
  RowSpace span(rank());
  auto roots = root_function();
  for (int p : face) span.add(roots[p - 1]);
  return span.dim() == rank();
}

bool Quadruple::is_root_independent() const {
  return static_cast<int>(face.size()) == rank() && is_irreducible();
}

RootConfiguration root_function(const Quadruple& X) {
  RootConfiguration rc;
  rc.all_roots = X.root_function();
  for (int p : X.face) rc.configuration.push_back(rc.all_roots[p - 1]);
  return rc;
}

std::vector<std::vector<int>> facets(const CoxeterSystem& sys, const Word& word,
                                     const GroupElement& pi) {
  check_word(sys, word);
  const int n = static_cast<int>(word.size());
  const int k = n - pi.length();
  if (k < 0 || !contains_reduced_expression(sys, word, pi))
    throw NoFacets("the word contains no reduced expression of the element");
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  // lexicographic enumeration of k-subsets of [n]
  auto complement_spells = [&](const std::vector<int>& face) {
    GroupElement g = GroupElement::identity(sys.rank());
    std::size_t fi = 0;
    for (int l = 1; l <= n; ++l) {
      if (fi < face.size() && face[fi] == l) {
        ++fi;
        continue;
      }
      if (!g.ascends(word[l - 1])) return false;
      g = g.times_gen(sys, word[l - 1]);
    }
    return g == pi;
  };
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(pick.size()) == k) {
      if (complement_spells(pick)) out.push_back(pick);
      return;
    }
    int need = k - static_cast<int>(pick.size());
    for (int p = next; p + need - 1 <= n; ++p) {
      pick.push_back(p);
      rec(p + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return out;
}

Quadruple direct_sum(const Quadruple& X, const Quadruple& Y) {
  auto sys =
      std::make_shared<const CoxeterSystem>(CoxeterSystem::product(*X.system, *Y.system));
  Word word = X.word;
  for (int s : Y.word) word.push_back(s + X.rank());
  std::vector<int> face = X.face;
  for (int p : Y.face) face.push_back(p + X.n());
  return Quadruple::make(sys, std::move(word), std::move(face));
}

namespace {

// Greedy lexicographic normal form of a word in a trace monoid where letters
// a, b commute iff a != b and m(a,b) = 2. Dependence is evaluated on the
// original letters; the lexicographic order on the relabeled values, so the
// result is the minimal representative of the relabeled word's class.
// pos_map sends each original position to its position in the normal word.
struct TraceNormal {
  Word word;                 // relabeled letters in normal order
  std::vector<int> pos_map;  // original position -> new position (1-based)
};

TraceNormal trace_normal_form(const CoxeterSystem& sys, const Word& w,
                              const std::vector<int>& relabel) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> used(n, false);
  TraceNormal out;
  out.word.reserve(n);
  out.pos_map.assign(n, 0);
  auto dependent = [&](int a, int b) { return a == b || sys.cox(a, b) != 2; };
  auto value = [&](int i) { return relabel[w[i] - 1]; };
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool available = true;
      for (int j = 0; j < i && available; ++j)
        if (!used[j] && dependent(w[j], w[i])) available = false;
      if (available && (best < 0 || value(i) < value(best))) best = i;
    }
    used[best] = true;
    out.word.push_back(value(best));
    out.pos_map[best] = step + 1;
  }
  return out;
}

std::vector<std::vector<int>> permuted_cox(const CoxeterSystem& sys,
                                           const std::vector<int>& perm) {
  const int n = sys.rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[perm[i - 1] - 1][perm[j - 1] - 1] = sys.cox(i, j);
  return m;
}

std::mutex canon_mutex;
std::map<std::tuple<std::vector<std::vector<int>>, Word, std::vector<int>>, CanonicalResult>
    canon_cache;

}  // namespace

CanonicalResult canonical_map(const Quadruple& X) {
  auto cache_key = std::make_tuple(X.system->cox_matrix(), X.word, X.face);
  {
    std::lock_guard<std::mutex> lock(canon_mutex);
    auto it = canon_cache.find(cache_key);
    if (it != canon_cache.end()) return it->second;
  }

  const int r = X.rank();
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i + 1;

  std::optional<CanonicalResult> best;
  do {
    auto cox = permuted_cox(*X.system, perm);
    if (best && cox > best->key.cox) continue;
    TraceNormal tn = trace_normal_form(*X.system, X.word, perm);
    std::vector<int> canon_face;
    for (int p : X.face) canon_face.push_back(tn.pos_map[p - 1]);
    std::sort(canon_face.begin(), canon_face.end());
    ClassKey key{std::move(cox), std::move(tn.word), std::move(canon_face)};
    if (!best || key < best->key) best = CanonicalResult{std::move(key), tn.pos_map};
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::lock_guard<std::mutex> lock(canon_mutex);
  canon_cache.emplace(std::move(cache_key), *best);
  return *best;
}

ClassKey canonical_class(const Quadruple& X) { return canonical_map(X).key; }

Quadruple canonical_form(const Quadruple& X) { return quadruple_from_class(canonical_class(X)); }

Quadruple quadruple_from_class(const ClassKey& key) {
  auto sys = key.cox.empty()
                 ? std::make_shared<const CoxeterSystem>(CoxeterSystem::trivial())
                 : std::make_shared<const CoxeterSystem>(
                       CoxeterSystem::from_coxeter_matrix(key.cox));
  return Quadruple::make(sys, key.word, key.face);
}

bool equivalent(const Quadruple& X, const Quadruple& Y) {
  return canonical_class(X) == canonical_class(Y);
}

std::string class_key_to_string(const ClassKey& key) {
  std::ostringstream os;
  os << "cox=[";
  for (std::size_t i = 0; i < key.cox.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < key.cox[i].size(); ++j) os << (j ? "," : "") << key.cox[i][j];
    os << "]";
  }
  os << "] word=[";
  for (std::size_t i = 0; i < key.word.size(); ++i) os << (i ? "," : "") << key.word[i];
  os << "] face=[";
  for (std::size_t i = 0; i < key.face.size(); ++i) os << (i ? "," : "") << key.face[i];
  os << "]";
  return os.str();
}

}  // namespace swc

#include "swc/quiver.hpp"

#include <algorithm>
#include <functional>

namespace swc {

bool LabeledQuiver::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

LabeledQuiver root_configuration_quiver(const Quadruple& X) {
  if (!X.is_root_independent())
    throw NotInD("root configuration quivers need a root-independent object");
  auto roots = X.root_function();
  LabeledQuiver q;
  q.vertices = X.face;
  for (int i : X.face)
    for (int j : X.face) {
      if (i == j) continue;
      Rational b = X.system->bilinear(roots[i - 1], roots[j - 1]);
      if (Rational(i - j) * b > Rational(0)) q.arrows.insert({i, j});
    }
  return q;
}

namespace {

std::vector<int> undirected_neighbours(const LabeledQuiver& q, int v) {
  std::set<int> out;
  for (const auto& [a, b] : q.arrows) {
    if (a == v) out.insert(b);
    if (b == v) out.insert(a);
  }
  return {out.begin(), out.end()};
}

}  // namespace

bool is_tree(const LabeledQuiver& q) {
  // acyclic underlying graph: edges <= vertices - components
  std::map<int, int> comp;
  int nc = 0;
  for (int v : q.vertices) {
    if (comp.count(v)) continue;
    ++nc;
    std::vector<int> stack{v};
    comp[v] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : undirected_neighbours(q, u))
        if (!comp.count(w)) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
  }
  return q.arrows.size() + nc == q.vertices.size();
}

LabeledQuiver induced_subquiver(const LabeledQuiver& q, const std::vector<int>& verts) {
  LabeledQuiver out;
  out.vertices = verts;
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [a, b] : q.arrows)
    if (out.has_vertex(a) && out.has_vertex(b)) out.arrows.insert({a, b});
  return out;
}

std::vector<std::vector<int>> connected_components(const LabeledQuiver& q,
                                                   const std::vector<int>& verts) {
  LabeledQuiver sub = induced_subquiver(q, verts);
  std::set<int> todo(sub.vertices.begin(), sub.vertices.end());
  std::vector<std::vector<int>> out;
  while (!todo.empty()) {
    int start = *todo.begin();
    std::vector<int> comp, stack{start};
    todo.erase(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : undirected_neighbours(sub, u))
        if (todo.count(w)) {
          todo.erase(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> connected_subsets(const LabeledQuiver& q) {
  std::vector<std::vector<int>> out;
  const std::size_t n = q.vertices.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> verts;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) verts.push_back(q.vertices[k]);
    if (connected_components(q, verts).size() == 1) out.push_back(verts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeOrder::TreeOrder(const LabeledQuiver& q, const std::vector<int>& verts) : verts_(verts) {
  std::sort(verts_.begin(), verts_.end());
  LabeledQuiver sub = induced_subquiver(q, verts_);
  // antisymmetry needs acyclicity
  if (!is_tree(sub)) throw NotATree("order is only defined on tree quivers");
  for (int v : verts_) {
    std::set<int>& reach = below_[v];
    std::vector<int> stack{v};
    reach.insert(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : sub.arrows)
        if (a == u && !reach.count(b)) {
          reach.insert(b);
          stack.push_back(b);
        }
    }
  }
}

bool TreeOrder::leq(int a, int b) const {
  auto it = below_.find(b);
  if (it == below_.end()) throw Error("vertex not in order domain");
  return it->second.count(a) > 0;
}

bool admissible_mono_check(const LabeledQuiver& q, const std::vector<int>& J,
                           const std::vector<int>& H) {
  if (!is_tree(q)) throw NotATree("admissibility needs a tree quiver");
  for (int v : J)
    if (!std::count(H.begin(), H.end(), v)) throw ValidationError("J must be a subset of H");
  TreeOrder ord(q, H);
  for (int a : J)
    for (int b : H)
      if (ord.leq(b, a) && !std::count(J.begin(), J.end(), b)) return false;
  return true;
}

bool admissible_epi_check(const LabeledQuiver& q, const std::vector<int>& K,
                          const std::vector<int>& H) {
  if (!is_tree(q)) throw NotATree("admissibility needs a tree quiver");
  for (int v : K)
    if (!std::count(H.begin(), H.end(), v)) throw ValidationError("K must be a subset of H");
  TreeOrder ord(q, H);
  for (int a : K)
    for (int b : H)
      if (ord.leq(a, b) && !std::count(K.begin(), K.end(), b)) return false;
  return true;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> basic_admissible_sequences(
    const LabeledQuiver& q, const std::vector<int>& H) {
  if (!is_tree(q)) throw NotATree("admissibility needs a tree quiver");
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  const std::size_t n = H.size();
  std::vector<int> sorted = H;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> J, K;
    for (std::size_t k = 0; k < n; ++k)
      (mask & (std::size_t{1} << k) ? J : K).push_back(sorted[k]);
    if (admissible_mono_check(q, J, sorted) && admissible_epi_check(q, K, sorted))
      out.push_back({J, K});
  }
  return out;
}

SXObject make_sx_object(const LabeledQuiver& q, const std::vector<std::vector<int>>& parts) {
  SXObject o;
  for (const auto& part : parts) {
    for (int v : part)
      if (!q.has_vertex(v)) throw ValidationError("component vertex is not a quiver vertex");
    for (const auto& comp : connected_components(q, part)) o.comps.push_back(comp);
  }
  std::sort(o.comps.begin(), o.comps.end());
  return o;
}

namespace {

std::map<int, int> vertex_multiset(const SXObject& o) {
  std::map<int, int> m;
  for (const auto& c : o.comps)
    for (int v : c) ++m[v];
  return m;
}

// All multisets of connected blocks partitioning the given vertex multiset,
// blocks generated in non-decreasing lexicographic order so each multiset
// appears exactly once.
void enumerate_middles(const LabeledQuiver& q, std::map<int, int>& avail,
                       const std::vector<std::vector<int>>& blocks,
                       const std::vector<int>* min_block,
                       std::vector<std::vector<int>>& acc,
                       std::vector<std::vector<std::vector<int>>>& out) {
  int least = 0;
  bool any = false;
  for (const auto& [v, c] : avail)
    if (c > 0) {
      least = v;
      any = true;
      break;
    }
  if (!any) {
    out.push_back(acc);
    return;
  }
  for (const auto& blk : blocks) {
    if (!std::count(blk.begin(), blk.end(), least)) continue;
    if (min_block && blk < *min_block) continue;
    bool fits = true;
    for (int v : blk)
      if (avail[v] <= 0) {
        fits = false;
        break;
      }
    if (!fits) continue;
    for (int v : blk) --avail[v];
    acc.push_back(blk);
    enumerate_middles(q, avail, blocks, &blk, acc, out);
    acc.pop_back();
    for (int v : blk) ++avail[v];
  }
}

}  // namespace

SxSum sx_hall_product(const LabeledQuiver& q, const SxSum& a, const SxSum& b) {
  if (!is_tree(q)) throw NotATree("the Hall product needs a tree quiver");
  SxSum out;
  auto blocks = connected_subsets(q);
  for (const auto& [oa, ca] : a)
    for (const auto& [ob, cb] : b) {
      std::map<int, int> avail = vertex_multiset(oa);
      for (const auto& [v, c] : vertex_multiset(ob)) avail[v] += c;
      std::vector<std::vector<std::vector<int>>> middles;
      std::vector<std::vector<int>> acc;
      enumerate_middles(q, avail, blocks, nullptr, acc, middles);
      for (const auto& mid : middles) {
        // options per component instance: admissible (J, K) partitions
        std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> options;
        for (const auto& comp : mid) options.push_back(basic_admissible_sequences(q, comp));
        long long count = 0;
        std::vector<std::size_t> idx(mid.size(), 0);
        while (true) {
          SXObject sub, quot;
          for (std::size_t i = 0; i < mid.size(); ++i) {
            const auto& [J, K] = options[i][idx[i]];
            for (const auto& c : connected_components(q, J)) sub.comps.push_back(c);
            for (const auto& c : connected_components(q, K)) quot.comps.push_back(c);
          }
          std::sort(sub.comps.begin(), sub.comps.end());
          std::sort(quot.comps.begin(), quot.comps.end());
          if (sub == oa && quot == ob) ++count;
          std::size_t i = 0;
          for (; i < mid.size(); ++i) {
            if (++idx[i] < options[i].size()) break;
            idx[i] = 0;
          }
          if (i == mid.size()) break;
        }
        if (count) {
          SXObject key;
          key.comps = mid;
          std::sort(key.comps.begin(), key.comps.end());
          out[key] += ca * cb * count;
        }
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

SxTensor sx_coproduct(const SXObject& x) {
  // group equal components, then split each group's multiplicity
  std::vector<std::pair<std::vector<int>, int>> groups;
  for (const auto& c : x.comps) {
    if (!groups.empty() && groups.back().first == c)
      ++groups.back().second;
    else
      groups.emplace_back(c, 1);
  }
  SxTensor out;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    SXObject lhs, rhs;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (int k = 0; k < take[g]; ++k) lhs.comps.push_back(groups[g].first);
      for (int k = take[g]; k < groups[g].second; ++k) rhs.comps.push_back(groups[g].first);
    }
    out[{lhs, rhs}] += 1;
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (++take[g] <= groups[g].second) break;
      take[g] = 0;
    }
    if (g == groups.size()) break;
  }
  return out;
}

int partner_position(const Quadruple& X, int i) {
  if (!X.in_face(i)) throw NoPartner("partner positions are defined for folded positions");
  Flat F = flat_of_subspace(X, {i});
  std::vector<int> trav;
  for (int p : F)
    if (!X.in_face(p)) trav.push_back(p);
  if (trav.size() != 1)
    throw NoPartner("the rank-one flat through the position has no unique traversing position");
  return trav[0];
}

bool is_special_vertex(const Quadruple& X, int i) {
  int ip = partner_position(X, i);
  int lo = std::min(i, ip), hi = std::max(i, ip);
  LabeledQuiver q = root_configuration_quiver(X);
  bool all_in = true, all_out = true;
  for (int v : undirected_neighbours(q, i)) {
    if (lo <= v && v <= hi)
      all_out = false;
    else
      all_in = false;
  }
  return all_in || all_out;
}

std::pair<Quadruple, LabeledQuiver> flip_reflection(const Quadruple& X, int i) {
  if (!X.is_root_independent()) throw NotInD("flip reflection needs a root-independent object");
  // a longest element exists only in a finite group; beyond that the
  // reflection identity is asserted on the result rather than gated on pi,
  // since it holds for any flip at a special vertex
  if (!X.system->finite())
    throw NotLongestElement("flip reflection needs a finite Coxeter group");
  if (!is_special_vertex(X, i)) throw NotSpecial("vertex is not special");

  int ip = partner_position(X, i);
  LabeledQuiver gx = root_configuration_quiver(X);
  Flat F = flat_of_subspace(X, {i});
  Quadruple Y = flip(X, F, i);
  LabeledQuiver gy = root_configuration_quiver(Y);

  // expected: relabel i by i', revert arrows adjacent to i
  LabeledQuiver expected;
  for (int v : gx.vertices) expected.vertices.push_back(v == i ? ip : v);
  std::sort(expected.vertices.begin(), expected.vertices.end());
  for (auto [a, b] : gx.arrows) {
    if (a == i)
      expected.arrows.insert({b, ip});
    else if (b == i)
      expected.arrows.insert({ip, a});
    else
      expected.arrows.insert({a, b});
  }
  if (!(gy == expected))
    throw Error("flip did not reflect the root configuration quiver");
  return {Y, gy};
}

}  // namespace swc

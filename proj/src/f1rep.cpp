#include "swc/f1rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace swc {

namespace {

// Subsets of the support closed under arrow targets within the support.
std::vector<std::vector<int>> successor_closed_subsets(const LabeledQuiver& q,
                                                       const std::vector<int>& support) {
  std::vector<std::vector<int>> out;
  const std::size_t n = support.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (std::size_t{1} << k)) sub.push_back(support[k]);
    bool closed = true;
    for (const auto& [a, b] : q.arrows) {
      if (!std::count(sub.begin(), sub.end(), a)) continue;
      if (!std::count(support.begin(), support.end(), b)) continue;
      if (!std::count(sub.begin(), sub.end(), b)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(sub);
  }
  return out;
}

std::vector<int> complement_of(const std::vector<int>& inside, const std::vector<int>& whole) {
  std::vector<int> out;
  for (int v : whole)
    if (!std::count(inside.begin(), inside.end(), v)) out.push_back(v);
  return out;
}

std::map<int, int> vertex_multiset(const F1Rep& m) {
  std::map<int, int> out;
  for (const auto& s : m.summands)
    for (int v : s) ++out[v];
  return out;
}

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

F1Rep make_f1rep(const LabeledQuiver& q, const std::vector<std::vector<int>>& supports) {
  F1Rep m;
  for (const auto& s : supports) {
    for (int v : s)
      if (!q.has_vertex(v)) throw ValidationError("support vertex is not a quiver vertex");
    auto comps = connected_components(q, s);
    for (const auto& c : comps) m.summands.push_back(c);
  }
  std::sort(m.summands.begin(), m.summands.end());
  return m;
}

std::vector<LabeledQuiver> indecomposables(const LabeledQuiver& q) {
  if (!is_tree(q)) throw NotATree("indecomposables are classified for tree quivers only");
  std::vector<LabeledQuiver> out;
  for (const auto& verts : connected_subsets(q)) out.push_back(induced_subquiver(q, verts));
  return out;
}

std::vector<F1Rep> subrepresentations(const LabeledQuiver& q, const F1Rep& m) {
  if (!is_tree(q)) throw NotATree("subrepresentations are enumerated for tree quivers only");
  std::set<F1Rep> seen;
  std::vector<std::vector<std::vector<int>>> options;
  for (const auto& s : m.summands) options.push_back(successor_closed_subsets(q, s));
  std::vector<std::size_t> idx(options.size(), 0);
  while (true) {
    std::vector<std::vector<int>> picked;
    for (std::size_t i = 0; i < options.size(); ++i) picked.push_back(options[i][idx[i]]);
    seen.insert(make_f1rep(q, picked));
    std::size_t i = 0;
    for (; i < options.size(); ++i) {
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
    }
    if (i == options.size()) break;
  }
  return {seen.begin(), seen.end()};
}

F1Sum f1_hall_product(const LabeledQuiver& q, const F1Sum& a, const F1Sum& b) {
  if (!is_tree(q)) throw NotATree("the Hall product needs a tree quiver");
  F1Sum out;
  auto blocks = connected_subsets(q);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::map<int, int> avail = vertex_multiset(ma);
      for (const auto& [v, c] : vertex_multiset(mb)) avail[v] += c;
      std::vector<std::vector<std::vector<int>>> middles;
      std::vector<std::vector<int>> acc;
      enumerate_middles(q, avail, blocks, nullptr, acc, middles);
      for (const auto& mid : middles) {
        // count embeddings: a successor-closed subset per summand instance
        std::vector<std::vector<std::vector<int>>> options;
        for (const auto& s : mid) options.push_back(successor_closed_subsets(q, s));
        long long count = 0;
        std::vector<std::size_t> idx(mid.size(), 0);
        while (true) {
          F1Rep sub, quot;
          for (std::size_t i = 0; i < mid.size(); ++i) {
            for (const auto& c : connected_components(q, options[i][idx[i]]))
              sub.summands.push_back(c);
            for (const auto& c :
                 connected_components(q, complement_of(options[i][idx[i]], mid[i])))
              quot.summands.push_back(c);
          }
          std::sort(sub.summands.begin(), sub.summands.end());
          std::sort(quot.summands.begin(), quot.summands.end());
          if (sub == ma && quot == mb) ++count;
          std::size_t i = 0;
          for (; i < mid.size(); ++i) {
            if (++idx[i] < options[i].size()) break;
            idx[i] = 0;
          }
          if (i == mid.size()) break;
        }
        if (count) {
          F1Rep key;
          key.summands = mid;
          std::sort(key.summands.begin(), key.summands.end());
          out[key] += ca * cb * count;
        }
      }
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<SummandSequence> decomposition_check(const LabeledQuiver& q, const F1Sequence& seq) {
  if (!is_tree(q)) throw NotATree("sequence decomposition needs a tree quiver");
  if (seq.sub_supports.size() != seq.middle.summands.size())
    throw NotDecomposable("embedding data must align with the middle's summands");
  std::vector<SummandSequence> out;
  F1Rep all_subs, all_quots;
  for (std::size_t i = 0; i < seq.middle.summands.size(); ++i) {
    const auto& support = seq.middle.summands[i];
    const auto& inside = seq.sub_supports[i];
    for (int v : inside)
      if (!std::count(support.begin(), support.end(), v))
        throw NotDecomposable("sub support must sit inside its middle summand");
    auto closed = successor_closed_subsets(q, support);
    std::vector<int> sorted_inside = inside;
    std::sort(sorted_inside.begin(), sorted_inside.end());
    if (!std::count(closed.begin(), closed.end(), sorted_inside))
      throw NotDecomposable("sub support is not closed under arrow targets");
    SummandSequence s;
    s.middle = support;
    s.sub_parts = make_f1rep(q, {sorted_inside});
    s.quot_parts = make_f1rep(q, {complement_of(sorted_inside, support)});
    for (const auto& c : s.sub_parts.summands) all_subs.summands.push_back(c);
    for (const auto& c : s.quot_parts.summands) all_quots.summands.push_back(c);
    out.push_back(std::move(s));
  }
  std::sort(all_subs.summands.begin(), all_subs.summands.end());
  std::sort(all_quots.summands.begin(), all_quots.summands.end());
  if (all_subs != seq.sub || all_quots != seq.quot)
    throw NotDecomposable("summand sequences do not reassemble the given end terms");
  return out;
}

namespace {

std::string f1_to_string(const F1Rep& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m.summands[i].size(); ++j)
      os << (j ? "," : "") << m.summands[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

// All multisets of connected subsets with total vertex count <= bound.
std::vector<F1Rep> classes_up_to(const LabeledQuiver& q, int bound) {
  std::vector<F1Rep> out{F1Rep{}};
  auto blocks = connected_subsets(q);
  std::function<void(std::size_t, int, std::vector<std::vector<int>>&)> rec =
      [&](std::size_t from, int left, std::vector<std::vector<int>>& acc) {
        for (std::size_t i = from; i < blocks.size(); ++i) {
          if (static_cast<int>(blocks[i].size()) > left) continue;
          acc.push_back(blocks[i]);
          F1Rep m;
          m.summands = acc;
          std::sort(m.summands.begin(), m.summands.end());
          out.push_back(m);
          rec(i, left - static_cast<int>(blocks[i].size()), acc);
          acc.pop_back();
        }
      };
  std::vector<std::vector<int>> acc;
  rec(0, bound, acc);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PsiReport psi_iso_check(const Quadruple& X) {
  PsiReport report;
  LabeledQuiver q = root_configuration_quiver(X);
  if (!is_tree(q)) throw NotATree("the Hall algebra comparison needs a tree quiver");
  const int bound = static_cast<int>(X.face.size());
  auto classes = classes_up_to(q, bound);
  for (const auto& a : classes)
    for (const auto& b : classes) {
      int total = 0;
      for (const auto& s : a.summands) total += static_cast<int>(s.size());
      for (const auto& s : b.summands) total += static_cast<int>(s.size());
      if (total > bound || total == 0) continue;
      ++report.pairs_checked;
      SXObject sa{a.summands}, sb{b.summands};
      SxSum sx = sx_hall_product(q, {{sa, 1}}, {{sb, 1}});
      F1Sum f1 = f1_hall_product(q, {{a, 1}}, {{b, 1}});
      // transport through the support bijection
      F1Sum sx_transported;
      for (const auto& [k, c] : sx) sx_transported[F1Rep{k.comps}] = c;
      if (sx_transported != f1) {
        report.mismatches.push_back("product mismatch at " + f1_to_string(a) + " * " +
                                    f1_to_string(b));
      }
    }
  report.pass = report.mismatches.empty();
  return report;
}

LabeledQuiver equioriented_a_n(int n) {
  LabeledQuiver q;
  for (int i = 1; i <= n; ++i) q.vertices.push_back(i);
  for (int i = 1; i < n; ++i) q.arrows.insert({i, i + 1});
  return q;
}

bool serre_check(int n) {
  if (n < 2) throw ValidationError("the relation check needs at least two vertices");
  LabeledQuiver q = equioriented_a_n(n);
  auto simple = [&](int i) { return F1Sum{{make_f1rep(q, {{i}}), 1}}; };
  auto mul = [&](const F1Sum& x, const F1Sum& y) { return f1_hall_product(q, x, y); };
  auto add = [](F1Sum x, const F1Sum& y, long long scale) {
    for (const auto& [k, c] : y) {
      x[k] += scale * c;
      if (x[k] == 0) x.erase(k);
    }
    return x;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      F1Sum ei = simple(i), ej = simple(j);
      if (std::abs(i - j) >= 2) {
        if (mul(ei, ej) != mul(ej, ei)) return false;
      } else {
        // e_i^2 e_j - 2 e_i e_j e_i + e_j e_i^2
        F1Sum term = mul(mul(ei, ei), ej);
        term = add(term, mul(mul(ei, ej), ei), -2);
        term = add(term, mul(mul(ej, ei), ei), 1);
        if (!term.empty()) return false;
      }
    }
  return true;
}

F1Sum primitive_lie_bracket(const LabeledQuiver& q, const F1Rep& a, const F1Rep& b) {
  if (a.summands.size() != 1 || b.summands.size() != 1)
    throw ValidationError("the bracket is defined on connected classes");
  F1Sum ab = f1_hall_product(q, {{a, 1}}, {{b, 1}});
  F1Sum ba = f1_hall_product(q, {{b, 1}}, {{a, 1}});
  F1Sum out = ab;
  for (const auto& [k, c] : ba) {
    out[k] -= c;
    if (out[k] == 0) out.erase(k);
  }
  for (const auto& [k, c] : out)
    if (k.summands.size() != 1)
      throw Error("commutator of connected classes left a disconnected term");
  return out;
}

}  // namespace swc

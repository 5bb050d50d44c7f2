#include "torslab/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace torslab {

void Poset::init_from_up(int n, std::vector<Bitset> up) {
  n_ = n;
  up_ = std::move(up);
  down_.assign(n_, Bitset(n_));
  for (int i = 0; i < n_; ++i)
    up_[i].for_each([&](int j) { down_[j].set(i); });

  // covers: b < a with no x strictly between
  covers_.clear();
  upper_covers_.assign(n_, {});
  lower_covers_.assign(n_, {});
  for (int a = 0; a < n_; ++a) {
    Bitset strict_down = down_[a];
    strict_down.reset(a);
    strict_down.for_each([&](int b) {
      Bitset between = strict_down & up_[b];
      between.reset(b);
      if (between.none()) {
        covers_.push_back({a, b});
        upper_covers_[b].push_back(a);
        lower_covers_[a].push_back(b);
      }
    });
  }
}

Poset Poset::from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
  if (n < 0) fail(ErrKind::NotAPoset, "negative element count");
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrKind::UnknownElement, "relation pair out of range");
    up[a].set(b);
  }
  // Warshall closure over bitset rows
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (up[i].test(j) && up[j].test(i))
        fail(ErrKind::NotAPoset, "antisymmetry violated (cycle through " + std::to_string(i) +
                                     " and " + std::to_string(j) + ")");
  Poset p;
  p.init_from_up(n, std::move(up));
  return p;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (lower_covers_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (upper_covers_[i].empty()) out.push_back(i);
  return out;
}

int Poset::height() const {
  // longest path in the cover DAG, processing elements by down-set size
  std::vector<int> order(n_), h(n_, 1);
  for (int i = 0; i < n_; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  int best = 0;
  for (int v : order) {
    for (int c : lower_covers_[v]) h[v] = std::max(h[v], h[c] + 1);
    best = std::max(best, h[v]);
  }
  return best;
}

FinLattice FinLattice::build(int n, const std::vector<std::pair<int, int>>& leq_pairs) {
  return from_poset(Poset::from_pairs(n, leq_pairs));
}

FinLattice FinLattice::from_poset(Poset p) {
  FinLattice l;
  static_cast<Poset&>(l) = std::move(p);
  l.build_tables();
  return l;
}

void FinLattice::build_tables() {
  if (n_ == 0) fail(ErrKind::NotALattice, "empty lattice has no top/bottom");

  // scan order by down-set size descending: the maximum of a candidate set,
  // if it exists, is met early
  std::vector<int> by_big_down(n_), by_big_up(n_);
  for (int i = 0; i < n_; ++i) by_big_down[i] = by_big_up[i] = i;
  std::stable_sort(by_big_down.begin(), by_big_down.end(),
                   [&](int a, int b) { return down_[a].count() > down_[b].count(); });
  std::stable_sort(by_big_up.begin(), by_big_up.end(),
                   [&](int a, int b) { return up_[a].count() > up_[b].count(); });

  meet_.assign(size_t(n_) * n_, -1);
  join_.assign(size_t(n_) * n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = a; b < n_; ++b) {
      Bitset lo = down_[a] & down_[b];
      int m = -1;
      for (int c : by_big_down)
        if (lo.test(c) && lo.subset_of(down_[c])) {
          m = c;
          break;
        }
      if (m < 0)
        fail(ErrKind::NotALattice,
             "no meet for " + std::to_string(a) + ", " + std::to_string(b));
      Bitset hi = up_[a] & up_[b];
      int j = -1;
      for (int c : by_big_up)
        if (hi.test(c) && hi.subset_of(up_[c])) {
          j = c;
          break;
        }
      if (j < 0)
        fail(ErrKind::NotALattice,
             "no join for " + std::to_string(a) + ", " + std::to_string(b));
      meet_[size_t(a) * n_ + b] = meet_[size_t(b) * n_ + a] = m;
      join_[size_t(a) * n_ + b] = join_[size_t(b) * n_ + a] = j;
    }
  }
  auto mins = minimal_elements();
  auto maxs = maximal_elements();
  if (mins.size() != 1 || maxs.size() != 1)
    fail(ErrKind::NotALattice, "top or bottom not unique");
  bottom_ = mins[0];
  top_ = maxs[0];
}

int FinLattice::bound(BoundKind kind, std::span<const int> xs) const {
  int acc = kind == BoundKind::Meet ? top_ : bottom_;
  for (int x : xs) {
    if (x < 0 || x >= n_) fail(ErrKind::UnknownElement, "element id " + std::to_string(x));
    acc = kind == BoundKind::Meet ? meet(acc, x) : join(acc, x);
  }
  return acc;
}

int FinLattice::bound(BoundKind kind, const Bitset& xs) const {
  int acc = kind == BoundKind::Meet ? top_ : bottom_;
  xs.for_each([&](int x) { acc = kind == BoundKind::Meet ? meet(acc, x) : join(acc, x); });
  return acc;
}

bool FinLattice::is_completely_semidistributive() const {
  // Pairwise form; in a finite lattice the arbitrary-subset form follows by
  // induction on the subset, so this check is equivalent.
  for (int a = 0; a < n_; ++a)
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y) {
        if (join(a, x) == join(a, y) && join(a, meet(x, y)) != join(a, x)) return false;
        if (meet(a, x) == meet(a, y) && meet(a, join(x, y)) != meet(a, x)) return false;
      }
  return true;
}

std::vector<int> FinLattice::irreducibles(IrrKind kind) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    const auto& cov = kind == IrrKind::Join ? lower_covers_[i] : upper_covers_[i];
    if (cov.size() == 1) out.push_back(i);
  }
  return out;
}

int FinLattice::lower_star(int l) const {
  if (l < 0 || l >= n_) fail(ErrKind::UnknownElement, "element id " + std::to_string(l));
  Bitset strict = down_[l];
  strict.reset(l);
  return bound(BoundKind::Join, strict);
}

int FinLattice::mu_label(HasseArrow arrow) const {
  auto [a, b] = arrow;
  if (a < 0 || a >= n_ || b < 0 || b >= n_) fail(ErrKind::UnknownElement, "arrow endpoint");
  const auto& lc = lower_covers_[a];
  if (std::find(lc.begin(), lc.end(), b) == lc.end())
    fail(ErrKind::UnknownElement,
         std::to_string(a) + " -> " + std::to_string(b) + " is not a Hasse arrow");
  // unique maximum of {x | a /\ x = b}
  Bitset cand(n_);
  for (int x = 0; x < n_; ++x)
    if (meet(a, x) == b) cand.set(x);
  int best = -1;
  cand.for_each([&](int x) {
    if (best < 0 || lt(best, x)) best = x;
  });
  // best is now some maximal candidate; it is the max iff it dominates all
  if (best < 0 || !cand.subset_of(down_[best]))
    fail(ErrKind::NoUniqueMax, "no unique maximum for arrow " + std::to_string(a) + " -> " +
                                   std::to_string(b) + " (input not semidistributive)");
  return best;
}

int FinLattice::kappa(int j) const {
  if (j < 0 || j >= n_) fail(ErrKind::UnknownElement, "element id " + std::to_string(j));
  if (lower_covers_[j].size() != 1)
    fail(ErrKind::NotJoinIrreducible, "element " + std::to_string(j));
  return mu_label({j, lower_covers_[j][0]});
}

std::vector<int> FinLattice::canonical_join_rep(int x) const {
  if (x < 0 || x >= n_) fail(ErrKind::UnknownElement, "element id " + std::to_string(x));
  std::vector<int> rep;
  for (int c : lower_covers_[x]) {
    // unique minimal y <= x with y \/ c = x
    Bitset cand(n_);
    down_[x].for_each([&](int y) {
      if (join(y, c) == x) cand.set(y);
    });
    int best = -1;
    cand.for_each([&](int y) {
      if (best < 0 || lt(y, best)) best = y;
    });
    if (best < 0 || !cand.subset_of(up_[best]))
      fail(ErrKind::NotCanonical, "cover " + std::to_string(x) + " -> " + std::to_string(c) +
                                      " has no unique minimal joinand");
    rep.push_back(best);
  }
  std::sort(rep.begin(), rep.end());
  rep.erase(std::unique(rep.begin(), rep.end()), rep.end());

  // validation: antichain, join = x, and refinement of every join
  // representation of x. The refinement clause is equivalent to: for each
  // joinand a, the join of {y <= x | y >= a fails} stays below x; otherwise
  // that set is itself a join representation no element of which lies above
  // a.
  for (int a : rep)
    for (int b : rep)
      if (a != b && leq(a, b)) fail(ErrKind::NotCanonical, "joinands are not an antichain");
  if (bound(BoundKind::Join, rep) != x)
    fail(ErrKind::NotCanonical, "joinands do not join to the element");
  for (int a : rep) {
    Bitset avoid = down_[x];
    avoid.andnot(up_[a]);
    if (bound(BoundKind::Join, avoid) == x)
      fail(ErrKind::NotCanonical, "refinement fails at joinand " + std::to_string(a));
  }
  return rep;
}

int FinLattice::extended_kappa(int x) const {
  auto rep = canonical_join_rep(x);
  std::vector<int> ks;
  ks.reserve(rep.size());
  for (int j : rep) ks.push_back(kappa(j));
  return bound(BoundKind::Meet, ks);
}

KappaData compute_kappa_data(const FinLattice& l) {
  int n = l.size();
  KappaData d{Bitset(n), Bitset(n), std::vector<int>(n, -1), std::vector<int>(n, -1),
              std::vector<std::optional<std::vector<int>>>(n), std::vector<int>(n, -1)};
  for (int j : l.irreducibles(IrrKind::Join)) {
    d.jirr.set(j);
    d.lower_star[j] = l.lower_star(j);
    try {
      d.kappa[j] = l.kappa(j);
    } catch (const Error&) {
      // stays undefined
    }
  }
  for (int m : l.irreducibles(IrrKind::Meet)) d.mirr.set(m);
  for (int x = 0; x < n; ++x) {
    try {
      d.cjr[x] = l.canonical_join_rep(x);
    } catch (const Error&) {
      continue;
    }
    try {
      d.ext_kappa[x] = l.extended_kappa(x);
    } catch (const Error&) {
    }
  }
  return d;
}

KappaPoset kappa_poset(const FinLattice& l) {
  KappaData d = compute_kappa_data(l);
  KappaPoset out;
  for (int x = 0; x < l.size(); ++x)
    if (d.cjr[x] && d.ext_kappa[x] >= 0) out.elements.push_back(x);
  int m = int(out.elements.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int a = out.elements[i], b = out.elements[j];
      if (l.leq(a, b) && l.leq(d.ext_kappa[b], d.ext_kappa[a])) pairs.push_back({i, j});
    }
  out.poset = Poset::from_pairs(m, pairs);
  return out;
}

namespace {

bool extend_isomorphism(const Poset& p, const Poset& q, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
  int n = p.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (p.leq(prev, next) != q.leq(map[prev], cand)) ok = false;
      if (p.leq(next, prev) != q.leq(cand, map[prev])) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(p, q, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.size() > 20) fail(ErrKind::TooLarge, "generic isomorphism search limited to 20 elements");
  std::vector<int> map(p.size(), -1);
  std::vector<bool> used(p.size(), false);
  if (extend_isomorphism(p, q, map, used, 0)) return map;
  return std::nullopt;
}

bool is_poset_isomorphism(const Poset& p, const Poset& q, std::span<const int> map) {
  if (p.size() != q.size() || int(map.size()) != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (int v : map) {
    if (v < 0 || v >= q.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
  return true;
}

nlohmann::json lattice_to_json(const Poset& p) {
  nlohmann::json j;
  j["n"] = p.size();
  auto leq = nlohmann::json::array();
  for (int a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](int b) {
      if (a != b) leq.push_back({a, b});
    });
  j["leq"] = std::move(leq);
  auto covers = nlohmann::json::array();
  for (auto arrow : p.covers()) covers.push_back({arrow.src, arrow.dst});
  j["covers"] = std::move(covers);
  return j;
}

FinLattice lattice_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("leq")) pairs.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return FinLattice::build(n, pairs);
}

std::string poset_to_dot(const Poset& p, const std::vector<std::string>& node_labels,
                         const std::vector<std::string>& edge_labels) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i) {
    os << "  n" << i;
    if (int(node_labels.size()) > i && !node_labels[i].empty()) {
      std::string esc;
      for (char c : node_labels[i]) {
        if (c == '"' || c == '\\') esc += '\\';
        esc += c;
      }
      os << " [label=\"" << esc << "\"]";
    }
    os << ";\n";
  }
  const auto& covers = p.covers();
  for (size_t k = 0; k < covers.size(); ++k) {
    os << "  n" << covers[k].src << " -> n" << covers[k].dst;
    if (edge_labels.size() > k && !edge_labels[k].empty())
      os << " [label=\"" << edge_labels[k] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace torslab

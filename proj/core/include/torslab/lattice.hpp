#ifndef TORSLAB_LATTICE_HPP
#define TORSLAB_LATTICE_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "torslab/bitset.hpp"
#include "torslab/errors.hpp"

namespace torslab {

// A cover relation src > dst with nothing strictly between.
struct HasseArrow {
  int src = -1;
  int dst = -1;
  bool operator==(const HasseArrow&) const = default;
};

/*
 * Finite poset over dense integer element ids 0..n-1. Immutable after
 * construction; all queries are pure.
 */
class Poset {
 public:
  Poset() = default;

  // Builds from an arbitrary relation; the reflexive-transitive closure is
  // taken and antisymmetry is verified.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& leq_pairs);

  int size() const { return n_; }
  bool leq(int a, int b) const { return up_[a].test(b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  // All x with a <= x (including a), as a bitset; dually down().
  const Bitset& up(int a) const { return up_[a]; }
  const Bitset& down(int a) const { return down_[a]; }

  const std::vector<HasseArrow>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int a) const { return upper_covers_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lower_covers_[a]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Longest chain length counted in elements (0 for the empty poset).
  int height() const;

 protected:
  void init_from_up(int n, std::vector<Bitset> up);

  int n_ = 0;
  std::vector<Bitset> up_, down_;
  std::vector<HasseArrow> covers_;
  std::vector<std::vector<int>> upper_covers_, lower_covers_;
};

enum class BoundKind { Meet, Join };
enum class IrrKind { Join, Meet };

/*
 * Finite lattice: a poset in which every pair has a unique meet and join
 * (hence arbitrary subsets do, including the empty one). Meet and join are
 * precomputed tables; top and bottom always exist.
 */
class FinLattice : public Poset {
 public:
  FinLattice() = default;

  static FinLattice build(int n, const std::vector<std::pair<int, int>>& leq_pairs);
  static FinLattice from_poset(Poset p);

  int top() const { return top_; }
  int bottom() const { return bottom_; }

  int meet(int a, int b) const { return meet_[size_t(a) * n_ + b]; }
  int join(int a, int b) const { return join_[size_t(a) * n_ + b]; }

  // meet of the empty set is top, join of the empty set is bottom
  int bound(BoundKind kind, std::span<const int> xs) const;
  int bound(BoundKind kind, const Bitset& xs) const;

  bool is_completely_semidistributive() const;

  // Completely irreducible elements. In a finite lattice these are exactly
  // the elements with a unique lower (resp. upper) cover.
  std::vector<int> irreducibles(IrrKind kind) const;

  // l_* = join of all x < l; for a join-irreducible this is its unique lower
  // cover.
  int lower_star(int l) const;

  // mu(a->b) = max{x | a /\ x = b}; the arrow must be a cover.
  int mu_label(HasseArrow arrow) const;

  // kappa(j) = mu(j -> j_*); j must be join-irreducible.
  int kappa(int j) const;

  // Canonical join representation: the unique antichain A with \/A = x that
  // refines every join representation of x. Computed from the lower covers
  // of x and then validated, so a malformed (non-semidistributive) input
  // fails loudly with NotCanonical.
  std::vector<int> canonical_join_rep(int x) const;

  // kappa-bar: meet of kappa over the canonical joinands.
  int extended_kappa(int x) const;

 private:
  void build_tables();

  int top_ = -1, bottom_ = -1;
  std::vector<int> meet_, join_;
};

struct KappaData {
  Bitset jirr, mirr;
  std::vector<int> lower_star;            // -1 outside jirr
  std::vector<int> kappa;                 // -1 where undefined
  std::vector<std::optional<std::vector<int>>> cjr;
  std::vector<int> ext_kappa;             // -1 where undefined
};

// Evaluates the partial maps everywhere, recording failures as "undefined"
// instead of throwing.
KappaData compute_kappa_data(const FinLattice& l);

// Poset (L0, <=_kappa): a <=_k b iff a <= b and kbar(a) >= kbar(b), on the
// elements where the canonical join representation (and kappa-bar) exists.
// Elements keep their ids from l; for semidistributive input L0 is all of L.
struct KappaPoset {
  std::vector<int> elements;  // ids in l
  Poset poset;                // over 0..elements.size()-1, same order
};
KappaPoset kappa_poset(const FinLattice& l);

// Generic isomorphism search, refused above 20 elements (TooLarge).
std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q);

// Checks a candidate map: bijective and order-preserving in both directions.
bool is_poset_isomorphism(const Poset& p, const Poset& q, std::span<const int> map);

// {"n": int, "leq": [[i,j],...], "covers": [[i,j],...]}
nlohmann::json lattice_to_json(const Poset& p);
FinLattice lattice_from_json(const nlohmann::json& j);

// DOT digraph; nodes are ids, edges are covers (drawn src -> dst), with
// optional labels per node / per edge (empty string = no label).
std::string poset_to_dot(const Poset& p, const std::vector<std::string>& node_labels = {},
                         const std::vector<std::string>& edge_labels = {});

}  // namespace torslab

#endif

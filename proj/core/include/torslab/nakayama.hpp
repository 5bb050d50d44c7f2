#ifndef TORSLAB_NAKAYAMA_HPP
#define TORSLAB_NAKAYAMA_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torslab/errors.hpp"

namespace torslab {

enum class QuiverShape { Linear, Cyclic };

/*
 * A Nakayama algebra, given by quiver shape and Kupisch series c_1..c_n
 * (c_i = length of the projective at vertex i). Vertices are 1-based; the
 * quiver arrows run i -> i+1, wrapping around for the cyclic shape.
 *
 * Valid series:
 *   linear:  c_n = 1,  c_{i+1} >= c_i - 1,  c_i <= n - i + 1
 *   cyclic:  c_i >= 2, c_{i+1 mod n} >= c_i - 1, c_i <= cyclic_cap
 */
struct AlgebraSpec {
  QuiverShape shape = QuiverShape::Linear;
  std::vector<int> kupisch;
  int cyclic_cap = 0;  // 0 = default bound 2n+1

  static AlgebraSpec linear_path(int n);  // hereditary: kupisch n, n-1, ..., 1

  // Grammar: "linA:<n>" or "nakayama:<linear|cyclic>:<c1,...,cn>".
  static AlgebraSpec parse(std::string_view text);

  std::string to_string() const;
  void validate() const;  // throws InvalidKupisch

  int vertices() const { return int(kupisch.size()); }
  // 1-based successor vertex, wrapping when cyclic
  int next_vertex(int v, int steps = 1) const;
  bool linear() const { return shape == QuiverShape::Linear; }

  bool operator==(const AlgebraSpec&) const = default;
};

// An indecomposable: the uniserial module with composition series
// S_top, S_{top+1}, ..., S_{top+len-1} read from the top down.
struct Indec {
  int top = 0;
  int len = 0;
  auto operator<=>(const Indec&) const = default;
};

std::string to_string(const Indec& m);  // "M(top,len)"

// One basis morphism src -> dst: quotient of src of length t composed with
// the inclusion of the length-t submodule of dst.
struct HomArrow {
  Indec src, dst;
  int t = 0;
  bool injective() const { return t == src.len; }
  bool surjective() const { return t == dst.len; }
};

enum class FactorKind { Quotients, Submodules };

bool is_valid_indec(const AlgebraSpec& a, const Indec& m);
void require_indec(const AlgebraSpec& a, const Indec& m);

// All M(i,l) with 1 <= l <= c_i, ordered by vertex then length.
std::vector<Indec> indecomposables(const AlgebraSpec& a);

// dim Hom(m, x): the number of t in [1, min(len m, len x)] with
// top(m) = top(x) + len(x) - t, taken mod n for the cyclic shape.
int hom_dim(const AlgebraSpec& a, const Indec& m, const Indec& x);
std::vector<HomArrow> hom_arrows(const AlgebraSpec& a, const Indec& m, const Indec& x);

// Quotients keep the top: M(i,t); submodules keep the socle: M(i+len-t, t).
std::vector<Indec> factors(const AlgebraSpec& a, const Indec& m, FactorKind kind,
                           bool proper = false);

// An indecomposable is a brick iff its endomorphism space is 1-dimensional;
// over this family that means len <= n (always true for the linear shape).
bool is_brick(const AlgebraSpec& a, const Indec& m);

void to_json(nlohmann::json& j, const Indec& m);
void from_json(const nlohmann::json& j, Indec& m);

}  // namespace torslab

#endif

// orbit.hpp -- the commutative group of orbit classes of proper clopen
// sets.  Residues mod n-1 model the classes; every residue-level claim is
// re-checkable through explicit set-level witnesses, so the model is an
// oracle-checked shortcut rather than an assumption.

#pragma once

#include "vigor/witness.hpp"

namespace vigor {

struct OrbitClass {
  int n;
  int residue;  // in [0, n-1); always 0 when n = 2

  OrbitClass(Arity arity, int r) : n(arity.n) {
    residue = ((r % (n - 1)) + (n - 1)) % (n - 1);
  }
  friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
    return a.n == b.n && a.residue == b.residue;
  }
};

inline OrbitClass class_of(const ClopenSet& a) {
  if (!a.is_proper() || a.is_empty())
    throw Error("class_of: need a proper non-empty clopen set");
  return OrbitClass(Arity(a.arity()), a.weight());
}

inline OrbitClass zero_class(Arity arity) { return OrbitClass(arity, 0); }
inline OrbitClass total_class(Arity arity) { return OrbitClass(arity, 1); }

// First m cones of depth 2, where m is the least positive cone count in
// the residue class.
inline ClopenSet representative_of(Arity arity, int r) {
  int n = arity.n;
  int m = ((r % (n - 1)) + (n - 1)) % (n - 1);
  if (m == 0) m = n - 1;
  // m <= n-1 < n, so m children of the cone at "0" fit and stay proper
  std::vector<Word> cones;
  for (int i = 0; i < m; ++i)
    cones.push_back(Word("0") + static_cast<char>('0' + i));
  return ClopenSet::canonicalize(arity, cones);
}

// An element with image(gamma, A) exactly B, when the classes allow it.
inline PrefixBijection exact_mover(const ClopenSet& A, const ClopenSet& B) {
  check_same_arity(A.arity(), B.arity());
  int n = A.arity();
  std::vector<PrefixPair> pairs = pair_cone_lists(n, A.cones(), B.cones());
  auto rest = pair_cone_lists(n, set_complement(A).cones(),
                              set_complement(B).cones());
  pairs.insert(pairs.end(), rest.begin(), rest.end());
  return PrefixBijection::from_pairs(Arity(n), pairs);
}

inline WitnessReport orbit_witness(const ClopenSet& A, const ClopenSet& B) {
  if (!A.is_proper() || A.is_empty() || !B.is_proper() || B.is_empty())
    throw Error("orbit_witness: inputs must be proper non-empty clopens");
  WitnessReport rep;
  rep.kind = "orbit.witness";
  rep.sets = {{"A", A}, {"B", B}};
  bool match = class_of(A) == class_of(B);
  rep.check("class_of(A) = class_of(B)", match);
  if (match) {
    PrefixBijection gamma = exact_mover(A, B);
    rep.elements = {{"gamma", gamma}};
    rep.check("image(gamma, A) = B", image(gamma, A) == B);
  }
  return rep;
}

// Residue addition, re-verified at set level: representatives are moved
// to disjoint positions whose union stays proper, and the class of the
// union is recomputed.
inline OrbitClass add(const OrbitClass& x, const OrbitClass& y) {
  if (x.n != y.n) throw Error("add: arity mismatch");
  Arity arity(x.n);
  OrbitClass sum(arity, x.residue + y.residue);

  ClopenSet U = representative_of(arity, x.residue);
  ClopenSet V = representative_of(arity, y.residue);
  // mu moves U under cone 00, nu moves V under cone 01; both stay off 1
  ClopenSet whole = ClopenSet::whole(arity);
  PrefixBijection mu =
      vigorous_witness(whole, U, ClopenSet::cone(arity, "00"))
          .element("gamma");
  PrefixBijection nu =
      vigorous_witness(whole, V, ClopenSet::cone(arity, "01"))
          .element("gamma");
  ClopenSet Um = image(mu, U), Vn = image(nu, V);
  ClopenSet disjoint_union = set_union(Um, Vn);
  if (!are_disjoint(Um, Vn) || !disjoint_union.is_proper())
    throw Error("add: internal representative transport failed");
  if (!(class_of(disjoint_union) == sum))
    throw Error("add: set-level class disagrees with residue arithmetic");
  return sum;
}

inline bool is_even(const OrbitClass& x) {
  int m = x.n - 1;
  for (int y = 0; y < m; ++y)
    if ((2 * y) % m == x.residue) return true;
  return false;
}

// A set whose class is inverse to that of A, together with the
// constructions showing it: alpha grows A by a class-zero block E, beta
// tucks A properly inside E, and the leftover E \ A beta is the answer.
inline std::pair<ClopenSet, WitnessReport> inverse_witness(const ClopenSet& A) {
  if (!A.is_proper() || A.is_empty())
    throw Error("inverse_witness: need a proper non-empty clopen set");
  Arity arity(A.arity());
  int n = arity.n;
  ClopenSet compA = set_complement(A);
  Word c = compA.cones().front();
  std::vector<Word> kids;
  for (int i = 0; i < n - 1; ++i)
    kids.push_back(c + static_cast<char>('0' + i));
  ClopenSet E = ClopenSet::canonicalize(arity, kids);  // class zero, E inside c

  ClopenSet Aalpha = set_union(A, E);
  PrefixBijection alpha = exact_mover(A, Aalpha);
  ClopenSet Ep = detail::first_proper_subset(E);
  PrefixBijection beta = move_into(A, Ep);
  ClopenSet Abeta = image(beta, A);
  ClopenSet result = set_difference(set_difference(Aalpha, A), Abeta);

  WitnessReport rep;
  rep.kind = "homology.inverse";
  rep.sets = {{"A", A}, {"E", E}, {"result", result}};
  rep.elements = {{"alpha", alpha}, {"beta", beta}};
  rep.check("A properly inside A alpha", is_proper_subset(A, Aalpha) &&
                                             image(alpha, A) == Aalpha);
  rep.check("A beta properly inside A alpha minus A",
            is_proper_subset(Abeta, E));
  rep.check("result non-empty proper", !result.is_empty() && result.is_proper());
  rep.check("class_of(result) + class_of(A) = zero (residues)",
            OrbitClass(arity, class_of(result).residue + class_of(A).residue) ==
                zero_class(arity));
  // set level: A and the result are disjoint, their union is proper and
  // lands in the zero class, witnessed by an explicit mover
  ClopenSet un = set_union(A, result);
  bool setlevel = are_disjoint(A, result) && un.is_proper() &&
                  orbit_witness(un, representative_of(arity, 0)).all_pass();
  rep.check("class_of(A u result) = zero (set level)", setlevel);
  return {result, rep};
}

// Greedy partition of W into clopen blocks with the prescribed classes,
// feasible exactly when the residues sum to the class of W.  Each block
// takes children of the first remaining cone; the last block is the
// remainder.
inline std::vector<ClopenSet> partition_within(
    const ClopenSet& W, const std::vector<OrbitClass>& targets) {
  if (targets.empty()) throw Error("partition: no targets");
  if (W.is_empty()) throw Error("partition: empty ambient set");
  Arity arity(W.arity());
  int n = arity.n;
  int sum = 0;
  for (const auto& t : targets) {
    if (t.n != n) throw Error("partition: arity mismatch");
    sum += t.residue;
  }
  if (sum % (n - 1) != W.weight() % (n - 1))
    throw Error("partition: residues do not sum to the class of the "
                "ambient set");
  if (targets.size() < 2 && W.is_whole())
    throw Error("partition: a one-block partition of the whole space has "
                "no proper blocks");

  std::vector<ClopenSet> blocks;
  ClopenSet rem = W;
  for (size_t t = 0; t + 1 < targets.size(); ++t) {
    int m = targets[t].residue == 0 ? n - 1 : targets[t].residue;
    Word c = rem.cones().front();
    std::vector<Word> kids;
    for (int i = 0; i < m; ++i)
      kids.push_back(c + static_cast<char>('0' + i));
    ClopenSet block = ClopenSet::canonicalize(arity, kids);
    blocks.push_back(block);
    rem = set_difference(rem, block);
    if (rem.is_empty()) throw Error("partition: ran out of space");
  }
  blocks.push_back(rem);
  for (size_t t = 0; t < targets.size(); ++t)
    if (!(class_of(blocks[t]) == targets[t]))
      throw Error("partition: block class mismatch at " + std::to_string(t));
  return blocks;
}

// Partition of the whole space; feasible exactly when the residues sum to
// the total class.
inline std::vector<ClopenSet> partition_for(
    const std::vector<OrbitClass>& targets) {
  if (targets.empty()) throw Error("partition: no targets");
  return partition_within(ClopenSet::whole(Arity(targets.front().n)),
                          targets);
}

}  // namespace vigor

// random.hpp -- seeded generators for clopen sets and group elements,
// used by the property tests and the sampling operations.  All draws go
// through a single mt19937_64 so runs are reproducible from the seed.

#pragma once

#include <random>

#include "vigor/cantor.hpp"
#include "vigor/element.hpp"

namespace vigor {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  size_t below(size_t bound) {
    return std::uniform_int_distribution<size_t>(0, bound - 1)(eng_);
  }

  // A random clopen set built from cones of depth <= max_depth.  May be
  // empty or the whole space unless require_proper is set.
  ClopenSet clopen(Arity arity, size_t max_depth, bool require_proper = true) {
    for (;;) {
      size_t k = 1 + below(3);
      std::vector<Word> cones;
      for (size_t i = 0; i < k; ++i) {
        size_t d = 1 + below(max_depth);
        Word w;
        for (size_t j = 0; j < d; ++j)
          w.push_back(static_cast<char>('0' + below(arity.n)));
        cones.push_back(w);
      }
      ClopenSet s = ClopenSet::canonicalize(arity, cones);
      if (!require_proper || s.is_proper()) return s;
    }
  }

  // A random element of V_n: refine {eps} by `splits` random leaf
  // subdivisions on each side, then pair the leaves by a random
  // permutation.
  PrefixBijection element(Arity arity, size_t splits) {
    return element_supported_in(ClopenSet::whole(arity), splits);
  }

  // A random element supported inside X (identity outside).
  PrefixBijection element_supported_in(const ClopenSet& X, size_t splits) {
    Arity arity(X.arity());
    if (X.is_empty()) return PrefixBijection::identity(arity);
    auto refine = [&](std::vector<Word> leaves) {
      for (size_t s = 0; s < splits; ++s) {
        size_t i = below(leaves.size());
        Word w = leaves[i];
        leaves.erase(leaves.begin() + i);
        for (int d = 0; d < arity.n; ++d)
          leaves.push_back(w + static_cast<char>('0' + d));
      }
      return leaves;
    };
    std::vector<Word> dom = refine(X.cones());
    std::vector<Word> ran = refine(X.cones());
    std::shuffle(ran.begin(), ran.end(), eng_);
    std::vector<PrefixPair> pairs;
    for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], ran[i]);
    ClopenSet fixed = set_complement(X);
    for (const auto& c : fixed.cones()) pairs.emplace_back(c, c);
    return PrefixBijection::from_pairs(arity, std::move(pairs));
  }

  PrefixBijection nonidentity_element(Arity arity, size_t splits) {
    for (;;) {
      PrefixBijection f = element(arity, splits);
      if (!f.is_identity()) return f;
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vigor

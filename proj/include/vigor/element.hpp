// element.hpp -- elements of the Higman-Thompson group V_n as
// prefix-exchange bijections in caret-reduced canonical form.
//
// An element is a bijection between two complete prefix codes over
// {0,...,n-1}; the point with infinite expansion u.x (u a domain word)
// maps to v.x.  Canonical form merges every full sibling family
// (u0 -> v0, ..., u(n-1) -> v(n-1)) into the single pair (u -> v) and
// sorts by domain word, so group-element equality is structural.

#pragma once

#include <cstdint>
#include <optional>
#include <map>

#include "vigor/cantor.hpp"

namespace vigor {

using PrefixPair = std::pair<Word, Word>;

namespace detail {

inline void sort_by_domain(std::vector<PrefixPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
}

// Caret reduction: repeatedly merge full sibling families with a common
// range parent.  Expects pairs sorted by domain; keeps them sorted.
inline void caret_reduce(std::vector<PrefixPair>& pairs, int n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + n <= pairs.size(); ++i) {
      const Word& d0 = pairs[i].first;
      const Word& r0 = pairs[i].second;
      if (d0.empty() || d0.back() != '0') continue;
      if (r0.empty() || r0.back() != '0') continue;
      Word du(d0, 0, d0.size() - 1), ru(r0, 0, r0.size() - 1);
      bool family = true;
      for (int k = 1; k < n; ++k) {
        const auto& [dk, rk] = pairs[i + k];
        if (dk != du + static_cast<char>('0' + k) ||
            rk != ru + static_cast<char>('0' + k)) {
          family = false;
          break;
        }
      }
      if (family) {
        pairs.erase(pairs.begin() + i, pairs.begin() + i + n);
        pairs.insert(pairs.begin() + i, {du, ru});
        sort_by_domain(pairs);
        changed = true;
        break;
      }
    }
  }
}

// A set of words is a complete prefix code iff its cones are pairwise
// incomparable and union to the whole space.
inline bool is_complete_prefix_code(const std::vector<Word>& words, int n) {
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      if (prefix_comparable(words[i], words[j])) return false;
  return ClopenSet::canonicalize(Arity(n), words).is_whole();
}

}  // namespace detail

// A prefix-replacement map defined on part of the space: domain cones are
// an antichain, range cones are an antichain, and cone i maps to cone i by
// prefix substitution.  Used for restrictions, gluing, and the embedding
// maps of the witness module.
struct PartialMap {
  int n;
  std::vector<PrefixPair> pairs;  // sorted by domain word

  ClopenSet domain() const {
    std::vector<Word> d;
    for (const auto& p : pairs) d.push_back(p.first);
    return ClopenSet::canonicalize(Arity(n), d);
  }
  ClopenSet range() const {
    std::vector<Word> r;
    for (const auto& p : pairs) r.push_back(p.second);
    return ClopenSet::canonicalize(Arity(n), r);
  }
};

class PrefixBijection {
 public:
  // The identity map, one pair (eps -> eps).
  static PrefixBijection identity(Arity arity) {
    return PrefixBijection(arity.n, {{Word{}, Word{}}});
  }

  // From a raw pair list; validates both codes and reduces to canonical
  // form.
  static PrefixBijection from_pairs(Arity arity, std::vector<PrefixPair> pairs) {
    std::vector<Word> dom, ran;
    for (const auto& [d, r] : pairs) {
      check_word(d, arity.n);
      check_word(r, arity.n);
      dom.push_back(d);
      ran.push_back(r);
    }
    if (!detail::is_complete_prefix_code(dom, arity.n))
      throw Error("domain words are not a complete prefix code");
    if (!detail::is_complete_prefix_code(ran, arity.n))
      throw Error("range words are not a complete prefix code");
    return PrefixBijection(arity.n, std::move(pairs));
  }

  // The transposition (alpha beta): swap the two cones by prefix
  // replacement, identity elsewhere.
  static PrefixBijection transposition(Arity arity, const Word& alpha,
                                       const Word& beta) {
    check_word(alpha, arity.n);
    check_word(beta, arity.n);
    if (prefix_comparable(alpha, beta))
      throw Error("transposition cones must be prefix-incomparable");
    // smallest complete prefix code containing alpha and beta as members
    std::vector<Word> code{Word{}};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Word> next;
      for (const auto& w : code) {
        bool split = (is_prefix(w, alpha) && w != alpha) ||
                     (is_prefix(w, beta) && w != beta);
        if (split) {
          for (int i = 0; i < arity.n; ++i)
            next.push_back(w + static_cast<char>('0' + i));
          grew = true;
        } else {
          next.push_back(w);
        }
      }
      code = std::move(next);
    }
    std::vector<PrefixPair> pairs;
    for (const auto& w : code) {
      if (w == alpha)
        pairs.emplace_back(alpha, beta);
      else if (w == beta)
        pairs.emplace_back(beta, alpha);
      else
        pairs.emplace_back(w, w);
    }
    return PrefixBijection(arity.n, std::move(pairs));
  }

  int arity() const { return n_; }
  const std::vector<PrefixPair>& pairs() const { return pairs_; }
  bool is_identity() const {
    return pairs_.size() == 1 && pairs_[0].first.empty() &&
           pairs_[0].second.empty();
  }

  // Image of the finite word w (w at least as deep as every domain word).
  Word apply_to_word(const Word& w) const {
    for (const auto& [d, r] : pairs_)
      if (is_prefix(d, w)) return r + w.substr(d.size());
    throw Error("word shallower than the domain code");
  }

  size_t max_depth() const {
    size_t d = 0;
    for (const auto& [u, v] : pairs_)
      d = std::max({d, u.size(), v.size()});
    return d;
  }

  friend bool operator==(const PrefixBijection& a, const PrefixBijection& b) {
    return a.n_ == b.n_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const PrefixBijection& a, const PrefixBijection& b) {
    return !(a == b);
  }
  friend bool operator<(const PrefixBijection& a, const PrefixBijection& b) {
    return std::tie(a.n_, a.pairs_) < std::tie(b.n_, b.pairs_);
  }

  PartialMap as_partial() const { return PartialMap{n_, pairs_}; }

 private:
  PrefixBijection(int n, std::vector<PrefixPair> pairs)
      : n_(n), pairs_(std::move(pairs)) {
    detail::sort_by_domain(pairs_);
    detail::caret_reduce(pairs_, n_);
  }

  int n_;
  std::vector<PrefixPair> pairs_;

  friend PrefixBijection compose(const PrefixBijection&, const PrefixBijection&);
  friend PrefixBijection invert(const PrefixBijection&);
  friend PrefixBijection complete_partial(const PartialMap&);
};

// Partial-map plumbing ------------------------------------------------

// Restriction of f to the clopen set a (refining pairs as needed).
inline PartialMap restrict_to(const PrefixBijection& f, const ClopenSet& a) {
  check_same_arity(f.arity(), a.arity());
  std::vector<PrefixPair> out;
  for (const auto& [u, v] : f.pairs()) {
    for (const auto& c : a.cones()) {
      if (is_prefix(u, c)) {
        out.emplace_back(c, v + c.substr(u.size()));
      } else if (is_prefix(c, u) && c != u) {
        out.emplace_back(u, v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  detail::caret_reduce(out, f.arity());
  return PartialMap{f.arity(), out};
}

// Left-to-right composition of partial maps on the points where the
// chain is defined: first p, then q.
inline PartialMap compose_partial(const PartialMap& p, const PartialMap& q) {
  check_same_arity(p.n, q.n);
  std::vector<PrefixPair> out;
  for (const auto& [u, v] : p.pairs) {
    for (const auto& [d, e] : q.pairs) {
      if (is_prefix(d, v)) {
        out.emplace_back(u, e + v.substr(d.size()));
      } else if (is_prefix(v, d) && v != d) {
        out.emplace_back(u + d.substr(v.size()), e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  detail::caret_reduce(out, p.n);
  return PartialMap{p.n, out};
}

inline PartialMap invert_partial(const PartialMap& p) {
  std::vector<PrefixPair> out;
  out.reserve(p.pairs.size());
  for (const auto& [u, v] : p.pairs) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  detail::caret_reduce(out, p.n);
  return PartialMap{p.n, out};
}

// Pair two equinumerous cone lists after equalizing their counts by
// subdividing the lexicographically least cone of the shorter list.
// Requires equal weights mod n-1.
inline std::vector<PrefixPair> pair_cone_lists(int n, std::vector<Word> dom,
                                               std::vector<Word> ran) {
  if (dom.empty() != ran.empty())
    throw Error("cannot pair an empty cone list with a non-empty one");
  auto grow = [n](std::vector<Word>& v, size_t target) {
    while (v.size() < target) {
      std::sort(v.begin(), v.end());
      Word least = v.front();
      v.erase(v.begin());
      for (int i = 0; i < n; ++i)
        v.push_back(least + static_cast<char>('0' + i));
    }
  };
  if ((dom.size() % (n - 1)) != (ran.size() % (n - 1)))
    throw Error("cone counts are incompatible mod n-1");
  grow(dom, ran.size());
  grow(ran, dom.size());
  std::sort(dom.begin(), dom.end());
  std::sort(ran.begin(), ran.end());
  std::vector<PrefixPair> out;
  out.reserve(dom.size());
  for (size_t i = 0; i < dom.size(); ++i) out.emplace_back(dom[i], ran[i]);
  return out;
}

// Extend a partial map to a full prefix bijection by pairing the
// complement of its domain with the complement of its range
// lexicographically.  The weights always agree mod n-1.
inline PrefixBijection complete_partial(const PartialMap& p) {
  ClopenSet dom = p.domain(), ran = p.range();
  std::vector<PrefixPair> pairs = p.pairs;
  ClopenSet cd = set_complement(dom), cr = set_complement(ran);
  if (cd.is_empty() != cr.is_empty())
    throw Error("partial map domain/range complements mismatch");
  if (!cd.is_empty()) {
    auto extra = pair_cone_lists(p.n, cd.cones(), cr.cones());
    pairs.insert(pairs.end(), extra.begin(), extra.end());
  }
  return PrefixBijection::from_pairs(Arity(p.n), std::move(pairs));
}

// Group operations -----------------------------------------------------

// Left-to-right: first f, then g.
inline PrefixBijection compose(const PrefixBijection& f,
                               const PrefixBijection& g) {
  check_same_arity(f.arity(), g.arity());
  auto pm = compose_partial(f.as_partial(), g.as_partial());
  return PrefixBijection(f.arity(), std::move(pm.pairs));
}

inline PrefixBijection invert(const PrefixBijection& f) {
  auto pm = invert_partial(f.as_partial());
  return PrefixBijection(f.arity(), std::move(pm.pairs));
}

// h^{-1} f h.
inline PrefixBijection conjugate(const PrefixBijection& f,
                                 const PrefixBijection& h) {
  return compose(compose(invert(h), f), h);
}

// f^{-1} g^{-1} f g.
inline PrefixBijection commutator(const PrefixBijection& f,
                                  const PrefixBijection& g) {
  return compose(compose(compose(invert(f), invert(g)), f), g);
}

// Smallest clopen set containing every moved point.  A reduced pair
// (u -> v) with u != v moves every point of the cone at u except at most
// one, so its closure contribution is the whole cone.  For clopen
// arguments, disjointness tests against this set agree with the exact
// moved set.
inline ClopenSet support(const PrefixBijection& f) {
  std::vector<Word> moved;
  for (const auto& [u, v] : f.pairs())
    if (u != v) moved.push_back(u);
  return ClopenSet::canonicalize(Arity(f.arity()), moved);
}

inline ClopenSet image(const PrefixBijection& f, const ClopenSet& a) {
  check_same_arity(f.arity(), a.arity());
  std::vector<Word> out;
  for (const auto& [u, v] : f.pairs()) {
    for (const auto& c : a.cones()) {
      if (is_prefix(u, c))
        out.push_back(v + c.substr(u.size()));
      else if (is_prefix(c, u))
        out.push_back(v);
    }
  }
  return ClopenSet::canonicalize(Arity(f.arity()), out);
}

inline ClopenSet preimage(const PrefixBijection& f, const ClopenSet& a) {
  return image(invert(f), a);
}

// True iff f fixes a pointwise.
inline bool pointwise_stabilises(const PrefixBijection& f, const ClopenSet& a) {
  return are_disjoint(support(f), a);
}

struct OrderResult {
  std::optional<uint64_t> order;  // empty: order exceeds the bound
  uint64_t bound;

  bool exceeded() const { return !order.has_value(); }
};

// Least k <= bound with f^k = identity.  Elements of V_n may have
// infinite order, so exceeding the bound is a legitimate outcome.
inline OrderResult order(const PrefixBijection& f, uint64_t bound = 1000000) {
  if (bound < 1) throw Error("order bound must be positive");
  PrefixBijection acc = f;
  for (uint64_t k = 1; k <= bound; ++k) {
    if (acc.is_identity()) return {k, bound};
    acc = compose(acc, f);
  }
  return {std::nullopt, bound};
}

inline PrefixBijection power(const PrefixBijection& f, long long e) {
  PrefixBijection base = e < 0 ? invert(f) : f;
  unsigned long long k = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
  PrefixBijection acc = PrefixBijection::identity(Arity(f.arity()));
  while (k) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

}  // namespace vigor

// cantor.hpp -- exact algebra of cones and clopen subsets of the Cantor
// space {0,...,n-1}^omega.
//
// A clopen set is kept in a unique canonical form: a lexicographically
// sorted antichain of cones in which no full sibling family survives
// (children 0..n-1 of a common parent are always merged into the parent).
// Equality of point sets is then structural equality.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vigor {

// Raised for malformed input (letters out of range, arity mismatch, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Alphabet size of the underlying Cantor space.  Words are stored as
// digit strings, which caps the arity at 10; every construction in this
// library lives at n <= 6.
struct Arity {
  int n;

  explicit Arity(int n_) : n(n_) {
    if (n < 2 || n > 10) throw Error("arity must be in [2, 10]");
  }
  friend bool operator==(Arity a, Arity b) { return a.n == b.n; }
};

// A finite word over {0,...,n-1}, naming the cone of all its infinite
// extensions.  The empty word names the whole space.
using Word = std::string;

inline void check_word(const Word& w, int n) {
  for (char c : w)
    if (c < '0' || c >= '0' + n) throw Error("word letter out of range");
}

inline bool is_prefix(const Word& p, const Word& w) {
  return w.size() >= p.size() && w.compare(0, p.size(), p) == 0;
}

inline bool prefix_comparable(const Word& a, const Word& b) {
  return is_prefix(a, b) || is_prefix(b, a);
}

namespace detail {

// Finite n-ary trie denoting a clopen set.  A node is either full (the
// whole cone), empty (no kids, not full), or branches into n children.
struct SetTrie {
  bool full = false;
  std::vector<SetTrie> kids;  // empty or exactly n entries

  bool empty() const { return !full && kids.empty(); }
};

inline void trie_insert(SetTrie& t, const Word& w, size_t pos, int n) {
  if (t.full) return;  // already covered
  if (pos == w.size()) {
    t.full = true;
    t.kids.clear();
    return;
  }
  if (t.kids.empty()) t.kids.resize(n);
  trie_insert(t.kids[w[pos] - '0'], w, pos + 1, n);
}

// Merge full sibling families bottom-up; canonical form invariant.
inline void trie_normalize(SetTrie& t) {
  if (t.kids.empty()) return;
  bool all_full = true, all_empty = true;
  for (auto& k : t.kids) {
    trie_normalize(k);
    if (!k.full) all_full = false;
    if (!k.empty()) all_empty = false;
  }
  if (all_full) {
    t.full = true;
    t.kids.clear();
  } else if (all_empty) {
    t.kids.clear();
  }
}

inline void trie_cones(const SetTrie& t, Word& prefix, std::vector<Word>& out) {
  if (t.full) {
    out.push_back(prefix);
    return;
  }
  for (size_t i = 0; i < t.kids.size(); ++i) {
    prefix.push_back(static_cast<char>('0' + i));
    trie_cones(t.kids[i], prefix, out);
    prefix.pop_back();
  }
}

inline SetTrie trie_union(const SetTrie& a, const SetTrie& b, int n) {
  if (a.full || b.full) return SetTrie{true, {}};
  if (a.empty()) return b;
  if (b.empty()) return a;
  SetTrie r;
  r.kids.resize(n);
  for (int i = 0; i < n; ++i) r.kids[i] = trie_union(a.kids[i], b.kids[i], n);
  return r;
}

inline SetTrie trie_intersection(const SetTrie& a, const SetTrie& b, int n) {
  if (a.empty() || b.empty()) return SetTrie{};
  if (a.full) return b;
  if (b.full) return a;
  SetTrie r;
  r.kids.resize(n);
  for (int i = 0; i < n; ++i)
    r.kids[i] = trie_intersection(a.kids[i], b.kids[i], n);
  return r;
}

inline SetTrie trie_complement(const SetTrie& a, int n) {
  if (a.full) return SetTrie{};
  if (a.empty()) return SetTrie{true, {}};
  SetTrie r;
  r.kids.resize(n);
  for (int i = 0; i < n; ++i) r.kids[i] = trie_complement(a.kids[i], n);
  return r;
}

inline bool trie_subset(const SetTrie& a, const SetTrie& b, int n) {
  if (a.empty() || b.full) return true;
  if (b.empty()) return a.empty();
  if (a.full) return false;  // b is a proper branch node
  for (int i = 0; i < n; ++i)
    if (!trie_subset(a.kids[i], b.kids[i], n)) return false;
  return true;
}

}  // namespace detail

// Canonical finite union of cones.  The empty cone list denotes the
// empty set; the single cone "" denotes the whole space.
class ClopenSet {
 public:
  ClopenSet() : n_(2) {}  // empty set over the binary alphabet

  static ClopenSet canonicalize(Arity arity, std::vector<Word> raw) {
    for (const auto& w : raw) check_word(w, arity.n);
    detail::SetTrie t;
    for (const auto& w : raw) detail::trie_insert(t, w, 0, arity.n);
    detail::trie_normalize(t);
    return from_trie(arity.n, t);
  }

  static ClopenSet empty(Arity arity) { return ClopenSet(arity.n, {}); }
  static ClopenSet whole(Arity arity) { return ClopenSet(arity.n, {Word{}}); }
  static ClopenSet cone(Arity arity, const Word& w) {
    check_word(w, arity.n);
    return ClopenSet(arity.n, {w});
  }

  int arity() const { return n_; }
  const std::vector<Word>& cones() const { return cones_; }
  bool is_empty() const { return cones_.empty(); }
  bool is_whole() const { return cones_.size() == 1 && cones_[0].empty(); }

  // Non-empty and not the whole space, i.e. membership in K_C.
  bool is_proper() const { return !is_empty() && !is_whole(); }

  int weight() const { return static_cast<int>(cones_.size()); }

  size_t max_depth() const {
    size_t d = 0;
    for (const auto& w : cones_) d = std::max(d, w.size());
    return d;
  }

  friend bool operator==(const ClopenSet& a, const ClopenSet& b) {
    return a.n_ == b.n_ && a.cones_ == b.cones_;
  }
  friend bool operator!=(const ClopenSet& a, const ClopenSet& b) {
    return !(a == b);
  }
  friend bool operator<(const ClopenSet& a, const ClopenSet& b) {
    return std::tie(a.n_, a.cones_) < std::tie(b.n_, b.cones_);
  }

  bool contains_point_cone(const Word& w) const {
    for (const auto& c : cones_)
      if (is_prefix(c, w)) return true;
    return false;
  }

 private:
  ClopenSet(int n, std::vector<Word> cones) : n_(n), cones_(std::move(cones)) {
    std::sort(cones_.begin(), cones_.end());
  }

  static ClopenSet from_trie(int n, const detail::SetTrie& t) {
    std::vector<Word> out;
    Word prefix;
    detail::trie_cones(t, prefix, out);
    return ClopenSet(n, std::move(out));
  }

  detail::SetTrie to_trie() const {
    detail::SetTrie t;
    for (const auto& w : cones_) detail::trie_insert(t, w, 0, n_);
    detail::trie_normalize(t);
    return t;
  }

  int n_;
  std::vector<Word> cones_;

  friend ClopenSet set_union(const ClopenSet&, const ClopenSet&);
  friend ClopenSet set_intersection(const ClopenSet&, const ClopenSet&);
  friend ClopenSet set_complement(const ClopenSet&);
  friend bool is_subset(const ClopenSet&, const ClopenSet&);
};

inline void check_same_arity(int a, int b) {
  if (a != b) throw Error("arity mismatch");
}

inline ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
  check_same_arity(a.arity(), b.arity());
  auto t = detail::trie_union(a.to_trie(), b.to_trie(), a.arity());
  detail::trie_normalize(t);
  return ClopenSet::from_trie(a.arity(), t);
}

inline ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b) {
  check_same_arity(a.arity(), b.arity());
  auto t = detail::trie_intersection(a.to_trie(), b.to_trie(), a.arity());
  detail::trie_normalize(t);
  return ClopenSet::from_trie(a.arity(), t);
}

inline ClopenSet set_complement(const ClopenSet& a) {
  auto t = detail::trie_complement(a.to_trie(), a.arity());
  detail::trie_normalize(t);
  return ClopenSet::from_trie(a.arity(), t);
}

inline ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b) {
  return set_intersection(a, set_complement(b));
}

inline bool is_subset(const ClopenSet& a, const ClopenSet& b) {
  check_same_arity(a.arity(), b.arity());
  return detail::trie_subset(a.to_trie(), b.to_trie(), a.arity());
}

inline bool is_proper_subset(const ClopenSet& a, const ClopenSet& b) {
  return is_subset(a, b) && a != b;
}

inline bool are_disjoint(const ClopenSet& a, const ClopenSet& b) {
  return set_intersection(a, b).is_empty();
}

// All length-d words whose cones partition `a`.  Requires d at least the
// maximum cone depth; this is the brute-force oracle substrate.
inline std::vector<Word> refine_to_depth(const ClopenSet& a, size_t d) {
  if (d < a.max_depth()) throw Error("refinement depth too small");
  std::vector<Word> out;
  for (const auto& c : a.cones()) {
    size_t extra = d - c.size();
    // enumerate all extensions of length `extra` in lexicographic order
    std::vector<Word> stack{c};
    for (size_t k = 0; k < extra; ++k) {
      std::vector<Word> next;
      next.reserve(stack.size() * a.arity());
      for (const auto& w : stack)
        for (int i = 0; i < a.arity(); ++i)
          next.push_back(w + static_cast<char>('0' + i));
      stack = std::move(next);
    }
    out.insert(out.end(), stack.begin(), stack.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All words of length exactly d over {0,...,n-1}.
inline std::vector<Word> all_words(Arity arity, size_t d) {
  return refine_to_depth(ClopenSet::whole(arity), d);
}

}  // namespace vigor

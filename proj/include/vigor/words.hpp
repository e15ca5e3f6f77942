// words.hpp -- group words, word evaluation, ping-pong free pairs and
// lawlessness witnesses.

#pragma once

#include "vigor/random.hpp"
#include "vigor/witness.hpp"

namespace vigor {

struct Letter {
  int var;   // 1-based variable index
  int sign;  // +1 or -1
};

class GroupWord {
 public:
  GroupWord() = default;  // the identity word

  static GroupWord from_letters(std::vector<Letter> letters) {
    for (const auto& l : letters) {
      if (l.var < 1) throw Error("group word: variable index must be >= 1");
      if (l.sign != 1 && l.sign != -1)
        throw Error("group word: sign must be +1 or -1");
    }
    for (size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i].var == letters[i + 1].var &&
          letters[i].sign == -letters[i + 1].sign)
        throw Error("group word: not freely reduced");
    GroupWord w;
    w.letters_ = std::move(letters);
    return w;
  }

  // Dot-separated syntax: "x1^2.x2^-1" (exponent defaults to 1).
  static GroupWord parse(const std::string& text) {
    std::vector<Letter> letters;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t dot = text.find('.', pos);
      std::string tok = text.substr(pos, dot == std::string::npos
                                             ? std::string::npos
                                             : dot - pos);
      pos = dot == std::string::npos ? text.size() : dot + 1;
      if (tok.empty() || tok[0] != 'x')
        throw Error("group word: bad token '" + tok + "'");
      size_t caret = tok.find('^');
      int var, exp = 1;
      try {
        var = std::stoi(tok.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1));
        if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error("group word: bad token '" + tok + "'");
      }
      if (exp == 0) throw Error("group word: zero exponent in '" + tok + "'");
      for (int i = 0; i < std::abs(exp); ++i)
        letters.push_back({var, exp > 0 ? 1 : -1});
    }
    return from_letters(std::move(letters));
  }

  std::string str() const {
    if (letters_.empty()) return "";
    std::string out;
    for (size_t i = 0; i < letters_.size();) {
      size_t j = i;
      while (j < letters_.size() && letters_[j].var == letters_[i].var &&
             letters_[j].sign == letters_[i].sign)
        ++j;
      int exp = static_cast<int>(j - i) * letters_[i].sign;
      if (!out.empty()) out += '.';
      out += "x" + std::to_string(letters_[i].var);
      if (exp != 1) out += "^" + std::to_string(exp);
      i = j;
    }
    return out;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity_word() const { return letters_.empty(); }
  int max_var() const {
    int m = 0;
    for (const auto& l : letters_) m = std::max(m, l.var);
    return m;
  }

 private:
  std::vector<Letter> letters_;
};

inline PrefixBijection evaluate_word(
    const GroupWord& w, const std::vector<PrefixBijection>& tuple) {
  if (tuple.empty()) throw Error("evaluate_word: empty tuple");
  int n = tuple.front().arity();
  for (const auto& g : tuple) check_same_arity(g.arity(), n);
  if (w.max_var() > static_cast<int>(tuple.size()))
    throw Error("evaluate_word: tuple shorter than max variable index");
  PrefixBijection acc = PrefixBijection::identity(Arity(n));
  for (const auto& l : w.letters()) {
    const PrefixBijection& g = tuple[static_cast<size_t>(l.var - 1)];
    acc = compose(acc, l.sign > 0 ? g : invert(g));
  }
  return acc;
}

// --- ping-pong free pair --------------------------------------------------

struct FreenessCertificate {
  int n = 2;
  ClopenSet A, B, C, D;
  PrefixBijection gamma, tau;
  PrefixBijection a, b;  // the free pair: a = gamma, b = gamma^(tau^-1)
  int word_depth = 8;
  std::vector<Condition> conditions;
  std::string verdict;  // "certified" or "failed"

  FreenessCertificate()
      : A(ClopenSet::empty(Arity(2))),
        B(A),
        C(A),
        D(A),
        gamma(PrefixBijection::identity(Arity(2))),
        tau(gamma),
        a(gamma),
        b(gamma) {}

  bool certified() const { return verdict == "certified"; }
};

namespace detail {

// All freely reduced words in a, b (and inverses) up to length depth are
// non-trivial.  Letters 0..3 encode a, a^-1, b, b^-1.
inline bool reduced_words_nontrivial(const PrefixBijection& a,
                                     const PrefixBijection& b, int depth) {
  const PrefixBijection gens[4] = {a, invert(a), b, invert(b)};
  struct Frame {
    PrefixBijection prod;
    int last;
    int len;
  };
  std::vector<Frame> stack;
  stack.push_back({PrefixBijection::identity(Arity(a.arity())), -1, 0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.len > 0 && f.prod.is_identity()) return false;
    if (f.len == depth) continue;
    for (int g = 0; g < 4; ++g) {
      if (f.last >= 0 && (f.last ^ 1) == g) continue;  // no x x^-1
      stack.push_back({compose(f.prod, gens[g]), g, f.len + 1});
    }
  }
  return true;
}

}  // namespace detail

inline FreenessCertificate pingpong_pair(const ClopenSet& A,
                                         const ClopenSet& B,
                                         const ClopenSet& C,
                                         const ClopenSet& D,
                                         int word_depth = 8) {
  int n = A.arity();
  Arity arity(n);
  std::vector<ClopenSet> blocks = {A, B, C, D};
  ClopenSet un = ClopenSet::empty(arity);
  for (const auto& blk : blocks) {
    if (blk.is_empty() || !blk.is_proper())
      throw Error("pingpong_pair: blocks must be proper non-empty");
    if (!are_disjoint(un, blk)) throw Error("pingpong_pair: blocks overlap");
    un = set_union(un, blk);
  }
  if (!un.is_whole())
    throw Error("pingpong_pair: blocks must cover the whole space");

  ClopenSet compA = set_complement(A);
  PrefixBijection gamma =
      vigorous_witness(compA, set_union(C, D), D).element("gamma");
  PrefixBijection tau =
      vigorous_witness(compA, set_union(B, D), C).element("gamma");

  FreenessCertificate cert;
  cert.n = n;
  cert.A = A;
  cert.B = B;
  cert.C = C;
  cert.D = D;
  cert.gamma = gamma;
  cert.tau = tau;
  cert.a = gamma;
  cert.b = conjugate(gamma, invert(tau));
  cert.word_depth = word_depth;
  auto check = [&](const std::string& d, bool p) {
    cert.conditions.push_back({d, p});
  };
  check("image(gamma, C u D) subset of D",
        is_subset(image(gamma, set_union(C, D)), D));
  check("image(tau, B u D) subset of C",
        is_subset(image(tau, set_union(B, D)), C));
  check("gamma pointwise-stabilises A", pointwise_stabilises(gamma, A));
  check("tau pointwise-stabilises A", pointwise_stabilises(tau, A));
  check("all reduced words of length <= " + std::to_string(word_depth) +
            " are non-trivial",
        detail::reduced_words_nontrivial(cert.a, cert.b, word_depth));
  cert.verdict = "certified";
  for (const auto& c : cert.conditions)
    if (!c.pass) cert.verdict = "failed";
  return cert;
}

// The default certified free pair in arity 2, built on the four depth-2
// cones.
inline FreenessCertificate default_free_pair(int word_depth = 8) {
  Arity two(2);
  return pingpong_pair(ClopenSet::cone(two, "00"), ClopenSet::cone(two, "01"),
                       ClopenSet::cone(two, "10"), ClopenSet::cone(two, "11"),
                       word_depth);
}

// --- lawlessness ------------------------------------------------------------

struct LawlessnessWitness {
  GroupWord word;
  std::vector<PrefixBijection> tuple;
  PrefixBijection value;
};

// Substitute a free basis x_i -> a^-i b a^i of the certified free pair;
// the evaluation of any non-trivial reduced word is then non-trivial, and
// this is re-checked exactly.
inline LawlessnessWitness lawlessness_witness(const GroupWord& w) {
  if (w.is_identity_word())
    throw Error("lawlessness_witness: word must be non-trivial");
  FreenessCertificate fp = default_free_pair(2);
  if (!fp.certified())
    throw Error("lawlessness_witness: free pair failed certification");
  std::vector<PrefixBijection> tuple;
  for (int i = 1; i <= w.max_var(); ++i)
    tuple.push_back(conjugate(fp.b, power(fp.a, i)));
  PrefixBijection value = evaluate_word(w, tuple);
  if (value.is_identity())
    throw Error("lawlessness_witness: evaluation unexpectedly trivial");
  return {w, tuple, value};
}

// Sampled elements of the verbal set over the pointwise stabiliser of A.
inline std::vector<PrefixBijection> verbal_small_sample(const GroupWord& w,
                                                        const ClopenSet& A,
                                                        uint64_t seed,
                                                        int count = 10) {
  if (!A.is_proper() || A.is_empty())
    throw Error("verbal_small_sample: A must be proper non-empty");
  if (w.is_identity_word())
    throw Error("verbal_small_sample: word must be non-trivial");
  Rng rng(seed);
  ClopenSet compA = set_complement(A);
  std::vector<PrefixBijection> out;
  for (int s = 0; s < count; ++s) {
    std::vector<PrefixBijection> tuple;
    for (int i = 0; i < w.max_var(); ++i)
      tuple.push_back(rng.element_supported_in(compA, 3));
    PrefixBijection v = evaluate_word(w, tuple);
    if (!pointwise_stabilises(v, A))
      throw Error("verbal_small_sample: output fails to stabilise A");
    out.push_back(v);
  }
  return out;
}

}  // namespace vigor

// verify.hpp -- independent re-verification of serialized certificates.
// Every check here recomputes its condition from the stored sets and
// elements alone; stored pass/fail flags and statuses are themselves
// subject to verification.

#pragma once

#include "vigor/json_io.hpp"

namespace vigor {

struct VerifyResult {
  std::string kind;
  std::vector<Condition> conditions;
  bool inconclusive = false;

  bool ok() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
  // 0 pass, 1 fail, 2 inconclusive
  int exit_code() const { return ok() ? (inconclusive ? 2 : 0) : 1; }
  std::string first_failure() const {
    for (const auto& c : conditions)
      if (!c.pass) return c.desc;
    return "";
  }
  void check(const std::string& d, bool p) { conditions.push_back({d, p}); }
};

namespace detail {

inline void verify_witness_report(const WitnessReport& rep, VerifyResult& r) {
  const std::string& k = rep.kind;
  if (k == "witness.vigorous" || k == "witness.flexible") {
    const auto &A = rep.set("A"), &B = rep.set("B"), &C = rep.set("C");
    const auto& gamma = rep.element("gamma");
    r.check("support(gamma) subset of A", is_subset(support(gamma), A));
    r.check("image(gamma, B) subset of C", is_subset(image(gamma, B), C));
  } else if (k == "witness.moved_set") {
    const auto& Y = rep.set("Y");
    const auto& gamma = rep.element("gamma");
    r.check("Y non-empty", !Y.is_empty());
    r.check("image(gamma, Y) disjoint from Y",
            are_disjoint(Y, image(gamma, Y)));
  } else if (k == "witness.ssgp") {
    const auto &U = rep.set("U"), &Vmu = rep.set("Vmu"), &Vnu = rep.set("Vnu");
    const auto &eta = rep.element("eta"), &mu = rep.element("mu"),
               &nu = rep.element("nu");
    r.check("mu nu = eta", compose(mu, nu) == eta);
    r.check("support(mu) subset of Vmu", is_subset(support(mu), Vmu));
    r.check("Vmu proper subset of U", is_proper_subset(Vmu, U));
    r.check("support(nu) subset of Vnu", is_subset(support(nu), Vnu));
    r.check("Vnu proper subset of U", is_proper_subset(Vnu, U));
    r.check("eta supported in U", is_subset(support(eta), U));
  } else if (k == "witness.split") {
    const auto &L = rep.set("L"), &C = rep.set("C"), &D = rep.set("D"),
               &Omega = rep.set("Omega");
    const auto &eta = rep.element("eta"), &mu = rep.element("mu"),
               &nu = rep.element("nu");
    r.check("eta pointwise-stabilises L", pointwise_stabilises(eta, L));
    r.check("eta = mu nu mu^-1",
            compose(compose(mu, nu), invert(mu)) == eta);
    bool c_branch =
        pointwise_stabilises(mu, D) && pointwise_stabilises(nu, C);
    bool d_branch =
        pointwise_stabilises(mu, C) && pointwise_stabilises(nu, D);
    r.check("one factor stabilises C, the other D", c_branch || d_branch);
    r.check("factors supported inside Omega",
            is_subset(support(mu), Omega) && is_subset(support(nu), Omega));
  } else if (k == "witness.small_support") {
    const auto &A = rep.set("A"), &B = rep.set("B");
    const auto &gamma = rep.element("gamma"), &alpha = rep.element("alpha"),
               &beta = rep.element("beta");
    r.check("alpha beta = gamma", compose(alpha, beta) == gamma);
    r.check("alpha pointwise-stabilises A", pointwise_stabilises(alpha, A));
    r.check("beta pointwise-stabilises B", pointwise_stabilises(beta, B));
    r.check("A proper clopen", A.is_proper() && !A.is_empty());
    r.check("B proper clopen", B.is_proper() && !B.is_empty());
    r.check("A gamma disjoint from A", are_disjoint(A, image(gamma, A)));
  } else if (k == "witness.normal_closure") {
    const auto &J = rep.set("J"), &P = rep.set("P");
    const auto &delta = rep.element("delta"), &mu = rep.element("mu"),
               &nu = rep.element("nu"), &lambda = rep.element("lambda");
    r.check("delta non-trivial", !delta.is_identity());
    r.check("mu, nu supported in J",
            is_subset(support(mu), J) && is_subset(support(nu), J));
    r.check("P delta disjoint from P", are_disjoint(P, image(delta, P)));
    r.check("image(lambda, J) subset of P", is_subset(image(lambda, J), P));
    PrefixBijection mul = conjugate(mu, lambda), nul = conjugate(nu, lambda);
    PrefixBijection lhs =
        conjugate(commutator(commutator(delta, mul), nul), invert(lambda));
    r.check("the conjugated triple commutator equals [mu, nu]",
            lhs == commutator(mu, nu));
  } else if (k == "witness.glue") {
    const auto& chi = rep.element("chi");
    for (size_t i = 0;; ++i) {
      std::string si = std::to_string(i);
      bool have = false;
      for (const auto& [kk, vv] : rep.sets)
        if (kk == "D_" + si) have = true;
      if (!have) break;
      r.check("chi agrees with piece " + si + " on its block",
              agree_on(chi, rep.element("gamma_" + si), rep.set("D_" + si)));
      for (const auto& [kk, vv] : rep.elements)
        if (kk == "chi_indirect")
          r.check("indirect gluing agrees with piece " + si,
                  agree_on(vv, rep.element("gamma_" + si), rep.set("D_" + si)));
    }
  } else if (k == "witness.minime_shrink") {
    const auto &I = rep.set("I"), &K = rep.set("K"), &J = rep.set("J"),
               &B = rep.set("B"), &C = rep.set("C"), &D = rep.set("D");
    const auto& delta = rep.element("delta");
    r.check("I properly inside J", is_proper_subset(I, J));
    r.check("J properly inside K", is_proper_subset(J, K));
    MinimeEmbedding emb = minime_embed(B, C, D, delta);
    r.check("J matches the embedding's complement block", emb.J == J);
    const auto &g = rep.element("sample_gamma"), &fg = rep.element("sample_out");
    r.check("sample output matches the embedding", emb.apply(g) == fg);
    r.check("sample output supported in J", is_subset(support(fg), J));
    ClopenSet agree = set_intersection(I, image(invert(g), I));
    r.check("sample output agrees with the input on I n I gamma^-1",
            agree.is_empty() || agree_on(g, fg, agree));
  } else if (k == "orbit.witness") {
    const auto &A = rep.set("A"), &B = rep.set("B");
    int n = A.arity();
    bool match = A.weight() % (n - 1) == B.weight() % (n - 1);
    r.check("class_of(A) = class_of(B)", match);
    if (match) r.check("image(gamma, A) = B", image(rep.element("gamma"), A) == B);
  } else if (k == "homology.inverse") {
    const auto &A = rep.set("A"), &E = rep.set("E"), &res = rep.set("result");
    const auto &alpha = rep.element("alpha"), &beta = rep.element("beta");
    int n = A.arity();
    ClopenSet Aalpha = image(alpha, A);
    r.check("A properly inside A alpha", is_proper_subset(A, Aalpha));
    r.check("A beta properly inside E",
            is_proper_subset(image(beta, A), E));
    r.check("result = A alpha minus (A u A beta)",
            res == set_difference(Aalpha,
                                  set_union(A, image(beta, A))));
    r.check("classes of A and the result sum to zero",
            (A.weight() + res.weight()) % (n - 1) == 0);
    ClopenSet un = set_union(A, res);
    r.check("A u result proper with a class-zero witness",
            are_disjoint(A, res) && un.is_proper() &&
                orbit_witness(un, representative_of(Arity(n), 0)).all_pass());
  } else if (k == "witness.even_realization") {
    const auto& delta = rep.element("delta");
    r.check("support(delta) subset of the block union",
            is_subset(support(delta), rep.set("union")));
  } else {
    throw Error("verify: unknown witness kind " + k);
  }
}

inline void verify_freeness(const FreenessCertificate& c, VerifyResult& r) {
  ClopenSet un = set_union(set_union(c.A, c.B), set_union(c.C, c.D));
  r.check("blocks partition the space",
          un.is_whole() && are_disjoint(c.A, c.B) && are_disjoint(c.A, c.C) &&
              are_disjoint(c.A, c.D) && are_disjoint(c.B, c.C) &&
              are_disjoint(c.B, c.D) && are_disjoint(c.C, c.D));
  r.check("image(gamma, C u D) subset of D",
          is_subset(image(c.gamma, set_union(c.C, c.D)), c.D));
  r.check("image(tau, B u D) subset of C",
          is_subset(image(c.tau, set_union(c.B, c.D)), c.C));
  r.check("gamma pointwise-stabilises A", pointwise_stabilises(c.gamma, c.A));
  r.check("tau pointwise-stabilises A", pointwise_stabilises(c.tau, c.A));
  r.check("a = gamma and b = gamma^(tau^-1)",
          c.a == c.gamma && c.b == conjugate(c.gamma, invert(c.tau)));
  r.check("all reduced words of length <= " + std::to_string(c.word_depth) +
              " are non-trivial",
          detail::reduced_words_nontrivial(c.a, c.b, c.word_depth));
  r.check("verdict consistent", c.verdict == "certified");
}

inline void verify_generation(const GenerationCertificate& c, VerifyResult& r) {
  bool supported = true, orders = true;
  for (const auto& [p, w] : c.pairs) {
    supported = supported && is_subset(support(p), c.domain) &&
                is_subset(support(w), c.domain);
    OrderResult po = order(p, 64), wo = order(w, 64);
    orders = orders && po.order &&
             *po.order == static_cast<uint64_t>(c.n_order) && wo.order &&
             *wo.order == static_cast<uint64_t>(c.n_order);
  }
  r.check("pairs supported in the domain", supported);
  r.check("pairs have the target order", orders);
  r.check("one word slot per target", c.targets.size() == c.target_words.size());
  std::vector<PrefixBijection> gens = c.commutators();
  bool all_found = true, words_ok = true;
  for (size_t i = 0; i < c.targets.size() && i < c.target_words.size(); ++i) {
    if (c.target_words[i].empty()) {
      all_found = all_found && c.targets[i].is_identity();
      continue;
    }
    words_ok = words_ok && evaluate_word(GroupWord::parse(c.target_words[i]),
                                         gens) == c.targets[i];
  }
  r.check("recorded words multiply out to their targets", words_ok);
  r.check("status consistent with the search outcome",
          (c.status == "verified" && all_found) ||
              c.status == "inconclusive");
  if (c.status == "inconclusive") r.inconclusive = true;
}

inline void verify_twogen(const TwoGenCertificate& c, VerifyResult& r) {
  Arity arity(c.n);
  int j = c.j, x = c.x;
  r.check("x >= 2j(j+1)", x >= 2 * j * (j + 1));
  r.check("|X| = 2x+1 and |Y| = x",
          static_cast<int>(c.X.size()) == 2 * x + 1 &&
              static_cast<int>(c.Y.size()) == x);
  r.check("X starts at C and Y starts at D",
          !c.X.empty() && c.X.front() == c.C && !c.Y.empty() &&
              c.Y.front() == c.D);

  ClopenSet un = ClopenSet::empty(arity);
  bool disjoint_blocks = true;
  for (const auto& b : c.X) {
    disjoint_blocks = disjoint_blocks && are_disjoint(un, b);
    un = set_union(un, b);
  }
  for (const auto& b : c.Y) {
    disjoint_blocks = disjoint_blocks && are_disjoint(un, b);
    un = set_union(un, b);
  }
  r.check("X and Y together partition the space",
          disjoint_blocks && un.is_whole());

  r.check("sigma = pi tau", c.sigma == compose(c.pi, c.tau));
  bool cycles_ok = true;
  for (size_t i = 0; i < c.X.size(); ++i)
    cycles_ok =
        cycles_ok && image(c.sigma, c.X[i]) == c.X[(i + 1) % c.X.size()];
  for (size_t i = 0; i < c.Y.size(); ++i)
    cycles_ok =
        cycles_ok && image(c.sigma, c.Y[i]) == c.Y[(i + 1) % c.Y.size()];
  r.check("sigma cycles the X blocks and the Y blocks", cycles_ok);

  uint64_t want = std::lcm<uint64_t>(2 * x + 1, x);
  OrderResult so = order(c.sigma, 4 * want);
  r.check("order(sigma) = lcm(2x+1, x)", so.order && *so.order == want);

  r.check("generation certificate matches C u D",
          c.generation.domain == set_union(c.C, c.D) &&
              c.generation.j == j && c.generation.n_order == c.order_target);
  verify_generation(c.generation, r);

  PrefixBijection zeta = PrefixBijection::identity(arity);
  std::vector<ClopenSet> supports;
  bool enough_pairs = static_cast<int>(c.generation.pairs.size()) >= j;
  r.check("generation certificate has j pairs", enough_pairs);
  if (enough_pairs) {
    for (int k = 1; k <= j; ++k) {
      const auto& [psi, omega] = c.generation.pairs[static_cast<size_t>(k - 1)];
      PrefixBijection a = conjugate(psi, power(c.sigma, k));
      PrefixBijection b = conjugate(omega, power(c.sigma, k * (j + 1)));
      supports.push_back(support(a));
      supports.push_back(support(b));
      zeta = compose(compose(zeta, a), b);
    }
    bool disjoint_pieces = true;
    for (size_t i = 0; i < supports.size(); ++i)
      for (size_t s = i + 1; s < supports.size(); ++s)
        disjoint_pieces = disjoint_pieces &&
                          are_disjoint(supports[i], supports[s]);
    r.check("supports of the 2j conjugated pieces are pairwise disjoint",
            disjoint_pieces);
    r.check("zeta is the stated product of conjugated pieces", zeta == c.zeta);
    OrderResult zo = order(c.zeta, 64);
    r.check("order(zeta) = target order",
            zo.order && *zo.order == static_cast<uint64_t>(c.order_target));
    for (int k = 1; k <= j; ++k) {
      const auto& [psi, omega] = c.generation.pairs[static_cast<size_t>(k - 1)];
      PrefixBijection lhs =
          commutator(conjugate(c.zeta, power(c.sigma, -k)),
                     conjugate(c.zeta, power(c.sigma, -k * (j + 1))));
      r.check("recovery identity for k = " + std::to_string(k),
              lhs == commutator(psi, omega));
    }
  }

  TwoGenGraph g = transition_graph(set_union(c.C, c.D), c.sigma, 4 * want);
  r.check("graph T connected (proper-intersection reading)", g.connected);
  r.check("orbit of C u D under sigma covers the space", g.covers);
  r.check("stored graph matches the recomputation",
          g.vertices.size() == c.graph.vertices.size() &&
              g.edges == c.graph.edges && g.connected == c.graph.connected &&
              g.covers == c.graph.covers);
  bool pass = true;
  for (const auto& cond : r.conditions) pass = pass && cond.pass;
  r.check("status consistent",
          (pass && (c.status == (r.inconclusive ? "inconclusive" : "verified"))) ||
              (!pass && c.status == "failed"));
}

}  // namespace detail

// Dispatch on the "kind" field.  Throws Error on malformed input (the CLI
// maps that to exit code 3).
inline VerifyResult verify_certificate(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind"))
    throw Error("verify: document has no kind");
  VerifyResult r;
  r.kind = doc.at("kind").get<std::string>();
  if (r.kind == "freeness") {
    detail::verify_freeness(freeness_from_json(doc), r);
  } else if (r.kind == "generation") {
    detail::verify_generation(generation_from_json(doc), r);
  } else if (r.kind == "twogen") {
    detail::verify_twogen(twogen_from_json(doc), r);
  } else if (r.kind == "homology.partition") {
    Arity arity(doc.at("n").get<int>());
    std::vector<ClopenSet> blocks;
    for (const auto& b : doc.at("blocks")) blocks.push_back(clopen_from_json(b));
    std::vector<int> targets = doc.at("targets").get<std::vector<int>>();
    r.check("one block per target", blocks.size() == targets.size());
    ClopenSet un = ClopenSet::empty(arity);
    bool disjoint = true, classes = true;
    for (size_t i = 0; i < blocks.size(); ++i) {
      disjoint = disjoint && are_disjoint(un, blocks[i]);
      un = set_union(un, blocks[i]);
      if (i < targets.size())
        classes = classes &&
                  blocks[i].weight() % (arity.n - 1) ==
                      ((targets[i] % (arity.n - 1)) + arity.n - 1) % (arity.n - 1);
    }
    r.check("blocks are pairwise disjoint and cover the space",
            disjoint && un.is_whole());
    r.check("block classes match the targets", classes);
  } else if (r.kind == "lawlessness") {
    GroupWord w = GroupWord::parse(doc.at("word").get<std::string>());
    std::vector<PrefixBijection> tuple;
    for (const auto& t : doc.at("tuple")) tuple.push_back(element_from_json(t));
    PrefixBijection value = element_from_json(doc.at("value"));
    r.check("value = w(tuple)", evaluate_word(w, tuple) == value);
    r.check("value non-trivial", !value.is_identity());
  } else {
    detail::verify_witness_report(report_from_json(doc), r);
  }
  return r;
}

}  // namespace vigor

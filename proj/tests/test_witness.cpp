#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vigor/orbit.hpp"
#include "vigor/random.hpp"
#include "vigor/witness.hpp"

using namespace vigor;

namespace {

// a random proper non-empty clopen subset of A
ClopenSet proper_subset_of(Rng& rng, const ClopenSet& A) {
  Arity arity(A.arity());
  for (;;) {
    ClopenSet s = set_intersection(A, rng.clopen(arity, 4, false));
    if (!s.is_empty() && s != A) return s;
  }
}

}  // namespace

TEST_CASE("vigorous witness on reference shapes") {
  Arity n2(2);
  {
    WitnessReport r = vigorous_witness(ClopenSet::cone(n2, "0"),
                                       ClopenSet::cone(n2, "00"),
                                       ClopenSet::cone(n2, "011"));
    CHECK(r.all_pass());
    CHECK(is_subset(support(r.element("gamma")), ClopenSet::cone(n2, "0")));
    CHECK(is_subset(image(r.element("gamma"), ClopenSet::cone(n2, "00")),
                    ClopenSet::cone(n2, "011")));
  }
  {
    WitnessReport r = vigorous_witness(ClopenSet::whole(n2),
                                       ClopenSet::cone(n2, "0"),
                                       ClopenSet::cone(n2, "0"));
    CHECK(r.all_pass());
  }
  {
    Arity n3(3);
    WitnessReport r = vigorous_witness(ClopenSet::whole(n3),
                                       ClopenSet::cone(n3, "0"),
                                       ClopenSet::cone(n3, "1"));
    CHECK(r.all_pass());
    // target weight stays odd inside the cone at 1
    ClopenSet img = image(r.element("gamma"), ClopenSet::cone(n3, "0"));
    CHECK(img.weight() % 2 == 1);
  }
  CHECK_THROWS_AS(vigorous_witness(ClopenSet::cone(n2, "0"),
                                   ClopenSet::cone(n2, "0"),
                                   ClopenSet::cone(n2, "00")),
                  Error);
}

TEST_CASE("vigorous witness randomized") {
  Rng rng(101);
  for (int n : {2, 3}) {
    Arity arity(n);
    for (int trial = 0; trial < 60; ++trial) {
      ClopenSet A = rng.clopen(arity, 3, false);
      if (A.is_empty() || A.weight() < 1) continue;
      if (A.max_depth() > 0 && A.weight() == 1 && A.cones()[0].size() > 3)
        continue;
      ClopenSet B = proper_subset_of(rng, A);
      ClopenSet C = proper_subset_of(rng, A);
      WitnessReport r = vigorous_witness(A, B, C);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("moved set") {
  Arity n2(2);
  WitnessReport r1 = moved_set(PrefixBijection::transposition(n2, "0", "1"));
  CHECK(r1.set("Y") == ClopenSet::cone(n2, "0"));
  WitnessReport r2 = moved_set(PrefixBijection::transposition(n2, "00", "01"));
  CHECK(r2.set("Y") == ClopenSet::cone(n2, "00"));
  CHECK(r2.all_pass());
  CHECK_THROWS_AS(moved_set(PrefixBijection::identity(n2)), Error);

  Rng rng(7);
  for (int n : {2, 3}) {
    Arity arity(n);
    for (int trial = 0; trial < 250; ++trial) {
      PrefixBijection g = rng.nonidentity_element(arity, 3);
      WitnessReport r = moved_set(g);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("ssgp factorization") {
  Arity n2(2);
  ClopenSet U = ClopenSet::cone(n2, "0");
  {
    WitnessReport r =
        ssgp_factor(PrefixBijection::transposition(n2, "000", "001"), U);
    CHECK(r.all_pass());
    CHECK(compose(r.element("mu"), r.element("nu")) ==
          PrefixBijection::transposition(n2, "000", "001"));
  }
  {
    WitnessReport r = ssgp_factor(PrefixBijection::identity(n2), U);
    CHECK(r.all_pass());
  }
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    PrefixBijection eta = rng.element_supported_in(U, 3);
    WitnessReport r = ssgp_factor(eta, U);
    CHECK(r.all_pass());
    CHECK(is_proper_subset(r.set("Vmu"), U));
    CHECK(is_proper_subset(r.set("Vnu"), U));
  }
}

TEST_CASE("split by stabilisers, reference shape") {
  Arity n2(2);
  ClopenSet C = ClopenSet::cone(n2, "10"), D = ClopenSet::cone(n2, "11"),
            L = ClopenSet::cone(n2, "1");
  PrefixBijection eta = PrefixBijection::transposition(n2, "00", "01");
  WitnessReport r = split_by_stabilisers(eta, L, C, D);
  CHECK(r.all_pass());
  PrefixBijection mu = r.element("mu"), nu = r.element("nu");
  CHECK(compose(compose(mu, nu), invert(mu)) == eta);
}

TEST_CASE("split by stabilisers randomized") {
  Rng rng(17);
  Arity n2(2);
  int done = 0;
  while (done < 120) {
    // random partition of the depth-3 cones into C, D, B
    std::vector<Word> all = all_words(n2, 3);
    std::shuffle(all.begin(), all.end(), rng.engine());
    size_t c_sz = 1 + rng.below(3), d_sz = 1 + rng.below(3);
    if (c_sz + d_sz + 1 > all.size()) continue;
    ClopenSet C = ClopenSet::canonicalize(
        n2, std::vector<Word>(all.begin(), all.begin() + c_sz));
    ClopenSet D = ClopenSet::canonicalize(
        n2, std::vector<Word>(all.begin() + c_sz, all.begin() + c_sz + d_sz));
    ClopenSet L = rng.clopen(n2, 3);
    ClopenSet rest = set_complement(L);
    if (rest.is_empty()) continue;
    PrefixBijection eta = rng.element_supported_in(rest, 2);
    WitnessReport r = split_by_stabilisers(eta, L, C, D);
    CHECK(r.all_pass());
    ++done;
  }
}

TEST_CASE("the stabiliser composite keeps factors off A") {
  // for eta fixing A, the chain produces pstab(A u C) and pstab(A u D)
  // elements multiplying back to eta
  Arity n2(2);
  Rng rng(19);
  ClopenSet A = ClopenSet::cone(n2, "00"), C = ClopenSet::cone(n2, "01"),
            D = ClopenSet::cone(n2, "10");
  ClopenSet Omega = set_complement(A);
  for (int trial = 0; trial < 50; ++trial) {
    PrefixBijection eta = rng.element_supported_in(Omega, 3);
    WitnessReport f = ssgp_factor(eta, Omega);
    CHECK(f.all_pass());
    std::vector<PrefixBijection> product_parts;
    for (const std::string name : {"mu", "nu"}) {
      PrefixBijection xi = f.element(name);
      ClopenSet V = f.set(name == "mu" ? "Vmu" : "Vnu");
      ClopenSet L = set_difference(Omega, V);
      WitnessReport s = split_by_stabilisers(xi, L, C, D, Omega);
      CHECK(s.all_pass());
      // eta factors through elements fixing A u C or A u D pointwise
      for (const std::string part : {"mu", "nu"})
        CHECK(is_subset(support(s.element(part)), Omega));
      product_parts.push_back(s.element("mu"));
      product_parts.push_back(s.element("nu"));
      product_parts.push_back(invert(s.element("mu")));
    }
    PrefixBijection back = PrefixBijection::identity(n2);
    for (const auto& p : product_parts) back = compose(back, p);
    CHECK(back == eta);
  }
}

TEST_CASE("minime embedding is a homomorphism") {
  Arity n2(2);
  Rng rng(29);
  ClopenSet B = ClopenSet::cone(n2, "0"), C = ClopenSet::cone(n2, "10"),
            D = ClopenSet::cone(n2, "11");
  PrefixBijection delta =
      vigorous_witness(set_union(B, C), B, ClopenSet::cone(n2, "00"))
          .element("gamma");
  MinimeEmbedding emb = minime_embed(B, C, D, delta);
  CHECK(emb.apply(PrefixBijection::identity(n2)).is_identity());
  for (int trial = 0; trial < 100; ++trial) {
    PrefixBijection g1 = rng.element(n2, 3), g2 = rng.element(n2, 3);
    PrefixBijection f1 = emb.apply(g1), f2 = emb.apply(g2);
    CHECK(emb.apply(compose(g1, g2)) == compose(f1, f2));
    CHECK(is_subset(support(f1), emb.J));
    CHECK(pointwise_stabilises(f1, emb.A));
  }
}

TEST_CASE("minime shrink") {
  Arity n2(2);
  {
    MinimeShrink s =
        minime_shrink(ClopenSet::cone(n2, "00"), ClopenSet::cone(n2, "0"));
    CHECK(is_proper_subset(ClopenSet::cone(n2, "00"), s.J));
    CHECK(is_proper_subset(s.J, ClopenSet::cone(n2, "0")));
    CHECK(s.apply(PrefixBijection::identity(n2)).is_identity());
  }
  Rng rng(37);
  int done = 0;
  while (done < 100) {
    ClopenSet K = rng.clopen(n2, 3);
    ClopenSet I = proper_subset_of(rng, K);
    MinimeShrink s = minime_shrink(I, K);
    CHECK(is_proper_subset(I, s.J));
    CHECK(is_proper_subset(s.J, K));
    PrefixBijection g = rng.element(n2, 3);
    PrefixBijection fg = s.apply(g);
    CHECK(is_subset(support(fg), s.J));
    ClopenSet agree = set_intersection(I, image(invert(g), I));
    if (!agree.is_empty()) CHECK(agree_on(g, fg, agree));
    WitnessReport rep = minime_shrink_report(s, g);
    CHECK(rep.all_pass());
    ++done;
  }
}

TEST_CASE("glue single and simple pieces") {
  Arity n2(2);
  Rng rng(43);
  PrefixBijection g = rng.element(n2, 3);
  WitnessReport whole = glue({{ClopenSet::whole(n2), g}});
  CHECK(whole.all_pass());
  CHECK(whole.element("chi") == g);

  PrefixBijection t = PrefixBijection::transposition(n2, "0", "1");
  WitnessReport swapped =
      glue({{ClopenSet::cone(n2, "0"), t}, {ClopenSet::cone(n2, "1"), t}});
  CHECK(swapped.all_pass());
  CHECK(swapped.element("chi") == t);
}

TEST_CASE("glue randomized cross-check") {
  Arity n2(2);
  Rng rng(47);
  int done = 0;
  while (done < 100) {
    size_t k = 2 + rng.below(3);
    std::vector<Word> all = all_words(n2, 3);
    std::shuffle(all.begin(), all.end(), rng.engine());
    std::vector<GluePiece> pieces;
    ClopenSet ranges = ClopenSet::empty(n2);
    bool ok = true;
    size_t per = all.size() / (k + 1);  // leave some cones uncovered
    for (size_t i = 0; i < k && ok; ++i) {
      ClopenSet Di = ClopenSet::canonicalize(
          n2, std::vector<Word>(all.begin() + static_cast<long>(i * per),
                                all.begin() + static_cast<long>((i + 1) * per)));
      PrefixBijection gi = rng.element(n2, 2);
      ClopenSet Ri = image(gi, Di);
      if (!are_disjoint(ranges, Ri)) {
        ok = false;
        break;
      }
      ranges = set_union(ranges, Ri);
      pieces.push_back({Di, gi});
    }
    if (!ok) continue;
    WitnessReport r = glue(pieces);
    CHECK(r.all_pass());
    ++done;
  }
}

TEST_CASE("small support factorization") {
  Arity n2(2);
  {
    WitnessReport r =
        small_support_factor(PrefixBijection::transposition(n2, "00", "01"));
    CHECK(r.all_pass());
  }
  Rng rng(53);
  for (int n : {2, 3}) {
    Arity arity(n);
    for (int trial = 0; trial < 100; ++trial) {
      PrefixBijection g = rng.nonidentity_element(arity, 3);
      WitnessReport r = small_support_factor(g);
      CHECK(r.all_pass());
      CHECK(compose(r.element("alpha"), r.element("beta")) == g);
      CHECK(r.set("A").is_proper());
      CHECK(r.set("B").is_proper());
    }
  }
  // support inside one half still yields proper stabilised blocks
  Rng rng2(59);
  PrefixBijection g = rng2.element_supported_in(ClopenSet::cone(n2, "0"), 3);
  while (g.is_identity())
    g = rng2.element_supported_in(ClopenSet::cone(n2, "0"), 3);
  WitnessReport r = small_support_factor(g);
  CHECK(r.all_pass());
}

TEST_CASE("flexibility route to vigorous witnesses") {
  Rng rng(61);
  for (int n : {2, 3}) {
    Arity arity(n);
    for (int trial = 0; trial < 40; ++trial) {
      ClopenSet A = rng.clopen(arity, 3, false);
      if (A.is_empty()) continue;
      ClopenSet B = proper_subset_of(rng, A);
      ClopenSet C = proper_subset_of(rng, A);
      WitnessReport r = flexible_to_vigorous_witness(A, B, C);
      CHECK(r.all_pass());
      CHECK(is_subset(support(r.element("gamma")), A));
    }
  }
}

TEST_CASE("normal closure trick") {
  Arity n2(2);
  ClopenSet J = ClopenSet::cone(n2, "11");
  PrefixBijection delta = PrefixBijection::transposition(n2, "0", "10");
  {
    WitnessReport r = normal_closure_trick(
        delta, PrefixBijection::identity(n2), PrefixBijection::identity(n2), J);
    CHECK(r.all_pass());
    CHECK(r.element("rhs").is_identity());
  }
  Rng rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    PrefixBijection mu = rng.element_supported_in(J, 2);
    PrefixBijection nu = rng.element_supported_in(J, 2);
    PrefixBijection d = rng.nonidentity_element(n2, 3);
    WitnessReport r = normal_closure_trick(d, mu, nu, J);
    CHECK(r.all_pass());
    CHECK(r.element("rhs") == commutator(mu, nu));
  }
}

TEST_CASE("precondition violations raise errors") {
  Arity n2(2);
  ClopenSet zero = ClopenSet::cone(n2, "0");
  CHECK_THROWS_AS(ssgp_factor(PrefixBijection::transposition(n2, "0", "1"),
                              zero),
                  Error);
  CHECK_THROWS_AS(minime_shrink(zero, zero), Error);
  CHECK_THROWS_AS(small_support_factor(PrefixBijection::identity(n2)), Error);
  CHECK_THROWS_AS(glue({}), Error);
}

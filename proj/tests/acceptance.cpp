// acceptance -- one pass/fail line per top-level criterion.  Each check
// re-derives its expectations independently of the library internals:
// brute-force membership tables, exhaustive enumeration, serialized
// round-trips through the JSON verifier, and mutation sensitivity of the
// golden corpus.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>

#include "vigor/json_io.hpp"
#include "vigor/random.hpp"
#include "vigor/verify.hpp"

using namespace vigor;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, double limit_s,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (secs > limit_s) {
    ok = false;
    err = "time limit exceeded";
  }
  if (!ok) ++g_failures;
  std::cout << "[" << num << "/9] " << name << ": "
            << (ok ? "PASS" : "FAIL") << " (" << secs << " s)";
  if (!err.empty()) std::cout << " -- " << err;
  std::cout << "\n"
            << std::flush;
}

// every canonical clopen set from <= max_cones cones of depth <= max_depth
std::vector<ClopenSet> small_sets(Arity arity, size_t max_cones,
                                  size_t max_depth) {
  std::vector<Word> pool;
  for (size_t d = 1; d <= max_depth; ++d) {
    auto ws = all_words(arity, d);
    pool.insert(pool.end(), ws.begin(), ws.end());
  }
  std::set<ClopenSet> dedup;
  std::vector<size_t> idx;
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t left) {
    if (!idx.empty()) {
      std::vector<Word> cones;
      for (size_t i : idx) cones.push_back(pool[i]);
      dedup.insert(ClopenSet::canonicalize(arity, cones));
    }
    if (left == 0) return;
    for (size_t i = start; i < pool.size(); ++i) {
      idx.push_back(i);
      rec(i + 1, left - 1);
      idx.pop_back();
    }
  };
  rec(0, max_cones);
  return {dedup.begin(), dedup.end()};
}

// membership table over the lex-ordered depth-d words: the descendants
// of a cone form one contiguous index range
std::vector<bool> table_of(const ClopenSet& s, size_t depth, size_t nwords) {
  int n = s.arity();
  std::vector<bool> t(nwords, false);
  for (const auto& c : s.cones()) {
    size_t idx = 0;
    for (char ch : c) idx = idx * static_cast<size_t>(n) +
                            static_cast<size_t>(ch - '0');
    size_t span = 1;
    for (size_t d = c.size(); d < depth; ++d) span *= static_cast<size_t>(n);
    std::fill(t.begin() + static_cast<long>(idx * span),
              t.begin() + static_cast<long>((idx + 1) * span), true);
  }
  return t;
}

bool ops_match_tables(const ClopenSet& a, const ClopenSet& b, size_t depth,
                      size_t nwords, const std::vector<bool>& ta,
                      const std::vector<bool>& tb) {
  std::vector<bool> tu = table_of(set_union(a, b), depth, nwords);
  std::vector<bool> ti = table_of(set_intersection(a, b), depth, nwords);
  std::vector<bool> tc = table_of(set_complement(a), depth, nwords);
  bool sub = true;
  for (size_t i = 0; i < nwords; ++i) {
    if (tu[i] != (ta[i] || tb[i])) return false;
    if (ti[i] != (ta[i] && tb[i])) return false;
    if (tc[i] == ta[i]) return false;
    sub = sub && (!ta[i] || tb[i]);
  }
  return is_subset(a, b) == sub;
}

ClopenSet proper_subset_of(Rng& rng, const ClopenSet& A) {
  Arity arity(A.arity());
  for (;;) {
    ClopenSet s = set_intersection(A, rng.clopen(arity, 4, false));
    if (!s.is_empty() && s != A) return s;
  }
}

bool verify_ok(const json& doc) {
  VerifyResult r = verify_certificate(doc);
  return r.ok() && !r.inconclusive;
}

// deterministic single-field mutation sites of a JSON document, in a
// fixed enumeration order; the document is mutated one site at a time
std::vector<std::string> mutation_sites(const json& doc) {
  std::vector<std::string> out;
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& node, const std::string& ptr) {
        if (node.is_object()) {
          for (const auto& [k, v] : node.items()) {
            if (k == "schema" || k == "conditions" || k == "desc") continue;
            walk(v, ptr + "/" + k);
          }
        } else if (node.is_array()) {
          for (size_t i = 0; i < node.size(); ++i)
            walk(node[i], ptr + "/" + std::to_string(i));
        } else {
          out.push_back(ptr);
        }
      };
  walk(doc, "");
  return out;
}

json mutate_at(const json& doc, const std::string& ptr, int variant) {
  json m = doc;
  json::json_pointer p(ptr);
  const json& node = doc.at(p);
  if (node.is_number_integer()) {
    m[p] = node.get<long long>() + (variant == 0 ? 1 : -1);
  } else if (node.is_boolean()) {
    m[p] = !node.get<bool>();
  } else if (node.is_string()) {
    std::string s = node.get<std::string>();
    if (!s.empty() &&
        s.find_first_not_of("0123456789") == std::string::npos) {
      if (variant == 0)
        s.back() = s.back() == '0' ? '1' : '0';  // flip a cone digit
      else if (s.size() > 1)
        s.pop_back();  // coarsen the address
      else
        s += "0";  // refine it
    } else if (s.empty()) {
      s = "x1";
    } else {
      s += "?";
    }
    m[p] = s;
  }
  return m;
}

// a mutation "fails loudly" when verify rejects it with a named reason
bool fails_loudly(const json& doc) {
  try {
    VerifyResult r = verify_certificate(doc);
    return !r.ok() && !r.first_failure().empty();
  } catch (const Error& e) {
    return std::string(e.what()).size() > 0;
  } catch (const json::exception&) {
    return true;
  }
}

}  // namespace

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);

  criterion(1, "clopen algebra matches brute-force membership", 10.0, [] {
    for (int n : {2, 3}) {
      Arity arity(n);
      size_t nwords = 1;
      for (int d = 0; d < 6; ++d) nwords *= static_cast<size_t>(n);
      // full cross product over the <= 3-cone pool in arity 2; in arity 3
      // that square is ~10^8 pairs, so every <= 3-cone set is paired with
      // every single-cone set and the <= 2-cone pool is squared instead
      std::vector<ClopenSet> lhs = small_sets(arity, 3, 3);
      std::vector<ClopenSet> rhs = n == 2 ? lhs : small_sets(arity, 1, 3);
      std::vector<std::vector<bool>> lt, rt;
      for (const auto& s : lhs) lt.push_back(table_of(s, 6, nwords));
      for (const auto& s : rhs) rt.push_back(table_of(s, 6, nwords));
      for (size_t i = 0; i < lhs.size(); ++i)
        for (size_t s = 0; s < rhs.size(); ++s)
          if (!ops_match_tables(lhs[i], rhs[s], 6, nwords, lt[i], rt[s]))
            return false;
      if (n != 2) {
        std::vector<ClopenSet> mid = small_sets(arity, 2, 3);
        std::vector<std::vector<bool>> mt;
        for (const auto& s : mid) mt.push_back(table_of(s, 6, nwords));
        for (size_t i = 0; i < mid.size(); ++i)
          for (size_t s = 0; s < mid.size(); ++s)
            if (!ops_match_tables(mid[i], mid[s], 6, nwords, mt[i], mt[s]))
              return false;
      }
      // wider sets randomly
      Rng rng(211);
      for (int trial = 0; trial < 10000; ++trial) {
        ClopenSet a = rng.clopen(arity, 3, false);
        ClopenSet b = rng.clopen(arity, 3, false);
        if (!ops_match_tables(a, b, 6, nwords, table_of(a, 6, nwords),
                              table_of(b, 6, nwords)))
          return false;
      }
    }
    return true;
  });

  criterion(2, "group arithmetic is sound", 10.0, [] {
    Rng rng(223);
    Arity n2(2), n3(3);
    for (int trial = 0; trial < 1000; ++trial) {
      Arity arity = trial % 2 == 0 ? n2 : n3;
      PrefixBijection f = rng.element(arity, 2), g = rng.element(arity, 2),
                      h = rng.element(arity, 2);
      if (!(compose(compose(f, g), h) == compose(f, compose(g, h))))
        return false;
      if (!compose(f, invert(f)).is_identity()) return false;
      // canonical equality coincides with a refinement-table comparison
      PrefixBijection f2 = invert(invert(compose(f, g)));
      PrefixBijection fg = compose(f, g);
      size_t d = std::max(f2.max_depth(), fg.max_depth());
      bool tables_equal = true;
      for (const auto& w : all_words(arity, d))
        if (f2.apply_to_word(w) != fg.apply_to_word(w)) {
          tables_equal = false;
          break;
        }
      if (!(f2 == fg) || !tables_equal) return false;
      bool gh_tables_equal = true;
      size_t d2 = std::max(g.max_depth(), h.max_depth());
      for (const auto& w : all_words(arity, d2))
        if (g.apply_to_word(w) != h.apply_to_word(w)) {
          gh_tables_equal = false;
          break;
        }
      if ((g == h) != gh_tables_equal) return false;
    }
    for (int trial = 0; trial < 500; ++trial) {
      Arity arity = trial % 2 == 0 ? n2 : n3;
      PrefixBijection f = rng.nonidentity_element(arity, 2);
      PrefixBijection h = rng.element(arity, 2);
      if (!(support(conjugate(f, h)) == image(h, support(f)))) return false;
    }
    return true;
  });

  criterion(3, "witness postconditions re-verify independently", 30.0, [] {
    Rng rng(227);
    Arity n2(2);
    auto reverify = [](const WitnessReport& rep) {
      return verify_ok(to_json(rep));
    };
    for (int t = 0; t < 100; ++t) {  // vigorous
      ClopenSet A = rng.clopen(n2, 3, false);
      if (A.is_empty()) {
        --t;
        continue;
      }
      ClopenSet B = proper_subset_of(rng, A), C = proper_subset_of(rng, A);
      if (!reverify(vigorous_witness(A, B, C))) return false;
    }
    ClopenSet U = ClopenSet::cone(n2, "0");
    for (int t = 0; t < 100; ++t)  // ssgp
      if (!reverify(ssgp_factor(rng.element_supported_in(U, 3), U)))
        return false;
    for (int t = 0; t < 100; ++t) {  // split
      ClopenSet L = rng.clopen(n2, 3);
      ClopenSet rest = set_complement(L);
      ClopenSet C = detail::first_proper_subset(ClopenSet::cone(n2, "0"));
      ClopenSet D = set_difference(ClopenSet::cone(n2, "0"), C);
      if (D.is_empty() || !are_disjoint(C, D)) {
        --t;
        continue;
      }
      if (!reverify(split_by_stabilisers(rng.element_supported_in(rest, 2), L,
                                         C, D)))
        return false;
    }
    for (int t = 0; t < 100; ++t)  // small support
      if (!reverify(small_support_factor(rng.nonidentity_element(n2, 3))))
        return false;
    for (int t = 0; t < 100; ++t) {  // minime shrink
      ClopenSet K = rng.clopen(n2, 3);
      ClopenSet I = proper_subset_of(rng, K);
      MinimeShrink s = minime_shrink(I, K);
      if (!verify_ok(to_json(minime_shrink_report(s, rng.element(n2, 3)))))
        return false;
    }
    ClopenSet J = ClopenSet::cone(n2, "11");
    for (int t = 0; t < 100; ++t)  // normal closure
      if (!reverify(normal_closure_trick(rng.nonidentity_element(n2, 3),
                                         rng.element_supported_in(J, 2),
                                         rng.element_supported_in(J, 2), J)))
        return false;
    return true;
  });

  criterion(4, "indirect gluing equals direct gluing", 20.0, [] {
    Rng rng(229);
    Arity n2(2);
    int done = 0;
    while (done < 100) {
      size_t k = 2 + rng.below(3);
      std::vector<Word> all = all_words(n2, 3);
      std::shuffle(all.begin(), all.end(), rng.engine());
      std::vector<GluePiece> pieces;
      ClopenSet ranges = ClopenSet::empty(n2);
      bool ok = true;
      size_t per = all.size() / (k + 1);
      for (size_t i = 0; i < k && ok; ++i) {
        ClopenSet Di = ClopenSet::canonicalize(
            n2,
            std::vector<Word>(all.begin() + static_cast<long>(i * per),
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
      WitnessReport rep = glue(pieces);
      bool has_indirect = false;
      for (const auto& [name, e] : rep.elements)
        has_indirect = has_indirect || name == "chi_indirect";
      if (!has_indirect) continue;  // only count cross-checked instances
      if (!verify_ok(to_json(rep))) return false;
      ++done;
    }
    return true;
  });

  criterion(5, "orbit-class structure", 30.0, [] {
    for (int n : {2, 3, 5}) {
      Arity arity(n);
      // group axioms, identity, exhaustively over residues
      for (int x = 0; x < n - 1; ++x) {
        OrbitClass cx(arity, x);
        if (!(add(cx, zero_class(arity)) == cx)) return false;
        for (int y = 0; y < n - 1; ++y) {
          OrbitClass s = add(cx, OrbitClass(arity, y));
          if (!(s == add(OrbitClass(arity, y), cx))) return false;
          for (int z = 0; z < n - 1; ++z)
            if (!(add(s, OrbitClass(arity, z)) ==
                  add(cx, add(OrbitClass(arity, y), OrbitClass(arity, z)))))
              return false;
        }
      }
      // well-definedness and inverses on concrete sets
      Rng rng(233);
      for (int t = 0; t < 60; ++t) {
        ClopenSet A = rng.clopen(arity, 3);
        ClopenSet B = rng.clopen(arity, 3);
        if (add(class_of(A), class_of(B)).residue !=
            (A.weight() + B.weight()) % (n - 1))
          return false;
        auto [res, rep] = inverse_witness(A);
        if (!rep.all_pass()) return false;
        if (!(add(class_of(A), class_of(res)) == zero_class(arity)))
          return false;
        // totality: everything of the same class is connected by a mover
        WitnessReport w = orbit_witness(
            A, representative_of(arity, class_of(A).residue));
        if (!w.all_pass()) return false;
      }
      // partition_for accepts exactly the residue-sum condition
      for (int k = 2; k <= 3; ++k) {
        std::vector<int> rs(static_cast<size_t>(k), 0);
        for (;;) {
          int sum = 0;
          std::vector<OrbitClass> targets;
          for (int r : rs) {
            sum += r;
            targets.push_back(OrbitClass(arity, r));
          }
          bool expect = sum % (n - 1) == 1 % (n - 1);
          bool got = true;
          try {
            auto blocks = partition_for(targets);
            ClopenSet un = ClopenSet::empty(arity);
            for (size_t i = 0; i < blocks.size(); ++i) {
              if (!(class_of(blocks[i]) == targets[i])) return false;
              if (!are_disjoint(un, blocks[i])) return false;
              un = set_union(un, blocks[i]);
            }
            got = un.is_whole();
          } catch (const Error&) {
            got = false;
          }
          if (got != expect) return false;
          int pos = k - 1;
          while (pos >= 0 && ++rs[static_cast<size_t>(pos)] == n - 1)
            rs[static_cast<size_t>(pos--)] = 0;
          if (pos < 0) break;
        }
      }
    }
    return true;
  });

  criterion(6, "numeric lemma exhaustive through j = 12", 1.0, [] {
    for (int j = 1; j <= 12; ++j)
      for (int i = 1; i <= j; ++i)
        if (!(lemma_num_check(j, i) == std::set<long long>{0})) return false;
    return true;
  });

  criterion(7, "freeness and lawlessness", 60.0, [] {
    FreenessCertificate cert = default_free_pair(8);
    if (!cert.certified()) return false;
    if (!verify_ok(to_json(cert))) return false;
    Rng rng(239);
    for (int t = 0; t < 100; ++t) {
      int len = 1 + static_cast<int>(rng.below(10));
      std::vector<Letter> letters;
      while (static_cast<int>(letters.size()) < len) {
        Letter l{1 + static_cast<int>(rng.below(3)),
                 rng.below(2) == 0 ? 1 : -1};
        if (!letters.empty() && letters.back().var == l.var &&
            letters.back().sign == -l.sign)
          continue;
        letters.push_back(l);
      }
      GroupWord w = GroupWord::from_letters(std::move(letters));
      LawlessnessWitness lw = lawlessness_witness(w);
      if (lw.value.is_identity()) return false;
      if (!(evaluate_word(lw.word, lw.tuple) == lw.value)) return false;
    }
    return true;
  });

  criterion(8, "two-generation pipeline at j = 2", 300.0, [] {
    Arity n2(2);
    auto [C, D] = choose_CD(n2);
    GenerationCertificate gen = generation_certificate_search(
        set_union(C, D), 2, {PrefixBijection::identity(n2)}, 2, 1);
    TwoGenCertificate cert = build_two_generators(n2, 2, gen);
    if (!cert.checks_pass()) return false;
    if (cert.x != 12 || cert.X.size() != 25 || cert.Y.size() != 12)
      return false;
    OrderResult so = order(cert.sigma, 1200);
    if (!so.order || *so.order != 300) return false;
    OrderResult zo = order(cert.zeta, 16);
    if (!zo.order || *zo.order != 2) return false;
    if (!cert.graph.connected || !cert.graph.covers) return false;
    if (cert.status != (gen.status == "verified" ? "verified"
                                                 : "inconclusive"))
      return false;
    VerifyResult v = verify_certificate(to_json(cert));
    if (!v.ok()) return false;
    // an unresolved target must be reported, not hidden
    GenerationCertificate probe =
        generation_certificate_search(set_union(C, D), 2, {}, 2, 0);
    GenerationCertificate weak = generation_certificate_search(
        set_union(C, D), 2, {probe.commutators()[0]}, 2, 0);
    TwoGenCertificate cert2 = build_two_generators(n2, 2, weak);
    if (cert2.status != "inconclusive") return false;
    VerifyResult v2 = verify_certificate(to_json(cert2));
    return v2.ok() && v2.inconclusive;
  });

  criterion(9, "golden corpus is mutation sensitive", 30.0, [] {
    fs::path dir(VIGOR_GOLDEN_DIR);
    int files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() != ".json") continue;
      ++files;
      json doc = json::parse(std::ifstream(entry.path()));
      if (!verify_ok(doc) &&
          !verify_certificate(doc).inconclusive)
        return false;  // must start from a verifying document
      int found = 0;
      for (const std::string& site : mutation_sites(doc)) {
        for (int variant = 0; variant < 2 && found < 10; ++variant) {
          json m = mutate_at(doc, site, variant);
          if (m != doc && fails_loudly(m)) ++found;
        }
        if (found >= 10) break;
      }
      if (found < 10) {
        std::cerr << "  mutation shortfall in "
                  << entry.path().filename().string() << ": " << found
                  << "\n";
        return false;
      }
    }
    return files >= 15;
  });

  return g_failures == 0 ? 0 : 1;
}

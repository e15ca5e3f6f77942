// vigor -- command-line front end.  JSON in, JSON out; diagnostics on
// standard error.  Exit codes: 0 success/verified, 1 verification
// failure, 2 inconclusive, 3 malformed input.

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "vigor/verify.hpp"

namespace {

using vigor::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vigor::Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

vigor::ClopenSet load_clopen(const std::string& path) {
  return vigor::clopen_from_json(load_json(path));
}

vigor::PrefixBijection load_elem(const std::string& path) {
  return vigor::element_from_json(load_json(path));
}

int emit(const json& j, const std::string& out_path, int code = 0) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw vigor::Error("cannot write " + out_path);
    out << text;
  }
  return code;
}

int report_code(const vigor::WitnessReport& rep) {
  return rep.all_pass() ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace vigor;
  CLI::App app{"exact computations in the prefix-exchange groups V_n"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write JSON here instead of stdout");

  // canon
  auto* canon = app.add_subcommand("canon", "canonicalize a clopen set");
  int canon_n = 2;
  std::string canon_cones;
  canon->add_option("--n", canon_n)->required();
  canon->add_option("--cones", canon_cones,
                    "comma-separated cone addresses")->required();

  // compose / support / order
  auto* comp = app.add_subcommand("compose", "compose two elements");
  std::string lhs_path, rhs_path;
  comp->add_option("--lhs", lhs_path)->required();
  comp->add_option("--rhs", rhs_path)->required();

  auto* supp = app.add_subcommand("support", "support of an element");
  std::string supp_path;
  supp->add_option("--elem", supp_path)->required();

  auto* ord = app.add_subcommand("order", "order of an element");
  std::string ord_path;
  uint64_t ord_bound = 1000000;
  ord->add_option("--elem", ord_path)->required();
  ord->add_option("--bound", ord_bound);

  // witness family
  auto* wit = app.add_subcommand("witness", "constructive lemma witnesses");
  wit->require_subcommand(1);
  std::string wA, wB, wC, wD, wL, wU, wJ, wI, wK, welem, wmu, wnu, wsample;
  auto* wv = wit->add_subcommand("vigorous");
  wv->add_option("--A", wA)->required();
  wv->add_option("--B", wB)->required();
  wv->add_option("--C", wC)->required();
  auto* wm = wit->add_subcommand("moved");
  wm->add_option("--elem", welem)->required();
  auto* ws = wit->add_subcommand("ssgp");
  ws->add_option("--elem", welem)->required();
  ws->add_option("--U", wU)->required();
  auto* wsp = wit->add_subcommand("split");
  wsp->add_option("--elem", welem)->required();
  wsp->add_option("--L", wL)->required();
  wsp->add_option("--C", wC)->required();
  wsp->add_option("--D", wD)->required();
  auto* wfx = wit->add_subcommand("flexible");
  wfx->add_option("--A", wA)->required();
  wfx->add_option("--B", wB)->required();
  wfx->add_option("--C", wC)->required();
  auto* wnc = wit->add_subcommand("normalclosure");
  wnc->add_option("--delta", welem)->required();
  wnc->add_option("--mu", wmu)->required();
  wnc->add_option("--nu", wnu)->required();
  wnc->add_option("--J", wJ)->required();
  auto* wmin = wit->add_subcommand("minime");
  wmin->add_option("--I", wI)->required();
  wmin->add_option("--K", wK)->required();
  wmin->add_option("--sample", wsample)->required();

  // factor
  auto* fac = app.add_subcommand("factor", "factorization procedures");
  fac->require_subcommand(1);
  std::string felem, fU;
  auto* fsm = fac->add_subcommand("small");
  fsm->add_option("--elem", felem)->required();
  auto* fss = fac->add_subcommand("ssgp");
  fss->add_option("--elem", felem)->required();
  fss->add_option("--U", fU)->required();

  // glue
  auto* glu = app.add_subcommand("glue", "glue partial prefix maps");
  std::string glue_path;
  glu->add_option("--pieces", glue_path,
                  "JSON array of {D, gamma} objects")->required();

  // homology
  auto* hom = app.add_subcommand("homology", "orbit-class computations");
  hom->require_subcommand(1);
  std::string hset, hA, hB, htargets;
  int hn = 2, hx = 0, hy = 0;
  auto* hc = hom->add_subcommand("class");
  hc->add_option("--set", hset)->required();
  auto* ha = hom->add_subcommand("add");
  ha->add_option("--n", hn)->required();
  ha->add_option("--x", hx)->required();
  ha->add_option("--y", hy)->required();
  auto* hi = hom->add_subcommand("inverse");
  hi->add_option("--set", hset)->required();
  auto* hp = hom->add_subcommand("partition");
  hp->add_option("--n", hn)->required();
  hp->add_option("--targets", htargets, "comma-separated residues")->required();
  auto* hw = hom->add_subcommand("witness");
  hw->add_option("--A", hA)->required();
  hw->add_option("--B", hB)->required();

  // free / laws
  auto* fre = app.add_subcommand("free", "free subgroup certificates");
  fre->require_subcommand(1);
  auto* fpp = fre->add_subcommand("pingpong");
  std::string pA, pB, pC, pD;
  int pdepth = 8;
  fpp->add_option("--A", pA)->required();
  fpp->add_option("--B", pB)->required();
  fpp->add_option("--C", pC)->required();
  fpp->add_option("--D", pD)->required();
  fpp->add_option("--depth", pdepth);

  auto* law = app.add_subcommand("laws", "lawlessness machinery");
  law->require_subcommand(1);
  std::string law_word, law_A;
  uint64_t law_seed = 0;
  int law_count = 10;
  auto* lw = law->add_subcommand("witness");
  lw->add_option("--word", law_word)->required();
  auto* ls = law->add_subcommand("sample");
  ls->add_option("--word", law_word)->required();
  ls->add_option("--A", law_A)->required();
  ls->add_option("--seed", law_seed);
  ls->add_option("--count", law_count);

  // twogen
  auto* tg = app.add_subcommand("twogen", "two-generator pipeline");
  int tg_n = 2, tg_order = 2, tg_j = 2, tg_depth = 6;
  std::string tg_cert;
  tg->add_option("--n", tg_n);
  tg->add_option("--order", tg_order);
  tg->add_option("--j", tg_j);
  tg->add_option("--bfs-depth", tg_depth);
  tg->add_option("--cert", tg_cert, "pre-built generation certificate");

  // verify
  auto* ver = app.add_subcommand("verify", "re-check any certificate");
  std::string ver_path;
  ver->add_option("file", ver_path)->required();

  // let the global --out appear after a subcommand too
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands({})) {
      s->fallthrough();
      allow_fallthrough(s);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*canon) {
      ClopenSet a = ClopenSet::canonicalize(Arity(canon_n),
                                            split_list(canon_cones));
      return emit(json{{"schema", kSchema}, {"n", a.arity()},
                       {"cones", a.cones()}},
                  out_path);
    }
    if (*comp) {
      PrefixBijection f = compose(load_elem(lhs_path), load_elem(rhs_path));
      json j = to_json(f);
      j["schema"] = kSchema;
      return emit(j, out_path);
    }
    if (*supp) {
      json j = to_json(support(load_elem(supp_path)));
      j["schema"] = kSchema;
      return emit(j, out_path);
    }
    if (*ord) {
      OrderResult r = order(load_elem(ord_path), ord_bound);
      json j{{"schema", kSchema}, {"bound", r.bound}};
      if (r.order)
        j["order"] = *r.order;
      else
        j["order"] = nullptr;
      return emit(j, out_path, r.order ? 0 : 2);
    }
    if (*wit) {
      WitnessReport rep;
      if (*wv)
        rep = vigorous_witness(load_clopen(wA), load_clopen(wB),
                               load_clopen(wC));
      else if (*wm)
        rep = moved_set(load_elem(welem));
      else if (*ws)
        rep = ssgp_factor(load_elem(welem), load_clopen(wU));
      else if (*wsp)
        rep = split_by_stabilisers(load_elem(welem), load_clopen(wL),
                                   load_clopen(wC), load_clopen(wD));
      else if (*wfx)
        rep = flexible_to_vigorous_witness(load_clopen(wA), load_clopen(wB),
                                           load_clopen(wC));
      else if (*wnc)
        rep = normal_closure_trick(load_elem(welem), load_elem(wmu),
                                   load_elem(wnu), load_clopen(wJ));
      else if (*wmin)
        rep = minime_shrink_report(
            minime_shrink(load_clopen(wI), load_clopen(wK)),
            load_elem(wsample));
      return emit(to_json(rep), out_path, report_code(rep));
    }
    if (*fac) {
      WitnessReport rep;
      if (*fsm)
        rep = small_support_factor(load_elem(felem));
      else if (*fss)
        rep = ssgp_factor(load_elem(felem), load_clopen(fU));
      return emit(to_json(rep), out_path, report_code(rep));
    }
    if (*glu) {
      json arr = load_json(glue_path);
      std::vector<GluePiece> pieces;
      for (const auto& p : arr)
        pieces.push_back({clopen_from_json(p.at("D")),
                          element_from_json(p.at("gamma"))});
      WitnessReport rep = glue(pieces);
      return emit(to_json(rep), out_path, report_code(rep));
    }
    if (*hom) {
      if (*hc) {
        OrbitClass c = class_of(load_clopen(hset));
        return emit(json{{"schema", kSchema}, {"n", c.n},
                         {"residue", c.residue}},
                    out_path);
      }
      if (*ha) {
        OrbitClass c = add(OrbitClass(Arity(hn), hx), OrbitClass(Arity(hn), hy));
        return emit(json{{"schema", kSchema}, {"n", c.n},
                         {"residue", c.residue}},
                    out_path);
      }
      if (*hi) {
        auto [res, rep] = inverse_witness(load_clopen(hset));
        json j = to_json(rep);
        j["result"] = to_json(res);
        return emit(j, out_path, report_code(rep));
      }
      if (*hp) {
        std::vector<OrbitClass> targets;
        std::vector<int> residues;
        for (const auto& t : split_list(htargets)) {
          residues.push_back(std::stoi(t));
          targets.emplace_back(Arity(hn), residues.back());
        }
        std::vector<ClopenSet> blocks = partition_for(targets);
        json jb = json::array();
        for (const auto& b : blocks) jb.push_back(to_json(b));
        return emit(json{{"schema", kSchema}, {"kind", "homology.partition"},
                         {"n", hn}, {"targets", residues}, {"blocks", jb}},
                    out_path);
      }
      if (*hw) {
        WitnessReport rep = orbit_witness(load_clopen(hA), load_clopen(hB));
        return emit(to_json(rep), out_path, report_code(rep));
      }
    }
    if (*fre) {
      FreenessCertificate cert =
          pingpong_pair(load_clopen(pA), load_clopen(pB), load_clopen(pC),
                        load_clopen(pD), pdepth);
      return emit(to_json(cert), out_path, cert.certified() ? 0 : 1);
    }
    if (*law) {
      GroupWord w = GroupWord::parse(law_word);
      if (*lw) {
        LawlessnessWitness lwit = lawlessness_witness(w);
        json tup = json::array();
        for (const auto& t : lwit.tuple) tup.push_back(to_json(t));
        return emit(json{{"schema", kSchema}, {"kind", "lawlessness"},
                         {"word", w.str()}, {"tuple", tup},
                         {"value", to_json(lwit.value)}},
                    out_path);
      }
      std::vector<PrefixBijection> sample =
          verbal_small_sample(w, load_clopen(law_A), law_seed, law_count);
      json js = json::array();
      for (const auto& g : sample) js.push_back(to_json(g));
      return emit(json{{"schema", kSchema}, {"kind", "verbal_sample"},
                       {"word", w.str()}, {"seed", law_seed},
                       {"elements", js}},
                  out_path);
    }
    if (*tg) {
      Arity arity(tg_n);
      GenerationCertificate gen;
      if (!tg_cert.empty()) {
        gen = generation_from_json(load_json(tg_cert));
      } else {
        auto [C, D] = choose_CD(arity);
        ClopenSet dom = set_union(C, D);
        // default targets: the identity and the first commutator itself
        GenerationCertificate probe = generation_certificate_search(
            dom, tg_order, {}, tg_j, 0);
        std::vector<PrefixBijection> targets = {
            PrefixBijection::identity(arity),
            commutator(probe.pairs.front().first, probe.pairs.front().second)};
        gen = generation_certificate_search(dom, tg_order, targets, tg_j,
                                            tg_depth);
      }
      TwoGenCertificate cert = build_two_generators(arity, tg_order, gen);
      int code = cert.status == "verified"
                     ? 0
                     : (cert.status == "inconclusive" ? 2 : 1);
      return emit(to_json(cert), out_path, code);
    }
    if (*ver) {
      VerifyResult r = verify_certificate(load_json(ver_path));
      json j{{"schema", kSchema}, {"kind", r.kind},
             {"conditions", to_json(r.conditions)},
             {"inconclusive", r.inconclusive},
             {"exit", r.exit_code()}};
      if (!r.ok()) j["first_failure"] = r.first_failure();
      return emit(j, out_path, r.exit_code());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

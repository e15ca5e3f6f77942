// json_io.hpp -- stable JSON encodings for every artifact the CLI can
// emit or consume.  Schema tag "vigor/1" on all top-level documents.

#pragma once

#include <json.hpp>

#include "vigor/twogen.hpp"
#include "vigor/words.hpp"

namespace vigor {

using nlohmann::json;

inline constexpr const char* kSchema = "vigor/1";

inline json to_json(const ClopenSet& a) {
  return json{{"n", a.arity()}, {"cones", a.cones()}};
}

inline ClopenSet clopen_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("cones"))
    throw Error("clopen set: expected {\"n\": ..., \"cones\": [...]}");
  Arity arity(j.at("n").get<int>());
  std::vector<Word> cones = j.at("cones").get<std::vector<Word>>();
  return ClopenSet::canonicalize(arity, cones);
}

inline json to_json(const PrefixBijection& f) {
  json pairs = json::array();
  for (const auto& [u, v] : f.pairs()) pairs.push_back(json::array({u, v}));
  return json{{"n", f.arity()}, {"pairs", pairs}};
}

inline PrefixBijection element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
    throw Error("element: expected {\"n\": ..., \"pairs\": [...]}");
  Arity arity(j.at("n").get<int>());
  std::vector<PrefixPair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw Error("element: each pair must be a two-element array");
    pairs.emplace_back(p.at(0).get<Word>(), p.at(1).get<Word>());
  }
  return PrefixBijection::from_pairs(arity, std::move(pairs));
}

inline json to_json(const std::vector<Condition>& conditions) {
  json out = json::array();
  for (const auto& c : conditions)
    out.push_back(json{{"desc", c.desc}, {"pass", c.pass}});
  return out;
}

inline std::vector<Condition> conditions_from_json(const json& j) {
  std::vector<Condition> out;
  for (const auto& c : j)
    out.push_back({c.at("desc").get<std::string>(), c.at("pass").get<bool>()});
  return out;
}

inline json to_json(const WitnessReport& rep) {
  json sets = json::object(), elements = json::object();
  for (const auto& [k, v] : rep.sets) sets[k] = to_json(v);
  for (const auto& [k, v] : rep.elements) elements[k] = to_json(v);
  return json{{"schema", kSchema},
              {"kind", rep.kind},
              {"sets", sets},
              {"elements", elements},
              {"conditions", to_json(rep.conditions)},
              {"all_pass", rep.all_pass()}};
}

inline WitnessReport report_from_json(const json& j) {
  WitnessReport rep;
  rep.kind = j.at("kind").get<std::string>();
  for (const auto& [k, v] : j.at("sets").items())
    rep.sets.emplace_back(k, clopen_from_json(v));
  for (const auto& [k, v] : j.at("elements").items())
    rep.elements.emplace_back(k, element_from_json(v));
  rep.conditions = conditions_from_json(j.at("conditions"));
  return rep;
}

inline json to_json(const FreenessCertificate& c) {
  return json{{"schema", kSchema},
              {"kind", "freeness"},
              {"n", c.n},
              {"A", to_json(c.A)},
              {"B", to_json(c.B)},
              {"C", to_json(c.C)},
              {"D", to_json(c.D)},
              {"gamma", to_json(c.gamma)},
              {"tau", to_json(c.tau)},
              {"a", to_json(c.a)},
              {"b", to_json(c.b)},
              {"word_depth", c.word_depth},
              {"conditions", to_json(c.conditions)},
              {"verdict", c.verdict}};
}

inline FreenessCertificate freeness_from_json(const json& j) {
  FreenessCertificate c;
  c.n = j.at("n").get<int>();
  c.A = clopen_from_json(j.at("A"));
  c.B = clopen_from_json(j.at("B"));
  c.C = clopen_from_json(j.at("C"));
  c.D = clopen_from_json(j.at("D"));
  c.gamma = element_from_json(j.at("gamma"));
  c.tau = element_from_json(j.at("tau"));
  c.a = element_from_json(j.at("a"));
  c.b = element_from_json(j.at("b"));
  c.word_depth = j.at("word_depth").get<int>();
  c.conditions = conditions_from_json(j.at("conditions"));
  c.verdict = j.at("verdict").get<std::string>();
  return c;
}

inline json to_json(const GenerationCertificate& c) {
  json pairs = json::array();
  for (const auto& [p, w] : c.pairs)
    pairs.push_back(json::array({to_json(p), to_json(w)}));
  json targets = json::array();
  for (const auto& t : c.targets) targets.push_back(to_json(t));
  return json{{"schema", kSchema},
              {"kind", "generation"},
              {"n", c.n},
              {"domain", to_json(c.domain)},
              {"n_order", c.n_order},
              {"j", c.j},
              {"pairs", pairs},
              {"targets", targets},
              {"target_words", c.target_words},
              {"bfs_depth", c.bfs_depth},
              {"status", c.status}};
}

inline GenerationCertificate generation_from_json(const json& j) {
  GenerationCertificate c;
  c.n = j.at("n").get<int>();
  c.domain = clopen_from_json(j.at("domain"));
  c.n_order = j.at("n_order").get<int>();
  c.j = j.at("j").get<int>();
  for (const auto& p : j.at("pairs"))
    c.pairs.emplace_back(element_from_json(p.at(0)),
                         element_from_json(p.at(1)));
  for (const auto& t : j.at("targets")) c.targets.push_back(element_from_json(t));
  c.target_words = j.at("target_words").get<std::vector<std::string>>();
  c.bfs_depth = j.at("bfs_depth").get<int>();
  c.status = j.at("status").get<std::string>();
  return c;
}

inline json to_json(const TwoGenGraph& g) {
  json verts = json::array();
  for (const auto& v : g.vertices) verts.push_back(to_json(v));
  json edges = json::array(), weak = json::array();
  for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
  for (auto [a, b] : g.edges_weak) weak.push_back(json::array({a, b}));
  return json{{"vertices", verts},       {"edges", edges},
              {"edges_weak", weak},      {"connected", g.connected},
              {"connected_weak", g.connected_weak}, {"covers", g.covers}};
}

inline TwoGenGraph graph_from_json(const json& j) {
  TwoGenGraph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(clopen_from_json(v));
  for (const auto& e : j.at("edges"))
    g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  for (const auto& e : j.at("edges_weak"))
    g.edges_weak.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  g.connected = j.at("connected").get<bool>();
  g.connected_weak = j.at("connected_weak").get<bool>();
  g.covers = j.at("covers").get<bool>();
  return g;
}

inline json to_json(const TwoGenCertificate& c) {
  json X = json::array(), Y = json::array();
  for (const auto& b : c.X) X.push_back(to_json(b));
  for (const auto& b : c.Y) Y.push_back(to_json(b));
  return json{{"schema", kSchema},
              {"kind", "twogen"},
              {"n", c.n},
              {"order_target", c.order_target},
              {"C", to_json(c.C)},
              {"D", to_json(c.D)},
              {"X", X},
              {"Y", Y},
              {"x", c.x},
              {"j", c.j},
              {"tau", to_json(c.tau)},
              {"pi", to_json(c.pi)},
              {"sigma", to_json(c.sigma)},
              {"zeta", to_json(c.zeta)},
              {"graph", to_json(c.graph)},
              {"identity_checks", to_json(c.identity_checks)},
              {"generation", to_json(c.generation)},
              {"status", c.status}};
}

inline TwoGenCertificate twogen_from_json(const json& j) {
  TwoGenCertificate c;
  c.n = j.at("n").get<int>();
  c.order_target = j.at("order_target").get<int>();
  c.C = clopen_from_json(j.at("C"));
  c.D = clopen_from_json(j.at("D"));
  for (const auto& b : j.at("X")) c.X.push_back(clopen_from_json(b));
  for (const auto& b : j.at("Y")) c.Y.push_back(clopen_from_json(b));
  c.x = j.at("x").get<int>();
  c.j = j.at("j").get<int>();
  c.tau = element_from_json(j.at("tau"));
  c.pi = element_from_json(j.at("pi"));
  c.sigma = element_from_json(j.at("sigma"));
  c.zeta = element_from_json(j.at("zeta"));
  c.graph = graph_from_json(j.at("graph"));
  c.identity_checks = conditions_from_json(j.at("identity_checks"));
  c.generation = generation_from_json(j.at("generation"));
  c.status = j.at("status").get<std::string>();
  return c;
}

}  // namespace vigor

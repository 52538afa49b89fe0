#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "specfactor/criticality.hpp"
#include "specfactor/errors.hpp"
#include "specfactor/factor.hpp"
#include "specfactor/verify.hpp"

namespace specfactor::verify {

namespace {

int to_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw precondition_error("bad integer for " + what + ": " + text);
  return value;
}

// "n=5,a=2" -> {n: 5, a: 2}
std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw precondition_error("expected key=value, got " + item);
    const std::string key = item.substr(0, eq);
    out[key] = to_int(item.substr(eq + 1), key);
  }
  return out;
}

int param(const std::map<std::string, int>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw precondition_error("missing parameter " + key);
  return it->second;
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 0) throw precondition_error("edge list: bad vertex count");
  std::vector<int> ends;
  int x = 0;
  while (in >> x) ends.push_back(x);
  if (!in.eof() || ends.size() % 2 != 0) throw precondition_error("edge list: malformed pair");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ends.size(); i += 2) edges.emplace_back(ends[i], ends[i + 1]);
  return Graph(n, edges);
}

LoadedGraph load_builtin(const std::string& kind, const std::string& rest, const std::string& input) {
  const auto p = parse_params(rest);
  LoadedGraph out;
  out.source = input;
  if (kind == "factor-extremal") {
    out.structured = build_factor_extremal(param(p, "n"), param(p, "a"));
  } else if (kind == "id-extremal") {
    const int n = param(p, "n"), delta = param(p, "delta"), r = param(p, "r");
    out.structured = build_id_extremal(n, delta, r);
    out.id_params = std::tuple{n, delta, r};
  } else if (kind == "star") {
    out.structured = build_spanning_star(param(p, "n"), param(p, "k"));
  } else if (kind == "complete") {
    out.graph = complete(param(p, "n"));
    return out;
  } else if (kind == "cycle") {
    out.graph = cycle(param(p, "n"));
    return out;
  } else if (kind == "path") {
    out.graph = path(param(p, "n"));
    return out;
  } else {
    throw precondition_error("unknown built-in graph " + kind);
  }
  out.graph = out.structured->graph;
  return out;
}

nlohmann::json certificate_json(const FactorCertificate& cert) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : cert.edges) edges.push_back({e.u, e.v, e.weight});
  return {{"edges", edges}};
}

DecideResult decide_factor(const LoadedGraph& in, int a, int b) {
  const Graph& g = in.graph;
  const DegreeBounds bounds = DegreeBounds::uniform(g.order(), a, b);
  const LpDecision lp = fractional_factor_lp(g, bounds);
  DecideResult out;
  out.body = {{"task", "factor"}, {"a", a}, {"b", b}, {"n", g.order()}};
  if (lp.has_factor) {
    out.exit_code = 0;
    out.body["decision"] = "yes";
    out.body["certificate"] = certificate_json(*lp.certificate);
  } else {
    out.exit_code = 1;
    out.body["decision"] = "no";
  }
  if (g.order() <= kFactorOracleLimit) {
    const OracleDecision oracle = fractional_factor_oracle(g, bounds);
    if (oracle.has_factor != lp.has_factor) throw solver_error("flow route and subset oracle disagree");
    if (oracle.witness) {
      out.body["witness"] = {{"S", to_json(oracle.witness->s)}, {"T", to_json(oracle.witness->t)}, {"phi", oracle.witness->phi}};
    }
  } else if (!lp.has_factor) {
    Deficiency d = deficiency(g, bounds, VertexSet(g.order()));
    if (d.phi < 0) out.body["witness"] = {{"S", nlohmann::json::array()}, {"T", to_json(d.t)}, {"phi", d.phi}};
  }
  return out;
}

DecideResult decide_matching(const LoadedGraph& in) {
  const MatchingDecision m = has_perfect_matching(in.graph);
  DecideResult out;
  out.body = {{"task", "matching"}, {"n", in.graph.order()}};
  if (m.perfect) {
    out.exit_code = 0;
    out.body["decision"] = "yes";
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : m.matching) edges.push_back({e.u, e.v});
    out.body["matching"] = edges;
  } else {
    out.exit_code = 1;
    out.body["decision"] = "no";
    out.body["witness"] = {{"S", to_json(m.tutte_set)}, {"odd", odd_components(in.graph, m.tutte_set)}};
  }
  return out;
}

nlohmann::json witness_json(const CriticalityWitness& w) {
  return {{"I", to_json(w.independent)}, {"S", to_json(w.barrier)}, {"odd", w.odd_count}};
}

DecideResult decide_critical(const LoadedGraph& in) {
  const Graph& g = in.graph;
  DecideResult out;
  out.body = {{"task", "critical"}, {"n", g.order()}};
  if (g.order() <= kCriticalityLimit) {
    const TutteDecision tutte = is_id_factor_critical_tutte(g);
    if (is_id_factor_critical_def(g).critical != tutte.critical) throw solver_error("criticality routes disagree");
    out.exit_code = tutte.critical ? 0 : 1;
    out.body["decision"] = tutte.critical ? "yes" : "no";
    if (tutte.witness) out.body["witness"] = witness_json(*tutte.witness);
    return out;
  }
  // beyond the exact limit only a structured No can be certified
  if (in.id_params) {
    const auto [n, delta, r] = *in.id_params;
    const StructuredWitness w = structured_witness(n, delta, r);
    if (w.check.valid()) {
      out.exit_code = 1;
      out.body["decision"] = "no";
      out.body["witness"] = witness_json(w.witness);
      out.body["method"] = "structured";
      return out;
    }
  }
  throw limit_exceeded("decide critical", g.order(), kCriticalityLimit);
}

}  // namespace

LoadedGraph load_graph(const std::string& input) {
  const auto colon = input.find(':');
  if (colon != std::string::npos && colon > 0 &&
      std::all_of(input.begin(), input.begin() + static_cast<long>(colon),
                  [](unsigned char c) { return std::islower(c) || c == '-'; })) {
    return load_builtin(input.substr(0, colon), input.substr(colon + 1), input);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input);
    std::string first;
    std::streampos start = file.tellg();
    while (std::getline(file, first) && first.find_first_not_of(" \t\r") == std::string::npos) start = file.tellg();
    file.clear();
    file.seekg(start);
    LoadedGraph out;
    out.source = input;
    const auto lead = first.find_first_not_of(" \t");
    if (lead != std::string::npos && std::isdigit(static_cast<unsigned char>(first[lead]))) {
      out.graph = read_edge_list(file);
    } else {
      if (!first.empty() && first.back() == '\r') first.pop_back();
      out.graph = parse_graph6(first);
    }
    return out;
  }
  return {parse_graph6(input), input, std::nullopt, std::nullopt};
}

DecideResult decide(const DecideRequest& request) {
  try {
    const LoadedGraph in = load_graph(request.input);
    DecideResult out;
    if (request.task == "factor") {
      if (request.a < 1 || request.a > request.b) throw precondition_error("need 1 <= a <= b");
      out = decide_factor(in, request.a, request.b);
    } else if (request.task == "matching") {
      out = decide_matching(in);
    } else if (request.task == "critical") {
      out = decide_critical(in);
    } else {
      throw precondition_error("unknown task " + request.task);
    }
    out.body["input"] = in.source;
    if (in.graph.order() <= kGraph6MaxOrder) out.body["graph6"] = emit_graph6(in.graph);
    return out;
  } catch (const std::exception& e) {
    return {2, {{"task", request.task}, {"input", request.input}, {"error", e.what()}}};
  }
}

}  // namespace specfactor::verify

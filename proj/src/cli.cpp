// Copyright 2026 The wheelembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wheelembed/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wheelembed/bounds.hpp"
#include "wheelembed/embedding.hpp"
#include "wheelembed/families.hpp"
#include "wheelembed/io.hpp"
#include "wheelembed/oracle.hpp"

namespace wheelembed {

namespace {

enum class Format { json, text, dot };

struct RunConfig {
  Format format = Format::json;
  std::string out_path;
  int jobs = 0;
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  std::uint64_t seed = 1;

  // gen
  std::string family;
  std::vector<int> family_params;
  // embed / metrics / bound / oracle / export
  std::string guest_path;
  std::string host_path;
  std::string graph_path;
  std::string embedding_path;
  std::string method = "identity";
  std::string metric;
  std::string kind;
  int oracle_limit = OracleOptions{}.limit;
  std::uint64_t routing_cap = OracleOptions{}.routing_cap;
  // verify
  std::string theorem;
  std::vector<std::string> theorem_params;
  std::string sweep;
  // ham
  std::string query = "cycle";
  int faults = 0;
  std::string ends;
};

struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("sweep range must look like a..b");
  const int lo = parse_int(text.substr(0, dots), "sweep start");
  const int hi = parse_int(text.substr(dots + 2), "sweep end");
  if (lo > hi) throw UsageError("empty sweep range " + text);
  return {lo, hi};
}

// Left-aligned text table.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c + 1 == cells.size()) {
        out << cells[c] << "\n";
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << cells[c] << "  ";
      }
    }
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string show(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }
std::string show(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "unknown"; }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out_path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

EmbeddingMap build_embedding(const RunConfig& cfg) {
  if (cfg.host_path.empty()) throw UsageError("--host is required");
  const Graph host = read_graph_file(cfg.host_path);
  const std::optional<Graph> guest =
      cfg.guest_path.empty() ? std::nullopt : std::optional<Graph>(read_graph_file(cfg.guest_path));
  const SearchBudget budget{cfg.max_nodes};

  if (cfg.method == "median-wheel" || cfg.method == "median-fan") {
    const bool wheel_rim = cfg.method == "median-wheel";
    try {
      auto emb = wheel_rim ? embed_wheel_via_median(host, std::nullopt, budget)
                           : embed_fan_via_median(host, std::nullopt, budget);
      if (guest && !same_topology(*guest, emb.guest)) {
        throw UsageError("guest does not match " + emb.guest.name() + " in hub-first labeling");
      }
      return emb;
    } catch (const SearchInconclusive& ex) {
      throw Inconclusive(ex.what());
    }
  }
  if (!guest) throw UsageError("--guest is required for method " + cfg.method);
  if (cfg.method == "identity") {
    std::vector<Vertex> identity(host.order());
    for (int i = 0; i < host.order(); ++i) identity[i] = i + 1;
    return route_shortest(*guest, host, identity);
  }
  if (cfg.method == "preorder") return embed_preorder(*guest, host);
  if (cfg.method == "windmill") return embed_windmill(*guest, host);
  if (cfg.method == "random") return random_embedding(*guest, host, cfg.seed);
  throw UsageError("unknown method '" + cfg.method + "'");
}

EmbeddingMap load_or_build_embedding(const RunConfig& cfg) {
  if (cfg.embedding_path.empty()) return build_embedding(cfg);
  if (cfg.guest_path.empty() || cfg.host_path.empty()) {
    throw UsageError("--embedding needs --guest and --host");
  }
  std::ifstream in(cfg.embedding_path);
  if (!in) throw UsageError("cannot open embedding file '" + cfg.embedding_path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw UsageError(std::string("embedding file is not valid JSON: ") + ex.what());
  }
  return embedding_from_json(read_graph_file(cfg.guest_path), read_graph_file(cfg.host_path), j);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const Graph g = make_family({parse_family_kind(cfg.family), cfg.family_params});
  if (cfg.format == Format::dot) {
    emit(cfg, out, export_dot(g));
  } else if (cfg.format == Format::text) {
    emit(cfg, out, g.name() + ": " + std::to_string(g.order()) + " vertices, " +
                       std::to_string(g.size()) + " edges\n");
  } else {
    emit(cfg, out, dump(to_json(g)));
  }
  return kExitOk;
}

int cmd_embed(const RunConfig& cfg, std::ostream& out) {
  emit(cfg, out, dump(to_json(build_embedding(cfg))));
  return kExitOk;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out) {
  const auto emb = load_or_build_embedding(cfg);
  const auto m = evaluate(emb);
  if (cfg.format == Format::dot) {
    emit(cfg, out, export_dot(emb.host, &m));
  } else if (cfg.format == Format::text) {
    std::vector<std::vector<std::string>> rows;
    const auto& edges = emb.guest.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::string route;
      for (Vertex v : emb.routes[i]) route += (route.empty() ? "" : "-") + std::to_string(v);
      rows.push_back({edge_key(edges[i].u, edges[i].v), route, std::to_string(m.dilation[i])});
    }
    std::string text = render_table({"guest edge", "route", "dilation"}, rows);
    text += "\n" + emb.guest.name() + " -> " + emb.host.name() +
            ": max dilation " + std::to_string(m.max_dilation) + ", max congestion " +
            std::to_string(m.max_congestion) + ", wirelength " + std::to_string(m.wirelength) + "\n";
    emit(cfg, out, text);
  } else {
    emit(cfg, out, dump(to_json(m, emb)));
  }
  return kExitOk;
}

std::string bound_row_text(const std::string& label, const BoundReport& r) {
  return render_table({"instance", "metric", "bound", "achieved", "sharp", "notes"},
                      {{label, std::string(metric_name(r.metric)), std::to_string(r.bound),
                        show(r.achieved), show(r.sharp), r.notes}});
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  if (cfg.host_path.empty()) throw UsageError("--host is required");
  const Graph host = read_graph_file(cfg.host_path);
  const Metric metric = parse_metric(cfg.metric);
  BoundReport report;
  std::string label;
  if (metric == Metric::wirelength) {
    std::string kind = cfg.kind;
    if (kind.empty() && !cfg.guest_path.empty()) {
      const Graph guest = read_graph_file(cfg.guest_path);
      if (same_topology(guest, wheel(host.order()))) kind = "wheel";
      else if (same_topology(guest, fan(host.order()))) kind = "fan";
      else throw UsageError("wirelength bound needs a wheel or fan guest in hub-first labeling");
    }
    if (kind != "wheel" && kind != "fan") throw UsageError("--kind must be wheel or fan");
    report = wirelength_lower_bound(kind == "wheel" ? RimKind::wheel : RimKind::fan, host,
                                    SearchBudget{cfg.max_nodes});
    label = kind + " -> " + host.name();
  } else {
    if (cfg.guest_path.empty()) throw UsageError("--guest is required");
    const Graph guest = read_graph_file(cfg.guest_path);
    report = metric == Metric::dilation ? dilation_lower_bound(guest, host)
                                        : congestion_lower_bound(guest, host);
    label = guest.name() + " -> " + host.name();
  }
  emit(cfg, out, cfg.format == Format::text ? bound_row_text(label, report) : dump(to_json(report)));
  return report.metric == Metric::wirelength && !report.sharp.has_value() ? kExitInconclusive
                                                                           : kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const TheoremId id = parse_theorem(cfg.theorem);
  const SearchBudget budget{cfg.max_nodes};
  struct Row {
    std::string params;
    BoundReport report;
  };
  std::vector<Row> rows;

  const bool wirelength = id == TheoremId::wl_wheel || id == TheoremId::wl_fan;
  if (!wirelength) {
    std::vector<int> values;
    if (!cfg.sweep.empty()) {
      const auto [lo, hi] = parse_range(cfg.sweep);
      for (int v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      if (cfg.theorem_params.size() != 1) {
        throw UsageError(cfg.theorem + " takes one integer parameter or --sweep a..b");
      }
      values.push_back(parse_int(cfg.theorem_params[0], "theorem parameter"));
    }
    std::vector<GuestKind> kinds;
    if (id == TheoremId::ec_windmill) {
      kinds = {GuestKind::wheel};  // unused by the windmill theorem
    } else if (cfg.kind.empty()) {
      kinds = {GuestKind::wheel, GuestKind::fan, GuestKind::friendship, GuestKind::star};
    } else {
      kinds = {parse_guest_kind(cfg.kind)};
    }
    for (int v : values) {
      for (GuestKind k : kinds) {
        TheoremInstance inst{id, k, v, std::nullopt};
        std::string label = (id == TheoremId::ec_windmill ? "n=" : "l=") + std::to_string(v);
        if (id != TheoremId::ec_windmill) label += " " + std::string(guest_kind_name(k));
        rows.push_back({label, verify_theorem(inst, budget)});
      }
    }
  } else {
    std::vector<Graph> hosts;
    if (!cfg.host_path.empty()) {
      hosts.push_back(read_graph_file(cfg.host_path));
    } else {
      if (cfg.theorem_params.empty()) throw UsageError(cfg.theorem + " needs --host or a family spec");
      const FamilyKind family = parse_family_kind(cfg.theorem_params[0]);
      std::vector<int> params;
      for (std::size_t i = 1; i < cfg.theorem_params.size(); ++i) {
        params.push_back(parse_int(cfg.theorem_params[i], "family parameter"));
      }
      if (cfg.sweep.empty()) {
        hosts.push_back(make_family({family, params}));
      } else {
        const auto [lo, hi] = parse_range(cfg.sweep);
        for (int v = lo; v <= hi; ++v) {
          auto swept = params;
          swept.insert(swept.begin(), v);
          hosts.push_back(make_family({family, swept}));
        }
      }
    }
    for (const Graph& host : hosts) {
      rows.push_back({host.name(), verify_theorem({id, GuestKind::wheel, 0, host}, budget)});
    }
  }

  bool unsure = false;
  for (const auto& row : rows) unsure |= !row.report.sharp.has_value();

  if (cfg.format == Format::text) {
    std::vector<std::vector<std::string>> table;
    for (const auto& row : rows) {
      table.push_back({row.params, std::to_string(row.report.bound), show(row.report.achieved),
                       show(row.report.sharp), row.report.notes});
    }
    emit(cfg, out, cfg.theorem + "\n" +
                       render_table({"params", "bound", "achieved", "sharp", "notes"}, table));
  } else {
    Json list = Json::array();
    for (const auto& row : rows) {
      list.push_back(Json{{"params", row.params},
                          {"bound", row.report.bound},
                          {"achieved", row.report.achieved ? Json(*row.report.achieved) : Json(nullptr)},
                          {"sharp", row.report.sharp ? Json(*row.report.sharp) : Json(nullptr)},
                          {"notes", row.report.notes}});
    }
    emit(cfg, out, dump(Json{{"theorem", cfg.theorem}, {"rows", std::move(list)}}));
  }
  return unsure ? kExitInconclusive : kExitOk;
}

int cmd_ham(const RunConfig& cfg, std::ostream& out) {
  if (cfg.graph_path.empty()) throw UsageError("--graph is required");
  const Graph g = read_graph_file(cfg.graph_path);
  const SearchBudget budget{cfg.max_nodes};
  Json report;
  Verdict verdict = Verdict::no;
  if (cfg.query == "cycle" || cfg.query == "path") {
    std::optional<std::pair<Vertex, Vertex>> ends;
    if (!cfg.ends.empty()) {
      const auto comma = cfg.ends.find(',');
      if (comma == std::string::npos) throw UsageError("--ends must look like u,v");
      ends = std::pair{parse_int(cfg.ends.substr(0, comma), "--ends"),
                       parse_int(cfg.ends.substr(comma + 1), "--ends")};
    }
    const auto r = cfg.query == "cycle" ? find_hamiltonian_cycle(g, {}, budget)
                                        : find_hamiltonian_path(g, ends, {}, budget);
    verdict = r.verdict;
    report = to_json(r, cfg.query);
  } else if (cfg.query == "ffault-ham" || cfg.query == "ffault-trace") {
    if (cfg.faults < 0) throw UsageError("--f must be non-negative");
    const auto r = cfg.query == "ffault-ham" ? is_f_fault_hamiltonian(g, cfg.faults, budget)
                                             : is_f_fault_traceable(g, cfg.faults, budget);
    verdict = r.verdict;
    report = to_json(r, cfg.query, cfg.faults);
  } else {
    throw UsageError("unknown query '" + cfg.query + "'");
  }
  report["graph"] = g.name();
  if (cfg.format == Format::text) {
    std::string witness = report["witness"].is_null() ? "-" : report["witness"].dump();
    std::string fault = "-";
    if (report.contains("failing_fault") && !report["failing_fault"].is_null()) {
      fault = report["failing_fault"].dump();
    }
    emit(cfg, out, render_table({"graph", "query", "verdict", "witness", "failing fault"},
                                {{g.name(), cfg.query, std::string(verdict_name(verdict)), witness, fault}}) +
                       (report.contains("notes") && !report["notes"].get<std::string>().empty()
                            ? "notes: " + report["notes"].get<std::string>() + "\n"
                            : ""));
  } else {
    emit(cfg, out, dump(report));
  }
  return verdict == Verdict::inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  if (cfg.guest_path.empty() || cfg.host_path.empty()) throw UsageError("--guest and --host are required");
  const Graph guest = read_graph_file(cfg.guest_path);
  const Graph host = read_graph_file(cfg.host_path);
  OracleOptions opts;
  opts.limit = cfg.oracle_limit;
  opts.jobs = cfg.jobs;
  opts.routing_cap = cfg.routing_cap;
  const auto r = exact_metric(parse_metric(cfg.metric), guest, host, opts);
  if (cfg.format == Format::text) {
    Json vmap = r.witness_vmap;
    emit(cfg, out, render_table({"guest", "host", "metric", "optimum", "exact", "bijections", "witness"},
                                {{guest.name(), host.name(), std::string(metric_name(r.metric)),
                                  std::to_string(r.optimum), r.exact ? "yes" : "no",
                                  std::to_string(r.bijections_examined), vmap.dump()}}));
  } else {
    Json j = to_json(r);
    j["guest"] = guest.name();
    j["host"] = host.name();
    emit(cfg, out, dump(j));
  }
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.embedding_path.empty()) {
    RunConfig c = cfg;
    if (c.host_path.empty()) c.host_path = cfg.graph_path;
    const auto emb = load_or_build_embedding(c);
    const auto m = evaluate(emb);
    emit(cfg, out, export_dot(emb.host, &m));
    return kExitOk;
  }
  if (cfg.graph_path.empty()) throw UsageError("--graph is required");
  emit(cfg, out, export_dot(read_graph_file(cfg.graph_path)));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("WHEELEMBED_JOBS")) {
    try {
      cfg.jobs = std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      err << "ignoring invalid WHEELEMBED_JOBS='" << env << "'\n";
    }
  }

  CLI::App app{"wheelembed: embeddings of wheel-like networks, exact metrics and bounds"};
  app.set_version_flag("--version", std::string("wheelembed ") + kVersion);
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"text", Format::text}, {"dot", Format::dot}};
  auto common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--format", cfg.format, "json, text or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--jobs", cfg.jobs, "OpenMP threads (default: WHEELEMBED_JOBS or runtime)")
        ->check(CLI::NonNegativeNumber);
    if (with_out) sub->add_option("--out", cfg.out_path, "write the report to a file");
  };
  auto budget_option = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", cfg.max_nodes, "search node budget per hamiltonicity query")
        ->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("gen", "generate a graph family as JSON");
  gen->add_option("family", cfg.family, "family name")->required();
  gen->add_option("params", cfg.family_params, "integer parameters");
  common(gen, true);

  const std::vector<std::string> methods{"preorder", "windmill", "median-wheel", "median-fan",
                                         "identity", "random"};
  auto* embed = app.add_subcommand("embed", "build an embedding and print it as JSON");
  embed->add_option("--guest", cfg.guest_path, "guest graph JSON");
  embed->add_option("--host", cfg.host_path, "host graph JSON")->required();
  embed->add_option("--method", cfg.method, "construction")->check(CLI::IsMember(methods));
  embed->add_option("--seed", cfg.seed, "seed for --method random");
  budget_option(embed);
  common(embed, true);

  auto* metrics = app.add_subcommand("metrics", "dilation, congestion and wirelength of an embedding");
  metrics->add_option("--guest", cfg.guest_path, "guest graph JSON");
  metrics->add_option("--host", cfg.host_path, "host graph JSON")->required();
  metrics->add_option("--embedding", cfg.embedding_path, "embedding JSON (otherwise --method)");
  metrics->add_option("--method", cfg.method, "construction")->check(CLI::IsMember(methods));
  metrics->add_option("--seed", cfg.seed, "seed for --method random");
  budget_option(metrics);
  common(metrics, true);

  auto* bound = app.add_subcommand("bound", "lower bound for a guest/host pair");
  bound->add_option("--metric", cfg.metric, "dil, ec or wl")->required();
  bound->add_option("--guest", cfg.guest_path, "guest graph JSON");
  bound->add_option("--host", cfg.host_path, "host graph JSON")->required();
  bound->add_option("--kind", cfg.kind, "wheel or fan (wirelength only)");
  budget_option(bound);
  common(bound, true);

  auto* verify = app.add_subcommand("verify", "check a theorem instance or a parameter sweep");
  verify->add_option("theorem", cfg.theorem,
                     "dil-hypertree, dil-sibling, dil-xtree, ec-windmill, wl-wheel or wl-fan")
      ->required();
  verify->add_option("params", cfg.theorem_params, "level, n, or a host family spec");
  verify->add_option("--sweep", cfg.sweep, "parameter range a..b");
  verify->add_option("--kind", cfg.kind, "guest kind for dil-*: wheel, fan, friendship, star");
  verify->add_option("--host", cfg.host_path, "host graph JSON for wl-*");
  budget_option(verify);
  common(verify, true);

  auto* ham = app.add_subcommand("ham", "hamiltonicity queries");
  ham->add_option("--graph", cfg.graph_path, "graph JSON")->required();
  ham->add_option("--query", cfg.query, "cycle, path, ffault-ham or ffault-trace")
      ->check(CLI::IsMember({"cycle", "path", "ffault-ham", "ffault-trace"}));
  ham->add_option("--f", cfg.faults, "fault budget");
  ham->add_option("--ends", cfg.ends, "path end vertices u,v");
  budget_option(ham);
  common(ham, true);

  auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
  oracle->add_option("--guest", cfg.guest_path, "guest graph JSON")->required();
  oracle->add_option("--host", cfg.host_path, "host graph JSON")->required();
  oracle->add_option("--metric", cfg.metric, "dil, ec or wl")->required();
  oracle->add_option("--limit", cfg.oracle_limit, "largest accepted order")->check(CLI::PositiveNumber);
  oracle->add_option("--cap", cfg.routing_cap, "routing combinations per bijection")
      ->check(CLI::PositiveNumber);
  common(oracle, true);

  auto* exp = app.add_subcommand("export", "Graphviz DOT export");
  exp->add_option("--graph", cfg.graph_path, "graph JSON (the host when --embedding is given)");
  exp->add_option("--guest", cfg.guest_path, "guest graph JSON for --embedding");
  exp->add_option("--embedding", cfg.embedding_path, "label host edges with congestion");
  common(exp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

#ifdef _OPENMP
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*embed) return cmd_embed(cfg, out);
    if (*metrics) return cmd_metrics(cfg, out);
    if (*bound) return cmd_bound(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*ham) return cmd_ham(cfg, out);
    if (*oracle) return cmd_oracle(cfg, out);
    if (*exp) return cmd_export(cfg, out);
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const SearchInconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wheelembed

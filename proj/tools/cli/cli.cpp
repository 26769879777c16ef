#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "honkit/honkit.hpp"

namespace honkit::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json config_json(const RunConfig& c) {
  return json{{"max_order", c.max_order},
              {"epsilon", c.epsilon},
              {"damping", c.damping},
              {"pagerank_tol", c.pagerank_tol},
              {"kl_epsilon", c.kl_epsilon},
              {"split_fraction", c.split_fraction},
              {"seed", c.seed},
              {"exact_sp_threshold", c.exact_sp_threshold},
              {"format", c.format}};
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string csv_value(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

/// '#'-prefixed provenance lines heading every CSV report.
void write_csv_config(std::ostream& out, const std::string& command, const RunConfig& c) {
  out << "# command=" << command << '\n';
  const json config = config_json(c);
  for (const auto& [key, value] : config.items()) out << "# " << key << '=' << value.dump() << '\n';
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

PathCorpus load_corpus(const std::string& path, PathFormat format) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return parse_paths(in, format);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  } catch (const EmptyInputError& e) {
    throw DataError(path + ": " + e.what());
  }
}

Graph load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  } catch (const EmptyInputError& e) {
    throw DataError(path + ": " + e.what());
  }
}

json report_json(const StructuralReport& r) {
  return json{{"order", r.order},
              {"nodes", r.node_count},
              {"edges", r.edge_count},
              {"mean_in_degree", r.mean_in_degree},
              {"mean_out_degree", r.mean_out_degree},
              {"diameter", r.diameter},
              {"avg_shortest_path", r.avg_shortest_path},
              {"density", r.density},
              {"gcc_ratio", r.gcc_ratio},
              {"estimated", r.estimated}};
}

constexpr const char* kReportHeader =
    "order,nodes,edges,mean_in_degree,mean_out_degree,diameter,avg_shortest_path,density,gcc_ratio,estimated";

void write_report_row(std::ostream& out, const StructuralReport& r) {
  out << r.order << ',' << r.node_count << ',' << r.edge_count << ',' << format_double(r.mean_in_degree) << ','
      << format_double(r.mean_out_degree) << ',' << r.diameter << ',' << format_double(r.avg_shortest_path) << ','
      << format_double(r.density) << ',' << format_double(r.gcc_ratio) << ',' << (r.estimated ? "true" : "false")
      << '\n';
}

json accuracy_json(const AccuracyResult& r, const std::string& protocol) {
  return json{{"order", r.order},
              {"accuracy", r.accuracy},
              {"expected_accuracy", r.expected_accuracy},
              {"evaluated_transitions", r.evaluated_transitions},
              {"none_rate", r.none_rate()},
              {"protocol", protocol}};
}

struct Invocation {
  RunConfig config;
  std::string input;
  std::string input_format = "lines";
  std::string output;
  std::string a;
  std::string b;
  std::string label_a = "a";
  std::string label_b = "b";
  std::string topology;
  std::string scores;
  std::string degree_direction = "out";
  int order = 1;
  bool holdout = false;
  // synth
  std::size_t nodes = 10;
  int memory = 2;
  int branching = 3;
  double determinism = 0.9;
  std::size_t paths = 1000;
  std::size_t min_len = 8;
  std::size_t max_len = 15;
  std::size_t min_hops = 3;
};

void add_common(CLI::App& cmd, Invocation& inv) {
  auto& c = inv.config;
  cmd.add_option("--max-order", c.max_order, "Highest memory order")->envname("HONKIT_MAX_ORDER");
  cmd.add_option("--epsilon", c.epsilon, "Significance level of the order test")->envname("HONKIT_EPSILON");
  cmd.add_option("--damping", c.damping, "PageRank damping factor")->envname("HONKIT_DAMPING");
  cmd.add_option("--pagerank-tol", c.pagerank_tol, "PageRank L1 tolerance")->envname("HONKIT_PAGERANK_TOL");
  cmd.add_option("--kl-epsilon", c.kl_epsilon, "Additive smoothing for KL divergence")
      ->envname("HONKIT_KL_EPSILON");
  cmd.add_option("--split", c.split_fraction, "Held-out test fraction")->envname("HONKIT_SPLIT");
  cmd.add_option("--seed", c.seed, "Random seed")->envname("HONKIT_SEED");
  cmd.add_option("--exact-sp-threshold", c.exact_sp_threshold, "Largest network measured with all-pairs BFS")
      ->envname("HONKIT_EXACT_SP_THRESHOLD");
  cmd.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("HONKIT_FORMAT");
  cmd.add_option("-o,--output", inv.output, "Write the report to this file instead of stdout");
}

void add_input(CLI::App& cmd, Invocation& inv, bool required = true) {
  auto* opt = cmd.add_option("-i,--input", inv.input, "Path corpus file");
  if (required) opt->required();
  cmd.add_option("--input-format", inv.input_format, "Path file format")->check(CLI::IsMember({"lines", "ngram"}));
}

void validate(const RunConfig& c) {
  if (c.max_order < 1) throw UsageError("--max-order must be >= 1");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw UsageError("--epsilon must lie in (0, 1)");
  if (!(c.damping > 0.0 && c.damping < 1.0)) throw UsageError("--damping must lie in (0, 1)");
  if (!(c.pagerank_tol > 0.0)) throw UsageError("--pagerank-tol must be positive");
  if (!(c.kl_epsilon > 0.0)) throw UsageError("--kl-epsilon must be positive");
  if (!(c.split_fraction > 0.0 && c.split_fraction < 1.0)) throw UsageError("--split must lie in (0, 1)");
}

ReportOptions report_options(const RunConfig& c) {
  ReportOptions o;
  o.exact_threshold = c.exact_sp_threshold;
  o.seed = c.seed;
  return o;
}

PageRankOptions pagerank_options(const RunConfig& c) {
  PageRankOptions o;
  o.damping = c.damping;
  o.tolerance = c.pagerank_tol;
  return o;
}

void cmd_stats(const Invocation& inv, std::ostream& out) {
  const auto corpus = load_corpus(inv.input, parse_path_format(inv.input_format));
  const auto stats = path_stats(corpus);
  if (inv.config.format == "csv") {
    write_csv_config(out, "stats", inv.config);
    out << "length,count\n";
    for (const auto& [len, count] : stats.length_histogram) out << len << ',' << count << '\n';
    return;
  }
  json hist = json::array();
  for (const auto& [len, count] : stats.length_histogram) hist.push_back({{"length", len}, {"count", count}});
  json doc{{"command", "stats"},
           {"config", config_json(inv.config)},
           {"path_count", stats.path_count},
           {"mean_length", stats.mean_length},
           {"mean_transitions", stats.mean_transitions},
           {"length_histogram", hist},
           {"node_count", corpus.universe().size()},
           {"transition_count", corpus.transition_count()}};
  out << doc.dump(2) << '\n';
}

void cmd_build(const Invocation& inv, std::ostream& out) {
  if (inv.order < 1) throw UsageError("--order must be >= 1");
  const auto corpus = load_corpus(inv.input, parse_path_format(inv.input_format));
  const auto hon = build_hon(corpus, inv.order);
  if (inv.config.format == "json") {
    json edges = json::array();
    std::vector<std::tuple<std::string, std::string, std::uint64_t, double>> rows;
    for (const auto& e : hon.edges()) rows.emplace_back(hon.label(e.from), hon.label(e.to), e.count, e.probability);
    std::sort(rows.begin(), rows.end());
    for (const auto& [from, to, count, p] : rows) {
      edges.push_back({{"from", from}, {"to", to}, {"count", count}, {"probability", p}});
    }
    json doc{{"command", "build"},
             {"config", config_json(inv.config)},
             {"order", inv.order},
             {"nodes", hon.node_count()},
             {"edges", edges}};
    out << doc.dump(2) << '\n';
    return;
  }
  write_csv_config(out, "build", inv.config);
  out << "# order=" << inv.order << '\n';
  write_hon_csv(hon, out);
}

void cmd_order(const Invocation& inv, std::ostream& out) {
  const auto corpus = load_corpus(inv.input, parse_path_format(inv.input_format));
  const int max_k = inv.config.max_order;
  const auto model = build_multi_order(corpus, max_k);
  const auto sel = optimal_order(model, corpus, inv.config.epsilon, max_k);
  if (inv.config.format == "csv") {
    write_csv_config(out, "order", inv.config);
    out << "# optimal_order=" << sel.optimal_order << '\n';
    out << "k,lambda,delta_d,p_value\n";
    for (const auto& r : sel.trace) {
      out << r.null_order << ',' << format_double(r.lambda) << ',' << r.delta_d << ',' << format_double(r.p_value)
          << '\n';
    }
    return;
  }
  json trace = json::array();
  for (const auto& r : sel.trace) {
    trace.push_back({{"k", r.null_order}, {"lambda", r.lambda}, {"delta_d", r.delta_d}, {"p_value", r.p_value}});
  }
  json doc{{"command", "order"},
           {"config", config_json(inv.config)},
           {"trace", trace},
           {"optimal_order", sel.optimal_order},
           {"truncated", sel.truncated}};
  out << doc.dump(2) << '\n';
}

void cmd_report(const Invocation& inv, std::ostream& out) {
  std::vector<StructuralReport> reports;
  if (!inv.topology.empty()) {
    reports.push_back(structural_report(HigherOrderNetwork::from_graph(load_topology(inv.topology)),
                                        report_options(inv.config)));
  } else {
    if (inv.input.empty()) throw UsageError("report needs --input or --topology");
    const auto corpus = load_corpus(inv.input, parse_path_format(inv.input_format));
    reports = multi_order_reports(corpus, inv.config.max_order, report_options(inv.config));
  }
  if (inv.config.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(report_json(r));
    out << json{{"command", "report"}, {"config", config_json(inv.config)}, {"reports", rows}}.dump(2) << '\n';
    return;
  }
  write_csv_config(out, "report", inv.config);
  out << kReportHeader << '\n';
  for (const auto& r : reports) write_report_row(out, r);
}

void cmd_pagerank(const Invocation& inv, std::ostream& out) {
  const auto corpus = load_corpus(inv.input, parse_path_format(inv.input_format));
  const auto options = pagerank_options(inv.config);
  const auto curve = pagerank_alignment(corpus, inv.config.max_order, options);

  if (!inv.scores.empty()) {
    std::ofstream scores(inv.scores);
    if (!scores) throw DataError("cannot write '" + inv.scores + "'");
    write_csv_config(scores, "pagerank", inv.config);
    scores << "order,node,score\n";
    for (int k = 1; k <= inv.config.max_order; ++k) {
      const auto layer = build_hon(corpus, k);
      if (layer.node_count() == 0) continue;
      const auto pr = hon_pagerank(layer, options);
      for (const auto& [node, score] : aggregate_pagerank(layer, pr.scores)) {
        scores << k << ',' << node << ',' << format_double(score) << '\n';
      }
    }
  }

  if (inv.config.format == "csv") {
    write_csv_config(out, "pagerank", inv.config);
    out << "order,tau,converged,iterations\n";
    for (const auto& p : curve) {
      out << p.order << ',' << csv_value(p.tau) << ',' << (p.converged ? "true" : "false") << ',' << p.iterations
          << '\n';
    }
    return;
  }
  json rows = json::array();
  for (const auto& p : curve) {
    rows.push_back(
        {{"order", p.order}, {"tau", optional_json(p.tau)}, {"converged", p.converged}, {"iterations", p.iterations}});
  }
  out << json{{"command", "pagerank"}, {"config", config_json(inv.config)}, {"orders", rows}}.dump(2) << '\n';
}

void cmd_predict(const Invocation& inv, std::ostream& out) {
  const auto corpus = load_corpus(inv.input, parse_path_format(inv.input_format));
  const int max_k = inv.config.max_order;
  std::vector<std::pair<std::string, AccuracyResult>> rows;
  const auto model = build_multi_order(corpus, max_k);
  for (int k = 1; k <= max_k; ++k) rows.emplace_back("in_sample", prediction_accuracy(model, corpus, k));
  if (inv.holdout) {
    auto [train, test] = split_corpus(corpus, inv.config.split_fraction, inv.config.seed);
    if (train.instance_count() == 0 || test.transition_count() == 0) {
      throw DataError("holdout split left no training paths or no test transitions");
    }
    const auto held = build_multi_order(train, max_k);
    for (int k = 1; k <= max_k; ++k) rows.emplace_back("holdout", prediction_accuracy(held, test, k));
  }
  if (inv.config.format == "csv") {
    write_csv_config(out, "predict", inv.config);
    out << "protocol,order,accuracy,expected_accuracy,evaluated_transitions,none_rate\n";
    for (const auto& [protocol, r] : rows) {
      out << protocol << ',' << r.order << ',' << format_double(r.accuracy) << ',' << format_double(r.expected_accuracy) << ','
          << r.evaluated_transitions << ','
          << format_double(r.none_rate()) << '\n';
    }
    return;
  }
  json arr = json::array();
  for (const auto& [protocol, r] : rows) arr.push_back(accuracy_json(r, protocol));
  out << json{{"command", "predict"}, {"config", config_json(inv.config)}, {"orders", arr}}.dump(2) << '\n';
}

json scenario_json(const ScenarioSummary& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(report_json(r));
  json tau = json::array();
  for (const auto& p : s.alignment) {
    tau.push_back(
        {{"order", p.order}, {"tau", optional_json(p.tau)}, {"converged", p.converged}, {"iterations", p.iterations}});
  }
  json acc = json::array();
  for (std::size_t i = 0; i < s.accuracy.size(); ++i) {
    const auto& a = s.accuracy[i];
    acc.push_back({{"order", i + 1}, {"accuracy", a ? json(a->accuracy) : json(nullptr)}});
  }
  return json{{"label", s.label}, {"reports", reports}, {"pagerank", tau}, {"accuracy", acc}};
}

void cmd_compare(const Invocation& inv, std::ostream& out) {
  const auto fmt = parse_path_format(inv.input_format);
  const auto a = load_corpus(inv.a, fmt);
  const auto b = load_corpus(inv.b, fmt);
  ComparisonConfig cc;
  cc.pagerank = pagerank_options(inv.config);
  cc.report = report_options(inv.config);
  cc.kl_epsilon = inv.config.kl_epsilon;
  cc.kl_direction = parse_degree_direction(inv.degree_direction);
  const auto report = comparison_report(a, b, inv.config.max_order, cc, inv.label_a, inv.label_b);

  std::ostringstream fig3, fig4, fig5, fig6;
  fig3 << "scenario," << kReportHeader << '\n';
  for (const auto* s : {&report.a, &report.b}) {
    for (const auto& r : s->reports) {
      fig3 << s->label << ',';
      write_report_row(fig3, r);
    }
  }
  fig4 << "metric,cosine\n";
  for (const auto& m : report.cosine) fig4 << m.metric << ',' << csv_value(m.cosine) << '\n';
  fig5 << "order,kl\n";
  for (const auto& o : report.orders) fig5 << o.order << ',' << csv_value(o.kl) << '\n';
  fig6 << "scenario,order,tau,accuracy\n";
  for (const auto* s : {&report.a, &report.b}) {
    for (std::size_t i = 0; i < s->reports.size(); ++i) {
      const auto& acc = s->accuracy[i];
      fig6 << s->label << ',' << i + 1 << ',' << csv_value(s->alignment[i].tau) << ','
           << csv_value(acc ? std::optional<double>(acc->accuracy) : std::nullopt) << '\n';
    }
  }

  if (inv.config.format == "csv") {
    write_csv_config(out, "compare", inv.config);
    out << "# block=fig3_metrics\n" << fig3.str() << "\n# block=fig4_cosine\n" << fig4.str()
        << "\n# block=fig5_kl\n" << fig5.str() << "\n# block=fig6_curves\n" << fig6.str();
    return;
  }

  json cosine = json::array();
  for (const auto& m : report.cosine) cosine.push_back({{"metric", m.metric}, {"cosine", optional_json(m.cosine)}});
  json orders = json::array();
  for (const auto& o : report.orders) {
    orders.push_back({{"order", o.order},
                      {"kl", optional_json(o.kl)},
                      {"tau_delta", optional_json(o.tau_delta)},
                      {"accuracy_delta", optional_json(o.accuracy_delta)}});
  }
  json doc{{"command", "compare"},
           {"config", config_json(inv.config)},
           {"kl_direction", std::string(to_string(cc.kl_direction))},
           {"scenario_a", scenario_json(report.a)},
           {"scenario_b", scenario_json(report.b)},
           {"cosine", cosine},
           {"orders", orders},
           {"csv",
            {{"fig3_metrics", fig3.str()},
             {"fig4_cosine", fig4.str()},
             {"fig5_kl", fig5.str()},
             {"fig6_curves", fig6.str()}}}};
  out << doc.dump(2) << '\n';
}

void cmd_synth(const Invocation& inv, std::ostream& out) {
  PathCorpus corpus = [&] {
    if (!inv.topology.empty()) {
      return shortest_route_corpus(load_topology(inv.topology), inv.paths, inv.min_hops, inv.config.seed);
    }
    const auto chain = random_planted_chain(inv.nodes, inv.memory, inv.branching, inv.determinism, inv.config.seed);
    return generate_corpus(chain, inv.paths, inv.min_len, inv.max_len, inv.config.seed + 1);
  }();
  write_csv_config(out, "synth", inv.config);
  write_paths(corpus, out, PathFormat::lines);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"honkit: higher-order network models from trajectory paths", "honkit"};
  app.require_subcommand(1);
  Invocation inv;

  auto* stats = app.add_subcommand("stats", "Path length statistics");
  add_common(*stats, inv);
  add_input(*stats, inv);

  auto* build = app.add_subcommand("build", "Serialize the HON of one order");
  add_common(*build, inv);
  add_input(*build, inv);
  build->add_option("--order", inv.order, "Memory order")->required();

  auto* order = app.add_subcommand("order", "Likelihood-ratio order selection");
  add_common(*order, inv);
  add_input(*order, inv);

  auto* report = app.add_subcommand("report", "Structural metrics per order");
  add_common(*report, inv);
  add_input(*report, inv, false);
  report->add_option("--topology", inv.topology, "Edge list to report as an order-1 network");

  auto* pagerank = app.add_subcommand("pagerank", "Higher-order PageRank alignment with visit counts");
  add_common(*pagerank, inv);
  add_input(*pagerank, inv);
  pagerank->add_option("--scores", inv.scores, "Also write per-node aggregated scores to this CSV file");

  auto* predict = app.add_subcommand("predict", "Next-node prediction accuracy per order");
  add_common(*predict, inv);
  add_input(*predict, inv);
  predict->add_flag("--holdout", inv.holdout, "Also evaluate on a seeded held-out split");

  auto* compare = app.add_subcommand("compare", "Compare two scenarios across orders");
  add_common(*compare, inv);
  compare->add_option("--a", inv.a, "First scenario corpus")->required();
  compare->add_option("--b", inv.b, "Second scenario corpus")->required();
  compare->add_option("--label-a", inv.label_a, "Label of the first scenario");
  compare->add_option("--label-b", inv.label_b, "Label of the second scenario");
  compare->add_option("--input-format", inv.input_format, "Path file format")
      ->check(CLI::IsMember({"lines", "ngram"}));
  compare->add_option("--degree-direction", inv.degree_direction, "Degree used for KL divergence")
      ->check(CLI::IsMember({"in", "out", "total"}));

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  add_common(*synth, inv);
  synth->add_option("--nodes", inv.nodes, "Planted chain: node count");
  synth->add_option("--memory", inv.memory, "Planted chain: memory order");
  synth->add_option("--branching", inv.branching, "Planted chain: successors per node");
  synth->add_option("--determinism", inv.determinism, "Planted chain: mass on the preferred successor");
  synth->add_option("--paths", inv.paths, "Number of paths");
  synth->add_option("--min-len", inv.min_len, "Planted chain: minimum path length (nodes)");
  synth->add_option("--max-len", inv.max_len, "Planted chain: maximum path length (nodes)");
  synth->add_option("--topology", inv.topology, "Route shortest paths on this edge list instead");
  synth->add_option("--min-hops", inv.min_hops, "Routes: minimum origin-destination hop distance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  if (inv.config.format.empty()) inv.config.format = (name == "report" || name == "build") ? "csv" : "json";

  try {
    validate(inv.config);
    std::ofstream file;
    std::ostringstream buffer;
    if (name == "stats") cmd_stats(inv, buffer);
    else if (name == "build") cmd_build(inv, buffer);
    else if (name == "order") cmd_order(inv, buffer);
    else if (name == "report") cmd_report(inv, buffer);
    else if (name == "pagerank") cmd_pagerank(inv, buffer);
    else if (name == "predict") cmd_predict(inv, buffer);
    else if (name == "compare") cmd_compare(inv, buffer);
    else if (name == "synth") cmd_synth(inv, buffer);

    if (inv.output.empty()) {
      out << buffer.str();
    } else {
      file.open(inv.output);
      if (!file) throw DataError("cannot write '" + inv.output + "'");
      file << buffer.str();
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace honkit::cli

#include "ltest_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ltest/bridge.hpp"
#include "ltest/error.hpp"
#include "ltest/graph_checks.hpp"
#include "ltest/oracle.hpp"
#include "ltest/reachability.hpp"
#include "ltest/semigroup_checks.hpp"
#include "ltest/text.hpp"
#include "ltest_cli/report.hpp"

namespace ltest::cli {

namespace {

struct Options {
  std::size_t cap_nodes = Limits{}.tuple_cap;
  std::size_t cap_semigroup = Limits{}.semigroup_cap;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t jobs = 1;
  std::string json_path;
  std::string output;
  std::string checks;
  bool no_complete = false;
  std::size_t k = 2;
  std::size_t l = 1;
  std::string language_class = "k-testable";
  std::size_t power = 1;
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t max_states = 6;
  std::size_t max_letters = 3;
  std::vector<std::string> files;

  Limits limits() const {
    Limits l;
    l.tuple_cap = cap_nodes;
    l.semigroup_cap = cap_semigroup;
    return l;
  }
};

void env_default(const char* name, std::size_t& target) {
  if (const char* v = std::getenv(name)) {
    try {
      target = std::stoull(v);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("environment variable ") + name + " is not a number: " + v);
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class F>
CheckRecord timed(const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord r{name, f(), 0, {}};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Runs independent checks, on up to `jobs` threads.
std::vector<CheckRecord> run_all(std::vector<std::function<CheckRecord()>> tasks, std::size_t jobs) {
  std::vector<CheckRecord> out;
  if (jobs <= 1) {
    for (auto& t : tasks) out.push_back(t());
    return out;
  }
  for (std::size_t i = 0; i < tasks.size(); i += jobs) {
    std::vector<std::future<CheckRecord>> batch;
    for (std::size_t j = i; j < std::min(tasks.size(), i + jobs); ++j) {
      batch.push_back(std::async(std::launch::async, tasks[j]));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

Verdict acyclic_verdict(const TransitionGraph& g) {
  const auto comps = scc(g, 1);
  for (Node p = 0; p < g.node_count(); ++p) {
    if (comps.size[comps.component[p]] < 2) continue;
    for (Node q = p + 1; q < g.node_count(); ++q) {
      if (comps.component[q] == comps.component[p]) {
        return Verdict::fail("acyclic", Witness{"cycle", {p, q}, {}, {}, "p and q lie on a common cycle"});
      }
    }
  }
  return Verdict::pass("acyclic");
}

void emit(const AnalysisReport& report, const Options& o, std::ostream& out) {
  out << to_text(report);
  if (!o.json_path.empty()) write_output(o.json_path, to_json(report), out);
}

const std::vector<std::string> kGraphChecks = {"lt", "tlt", "left", "right", "li", "pw", "acyclic", "aperiodic"};
const std::vector<std::string> kSemigroupChecks = {"lt", "tlt", "left", "right", "li", "pw", "aperiodic"};
const std::vector<std::string> kAllSelectors = {"lt",    "order", "k-test", "tlt",     "left",
                                                "right", "li",    "pw",     "acyclic", "aperiodic"};

void require_known(const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (std::find(kAllSelectors.begin(), kAllSelectors.end(), c) == kAllSelectors.end()) {
      throw InvalidInput("unknown check '" + c + "' (known: lt, order, k-test, tlt, left, right, li, pw, acyclic, aperiodic)");
    }
  }
}

std::optional<AcceptorDfa> acceptor_of(const GraphFile& f) {
  if (!f.initial || !f.finals) return std::nullopt;
  return make_acceptor(f.graph, *f.initial, *f.finals);
}

int analyze_graph(const Options& o, std::ostream& out) {
  const auto file = parse_graph_file(read_file(o.files.at(0)));
  const auto checks = o.checks.empty() ? kGraphChecks : split_checks(o.checks);
  require_known(checks);
  const Limits limits = o.limits();
  const TransitionGraph& raw = file.graph;
  const bool sink = !raw.is_complete() && !o.no_complete;
  const TransitionGraph complete = sink ? complete_with_sink(raw) : raw;
  const auto acceptor = acceptor_of(file);
  auto need_acceptor = [&](const std::string& check) -> const AcceptorDfa& {
    if (!acceptor) throw InvalidInput("check '" + check + "' needs 'initial' and 'final' lines in the graph file");
    return *acceptor;
  };

  AnalysisReport report;
  report.file = o.files[0];
  report.kind = "graph";
  report.input = {{"nodes", static_cast<std::int64_t>(raw.node_count())},
                  {"letters", static_cast<std::int64_t>(raw.letter_count())},
                  {"edges", static_cast<std::int64_t>(raw.edge_count())},
                  {"complete", raw.is_complete()},
                  {"sink_added", sink}};

  std::vector<std::function<CheckRecord()>> tasks;
  for (const auto& c : checks) {
    if (c == "lt") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_local_testability_graph(complete, limits); }); });
    } else if (c == "tlt") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_threshold_lt_graph(complete, limits); }); });
    } else if (c == "left") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_left_lt_graph(complete, limits); }); });
    } else if (c == "right") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_right_lt_graph(complete, limits); }); });
    } else if (c == "li") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_local_idempotency_graph(complete, limits); }); });
    } else if (c == "pw") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_piecewise_graph(raw); }); });
    } else if (c == "acyclic") {
      tasks.push_back([&, c] { return timed(c, [&] { return acyclic_verdict(raw); }); });
    } else if (c == "aperiodic") {
      tasks.push_back([&, c] {
        return timed(c, [&] {
          if (!complete.is_complete()) throw InvalidInput("aperiodic needs a complete graph");
          return is_aperiodic(transition_semigroup(complete, limits).semigroup);
        });
      });
    } else if (c == "k-test") {
      const auto& a = need_acceptor(c);
      tasks.push_back([&, c] { return timed(c, [&] { return check_k_testability_graph(a, o.k, limits); }); });
    } else if (c == "order") {
      const auto& a = need_acceptor(c);
      tasks.push_back([&, c] {
        OrderBounds b;
        auto r = timed(c, [&] {
          b = order_bounds_graph(a, o.order_cap, limits);
          return b.lt;
        });
        r.extra["order"] = b.order ? Value(static_cast<std::int64_t>(*b.order)) : Value();
        r.extra["order_cap"] = static_cast<std::int64_t>(b.cap);
        r.extra["above_cap"] = b.above_cap;
        return r;
      });
    }
  }
  report.checks = run_all(std::move(tasks), o.jobs);
  emit(report, o, out);
  return kOk;
}

int analyze_semigroup(const Options& o, std::ostream& out) {
  const Limits limits = o.limits();
  const auto s = parse_semigroup(read_file(o.files.at(0)), limits);
  const auto checks = o.checks.empty() ? kSemigroupChecks : split_checks(o.checks);
  require_known(checks);
  for (const auto& c : checks) {
    if (c == "k-test" || c == "acyclic") throw InvalidInput("check '" + c + "' applies to graphs only");
  }
  AnalysisReport report;
  report.file = o.files[0];
  report.kind = "semigroup";
  report.input = {{"elements", static_cast<std::int64_t>(s.size())},
                  {"generators", static_cast<std::int64_t>(s.generator_count())},
                  {"idempotents", static_cast<std::int64_t>(idempotents(s).size())}};
  std::vector<std::function<CheckRecord()>> tasks;
  for (const auto& c : checks) {
    if (c == "lt") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_local_testability_semigroup(s); }); });
    } else if (c == "tlt") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_threshold_lt_semigroup(s); }); });
    } else if (c == "left") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_left_lt_semigroup(s); }); });
    } else if (c == "right") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_right_lt_semigroup(s); }); });
    } else if (c == "li") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_local_idempotency_semigroup(s); }); });
    } else if (c == "pw") {
      tasks.push_back([&, c] { return timed(c, [&] { return check_piecewise_semigroup(s); }); });
    } else if (c == "aperiodic") {
      tasks.push_back([&, c] { return timed(c, [&] { return is_aperiodic(s); }); });
    } else if (c == "order") {
      tasks.push_back([&, c] {
        std::optional<std::size_t> bound;
        auto r = timed(c, [&] {
          auto v = check_local_testability_semigroup(s);
          if (v) bound = order_lower_bound_semigroup(s);
          return v;
        });
        r.extra["order_lower_bound"] = bound ? Value(static_cast<std::int64_t>(*bound)) : Value();
        return r;
      });
    }
  }
  report.checks = run_all(std::move(tasks), o.jobs);
  emit(report, o, out);
  return kOk;
}

std::string semigroup_with_comments(const FiniteSemigroup& s, const std::vector<std::string>& labels) {
  std::ostringstream text;
  text << "# " << s.size() << " elements, " << s.generator_count() << " generators\n";
  for (std::size_t x = 0; x < labels.size(); ++x) text << "# " << x << ": " << labels[x] << '\n';
  text << serialize_semigroup(s);
  return text.str();
}

int bridge(const Options& o, std::ostream& out) {
  const auto file = parse_graph_file(read_file(o.files.at(0)));
  TransitionGraph g = file.graph;
  if (!g.is_complete()) {
    if (o.no_complete) throw InvalidInput("graph is not complete");
    g = complete_with_sink(g);
  }
  const auto ts = transition_semigroup(g, o.limits());
  std::vector<std::string> labels;
  for (const auto& w : ts.witnesses) labels.push_back(word_string(w));
  write_output(o.output, semigroup_with_comments(ts.semigroup, labels), out);
  return kOk;
}

int product_graphs_cmd(const Options& o, std::ostream& out) {
  const auto a = parse_graph(read_file(o.files.at(0)));
  const auto b = parse_graph(read_file(o.files.at(1)));
  write_output(o.output, serialize_graph(product_graphs(a, b)), out);
  return kOk;
}

int product_semigroups_cmd(const Options& o, std::ostream& out) {
  const Limits limits = o.limits();
  const auto a = parse_semigroup(read_file(o.files.at(0)), limits);
  const auto b = parse_semigroup(read_file(o.files.at(1)), limits);
  const auto p = product_semigroups(a, b, limits);
  write_output(o.output, semigroup_with_comments(p, p.names()), out);
  return kOk;
}

int oracle(const Options& o, std::ostream& out) {
  const auto file = parse_graph_file(read_file(o.files.at(0)));
  const auto a = acceptor_of(file);
  if (!a) throw InvalidInput("the oracle needs 'initial' and 'final' lines in the graph file");
  ScanParams p{language_class_from_string(o.language_class), o.k, o.l, a->graph.letter_count()};
  if (p.k == 0 || p.l == 0) throw InvalidInput("--k and --l must be at least 1");
  AnalysisReport report;
  report.file = o.files[0];
  report.kind = "acceptor";
  report.input = {{"nodes", static_cast<std::int64_t>(a->graph.node_count())},
                  {"letters", static_cast<std::int64_t>(a->graph.letter_count())},
                  {"class", to_string(p.cls)},
                  {"k", static_cast<std::int64_t>(p.k)},
                  {"l", static_cast<std::int64_t>(p.l)}};
  Limits limits = o.limits();
  report.checks.push_back(timed("oracle", [&] { return decide_exact(*a, p, limits); }));
  emit(report, o, out);
  return kOk;
}

int gen_a2(const Options& o, std::ostream& out) {
  if (o.power == 0) throw InvalidInput("--power must be at least 1");
  const auto s = a2_power(o.power, o.limits());
  write_output(o.output, semigroup_with_comments(s, s.names()), out);
  return kOk;
}

int corpus(const Options& o, std::ostream& out) {
  const auto items = random_corpus(o.seed, o.count, o.max_states, o.max_letters);
  if (!o.output.empty()) {
    std::filesystem::create_directories(o.output);
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::ostringstream name;
      name << "corpus-" << std::setw(4) << std::setfill('0') << i << ".tg";
      write_output((std::filesystem::path(o.output) / name.str()).string(),
                   "# seed " + std::to_string(o.seed) + ", item " + std::to_string(i) + "\n" + items[i].serialize(),
                   out);
    }
    out << "wrote " << items.size() << " automata to " << o.output << '\n';
  } else {
    for (std::size_t i = 0; i < items.size(); ++i) {
      out << "# seed " << o.seed << ", item " << i << '\n' << items[i].serialize();
      if (i + 1 != items.size()) out << '\n';
    }
  }
  if (!o.json_path.empty()) {
    AnalysisReport report;
    report.file = o.output;
    report.kind = "corpus";
    report.seed = o.seed;
    report.input = {{"count", static_cast<std::int64_t>(o.count)},
                    {"max_states", static_cast<std::int64_t>(o.max_states)},
                    {"max_letters", static_cast<std::int64_t>(o.max_letters)}};
    write_output(o.json_path, to_json(report), out);
  }
  return kOk;
}

// A full multiplication table: `magma n`, n rows of n entries, then an
// optional `generators ...` line (default: every element).
int assoc(const Options& o, std::ostream& out) {
  const std::string source = read_file(o.files.at(0));
  const auto lines = text::tokenize(source);
  if (lines.empty() || lines[0].fields.size() != 2 || lines[0].fields[0].value != "magma") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1, "expected header 'magma <n>'");
  }
  const std::size_t n = text::to_index(lines[0], lines[0].fields[1]);
  if (n == 0) throw ParseError(lines[0].number, lines[0].fields[1].column, "size must be positive");
  if (lines.size() < n + 1) throw ParseError(lines.back().number, 0, "expected " + std::to_string(n) + " rows");
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& line = lines[x + 1];
    if (line.fields.size() != n) throw ParseError(line.number, 0, "row must have " + std::to_string(n) + " entries");
    for (std::size_t y = 0; y < n; ++y) {
      const auto v = text::to_index(line, line.fields[y]);
      if (v >= n) throw ParseError(line.number, line.fields[y].column, "entry out of range");
      table[x * n + y] = static_cast<Element>(v);
    }
  }
  std::vector<Element> generators;
  if (lines.size() > n + 1) {
    const auto& line = lines[n + 1];
    if (line.fields[0].value != "generators" || lines.size() > n + 2) {
      throw ParseError(line.number, 1, "expected a single 'generators ...' line after the table");
    }
    for (std::size_t i = 1; i < line.fields.size(); ++i) {
      const auto v = text::to_index(line, line.fields[i]);
      if (v >= n) throw ParseError(line.number, line.fields[i].column, "generator out of range");
      generators.push_back(static_cast<Element>(v));
    }
  } else {
    for (Element x = 0; x < n; ++x) generators.push_back(x);
  }
  if (auto v = light_associativity_test(n, table, generators)) {
    const Element a = v->a, j = v->generator, b = v->b;
    out << "not associative: (" << a << '*' << j << ")*" << b << " = " << table[table[a * n + j] * n + b] << " but "
        << a << "*(" << j << '*' << b << ") = " << table[a * n + table[j * n + b]] << '\n';
  } else {
    out << "associative (Light's test over " << generators.size() << " generators)\n";
  }
  return kOk;
}

int minimize(const Options& o, std::ostream& out) {
  const auto file = parse_graph_file(read_file(o.files.at(0)));
  const auto a = acceptor_of(file);
  if (!a) throw InvalidInput("minimize needs 'initial' and 'final' lines in the graph file");
  write_output(o.output, minimize_dfa(*a).serialize(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    env_default("LTEST_CAP_NODES", o.cap_nodes);
    env_default("LTEST_CAP_SEMIGROUP", o.cap_semigroup);
    env_default("LTEST_ORDER_CAP", o.order_cap);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  CLI::App app{"Testability analysis of automata and finite semigroups", "ltest"};
  app.set_version_flag("--version", std::string(LTEST_VERSION));
  app.require_subcommand(1);
  app.add_option("--cap-nodes", o.cap_nodes, "Largest direct power of a graph, in tuples (LTEST_CAP_NODES)");
  app.add_option("--cap-semigroup", o.cap_semigroup, "Largest semigroup, in elements (LTEST_CAP_SEMIGROUP)");
  app.add_option("--order-cap", o.order_cap, "Largest k tried when searching the order (LTEST_ORDER_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Run independent checks on this many threads")->check(CLI::PositiveNumber);

  std::function<int()> action;
  auto files = [&](CLI::App* sub, const std::string& name, int count) {
    sub->add_option(name, o.files, "Input file(s)")->required()->expected(count)->check(CLI::ExistingFile);
    sub->fallthrough();
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "Write the result here"); };

  auto* analyze = app.add_subcommand("analyze", "Run decision procedures on a graph or a semigroup");
  analyze->require_subcommand(1);
  analyze->fallthrough();
  for (const char* kind : {"graph", "semigroup"}) {
    auto* sub = analyze->add_subcommand(kind, std::string("Analyze a ") + kind + " file");
    files(sub, "file", 1);
    sub->add_option("--checks", o.checks, "Comma-separated: lt, order, k-test, tlt, left, right, li, pw, acyclic, aperiodic");
    sub->add_option("--json", o.json_path, "Also write a JSON report");
    sub->add_option("--k", o.k, "Window width for k-test")->check(CLI::PositiveNumber);
    if (std::string(kind) == "graph") {
      sub->add_flag("--no-complete", o.no_complete, "Do not add a sink to incomplete graphs");
      sub->callback([&] { action = [&] { return analyze_graph(o, out); }; });
    } else {
      sub->callback([&] { action = [&] { return analyze_semigroup(o, out); }; });
    }
  }

  auto* bridge_cmd = app.add_subcommand("bridge", "Transition semigroup of a graph, as a semigroup file");
  files(bridge_cmd, "file", 1);
  output(bridge_cmd);
  bridge_cmd->add_flag("--no-complete", o.no_complete, "Reject incomplete graphs instead of adding a sink");
  bridge_cmd->callback([&] { action = [&] { return bridge(o, out); }; });

  auto* product = app.add_subcommand("product", "Direct product of two graphs or two semigroups");
  product->require_subcommand(1);
  product->fallthrough();
  auto* pg = product->add_subcommand("graphs", "Product of two graph files");
  files(pg, "files", 2);
  output(pg);
  pg->callback([&] { action = [&] { return product_graphs_cmd(o, out); }; });
  auto* ps = product->add_subcommand("semigroups", "Product of two semigroup files");
  files(ps, "files", 2);
  output(ps);
  ps->callback([&] { action = [&] { return product_semigroups_cmd(o, out); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact fixed-k class membership of an acceptor");
  files(oracle_cmd, "file", 1);
  oracle_cmd->add_option("--class", o.language_class,
                         "k-testable, threshold, strictly, strongly, right, left or piecewise");
  oracle_cmd->add_option("--k", o.k, "Window width")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--l", o.l, "Threshold (threshold class only)")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--json", o.json_path, "Also write a JSON report");
  oracle_cmd->callback([&] { action = [&] { return oracle(o, out); }; });

  auto* gen = app.add_subcommand("gen", "Built-in semigroups");
  gen->require_subcommand(1);
  gen->fallthrough();
  auto* a2 = gen->add_subcommand("a2", "The five-element semigroup A2, or a direct power of it");
  a2->add_option("--power", o.power, "Number of factors")->check(CLI::PositiveNumber);
  output(a2);
  a2->fallthrough();
  a2->callback([&] { action = [&] { return gen_a2(o, out); }; });

  auto* corpus_cmd = app.add_subcommand("corpus", "Seeded random minimal acceptors");
  corpus_cmd->add_option("--seed", o.seed, "Random seed");
  corpus_cmd->add_option("--count", o.count, "Number of automata");
  corpus_cmd->add_option("--max-states", o.max_states, "State bound")->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--max-letters", o.max_letters, "Alphabet bound")->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--json", o.json_path, "Also write a JSON summary");
  corpus_cmd->fallthrough();
  output(corpus_cmd);
  corpus_cmd->callback([&] { action = [&] { return corpus(o, out); }; });

  auto* assoc_cmd = app.add_subcommand("assoc", "Light's associativity test on a full multiplication table");
  files(assoc_cmd, "file", 1);
  assoc_cmd->callback([&] { action = [&] { return assoc(o, out); }; });

  auto* minimize_cmd = app.add_subcommand("minimize", "Minimal complete acceptor of the same language");
  files(minimize_cmd, "file", 1);
  output(minimize_cmd);
  minimize_cmd->callback([&] { action = [&] { return minimize(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kCapRefusal;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace ltest::cli

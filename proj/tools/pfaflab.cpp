// pfaflab command line: verify, scan, eval, table, network, cache.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfaflab/pfaflab.hpp"

namespace fs = std::filesystem;
using namespace pfaflab;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  RunConfig run;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::string report_path;
  // scan
  bool generalized = false;
  // eval / network / table
  std::string object, diagram, subset, shape, product, file, action;
  int width = 3;
  bool tl = false, symbolic = false;
};

FCache cache_for(const Options& o) {
  if (o.no_cache || o.cache_dir.empty()) return {};
  return FCache(o.cache_dir);
}

void configure(const Options& o) {
  o.run.validate();
  FTableRegistry::instance().configure(cache_for(o), o.run.jobs);
}

Subset parse_subset(const std::string& s) {
  Subset out;
  for (int x : parse_partition(s)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

SkewShape parse_shape(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return SkewShape::make(parse_partition(s));
  return SkewShape::make(parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1)));
}

void print_report(const VerificationReport& r, const Options& o) {
  if (o.format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.theorem << " n=" << r.n << ": " << r.cases << " cases, " << r.failures.size() << " failed\n";
    for (auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
  }
  if (!o.report_path.empty()) {
    std::ofstream out(o.report_path);
    out << r.to_json().dump(2) << "\n";
  }
}

int cmd_verify(const Options& o) {
  if (o.object == "list") {
    for (auto& e : theorem_registry()) {
      std::cout << e.id;
      for (auto& a : e.aliases) std::cout << " " << a;
      std::cout << "\t" << e.summary << "\n";
    }
    return 0;
  }
  const TheoremEntry* e = find_theorem(o.object);
  if (!e) {
    std::cerr << "unknown theorem id '" << o.object << "' (try: pfaflab verify list)\n";
    return kExitUsage;
  }
  configure(o);
  auto r = e->run(o.run);
  print_report(r, o);
  return r.ok() ? 0 : kExitFail;
}

int cmd_scan(const Options& o) {
  configure(o);
  std::vector<ScanVerdict> vs;
  const std::string& id = o.object;
  if (id == "con1" || id == "con-5.1") {
    for (int n = 1; n <= o.run.n; ++n) {
      auto part = scan_con1(n, o.run.bound, o.run.k, o.generalized, o.run.seed);
      vs.insert(vs.end(), part.begin(), part.end());
    }
  } else if (id == "con2" || id == "con-5.5") {
    vs = scan_cell_transfer(o.run.bound, o.run.k, o.run.jobs);
  } else if (id == "con3" || id == "con-5.7") {
    vs = scan_sort(o.run.bound, o.run.k, o.run.jobs);
  } else {
    std::cerr << "unknown conjecture id '" << id << "' (con1, con2, con3)\n";
    return kExitUsage;
  }
  ScanSummary s;
  for (auto& v : vs) s.count(v);
  if (o.format == "text") {
    for (auto& v : vs)
      if (v.verdict != "positive") std::cout << v.verdict << " " << v.instance << ": " << v.expansion.to_string() << "\n";
  } else {
    write_jsonl(std::cout, vs);
  }
  std::cerr << id << ": " << s.instances << " instances, " << s.positive << " positive, " << s.counterexamples
            << " counterexamples, " << s.not_in_span << " outside the Q-span\n";
  if (!o.report_path.empty()) {
    std::ofstream out(o.report_path);
    write_jsonl(out, vs);
  }
  return 0;
}

void print_value(const Options& o, const std::string& value) {
  if (o.format == "json") std::cout << json{{"object", o.object}, {"value", value}}.dump() << "\n";
  else std::cout << value << "\n";
}

int cmd_eval(const Options& o) {
  configure(o);
  int n = o.run.n;
  if (o.object == "pfaffinant" || o.object == "tl-pfaffinant") {
    auto d = SymTLDiagram::from_key(n, o.diagram);
    PfaffinantEvaluator ev(SkewArray::symbolic(2 * n), o.run.seed);
    bool tl = o.tl || o.object == "tl-pfaffinant";
    if (tl && !d.is_even()) throw std::invalid_argument("TL-pfaffinants are indexed by even diagrams");
    print_value(o, (tl ? ev.tl_pfaffinant(d) : ev.diagram_pfaffinant(d)).to_string());
  } else if (o.object == "pfaffian") {
    print_value(o, pfaffian(SkewArray::symbolic(2 * n)).to_string());
  } else if (o.object == "complementary") {
    Subset I = parse_subset(o.subset);
    check_even_subset(I);
    print_value(o, complementary_pfaffian(SkewArray::symbolic(2 * n), I).to_string());
  } else if (o.object == "immanant") {
    auto d = OrdinaryTLDiagram::from_key(n, o.diagram);
    GeneralMatrix b(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) b.set(i, j, Polynomial(a(i, j)));
    print_value(o, tl_immanant(d, b).to_string());
  } else if (o.object == "schur-q") {
    print_value(o, schur_q(parse_shape(o.shape), o.run.k).to_string());
  } else if (o.object == "jt-pfaffian") {
    auto s = parse_shape(o.shape);
    print_value(o, pfaffian(q_jt_matrix(s.lambda, s.mu, o.run.k)).to_string());
  } else if (o.object == "q-expand") {
    // product of Q-functions, e.g. "(3,1)*(2)"
    Polynomial p(1L);
    std::string rest = o.product;
    for (std::size_t pos; !rest.empty();) {
      pos = rest.find('*');
      p *= schur_q(parse_shape(rest.substr(0, pos)), o.run.k);
      rest = pos == std::string::npos ? "" : rest.substr(pos + 1);
    }
    print_value(o, expand_in_q_basis(p, o.run.k).to_string());
  } else {
    std::cerr << "unknown object '" << o.object
              << "' (pfaffinant, tl-pfaffinant, pfaffian, complementary, immanant, schur-q, jt-pfaffian, q-expand)\n";
    return kExitUsage;
  }
  return 0;
}

int cmd_table(const Options& o) {
  configure(o);
  const TableEntry* t = find_table(o.object);
  if (!t) {
    std::cerr << "unknown table '" << o.object << "'\n";
    return kExitUsage;
  }
  std::cout << t->render(o.run.seed);
  return 0;
}

int cmd_network(const Options& o) {
  configure(o);
  if (o.action == "build") {
    auto net = construct_network_of_diagram(SymTLDiagram::from_key(o.run.n, o.diagram));
    std::cout << net.to_json().dump(1) << "\n";
    return 0;
  }
  if (o.action == "grid") {
    std::cout << random_grid(o.run.n, o.width, o.run.seed, o.symbolic).to_json().dump(1) << "\n";
    return 0;
  }
  if (o.action == "check" || o.action == "pfaffinant") {
    std::ifstream in(o.file);
    if (!in) throw std::invalid_argument("cannot read network file '" + o.file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw InvalidNetwork(std::string("malformed JSON: ") + e.what());
    }
    auto net = Network::from_json(j);
    auto census = family_census(net, o.run.jobs);
    if (o.action == "pfaffinant") {
      auto d = SymTLDiagram::from_key(net.n(), o.diagram);
      print_value(o, (o.tl ? hat_pfaf(census, d) : hat_pfaf_prime(census, d)).to_string());
      return 0;
    }
    auto a = path_weight_matrix(net);
    VerificationReport r = verify_stembridge(net, census, a);
    r.theorem = "network-check";
    r.absorb(check_covering_counts(census));
    PfaffinantEvaluator ev(a, o.run.seed);
    for (auto& d : enumerate_sym_tl_even(net.n())) r.absorb(verify_network_equality(net, d, census, ev));
    print_report(r, o);
    return r.ok() ? 0 : kExitFail;
  }
  std::cerr << "unknown network action '" << o.action << "' (build, grid, check, pfaffinant)\n";
  return kExitUsage;
}

int cmd_cache(const Options& o) {
  o.run.validate();
  if (o.cache_dir.empty()) {
    std::cerr << "no cache directory: pass --cache-dir or set PFAFLAB_CACHE_DIR\n";
    return kExitUsage;
  }
  fs::path dir(o.cache_dir);
  if (o.action == "info") {
    std::size_t files = 0, bytes = 0;
    if (fs::exists(dir))
      for (auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") {
          ++files;
          bytes += std::size_t(e.file_size());
        }
    std::cout << dir.string() << ": " << files << " entries, " << bytes << " bytes\n";
    return 0;
  }
  if (o.action == "clear") {
    std::size_t removed = 0;
    if (fs::exists(dir))
      for (auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().filename().string().rfind("f_n", 0) == 0) {
          fs::remove(e.path());
          ++removed;
        }
    std::cout << "removed " << removed << " entries\n";
    return 0;
  }
  if (o.action == "warm" || o.action == "check") {
    FCache cache(dir);
    auto cached = compute_f_table(o.run.n, o.run.seed, o.run.jobs, cache);
    if (o.action == "warm") {
      std::cout << "n=" << o.run.n << ": " << cached.matchings.size() << " matchings, " << cached.cache_hits
                << " from cache\n";
      return 0;
    }
    auto fresh = compute_f_table(o.run.n, o.run.seed, o.run.jobs);
    bool same = fresh.f == cached.f;
    std::cout << "n=" << o.run.n << ": cached table " << (same ? "matches" : "DIFFERS FROM") << " recomputation ("
              << cached.cache_hits << " hits)\n";
    return same ? 0 : kExitFail;
  }
  std::cerr << "unknown cache action '" << o.action << "' (info, clear, warm, check)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pfaffinant, immanant and Schur Q-function computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  if (const char* env = std::getenv("PFAFLAB_CACHE_DIR")) o.cache_dir = env;

  app.add_option("--n", o.run.n, "diagram size n (arrays are 2n x 2n)");
  app.add_option("--k", o.run.k, "number of variables for Q-functions");
  app.add_option("--bound", o.run.bound, "scan bound on |λ| + |ν| (|λ| for con1)");
  app.add_option("--max-size", o.run.max_size, "largest |λ| for Q-function checks");
  app.add_option("--samples", o.run.samples, "sampled subsets or random networks");
  app.add_option("--seed", o.run.seed, "embedding / random seed");
  app.add_option("--jobs", o.run.jobs, "worker threads");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", o.cache_dir, "cache directory (default $PFAFLAB_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "ignore the cache");
  app.add_option("--report", o.report_path, "also write the JSON report / JSONL verdicts here");

  auto* verify = app.add_subcommand("verify", "run a named verification (verify list shows ids)");
  verify->add_option("id", o.object)->required();

  auto* scan = app.add_subcommand("scan", "classify conjecture instances, JSONL output by default");
  scan->add_option("id", o.object)->required();
  scan->add_flag("--generalized", o.generalized, "con1: allow weakly decreasing λ and μ");

  auto* eval = app.add_subcommand("eval", "evaluate one object symbolically");
  eval->add_option("object", o.object)->required();
  eval->add_option("--diagram", o.diagram, "diagram key, V[...] or T[...]");
  eval->add_option("--subset", o.subset, "subset I, e.g. 1,3");
  eval->add_option("--shape", o.shape, "shifted shape, e.g. (4,2)/(1)");
  eval->add_option("--product", o.product, "product of shapes, e.g. (3,1)*(2)");
  eval->add_flag("--tl", o.tl, "TL-pfaffinant instead of diagram pfaffinant");

  auto* table = app.add_subcommand("table", "print a worked table as CSV");
  table->add_option("id", o.object)->required();

  auto* network = app.add_subcommand("network", "build or check planar networks");
  network->add_option("action", o.action)->required();
  network->add_option("file", o.file);
  network->add_option("--diagram", o.diagram, "diagram key");
  network->add_option("--width", o.width, "grid width");
  network->add_flag("--symbolic", o.symbolic, "symbolic edge weights");
  network->add_flag("--tl", o.tl, "TL-pfaffinant instead of diagram pfaffinant");

  auto* cache = app.add_subcommand("cache", "inspect the f-coefficient cache");
  cache->add_option("action", o.action)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (o.format == "csv" && !table->parsed()) o.format = "text";
  if (scan->parsed() && !app.get_option("--format")->count()) o.format = "json";

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (scan->parsed()) return cmd_scan(o);
    if (eval->parsed()) return cmd_eval(o);
    if (table->parsed()) return cmd_table(o);
    if (network->parsed()) return cmd_network(o);
    if (cache->parsed()) return cmd_cache(o);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

// ptflab: exact influence analysis of boolean functions, QTF representability,
// graph-based influence bounds, and the counterexample searches.

#include <CLI11.hpp>
#include <json.hpp>

#include "ptflab/family.hpp"
#include "ptflab/graphs.hpp"
#include "ptflab/majority.hpp"
#include "ptflab/qtf.hpp"
#include "ptflab/search.hpp"
#include "ptflab/spectral.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

using namespace ptflab;
using nlohmann::json;

namespace {

std::string sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int resolve_workers(int flag_value) {
  if (const char* env = std::getenv("PTFLAB_WORKERS")) {
    int w = std::atoi(env);
    if (w < 1) throw std::invalid_argument("PTFLAB_WORKERS must be a positive integer");
    return w;
  }
  return flag_value;
}

SupportGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return SupportGraph::parse(in);
}

json witness_json(const QuadraticPolynomial& q) {
  json ints = json::array();
  for (const auto& z : q.integer_coefficients()) ints.push_back(z.str());
  return ints;
}

void cmd_influence(const std::string& hex, int n, bool as_json) {
  BooleanFunction f = BooleanFunction::from_hex(n, hex);
  if (as_json) {
    json out;
    out["n"] = n;
    out["table_hex"] = f.to_hex();
    json per = json::array();
    for (int i = 1; i <= n; ++i) per.push_back(influence(f, i).str());
    out["influences"] = per;
    out["total"] = total_influence(f).str();
    std::cout << out.dump() << "\n";
    return;
  }
  for (int i = 1; i <= n; ++i)
    std::cout << "Inf_" << i << " = " << influence(f, i).str() << "\n";
  DyadicRational total = total_influence(f);
  std::cout << "total = " << total.str() << " (" << sig6(total.to_double()) << ")\n";
}

void cmd_fourier(const std::string& hex, int n) {
  BooleanFunction f = BooleanFunction::from_hex(n, hex);
  SpectralVector spec = wht(f);
  for (std::uint32_t mask = 0; mask < spec.size(); ++mask) {
    if (spec.scaled(mask) == 0) continue;
    std::printf("%x %s\n", mask, spec.coefficient(mask).str().c_str());
  }
}

void cmd_qtf_check(const std::string& hex, int n, const std::string& support_path, bool as_json) {
  BooleanFunction f = BooleanFunction::from_hex(n, hex);
  std::optional<SupportGraph> support;
  if (!support_path.empty()) support = load_graph(support_path);
  QtfResult res = qtf_representable(f, support);
  if (as_json) {
    json out;
    out["feasible"] = res.feasible;
    if (res.feasible) out["witness"] = witness_json(*res.witness);
    else {
      json cert = json::array();
      for (const auto& y : res.certificate) cert.push_back(to_fraction_string(y));
      out["certificate"] = cert;
    }
    std::cout << out.dump() << "\n";
    return;
  }
  if (res.feasible) {
    std::cout << "FEASIBLE\n";
    auto ints = res.witness->integer_coefficients();
    std::cout << "constant " << ints[0].str() << "\n";
    for (int i = 1; i <= n; ++i) std::cout << "x" << i << " " << ints[i].str() << "\n";
    std::size_t t = std::size_t(n) + 1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++t)
        if (ints[t] != 0) std::cout << "x" << i << "x" << j << " " << ints[t].str() << "\n";
  } else {
    std::cout << "INFEASIBLE\n";
    for (std::size_t i = 0; i < res.certificate.size(); ++i)
      if (!res.certificate[i].is_zero())
        std::cout << "y[" << i << "] = " << to_fraction_string(res.certificate[i]) << "\n";
  }
}

void cmd_igl(int n, int d) {
  DyadicRational v = igl(n, d);
  std::cout << v.str() << " (" << sig6(v.to_double()) << ")\n";
}

void cmd_family(int n, bool as_json) {
  DyadicRational inf = family_influence_fast(n);
  DyadicRational bound = igl(n, 2);
  FamilyRatio ratio = family_ratio(n);
  BigRational excess = ratio.exact - 1;
  if (as_json) {
    json out;
    out["n"] = n;
    out["influence"] = inf.str();
    out["igl"] = bound.str();
    out["ratio_minus_1"] = to_fraction_string(excess);
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "I[f_" << n << "] = " << inf.str() << " (" << sig6(inf.to_double()) << ")\n";
  std::cout << "I_GL(" << n << ",2) = " << bound.str() << " (" << sig6(bound.to_double())
            << ")\n";
  std::cout << "ratio - 1 = " << to_fraction_string(excess) << " ("
            << sig6(to_double(excess)) << ")\n";
}

void cmd_bounds(const std::string& path) {
  SupportGraph g = load_graph(path);
  std::cout << "n = " << g.order() << ", |E| = " << g.edge_count() << "\n";
  std::cout << "chi = " << chromatic_number(g).colors << "\n";
  auto [chi_f, coloring] = fractional_chromatic(g);
  std::cout << "chi_f = " << to_fraction_string(chi_f) << "\n";
  RadicalBound fb = fracch_bound(g);
  std::cout << "sqrt(chi_f * n) = " << sig6(fb.value) << " (radicand "
            << to_fraction_string(fb.radicand) << ")\n";
  EdgeBound eb = edge_bound(g);
  std::cout << "sqrt(n + sqrt(2|E|n)) = " << sig6(eb.value) << "\n";
}

void cmd_search(int n, int sym_last, const std::string& threshold, int workers) {
  if (n != 5 || sym_last != 2)
    throw std::invalid_argument("search supports --n 5 --sym-last 2 only");
  DyadicRational thr(BigInt(25), 3);
  if (!threshold.empty()) {
    BigRational q = parse_fraction(threshold);
    BigInt den = denominator(q);
    unsigned k = 0;
    while (den > 1 && (den & 1) == 0) den >>= 1, ++k;
    if (den != 1) throw std::invalid_argument("threshold must be a dyadic rational");
    thr = DyadicRational(BigInt(numerator(q)), k);
  }
  SearchReport rep = hunt_n5(thr, resolve_workers(workers));
  for (const auto& rec : rep.confirmed) {
    json line;
    char hex[16];
    std::snprintf(hex, sizeof hex, "%08x", rec.table);
    line["table_hex"] = hex;
    line["n"] = 5;
    line["influence"] = rec.influence.str();
    line["witness"] = witness_json(rec.witness);
    std::cout << line.dump() << "\n";
  }
  std::cerr << "scanned " << rep.scanned << ", survivors " << rep.survivors << ", confirmed "
            << rep.confirmed.size() << "\n";
}

void cmd_table1() {
  for (const auto& entry : max_influence_per_support(4)) {
    std::cout << "edges [";
    bool first = true;
    for (auto [i, j] : entry.graph.edges()) {
      if (!first) std::cout << " ";
      std::cout << "(" << i << "," << j << ")";
      first = false;
    }
    std::cout << "] I = " << entry.maximum.influence.str() << " witness ";
    std::printf("%04x\n", entry.maximum.witness_table & 0xffff);
  }
}

void cmd_verify_small(int n) {
  SearchReport rep = verify_conjecture_small(n);
  std::cout << "scanned " << rep.scanned << " functions, threshold " << rep.threshold.str()
            << ", survivors " << rep.survivors << ", violators " << rep.confirmed.size() << "\n";
  for (const auto& rec : rep.confirmed)
    std::cout << "violator table " << detail::to_function(n, rec.table).to_hex()
              << " influence " << rec.influence.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact influence analysis and quadratic threshold function tools"};
  app.require_subcommand(1);

  std::string table_hex, support_path, graph_path, threshold;
  int n = 0, d = 2, sym_last = 2, workers = 1;
  bool as_json = false;

  auto* influence_cmd = app.add_subcommand("influence", "per-coordinate and total influence");
  influence_cmd->add_option("--table", table_hex, "truth table, lowercase hex")->required();
  influence_cmd->add_option("--n", n, "arity")->required();
  influence_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* fourier_cmd = app.add_subcommand("fourier", "nonzero Fourier coefficients");
  fourier_cmd->add_option("--table", table_hex)->required();
  fourier_cmd->add_option("--n", n)->required();

  auto* qtf_cmd = app.add_subcommand("qtf-check", "quadratic sign-representability");
  qtf_cmd->add_option("--table", table_hex)->required();
  qtf_cmd->add_option("--n", n)->required();
  qtf_cmd->add_option("--support", support_path, "graph file restricting quadratic terms");
  qtf_cmd->add_flag("--json", as_json);

  auto* igl_cmd = app.add_subcommand("igl", "conjectured maximal degree-d PTF influence");
  igl_cmd->add_option("--n", n)->required();
  igl_cmd->add_option("--d", d)->required();

  auto* family_cmd = app.add_subcommand("family", "the odd-n counterexample family");
  family_cmd->add_option("--n", n)->required();
  family_cmd->add_flag("--json", as_json);

  auto* bounds_cmd = app.add_subcommand("bounds", "graph-based influence bounds");
  bounds_cmd->add_option("--graph", graph_path, "graph file")->required();

  auto* search_cmd = app.add_subcommand("search", "screened counterexample hunt");
  search_cmd->add_option("--n", n)->required();
  search_cmd->add_option("--sym-last", sym_last, "coordinates tied symmetric at the end");
  search_cmd->add_option("--threshold", threshold, "influence screen, as a fraction");
  search_cmd->add_option("--workers", workers, "worker threads");

  auto* table1_cmd =
      app.add_subcommand("table1", "maximal QTF influence per 4-vertex support class");

  auto* verify_cmd = app.add_subcommand("verify-small", "exhaustive check for n <= 4");
  verify_cmd->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (influence_cmd->parsed()) cmd_influence(table_hex, n, as_json);
    else if (fourier_cmd->parsed()) cmd_fourier(table_hex, n);
    else if (qtf_cmd->parsed()) cmd_qtf_check(table_hex, n, support_path, as_json);
    else if (igl_cmd->parsed()) cmd_igl(n, d);
    else if (family_cmd->parsed()) cmd_family(n, as_json);
    else if (bounds_cmd->parsed()) cmd_bounds(graph_path);
    else if (search_cmd->parsed()) cmd_search(n, sym_last, threshold, workers);
    else if (table1_cmd->parsed()) cmd_table1();
    else if (verify_cmd->parsed()) cmd_verify_small(n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

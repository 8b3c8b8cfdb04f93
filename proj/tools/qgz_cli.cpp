// Command-line front end: spectra, zeta values, vacuum energy, spectral
// determinant and a built-in verification suite for equilateral quantum
// graphs.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "qgz/catalog.hpp"
#include "qgz/discrete_spectrum.hpp"
#include "qgz/errors.hpp"
#include "qgz/graph.hpp"
#include "qgz/oracle.hpp"
#include "qgz/quantum_zeta.hpp"

using json = nlohmann::json;
using cplx = std::complex<double>;

namespace {

struct Options {
  std::string graph_file;
  std::vector<std::string> family;
  double length = 1.0;
  std::vector<std::string> s_values;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Options& opt) {
  auto* gopt = cmd->add_option("--graph", opt.graph_file,
                               "edge-list file (two 0-based integers per "
                               "line, '#' comments)");
  auto* fopt =
      cmd->add_option("--family", opt.family,
                      "built-in family: 'complete-bipartite m p', 'star E' "
                      "or 'cycle n'")
          ->expected(2, 3);
  gopt->excludes(fopt);
  cmd->add_option("--length", opt.length, "edge length L")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

qgz::Graph build_graph(const Options& opt) {
  if (!opt.graph_file.empty()) {
    return qgz::Graph::load_edge_list(opt.graph_file);
  }
  if (opt.family.empty()) {
    throw qgz::Error("one of --graph or --family is required");
  }
  const std::string& name = opt.family[0];
  auto arg = [&](size_t i) {
    if (i >= opt.family.size())
      throw qgz::Error("--family " + name + ": missing argument");
    return std::stoi(opt.family[i]);
  };
  if (name == "complete-bipartite") {
    return qgz::Graph::complete_bipartite(arg(1), arg(2));
  }
  if (name == "star") {
    return qgz::Graph::star(arg(1));
  }
  if (name == "cycle") {
    return qgz::Graph::cycle(arg(1));
  }
  throw qgz::Error("unknown family '" + name + "'");
}

// "re" or "re+imi" / "re-imi" literals, e.g. "-0.5", "1+2i"
cplx parse_complex(const std::string& text) {
  if (text.empty()) throw qgz::Error("empty value for --s");
  if (text.back() != 'i') {
    return {std::stod(text), 0.0};
  }
  std::string body = text.substr(0, text.size() - 1);
  // split at the last +/- that is not an exponent sign or leading sign
  for (size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      double re = std::stod(body.substr(0, i));
      std::string im_text = body.substr(i);
      double im = (im_text == "+" || im_text == "-") ? std::stod(im_text + "1")
                                                     : std::stod(im_text);
      return {re, im};
    }
  }
  return {0.0, std::stod(body)};  // pure imaginary
}

const char* method_name(qgz::Method m) {
  switch (m) {
    case qgz::Method::hurwitz: return "hurwitz";
    case qgz::Method::series: return "series";
    case qgz::Method::closed_form: return "closed_form";
    case qgz::Method::direct_sum: return "direct_sum";
    case qgz::Method::bernoulli: return "bernoulli";
  }
  return "?";
}

json graph_header(const qgz::Graph& g) {
  return {{"V", g.vertex_count()},
          {"E", g.edge_count()},
          {"beta", g.betti_number()},
          {"bipartite", g.is_bipartite()}};
}

void emit(const Options& opt, const qgz::Graph& g, json results,
          const std::vector<std::string>& csv_header,
          const std::vector<std::vector<std::string>>& csv_rows) {
  if (opt.format == "json") {
    json out = {{"graph", graph_header(g)},
                {"L", opt.length},
                {"results", std::move(results)}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < csv_header.size(); ++i) {
      std::cout << (i ? "," : "") << csv_header[i];
    }
    std::cout << "\n";
    for (const auto& row : csv_rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        std::cout << (i ? "," : "") << row[i];
      }
      std::cout << "\n";
    }
  }
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run_spectrum(const Options& opt) {
  qgz::Graph g = build_graph(opt);
  qgz::DiscreteSpectrum spec = qgz::eigenvalues(g);
  qgz::TransferredSpectrum ts = qgz::spectrum_transfer(g, spec, opt.length);
  json r = {{"eigenvalues", spec.eigenvalues},
            {"k_values", ts.k_values},
            {"phases", ts.phases},
            {"kernel_dim_0", spec.kernel_dim_0},
            {"kernel_dim_2", spec.kernel_dim_2},
            {"betti", ts.betti},
            {"mult_even", ts.mult_even},
            {"mult_odd", ts.mult_odd}};
  std::vector<std::vector<std::string>> rows;
  for (size_t j = 0; j < spec.eigenvalues.size(); ++j) {
    rows.push_back({num(spec.eigenvalues[j]), num(ts.k_values[j]),
                    num(ts.phases[j])});
  }
  emit(opt, g, json::array({r}), {"lambda", "k", "phase"}, rows);
  return 0;
}

int run_zeta(const Options& opt) {
  if (opt.s_values.empty()) {
    throw qgz::Error("zeta requires at least one --s value");
  }
  qgz::Graph g = build_graph(opt);
  qgz::TransferredSpectrum ts = qgz::transfer(g, opt.length);
  json results = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const std::string& text : opt.s_values) {
    cplx s = parse_complex(text);
    std::vector<qgz::ZetaValue> vals;
    vals.push_back(qgz::quantum_zeta(ts, s));
    if (s.real() < 0.0) {
      vals.push_back(qgz::quantum_zeta_series(ts, s, 1e-8));
    }
    for (const auto& zv : vals) {
      results.push_back({{"s_re", s.real()},
                         {"s_im", s.imag()},
                         {"re", zv.value.real()},
                         {"im", zv.value.imag()},
                         {"method", method_name(zv.method)},
                         {"abs_error", zv.abs_error_estimate}});
      rows.push_back({num(s.real()), num(s.imag()), num(zv.value.real()),
                      num(zv.value.imag()), method_name(zv.method),
                      num(zv.abs_error_estimate)});
    }
  }
  emit(opt, g, std::move(results),
       {"s_re", "s_im", "re", "im", "method", "abs_error"}, rows);
  return 0;
}

int run_energy(const Options& opt) {
  qgz::Graph g = build_graph(opt);
  qgz::TransferredSpectrum ts = qgz::transfer(g, opt.length);
  double ec = qgz::vacuum_energy(ts);
  double force = qgz::casimir_force(ts);
  json r = {{"vacuum_energy", ec}, {"casimir_force", force}};
  emit(opt, g, json::array({r}), {"vacuum_energy", "casimir_force"},
       {{num(ec), num(force)}});
  return 0;
}

int run_determinant(const Options& opt) {
  qgz::Graph g = build_graph(opt);
  qgz::TransferredSpectrum ts = qgz::transfer(g, opt.length);
  double logdet = qgz::log_spectral_determinant(ts);
  double det = std::exp(logdet);
  json r = {{"determinant", det}, {"log_determinant", logdet}};
  emit(opt, g, json::array({r}), {"determinant", "log_determinant"},
       {{num(det), num(logdet)}});
  return 0;
}

struct VerifyCounter {
  int passed = 0;
  int failed = 0;
  void check(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      std::cerr << "verify: FAILED: " << what << "\n";
    }
  }
};

int run_verify(const Options&) {
  VerifyCounter c;

  std::vector<qgz::Graph> graphs;
  for (int n = 2; n <= 5; ++n) {
    for (auto& g : qgz::all_connected_graphs(n)) graphs.push_back(std::move(g));
  }
  std::mt19937 rng(20240817);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> nv(6, 8);
    graphs.push_back(qgz::random_connected_graph(rng, nv(rng)));
  }

  for (const qgz::Graph& g : graphs) {
    qgz::DiscreteSpectrum spec = qgz::eigenvalues(g);
    auto lemma = qgz::dirichlet_multiplicities(g, spec);
    auto rank = qgz::oracle::multiplicity_by_rank(g);
    c.check(lemma == rank, "multiplicity agreement");

    double trace = 0.0;
    for (double lam : spec.eigenvalues) trace += lam;
    c.check(std::abs(trace - g.vertex_count()) < 1e-10 * g.vertex_count(),
            "trace identity");
    c.check((spec.kernel_dim_2 == 1) == g.is_bipartite(),
            "bipartite eigenvalue-2 criterion");

    qgz::TransferredSpectrum ts = qgz::spectrum_transfer(g, spec, 1.0);
    bool roundtrip = true;
    for (size_t j = 0; j < ts.k_values.size(); ++j) {
      if (std::abs(1.0 - std::cos(ts.k_values[j]) - spec.eigenvalues[j]) >
          1e-9) {
        roundtrip = false;
      }
    }
    c.check(roundtrip, "spectrum transfer roundtrip");
  }

  // continuation / series consistency on the named families
  std::vector<qgz::Graph> named;
  named.push_back(qgz::Graph::complete_bipartite(2, 3));
  named.push_back(qgz::Graph::star(5));
  named.push_back(qgz::Graph::cycle(3));
  named.push_back(qgz::Graph::cycle(4));
  for (const qgz::Graph& g : named) {
    qgz::TransferredSpectrum ts = qgz::transfer(g, 1.0);
    for (double s : {1.0, 2.0}) {
      auto a = qgz::quantum_zeta(ts, s);
      auto b = qgz::oracle::direct_zeta_sum(ts, s, 1e-10);
      c.check(std::abs(a.value - b.value) < 1e-8, "hurwitz vs direct sum");
    }
    for (double s : {-0.5, -1.0}) {
      auto a = qgz::quantum_zeta(ts, s);
      auto b = qgz::quantum_zeta_series(ts, s, 1e-8);
      c.check(std::abs(a.value - b.value) < 1e-6, "hurwitz vs series");
    }
  }

  // scaling laws on K_{2,3}
  {
    qgz::Graph g = qgz::Graph::complete_bipartite(2, 3);
    qgz::TransferredSpectrum unit = qgz::transfer(g, 1.0);
    for (double L : {0.5, 2.0, 3.0}) {
      qgz::TransferredSpectrum ts = qgz::transfer(g, L);
      cplx s = -1.0;
      auto a = qgz::quantum_zeta(ts, s);
      auto b = qgz::quantum_zeta(unit, s);
      c.check(std::abs(a.value - std::pow(L, 2.0 * s.real()) * b.value) < 1e-9,
              "zeta scaling");
      c.check(std::abs(qgz::vacuum_energy(ts) - qgz::vacuum_energy(unit) / L) <
                  1e-9,
              "vacuum energy scaling");
      double beta = g.betti_number();
      c.check(std::abs(qgz::spectral_determinant(ts) -
                       qgz::spectral_determinant(unit) *
                           std::pow(L, beta + 1.0)) <
                  1e-9 * qgz::spectral_determinant(ts),
              "determinant scaling");
    }
  }

  std::cout << "verify: " << c.passed << " passed, " << c.failed << " failed\n";
  return c.failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral zeta functions of equilateral quantum graphs"};
  app.require_subcommand(1);

  Options opt;
  auto* spectrum = app.add_subcommand(
      "spectrum", "discrete eigenvalues, transferred k-set and multiplicities");
  add_common(spectrum, opt);
  auto* zeta =
      app.add_subcommand("zeta", "quantum spectral zeta at given s values");
  add_common(zeta, opt);
  zeta->add_option("--s", opt.s_values,
                   "s value, 're' or 're+imi' (repeatable)")
      ->required();
  auto* energy =
      app.add_subcommand("energy", "vacuum energy and Casimir force");
  add_common(energy, opt);
  auto* det = app.add_subcommand("determinant", "spectral determinant");
  add_common(det, opt);
  auto* verify =
      app.add_subcommand("verify", "run the built-in verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return run_spectrum(opt);
    if (zeta->parsed()) return run_zeta(opt);
    if (energy->parsed()) return run_energy(opt);
    if (det->parsed()) return run_determinant(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const qgz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "fecc/errors.hpp"
#include "fecc/export.hpp"
#include "fecc/fixtures.hpp"
#include "fecc/tensor_verify.hpp"
#include "fecc/verify.hpp"

namespace fecc::cli {

namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidParameter("not an integer: '" + text + "'");
  return v;
}

std::pair<int, int> single_point(const RunConfig& cfg) {
  const auto grid = parse_grid(cfg.m, cfg.n);
  if (grid.size() != 1) throw InvalidParameter(cfg.command + " takes a single (m, n)");
  return grid.front();
}

std::string extension(const std::string& format) {
  if (format == "text") return "txt";
  return format;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

void emit_artifact(const RunConfig& cfg, const std::string& body, std::ostream& out, std::ostream& err) {
  const std::string path = output_path(cfg);
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot write '" + path + "'");
  file << body;
  err << "wrote " << path << '\n';
}

std::vector<Polynomial> commutation_probes(int n, int degree, unsigned long seed) {
  std::vector<Polynomial> probes = monomial_probes(degree);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (int t = 0; t < 8; ++t) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 4));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    probes.emplace_back(std::move(c));
  }
  return probes;
}

Element1D apply_fixture(const Element1D& e, const std::string& fixture) {
  if (fixture == "swapped-basis") return fixtures::swapped_basis_rows(e);
  if (fixture == "wrong-functional-order") return fixtures::wrong_functional_order(e);
  if (fixture == "permuted-alpha") return fixtures::permuted_alpha1_rows(e);
  return e;
}

struct PointResult {
  std::vector<VerificationReport> reports;
  std::vector<double> seconds;
};

PointResult verify_point(const RunConfig& cfg, int m, int n) {
  const Element1D e = apply_fixture(build_element(m, n), cfg.fixture);
  const ThetaSign sign = cfg.fixture == "flipped-theta" ? ThetaSign::flipped : ThetaSign::standard;
  const auto dims = parse_int_list(cfg.N);
  PointResult out;

  auto timed = [&](auto&& check) {
    const auto start = std::chrono::steady_clock::now();
    out.reports.push_back(check());
    out.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  };

  for (const auto& check : cfg.checks) {
    if (check == "unisolvence") {
      timed([&] { return verify_unisolvence(e); });
    } else if (check == "lemma-hypotheses") {
      timed([&] { return verify_lemma_hypotheses(e, cfg.probe_degree > 0 ? cfg.probe_degree : n + 5); });
    } else if (check == "commutation") {
      const int degree = cfg.probe_degree > 0 ? cfg.probe_degree : n + 5;
      timed([&] { return verify_commutation(e, commutation_probes(n, degree, cfg.seed * 1000003ul + m * 101ul + n)); });
    } else if (check == "projection") {
      timed([&] { return verify_projection(e); });
    } else if (check == "continuity-demo") {
      const auto u = SmoothFunction1D::named(cfg.input.empty() ? "exp" : cfg.input);
      timed([&] { return two_cell_continuity_demo(e, u); });
    } else {
      for (int N : dims) {
        if (check == "dd-zero") {
          timed([&] { return verify_dd_zero(N, e, sign); });
        } else if (check == "dimensions") {
          timed([&] { return verify_tensor_dimensions(N, e); });
        } else if (check == "tensor-commutation") {
          const int degree = cfg.probe_degree > 0 ? cfg.probe_degree : n + 3;
          for (int nu = 0; nu <= N; ++nu) {
            if (cfg.nu && *cfg.nu != nu) continue;
            timed([&] { return verify_tensor_commutation(N, nu, tensor_monomial_probes(N, nu, degree), e, sign); });
          }
        }
      }
    }
  }
  return out;
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["m"] = cfg.m;
  c["n"] = cfg.n;
  c["N"] = cfg.N;
  if (cfg.nu) c["nu"] = *cfg.nu;
  c["checks"] = cfg.checks;
  c["fixture"] = cfg.fixture.empty() ? Json(nullptr) : Json(cfg.fixture);
  c["probe_degree"] = cfg.probe_degree;
  c["quadrature_order"] = cfg.quadrature_order;
  c["seed"] = cfg.seed;
  return c;
}

std::string verify_body(const RunConfig& cfg, const SuiteResult& suite) {
  if (cfg.format == "json") {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "verify";
    out["config"] = config_json(cfg);
    out["pass"] = suite.pass();
    Json reports = Json::array();
    for (std::size_t i = 0; i < suite.reports.size(); ++i) {
      Json r = report_to_json(suite.reports[i]);
      if (cfg.timing) r["seconds"] = suite.seconds[i];
      reports.push_back(r);
    }
    out["reports"] = reports;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "property,parameters,pass,failures" << (cfg.timing ? ",seconds" : "") << '\n';
    for (std::size_t i = 0; i < suite.reports.size(); ++i) {
      const auto& r = suite.reports[i];
      os << r.property << ',';
      for (std::size_t p = 0; p < r.parameters.size(); ++p)
        os << (p ? ";" : "") << r.parameters[p].first << '=' << r.parameters[p].second;
      os << ',' << (r.pass ? "true" : "false") << ',' << r.failures;
      if (cfg.timing) os << ',' << format_real(suite.seconds[i]);
      os << '\n';
    }
    return os.str();
  }
  for (std::size_t i = 0; i < suite.reports.size(); ++i) {
    os << report_to_text(suite.reports[i]);
    if (cfg.timing) os << "  time " << format_real(suite.seconds[i]) << " s\n";
  }
  os << (suite.pass() ? "all checks passed\n" : "some checks failed\n");
  return os.str();
}

std::string element_csv(const Element1D& e, const std::string& emit) {
  std::ostringstream os;
  if (emit == "matrix") {
    os << "form,row,col,value\n";
    for (FormDegree k : {FormDegree::zero, FormDegree::one}) {
      const auto& M = e.node_matrix(k);
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) os << to_int(k) << ',' << i + 1 << ',' << j + 1 << ',' << M(i, j) << '\n';
    }
  } else if (emit == "basis") {
    os << "form,index,power,coefficient\n";
    for (FormDegree k : {FormDegree::zero, FormDegree::one}) {
      const auto& bs = e.basis(k);
      for (std::size_t j = 0; j < bs.size(); ++j)
        for (int p = 0; p <= bs[j].degree(); ++p)
          os << to_int(k) << ',' << j + 1 << ',' << p << ',' << bs[j].coefficient(p) << '\n';
    }
  } else if (emit == "functionals") {
    os << "form,index,kind,descriptor\n";
    for (FormDegree k : {FormDegree::zero, FormDegree::one}) {
      const auto& fs = e.functionals(k);
      for (std::size_t i = 0; i < fs.size(); ++i)
        os << to_int(k) << ',' << i + 1 << ',' << tag(fs[i]) << ",\"" << describe(fs[i], k == FormDegree::zero ? "u" : "v")
           << "\"\n";
    }
  } else {
    throw InvalidParameter("csv output supports --emit matrix, basis, functionals or basis-samples");
  }
  return os.str();
}

int cmd_element(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [m, n] = single_point(cfg);
  const Element1D e = build_element(m, n);
  std::string body;
  if (cfg.emit == "basis-samples")
    body = basis_samples_csv(e, cfg.samples);
  else if (cfg.format == "json")
    body = element_to_json(e, cfg.emit).dump(2) + "\n";
  else if (cfg.format == "csv")
    body = element_csv(e, cfg.emit);
  else
    body = element_to_text(e, cfg.emit);
  emit_artifact(cfg, body, out, err);
  return 0;
}

int cmd_tensor(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [m, n] = single_point(cfg);
  const auto dims = parse_int_list(cfg.N);
  if (dims.size() != 1) throw InvalidParameter("tensor takes a single N");
  const int N = dims.front();
  const Element1D e = build_element(m, n);
  std::string body;
  if (cfg.emit == "samples") {
    CharacteristicVector chi;
    for (char c : cfg.chi) {
      if (c != '0' && c != '1') throw InvalidParameter("--chi takes a 0/1 string");
      chi.bits.push_back(c - '0');
    }
    const auto index = parse_int_list(cfg.index);
    const auto shape = block_shape(chi, e);
    if (index.size() != chi.size()) throw InvalidParameter("--index needs one entry per factor");
    std::vector<std::size_t> j;
    for (std::size_t a = 0; a < index.size(); ++a) {
      if (index[a] < 1 || static_cast<std::size_t>(index[a]) > shape[a]) throw InvalidParameter("--index out of range");
      j.push_back(static_cast<std::size_t>(index[a] - 1));
    }
    body = tensor_basis_samples_csv(e, chi, j, cfg.samples);
  } else if (cfg.format == "json") {
    body = tensor_table_to_json(N, e, cfg.with_matrices).dump(2) + "\n";
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (int nu = 0; nu <= N; ++nu) {
      os << "nu=" << nu << " dimension=" << space_dimension(N, nu, e) << '\n';
      for (const auto& f : tensor_functionals(N, nu, e)) {
        os << "  N^{" << f.chi.to_string() << "}_{";
        for (std::size_t a = 0; a < f.indices.size(); ++a) os << (a ? "," : "") << f.indices[a];
        os << "} = " << describe(f) << '\n';
      }
    }
    body = os.str();
  } else {
    throw InvalidParameter("tensor supports --format json or text, or --emit samples");
  }
  emit_artifact(cfg, body, out, err);
  return 0;
}

int cmd_interp(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [m, n] = single_point(cfg);
  const Element1D e = build_element(m, n);
  const SmoothFunction1D u = SmoothFunction1D::named(cfg.input);
  const int q = cfg.quadrature_order > 0 ? cfg.quadrature_order : default_quadrature_order(e);
  if (!cfg.two_cell) {
    emit_artifact(cfg, interpolation_samples_csv(e, u, q, cfg.samples), out, err);
    return 0;
  }
  emit_artifact(cfg, two_cell_samples_csv(e, u, q, cfg.samples), out, err);
  const VerificationReport report = two_cell_continuity_demo(e, u);
  err << report_to_text(report);
  return report.pass ? 0 : 1;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (hi < lo) throw InvalidParameter("reversed range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw InvalidParameter("empty list");
  return out;
}

std::vector<std::pair<int, int>> parse_grid(const std::string& m_spec, const std::string& n_spec) {
  std::vector<std::pair<int, int>> grid;
  for (int m : parse_int_list(m_spec)) {
    if (m < 0) throw InvalidParameter("m must be >= 0");
    if (n_spec.rfind("auto", 0) == 0) {
      int extra = 0;
      if (n_spec.size() > 4) {
        if (n_spec[4] != '+') throw InvalidParameter("expected auto or auto+K, got '" + n_spec + "'");
        extra = parse_int(n_spec.substr(5));
        if (extra < 0) throw InvalidParameter("auto+K needs K >= 0");
      }
      for (int n = 2 * m + 1; n <= 2 * m + 1 + extra; ++n) grid.emplace_back(m, n);
      continue;
    }
    for (int n : parse_int_list(n_spec)) {
      if (n < 2 * m + 1)
        throw InvalidParameter("n = " + std::to_string(n) + " is below 2m+1 = " + std::to_string(2 * m + 1) +
                               ": degree too low to host C^m Hermite block");
      grid.emplace_back(m, n);
    }
  }
  return grid;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> all{"unisolvence", "lemma-hypotheses", "commutation", "projection",
                                            "dd-zero",     "tensor-commutation", "dimensions", "continuity-demo"};
  return all;
}

void validate(const RunConfig& cfg) {
  static const std::vector<std::string> commands{"element", "verify", "tensor", "interp"};
  if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
    throw InvalidParameter("unknown command '" + cfg.command + "'");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw InvalidParameter("--format must be json, csv or text");
  if (cfg.samples < 2) throw InvalidParameter("--samples must be >= 2");
  if (cfg.quadrature_order < 0 || cfg.probe_degree < 0) throw InvalidParameter("orders must be non-negative");
  const auto grid = parse_grid(cfg.m, cfg.n);
  for (int N : parse_int_list(cfg.N))
    if (N < 1) throw InvalidParameter("N must be >= 1");
  if (cfg.nu && *cfg.nu < 0) throw InvalidParameter("nu must be >= 0");

  if (cfg.command == "verify") {
    if (cfg.checks.empty()) throw InvalidParameter("verify needs at least one check");
    for (const auto& c : cfg.checks)
      if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
        throw InvalidParameter("unknown check '" + c + "'");
    if (!cfg.fixture.empty()) {
      const auto& names = fixtures::names();
      if (std::find(names.begin(), names.end(), cfg.fixture) == names.end())
        throw InvalidParameter("unknown fixture '" + cfg.fixture + "'");
      for (const auto& [m, n] : grid) {
        if (cfg.fixture == "wrong-functional-order" && m < 1)
          throw InvalidParameter("fixture wrong-functional-order needs m >= 1");
      }
    }
    for (const auto& [m, n] : grid)
      if (cfg.probe_degree > 0 && cfg.probe_degree < n &&
          std::find(cfg.checks.begin(), cfg.checks.end(), "lemma-hypotheses") != cfg.checks.end())
        throw InvalidParameter("--probe-degree must be >= n for lemma-hypotheses");
  }
  if (cfg.command == "tensor" && cfg.emit != "all" && cfg.emit != "table" && cfg.emit != "samples")
    throw InvalidParameter("tensor --emit must be table or samples");
  if (cfg.command == "interp" && cfg.input.empty()) throw InvalidParameter("interp needs --input");
}

SuiteResult run_verify(const RunConfig& cfg) {
  validate(cfg);
  const auto grid = parse_grid(cfg.m, cfg.n);
  // Grid points are independent; results are collected in grid order.
  std::vector<std::future<PointResult>> jobs;
  for (const auto& [m, n] : grid)
    jobs.push_back(std::async(std::launch::async, [&cfg, m = m, n = n] { return verify_point(cfg, m, n); }));
  SuiteResult suite;
  for (auto& job : jobs) {
    PointResult r = job.get();
    suite.reports.insert(suite.reports.end(), r.reports.begin(), r.reports.end());
    suite.seconds.insert(suite.seconds.end(), r.seconds.begin(), r.seconds.end());
  }
  return suite;
}

std::string output_path(const RunConfig& cfg) {
  if (!cfg.output.empty()) return cfg.output == "-" ? "" : cfg.output;
  const char* dir = std::getenv("FECC_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return "";
  std::string name;
  const std::string mn = "_m" + sanitize(cfg.m) + "_n" + sanitize(cfg.n);
  if (cfg.command == "element") {
    name = "element" + mn + "_" + cfg.emit + "." + (cfg.emit == "basis-samples" ? "csv" : extension(cfg.format));
  } else if (cfg.command == "verify") {
    name = "verify_report." + extension(cfg.format);
  } else if (cfg.command == "tensor") {
    name = "tensor_N" + sanitize(cfg.N) + mn + "." + (cfg.emit == "samples" ? "csv" : extension(cfg.format));
  } else {
    name = "interp_" + sanitize(cfg.input) + mn + (cfg.two_cell ? "_two_cell" : "") + ".csv";
  }
  return std::string(dir) + "/" + name;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (cfg.command == "element") return cmd_element(cfg, out, err);
    if (cfg.command == "tensor") return cmd_tensor(cfg, out, err);
    if (cfg.command == "interp") return cmd_interp(cfg, out, err);
    const SuiteResult suite = run_verify(cfg);
    emit_artifact(cfg, verify_body(cfg, suite), out, err);
    return suite.exit_status();
  } catch (const MissingDerivative& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const InvalidParameter& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace fecc::cli

#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using fecc::cli::RunConfig;
  CLI::App app{"C^m finite element cochain complexes over exact rationals"};
  app.require_subcommand(1);
  RunConfig cfg;
  int nu = -1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "continuity order: 2, 0..3 or 1,3")->capture_default_str();
    sub->add_option("--n", cfg.n, "degree: 5, 3..7, auto or auto+K (n = 2m+1 .. 2m+1+K)")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or text")->capture_default_str();
    sub->add_option("--output", cfg.output, "output file ('-' for stdout; default $FECC_OUTPUT_DIR or stdout)");
    sub->add_option("--quadrature-order", cfg.quadrature_order, "Gauss points for smooth inputs (0: 2(n+2))");
  };

  auto* element = app.add_subcommand("element", "emit the 1D element tables");
  common(element);
  element->add_option("--emit", cfg.emit, "matrix, basis, functionals, basis-samples or all")->capture_default_str();
  element->add_option("--samples", cfg.samples, "grid points for basis-samples")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification checks over a parameter grid");
  common(verify);
  verify->add_option("--N", cfg.N, "tensor dimensions for tensor checks")->capture_default_str();
  verify->add_option("--nu", nu, "restrict tensor-commutation to one form degree");
  verify->add_option("--checks", cfg.checks, "comma-separated checks")->delimiter(',')->required();
  verify->add_option("--fixture", cfg.fixture, "corruption fixture for negative controls");
  verify->add_option("--probe-degree", cfg.probe_degree, "max probe degree (0: n+5, tensors n+3)");
  verify->add_option("--seed", cfg.seed, "seed for randomized probes")->capture_default_str();
  verify->add_option("--input", cfg.input, "function for continuity-demo (default exp)");
  verify->add_flag("--timing", cfg.timing, "include per-check wall time in the report");

  auto* tensor = app.add_subcommand("tensor", "emit the N-dimensional tensor tables");
  common(tensor);
  tensor->add_option("--N", cfg.N, "tensor dimension")->capture_default_str();
  tensor->add_option("--emit", cfg.emit, "table or samples (2D basis function on a grid)")->capture_default_str();
  tensor->add_option("--chi", cfg.chi, "characteristic vector for samples, e.g. 01")->capture_default_str();
  tensor->add_option("--index", cfg.index, "1-based basis multi-index for samples, e.g. 2,3")->capture_default_str();
  tensor->add_option("--samples", cfg.samples, "grid points per axis")->capture_default_str();
  tensor->add_flag("--with-matrices", cfg.with_matrices, "include Kronecker node matrices");

  auto* interp = app.add_subcommand("interp", "sample interpolants of a smooth input");
  common(interp);
  interp->add_option("--input", cfg.input, "sin, cos, exp or a polynomial in x")->required();
  interp->add_option("--samples", cfg.samples, "grid points")->capture_default_str();
  interp->add_flag("--two-cell", cfg.two_cell, "interpolate on [0,1] and [1,2] and check C^m continuity");

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  if (nu >= 0) cfg.nu = nu;
  if (cfg.command == "tensor" && cfg.emit == "all") cfg.emit = "table";
  return fecc::cli::run(cfg, std::cout, std::cerr);
}

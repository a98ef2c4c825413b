#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "discop/discop.hpp"

namespace discop::cli {

namespace {

/// Unknown names on the command line are usage errors, not domain errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobConfig {
  std::string op = "sampling-bspline";
  std::string kernel;
  int order = 3;
  int n = 0;
  std::string strategy;
  double tol = 0.0;
  int grid = 400;
  double factor = 0.0;
  bool closed = false;
  std::string in;
  std::string out;
  std::string svg;
  std::string curve;
};

SamplingKernel kernel_from_name(std::string name, int order) {
  if (name == "fejer") return fejer_kernel();
  if (name.rfind("bspline", 0) == 0) {
    const std::string digits = name.substr(7);
    int m = order;
    if (!digits.empty()) {
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw UsageError("unknown kernel '" + name + "'");
      m = std::stoi(digits);
    }
    if (m < 1) throw UsageError("B-spline order must be >= 1");
    return bspline_kernel(m);
  }
  throw UsageError("unknown kernel '" + name + "' (expected fejer or bspline<m>)");
}

OperatorFamily family_from_config(const JobConfig& cfg) {
  const std::string& op = cfg.op;
  if (op == "szasz") return make_szasz_mirakjan();
  if (op == "baskakov") return make_baskakov();
  if (op == "bernstein") return make_bernstein();
  if (op == "sampling") return make_generalized_sampling(kernel_from_name(cfg.kernel.empty() ? "bspline" : cfg.kernel, cfg.order), cfg.tol);
  if (op.rfind("sampling-", 0) == 0) return make_generalized_sampling(kernel_from_name(op.substr(9), cfg.order), cfg.tol);
  throw UsageError("unknown operator '" + op + "' (expected sampling-fejer, sampling-bspline, szasz, baskakov, bernstein)");
}

ExtensionStrategy strategy_from_config(const JobConfig& cfg, const OperatorFamily& family, bool closed) {
  if (cfg.strategy.empty()) return default_strategy(family, closed);
  try {
    return parse_strategy(cfg.strategy);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

EvalOptions eval_options(const JobConfig& cfg) {
  EvalOptions options;
  if (cfg.tol > 0.0) options.tolerance = cfg.tol;
  return options;
}

void add_job_options(CLI::App& cmd, JobConfig& cfg) {
  cmd.add_option("--operator", cfg.op, "sampling-fejer | sampling-bspline | szasz | baskakov | bernstein");
  cmd.add_option("--kernel", cfg.kernel, "kernel for --operator sampling: fejer | bspline<m>");
  cmd.add_option("--order", cfg.order, "B-spline order")->check(CLI::PositiveNumber);
  cmd.add_option("--strategy", cfg.strategy, "constant-pad | translate-pad | periodic | affine-remap");
  cmd.add_option("--tol", cfg.tol, "truncation tolerance")->check(CLI::PositiveNumber);
}

std::vector<std::pair<double, double>> planar(const std::vector<Point>& pts) {
  std::vector<std::pair<double, double>> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p[0], p.size() > 1 ? p[1] : 0.0);
  return out;
}

void write_output(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

std::string curve_csv(const Curve& c, int grid) {
  std::ostringstream s;
  write_csv(s, c, grid);
  return s.str();
}

int cmd_validate(const JobConfig& cfg, int grid_points, std::ostream& out) {
  const SamplingKernel kernel = kernel_from_name(cfg.kernel, cfg.order);
  const double tol = cfg.tol > 0.0 ? cfg.tol : (kernel.compact() ? 1e-10 : 1e-6);
  const auto grid = standard_probe_grid(grid_points);
  const KernelValidationOptions options;
  const KernelValidationReport r = validate_kernel(kernel, grid, tol, options);
  const bool ok = r.passes(tol, options.continuity_tolerance);
  out << std::setprecision(6) << "kernel " << kernel.name() << '\n'
      << "tolerance " << tol << '\n'
      << "max_partition_defect " << r.max_partition_defect << '\n'
      << "abs_sum_sup " << r.abs_sum_sup << '\n'
      << "max_adjacent_jump " << r.max_adjacent_jump << '\n'
      << "support_consistent " << (r.support_consistent ? "yes" : "no") << '\n';
  for (const auto& [probe, mass] : r.tail_mass)
    out << "tail_mass delta=" << probe.first << " n=" << probe.second << ' ' << mass << '\n';
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitDomain;
}

int cmd_approx(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Curve> gamma;
  if (!cfg.in.empty()) {
    const auto points = parse_points_csv(read_file(cfg.in));
    gamma = polyline_curve(points, cfg.closed);
  } else {
    gamma = specimens::by_name(cfg.curve.empty() ? "spiral" : cfg.curve);
  }
  const OperatorFamily family = family_from_config(cfg);
  const ExtensionStrategy strategy = strategy_from_config(cfg, family, gamma->closed());
  const int n = cfg.n > 0 ? cfg.n : 50;
  const Curve approx = apply_operator(family, *gamma, n, strategy, eval_options(cfg));
  const double err_sup = sup_error(*gamma, approx, cfg.grid);

  write_output(cfg.out, curve_csv(approx, cfg.grid), out);
  std::ostream& report = cfg.out.empty() ? err : out;
  report << std::setprecision(10) << "operator " << family.name() << " n " << n << " strategy " << to_string(strategy)
         << "\nsup_error " << err_sup << '\n';

  if (!cfg.svg.empty()) {
    SvgPlot plot;
    plot.add_polyline("original", planar(sample(*gamma, cfg.grid)), "#1f4eb4");
    plot.add_polyline("approximant", planar(sample(approx, cfg.grid)), "#d62728");
    write_file_atomic(cfg.svg, plot.str());
  }
  return kExitOk;
}

int cmd_trace(const JobConfig& cfg, std::ostream& out) {
  const TraceResult r = trace(read_pbm_file(cfg.in));
  out << r.chain.to_json() << '\n';
  if (!cfg.out.empty()) {
    std::ostringstream csv;
    csv << "u,v\n";
    for (std::size_t i = 0; i < r.sequences.size(); ++i) csv << r.sequences.u[i] << ',' << r.sequences.v[i] << '\n';
    write_file_atomic(cfg.out, csv.str());
  }
  return kExitOk;
}

int cmd_upscale(const JobConfig& cfg, std::ostream& out) {
  const BinaryImage input = read_pbm_file(cfg.in);
  const TraceResult traced = trace(input);
  const OperatorFamily family = family_from_config(cfg);
  const ExtensionStrategy strategy = strategy_from_config(cfg, family, traced.chain.closed);
  const int n = cfg.n > 0 ? cfg.n : 4 * static_cast<int>(traced.sequences.size());
  UpscaleOptions options;
  options.eval = eval_options(cfg);
  const BinaryImage result = upscale(input, cfg.factor, family, n, strategy, options);
  write_pbm_file(cfg.out, result);
  out << "input " << input.rows() << 'x' << input.cols() << " points " << traced.sequences.size()
      << (traced.chain.closed ? " closed" : " open") << "\noperator " << family.name() << " n " << n << " strategy "
      << to_string(strategy) << "\noutput " << result.rows() << 'x' << result.cols() << " pixels " << result.count()
      << '\n';
  if (cfg.factor == 1.0) out << "hausdorff " << hausdorff_distance(input, result) << '\n';
  return kExitOk;
}

int cmd_smooth(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto points = parse_points_csv(read_file(cfg.in));
  const OperatorFamily family = family_from_config(cfg);
  const ExtensionStrategy strategy = strategy_from_config(cfg, family, cfg.closed);
  const int n = cfg.n > 0 ? cfg.n : 50;
  const Curve polyline = polyline_curve(points, cfg.closed);
  const Curve smooth = apply_operator(family, polyline, n, strategy, eval_options(cfg));
  write_output(cfg.out, curve_csv(smooth, cfg.grid), out);
  std::ostream& report = cfg.out.empty() ? err : out;
  report << std::setprecision(10) << "operator " << family.name() << " n " << n << " strategy " << to_string(strategy)
         << "\npoints " << points.size() << (smooth.closed() ? " closed" : " open")
         << "\nsup_distance_to_polyline " << sup_error(polyline, smooth, cfg.grid) << '\n';
  if (!cfg.svg.empty()) {
    SvgPlot plot;
    plot.add_polyline("original", planar(sample(polyline, cfg.grid)), "#9e9e9e", 1.0);
    plot.add_points("points", std::vector<std::pair<double, double>>(points.begin(), points.end()), "#1f4eb4");
    plot.add_polyline("approximant", planar(sample(smooth, cfg.grid)), "#d62728");
    write_file_atomic(cfg.svg, plot.str());
  }
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"discop: discrete approximation operators for curves and image curves"};
  app.require_subcommand(1);
  JobConfig cfg;
  int validate_points = 11;

  auto* validate = app.add_subcommand("validate", "check the kernel axioms numerically");
  validate->add_option("--kernel", cfg.kernel, "fejer | bspline<m>")->required();
  validate->add_option("--order", cfg.order, "B-spline order when --kernel bspline")->check(CLI::PositiveNumber);
  validate->add_option("--tol", cfg.tol, "tolerance")->check(CLI::PositiveNumber);
  validate->add_option("--grid", validate_points, "number of probes on [0, 1]")->check(CLI::Range(2, 100000));

  auto* approx = app.add_subcommand("approx", "approximate a specimen curve or a CSV polyline");
  add_job_options(*approx, cfg);
  approx->add_option("--curve", cfg.curve, "spiral | helix | closed | constant");
  approx->add_option("--in", cfg.in, "CSV points (x,y) forming a polyline");
  approx->add_flag("--closed", cfg.closed, "treat the CSV polyline as closed");
  approx->add_option("--n", cfg.n, "operator index n (default 50)")->check(CLI::PositiveNumber);
  approx->add_option("--grid", cfg.grid, "sample count")->check(CLI::Range(2, 10000000));
  approx->add_option("--out", cfg.out, "CSV output (default stdout)");
  approx->add_option("--svg", cfg.svg, "SVG plot output");

  auto* trace_cmd = app.add_subcommand("trace", "extract the chain code of a PBM image curve");
  trace_cmd->add_option("--in", cfg.in, "PBM input")->required();
  trace_cmd->add_option("--out", cfg.out, "CSV output for the coordinate sequences");

  auto* upscale_cmd = app.add_subcommand("upscale", "reconstruct an image curve at a higher resolution");
  add_job_options(*upscale_cmd, cfg);
  upscale_cmd->add_option("--in", cfg.in, "PBM input")->required();
  upscale_cmd->add_option("--out", cfg.out, "PBM output")->required();
  upscale_cmd->add_option("--factor", cfg.factor, "scale factor > 0")->required()->check(CLI::PositiveNumber);
  upscale_cmd->add_option("--n", cfg.n, "operator index n (default 4 x traced points)")->check(CLI::PositiveNumber);

  auto* smooth_cmd = app.add_subcommand("smooth", "smooth curve through an ordered list of points");
  add_job_options(*smooth_cmd, cfg);
  smooth_cmd->add_option("--in", cfg.in, "CSV points (x,y)")->required();
  smooth_cmd->add_flag("--closed", cfg.closed, "close the polyline");
  smooth_cmd->add_option("--n", cfg.n, "operator index n (default 50)")->check(CLI::PositiveNumber);
  smooth_cmd->add_option("--grid", cfg.grid, "sample count")->check(CLI::Range(2, 10000000));
  smooth_cmd->add_option("--out", cfg.out, "CSV output (default stdout)");
  smooth_cmd->add_option("--svg", cfg.svg, "SVG plot output");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, validate_points, out);
    if (approx->parsed()) return cmd_approx(cfg, out, err);
    if (trace_cmd->parsed()) return cmd_trace(cfg, out);
    if (upscale_cmd->parsed()) return cmd_upscale(cfg, out);
    if (smooth_cmd->parsed()) return cmd_smooth(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TraceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace discop::cli

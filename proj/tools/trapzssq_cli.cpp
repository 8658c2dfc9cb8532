// trapzssq: Laplace demo, convergence study, coefficient decay and single
// target evaluation. CSV goes to --out (stdout by default); summaries go to
// stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "trapzssq/experiments.hpp"

using namespace trapzssq;
using namespace trapzssq::experiments;
using trapzssq::cli::format_real;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string out = "-";
  std::string format = "csv";
  GeometrySpec geometry;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output file, '-' for stdout")->capture_default_str();
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--geometry", c.geometry.name, "starfish, circle or ellipse")->capture_default_str();
  cmd->add_option("--arms", c.geometry.arms, "starfish arm count")->capture_default_str();
  cmd->add_option("--amplitude", c.geometry.amplitude, "starfish amplitude")->capture_default_str();
  cmd->add_option("--radius", c.geometry.radius, "circle radius")->capture_default_str();
  cmd->add_option("--semi-a", c.geometry.a, "ellipse semi-axis along x")->capture_default_str();
  cmd->add_option("--semi-b", c.geometry.b, "ellipse semi-axis along y")->capture_default_str();
}

Dispatch dispatch_from(bool force_trapz, bool force_ssq) {
  if (force_trapz && force_ssq) throw Error(ErrorKind::InvalidConfig, "--force-trapz and --force-ssq are exclusive");
  if (force_trapz) return Dispatch::ForceTrapezoidal;
  if (force_ssq) return Dispatch::ForceSsq;
  return Dispatch::Auto;
}

std::string method_name(Method m) { return m == Method::Ssq ? "ssq" : "trapezoidal"; }
std::string side_name(Side s) { return s == Side::Interior ? "interior" : "exterior"; }

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error(ErrorKind::Io, "failed writing '" + path + "'");
}

std::size_t single_n(const std::string& text) {
  const auto v = cli::parse_n_values(text);
  if (v.size() != 1) throw Error(ErrorKind::InvalidConfig, "expected a single node count, got '" + text + "'");
  return v[0];
}

void csv_row(std::ostringstream& os, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) os << ',';
    os << f;
    first = false;
  }
  os << '\n';
}

// demo-laplace

struct DemoArgs {
  Common common;
  std::string n = "400";
  std::size_t grid = 400;
  double tol = 1e-12;
  bool force_trapz = false;
  bool force_ssq = false;
};

void run_demo(const DemoArgs& a) {
  LaplaceDemoConfig c;
  c.geometry = a.common.geometry;
  c.n = single_n(a.n);
  c.grid = a.grid;
  c.tol = a.tol;
  c.dispatch = dispatch_from(a.force_trapz, a.force_ssq);
  const auto result = run_laplace_demo(c);

  std::ostringstream os;
  if (a.common.format == "csv") {
    os << "x,y,u,u_exact,abs_error,method\n";
    for (const auto& r : result.rows) {
      csv_row(os, {format_real(r.x), format_real(r.y), format_real(r.u), format_real(r.u_exact),
                   format_real(r.abs_error), method_name(r.method)});
    }
  } else {
    json rows = json::array();
    for (const auto& r : result.rows) {
      rows.push_back({{"x", r.x}, {"y", r.y}, {"u", r.u}, {"u_exact", r.u_exact}, {"abs_error", r.abs_error},
                      {"method", method_name(r.method)}});
    }
    json doc = {{"n", c.n},
                {"grid", c.grid},
                {"max_error_ssq", result.max_error_ssq},
                {"max_error_trapezoidal", result.max_error_trapz},
                {"max_error_near", result.max_error_near},
                {"condition_estimate", result.condition_estimate},
                {"rows", rows}};
    os << doc.dump(1) << '\n';
  }
  write_output(a.common.out, os.str());

  std::fprintf(stderr, "interior points: %zu of %zu\n", result.rows.size(), result.grid_points);
  std::fprintf(stderr, "max error (ssq): %.3e\n", result.max_error_ssq);
  std::fprintf(stderr, "max error (trapezoidal): %.3e\n", result.max_error_trapz);
  std::fprintf(stderr, "max error near boundary: %.3e\n", result.max_error_near);
  std::fprintf(stderr, "condition estimate: %.3e\n", result.condition_estimate);
}

// converge

struct ConvergeArgs {
  Common common;
  std::string n = "50:25:600";
  std::string kernel = "cauchy";
  std::string side = "both";
  std::vector<double> d{0.01, 0.02, 0.04};
  std::size_t targets = 100;
  double jitter = 0.0;
  std::uint64_t seed = 0;
};

void run_converge(const ConvergeArgs& a) {
  ConvergenceConfig c;
  c.geometry = a.common.geometry;
  c.n_values = cli::parse_n_values(a.n);
  c.kernel = parse_kernel(a.kernel);
  c.sides = a.side == "interior" ? SideSelection::Interior
          : a.side == "exterior" ? SideSelection::Exterior
                                 : SideSelection::Both;
  c.d_list = a.d;
  c.n_targets = a.targets;
  c.jitter = a.jitter;
  c.seed = a.seed;
  const auto rows = run_convergence(c);

  std::ostringstream os;
  if (a.common.format == "csv") {
    os << "kernel,side,d,N,err_trapz,err_ssq,flags\n";
    for (const auto& r : rows) {
      csv_row(os, {kernel_name(r.kernel), side_name(r.side), format_real(r.d), std::to_string(r.n),
                   format_real(r.err_trapz), format_real(r.err_ssq), r.flags()});
    }
  } else {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"kernel", kernel_name(r.kernel)},
                     {"side", side_name(r.side)},
                     {"d", r.d},
                     {"N", r.n},
                     {"err_trapz", r.err_trapz},
                     {"err_ssq", r.err_ssq},
                     {"flags", r.flags()}});
    }
    os << out.dump(1) << '\n';
  }
  write_output(a.common.out, os.str());
  std::fprintf(stderr, "%zu rows\n", rows.size());
}

// decay

struct DecayArgs {
  Common common;
  std::string n = "401";
  std::string t_star = "1+0.05i";
  std::string density = "cubic";
};

void run_decay_cmd(const DecayArgs& a) {
  DecayConfig c;
  c.geometry = a.common.geometry;
  c.n = single_n(a.n);
  c.t_star = cli::parse_complex(a.t_star);
  c.density = parse_density(a.density);
  const auto rows = run_decay(c);

  std::ostringstream os;
  if (a.common.format == "csv") {
    os << "k,abs_chat,abs_fhat\n";
    for (const auto& r : rows) csv_row(os, {std::to_string(r.k), format_real(r.abs_chat), format_real(r.abs_fhat)});
  } else {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"k", r.k}, {"abs_chat", r.abs_chat}, {"abs_fhat", r.abs_fhat}});
    os << out.dump(1) << '\n';
  }
  write_output(a.common.out, os.str());
}

// eval

struct EvalArgs {
  Common common;
  std::string n = "400";
  std::string z;
  std::string kernel = "cauchy";
  std::string density = "one";
  double tol = 1e-12;
  bool force_trapz = false;
  bool force_ssq = false;
};

void run_eval(const EvalArgs& a) {
  const auto disc = discretize(a.common.geometry.build(), single_n(a.n));
  const cplx z = cli::parse_complex(a.z);
  const Kernel kernel = parse_kernel(a.kernel);
  const Density sigma = sample_density(parse_density(a.density), disc);
  const EvalReport r = eval_auto(disc, sigma, z, kernel, a.tol, dispatch_from(a.force_trapz, a.force_ssq));

  std::ostringstream os;
  if (a.common.format == "csv") {
    os << "value_re,value_im,method,im_tstar,preimage_converged,iterations,residual\n";
    csv_row(os, {format_real(r.value.real()), format_real(r.value.imag()), method_name(r.method),
                 r.im_tstar ? format_real(*r.im_tstar) : std::string(), r.preimage_converged ? "true" : "false",
                 std::to_string(r.iterations), format_real(r.residual)});
  } else {
    json doc = {{"value", {{"re", r.value.real()}, {"im", r.value.imag()}}},
                {"method", method_name(r.method)},
                {"im_tstar", r.im_tstar ? json(*r.im_tstar) : json(nullptr)},
                {"preimage_converged", r.preimage_converged},
                {"iterations", r.iterations},
                {"residual", r.residual}};
    os << doc.dump(1) << '\n';
  }
  write_output(a.common.out, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity swap quadrature for nearly singular layer potentials"};
  app.require_subcommand(1);

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo-laplace", "Laplace double-layer demo on an interior grid");
  add_common(demo_cmd, demo.common);
  demo_cmd->add_option("--n", demo.n, "boundary nodes")->capture_default_str();
  demo_cmd->add_option("--grid", demo.grid, "grid points per axis")->capture_default_str();
  demo_cmd->add_option("--tol", demo.tol, "dispatch tolerance")->capture_default_str();
  demo_cmd->add_flag("--force-trapz", demo.force_trapz, "always use the trapezoidal rule");
  demo_cmd->add_flag("--force-ssq", demo.force_ssq, "use SSQ wherever a preimage is found");

  ConvergeArgs conv;
  auto* conv_cmd = app.add_subcommand("converge", "max error against N for targets at Im t* = +-d");
  add_common(conv_cmd, conv.common);
  conv_cmd->add_option("--n", conv.n, "N or start:step:stop")->capture_default_str();
  conv_cmd->add_option("--kernel", conv.kernel, "log, cauchy, power2, power3, ...")->capture_default_str();
  conv_cmd->add_option("--side", conv.side, "interior, exterior or both")
      ->check(CLI::IsMember({"interior", "exterior", "both"}))
      ->capture_default_str();
  conv_cmd->add_option("--d", conv.d, "comma-separated |Im t*| values")->delimiter(',')->capture_default_str();
  conv_cmd->add_option("--targets", conv.targets, "targets per (side, d)")->capture_default_str();
  conv_cmd->add_option("--jitter", conv.jitter, "random shift of Re t* in target spacings")->capture_default_str();
  conv_cmd->add_option("--seed", conv.seed, "seed for --jitter")->capture_default_str();

  DecayArgs decay;
  auto* decay_cmd = app.add_subcommand("decay", "Fourier coefficient magnitudes of the Cauchy integrand");
  add_common(decay_cmd, decay.common);
  decay_cmd->add_option("--n", decay.n, "boundary nodes")->capture_default_str();
  decay_cmd->add_option("--t-star", decay.t_star, "preimage, e.g. 1+0.05i")->capture_default_str();
  decay_cmd->add_option("--density", decay.density, "one, cubic, inverse or g1g2")->capture_default_str();

  EvalArgs ev;
  ev.common.format = "json";
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one layer potential at one target");
  add_common(eval_cmd, ev.common);
  eval_cmd->add_option("--n", ev.n, "boundary nodes")->capture_default_str();
  eval_cmd->add_option("--z", ev.z, "target, e.g. 0.5+0.1i")->required();
  eval_cmd->add_option("--kernel", ev.kernel, "log, cauchy, power2, ...")->capture_default_str();
  eval_cmd->add_option("--density", ev.density, "one, cubic, inverse or g1g2")->capture_default_str();
  eval_cmd->add_option("--tol", ev.tol, "dispatch tolerance")->capture_default_str();
  eval_cmd->add_flag("--force-trapz", ev.force_trapz, "always use the trapezoidal rule");
  eval_cmd->add_flag("--force-ssq", ev.force_ssq, "use SSQ whenever a preimage is found");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInvalidConfig;
  }

  try {
    if (*demo_cmd) run_demo(demo);
    if (*conv_cmd) run_converge(conv);
    if (*decay_cmd) run_decay_cmd(decay);
    if (*eval_cmd) run_eval(ev);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return cli::exit_code_for(e.kind());
  }
  return cli::kExitOk;
}

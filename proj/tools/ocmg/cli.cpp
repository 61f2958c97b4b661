#include "cli.hpp"

#include "ocmg/field_io.hpp"
#include "ocmg/lfa.hpp"
#include "ocmg/multigrid.hpp"
#include "ocmg/oracle.hpp"
#include "ocmg/problems.hpp"
#include "ocmg/ssn.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ocmg::cli {

namespace {

std::string fmt17(double x)
{
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string fmt3(double x)
{
  if (!std::isfinite(x))
  {
    return "nan";
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << x;
  return os.str();
}

std::string fmt(double x, int digits = 6)
{
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

// Options shared by every subcommand; each subcommand also accepts --config.
void add_common(CLI::App *sub, ExperimentConfig &c)
{
  sub->add_option("--scheme", c.scheme, "Relaxation: cjr, bsr or ibsr")
    ->check(CLI::IsMember({"cjr", "bsr", "ibsr"}))
    ->capture_default_str();
  sub->add_option("--q", c.q, "Coarsening factor")
    ->check(CLI::IsMember({2, 3, 4}))
    ->capture_default_str();
  sub->add_option("--alpha", c.alpha, "Regularization weight")->capture_default_str();
  sub->add_option("--out", c.out, "Output path");
  sub->add_option("--config", c.config_path,
                  "TOML/INI file with keys named like the long flags; explicit flags win");
}

void add_solver(CLI::App *sub, ExperimentConfig &c)
{
  sub->add_option("--N", c.N, "Grid subdivisions (h = 1/N)")->capture_default_str();
  sub->add_option("--cycle", c.cycle, "Cycle type")
    ->check(CLI::IsMember({"V", "W"}))
    ->capture_default_str();
  sub->add_option("--nu", c.nu, "Pre-smoothing steps")->capture_default_str();
  sub->add_option("--tol", c.tol, "Relative residual tolerance")->capture_default_str();
  sub->add_option("--seed", c.seed, "Seed of the random initial guess")->capture_default_str();
  sub->add_option("--pcg-iters", c.pcg_iters, "PCG iterations per IBSR sweep")
    ->capture_default_str();
}

void add_control(CLI::App *sub, ExperimentConfig &c)
{
  sub->add_option("--beta", c.beta, "Sparsity weight")->capture_default_str();
  sub->add_option("--u0", c.u0, "Lower control bound")->capture_default_str();
  sub->add_option("--u1", c.u1, "Upper control bound")->capture_default_str();
}

void build_app(CLI::App &app, ExperimentConfig &c)
{
  // -h is taken by the mesh-size flag.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  auto *lfa_cmd = app.add_subcommand("lfa", "Closed-form and sampled smoothing analysis");
  add_common(lfa_cmd, c);
  lfa_cmd->add_option("--h", c.h, "Mesh size")->capture_default_str();

  auto *mg_cmd = app.add_subcommand("mg", "Multigrid solve of the unconstrained system");
  add_common(mg_cmd, c);
  add_solver(mg_cmd, c);

  auto *ssn_cmd = app.add_subcommand("ssn", "Semi-smooth Newton solve with constraints");
  add_common(ssn_cmd, c);
  add_solver(ssn_cmd, c);
  add_control(ssn_cmd, c);
  // Values are filled per subcommand by defaults_for; keep the help text in step.
  ssn_cmd->get_option("--N")->default_str("128");
  ssn_cmd->get_option("--alpha")->default_str("0.0001");

  auto *repro_cmd = app.add_subcommand("repro", "Batch reproduction of the factor tables");
  add_common(repro_cmd, c);
  repro_cmd->add_option("target", c.target, "table1, table2 or sweep")
    ->required()
    ->check(CLI::IsMember({"table1", "table2", "sweep"}));
  repro_cmd->add_option("--seed", c.seed, "Seed of the random initial guess")
    ->capture_default_str();
}

ExperimentConfig defaults_for(const std::string &command)
{
  ExperimentConfig c;
  c.command = command;
  if (command == "ssn")
  {
    c.N = 128;
    c.alpha = 1e-4;
  }
  return c;
}

SmootherKind kind_of(const ExperimentConfig &c)
{
  return parse_smoother_kind(c.scheme);
}

CycleType cycle_of(const ExperimentConfig &c)
{
  return c.cycle == "V" ? CycleType::V : CycleType::W;
}

HierarchyOptions hierarchy_options(SmootherKind kind)
{
  HierarchyOptions o;
  o.damping = kind == SmootherKind::cjr ? DampingPolicy::cjr_level_optimal : DampingPolicy::fixed;
  return o;
}

std::ofstream open_out(const std::string &path)
{
  const std::filesystem::path p(path);
  if (p.has_parent_path())
  {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream os(path);
  if (!os)
  {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  return os;
}

std::string theta_str(const lfa::Frequency &t)
{
  return "(" + fmt(t.theta1, 6) + ", " + fmt(t.theta2, 6) + ")";
}

// ---------------------------------------------------------------- lfa

int cmd_lfa(const ExperimentConfig &c, std::ostream &out)
{
  const lfa::LfaParams params(c.q, c.alpha, c.h);
  lfa::LfaReport closed;
  lfa::LfaReport sampled;
  lfa::Scheme scheme;
  if (c.scheme == "cjr")
  {
    scheme = lfa::Scheme::cjr;
    closed = lfa::cjr_optimal(params);
    sampled = lfa::optimize_sampled(scheme, params);
  }
  else
  {
    scheme = lfa::Scheme::bsr;
    const auto d = lfa::bsr_damping(c.q);
    closed.mu = d.upper_bound_mu;
    closed.omega = d.omega;
    sampled = lfa::smoothing_factor_sampled(scheme, params, d.omega);
  }

  out << "lfa scheme " << c.scheme << "  q " << c.q << "  alpha " << fmt(c.alpha) << "  h "
      << fmt(c.h) << "  gamma " << fmt(params.gamma()) << '\n';
  if (scheme == lfa::Scheme::cjr)
  {
    const double g = params.gamma();
    const bool omega0_branch = g > lfa::cjr_gamma_threshold(c.q);
    out << "  branch       " << (omega0_branch ? "omega0(gamma)" : "fixed omega") << '\n';
    out << "  closed-form  omega " << fmt(closed.omega) << "  mu " << fmt(closed.mu) << '\n';
  }
  else
  {
    out << "  bound        omega " << fmt(closed.omega) << "  mu <= " << fmt(closed.mu) << '\n';
  }
  out << "  sampled      omega " << fmt(sampled.omega) << "  mu " << fmt(sampled.mu)
      << "  argmax theta " << theta_str(sampled.arg_theta) << '\n';
  out << "  difference   |d omega| " << fmt(std::abs(closed.omega - sampled.omega), 3)
      << "  |d mu| " << fmt(std::abs(closed.mu - sampled.mu), 3) << '\n';

  if (!c.out.empty())
  {
    auto os = open_out(c.out);
    os << "scheme,q,alpha,h,method,omega,mu,theta1,theta2\n";
    auto row = [&](const char *method, const lfa::LfaReport &r) {
      os << c.scheme << ',' << c.q << ',' << fmt17(c.alpha) << ',' << fmt17(c.h) << ','
         << method << ',' << fmt17(r.omega) << ',' << fmt17(r.mu) << ','
         << fmt17(r.arg_theta.theta1) << ',' << fmt17(r.arg_theta.theta2) << '\n';
    };
    row(scheme == lfa::Scheme::cjr ? "closed_form" : "bound", closed);
    row("sampled", sampled);
  }
  return kOk;
}

// ---------------------------------------------------------------- mg

int cmd_mg(const ExperimentConfig &c, std::ostream &out)
{
  const GridSpec g(c.N);
  const auto prob = example1(g, c.alpha);
  const SmootherKind kind = kind_of(c);
  const SmootherSpec sm = default_smoother(kind, c.q, c.alpha, g.h(), c.pcg_iters);
  const Hierarchy hier(SaddleOperator(g, c.alpha), c.q, sm, hierarchy_options(kind));
  CycleSpec cs;
  cs.cycle = cycle_of(c);
  cs.nu_pre = c.nu;
  cs.tol = c.tol;
  cs.seed = c.seed;
  const SolveResult res = solve(hier, prob.data.rhs(), cs);

  out << "mg scheme " << c.scheme << "  q " << c.q << "  N " << c.N << "  alpha " << fmt(c.alpha)
      << "  cycle " << c.cycle << "  nu " << c.nu << "  levels " << hier.num_levels()
      << "  omega " << fmt(sm.omega) << '\n';
  out << "  iterations " << res.iters << "  rho " << fmt3(res.rho) << "  converged "
      << (res.converged ? "yes" : "no") << '\n';
  if (res.converged)
  {
    BlockField err = res.v;
    axpy(-1.0, prob.exact, err);
    out << "  discretization error (discrete L2) " << fmt(l2_norm_h(err)) << '\n';
  }

  if (!c.out.empty())
  {
    auto os = open_out(c.out);
    os << "iter,residual_norm,rel_residual\n";
    const double r0 = res.history.front();
    for (std::size_t k = 0; k < res.history.size(); ++k)
    {
      os << k << ',' << fmt17(res.history[k]) << ',' << fmt17(res.history[k] / r0) << '\n';
    }
  }
  return res.converged ? kOk : kSolverFailure;
}

// ---------------------------------------------------------------- ssn

int cmd_ssn(const ExperimentConfig &c, std::ostream &out, std::ostream &err)
{
  const GridSpec g(c.N);
  const ProblemData data = example2(g);
  const ControlParams cp{c.alpha, c.beta, c.u0, c.u1};
  const SmootherKind kind = kind_of(c);
  const SmootherSpec sm = default_smoother(kind, c.q, c.alpha, g.h(), c.pcg_iters);
  SsnConfig cfg;
  cfg.tol = c.tol;
  cfg.mg.cycle = cycle_of(c);
  cfg.mg.nu_pre = c.nu;
  cfg.mg.tol = c.tol;
  cfg.mg.seed = c.seed;
  cfg.hierarchy = hierarchy_options(kind);

  SsnResult res(g);
  try
  {
    res = ssn_solve(data, cp, c.q, sm, cfg);
  }
  catch (const SsnFailure &e)
  {
    err << "SSN failure: " << e.what() << '\n'
        << "  state: iteration " << e.iteration() << "  relative residual "
        << fmt17(e.rel_residual()) << "  scheme " << c.scheme << "  q " << c.q << "  N " << c.N
        << "  alpha " << fmt(c.alpha) << "  beta " << fmt(c.beta) << '\n';
    return kSolverFailure;
  }

  std::size_t zeros = 0;
  std::size_t active = 0;
  for (std::size_t k = 0; k < res.v.p.size(); ++k)
  {
    const auto region = classify_control(res.v.p[k], cp);
    zeros += region == ControlRegion::zero;
    active += region == ControlRegion::lower || region == ControlRegion::upper;
  }
  const double n = static_cast<double>(g.size());

  out << "ssn scheme " << c.scheme << "  q " << c.q << "  N " << c.N << "  alpha " << fmt(c.alpha)
      << "  beta " << fmt(c.beta) << "  u0 " << fmt(c.u0) << "  u1 " << fmt(c.u1) << '\n';
  out << "  unconstrained initial solve: " << res.initial_mg_iters << " mg iterations\n";
  out << "  ssn iterations " << res.iterations << "  converged " << (res.converged ? "yes" : "no")
      << "  final relative residual " << fmt(res.residual_history.back(), 3) << '\n';
  out << "  mg iterations per ssn step:";
  for (int m : res.mg_iters)
  {
    out << ' ' << m;
  }
  out << '\n';
  out << "  sparsity fraction " << fmt(zeros / n) << "  active fraction " << fmt(active / n)
      << '\n';

  if (!c.out.empty())
  {
    std::filesystem::create_directories(c.out);
    const std::filesystem::path dir(c.out);
    write_field((dir / "u.txt").string(), res.u);
    write_field((dir / "y.txt").string(), res.v.y);
    write_field((dir / "p.txt").string(), res.v.p);
    auto os = open_out((dir / "ssn.csv").string());
    os << "iter,rel_residual,mg_iters,step_length,mask_count\n";
    os << 0 << ',' << fmt17(res.residual_history.front()) << ',' << res.initial_mg_iters
       << ",,\n";
    for (int k = 0; k < res.iterations; ++k)
    {
      os << k + 1 << ',' << fmt17(res.residual_history[k + 1]) << ',' << res.mg_iters[k] << ','
         << fmt17(res.step_lengths[k]) << ',' << res.active_counts[k] << '\n';
    }
  }
  return res.converged ? kOk : kSolverFailure;
}

// ---------------------------------------------------------------- repro

struct Cell
{
  int q;
  int N;
  std::string label;
  SmootherKind kind;
  int pcg_iters;
  int nu;
  CycleType cycle;
  double alpha;
};

struct Row
{
  double mu_pred = std::nan("");
  double rho = std::nan("");
  int iters = 0;
  std::string status = "ok";
};

int reference_N(int q)
{
  return q == 3 ? 243 : 256;
}

double predicted_mu(const Cell &cell, double h)
{
  const lfa::LfaParams params(cell.q, cell.alpha, h);
  if (cell.kind == SmootherKind::cjr)
  {
    return lfa::cjr_optimal(params).mu_pow(cell.nu);
  }
  return lfa::smoothing_factor_sampled(lfa::Scheme::bsr, params, lfa::bsr_damping(cell.q).omega)
    .mu_pow(cell.nu);
}

Row run_cell(const Cell &cell, std::uint64_t seed)
{
  Row row;
  try
  {
    const GridSpec g(cell.N);
    row.mu_pred = predicted_mu(cell, g.h());
    const auto prob = example1(g, cell.alpha);
    const SmootherSpec sm = default_smoother(cell.kind, cell.q, cell.alpha, g.h(), cell.pcg_iters);
    const Hierarchy hier(SaddleOperator(g, cell.alpha), cell.q, sm, hierarchy_options(cell.kind));
    CycleSpec cs;
    cs.cycle = cell.cycle;
    cs.nu_pre = cell.nu;
    cs.seed = seed;
    const SolveResult res = solve(hier, prob.data.rhs(), cs);
    row.rho = res.rho;
    row.iters = res.iters;
    if (!res.converged)
    {
      row.status = "not_converged";
    }
  }
  catch (const std::exception &e)
  {
    row.status = std::string("error: ") + e.what();
    std::replace(row.status.begin(), row.status.end(), ',', ';');
  }
  return row;
}

std::vector<Cell> repro_cells(const std::string &target)
{
  std::vector<Cell> cells;
  const CycleType cycles[] = {CycleType::W, CycleType::V};
  if (target == "table1")
  {
    for (int q : {2, 3, 4})
      for (int nu : {1, 2, 3})
        for (CycleType cy : cycles)
          cells.push_back({q, reference_N(q), "cjr", SmootherKind::cjr, 2, nu, cy, 1e-6});
  }
  else if (target == "table2")
  {
    for (int q : {2, 3, 4})
    {
      for (int nu : {1, 2, 3})
        for (CycleType cy : cycles)
          cells.push_back({q, reference_N(q), "bsr", SmootherKind::bsr_exact, 2, nu, cy, 1e-6});
      for (int k : {1, 2, 3, 4})
        for (CycleType cy : cycles)
          cells.push_back(
            {q, reference_N(q), "ibsr-pcg" + std::to_string(k), SmootherKind::ibsr, k, 1, cy, 1e-6});
    }
  }
  else
  {
    // Iteration counts over N and alpha for CJR and IBSR, W-cycle, nu = 1.
    for (int q : {2, 3, 4})
    {
      const std::vector<int> sizes =
        q == 3 ? std::vector<int>{27, 81, 243} : std::vector<int>{32, 64, 128, 256};
      for (int N : sizes)
        for (double a : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12})
        {
          cells.push_back({q, N, "cjr", SmootherKind::cjr, 2, 1, CycleType::W, a});
          cells.push_back({q, N, "ibsr", SmootherKind::ibsr, 2, 1, CycleType::W, a});
        }
    }
  }
  return cells;
}

int cmd_repro(const ExperimentConfig &c, std::ostream &out)
{
  const auto cells = repro_cells(c.target);
  std::vector<Row> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex io;
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(cells.size()));

  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++)
    {
      Row r = run_cell(cells[i], c.seed);
      std::lock_guard<std::mutex> lock(io);
      rows[i] = std::move(r);
      const auto &cell = cells[i];
      out << "  q " << cell.q << "  N " << cell.N << "  " << cell.label << "  nu " << cell.nu
          << "  " << (cell.cycle == CycleType::W ? 'W' : 'V') << "  alpha " << fmt(cell.alpha)
          << "  mu_pred " << fmt3(rows[i].mu_pred) << "  rho " << fmt3(rows[i].rho) << "  "
          << rows[i].status << '\n';
    }
  };
  out << "repro " << c.target << ": " << cells.size() << " cells, " << workers << " worker(s)\n";
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w)
  {
    pool.emplace_back(work);
  }
  work();
  for (auto &t : pool)
  {
    t.join();
  }

  const std::filesystem::path dir(c.out.empty() ? "." : c.out);
  std::filesystem::create_directories(dir);
  const auto path = (dir / (c.target + ".csv")).string();
  auto os = open_out(path);
  const bool sweep = c.target == "sweep";
  os << "q,N,scheme,nu,cycle,mu_pred,rho_measured" << (sweep ? ",alpha,iters" : "")
     << ",status\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < cells.size(); ++i)
  {
    const auto &cell = cells[i];
    const auto &r = rows[i];
    all_ok = all_ok && r.status == "ok";
    os << cell.q << ',' << cell.N << ',' << cell.label << ',' << cell.nu << ','
       << (cell.cycle == CycleType::W ? 'W' : 'V') << ',' << fmt3(r.mu_pred) << ','
       << fmt3(r.rho);
    if (sweep)
    {
      os << ',' << fmt17(cell.alpha) << ',' << r.iters;
    }
    os << ',' << r.status << '\n';
  }
  out << "wrote " << path << '\n';
  return all_ok ? kOk : kSolverFailure;
}

} // namespace

unsigned worker_count()
{
  if (const char *env = std::getenv("OCMG_WORKERS"))
  {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
    {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

bool has_flag(const std::vector<std::string> &args, const std::string &flag)
{
  return std::any_of(args.begin(), args.end(), [&](const std::string &a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

std::string config_path_in(const std::vector<std::string> &args)
{
  for (std::size_t i = 0; i < args.size(); ++i)
  {
    if (args[i] == "--config" && i + 1 < args.size())
    {
      return args[i + 1];
    }
    if (args[i].rfind("--config=", 0) == 0)
    {
      return args[i].substr(9);
    }
  }
  return {};
}

// Config keys become flags appended after the command line, skipping any
// flag that was given explicitly.
std::vector<std::string> expand_config(std::vector<std::string> args, const std::string &command)
{
  const std::string path = config_path_in(args);
  if (path.empty())
  {
    return args;
  }
  if (!std::filesystem::is_regular_file(path))
  {
    throw CLI::FileError::Missing(path);
  }
  const auto items = CLI::ConfigTOML().from_file(path);
  for (const auto &item : items)
  {
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == command))
    {
      continue;
    }
    if (item.name == "++" || item.name == "--" || item.inputs.empty())
    {
      continue;  // section markers
    }
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "target")
    {
      if (command == "repro" && std::none_of(args.begin(), args.end(), [](const std::string &a) {
            return a == "table1" || a == "table2" || a == "sweep";
          }))
      {
        args.push_back(item.inputs.front());
      }
      continue;
    }
    const std::string flag = "--" + key;
    if (key == "config" || has_flag(args, flag))
    {
      continue;
    }
    args.push_back(flag);
    args.push_back(item.inputs.front());
  }
  return args;
}

} // namespace

ExperimentConfig parse_args(const std::vector<std::string> &raw)
{
  // Defaults depend on the subcommand, which is the first non-flag token.
  std::string command;
  for (const auto &a : raw)
  {
    if (a == "lfa" || a == "mg" || a == "ssn" || a == "repro")
    {
      command = a;
      break;
    }
  }
  const std::vector<std::string> args = expand_config(raw, command);
  ExperimentConfig c = defaults_for(command);
  CLI::App app{"Multigrid suite for sparse elliptic optimal control", "ocmg"};
  build_app(app, c);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
  c.command = app.get_subcommands().front()->get_name();
  c.config_path.clear();
  return c;
}

void validate(const ExperimentConfig &c)
{
  lfa::validate_q(c.q);
  if (!(c.alpha > 0.0) || !std::isfinite(c.alpha))
  {
    throw std::invalid_argument("--alpha must be a positive number");
  }
  if (c.command == "lfa")
  {
    if (c.scheme == "ibsr")
    {
      throw std::invalid_argument("lfa: the analysis covers cjr and bsr (exact) only");
    }
    if (!(c.h > 0.0 && c.h <= 0.5))
    {
      throw std::invalid_argument("lfa: --h must lie in (0, 0.5]");
    }
    return;
  }
  if (c.command == "repro")
  {
    return;
  }
  parse_smoother_kind(c.scheme);
  if (c.N < 2)
  {
    throw std::invalid_argument("--N must be >= 2");
  }
  if (c.N % c.q != 0)
  {
    throw std::invalid_argument("--N " + std::to_string(c.N) + " is not divisible by --q " +
                                std::to_string(c.q));
  }
  const auto sizes = level_sizes(c.N, c.q);
  if (sizes.back() > kMaxDenseN)
  {
    throw std::invalid_argument("--N " + std::to_string(c.N) + " with --q " +
                                std::to_string(c.q) +
                                " does not coarsen to a directly solvable grid");
  }
  if (c.nu < 1)
  {
    throw std::invalid_argument("--nu must be >= 1");
  }
  if (!(c.tol > 0.0 && c.tol < 1.0))
  {
    throw std::invalid_argument("--tol must lie in (0, 1)");
  }
  if (c.pcg_iters < 1)
  {
    throw std::invalid_argument("--pcg-iters must be >= 1");
  }
  if (c.command == "ssn")
  {
    ControlParams{c.alpha, c.beta, c.u0, c.u1}.validate();
    if (c.scheme == "bsr")
    {
      throw std::invalid_argument(
        "ssn: exact bsr needs a symmetric Schur operator; use --scheme ibsr or cjr for the "
        "masked Jacobian systems");
    }
  }
}

int run(const ExperimentConfig &c, std::ostream &out, std::ostream &err)
{
  if (c.command == "lfa")
  {
    return cmd_lfa(c, out);
  }
  if (c.command == "mg")
  {
    return cmd_mg(c, out);
  }
  if (c.command == "ssn")
  {
    return cmd_ssn(c, out, err);
  }
  return cmd_repro(c, out);
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  ExperimentConfig cfg;
  try
  {
    cfg = parse_args(args);
  }
  catch (const CLI::Success &)
  {
    ExperimentConfig dummy;
    CLI::App app{"Multigrid suite for sparse elliptic optimal control", "ocmg"};
    build_app(app, dummy);
    // Show help for the requested subcommand when one was named.
    for (const auto &a : args)
    {
      for (auto *sub : app.get_subcommands({}))
      {
        if (sub->get_name() == a)
        {
          out << sub->help();
          return kOk;
        }
      }
    }
    out << app.help();
    return kOk;
  }
  catch (const CLI::ParseError &e)
  {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kValidationError;
  }

  try
  {
    validate(cfg);
  }
  catch (const std::invalid_argument &e)
  {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try
  {
    return run(cfg, out, err);
  }
  catch (const std::invalid_argument &e)
  {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  catch (const std::exception &e)
  {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }
}

} // namespace ocmg::cli

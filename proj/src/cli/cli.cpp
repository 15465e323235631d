#include "ptm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "ptm/hermitize.hpp"
#include "ptm/linalg.hpp"
#include "ptm/metrics.hpp"
#include "ptm/models.hpp"
#include "ptm/signature.hpp"
#include "ptm/sweep.hpp"

#ifndef PTM_DATA_DIR
#define PTM_DATA_DIR "data"
#endif

namespace ptm::cli {

using nlohmann::json;

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  if (std::abs(x) < 1e-4) std::snprintf(buf, sizeof buf, "%.9e", x);
  else std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double rounded(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

namespace {

json num(double x) { return rounded(x); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (double x : m.row(i)) row.push_back(num(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json values_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::string join(const std::vector<std::string>& cells, char sep = ',') {
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) line += sep;
    line += cells[k];
  }
  return line + "\n";
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

// "quantity,i,j,value" rows for matrix-valued output.
void append_matrix_csv(std::string& csv, const std::string& name, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      csv += join({name, std::to_string(i + 1), std::to_string(j + 1), format_number(m(i, j))});
}

void append_values_csv(std::string& csv, const std::string& name, const std::vector<double>& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    csv += join({name, std::to_string(k + 1), "", format_number(v[k])});
}

void append_scalar_csv(std::string& csv, const std::string& name, double x) {
  csv += join({name, "", "", format_number(x)});
}

struct Report {
  json params = json::object();
  json result = json::object();
  std::string csv;
};

struct Globals {
  std::string format = "csv";
  std::string out_path;
  double zero_tol = -1.0;
  std::uint64_t seed = 42;

  std::optional<double> zero_tolerance() const {
    return zero_tol >= 0.0 ? std::optional<double>(zero_tol) : std::nullopt;
  }
};

struct ModelArgs {
  std::string family = "asym-sw";
  std::size_t n = 0;
  double lambda = 0.0;
  double a = 0.0;
  std::vector<double> g;

  HamiltonianSpec spec() const {
    HamiltonianSpec s;
    s.family = parse_family(family);
    s.n = n;
    s.lambda = lambda;
    s.a = a;
    s.g = g;
    validate(s);
    return s;
  }

  json params() const {
    json p = {{"family", family}, {"n", n}};
    switch (parse_family(family)) {
      case Family::AsymmetricSW:
      case Family::SymmetricSW: p["lambda"] = num(lambda); break;
      case Family::Chain: p["g"] = values_json(g); break;
      case Family::Solvable: p["a"] = num(a); break;
    }
    return p;
  }
};

void add_model_options(CLI::App* sub, ModelArgs& m) {
  sub->add_option("--family", m.family, "asym-sw | sym-sw | chain | solvable")
      ->capture_default_str();
  sub->add_option("--n", m.n, "matrix dimension")->required();
  sub->add_option("--lambda", m.lambda, "coupling of the square-well families")
      ->capture_default_str();
  sub->add_option("--a", m.a, "parameter of the solvable family")->capture_default_str();
  sub->add_option("--g", m.g, "chain couplings g1,...,gJ with J = floor(n/2)")->delimiter(',');
}

// ---------------------------------------------------------------------------

Report cmd_spectrum(const ModelArgs& m) {
  const Spectrum s = spectrum(m.spec());
  Report r;
  r.params = m.params();
  json values = json::array();
  r.csv = join({"index", "re", "im", "all_real"});
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    const auto& e = s.values[k];
    values.push_back({num(e.real()), num(e.imag())});
    r.csv += join({std::to_string(k + 1), format_number(e.real()), format_number(e.imag()),
                   s.real ? "true" : "false"});
  }
  r.result = {{"eigenvalues", values}, {"all_real", s.real}};
  return r;
}

Report cmd_metric(const ModelArgs& m, const std::string& kind_name) {
  const MetricKind kind = parse_metric_kind(kind_name);
  const HamiltonianSpec spec = m.spec();
  const Metric theta = closed_form(kind, m.n, m.lambda);
  const auto eig = linalg::eig_symmetric(theta.matrix).values;
  const double residual = dieudonne_residual(build(spec), theta);

  Report r;
  r.params = m.params();
  r.params["kind"] = kind_name;
  r.result = {{"matrix", matrix_json(theta.matrix)},
              {"eigenvalues", values_json(eig)},
              {"residual", num(residual)},
              {"provenance", describe(theta.provenance)}};
  r.csv = join({"quantity", "i", "j", "value"});
  append_matrix_csv(r.csv, "theta", theta.matrix);
  append_values_csv(r.csv, "eigenvalue", eig);
  append_scalar_csv(r.csv, "residual", residual);
  return r;
}

Report cmd_classify(std::size_t n, double lambda, const std::string& kind_name,
                    const Globals& g) {
  const Metric theta = closed_form(parse_metric_kind(kind_name), n, lambda);
  const Signature sig = signature_of(theta, g.zero_tolerance());
  const Classification c = classify(sig);

  Report r;
  r.params = {{"n", n}, {"lambda", num(lambda)}, {"kind", kind_name}};
  if (g.zero_tolerance()) r.params["zero_tol"] = num(*g.zero_tolerance());
  json multiplets = json::array();
  for (const auto& mp : group_multiplicities(sig.eigenvalues))
    multiplets.push_back({{"value", num(mp.value)}, {"multiplicity", mp.multiplicity}});
  r.result = {{"n_plus", sig.n_plus},
              {"n_zero", sig.n_zero},
              {"n_minus", sig.n_minus},
              {"signature", sig.pattern()},
              {"classification", std::string(to_string(c))},
              {"acceptable", acceptable(c)},
              {"eigenvalues", values_json(sig.eigenvalues)},
              {"multiplets", multiplets}};
  r.csv = join({"lambda", "n_plus", "n_zero", "n_minus", "signature", "classification"});
  r.csv += join({format_number(lambda), std::to_string(sig.n_plus), std::to_string(sig.n_zero),
                 std::to_string(sig.n_minus), sig.pattern(), std::string(to_string(c))});
  return r;
}

Report cmd_solve(const ModelArgs& m, std::optional<std::size_t> bandwidth) {
  const Matrix h = build(m.spec());
  const auto basis = solve_dieudonne_basis(h, bandwidth);

  Report r;
  r.params = m.params();
  if (bandwidth) r.params["bandwidth"] = *bandwidth;
  json elements = json::array();
  r.csv = join({"element", "i", "j", "value"});
  for (std::size_t k = 0; k < basis.size(); ++k) {
    elements.push_back({{"matrix", matrix_json(basis[k].matrix)},
                        {"residual", num(dieudonne_residual(h, basis[k]))}});
    append_matrix_csv(r.csv, std::to_string(k + 1), basis[k].matrix);
  }
  r.result = {{"dimension", basis.size()}, {"basis", elements}};
  return r;
}

Report cmd_hermitize(const ModelArgs& m, const std::vector<double>& coeffs, const Globals& g) {
  if (coeffs.empty() || coeffs.size() > 3)
    throw ArgumentError("hermitize: expected one to three coefficients");
  const Matrix h = build(m.spec());
  std::vector<Metric> basis;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    basis.push_back(closed_form(static_cast<MetricKind>(k), m.n, m.lambda));
  const Metric theta = combine(basis, coeffs);
  const Signature sig = signature_of(theta, g.zero_tolerance());
  const HermitizationResult res = hermitize(h, theta);
  const double crypto = crypto_hermiticity_residual(h, theta);

  Report r;
  r.params = m.params();
  r.params["coeffs"] = values_json(coeffs);
  r.result = {{"signature", sig.pattern()},
              {"classification", std::string(to_string(classify(sig)))},
              {"omega", matrix_json(res.omega)},
              {"h", matrix_json(res.h)},
              {"symmetry_residual", num(res.symmetry_residual)},
              {"spectral_match_residual", num(res.spectral_match_residual)},
              {"crypto_hermiticity_residual", num(crypto)}};
  r.csv = join({"quantity", "i", "j", "value"});
  append_matrix_csv(r.csv, "omega", res.omega);
  append_matrix_csv(r.csv, "h", res.h);
  append_scalar_csv(r.csv, "symmetry_residual", res.symmetry_residual);
  append_scalar_csv(r.csv, "spectral_match_residual", res.spectral_match_residual);
  append_scalar_csv(r.csv, "crypto_hermiticity_residual", crypto);
  return r;
}

Report cmd_evolve(const ModelArgs& m, const std::string& kind_name, double t, const Globals& g) {
  const Matrix h = build(m.spec());
  const Metric theta = closed_form(parse_metric_kind(kind_name), m.n, m.lambda);
  const ComplexVector psi0 = random_state(m.n, g.seed);
  const double drift = evolve_norm_drift(h, theta, psi0, t);
  const double initial = metric_inner(psi0, psi0, theta).real();

  Report r;
  r.params = m.params();
  r.params["kind"] = kind_name;
  r.params["t"] = num(t);
  r.params["seed"] = g.seed;
  r.result = {{"drift", num(drift)}, {"initial_form", num(initial)}};
  r.csv = join({"t", "initial_form", "drift"});
  r.csv += join({format_number(t), format_number(initial), format_number(drift)});
  return r;
}

struct SweepArgs {
  double lambda_min = -1.5;
  double lambda_max = 1.5;
  std::size_t points = 301;
  std::string metric;
  std::string prefix = "sweep";
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open '" + path.string() + "' for writing");
  f << text;
}

Report cmd_sweep(const ModelArgs& m, const SweepArgs& s, const Globals& g) {
  if (s.points < 2) throw ArgumentError("sweep: need at least 2 points");
  if (!(s.lambda_min < s.lambda_max)) throw ArgumentError("sweep: empty lambda range");
  const auto grid = linspace(s.lambda_min, s.lambda_max, s.points);
  const HamiltonianSpec base = m.spec();

  std::vector<SweepRow> rows;
  if (s.metric.empty()) rows = spectrum_sweep(base, m.n, grid);
  else rows = metric_sweep(m.n, grid, parse_metric_kind(s.metric), g.zero_tolerance());

  std::string dat = "# lambda, then eigenvalue real parts in descending order\n";
  for (const auto& row : rows) {
    std::vector<double> re;
    for (const auto& e : row.eigenvalues) re.push_back(e.real());
    std::sort(re.begin(), re.end(), std::greater<>());
    std::vector<std::string> cells{format_number(row.lambda)};
    for (double x : re) cells.push_back(format_number(x));
    dat += join(cells, ' ');
  }

  const std::filesystem::path dat_path = s.prefix + ".dat";
  const std::filesystem::path gp_path = s.prefix + ".gp";
  std::ostringstream gp;
  gp << "set xlabel \"lambda\"\n"
     << "set ylabel \"" << (s.metric.empty() ? "E" : "eigenvalue") << "\"\n"
     << "set key off\n"
     << "plot for [c=2:" << m.n + 1 << "] '" << dat_path.filename().string()
     << "' using 1:c with lines lc rgb \"black\"\n";
  write_file(dat_path, dat);
  write_file(gp_path, gp.str());

  Report r;
  r.params = m.params();
  r.params.erase("lambda");
  r.params["lambda_min"] = num(s.lambda_min);
  r.params["lambda_max"] = num(s.lambda_max);
  r.params["points"] = s.points;
  if (!s.metric.empty()) r.params["metric"] = s.metric;
  r.result = {{"rows", rows.size()},
              {"data_file", dat_path.string()},
              {"script_file", gp_path.string()}};
  r.csv = join({"quantity", "lo", "hi"});
  if (s.metric.empty()) {
    json domain = json::array();
    for (const auto& iv : reality_domain(base, m.n, s.lambda_min, s.lambda_max, s.points)) {
      domain.push_back({num(iv.lo), num(iv.hi)});
      r.csv += join({"real_interval", format_number(iv.lo), format_number(iv.hi)});
    }
    r.result["reality_domain"] = domain;
  }
  return r;
}

// --------------------------------------------------------------------------- table1

const std::vector<double> kTableLambdas{-1.0, -0.5, 0.0, 0.5, 0.95, 1.0, 1.1, 2.0, 200.0, -200.0};
constexpr std::size_t kTableN = 8;
constexpr double kTableEigenTol = 5e-7;

struct TableRow {
  double lambda = 0.0;
  std::vector<double> eigenvalues;  // multiplet representatives, descending
  std::string signature;
  std::string classification;
};

std::vector<TableRow> table1_rows(std::optional<double> zero_tol) {
  std::vector<TableRow> out;
  for (const auto& row : metric_sweep(kTableN, kTableLambdas, MetricKind::Tridiagonal, zero_tol)) {
    const auto& ev = row.signature->eigenvalues;
    const double radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
    const double threshold = zero_tol.value_or(kDefaultZeroTol * radius);
    TableRow t;
    t.lambda = row.lambda;
    for (const auto& mp : row.multiplets)
      t.eigenvalues.push_back(std::abs(mp.value) <= threshold ? 0.0 : mp.value);
    t.signature = row.signature->pattern();
    t.classification = std::string(to_string(*row.classification));
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TableRow> read_table(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open golden file '" + path.string() + "'");
  std::vector<TableRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() < 4) throw ArgumentError("malformed golden row: " + line);
    TableRow t;
    t.lambda = std::stod(cells[0]);
    for (std::size_t k = 1; k + 2 < cells.size(); ++k) t.eigenvalues.push_back(std::stod(cells[k]));
    t.signature = cells[cells.size() - 2];
    t.classification = cells.back();
    rows.push_back(std::move(t));
  }
  return rows;
}

// Empty when the tables agree, else one message per disagreement.
std::vector<std::string> diff_tables(const std::vector<TableRow>& got,
                                     const std::vector<TableRow>& want) {
  std::vector<std::string> problems;
  if (got.size() != want.size()) {
    problems.push_back("row count " + std::to_string(got.size()) + " vs golden " +
                       std::to_string(want.size()));
    return problems;
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto& a = got[i];
    const auto& b = want[i];
    const std::string where = "lambda=" + format_number(b.lambda) + ": ";
    if (a.lambda != b.lambda) problems.push_back(where + "lambda " + format_number(a.lambda));
    if (a.eigenvalues.size() != b.eigenvalues.size()) {
      problems.push_back(where + "eigenvalue count differs");
    } else {
      for (std::size_t k = 0; k < a.eigenvalues.size(); ++k)
        if (std::abs(a.eigenvalues[k] - b.eigenvalues[k]) > kTableEigenTol)
          problems.push_back(where + "eig" + std::to_string(k + 1) + " " +
                             format_number(a.eigenvalues[k]) + " vs golden " +
                             format_number(b.eigenvalues[k]));
    }
    if (a.signature != b.signature)
      problems.push_back(where + "signature " + a.signature + " vs golden " + b.signature);
    if (a.classification != b.classification)
      problems.push_back(where + "classification " + a.classification + " vs golden " +
                         b.classification);
  }
  return problems;
}

Report cmd_table1(const std::string& golden, const Globals& g, std::vector<std::string>& problems) {
  const auto rows = table1_rows(g.zero_tolerance());
  Report r;
  r.params = {{"n", kTableN}, {"kind", "tridiagonal"}, {"golden", golden}};
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.eigenvalues.size());
  std::vector<std::string> header{"lambda"};
  for (std::size_t k = 1; k <= width; ++k) header.push_back("eig" + std::to_string(k));
  header.push_back("signature");
  header.push_back("classification");
  r.csv = join(header);
  json table = json::array();
  for (const auto& row : rows) {
    std::vector<std::string> cells{format_number(row.lambda)};
    for (double e : row.eigenvalues) cells.push_back(format_number(e));
    cells.push_back(row.signature);
    cells.push_back(row.classification);
    r.csv += join(cells);
    table.push_back({{"lambda", num(row.lambda)},
                     {"eigenvalues", values_json(row.eigenvalues)},
                     {"signature", row.signature},
                     {"classification", row.classification}});
  }
  problems = diff_tables(rows, read_table(golden));
  r.result = {{"rows", table}, {"matches_golden", problems.empty()}};
  return r;
}

void emit(const std::string& command, const Report& r, const Globals& g, std::ostream& out) {
  std::string text;
  if (g.format == "json") {
    const json doc = {{"command", command}, {"params", r.params}, {"result", r.result}};
    text = doc.dump(2) + "\n";
  } else {
    text = r.csv;
  }
  if (g.out_path.empty()) out << text;
  else write_file(g.out_path, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metrics, signatures and hermitization for tridiagonal non-Hermitian Hamiltonians",
               "ptm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write the result here instead of stdout");
  app.add_option("--zero-tol", g.zero_tol,
                 "absolute zero threshold for metric eigenvalues (default 1e-8 x spectral radius)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for random initial states")->capture_default_str();

  ModelArgs model;
  std::string kind;
  std::vector<double> coeffs{1.0};
  double t = 1.0;
  std::size_t bandwidth = 0;
  SweepArgs sweep;
  std::string golden = std::string(PTM_DATA_DIR) + "/table1_golden.csv";
  const auto kinds = CLI::IsMember({"diagonal", "bidiagonal", "tridiagonal"});

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and reality flag");
  add_model_options(spectrum_cmd, model);

  auto* metric_cmd = app.add_subcommand("metric", "closed-form metric, its eigenvalues and residual");
  add_model_options(metric_cmd, model);
  metric_cmd->add_option("--kind", kind, "metric kind")->required()->check(kinds);

  auto* classify_cmd = app.add_subcommand("classify", "signature and classification of a metric");
  classify_cmd->add_option("--n", model.n, "matrix dimension")->required();
  classify_cmd->add_option("--lambda", model.lambda, "coupling")->capture_default_str();
  classify_cmd->add_option("--kind", kind, "metric kind")->required()->check(kinds);

  auto* solve_cmd = app.add_subcommand("solve", "basis of all symmetric Dieudonne solutions");
  add_model_options(solve_cmd, model);
  auto* bandwidth_opt =
      solve_cmd->add_option("--bandwidth", bandwidth, "restrict to this half-bandwidth");

  auto* hermitize_cmd = app.add_subcommand("hermitize", "equivalent Hermitian Hamiltonian");
  add_model_options(hermitize_cmd, model);
  hermitize_cmd
      ->add_option("--coeffs", coeffs, "weights of the diagonal, bidiagonal, tridiagonal metrics")
      ->delimiter(',')
      ->capture_default_str();

  auto* evolve_cmd = app.add_subcommand("evolve", "drift of the metric form under exp(-iHt)");
  add_model_options(evolve_cmd, model);
  evolve_cmd->add_option("--kind", kind, "metric kind")->required()->check(kinds);
  evolve_cmd->add_option("--t", t, "time")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "lambda sweep data file and gnuplot script");
  add_model_options(sweep_cmd, model);
  sweep_cmd->add_option("--lambda-min", sweep.lambda_min)->capture_default_str();
  sweep_cmd->add_option("--lambda-max", sweep.lambda_max)->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points)->capture_default_str();
  sweep_cmd->add_option("--metric", sweep.metric, "sweep metric eigenvalues instead")->check(kinds);
  sweep_cmd->add_option("--prefix", sweep.prefix, "path prefix for .dat and .gp files")
      ->capture_default_str();

  auto* table1_cmd = app.add_subcommand("table1", "tridiagonal-metric table at n = 8, diffed against golden");
  table1_cmd->add_option("--golden", golden, "golden CSV")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kArgumentError;
  }

  try {
    if (spectrum_cmd->parsed()) {
      emit("spectrum", cmd_spectrum(model), g, out);
    } else if (metric_cmd->parsed()) {
      emit("metric", cmd_metric(model, kind), g, out);
    } else if (classify_cmd->parsed()) {
      emit("classify", cmd_classify(model.n, model.lambda, kind, g), g, out);
    } else if (solve_cmd->parsed()) {
      std::optional<std::size_t> bw;
      if (bandwidth_opt->count()) bw = bandwidth;
      emit("solve", cmd_solve(model, bw), g, out);
    } else if (hermitize_cmd->parsed()) {
      emit("hermitize", cmd_hermitize(model, coeffs, g), g, out);
    } else if (evolve_cmd->parsed()) {
      emit("evolve", cmd_evolve(model, kind, t, g), g, out);
    } else if (sweep_cmd->parsed()) {
      emit("sweep", cmd_sweep(model, sweep, g), g, out);
    } else if (table1_cmd->parsed()) {
      std::vector<std::string> problems;
      emit("table1", cmd_table1(golden, g, problems), g, out);
      if (!problems.empty()) {
        for (const auto& p : problems) err << "table1 mismatch: " << p << "\n";
        return kMismatch;
      }
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kOk;
}

}  // namespace ptm::cli

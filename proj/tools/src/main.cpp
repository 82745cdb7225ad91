// Command-line front end for the surface-geometry library: computes frame
// residuals, pair invariants, adjoint transforms, point-pair maps and the
// quaternionic plane checks over sampled charts, and writes JSON/CSV reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mobius/adjoint.hpp"
#include "mobius/invariants.hpp"
#include "mobius/pair.hpp"
#include "mobius/pairmap.hpp"
#include "mobius/quat.hpp"
#include "toml_lite.hpp"

using json = nlohmann::ordered_json;
using namespace mobius;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit-code contract: 0 ok, 2 config error, 3 numerical degeneracy,
// 4 mask warning (more than half of the grid masked).
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitMasked = 4;

struct RunConfig {
  std::string command;
  std::string chart = "clifford";
  std::string chart2;
  std::string adjoint_in;
  std::string grid = "32x32";
  double tol = 1e-8;
  std::string branch;
  unsigned long lorentz_seed = 0;
  std::string out;
  std::string export_path;
  std::string format = "json";
  double eps = 0.05;
  int trials = 1000;
  unsigned long seed = 1;
};

GridSpec parse_grid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("grid must look like NUxNV, got '" + s + "'");
  GridSpec g;
  g.nu = std::stoi(s.substr(0, x));
  g.nv = std::stoi(s.substr(x + 1));
  if (g.nu < 4 || g.nv < 4)
    throw std::invalid_argument("grid must be at least 4x4");
  return g;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  const auto kv = cli::read_toml(path);
  for (const auto& [k, v] : kv) {
    if (k == "chart") cfg.chart = v;
    else if (k == "chart2") cfg.chart2 = v;
    else if (k == "adjoint_in") cfg.adjoint_in = v;
    else if (k == "grid") cfg.grid = v;
    else if (k == "tol") cfg.tol = std::stod(v);
    else if (k == "branch") cfg.branch = v;
    else if (k == "lorentz_seed") cfg.lorentz_seed = std::stoul(v);
    else if (k == "out") cfg.out = v;
    else if (k == "export") cfg.export_path = v;
    else if (k == "format") cfg.format = v;
    else if (k == "eps") cfg.eps = std::stod(v);
    else if (k == "trials") cfg.trials = std::stoi(v);
    else if (k == "seed") cfg.seed = std::stoul(v);
    else throw std::invalid_argument("unknown config key: " + k);
  }
}

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["chart"] = cfg.chart;
  if (!cfg.chart2.empty()) j["chart2"] = cfg.chart2;
  if (!cfg.adjoint_in.empty()) j["adjoint_in"] = cfg.adjoint_in;
  j["grid"] = cfg.grid;
  j["tol"] = cfg.tol;
  if (!cfg.branch.empty()) j["branch"] = cfg.branch;
  j["lorentz_seed"] = cfg.lorentz_seed;
  j["format"] = cfg.format;
  j["eps"] = cfg.eps;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  return j;
}

SurfaceChart make_chart(const std::string& name, const RunConfig& cfg) {
  SurfaceChart c = catalog(name, {{"eps", cfg.eps}});
  if (cfg.lorentz_seed != 0)
    c = transformed_chart(c, random_lorentz(cfg.lorentz_seed, c.ambient_n));
  return c;
}

using FieldGrid = std::map<std::string, std::vector<std::vector<double>>>;

void emit(const RunConfig& cfg, const json& report, const FieldGrid& fields,
          const std::vector<double>& us, const std::vector<double>& vs) {
  std::ostringstream body;
  if (cfg.format == "csv") {
    body << "u,v";
    for (const auto& [name, g] : fields) body << "," << name;
    body << "\n";
    for (size_t i = 0; i < us.size(); ++i)
      for (size_t j = 0; j < vs.size(); ++j) {
        body << us[i] << "," << vs[j];
        for (const auto& [name, g] : fields) body << "," << g[i][j];
        body << "\n";
      }
  } else {
    json full = report;
    json jf;
    for (const auto& [name, g] : fields) jf[name] = g;
    full["fields"] = jf;
    body << full.dump(2) << "\n";
  }
  if (cfg.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << body.str();
  }
}

json report_head(const RunConfig& cfg) {
  json j;
  j["version"] = kVersion;
  j["config"] = config_json(cfg);
  return j;
}

MuBranch parse_branch(const std::string& s) {
  if (s == "quadratic") return MuBranch::quadratic;
  if (s == "swillmore") return MuBranch::swillmore;
  if (s == "hill") return MuBranch::hill;
  throw std::invalid_argument("unknown branch: " + s);
}

// ----- invariants ---------------------------------------------------------

int cmd_invariants(const RunConfig& cfg) {
  const SurfaceChart chart = make_chart(cfg.chart, cfg);
  const GridSpec grid = parse_grid(cfg.grid);
  const auto us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                            chart.domain.periodic_u);
  const auto vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                            chart.domain.periodic_v);

  const std::vector<std::string> names = {
      "nullity", "conformality", "normalization", "hill", "gauss",
      "codazzi", "ricci",        "willmore",      "gauss_map_harmonic"};
  FieldGrid fields;
  for (const auto& n : names)
    fields[n].assign(grid.nu, std::vector<double>(grid.nv, 0.0));
  ResidualReport summary;
  double gauss_metric = 0.0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const FramePoint fp = frame_at_point(chart, us[i], vs[j]);
      ResidualReport rep = structure_residuals(fp);
      const ConformalGaussPoint cg = conformal_gauss(fp);
      rep["gauss_map_harmonic"] = cg.harmonic_residual;
      if (!cg.degenerate)
        gauss_metric = std::max(
            gauss_metric, std::abs(cg.metric_density - cg.kappa_norm2));
      for (const auto& n : names) fields[n][i][j] = rep[n];
      report_max(summary, rep);
    }
  const double energy = willmore_energy(chart, grid);

  json rep = report_head(cfg);
  json s;
  for (const auto& n : names) s[n] = summary[n];
  rep["summary"] = s;
  rep["energy"] = energy;
  rep["gauss_map_metric"] = gauss_metric;
  emit(cfg, rep, fields, us, vs);
  return 0;
}

// ----- adjoint machinery shared by pair/adjoint/pairmap -------------------

struct AdjointGrid {
  GridSpec grid;
  std::vector<double> us, vs;
  MuField mu;
  std::vector<FramePoint> fps;        // valid where !mu.mask
  std::vector<AdjointPoint> points;   // masked flag mirrors reality
  int masked = 0;
};

AdjointGrid build_adjoint(const SurfaceChart& chart, const GridSpec& grid,
                          MuBranch branch, int K = 9) {
  AdjointGrid ag;
  ag.grid = grid;
  ag.us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                    chart.domain.periodic_u);
  ag.vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                    chart.domain.periodic_v);
  ag.mu = solve_mu_field(chart, grid, branch, K);
  ag.fps.resize(grid.nu * grid.nv);
  ag.points.resize(grid.nu * grid.nv);
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const int idx = i * grid.nv + j;
      if (ag.mu.mask[idx]) {
        ag.points[idx].masked = true;
        ++ag.masked;
        continue;
      }
      try {
        ag.fps[idx] = frame_at_point(chart, ag.us[i], ag.vs[j], K);
        ag.points[idx] = adjoint_point(ag.fps[idx], ag.mu.mu[idx]);
        ag.points[idx].discriminant = ag.mu.discriminant[idx];
        if (ag.points[idx].masked) ++ag.masked;
      } catch (const std::exception& e) {
        ag.points[idx].masked = true;
        ag.points[idx].mask_reason = e.what();
        ++ag.masked;
      }
    }
  return ag;
}

json export_adjoint_json(const RunConfig& cfg, const SurfaceChart& chart,
                         const AdjointGrid& ag) {
  json j;
  j["nu"] = ag.grid.nu;
  j["nv"] = ag.grid.nv;
  j["domain"] = {{"u0", chart.domain.u0}, {"u1", chart.domain.u1},
                 {"v0", chart.domain.v0}, {"v1", chart.domain.v1},
                 {"periodic_u", chart.domain.periodic_u},
                 {"periodic_v", chart.domain.periodic_v}};
  json pts = json::array();
  for (const auto& ap : ag.points) {
    if (ap.masked) {
      pts.push_back(nullptr);
      continue;
    }
    const CVec y = jv_value(ap.Ytilde);
    json p = json::array();
    for (size_t c = 1; c < y.size(); ++c)
      p.push_back(y[c].real() / y[0].real());
    pts.push_back(p);
  }
  j["points"] = pts;
  // Exact regeneration data: the points above are samples; jets are
  // re-derived from the generator on re-ingestion.
  j["generator"] = {{"chart", cfg.chart}, {"branch", cfg.branch},
                    {"eps", cfg.eps}, {"lorentz_seed", cfg.lorentz_seed},
                    {"grid", cfg.grid}};
  return j;
}

int cmd_adjoint(const RunConfig& cfg) {
  const SurfaceChart chart = make_chart(cfg.chart, cfg);
  const GridSpec grid = parse_grid(cfg.grid);
  const MuBranch branch =
      parse_branch(cfg.branch.empty() ? "swillmore" : cfg.branch);
  const AdjointGrid ag = build_adjoint(chart, grid, branch);

  FieldGrid fields;
  for (const char* n : {"mu_re", "mu_im", "sigma", "discriminant_abs"})
    fields[n].assign(grid.nu, std::vector<double>(grid.nv, 0.0));
  ResidualReport summary;
  double roundtrip = 0.0;
  int unmasked = 0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      const int idx = i * grid.nv + j;
      const AdjointPoint& ap = ag.points[idx];
      if (ap.masked) continue;
      ++unmasked;
      fields["mu_re"][i][j] = ap.mu.value().real();
      fields["mu_im"][i][j] = ap.mu.value().imag();
      fields["sigma"][i][j] = ap.sigma.value().real();
      fields["discriminant_abs"][i][j] = std::abs(ap.discriminant);
      report_max(summary, duality_check(ag.fps[idx], ap));

      // Round trip: the adjoint of the adjoint, against the original point.
      try {
        const FramePoint ft = frame_at(ap.Ytilde);
        const AdjointPoint back = adjoint_point(ft, ap.mutilde, 1e-4);
        if (!back.masked) {
          const CVec y0 = jv_value(ag.fps[idx].Y);
          const CVec y2 = jv_value(back.Ytilde);
          double d = 0.0;
          for (size_t c = 1; c < y0.size(); ++c)
            d = std::max(d, std::abs(y2[c].real() / y2[0].real() -
                                     y0[c].real() / y0[0].real()));
          roundtrip = std::max(roundtrip, d);
        }
      } catch (const std::exception&) {
        // Degenerate back-transform points are simply not counted.
      }
    }

  const double masked_fraction =
      double(ag.masked) / double(grid.nu * grid.nv);
  json rep = report_head(cfg);
  json s;
  for (const auto& [k, v] : summary) s[k] = v;
  s["roundtrip"] = roundtrip;
  rep["summary"] = s;
  rep["unmasked"] = unmasked;
  rep["masked_fraction"] = masked_fraction;
  if (!cfg.export_path.empty()) {
    std::ofstream f(cfg.export_path);
    if (!f)
      throw std::runtime_error("cannot open export file: " + cfg.export_path);
    f << export_adjoint_json(cfg, chart, ag).dump(2) << "\n";
  }
  emit(cfg, rep, fields, ag.us, ag.vs);
  return masked_fraction > 0.5 ? kExitMasked : 0;
}

// ----- pair ---------------------------------------------------------------

// Supplier of the second lift's jets at a grid point.
using YhatSource = std::function<JetVec(const FramePoint&, int, int)>;

int run_pair(const RunConfig& cfg, bool as_pairmap) {
  const SurfaceChart chart = make_chart(cfg.chart, cfg);
  const GridSpec grid = parse_grid(cfg.grid);

  int K = 6;
  YhatSource source;
  std::unique_ptr<AdjointGrid> ag;
  std::unique_ptr<SurfaceChart> chart2;
  if (!cfg.adjoint_in.empty()) {
    // Re-ingest an exported adjoint surface: jets are regenerated exactly
    // from the embedded generator, and checked against the stored samples.
    std::ifstream f(cfg.adjoint_in);
    if (!f)
      throw std::invalid_argument("cannot open adjoint file: " + cfg.adjoint_in);
    json in = json::parse(f);
    RunConfig gen = cfg;
    gen.chart = in["generator"]["chart"].get<std::string>();
    gen.branch = in["generator"]["branch"].get<std::string>();
    gen.eps = in["generator"]["eps"].get<double>();
    gen.lorentz_seed = in["generator"]["lorentz_seed"].get<unsigned long>();
    if (in["nu"].get<int>() != grid.nu || in["nv"].get<int>() != grid.nv)
      throw std::invalid_argument("adjoint file grid does not match --grid");
    const SurfaceChart gchart = make_chart(gen.chart, gen);
    K = 9;
    ag = std::make_unique<AdjointGrid>(
        build_adjoint(gchart, grid, parse_branch(gen.branch)));
    for (int idx = 0; idx < grid.nu * grid.nv; ++idx) {
      if (ag->points[idx].masked != in["points"][idx].is_null())
        throw std::runtime_error("adjoint file mask mismatch");
      if (ag->points[idx].masked) continue;
      const CVec y = jv_value(ag->points[idx].Ytilde);
      for (size_t c = 1; c < y.size(); ++c)
        if (std::abs(y[c].real() / y[0].real() -
                     in["points"][idx][c - 1].get<double>()) > 1e-8)
          throw std::runtime_error("adjoint file samples disagree");
    }
    source = [&ag, &grid](const FramePoint&, int i, int j) {
      const auto& ap = ag->points[i * grid.nv + j];
      if (ap.masked) throw SingularJetError("masked adjoint point");
      return ap.Ytilde;
    };
  } else if (!cfg.branch.empty()) {
    K = 9;
    ag = std::make_unique<AdjointGrid>(
        build_adjoint(chart, grid, parse_branch(cfg.branch)));
    source = [&ag, &grid](const FramePoint&, int i, int j) {
      const auto& ap = ag->points[i * grid.nv + j];
      if (ap.masked) throw SingularJetError("masked adjoint point");
      return ap.Yhat;
    };
  } else if (!cfg.chart2.empty()) {
    chart2 = std::make_unique<SurfaceChart>(make_chart(cfg.chart2, cfg));
    source = [&chart2](const FramePoint&, int, int) { return JetVec{}; };
  } else {
    source = [](const FramePoint& fp, int, int) { return fp.N; };
  }

  const auto us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                            chart.domain.periodic_u);
  const auto vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                            chart.domain.periodic_v);

  FieldGrid fields;
  const std::vector<std::string> names =
      as_pairmap
          ? std::vector<std::string>{"theta_re", "theta_im", "rho_re",
                                     "rho_im", "harmonic_residual"}
          : std::vector<std::string>{"theta_re", "theta_im", "rho_re",
                                     "rho_im", "touch", "cotouch"};
  for (const auto& n : names)
    fields[n].assign(grid.nu, std::vector<double>(grid.nv, 0.0));

  std::vector<std::vector<Complex>> rho_grid(
      grid.nu, std::vector<Complex>(grid.nv, Complex(0.0)));
  double sup_theta = 0.0, sup_rho = 0.0, sphere_identity = 0.0;
  double cross_theta = 0.0, cross_rho = 0.0, sup_harmonic = 0.0;
  int touch_count = 0, cotouch_count = 0, masked = 0;
  for (int i = 0; i < grid.nu; ++i)
    for (int j = 0; j < grid.nv; ++j) {
      JetVec Yhat_raw;
      FramePoint fp;
      try {
        fp = frame_at_point(chart, us[i], vs[j], K);
        Yhat_raw = chart2 ? canonical_lift_at(*chart2, us[i], vs[j], K)
                          : source(fp, i, j);
      } catch (const std::exception&) {
        ++masked;
        continue;
      }
      const JetVec Yhat = normalize_pair(fp.Y, Yhat_raw);
      const PairPoint pp = pair_invariants(fp, Yhat);
      const Complex th = pp.theta.value();
      const Complex rh = pp.rho.value();
      rho_grid[i][j] = rh;
      fields["theta_re"][i][j] = th.real();
      fields["theta_im"][i][j] = th.imag();
      fields["rho_re"][i][j] = rh.real();
      fields["rho_im"][i][j] = rh.imag();
      sup_theta = std::max(sup_theta, std::abs(th));
      sup_rho = std::max(sup_rho, std::abs(rh));
      if (as_pairmap) {
        const PairMapPoint pm = pairmap_fundamental(fp.Y, Yhat);
        fields["harmonic_residual"][i][j] = pm.harmonic_residual;
        sup_harmonic = std::max(sup_harmonic, pm.harmonic_residual);
        cross_theta = std::max(cross_theta, std::abs(pm.hz_hz - th));
        cross_rho = std::max(
            cross_rho, std::abs(pm.hz_hzb - 0.5 * (rh + std::conj(rh))));
      } else {
        const bool touch = std::abs(rh) < cfg.tol;
        const bool cotouch = std::abs(th) < cfg.tol;
        fields["touch"][i][j] = touch ? 1.0 : 0.0;
        fields["cotouch"][i][j] = cotouch ? 1.0 : 0.0;
        touch_count += touch;
        cotouch_count += cotouch;
        const auto [dt, dr] = tangent_sphere_check(fp, Yhat, pp);
        sphere_identity = std::max(sphere_identity, dt + dr);
      }
    }

  const int total = grid.nu * grid.nv;
  json rep = report_head(cfg);
  json s;
  if (as_pairmap) {
    s["theta"] = sup_theta;
    s["rho"] = sup_rho;
    s["energy"] = pair_energy(rho_grid, chart.domain, grid);
    s["harmonic_residual"] = sup_harmonic;
    s["fundamental_theta_gap"] = cross_theta;
    s["fundamental_rho_gap"] = cross_rho;
  } else {
    s["theta_sup"] = sup_theta;
    s["rho_sup"] = sup_rho;
    s["touch_fraction"] = double(touch_count) / total;
    s["cotouch_fraction"] = double(cotouch_count) / total;
    s["sphere_identity"] = sphere_identity;
  }
  rep["summary"] = s;
  rep["masked_fraction"] = double(masked) / total;
  emit(cfg, rep, fields, us, vs);
  return masked > total / 2 ? kExitMasked : 0;
}

// ----- quat ---------------------------------------------------------------

int cmd_quat(const RunConfig& cfg) {
  const OrientedPlane4 U1 = make_plane({1, 0, 0, 0}, {0, 1, 0, 0});
  const OrientedPlane4 U2 = make_plane({0, 0, 1, 0}, {0, 0, 0, 1});
  const ResidualReport rep =
      equivalence_check(U1, U2, cfg.trials, cfg.seed, cfg.tol);
  json j = report_head(cfg);
  json s;
  for (const auto& [k, v] : rep) s[k] = v;
  j["summary"] = s;
  emit(cfg, j, {}, {}, {});
  return rep.at("disagreements") == 0.0 ? 0 : kExitDegenerate;
}

// ----- verify-all ---------------------------------------------------------

int cmd_verify_all(const RunConfig& base) {
  struct Check {
    std::string name;
    double value;
    double bound;
  };
  std::vector<Check> checks;
  auto add = [&](const std::string& n, double v, double b) {
    checks.push_back({n, v, b});
  };

  for (const std::string name :
       {"sphere", "clifford", "perturbed-clifford", "veronese"}) {
    RunConfig cfg = base;
    cfg.chart = name;
    const SurfaceChart chart = make_chart(name, cfg);
    const GridSpec grid{16, 16};
    const auto us = grid_axis(chart.domain.u0, chart.domain.u1, grid.nu,
                              chart.domain.periodic_u);
    const auto vs = grid_axis(chart.domain.v0, chart.domain.v1, grid.nv,
                              chart.domain.periodic_v);
    ResidualReport summary;
    for (double u : us)
      for (double v : vs)
        report_max(summary, structure_residuals(frame_at_point(chart, u, v)));
    add(name + "/frame", std::max({summary["nullity"], summary["conformality"],
                                   summary["normalization"], summary["hill"]}),
        1e-9);
    add(name + "/integrability",
        std::max({summary["gauss"], summary["codazzi"], summary["ricci"]}),
        1e-8);
    if (name == "clifford" || name == "veronese" || name == "sphere")
      add(name + "/willmore", summary["willmore"], 1e-8);
  }

  {
    RunConfig cfg = base;
    cfg.chart = "clifford";
    cfg.branch = "swillmore";
    const SurfaceChart chart = make_chart("clifford", cfg);
    const AdjointGrid ag =
        build_adjoint(chart, GridSpec{8, 8}, MuBranch::swillmore);
    ResidualReport summary;
    for (int idx = 0; idx < 64; ++idx)
      if (!ag.points[idx].masked)
        report_max(summary, duality_check(ag.fps[idx], ag.points[idx]));
    add("clifford/duality",
        std::max({summary["willmore"], summary["rho_dual"],
                  summary["back_theta"], summary["pairing"]}),
        1e-7);
  }

  {
    const ResidualReport rep = equivalence_check(
        make_plane({1, 0, 0, 0}, {0, 1, 0, 0}),
        make_plane({0, 0, 1, 0}, {0, 0, 0, 1}), 200, base.seed, base.tol);
    add("quat/equivalence", rep.at("disagreements"), 0.5);
  }

  json j = report_head(base);
  json list = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    const bool pass = c.value <= c.bound;
    ok = ok && pass;
    list.push_back({{"name", c.name}, {"value", c.value},
                    {"bound", c.bound}, {"pass", pass}});
    std::cerr << (pass ? "ok   " : "FAIL ") << c.name << "  " << c.value
              << " (bound " << c.bound << ")\n";
  }
  j["checks"] = list;
  j["ok"] = ok;
  emit(base, j, {}, {}, {});
  return ok ? 0 : kExitDegenerate;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_file;

  CLI::App app{"Conformal surface geometry toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--chart", cfg.chart, "catalog chart name");
    sub->add_option("--config", config_file, "TOML config file");
    sub->add_option("--grid", cfg.grid, "grid NUxNV");
    sub->add_option("--tol", cfg.tol, "tolerance");
    sub->add_option("--branch", cfg.branch,
                    "mu branch: quadratic|swillmore|hill");
    sub->add_option("--lorentz-seed", cfg.lorentz_seed,
                    "random Moebius transform seed (0 = identity)");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json|csv");
    sub->add_option("--eps", cfg.eps, "perturbed-clifford parameter");
  };
  CLI::App* c_inv = app.add_subcommand("invariants", "frame residual report");
  CLI::App* c_pair = app.add_subcommand("pair", "pair invariant report");
  CLI::App* c_adj = app.add_subcommand("adjoint", "adjoint transform report");
  CLI::App* c_pm = app.add_subcommand("pairmap", "point-pair map report");
  CLI::App* c_quat = app.add_subcommand("quat-check", "quaternionic checks");
  CLI::App* c_all = app.add_subcommand("verify-all", "run every check");
  for (CLI::App* sub : {c_inv, c_pair, c_adj, c_pm, c_quat, c_all})
    add_common(sub);
  c_pair->add_option("--chart2", cfg.chart2, "second chart");
  c_pair->add_option("--adjoint-in", cfg.adjoint_in,
                     "exported adjoint surface file");
  c_adj->add_option("--export", cfg.export_path, "adjoint surface grid path");
  c_quat->add_option("--trials", cfg.trials, "random plane pairs");
  c_quat->add_option("--seed", cfg.seed, "RNG seed");

  try {
    app.parse(argc, argv);
    if (!config_file.empty()) {
      apply_config_file(cfg, config_file);
      // Command-line values win over the file.
      app.clear();
      app.parse(argc, argv);
    }
    if (cfg.format != "json" && cfg.format != "csv")
      throw std::invalid_argument("format must be json or csv");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(c_inv)) { cfg.command = "invariants"; return cmd_invariants(cfg); }
    if (app.got_subcommand(c_pair)) { cfg.command = "pair"; return run_pair(cfg, false); }
    if (app.got_subcommand(c_adj)) { cfg.command = "adjoint"; return cmd_adjoint(cfg); }
    if (app.got_subcommand(c_pm)) { cfg.command = "pairmap"; return run_pair(cfg, true); }
    if (app.got_subcommand(c_quat)) { cfg.command = "quat-check"; return cmd_quat(cfg); }
    cfg.command = "verify-all";
    return cmd_verify_all(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "degeneracy: " << e.what() << "\n";
    return kExitDegenerate;
  }
}

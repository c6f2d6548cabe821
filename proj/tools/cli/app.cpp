#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "mlharm/mlharm.hpp"

namespace mlharm::cli {
namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> grid_radii;
  std::optional<unsigned> grid_angles;
  std::vector<std::string> overrides;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0" in output
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fixed15(double v) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += num(values[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Config blocks

MLParams parse_ml(const Config& c) {
  if (c.has("variant")) {
    const auto variant = parse_variant(c.get("variant"));
    if (!variant) throw ConfigError("unknown variant '" + c.get("variant") + "'");
    ReducedParams r;
    r.alpha = c.get_complex("alpha");
    if (c.has("beta")) r.beta = c.get_complex("beta");
    if (c.has("gamma")) r.gamma = c.get_complex("gamma");
    if (c.has("delta")) r.delta = c.get_complex("delta");
    if (c.has("q")) r.q = c.get_double("q");
    if (c.has("p")) r.p = c.get_double("p");
    return complete(*variant, r);
  }
  Complex alpha;
  if (c.has("preset")) {
    const auto& preset = c.get("preset");
    if (preset == "ruscheweyh") {
      alpha = 0.0;
    } else if (preset == "exponential") {
      alpha = 1.0;
    } else {
      throw ConfigError("unknown preset '" + preset + "'");
    }
    alpha = c.get_complex_or("alpha", alpha);
  } else {
    alpha = c.get_complex("alpha");
  }
  return MLParams(alpha, c.get_complex_or("beta", 1.0), c.get_complex_or("gamma", 1.0),
                  c.get_complex_or("delta", 1.0), c.get_double_or("q", 1.0),
                  c.get_double_or("p", 1.0));
}

FamilyParams parse_family(const Config& c, const MLParams& ml) {
  return FamilyParams(c.get_unsigned("m"), c.get_unsigned("n"), c.get_double("eta"), ml);
}

SampleGrid parse_grid(const Config& c, const Options& o, const SampleGrid& fallback) {
  std::vector<double> radii = fallback.radii();
  if (o.grid_radii) {
    radii = parse_double_list(*o.grid_radii);
  } else if (c.has("grid.radii")) {
    radii = c.get_double_list("grid.radii");
  }
  unsigned angles = fallback.angles_per_radius();
  if (o.grid_angles) {
    angles = *o.grid_angles;
  } else if (c.has("grid.angles")) {
    angles = c.get_unsigned("grid.angles");
  }
  return SampleGrid(std::move(radii), angles);
}

std::uint64_t parse_seed(const Config& c, const Options& o) {
  if (o.seed) return *o.seed;
  return c.get_u64_or("seed", kDefaultSeed);
}

// ---------------------------------------------------------------------------
// Map recipes

struct MapRecipe {
  enum class Kind { identity, coefficients, extremal, extreme_point, combination };
  Kind kind = Kind::identity;
  bool negative = false;
  std::vector<Complex> a, b;
  std::vector<double> a_mag, b_mag;
  std::size_t order = 0;
  std::optional<ExtremalWeights> extremal;
  ExtremeKind extreme_kind = ExtremeKind::h;
  std::size_t k = 0;
  std::optional<ExtremePointWeights> combination;

  bool needs_family() const {
    return kind == Kind::extremal || kind == Kind::extreme_point ||
           kind == Kind::combination || negative;
  }
};

struct BuiltMap {
  HarmonicMap map;
  std::optional<NegativeStyleMap> negative;
};

MapRecipe parse_map(const Config& c, const std::string& prefix) {
  MapRecipe r;
  const auto key = [&prefix](const char* name) { return prefix + "map." + name; };
  const std::string kind = c.get(prefix + "map");
  r.order = c.get_unsigned_or(key("order"), 0);
  if (kind == "identity") {
    r.kind = MapRecipe::Kind::identity;
  } else if (kind == "coefficients") {
    r.kind = MapRecipe::Kind::coefficients;
    const std::string style = c.get_or(key("style"), "generic");
    if (style == "negative") {
      r.negative = true;
      if (c.has(key("a"))) r.a_mag = c.get_double_list(key("a"));
      if (c.has(key("b"))) r.b_mag = c.get_double_list(key("b"));
      for (double v : r.a_mag) {
        if (v < 0.0) throw ConfigError(key("a") + ": negative-style magnitudes must be >= 0");
      }
      for (double v : r.b_mag) {
        if (v < 0.0) throw ConfigError(key("b") + ": negative-style magnitudes must be >= 0");
      }
      if (!r.b_mag.empty() && !(r.b_mag[0] < 1.0)) {
        throw ConfigError(key("b") + ": requires |b_1| < 1");
      }
    } else if (style == "generic") {
      if (c.has(key("a"))) r.a = c.get_complex_list(key("a"));
      if (c.has(key("b"))) r.b = c.get_complex_list(key("b"));
      if (!r.b.empty() && !(std::abs(r.b[0]) < 1.0)) {
        throw ConfigError(key("b") + ": requires |b_1| < 1");
      }
    } else {
      throw ConfigError(key("style") + ": expected 'generic' or 'negative'");
    }
  } else if (kind == "extremal") {
    r.kind = MapRecipe::Kind::extremal;
    std::vector<Complex> x, y;
    if (c.has(key("x"))) x = c.get_complex_list(key("x"));
    if (c.has(key("y"))) y = c.get_complex_list(key("y"));
    r.extremal.emplace(std::move(x), std::move(y));
  } else if (kind == "extreme_point") {
    r.kind = MapRecipe::Kind::extreme_point;
    const std::string which = c.get(key("kind"));
    if (which == "h") {
      r.extreme_kind = ExtremeKind::h;
    } else if (which == "g") {
      r.extreme_kind = ExtremeKind::g;
    } else {
      throw ConfigError(key("kind") + ": expected 'h' or 'g'");
    }
    r.k = c.get_unsigned(key("k"));
    if (r.k < 1) throw ConfigError(key("k") + ": must be >= 1");
  } else if (kind == "combination") {
    r.kind = MapRecipe::Kind::combination;
    std::vector<double> X, Y;
    if (c.has(key("X"))) X = c.get_double_list(key("X"));
    if (c.has(key("Y"))) Y = c.get_double_list(key("Y"));
    r.combination.emplace(std::move(X), std::move(Y));
  } else {
    throw ConfigError(prefix + "map: unknown map kind '" + kind + "'");
  }
  return r;
}

BuiltMap build(const MapRecipe& r, const FamilyParams* fp) {
  auto negative = [](NegativeStyleMap f) {
    HarmonicMap m = f.map();
    return BuiltMap{std::move(m), std::move(f)};
  };
  switch (r.kind) {
    case MapRecipe::Kind::identity:
      if (fp) {
        return negative(NegativeStyleMap::identity(
            fp->m(), r.order ? r.order : HarmonicMap::kDefaultOrder));
      }
      return BuiltMap{HarmonicMap::identity(r.order ? r.order : HarmonicMap::kDefaultOrder),
                      std::nullopt};
    case MapRecipe::Kind::coefficients:
      if (r.negative) {
        return negative(
            NegativeStyleMap(r.a_mag, r.b_mag, NegativeStyleMap::sign_for(fp->m()), r.order));
      }
      return BuiltMap{HarmonicMap(r.a, r.b, r.order), std::nullopt};
    case MapRecipe::Kind::extremal:
      return BuiltMap{extremal_map(*fp, *r.extremal, r.order), std::nullopt};
    case MapRecipe::Kind::extreme_point:
      return negative(extreme_point(*fp, r.extreme_kind, r.k, r.order));
    case MapRecipe::Kind::combination:
      return negative(combine_extreme_points(*fp, *r.combination, r.order));
  }
  throw ConfigError("unreachable map kind");
}

// ---------------------------------------------------------------------------
// Report writers

void write_report(std::ostream& os, const MembershipReport& r) {
  os << "test = " << to_string(r.test) << '\n'
     << "sum = " << num(r.sum_value) << '\n'
     << "threshold = " << num(r.threshold) << '\n'
     << "margin = " << num(r.margin) << '\n'
     << "verdict = " << to_string(r.verdict) << '\n'
     << "tail_bound = " << num(r.tail_bound) << '\n'
     << "boundary_tol = " << num(r.boundary_tol) << '\n'
     << "flags = " << (r.boundary_parameters ? "boundary_parameters" : "none") << '\n';
}

void write_report(std::ostream& os, const VerificationReport& r) {
  os << "min_quotient_re = " << num(r.min_quotient_re) << '\n'
     << "min_sense_margin = " << num(r.min_sense_margin) << '\n'
     << "distortion_violations = " << r.distortion_violations << '\n'
     << "worst_point = " << num(r.worst_point.real()) << ',' << num(r.worst_point.imag()) << '\n'
     << "passed = " << (r.passed ? "true" : "false") << '\n'
     << "tolerance = " << num(r.tolerance) << '\n'
     << "samples = " << r.samples << '\n'
     << "flags = " << (r.monotonicity_warning ? "monotonicity_warning" : "none") << '\n';
}

int verdict_exit(Verdict v) { return v == Verdict::violator ? kExitViolation : kExitOk; }

// Each subcommand validates everything first and returns a deferred computation.
using Job = std::function<int(std::ostream& out, std::ostream& err)>;

Job prepare_ml_eval(const Config& c, const Options&) {
  const MLParams ml = parse_ml(c);
  const Complex z = c.get_complex("z");
  return [=](std::ostream& out, std::ostream&) {
    const Complex v = ml_eval(ml, z);
    out << fixed15(v.real()) << '\t' << fixed15(v.imag()) << '\n';
    return kExitOk;
  };
}

Job prepare_weights(const Config& c, const Options&) {
  const FamilyParams fp = parse_family(c, parse_ml(c));
  const unsigned K = c.get_unsigned_or("K", 10);
  if (K < 1) throw ConfigError("K: must be >= 1");
  return [=](std::ostream& out, std::ostream& err) {
    const FamilyWeights w(fp, K);
    out << "k,lambda_m,lambda_n,analytic,coanalytic\n";
    for (std::size_t k = 1; k <= K; ++k) {
      out << k << ',' << num(w.lambda_m(k)) << ',' << num(w.lambda_n(k)) << ','
          << num(w.analytic(k)) << ',' << num(w.coanalytic(k)) << '\n';
    }
    if (!w.monotone()) err << "warning: combined weights are not monotone in k\n";
    return kExitOk;
  };
}

Job prepare_membership(const Config& c, const Options&) {
  const FamilyParams fp = parse_family(c, parse_ml(c));
  const MapRecipe recipe = parse_map(c, "");
  const std::string test = c.get_or("test", "auto");
  if (test != "auto" && test != "sufficiency" && test != "necessity") {
    throw ConfigError("test: expected 'auto', 'sufficiency' or 'necessity'");
  }
  return [=](std::ostream& out, std::ostream&) {
    const BuiltMap f = build(recipe, &fp);
    const bool necessity = test == "necessity" || (test == "auto" && f.negative.has_value());
    if (necessity && !f.negative) {
      throw ConfigError("test: necessity requires a negative-style map");
    }
    const auto report = necessity ? necessity_check(*f.negative, fp) : sufficiency_sum(f.map, fp);
    write_report(out, report);
    return verdict_exit(report.verdict);
  };
}

void write_coefficients(std::ostream& out, const HarmonicMap& f) {
  out << "k,re_a,im_a,re_b,im_b\n";
  for (std::size_t k = 1; k <= f.order(); ++k) {
    const Complex a = f.a(k);
    const Complex b = static_cast<double>(f.co_sign()) * f.b(k);
    out << k << ',' << num(a.real()) << ',' << num(a.imag()) << ',' << num(b.real()) << ','
        << num(b.imag()) << '\n';
  }
}

Job prepare_extremal(const Config& c, const Options&) {
  const FamilyParams fp = parse_family(c, parse_ml(c));
  const MapRecipe recipe = parse_map(c, "");
  return [=](std::ostream& out, std::ostream&) {
    write_coefficients(out, build(recipe, &fp).map);
    return kExitOk;
  };
}

Job prepare_distortion(const Config& c, const Options& o) {
  const FamilyParams fp = parse_family(c, parse_ml(c));
  const double b1 = c.get_double_or("b1", 0.0);
  const SampleGrid grid =
      parse_grid(c, o, SampleGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 1));
  return [=](std::ostream& out, std::ostream& err) {
    out << "r,lower,upper\n";
    bool monotone = true;
    for (double r : grid.radii()) {
      const auto bounds = distortion_bounds(fp, b1, r);
      monotone = monotone && bounds.monotone;
      out << num(r) << ',' << num(bounds.lower) << ',' << num(bounds.upper) << '\n';
    }
    if (!monotone) err << "warning: combined weights are not monotone; bounds are unverified\n";
    return kExitOk;
  };
}

Job prepare_convolve(const Config& c, const Options&) {
  const FamilyParams fp_eta = parse_family(c, parse_ml(c));
  const FamilyParams fp_rho = fp_eta.with_eta(c.get_double_or("rho", fp_eta.eta()));
  const MapRecipe f_recipe = parse_map(c, "");
  const MapRecipe g_recipe = parse_map(c, "F.");
  return [=](std::ostream& out, std::ostream&) {
    const BuiltMap f = build(f_recipe, &fp_eta);
    const BuiltMap g = build(g_recipe, &fp_rho);
    if (!f.negative || !g.negative) {
      throw ConfigError("convolve: both maps must be negative-style");
    }
    const auto report = convolution_closure_check(*f.negative, *g.negative, fp_eta, fp_rho);
    const auto h = convolve(*f.negative, *g.negative);
    write_report(out, report);
    std::vector<double> a, b;
    for (std::size_t k = 2; k <= h.order(); ++k) a.push_back(h.a_mag(k));
    for (std::size_t k = 1; k <= h.order(); ++k) b.push_back(h.b_mag(k));
    out << "a_magnitudes = " << join(a) << '\n' << "b_magnitudes = " << join(b) << '\n';
    return verdict_exit(report.verdict);
  };
}

Job prepare_verify(const Config& c, const Options& o) {
  const FamilyParams fp = parse_family(c, parse_ml(c));
  const std::string mode = c.get_or("verify.mode", c.has("map") ? "member" : "suite");
  const std::uint64_t seed = parse_seed(c, o);
  if (mode == "member") {
    const SampleGrid grid = parse_grid(c, o, SampleGrid::standard());
    const MapRecipe recipe = parse_map(c, "");
    return [=](std::ostream& out, std::ostream&) {
      const auto r = verify_member(build(recipe, &fp).map, fp, grid);
      write_report(out, r);
      return r.passed ? kExitOk : kExitViolation;
    };
  }
  if (mode == "suite") {
    const SampleGrid grid = parse_grid(c, o, SampleGrid::standard());
    const unsigned trials = c.get_unsigned_or("trials", 100);
    return [=](std::ostream& out, std::ostream&) {
      const auto r = verify_member_suite(fp, trials, grid, seed);
      write_report(out, r);
      return r.passed ? kExitOk : kExitViolation;
    };
  }
  if (mode == "distortion") {
    const SampleGrid grid = parse_grid(
        c, o, SampleGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 64));
    const unsigned trials = c.get_unsigned_or("trials", 50);
    const double b1 = c.get_double_or("b1", 0.0);
    return [=](std::ostream& out, std::ostream&) {
      const auto r = verify_distortion(fp, b1, trials, grid, seed);
      write_report(out, r);
      return r.passed ? kExitOk : kExitViolation;
    };
  }
  throw ConfigError("verify.mode: expected 'member', 'suite' or 'distortion'");
}

Job prepare_render(const Config& c, const Options& o) {
  const MapRecipe recipe = parse_map(c, "");
  std::optional<FamilyParams> fp;
  if (recipe.needs_family() || c.has("m")) fp.emplace(parse_family(c, parse_ml(c)));
  const SampleGrid grid = parse_grid(c, o, SampleGrid::standard());
  return [=](std::ostream& out, std::ostream&) {
    const HarmonicMap f = build(recipe, fp ? &*fp : nullptr).map;
    out << "re_z,im_z,re_f,im_f\n";
    for (std::size_t i = 0; i < grid.radii().size(); ++i) {
      for (unsigned j = 0; j < grid.angles_per_radius(); ++j) {
        const Complex z = grid.point(i, j);
        const Complex w = eval(f, z);
        out << num(z.real()) << ',' << num(z.imag()) << ',' << num(w.real()) << ','
            << num(w.imag()) << '\n';
      }
    }
    return kExitOk;
  };
}

struct Subcommand {
  const char* name;
  const char* description;
  Job (*prepare)(const Config&, const Options&);
};

constexpr Subcommand kSubcommands[] = {
    {"ml-eval", "Evaluate the generalized Mittag-Leffler function at z", prepare_ml_eval},
    {"weights", "Print operator weights Lambda_k for orders m and n", prepare_weights},
    {"membership", "Coefficient test of a map against the family", prepare_membership},
    {"extremal", "Print the coefficients of an extremal / extreme-point map", prepare_extremal},
    {"distortion", "Print distortion bounds r,lower,upper", prepare_distortion},
    {"convolve", "Convolve two negative-style maps and test closure", prepare_convolve},
    {"verify", "Sample quotient, sense-preservation or distortion checks", prepare_verify},
    {"render", "Export f over a polar grid as CSV", prepare_render},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Mittag-Leffler functions and harmonic univalent families"};
  app.name("mlharm");
  app.require_subcommand(1);

  Options opts;
  const Subcommand* chosen = nullptr;
  for (const auto& sc : kSubcommands) {
    auto* sub = app.add_subcommand(sc.name, sc.description);
    sub->add_option("--config", opts.config_path, "Key-value config file");
    sub->add_option("--out", opts.out_path, "Write output to this file instead of stdout");
    sub->add_option("--seed", opts.seed, "Seed for randomized suites");
    sub->add_option("--grid-radii", opts.grid_radii, "Comma-separated grid radii");
    sub->add_option("--grid-angles", opts.grid_angles, "Angles per grid radius");
    sub->add_option("overrides", opts.overrides, "Config overrides as key=value");
    sub->callback([&chosen, &sc] { chosen = &sc; });
  }

  std::vector<const char*> argv;
  argv.push_back("mlharm");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Job job;
  try {
    Config cfg = opts.config_path.empty() ? Config{} : Config::load(opts.config_path);
    for (const auto& kv : opts.overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + kv + "' is not key=value");
      }
      auto key = kv.substr(0, eq);
      auto value = kv.substr(eq + 1);
      cfg.set(key, value);
    }
    job = chosen->prepare(cfg, opts);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    code = job(buffer, err);
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NonPositiveWeight& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DegenerateDenominator& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opts.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!(file << buffer.str())) {
      err << "error: cannot write '" << opts.out_path << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace mlharm::cli

// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "mlharm/mlharm.hpp"
#include "oracles.hpp"
#include "regimes.hpp"

using mlharm::Complex;
using mlharm::ExtremeKind;
using mlharm::FamilyParams;
using mlharm::MLParams;
using mlharm::NegativeStyleMap;
using mlharm::Rng;
using mlharm::SampleGrid;
using mlharm::Verdict;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// 1. E with (1, 1, g, g, s, s) is exp(z).
Outcome exponential_reduction() {
  Rng rng(1001);
  const auto start = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double r = 2.0 * std::sqrt(rng.uniform());
    const Complex z = std::polar(r, rng.uniform(-std::numbers::pi, std::numbers::pi));
    const double g = rng.uniform(0.5, 3.0), s = rng.uniform(0.5, 2.0);
    const MLParams ml(1.0, 1.0, g, g, s, s);
    worst = std::max(worst, oracle::rel_err(mlharm::ml_eval(ml, z), std::exp(z)));
  }
  const double t = seconds_since(start);
  return {worst <= 1e-10 && t < 1.0, fmt("max rel err %.2e, %.3f s", worst, t)};
}

// 2. E with (2, 1) at w^2 is cosh(w).
Outcome hyperbolic_reduction() {
  Rng rng(1002);
  const MLParams ml(2.0, 1.0, 1.0, 1.0, 1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double w = rng.uniform(-2.0, 2.0);
    worst = std::max(worst, oracle::rel_err(mlharm::ml_eval(ml, w * w), Complex(std::cosh(w))));
  }
  return {worst <= 1e-10, fmt("max rel err %.2e", worst)};
}

// 3. Zero-alpha kernel weights are binomial coefficients.
Outcome ruscheweyh_reduction() {
  const auto ml = MLParams::ruscheweyh();
  double worst = 0.0;
  for (unsigned m = 0; m <= 10; ++m) {
    for (std::size_t k = 1; k <= 20; ++k) {
      worst = std::max(worst, std::abs(mlharm::weight(ml, m, k) - oracle::binomial(m + k - 1, k - 1)));
    }
  }
  return {worst <= 1e-9, fmt("max abs err %.2e over k<=20, m<=10", worst)};
}

// 4. Extremal maps make the sufficiency sum exactly 2.
Outcome sharpness() {
  Rng rng(1004);
  const auto pool = regimes::kernels();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto fp = regimes::random_family(rng, pool);
    const auto w = mlharm::random_extremal_weights(rng, rng.index(2, 9));
    const auto r = mlharm::sufficiency_sum(mlharm::extremal_map(fp, w), fp);
    worst = std::max(worst, std::abs(r.sum_value - 2.0));
  }
  return {worst <= 1e-10, fmt("max |sum - 2| = %.2e", worst)};
}

// 5. Members built from extreme points pass sampled verification.
Outcome sufficiency_behaviour() {
  Rng rng(1005);
  const auto grid = SampleGrid::standard();
  const auto start = Clock::now();
  int failed = 0;
  double q_slack = INFINITY, sense = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const auto fp = regimes::random_dominating_family(rng);
    const auto f = mlharm::random_member(rng, fp);
    const auto r = mlharm::verify_member(f.map(), fp, grid);
    failed += r.passed ? 0 : 1;
    q_slack = std::min(q_slack, r.min_quotient_re - fp.eta());
    sense = std::min(sense, r.min_sense_margin);
  }
  const double t = seconds_since(start);
  return {failed == 0 && q_slack > -1e-8 && sense > -1e-8 && t < 30.0,
          fmt("%.0f failures, min quotient-eta %.3e, min sense %.3e", failed, q_slack, sense) +
              fmt(", %.2f s", t)};
}

// 6. Violators are certified by a negative real-axis numerator.
Outcome necessity_certificate() {
  Rng rng(1006);
  const auto pool = regimes::kernels();
  int certified = 0;
  for (int i = 0; i < 20; ++i) {
    const auto fp = regimes::random_family(rng, pool);
    const auto f = mlharm::random_violator(rng, fp, 0.2);
    bool found = false;
    for (double mu : {0.9, 0.99, 0.999, 0.9999}) {
      found = found || mlharm::realaxis_numerator(f, fp, mu) < 0.0;
    }
    certified += found ? 1 : 0;
  }
  return {certified == 20, fmt("%.0f/20 certified", certified)};
}

// 7. Distortion bounds hold for members and are attained by h_2.
Outcome distortion() {
  Rng rng(1007);
  const SampleGrid grid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 64);
  std::size_t violations = 0;
  bool warned = false;
  for (int i = 0; i < 5; ++i) {
    const auto fp = regimes::random_monotone_family(rng);
    const double b1_max = (1 - fp.eta()) / (1 - fp.parity() * fp.eta());
    const double b1 = rng.uniform(0.0, 0.95 * std::min(b1_max, 0.99));
    const auto r = mlharm::verify_distortion(fp, b1, 10, grid, 2000 + i);
    violations += r.distortion_violations;
    warned = warned || r.monotonicity_warning;
  }

  const FamilyParams fp(1, 0, 0.0, MLParams::ruscheweyh());
  const auto h2 = mlharm::extreme_point(fp, ExtremeKind::h, 2);
  const SampleGrid half({0.5}, 64);
  double max_mod = 0.0;
  for (unsigned j = 0; j < half.angles_per_radius(); ++j) {
    max_mod = std::max(max_mod, std::abs(mlharm::eval(h2.map(), half.point(0, j))));
  }
  const double upper = mlharm::distortion_bounds(fp, 0.0, 0.5).upper;
  const double gap = std::max(std::abs(max_mod - upper), std::abs(upper - 0.625));
  return {violations == 0 && !warned && gap <= 1e-9,
          fmt("%.0f violations over 50 members, |max|f| - upper(0.5)| = %.2e", static_cast<double>(violations),
              gap)};
}

// 8. Convolution with a member at rho <= eta stays in the family at eta.
Outcome convolution_closure() {
  Rng rng(1008);
  int members = 0;
  for (int i = 0; i < 50; ++i) {
    const auto fp = regimes::random_dominating_family(rng);
    const FamilyParams fp_rho(fp.m(), fp.n(), rng.uniform(0.0, fp.eta()), fp.ml());
    const auto f = mlharm::random_member(rng, fp);
    const auto F = mlharm::random_member(rng, fp_rho);
    members += mlharm::convolution_closure_check(f, F, fp, fp_rho).verdict == Verdict::member ? 1 : 0;
  }
  return {members == 50, fmt("%.0f/50 member verdicts", members)};
}

// 9. Convex combinations stay in the family and average the sums.
Outcome convex_closure() {
  Rng rng(1009);
  const auto pool = regimes::kernels();
  int members = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto fp = regimes::random_family(rng, pool);
    const std::size_t count = rng.index(2, 6);
    std::vector<NegativeStyleMap> maps;
    std::vector<double> t;
    double total = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      maps.push_back(mlharm::random_member(rng, fp));
      t.push_back(rng.exponential());
      total += t.back();
    }
    for (double& v : t) v /= total;
    double expected = 0.0;
    for (std::size_t j = 0; j < count; ++j) expected += t[j] * mlharm::necessity_check(maps[j], fp).sum_value;
    const auto c = mlharm::convex_combine(maps, t, fp);
    members += c.report.verdict == Verdict::member ? 1 : 0;
    worst = std::max(worst, std::abs(c.report.sum_value - expected));
  }
  return {members == 50 && worst <= 1e-12, fmt("%.0f/50 members, max sum deviation %.2e", members, worst)};
}

// 10. Every CLI subcommand is byte-identical across runs.
#ifdef MLHARM_EXE
bool capture(const std::string& command, std::string& out, int& status) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return false;
  out.clear();
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return true;
}
#endif

Outcome determinism() {
#ifdef MLHARM_EXE
  const std::vector<std::string> commands{
      "ml-eval alpha=0.5+0.1i beta=1.5 gamma=2 delta=1.2 q=0.8 p=0.6 z=0.3-0.7i",
      "weights alpha=0.5 beta=2 gamma=1.5 m=3 n=1 eta=0.2 K=12",
      "membership preset=exponential m=2 n=1 eta=0.1 map=extremal map.x=0.5i map.y=0.25,-0.25",
      "extremal preset=ruscheweyh m=3 n=1 eta=0.2 map=combination map.X=0.5,0.2 map.Y=0.1,0.2",
      "distortion preset=ruscheweyh m=3 n=0 eta=0.4 b1=0.1",
      "convolve preset=ruscheweyh m=2 n=0 eta=0.3 rho=0.1 map=extreme_point map.kind=g map.k=3 "
      "F.map=combination F.map.X=0.5,0.5",
      "verify preset=ruscheweyh m=2 n=1 eta=0.3 trials=20 --seed 99",
      "verify preset=ruscheweyh m=2 n=1 eta=0.3 verify.mode=distortion trials=10 b1=0.2 --seed 5",
      "render preset=ruscheweyh m=1 n=0 eta=0 map=extreme_point map.kind=h map.k=3 --grid-angles 8",
  };
  std::size_t identical = 0;
  std::string failing;
  for (const auto& args : commands) {
    const std::string command = std::string("\"") + MLHARM_EXE + "\" " + args + " 2>&1";
    std::string a, b;
    int sa = -1, sb = -1;
    const bool ok = capture(command, a, sa) && capture(command, b, sb) && sa == 0 && sb == 0 &&
                    !a.empty() && a == b;
    if (ok) {
      ++identical;
    } else if (failing.empty()) {
      failing = ", first failure: " + args.substr(0, args.find(' '));
    }
  }
  return {identical == commands.size(),
          fmt("%.0f/%.0f subcommand runs identical", static_cast<double>(identical),
              static_cast<double>(commands.size())) + failing};
#else
  return {false, "command-line tool not built"};
#endif
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"exponential reduction", exponential_reduction},
      {"hyperbolic reduction", hyperbolic_reduction},
      {"binomial weights of the zero-alpha kernel", ruscheweyh_reduction},
      {"sharpness of the coefficient condition", sharpness},
      {"sufficiency: sampled members verify", sufficiency_behaviour},
      {"necessity certificate", necessity_certificate},
      {"distortion bounds and saturation", distortion},
      {"convolution closure", convolution_closure},
      {"convex-combination closure", convex_closure},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}

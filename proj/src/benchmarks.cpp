#include "lpbsa/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

namespace lpbsa::bench {

namespace {

using std::numbers::pi;

double sphere(std::span<const double> x, Rng*) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_2_22(std::span<const double> x, Rng*) {
  double sum = 0.0, prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

double schwefel_1_2(std::span<const double> x, Rng*) {
  double s = 0.0, partial = 0.0;
  for (double v : x) {
    partial += v;
    s += partial * partial;
  }
  return s;
}

double schwefel_2_21(std::span<const double> x, Rng*) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(std::span<const double> x, Rng*) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double step(std::span<const double> x, Rng*) {
  double s = 0.0;
  for (double v : x) {
    const double r = std::floor(v + 0.5);
    s += r * r;
  }
  return s;
}

double quartic_noise(std::span<const double> x, Rng* noise) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v2 = x[i] * x[i];
    s += static_cast<double>(i + 1) * v2 * v2;
  }
  return s + noise->uniform();
}

double schwefel_2_26(std::span<const double> x, Rng*) {
  double s = 0.0;
  for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double rastrigin(std::span<const double> x, Rng*) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
  return s;
}

double ackley(std::span<const double> x, Rng*) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0, cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * pi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x, Rng*) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - prod + 1.0;
}

double penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double penalized_1(std::span<const double> x, Rng*) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  const double s0 = std::sin(pi * y(0));
  double s = 10.0 * s0 * s0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double si = std::sin(pi * y(i + 1));
    s += (y(i) - 1.0) * (y(i) - 1.0) * (1.0 + 10.0 * si * si);
  }
  s += (y(n - 1) - 1.0) * (y(n - 1) - 1.0);
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
  return pi / static_cast<double>(n) * s + pen;
}

double penalized_2(std::span<const double> x, Rng*) {
  const std::size_t n = x.size();
  const double s0 = std::sin(3.0 * pi * x[0]);
  double s = s0 * s0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double si = std::sin(3.0 * pi * x[i + 1]);
    s += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + si * si);
  }
  const double sn = std::sin(2.0 * pi * x[n - 1]);
  s += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) * (1.0 + sn * sn);
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 5.0, 100.0, 4.0);
  return 0.1 * s + pen;
}

double shekel_foxholes(std::span<const double> x, Rng*) {
  constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
  double s = 0.0;
  for (std::size_t j = 0; j < 25; ++j) {
    const double a1 = grid[j % 5];
    const double a2 = grid[j / 5];
    s += 1.0 / (static_cast<double>(j + 1) + std::pow(x[0] - a1, 6) + std::pow(x[1] - a2, 6));
  }
  return 1.0 / (1.0 / 500.0 + s);
}

double kowalik(std::span<const double> x, Rng*) {
  constexpr std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
                                     0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
  constexpr std::array<double, 11> inv_b{0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double b = 1.0 / inv_b[i];
    const double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    s += r * r;
  }
  return s;
}

double six_hump_camel(std::span<const double> x, Rng*) {
  const double a = x[0], b = x[1];
  return 4 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3 + a * b - 4 * b * b + 4 * std::pow(b, 4);
}

double branin(std::span<const double> x, Rng*) {
  const double t = x[1] - 5.1 / (4 * pi * pi) * x[0] * x[0] + 5 / pi * x[0] - 6;
  return t * t + 10 * (1 - 1 / (8 * pi)) * std::cos(x[0]) + 10;
}

double goldstein_price(std::span<const double> x, Rng*) {
  const double a = x[0], b = x[1];
  const double p1 = 1 + (a + b + 1) * (a + b + 1) *
                            (19 - 14 * a + 3 * a * a - 14 * b + 6 * a * b + 3 * b * b);
  const double p2 = 30 + (2 * a - 3 * b) * (2 * a - 3 * b) *
                             (18 - 32 * a + 12 * a * a + 48 * b - 36 * a * b + 27 * b * b);
  return p1 * p2;
}

double hartman_3(std::span<const double> x, Rng*) {
  constexpr double a[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
  constexpr double c[4] = {1, 1.2, 3, 3.2};
  constexpr double p[4][3] = {{0.3689, 0.117, 0.2673},
                              {0.4699, 0.4387, 0.747},
                              {0.1091, 0.8732, 0.5547},
                              {0.03815, 0.5743, 0.8828}};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double e = 0.0;
    for (int j = 0; j < 3; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
    s -= c[i] * std::exp(-e);
  }
  return s;
}

BenchmarkFunction scalable(std::string id, std::string name, double lower, double upper,
                           BenchmarkFunction::Fn fn, double optimum, double location,
                           std::string description) {
  BenchmarkFunction f;
  f.id = std::move(id);
  f.name = std::move(name);
  f.box = {{lower, upper}};
  f.fn = std::move(fn);
  f.optimum_value = [optimum](std::size_t) { return optimum; };
  f.optimum_point = [location](std::size_t d) { return Genome(d, location); };
  f.optimum_description = std::move(description);
  return f;
}

BenchmarkFunction fixed(std::string id, std::string name, std::vector<Bounds> box,
                        BenchmarkFunction::Fn fn, double optimum, Genome location,
                        std::string description) {
  BenchmarkFunction f;
  f.id = std::move(id);
  f.name = std::move(name);
  f.scalable = false;
  f.default_dimension = box.size();
  f.min_dimension = box.size();
  f.box = std::move(box);
  f.fn = std::move(fn);
  f.optimum_value = [optimum](std::size_t) { return optimum; };
  f.optimum_point = [location](std::size_t) { return location; };
  f.optimum_description = std::move(description);
  return f;
}

std::vector<BenchmarkFunction> build_registry() {
  std::vector<BenchmarkFunction> r;
  r.push_back(scalable("TF1", "Sphere", -100, 100, sphere, 0.0, 0.0, "x = 0"));
  r.push_back(scalable("TF2", "Schwefel 2.22", -10, 10, schwefel_2_22, 0.0, 0.0, "x = 0"));
  r.back().note = "Also described in the literature as the Rastrigin slot; Rastrigin is TF9 here.";
  r.push_back(scalable("TF3", "Schwefel 1.2", -100, 100, schwefel_1_2, 0.0, 0.0, "x = 0"));
  r.push_back(scalable("TF4", "Schwefel 2.21", -100, 100, schwefel_2_21, 0.0, 0.0, "x = 0"));
  r.push_back(scalable("TF5", "Rosenbrock", -30, 30, rosenbrock, 0.0, 1.0, "x = 1"));
  r.back().min_dimension = 2;
  r.push_back(scalable("TF6", "Step", -100, 100, step, 0.0, 0.0, "x in [-0.5, 0.5)"));
  r.push_back(scalable("TF7", "Quartic with noise", -1.28, 1.28, quartic_noise, 0.0, 0.0,
                       "x = 0, noise-free part"));
  r.back().noisy = true;

  constexpr double kSchwefelArg = 420.96874657644923;
  constexpr double kSchwefelMin = -418.9828872724338;
  r.push_back(scalable("TF8", "Schwefel 2.26", -500, 500, schwefel_2_26, 0.0, kSchwefelArg,
                       "x = 420.9687..."));
  r.back().optimum_value = [](std::size_t d) { return kSchwefelMin * static_cast<double>(d); };

  r.push_back(scalable("TF9", "Rastrigin", -5.12, 5.12, rastrigin, 0.0, 0.0, "x = 0"));
  r.push_back(scalable("TF10", "Ackley", -32, 32, ackley, 0.0, 0.0, "x = 0"));
  r.push_back(scalable("TF11", "Griewank", -600, 600, griewank, 0.0, 0.0, "x = 0"));
  r.push_back(scalable("TF12", "Penalized 1", -50, 50, penalized_1, 0.0, -1.0, "x = -1"));
  r.push_back(scalable("TF13", "Penalized 2", -50, 50, penalized_2, 0.0, 1.0, "x = 1"));

  r.push_back(fixed("TF14", "Shekel's foxholes", {{-65.536, 65.536}, {-65.536, 65.536}},
                    shekel_foxholes, 0.9980038377944498, {-31.97833478053882, -31.978332295368574},
                    "x ~ (-31.978, -31.978)"));
  r.push_back(fixed("TF15", "Kowalik", {{-5, 5}, {-5, 5}, {-5, 5}, {-5, 5}}, kowalik,
                    0.00030748598780560557,
                    {0.19283345308129274, 0.1908362399907949, 0.1231172992771683,
                     0.13576599026903194},
                    "x ~ (0.1928, 0.1908, 0.1231, 0.1358)"));
  r.push_back(fixed("TF16", "Six-hump camel back", {{-5, 5}, {-5, 5}}, six_hump_camel,
                    -1.0316284534898776, {0.08984201652927098, -0.7126564013807202},
                    "x ~ (0.0898, -0.7127) and its mirror"));
  r.push_back(fixed("TF17", "Branin", {{-5, 10}, {0, 15}}, branin, 5.0 / (4.0 * pi),
                    {pi, 2.275}, "x = (pi, 2.275), (-pi, 12.275), (9.42478, 2.475)"));
  r.push_back(fixed("TF18", "Goldstein-Price", {{-2, 2}, {-2, 2}}, goldstein_price, 3.0, {0.0, -1.0},
                    "x = (0, -1)"));
  r.push_back(fixed("TF19", "Hartman 3", {{0, 1}, {0, 1}, {0, 1}}, hartman_3, -3.8627821478207554,
                    {0.11461434203082951, 0.5556488507905384, 0.8525469538460251},
                    "x ~ (0.1146, 0.5556, 0.8525)"));
  return r;
}

}  // namespace

std::vector<Bounds> BenchmarkFunction::bounds(std::size_t dimension) const {
  if (!scalable) return box;
  return std::vector<Bounds>(dimension, box.front());
}

void BenchmarkFunction::check_dimension(std::size_t dimension) const {
  if (scalable ? dimension < min_dimension : dimension != default_dimension) {
    throw InvalidInput(id + " does not accept dimension " + std::to_string(dimension));
  }
}

ObjectiveProblem BenchmarkFunction::problem(std::size_t dimension) const {
  const std::size_t d = dimension == 0 ? default_dimension : dimension;
  check_dimension(d);
  if (noisy) {
    return ObjectiveProblem::noisy(id, bounds(d), Sense::Minimize,
                                   [f = fn](std::span<const double> x, Rng& rng) { return f(x, &rng); });
  }
  return ObjectiveProblem::real(id, bounds(d), Sense::Minimize,
                                [f = fn](std::span<const double> x) { return f(x, nullptr); });
}

const std::vector<BenchmarkFunction>& registry() {
  static const std::vector<BenchmarkFunction> r = build_registry();
  return r;
}

const BenchmarkFunction& lookup(std::string_view id) {
  std::string key(id);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& f : registry()) {
    if (f.id == key) return f;
  }
  throw InvalidInput("unknown benchmark function '" + std::string(id) + "'");
}

double evaluate_tf(std::string_view id, std::span<const double> point, Rng* noise) {
  const auto& f = lookup(id);
  f.check_dimension(point.size());
  const auto b = f.bounds(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!b[i].contains(point[i])) {
      throw InvalidInput(f.id + ": component " + std::to_string(i) + " outside bounds");
    }
  }
  if (f.noisy && noise == nullptr) throw InvalidInput(f.id + " needs a noise stream");
  return f.fn(point, noise);
}

}  // namespace lpbsa::bench

#include "schwarz/nehari.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <math.h>  // boost 1.74 pchip calls unqualified isnan
#include <boost/math/interpolators/pchip.hpp>

namespace schwarz {

struct NehariFunction::Table {
  std::vector<double> x;
  std::vector<double> m;  // (1 - x^2)^2 p at the nodes
  boost::math::interpolators::pchip<std::vector<double>> spline;
  double mu;

  double weighted(double ax) const {
    const double last = x.back();
    if (ax <= last) return spline(ax);
    if (ax >= 1.0) return mu;
    return m.back() + (mu - m.back()) * (ax - last) / (1.0 - last);
  }
};

namespace {

constexpr double kPiSqQuarter = std::numbers::pi * std::numbers::pi / 4.0;

std::vector<double> validation_grid() {
  std::vector<double> g;
  for (int k = 0; k <= 999; ++k) g.push_back(k * 1e-3);
  for (int j = 12; j <= 24; ++j) g.push_back(1.0 - std::pow(10.0, -j / 4.0));
  std::sort(g.begin(), g.end());
  return g;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

NehariFunction NehariFunction::classical() {
  NehariFunction p;
  p.kind_ = NehariKind::Classical;
  p.mu_ = 1.0;
  return p;
}

NehariFunction NehariFunction::constant() {
  NehariFunction p;
  p.kind_ = NehariKind::Constant;
  p.mu_ = 0.0;
  return p;
}

NehariFunction NehariFunction::linear() {
  NehariFunction p;
  p.kind_ = NehariKind::Linear;
  p.mu_ = 0.0;
  return p;
}

NehariFunction NehariFunction::parametric(double t) {
  if (!(t > 1.0 && t < 2.0)) throw InputError("parametric Nehari weight needs 1 < t < 2, got " + num(t));
  NehariFunction p;
  p.kind_ = NehariKind::Parametric;
  p.t_ = t;
  p.mu_ = t * (2.0 - t);
  return p;
}

NehariFunction NehariFunction::custom(std::vector<double> x, std::vector<double> pv) {
  if (x.size() != pv.size()) throw InputError("custom weight: x and p columns differ in length");
  if (x.size() < 4) throw InputError("custom weight: need at least 4 nodes");
  if (x.front() != 0.0) throw InputError("custom weight: table must start at x = 0");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] >= 0.0 && x[k] < 1.0)) throw InputError("custom weight: x = " + num(x[k]) + " outside [0, 1)");
    if (k > 0 && !(x[k] > x[k - 1])) throw InputError("custom weight: x not strictly increasing at row " + std::to_string(k + 1));
    if (!(pv[k] > 0.0) || !std::isfinite(pv[k])) throw InputError("custom weight: p must be positive and finite at x = " + num(x[k]));
  }
  if (x.back() < 0.99) {
    throw InputError("custom weight: insufficient data near x = 1 to determine mu (last node " + num(x.back()) + " < 0.99)");
  }
  std::vector<double> m(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double w = 1.0 - x[k] * x[k];
    m[k] = w * w * pv[k];
  }
  // Limit at x = 1 by linear extrapolation in (1 - x) through the last two nodes.
  const std::size_t n = x.size();
  const double slope = (m[n - 1] - m[n - 2]) / (x[n - 1] - x[n - 2]);
  const double mu = std::max(0.0, m[n - 1] + slope * (1.0 - x[n - 1]));

  NehariFunction p;
  p.kind_ = NehariKind::Custom;
  p.mu_ = mu;
  p.mu_method_ = "linear extrapolation of (1-x^2)^2 p from the last two nodes";
  auto xs = x;
  auto ms = m;
  p.table_ = std::make_shared<const Table>(
      Table{std::move(x), std::move(m), boost::math::interpolators::pchip<std::vector<double>>(std::move(xs), std::move(ms)), mu});
  const NehariCertificate cert = p.validate();
  if (!cert.valid()) throw InputError("custom weight rejected: " + cert.failure);
  return p;
}

NehariFunction NehariFunction::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open weight file " + path);
  std::vector<double> xs, ps;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError(path + ":" + std::to_string(row) + ": expected 'x,p'");
    try {
      std::size_t used = 0;
      const double x = std::stod(line.substr(0, comma), &used);
      const double p = std::stod(line.substr(comma + 1));
      xs.push_back(x);
      ps.push_back(p);
    } catch (const std::logic_error&) {
      if (row == 1 && xs.empty()) continue;  // header
      throw InputError(path + ":" + std::to_string(row) + ": malformed number");
    }
  }
  return custom(std::move(xs), std::move(ps));
}

NehariFunction NehariFunction::from_spec(const std::string& spec) {
  if (spec == "classical") return classical();
  if (spec == "const" || spec == "constant") return constant();
  if (spec == "linear") return linear();
  if (spec.rfind("param:", 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string arg = spec.substr(6);
      const double t = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return parametric(t);
    } catch (const std::logic_error&) {
      throw InputError("malformed weight spec '" + spec + "'");
    }
  }
  if (spec.rfind("file:", 0) == 0) return from_csv(spec.substr(5));
  throw InputError("unknown weight '" + spec + "' (expected classical|const|linear|param:<t>|file:<path>)");
}

double NehariFunction::operator()(double x) const {
  const double w = 1.0 - x * x;
  switch (kind_) {
    case NehariKind::Classical: return 1.0 / (w * w);
    case NehariKind::Constant: return kPiSqQuarter;
    case NehariKind::Linear: return 2.0 / w;
    case NehariKind::Parametric: return t_ * (1.0 - (t_ - 1.0) * x * x) / (w * w);
    case NehariKind::Custom: return table_->weighted(std::abs(x)) / (w * w);
  }
  return 0.0;
}

double NehariFunction::weighted(double x) const {
  const double ax = std::min(std::abs(x), 1.0);
  const double w = 1.0 - ax * ax;
  switch (kind_) {
    case NehariKind::Classical: return 1.0;
    case NehariKind::Constant: return kPiSqQuarter * w * w;
    case NehariKind::Linear: return 2.0 * w;
    case NehariKind::Parametric: return t_ * (1.0 - (t_ - 1.0) * ax * ax);
    case NehariKind::Custom: return table_->weighted(ax);
  }
  return 0.0;
}

Weight NehariFunction::weight(double scale) const {
  NehariFunction self = *this;
  return [self, scale](double x) { return scale * self(x); };
}

std::string NehariFunction::name() const {
  switch (kind_) {
    case NehariKind::Classical: return "classical";
    case NehariKind::Constant: return "const";
    case NehariKind::Linear: return "linear";
    case NehariKind::Parametric: {
      std::ostringstream os;
      os << "param:" << t_;
      return os.str();
    }
    case NehariKind::Custom: return "custom";
  }
  return "?";
}

NehariCertificate NehariFunction::validate() const {
  NehariCertificate c;
  const auto grid = validation_grid();
  auto fail = [&](const std::string& why) {
    if (c.failure.empty()) c.failure = why;
  };

  c.positive = true;
  for (double x : grid) {
    const double v = (*this)(x);
    if (!(v > 0.0) || !std::isfinite(v)) {
      c.positive = false;
      fail("p not positive at x = " + num(x));
      break;
    }
  }

  c.nonincreasing = true;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double prev = weighted(grid[k - 1]), cur = weighted(grid[k]);
    if (cur > prev * (1.0 + 1e-12) + 1e-15) {
      c.nonincreasing = false;
      fail("(1-x^2)^2 p increases near x = " + num(grid[k]));
      break;
    }
  }

  c.mu_at_most_one = mu_ <= 1.0 + 1e-12;
  if (!c.mu_at_most_one) fail("mu = " + num(mu_) + " exceeds 1");

  c.rigidity = true;
  if (mu_ >= 1.0 - 1e-6) {
    for (double x : grid) {
      if (std::abs(weighted(x) - 1.0) > 1e-6) {
        c.rigidity = false;
        fail("mu = 1 but p differs from (1-x^2)^-2 at x = " + num(x));
        break;
      }
    }
  }

  c.nonvanishing = false;
  if (c.positive) {
    try {
      const OdeTrajectory traj = integrate(weight(), 1.0, 0.0, 0.0, 1.0 - 1e-6);
      c.min_u = *std::min_element(traj.u.begin(), traj.u.end());
      c.nonvanishing = c.min_u > 0.0;
      if (!c.nonvanishing) fail("solution with u(0)=1, u'(0)=0 vanishes in (0, 1)");
    } catch (const Error& e) {
      fail(std::string("shooting failed: ") + e.what());
    }
  }
  return c;
}

double mu_of(const NehariFunction& p) { return p.mu(); }

}  // namespace schwarz

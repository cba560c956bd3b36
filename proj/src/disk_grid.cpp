#include "schwarz/disk_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace schwarz {

namespace {

// Radius from the dyadic coordinate s: |z| = 1 - 2^-s.
double radius_of(double s) { return 1.0 - std::exp2(-s); }

// Differences below this relative size are evaluation noise, not progress;
// the incumbent keeps them, which also keeps the search from chasing rounding.
constexpr double kNoise = 1e-10;

bool exceeds(double v, double best) { return v > best + kNoise * std::abs(best); }

bool better(double v, cplx z, double best, cplx best_z) {
  if (exceeds(v, best)) return true;
  if (v != best) return false;
  const double r = std::abs(z), rb = std::abs(best_z);
  if (r != rb) return r < rb;
  return std::arg(z) < std::arg(best_z);
}

class Search {
 public:
  Search(const std::function<double(cplx)>& fn, const SupOptions& opts, SupResult& out)
      : fn_(fn), opts_(opts), out_(out) {}

  // Returns false when the point is excluded.
  bool sample(cplx z, double& v) {
    ++out_.samples;
    try {
      v = fn_(z);
      if (std::isfinite(v)) {
        if (!have_ || better(v, z, out_.value, out_.point)) {
          out_.value = v;
          out_.point = z;
          have_ = true;
        }
        return true;
      }
      exclude(z, "non-finite value");
    } catch (const Error& e) {
      exclude(z, e.what());
    }
    return false;
  }

  void refine(double s_max) {
    if (!have_) return;
    const double two_pi = 2.0 * std::numbers::pi;
    double s = std::abs(out_.point) > 0.0 ? -std::log2(1.0 - std::abs(out_.point)) : 0.0;
    double theta = std::arg(out_.point);
    double ds = 1.0 / opts_.radii_per_level;
    double dt = two_pi / opts_.angles;
    double best = out_.value;
    for (int iter = 0; iter < 400 && (ds > 1e-10 || dt > 1e-12); ++iter) {
      bool moved = false;
      const double cand[4][2] = {{s + ds, theta}, {s - ds, theta}, {s, theta + dt}, {s, theta - dt}};
      for (const auto& c : cand) {
        const double cs = std::clamp(c[0], 0.0, s_max);
        if (cs == s && c[1] == theta) continue;
        const cplx z = std::polar(radius_of(cs), c[1]);
        double v = 0.0;
        if (sample(z, v) && exceeds(v, best)) {
          best = v;
          s = cs;
          theta = c[1];
          moved = true;
          break;
        }
      }
      if (!moved) {
        ds *= 0.5;
        dt *= 0.5;
      }
    }
  }

 private:
  void exclude(cplx z, const std::string& why) {
    ++out_.excluded;
    if (out_.exclusions.size() < opts_.max_recorded_exclusions) out_.exclusions.push_back({z, why});
  }

  const std::function<double(cplx)>& fn_;
  const SupOptions& opts_;
  SupResult& out_;
  bool have_ = false;
};

template <class Visit>
void for_level(int k, const SupOptions& opts, Visit visit) {
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 1; j <= opts.radii_per_level; ++j) {
    const double r = radius_of((k - 1) + double(j) / opts.radii_per_level);
    for (int a = 0; a < opts.angles; ++a) {
      visit(std::polar(r, two_pi * a / opts.angles));
    }
  }
}

}  // namespace

SupResult disk_sup(const std::function<double(cplx)>& fn, int depth, const SupOptions& opts) {
  if (depth < 1) throw InputError("grid depth must be at least 1");
  if (opts.radii_per_level < 1 || opts.angles < 1) throw InputError("grid resolution must be positive");
  SupResult out;
  out.depth = depth;
  out.value = 0.0;
  Search search(fn, opts, out);
  double v = 0.0;
  search.sample(0.0, v);
  for (int k = 1; k <= depth; ++k) {
    for_level(k, opts, [&](cplx z) { search.sample(z, v); });
    if (opts.refine) search.refine(double(k));
    out.history.push_back(out.value);
  }
  const auto n = out.history.size();
  if (n >= 3) {
    const double a = out.history[n - 3], c = out.history[n - 1];
    out.converged = std::abs(c - a) <= 1e-3 * std::max(std::abs(c), 1e-300);
  }
  return out;
}

std::vector<cplx> disk_grid_points(int depth, const SupOptions& opts) {
  std::vector<cplx> pts{cplx(0.0)};
  for (int k = 1; k <= depth; ++k) for_level(k, opts, [&](cplx z) { pts.push_back(z); });
  return pts;
}

}  // namespace schwarz

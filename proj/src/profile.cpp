#include "kbrw/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kbrw {

namespace {
constexpr double kMergeTol = 1e-12;

void normalize_component(SupportComponent& c) {
  if (c.x.size() != c.v.size() || c.x.empty())
    throw std::invalid_argument("component breakpoints/values mismatch");
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    if (!std::isfinite(c.x[i]) || !std::isfinite(c.v[i]) || c.v[i] < 0.0)
      throw std::invalid_argument("component needs finite breakpoints and values >= 0");
    if (i > 0 && !(c.x[i] > c.x[i - 1]))
      throw std::invalid_argument("component breakpoints must be strictly increasing");
  }
  // Drop near-duplicate breakpoints, then merge collinear pieces.
  std::vector<double> xs, vs;
  xs.reserve(c.x.size());
  vs.reserve(c.v.size());
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    if (!xs.empty() && c.x[i] - xs.back() < kMergeTol) {
      vs.back() = std::max(vs.back(), c.v[i]);
      continue;
    }
    xs.push_back(c.x[i]);
    vs.push_back(c.v[i]);
  }
  std::vector<double> mx{xs[0]}, mv{vs[0]};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (mx.size() >= 2) {
      const std::size_t n = mx.size();
      const double s_prev = (mv[n - 1] - mv[n - 2]) / (mx[n - 1] - mx[n - 2]);
      const double s_next = (vs[i] - mv[n - 1]) / (xs[i] - mx[n - 1]);
      if (std::abs(s_next - s_prev) < kMergeTol) {
        mx.back() = xs[i];
        mv.back() = vs[i];
        continue;
      }
    }
    mx.push_back(xs[i]);
    mv.push_back(vs[i]);
  }
  c.x = std::move(mx);
  c.v = std::move(mv);
}
}  // namespace

double project_pi(double v) { return v >= 0.0 ? v : -kInf; }

double SupportComponent::value_at(double z) const {
  if (z < x.front() || z > x.back()) return -kInf;
  if (x.size() == 1) return v.front();
  auto it = std::upper_bound(x.begin(), x.end(), z);
  std::size_t i = (it == x.end()) ? x.size() - 1 : static_cast<std::size_t>(it - x.begin());
  if (i == 0) i = 1;
  const double t = (z - x[i - 1]) / (x[i] - x[i - 1]);
  return v[i - 1] + t * (v[i] - v[i - 1]);
}

PiecewiseProfile PiecewiseProfile::from_breakpoints(std::vector<double> x, std::vector<double> v) {
  SupportComponent c{std::move(x), std::move(v)};
  return from_components({std::move(c)});
}

PiecewiseProfile PiecewiseProfile::point(double x, double v) {
  return from_breakpoints({x}, {v});
}

PiecewiseProfile PiecewiseProfile::from_components(std::vector<SupportComponent> comps) {
  PiecewiseProfile p;
  for (auto& c : comps) normalize_component(c);
  std::sort(comps.begin(), comps.end(),
            [](const SupportComponent& a, const SupportComponent& b) { return a.left() < b.left(); });
  // Components may touch at a single x (a jump point); overlap is invalid.
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].left() < comps[i - 1].right())
      throw std::invalid_argument("support components must not overlap");
  }
  p.comps_ = std::move(comps);
  return p;
}

std::size_t PiecewiseProfile::piece_count() const {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.x.size() > 1 ? c.x.size() - 1 : 1;
  return n;
}

double PiecewiseProfile::lower_edge() const {
  if (empty()) throw std::logic_error("empty profile has no edges");
  return comps_.front().left();
}

double PiecewiseProfile::upper_edge() const {
  if (empty()) throw std::logic_error("empty profile has no edges");
  return comps_.back().right();
}

double PiecewiseProfile::sup() const {
  double m = -kInf;
  for (const auto& c : comps_)
    for (double v : c.v) m = std::max(m, v);
  return m;
}

double PiecewiseProfile::value(double z) const {
  double best = -kInf;
  for (const auto& c : comps_) {
    if (z < c.left()) break;
    if (z <= c.right()) best = std::max(best, c.value_at(z));
  }
  return best;
}

double PiecewiseProfile::value_left(double z) const {
  for (const auto& c : comps_) {
    if (z <= c.left()) break;
    if (z <= c.right()) return c.value_at(z);
  }
  return -kInf;
}

double PiecewiseProfile::value_right(double z) const {
  for (const auto& c : comps_) {
    if (z < c.left()) break;
    if (z < c.right()) return c.value_at(z);
  }
  return -kInf;
}

double PiecewiseProfile::sup_on(double a, double b) const {
  if (!(a < b)) throw std::invalid_argument("sup_on needs a < b");
  double m = -kInf;
  for (const auto& c : comps_) {
    const double lo = std::max(a, c.left());
    const double hi = std::min(b, c.right());
    if (lo > hi) continue;
    if (lo == hi) {
      if (lo > a) m = std::max(m, c.value_at(lo));
      continue;
    }
    // Positive-length overlap: values near an excluded left endpoint approach
    // its value, so the closed-interval max is the half-open sup.
    m = std::max({m, c.value_at(lo), c.value_at(hi)});
    auto it = std::upper_bound(c.x.begin(), c.x.end(), lo);
    for (; it != c.x.end() && *it < hi; ++it) {
      m = std::max(m, c.v[static_cast<std::size_t>(it - c.x.begin())]);
    }
  }
  return m;
}

double PiecewiseProfile::omega() const {
  if (empty()) throw std::logic_error("omega of empty profile");
  double m = -kInf;
  for (const auto& c : comps_)
    for (std::size_t i = 0; i < c.x.size(); ++i) m = std::max(m, c.v[i] + c.x[i]);
  return m;
}

PiecewiseProfile PiecewiseProfile::shifted(double dx) const {
  PiecewiseProfile p = *this;
  for (auto& c : p.comps_)
    for (auto& x : c.x) x += dx;
  return p;
}

bool PiecewiseProfile::is_concave(double tol) const {
  if (comps_.size() != 1) return comps_.size() <= 1;
  const auto& c = comps_.front();
  double prev = kInf;
  for (std::size_t i = 1; i < c.x.size(); ++i) {
    const double s = (c.v[i] - c.v[i - 1]) / (c.x[i] - c.x[i - 1]);
    if (s > prev + tol) return false;
    prev = s;
  }
  return true;
}

std::vector<double> PiecewiseProfile::breakpoints() const {
  std::vector<double> xs;
  for (const auto& c : comps_) xs.insert(xs.end(), c.x.begin(), c.x.end());
  return xs;
}

bool PiecewiseProfile::has_isolated_zero() const {
  for (const auto& c : comps_)
    if (c.x.size() == 1 && c.v.front() == 0.0) return true;
  return false;
}

double phi_distance(const PiecewiseProfile& g1, const PiecewiseProfile& g2) {
  if (g1.empty() || g2.empty()) throw std::invalid_argument("phi_distance needs non-empty profiles");
  auto plus = [](double v) { return std::isfinite(v) && v > 0.0 ? v : 0.0; };
  std::vector<double> xs = g1.breakpoints();
  const std::vector<double> xs2 = g2.breakpoints();
  xs.insert(xs.end(), xs2.begin(), xs2.end());
  std::sort(xs.begin(), xs.end());
  double m = 0.0;
  for (double x : xs) {
    m = std::max(m, std::abs(plus(g1.value_left(x)) - plus(g2.value_left(x))));
    m = std::max(m, std::abs(plus(g1.value(x)) - plus(g2.value(x))));
    m = std::max(m, std::abs(plus(g1.value_right(x)) - plus(g2.value_right(x))));
  }
  m = std::max(m, std::abs(g1.upper_edge() - g2.upper_edge()));
  m = std::max(m, std::abs(g1.lower_edge() - g2.lower_edge()));
  return m;
}

}  // namespace kbrw

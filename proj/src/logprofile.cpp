#include "kbrw/logprofile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kbrw {

namespace {

// Linear piece with exact endpoint values; consecutive segments may disagree
// at a shared x, which encodes a jump.
struct Segment {
  double x0, v0, x1, v1;
};

// Maximal {>= 0} regions of a piecewise-linear segment chain. Crossing points
// get value exactly zero; an isolated touch becomes a single-point component.
std::vector<SupportComponent> clip_nonnegative(const std::vector<Segment>& segs) {
  std::vector<SupportComponent> out;
  SupportComponent cur;
  bool open = false;
  auto push_node = [&](double x, double v) {
    if (!open) {
      cur = SupportComponent{{x}, {v}};
      open = true;
      return;
    }
    if (x > cur.x.back()) {
      cur.x.push_back(x);
      cur.v.push_back(v);
    } else if (std::abs(v - cur.v.back()) > 1e-12) {
      out.push_back(cur);  // jump at shared x: split
      cur = SupportComponent{{x}, {v}};
    }
  };
  auto close = [&]() {
    if (open) out.push_back(cur);
    open = false;
  };
  for (const auto& s : segs) {
    const bool p0 = s.v0 >= 0.0, p1 = s.v1 >= 0.0;
    if (open && cur.x.back() < s.x0) close();
    if (p0 && p1) {
      push_node(s.x0, s.v0);
      push_node(s.x1, s.v1);
    } else if (p0 && !p1) {
      const double t = s.x0 + (s.x1 - s.x0) * (s.v0 / (s.v0 - s.v1));
      push_node(s.x0, s.v0);
      push_node(t, 0.0);
      close();
    } else if (!p0 && p1) {
      close();
      const double t = s.x0 + (s.x1 - s.x0) * (-s.v0 / (s.v1 - s.v0));
      push_node(t, 0.0);
      push_node(s.x1, s.v1);
    } else {
      close();
    }
  }
  close();
  return out;
}

// Upper envelope of a set of lines v = a + b*x on [p, q], emitted as segments.
void envelope_segments(double p, double q, const std::vector<std::pair<double, double>>& lines,
                       std::vector<Segment>& out) {
  auto eval_max = [&](double x) {
    double m = -kInf;
    for (const auto& [a, b] : lines) m = std::max(m, a + b * x);
    return m;
  };
  std::vector<double> cuts{p, q};
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double db = lines[i].second - lines[j].second;
      if (db == 0.0) continue;
      const double x = (lines[j].first - lines[i].first) / db;
      if (x > p && x < q) cuts.push_back(x);
    }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    out.push_back(Segment{cuts[i], eval_max(cuts[i]), cuts[i + 1], eval_max(cuts[i + 1])});
  }
}

}  // namespace

PiecewiseProfile reproduce_profile(const PiecewiseProfile& g, const TailProfile& tail, double gamma) {
  if (tail.rho != 1.0)
    throw std::invalid_argument("reproduce_profile needs rho = 1; use reproduce_profile_grid");
  if (g.empty()) throw std::invalid_argument("reproduce_profile needs non-empty support");
  const double shift = 1.0 - gamma;
  const double cm = tail.c_minus;
  const bool left_ray = std::isfinite(cm);

  // All breakpoints with prefix/suffix cone maxima.
  struct Node {
    double x, v;
  };
  std::vector<Node> nodes;
  for (const auto& c : g.components())
    for (std::size_t i = 0; i < c.x.size(); ++i) nodes.push_back({c.x[i], c.v[i]});
  const std::size_t n = nodes.size();
  std::vector<double> pre(n), suf(n);
  for (std::size_t i = 0; i < n; ++i)
    pre[i] = std::max(i ? pre[i - 1] : -kInf, nodes[i].v + nodes[i].x);
  for (std::size_t i = n; i-- > 0;)
    suf[i] = std::max(i + 1 < n ? suf[i + 1] : -kInf, left_ray ? nodes[i].v - cm * nodes[i].x : -kInf);

  const double omega = pre[n - 1];
  const double x_max = shift + omega;  // right zero of 1-gamma+omega-x
  double x_min = nodes.front().x;
  if (left_ray) x_min = -(shift + suf[0]) / cm;

  // Interval boundaries: x_min, breakpoints, x_max.
  std::vector<double> bounds;
  if (x_min < nodes.front().x) bounds.push_back(x_min);
  for (const auto& nd : nodes) bounds.push_back(nd.x);
  if (x_max > nodes.back().x) bounds.push_back(x_max);

  // Map x-interval -> containing piece of g, if any.
  auto g_line = [&](double p, double q, std::vector<std::pair<double, double>>& lines) {
    for (const auto& c : g.components()) {
      if (p < c.left() || q > c.right()) continue;
      if (c.x.size() == 1) return;
      auto it = std::upper_bound(c.x.begin(), c.x.end(), p);
      if (it == c.x.begin() || it == c.x.end()) it = c.x.end() - 1;
      const std::size_t i = static_cast<std::size_t>(it - c.x.begin());
      const double slope = (c.v[i] - c.v[i - 1]) / (c.x[i] - c.x[i - 1]);
      lines.emplace_back(c.v[i - 1] - slope * c.x[i - 1], slope);
      return;
    }
  };

  std::vector<Segment> segs;
  for (std::size_t bi = 0; bi + 1 < bounds.size(); ++bi) {
    const double p = bounds[bi], q = bounds[bi + 1];
    if (!(q > p)) continue;
    std::vector<std::pair<double, double>> lines;
    // right rays with apex <= p
    auto itp = std::upper_bound(nodes.begin(), nodes.end(), p,
                                [](double x, const Node& nd) { return x < nd.x; });
    if (itp != nodes.begin())
      lines.emplace_back(shift + pre[static_cast<std::size_t>(itp - nodes.begin()) - 1], -1.0);
    // left rays with apex >= q
    if (left_ray) {
      auto itq = std::lower_bound(nodes.begin(), nodes.end(), q,
                                  [](const Node& nd, double x) { return nd.x < x; });
      if (itq != nodes.end())
        lines.emplace_back(shift + suf[static_cast<std::size_t>(itq - nodes.begin())], cm);
    }
    std::vector<std::pair<double, double>> glines;
    g_line(p, q, glines);
    for (auto& [a, b] : glines) lines.emplace_back(shift + a, b);
    if (lines.empty()) continue;
    envelope_segments(p, q, lines, segs);
  }
  return PiecewiseProfile::from_components(clip_nonnegative(segs));
}

PiecewiseProfile select_profile(const PiecewiseProfile& g, double sigma, double beta) {
  if (g.empty()) throw std::invalid_argument("select_profile needs non-empty support");
  std::vector<SupportComponent> out;
  for (const auto& c : g.components()) {
    std::vector<double> xs, vs;
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (i > 0 && c.x[i - 1] < sigma && sigma < c.x[i]) {
        xs.push_back(sigma);
        vs.push_back(c.value_at(sigma));
      }
      xs.push_back(c.x[i]);
      vs.push_back(c.v[i]);
    }
    std::vector<Segment> segs;
    auto tilt = [&](double x, double v) { return v + beta * std::min(x - sigma, 0.0); };
    if (xs.size() == 1) {
      const double v = tilt(xs[0], vs[0]);
      if (v >= 0.0) out.push_back(SupportComponent{{xs[0]}, {v}});
      continue;
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      segs.push_back(Segment{xs[i], tilt(xs[i], vs[i]), xs[i + 1], tilt(xs[i + 1], vs[i + 1])});
    auto comps = clip_nonnegative(segs);
    for (auto& cc : comps) out.push_back(std::move(cc));
  }
  return PiecewiseProfile::from_components(std::move(out));
}

double selected_sup(const PiecewiseProfile& r_prof, double sigma, double beta) {
  double m = -kInf;
  for (const auto& c : r_prof.components())
    for (std::size_t i = 0; i < c.x.size(); ++i)
      m = std::max(m, c.v[i] + beta * std::min(c.x[i] - sigma, 0.0));
  const double at_sigma = r_prof.value(sigma);
  if (std::isfinite(at_sigma)) m = std::max(m, at_sigma);
  return m;
}

double a_minus(const PiecewiseProfile& g, double gamma, double beta) {
  return g.lower_edge() + (1.0 - gamma) / std::min(1.0, beta);
}

double a_plus(const PiecewiseProfile& g, double gamma, double beta) {
  return g.omega() - gamma + (1.0 - gamma) / std::min(1.0, beta);
}

SigmaStar solve_sigma_star(const PiecewiseProfile& r_prof, double gamma, double beta) {
  if (r_prof.empty()) throw std::invalid_argument("solve_sigma_star needs non-empty support");
  const double sup_r = r_prof.sup();
  if (sup_r < gamma - 1e-12)
    throw std::invalid_argument("solve_sigma_star: sup r below gamma, no solution");
  constexpr double kTol = 1e-12;
  double lo = r_prof.lower_edge() - 1.0;
  if (selected_sup(r_prof, lo, beta) <= gamma) {
    // sup r == gamma: every sigma below the support already satisfies the
    // constraint, so the infimum degenerates.
    return SigmaStar{-kInf, true, kInf};
  }
  double hi = r_prof.upper_edge() + (sup_r - gamma) / beta + 1.0;
  while (hi - lo > kTol) {
    const double mid = 0.5 * (lo + hi);
    if (selected_sup(r_prof, mid, beta) <= gamma)
      hi = mid;
    else
      lo = mid;
  }
  SigmaStar res;
  res.sigma = hi;
  // Non-uniqueness: sup s_sigma flat at gamma beyond sigma*.
  double flo = res.sigma;
  double fhi = r_prof.upper_edge() + (sup_r - gamma) / beta + 1.0;
  if (selected_sup(r_prof, fhi, beta) >= gamma - 1e-13) {
    res.flat_width = fhi - res.sigma;
  } else {
    while (fhi - flo > kTol) {
      const double mid = 0.5 * (flo + fhi);
      if (selected_sup(r_prof, mid, beta) < gamma - 1e-13)
        fhi = mid;
      else
        flo = mid;
    }
    res.flat_width = std::max(0.0, flo - res.sigma);
  }
  res.nonunique = res.flat_width > 1e-9;
  return res;
}

DynamicsState DynamicsState::initial(PiecewiseProfile g0) {
  DynamicsState st;
  st.upper_history.push_back(g0.upper_edge());
  st.g = std::move(g0);
  return st;
}

DynamicsState dynamicsstep_impl(const DynamicsState& state, const TailProfile& tail, double gamma,
                                double beta) {
  const PiecewiseProfile r = reproduce_profile(state.g, tail, gamma);
  const SigmaStar ss = solve_sigma_star(r, gamma, beta);
  PiecewiseProfile next = select_profile(r, ss.sigma, beta);
  DynamicsState out = state;
  out.g = std::move(next);
  out.t = state.t + 1;
  out.sigma_history.push_back(ss.sigma);
  out.upper_history.push_back(out.g.upper_edge());
  out.nonunique_flag = state.nonunique_flag || ss.nonunique;
  out.isolated_zero_flag = state.isolated_zero_flag || out.g.has_isolated_zero();
  return out;
}

DynamicsState dynamics_step(const DynamicsState& state, const TailProfile& tail, double gamma,
                            double beta) {
  DynamicsState out = dynamicsstep_impl(state, tail, gamma, beta);
  if (std::abs(out.g.sup() - gamma) > 1e-9)
    throw std::runtime_error("dynamics_step: selected profile sup drifted from gamma");
  return out;
}

GridFunction reproduce_profile_grid(const GridFunction& g, const TailProfile& tail, double gamma) {
  if (!(g.dx > 0.0)) throw std::invalid_argument("grid step must be positive");
  GridFunction out;
  out.x0 = g.x0;
  out.dx = g.dx;
  out.v.assign(g.v.size(), -kInf);
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    double best = -kInf;
    const double xi = g.x_at(i);
    for (std::size_t j = 0; j < g.v.size(); ++j) {
      if (!std::isfinite(g.v[j])) continue;
      const double hv = h_value(tail, xi - g.x_at(j));
      if (!std::isfinite(hv)) continue;
      best = std::max(best, g.v[j] + hv);
    }
    out.v[i] = project_pi(1.0 - gamma + best);
  }
  return out;
}

GridFunction select_profile_grid(const GridFunction& r, double sigma, double beta) {
  GridFunction out = r;
  for (std::size_t i = 0; i < r.v.size(); ++i) {
    if (!std::isfinite(r.v[i])) continue;
    out.v[i] = project_pi(r.v[i] + beta * std::min(r.x_at(i) - sigma, 0.0));
  }
  return out;
}

double grid_sigma_star(const GridFunction& r, double gamma, double beta) {
  double sup_r = -kInf;
  for (double v : r.v) sup_r = std::max(sup_r, v);
  if (!(sup_r >= gamma)) throw std::invalid_argument("grid_sigma_star: sup r below gamma");
  auto sup_at = [&](double sigma) {
    double m = -kInf;
    for (std::size_t i = 0; i < r.v.size(); ++i)
      if (std::isfinite(r.v[i])) m = std::max(m, r.v[i] + beta * std::min(r.x_at(i) - sigma, 0.0));
    return m;
  };
  double lo = r.x0 - 1.0;
  double hi = r.x_at(r.v.size() - 1) + (sup_r - gamma) / beta + 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (sup_at(mid) <= gamma)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

GridSupport grid_support(const GridFunction& f) {
  GridSupport out;
  std::size_t i = 0;
  const std::size_t n = f.v.size();
  while (i < n) {
    if (!(f.v[i] >= 0.0)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && f.v[j + 1] >= 0.0) ++j;
    if (j == i)
      out.isolated_points.push_back(f.x_at(i));
    else
      out.intervals.emplace_back(f.x_at(i), f.x_at(j));
    i = j + 1;
  }
  return out;
}

}  // namespace kbrw

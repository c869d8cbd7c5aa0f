#include "nmg/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nmg/error.hpp"
#include "nmg/quadrature.hpp"

namespace nmg {
namespace {

// Mesh cells [x_k, x_{k+1}] of the piecewise-linear graph(s), with grid-node
// labels for the hat functions.
struct Mesh {
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> v;      // second graph (energy differences); equals u otherwise
  std::vector<int> node;      // knot -> grid node index, -1 outside
  std::vector<char> active;   // cell takes part in the sum
  std::vector<double> slope;  // max |slope| over the graphs, per cell

  int cells() const { return static_cast<int>(x.size()) - 1; }
  double length(int c) const { return x[c + 1] - x[c]; }
};

Mesh build_mesh(const GridFunction& u, const GridFunction* v) {
  const PiecewiseLinear pu = u.to_piecewise_linear();
  Mesh m;
  m.x.assign(pu.knots().begin(), pu.knots().end());
  m.u.assign(pu.values().begin(), pu.values().end());
  if (v) {
    const PiecewiseLinear pv = v->to_piecewise_linear();
    require(pv.size() == pu.size(), "graphs must share grid and datum");
    for (std::size_t k = 0; k < pv.size(); ++k) require(pv.knots()[k] == pu.knots()[k], "graphs must share grid and datum");
    m.v.assign(pv.values().begin(), pv.values().end());
  } else {
    m.v = m.u;
  }
  const int k0 = static_cast<int>(std::find(m.x.begin(), m.x.end(), -u.half_width()) - m.x.begin());
  m.node.assign(m.x.size(), -1);
  for (int i = 0; i < u.size(); ++i) m.node[k0 + 1 + i] = i;
  m.slope.resize(m.cells());
  m.active.resize(m.cells());
  for (int c = 0; c < m.cells(); ++c) {
    const double su = std::abs(m.u[c + 1] - m.u[c]) / m.length(c);
    const double sv = std::abs(m.v[c + 1] - m.v[c]) / m.length(c);
    m.slope[c] = std::max(su, sv);
    if (v)
      m.active[c] = m.u[c] != m.v[c] || m.u[c + 1] != m.v[c + 1];
    else
      m.active[c] = m.node[c] >= 0 || m.node[c + 1] >= 0;
  }
  return m;
}

// Part of a cell, as fractions [a0, a1] of it.
struct Seg {
  int cell;
  double a0, a1;
};

struct Sample {
  int cs, ct;       // cells of x and y
  double as, at;    // fractions of x and y in their cells
  double dist;      // |x - y|
  double w;         // weight including multiplicity
};

int far_points(double r) {
  if (r < 2.0) return 8;
  if (r < 5.0) return 6;
  if (r < 20.0) return 4;
  if (r < 100.0) return 3;
  return 2;
}

class PairRule {
 public:
  PairRule(const Mesh& m, double s, int boost) : m_(m), s_(s), boost_(boost) {
    const GaussRule g = gauss_legendre(16 + 2 * boost);
    for (int j = 0; j < g.size(); ++j) {
      duffy_v_.push_back(0.5 * (1.0 + g.nodes[j]));
      duffy_w_.push_back(0.5 * g.weights[j]);
    }
  }

  // Whole cell with itself: the integrand is homogeneous of degree -s in
  // x - y, so one sample at distance len carries the exact weight.
  template <class Sink>
  void same(int c, Sink&& sink) const {
    const double len = m_.length(c);
    sink(Sample{c, c, 1.0, 0.0, len, 2.0 * len * len / ((1.0 - s_) * (2.0 - s_))});
  }

  // S lies to the left of T; gap between them >= 0.
  template <class Sink>
  void pair(const Seg& S, const Seg& T, double mult, Sink&& sink) const {
    const double ls = len(S);
    const double lt = len(T);
    const double gap = gap_between(S, T);
    if (gap == 0.0) {
      if (ls > 2.0 * lt) {
        const double cut = S.a1 - lt / m_.length(S.cell);
        pair(Seg{S.cell, cut, S.a1}, T, mult, sink);
        pair(Seg{S.cell, S.a0, cut}, T, mult, sink);
      } else if (lt > 2.0 * ls) {
        const double cut = T.a0 + ls / m_.length(T.cell);
        pair(S, Seg{T.cell, T.a0, cut}, mult, sink);
        pair(S, Seg{T.cell, cut, T.a1}, mult, sink);
      } else {
        duffy(S, T, ls, lt, mult, sink);
      }
      return;
    }
    const double es = ls * (1.0 + m_.slope[S.cell]);
    const double et = lt * (1.0 + m_.slope[T.cell]);
    const double r = gap / std::max(es, et);
    if (r < 1.0) {
      if (es >= et) {
        const double mid = 0.5 * (S.a0 + S.a1);
        pair(Seg{S.cell, S.a0, mid}, T, mult, sink);
        pair(Seg{S.cell, mid, S.a1}, T, mult, sink);
      } else {
        const double mid = 0.5 * (T.a0 + T.a1);
        pair(S, Seg{T.cell, T.a0, mid}, mult, sink);
        pair(S, Seg{T.cell, mid, T.a1}, mult, sink);
      }
      return;
    }
    const GaussRule g = gauss_legendre(far_points(r) + boost_);
    for (int i = 0; i < g.size(); ++i) {
      const double ts = 0.5 * (1.0 + g.nodes[i]);
      for (int j = 0; j < g.size(); ++j) {
        const double tt = 0.5 * (1.0 + g.nodes[j]);
        const double dist = gap + ls * (1.0 - ts) + lt * tt;
        const double w = 0.25 * ls * lt * g.weights[i] * g.weights[j] * mult;
        sink(Sample{S.cell, T.cell, at(S, ts), at(T, tt), dist, w});
      }
    }
  }

  // Gauss points in a cell, sized by its distance to the tails.
  GaussRule tail_rule(int c, double gap) const {
    const double r = gap / (m_.length(c) * (1.0 + m_.slope[c]));
    return gauss_legendre(std::max(far_points(r), 4) + boost_);
  }

 private:
  double len(const Seg& S) const { return (S.a1 - S.a0) * m_.length(S.cell); }
  static double at(const Seg& S, double t) { return S.a0 + t * (S.a1 - S.a0); }
  double gap_between(const Seg& S, const Seg& T) const {
    if (S.cell == T.cell) return (T.a0 - S.a1) * m_.length(S.cell);
    double g = (1.0 - S.a1) * m_.length(S.cell) + T.a0 * m_.length(T.cell);
    if (T.cell > S.cell + 1) g += m_.x[T.cell] - m_.x[S.cell + 1];
    return g;
  }

  // Shared corner c: x = c - zeta in S, y = c + xi in T. Homogeneity of degree
  // -s about the corner integrates the radial direction exactly.
  template <class Sink>
  void duffy(const Seg& S, const Seg& T, double ls, double lt, double mult, Sink&& sink) const {
    const double scale = ls * lt / (2.0 - s_) * mult;
    for (std::size_t j = 0; j < duffy_v_.size(); ++j) {
      const double v = duffy_v_[j];
      const double w = scale * duffy_w_[j];
      sink(Sample{S.cell, T.cell, at(S, 1.0 - v), at(T, 1.0), ls * v + lt, w});
      sink(Sample{S.cell, T.cell, at(S, 0.0), at(T, v), ls + lt * v, w});
    }
  }

  const Mesh& m_;
  double s_;
  int boost_;
  std::vector<double> duffy_v_;
  std::vector<double> duffy_w_;
};

// Visits every unordered pair of cells with at least one active member, then
// the interactions of active cells with the two constant tails. `pair_sink`
// receives samples; `tail_sink(cell, fraction, distance to tail start,
// tail value index, weight)` integrates the tail itself.
template <class PairSink, class TailSink>
void visit(const Mesh& m, double s, int boost, PairSink&& pair_sink, TailSink&& tail_sink) {
  const PairRule rule(m, s, boost);
  const int nc = m.cells();
  for (int a = 0; a < nc; ++a) {
    if (m.active[a]) rule.same(a, pair_sink);
    for (int b = a + 1; b < nc; ++b) {
      if (!m.active[a] && !m.active[b]) continue;
      rule.pair(Seg{a, 0.0, 1.0}, Seg{b, 0.0, 1.0}, 2.0, pair_sink);
    }
  }
  for (int c = 0; c < nc; ++c) {
    if (!m.active[c]) continue;
    const double lo = m.x.front();
    const double hi = m.x.back();
    for (int side : {0, 1}) {
      const double gap = side == 0 ? m.x[c] - lo : hi - m.x[c + 1];
      const GaussRule g = rule.tail_rule(c, gap);
      for (int i = 0; i < g.size(); ++i) {
        const double t = 0.5 * (1.0 + g.nodes[i]);
        const double z = side == 0 ? gap + t * m.length(c) : gap + (1.0 - t) * m.length(c);
        tail_sink(c, t, z, side, 0.5 * m.length(c) * g.weights[i] * 2.0);
      }
    }
  }
}

double lerp(const std::vector<double>& f, int c, double a) { return f[c] + a * (f[c + 1] - f[c]); }

Eigen::VectorXd gradient_impl(const GridFunction& u, FracOrder order, const GalerkinRule& rule) {
  const Mesh m = build_mesh(u, nullptr);
  const auto prof = GProfile::get(order);
  const double s = order.value();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(u.size());

  auto spread = [&](int c, double a, double amount) {
    if (m.node[c] >= 0) grad[m.node[c]] += amount * (1.0 - a);
    if (m.node[c + 1] >= 0) grad[m.node[c + 1]] += amount * a;
  };
  auto pair_sink = [&](const Sample& q) {
    const double rho = (lerp(m.u, q.cs, q.as) - lerp(m.u, q.ct, q.at)) / q.dist;
    const double k = prof->value(rho) * std::pow(q.dist, -1.0 - s) * q.w;
    spread(q.cs, q.as, k);
    spread(q.ct, q.at, -k);
  };
  auto tail_sink = [&](int c, double a, double z, int side, double w) {
    const double jump = lerp(m.u, c, a) - (side == 0 ? m.u.front() : m.u.back());
    if (jump == 0.0) return;
    const Estimate tail = integrate_power_tail(
        [&](double y) { return prof->value(jump / y); }, z, s, rule.tail_rel_tol);
    spread(c, a, w * tail.value);
  };
  visit(m, s, rule.boost, pair_sink, tail_sink);
  return grad;
}

}  // namespace

Eigen::VectorXd energy_gradient(const GridFunction& u, FracOrder order, const GalerkinRule& rule) {
  return gradient_impl(u, order, rule);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> energy_gradient_estimate(const GridFunction& u, FracOrder order) {
  const Eigen::VectorXd coarse = gradient_impl(u, order, GalerkinRule{0});
  Eigen::VectorXd fine = gradient_impl(u, order, GalerkinRule{2});
  Eigen::VectorXd err = (fine - coarse).cwiseAbs();
  return {std::move(fine), std::move(err)};
}

double energy_difference(const GridFunction& u, const GridFunction& v, FracOrder order, const GalerkinRule& rule) {
  require(u.size() == v.size() && u.half_width() == v.half_width(), "graphs must share the grid");
  const Mesh m = build_mesh(u, &v);
  const auto prof = GProfile::get(order);
  const double s = order.value();
  double total = 0.0;

  auto pair_sink = [&](const Sample& q) {
    const double ru = (lerp(m.u, q.cs, q.as) - lerp(m.u, q.ct, q.at)) / q.dist;
    const double rv = (lerp(m.v, q.cs, q.as) - lerp(m.v, q.ct, q.at)) / q.dist;
    if (ru == rv) return;
    total += (prof->antiderivative(ru) - prof->antiderivative(rv)) * std::pow(q.dist, -s) * q.w;
  };
  auto tail_sink = [&](int c, double a, double z, int side, double w) {
    const double ju = lerp(m.u, c, a) - (side == 0 ? m.u.front() : m.u.back());
    const double jv = lerp(m.v, c, a) - (side == 0 ? m.v.front() : m.v.back());
    if (ju == jv) return;
    const Estimate tail = integrate_power_tail(
        [&](double y) { return y * y * (prof->antiderivative(ju / y) - prof->antiderivative(jv / y)); }, z,
        1.0 + s, rule.tail_rel_tol);
    total += w * tail.value;
  };
  visit(m, s, rule.boost, pair_sink, tail_sink);
  return total;
}

Eigen::MatrixXd linearized_stiffness(int n, double dx, FracOrder order) {
  require(n >= 1 && dx > 0.0, "invalid grid");
  const double s = order.value();
  const double norm = (1.0 + s) * s * (1.0 - s) * (2.0 - s);
  auto F = [&](double r) { return std::pow(std::abs(r), 2.0 - s) / norm; };
  std::vector<double> c(n);
  for (int k = 0; k < n; ++k)
    c[k] = -2.0 * (F(k - 2) - 4.0 * F(k - 1) + 6.0 * F(k) - 4.0 * F(k + 1) + F(k + 2));
  const double scale = std::pow(dx, -s);
  Eigen::MatrixXd J(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) J(i, j) = scale * c[std::abs(i - j)];
  return J;
}

}  // namespace nmg

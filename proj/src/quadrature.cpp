#include "nmg/quadrature.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include <boost/math/special_functions/legendre.hpp>

namespace nmg {
namespace {

constexpr int kMaxPoints = 64;

struct Table {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Table build(int n) {
  const auto zeros = boost::math::legendre_p_zeros<double>(n);  // nonnegative half
  Table t;
  std::vector<double> x;
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it)
    if (*it != 0.0) x.push_back(-*it);
  for (double z : zeros) x.push_back(z);
  for (double xi : x) {
    const double dp = boost::math::legendre_p_prime(n, xi);
    t.nodes.push_back(xi);
    t.weights.push_back(2.0 / ((1.0 - xi * xi) * dp * dp));
  }
  return t;
}

}  // namespace

GaussRule gauss_legendre(int points) {
  static std::vector<Table> cache(kMaxPoints + 1);
  static std::once_flag once;
  std::call_once(once, [] {
    for (int n = 1; n <= kMaxPoints; ++n) cache[n] = build(n);
  });
  const int n = std::clamp(points, 1, kMaxPoints);
  return {cache[n].nodes, cache[n].weights};
}

}  // namespace nmg

#include "staircase/floor.hpp"

#include <cmath>
#include <stdexcept>

namespace staircase {

namespace {

double check_probs(const PatternShape& shape, double p, double xi) {
  if (p < 0 || xi < 0 || p + xi >= 1.0) {
    throw std::invalid_argument("need p, xi >= 0 and p + xi < 1");
  }
  return std::pow(p + xi, shape.eps);
}

double contribution(const PatternShape& shape, int m, double p, double xi, const BigInt& count) {
  const double weight = check_probs(shape, p, xi);
  const double a = count_positions(m, shape.K, shape.L).convert_to<double>();
  const double eps_density = static_cast<double>(shape.eps) / (static_cast<double>(m) * m);
  return eps_density * a * count.convert_to<double>() * weight;
}

}  // namespace

double p_c_old(const PatternShape& shape, int m, double p, double xi) {
  return contribution(shape, m, p, xi, n_hat(shape));
}

double p_c_new(const PatternShape& shape, int m, double p, double xi) {
  return contribution(shape, m, p, xi, exact_count(shape));
}

double floor_bound_old(int K, int L, int m, double p, double xi, int t) {
  const auto [eps_min, eps_max] = epsilon_bounds(K, L, t);
  double sum = 0.0;
  for (long eps = eps_min; eps <= eps_max; ++eps) {
    sum += p_c_old({K, L, static_cast<int>(eps), t}, m, p, xi);
  }
  return sum;
}

FloorTerm make_floor_term(const PatternShape& shape, int m, double p, double xi,
                          double solved_fraction,
                          std::optional<std::pair<long, std::uint64_t>> gamma) {
  FloorTerm t;
  t.shape = shape;
  t.A = count_positions(m, shape.K, shape.L);
  t.N_hat = n_hat(shape);
  t.N_tilde = row_count_tilde(shape);
  t.N_exact = exact_count(shape);
  if (gamma) {
    t.N_approx = n_approx(shape, gamma_estimate(shape, gamma->first, gamma->second));
  }
  t.p = p;
  t.xi = xi;
  t.P_C_old = p_c_old(shape, m, p, xi);
  t.P_C_new = p_c_new(shape, m, p, xi);
  t.solved_fraction = solved_fraction;
  t.P_floor = (1.0 - solved_fraction) * t.P_C_new;
  return t;
}

double floor_total(std::span<const FloorTerm> terms) {
  double sum = 0.0;
  for (const FloorTerm& t : terms) sum += t.P_floor;
  return sum;
}

double capacity_threshold(double rate) {
  if (rate <= 0.0 || rate >= 1.0) throw std::invalid_argument("rate must be in (0, 1)");
  const auto h2 = [](double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); };
  double lo = 1e-300, hi = 0.5;
  // 1 - h2 is decreasing on (0, 1/2); find p with 1 - h2(p) = rate.
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (1.0 - h2(mid) > rate) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double capacity_threshold(long rate_num, long rate_den) {
  if (rate_den <= 0) throw std::invalid_argument("rate denominator must be positive");
  return capacity_threshold(static_cast<double>(rate_num) / static_cast<double>(rate_den));
}

std::vector<FloorCurvePoint> conjectured_floor_curve(std::span<const ShapeFraction> shapes, int m,
                                                     double xi, std::span<const double> p_grid) {
  // Per-shape constants: eps/m^2 * A * N.
  std::vector<double> base(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const PatternShape& s = shapes[i].shape;
    base[i] = static_cast<double>(s.eps) / (static_cast<double>(m) * m) *
              count_positions(m, s.K, s.L).convert_to<double>() *
              exact_count(s).convert_to<double>();
  }
  std::vector<FloorCurvePoint> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) {
    FloorCurvePoint pt;
    pt.p = p;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const double c = base[i] * std::pow(p + xi, shapes[i].shape.eps);
      pt.ber_regular += c;
      pt.ber_improved += (1.0 - shapes[i].solved_fraction) * c;
    }
    out.push_back(pt);
  }
  return out;
}

std::vector<ShapeFraction> reference_shape_fractions() {
  return {
      {{3, 3, 9, 2}, 1.00},  {{3, 4, 12, 2}, 0.51},  {{4, 3, 12, 2}, 0.56},
      {{4, 4, 12, 2}, 1.00}, {{4, 4, 13, 2}, 1.00},  {{4, 4, 14, 2}, 0.79},
      {{5, 5, 15, 2}, 1.00}, {{5, 5, 16, 2}, 0.999}, {{5, 5, 17, 2}, 0.974},
      {{5, 5, 18, 2}, 0.951},{{6, 6, 18, 2}, 0.999}, {{6, 6, 19, 2}, 0.999},
      {{6, 6, 20, 2}, 0.989},{{7, 7, 21, 2}, 1.00},  {{7, 7, 22, 2}, 0.999},
      {{7, 7, 23, 2}, 0.99},
  };
}

}  // namespace staircase

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "staircase/counting.hpp"

namespace staircase {

// Per-shape error-floor record: counts, probabilities, and the residual
// contribution after accounting for the fraction of patterns the improved
// decoder resolves.
struct FloorTerm {
  PatternShape shape;
  BigInt A;        // row/column placement count A_{K,L}
  BigInt N_hat;    // distribution-count upper bound
  BigInt N_tilde;  // row-constrained count
  BigInt N_exact;  // exact stall-pattern count
  double N_approx = 0.0;  // gamma_hat * N_tilde, when estimated
  double p = 0.0;
  double xi = 0.0;
  double P_C_old = 0.0;
  double P_C_new = 0.0;
  double solved_fraction = 0.0;
  double P_floor = 0.0;  // (1 - solved_fraction) * P_C_new
};

// Contribution of one (K, L, eps) class to the output error floor, using the
// N-hat bound (old) or the exact count (new).
double p_c_old(const PatternShape& shape, int m, double p, double xi);
double p_c_new(const PatternShape& shape, int m, double p, double xi);

// Sum of p_c_old over the full weight range of a (K, L) class.
double floor_bound_old(int K, int L, int m, double p, double xi, int t);

// Builds a complete term; pass gamma_samples+seed to also fill N_approx.
FloorTerm make_floor_term(const PatternShape& shape, int m, double p, double xi,
                          double solved_fraction,
                          std::optional<std::pair<long, std::uint64_t>> gamma = std::nullopt);

double floor_total(std::span<const FloorTerm> terms);

// BSC crossover probability where 1 - h2(p) equals the code rate, solved by
// bisection to 1e-12 absolute.
double capacity_threshold(long rate_num, long rate_den);
double capacity_threshold(double rate);

struct FloorCurvePoint {
  double p = 0.0;
  double ber_regular = 0.0;   // every stall pattern left unresolved
  double ber_improved = 0.0;  // residuals weighted by solved fractions
};

struct ShapeFraction {
  PatternShape shape;
  double solved_fraction = 0.0;
};

// Formula-driven error-floor conjecture curves over a crossover-probability
// grid; both curves use the exact per-shape counts.
std::vector<FloorCurvePoint> conjectured_floor_curve(std::span<const ShapeFraction> shapes, int m,
                                                     double xi, std::span<const double> p_grid);

// The (K, L, eps) classes and solved fractions used for the quartered-block
// staircase study; shared by the CLI defaults.
std::vector<ShapeFraction> reference_shape_fractions();

}  // namespace staircase

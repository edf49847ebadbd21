#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace roughsew {

// One-parameter increment magnitude: (s,t) -> |f_{s,t}|, s <= t.
using IncrementFn = std::function<double(double, double)>;

// Two-parameter rectangle magnitude: (s,t;u,v) -> |A(s,t;u,v)|.
using RectFn = std::function<double(double, double, double, double)>;

// A control function w(s,t): nonnegative, vanishing on the diagonal and
// superadditive in the middle point. Immutable; evaluation is const.
class Control {
public:
    Control() = default;
    Control(std::function<double(double, double)> eval, double horizon);

    double operator()(double s, double t) const;
    double horizon() const { return horizon_; }

    // w(s,t) = t - s.
    static Control length(double horizon);

private:
    std::function<double(double, double)> eval_;
    double horizon_ = 0.0;
};

// p-variation of an increment function over the points of `grid`:
// sup over sub-partitions through both endpoints of (sum |f|^p)^(1/p),
// computed exactly by dynamic programming. Rejects p < 1.
double p_variation(const IncrementFn& f, std::span<const double> grid, double p);

// Exhaustive reference for p_variation: enumerates all 2^(n-2) sub-partitions.
double p_variation_bruteforce(const IncrementFn& f, std::span<const double> grid, double p);

enum class MixedMode { exact, greedy };

// Mixed (p,q)-variation of A over grid_s x grid_u:
// sup over sub-grid-partitions of (sum_n (sum_m |A(cell)|^p)^(q/p))^(1/q).
// Exact mode enumerates all sub-partitions per axis (both sizes capped at 12);
// greedy mode returns a certified lower bound (the full-grid value).
double mixed_variation(const RectFn& A, std::span<const double> grid_s,
                       std::span<const double> grid_u, double p, double q,
                       MixedMode mode);

// Result of an omega-controlled norm estimate. `infinite` flags a sampled
// point with w = 0 but A != 0; comparisons must check the flag, not the value.
struct OmegaNorm {
    double value = 0.0;
    bool infinite = false;
};

// sup over sampled pairs of |A_{s,t}| / w(s,t)^(1/p), skipping degenerate
// intervals where both vanish.
OmegaNorm omega_norm(const IncrementFn& f, const Control& w, double p,
                     std::span<const double> times);

// Two-parameter version: sup |A(s,t;u,v)| / (w(s,t)^(1/p) wt(u,v)^(1/q)).
OmegaNorm omega_norm2(const RectFn& A, const Control& w, const Control& wt,
                      double p, double q, std::span<const double> times_s,
                      std::span<const double> times_u);

// Sampled path data: strictly increasing times, one d-vector per time.
struct PathSamples {
    std::vector<double> times;
    std::vector<std::vector<double>> values;  // values[i].size() == d

    int dim() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
    // Piecewise-linear interpolation at time t.
    std::vector<double> at(double t) const;
};

// The canonical control of a sampled path: w(s,t) = pvar_p([s,t])^p of the
// piecewise-linear interpolant, superadditive by construction. Evaluations on
// sample-grid pairs are memoized; the memo is value-deterministic (each entry
// is always computed from the raw samples, never from other entries).
Control pvar_control(std::shared_ptr<const PathSamples> samples, double p);

}  // namespace roughsew

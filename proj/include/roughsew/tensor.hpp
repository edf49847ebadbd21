#pragma once

#include <span>
#include <vector>

namespace roughsew {

// A truncated element of the tensor series over R^d: one dense level per
// degree 0..L. Level l is stored as a flat row-major array of d^l entries,
// the multi-index (i_1,...,i_l) living at offset sum_k i_k * d^(l-k).
// Values are immutable after construction and safe to share across threads.
class TensorSequence {
public:
    TensorSequence(int dim, int max_level);

    static TensorSequence unit(int dim, int max_level);

    int dim() const { return dim_; }
    int max_level() const { return max_level_; }

    std::span<const double> level(int l) const;
    std::span<double> level(int l);

    double& scalar() { return levels_[0][0]; }
    double scalar() const { return levels_[0][0]; }

    // Number of entries at level l, i.e. dim^l.
    std::size_t level_size(int l) const;

private:
    int dim_;
    int max_level_;
    std::vector<std::vector<double>> levels_;
};

// Checks that a level budget is sane before allocating: rejects requests
// with d^L > 1e7 (or above the ROUGHSEW_MAX_LEVEL override).
void check_level_budget(int dim, int max_level);

// Truncated tensor-algebra product: result level l = sum_{i+j=l} a_i (x) b_j,
// truncated to min(a.max_level, b.max_level). Associative up to truncation.
TensorSequence tensor_mul(const TensorSequence& a, const TensorSequence& b);

// Exponential lift of a linear segment: level l equals increment^(x)l / l!.
TensorSequence segment_exp(std::span<const double> increment, int max_level);

// Inverse of a group-like element (level 0 must be 1): the truncated Neumann
// series of 1/(1 + x).
TensorSequence group_inverse(const TensorSequence& a);

// Euclidean inner product of the two level-l arrays.
double level_inner(const TensorSequence& a, const TensorSequence& b, int l);

// Euclidean norm of level l.
double level_norm(const TensorSequence& a, int l);

}  // namespace roughsew

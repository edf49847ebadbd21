#include "roughsew/tensor.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace roughsew {

namespace {

std::size_t pow_size(int dim, int level) {
    std::size_t n = 1;
    for (int i = 0; i < level; ++i) n *= static_cast<std::size_t>(dim);
    return n;
}

}  // namespace

void check_level_budget(int dim, int max_level) {
    if (dim < 1) throw std::invalid_argument("tensor dimension must be >= 1");
    if (max_level < 0) throw std::invalid_argument("tensor level must be >= 0");
    double cap = 1e7;
    if (const char* env = std::getenv("ROUGHSEW_MAX_LEVEL")) {
        // The override raises the per-level entry cap to d^L for the given L.
        int lvl = std::atoi(env);
        if (lvl > 0) cap = std::pow(static_cast<double>(dim), lvl);
    }
    if (std::pow(static_cast<double>(dim), max_level) > cap) {
        throw std::invalid_argument("tensor level budget exceeded: dim^level > cap (" +
                                    std::to_string(dim) + "^" + std::to_string(max_level) + ")");
    }
}

TensorSequence::TensorSequence(int dim, int max_level) : dim_(dim), max_level_(max_level) {
    check_level_budget(dim, max_level);
    levels_.resize(static_cast<std::size_t>(max_level) + 1);
    for (int l = 0; l <= max_level; ++l) levels_[l].assign(pow_size(dim, l), 0.0);
}

TensorSequence TensorSequence::unit(int dim, int max_level) {
    TensorSequence t(dim, max_level);
    t.scalar() = 1.0;
    return t;
}

std::span<const double> TensorSequence::level(int l) const {
    if (l < 0 || l > max_level_) throw std::out_of_range("tensor level out of range");
    return levels_[l];
}

std::span<double> TensorSequence::level(int l) {
    if (l < 0 || l > max_level_) throw std::out_of_range("tensor level out of range");
    return levels_[l];
}

std::size_t TensorSequence::level_size(int l) const { return pow_size(dim_, l); }

TensorSequence tensor_mul(const TensorSequence& a, const TensorSequence& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("tensor_mul: incompatible alphabets (dim mismatch)");
    const int dim = a.dim();
    const int L = std::min(a.max_level(), b.max_level());
    TensorSequence out(dim, L);
    for (int l = 0; l <= L; ++l) {
        auto dst = out.level(l);
        for (int i = 0; i <= l; ++i) {
            const int j = l - i;
            auto ai = a.level(i);
            auto bj = b.level(j);
            const std::size_t nb = bj.size();
            // (x (x) y) at flat index x*d^j + y.
            for (std::size_t x = 0; x < ai.size(); ++x) {
                const double ax = ai[x];
                if (ax == 0.0) continue;
                double* row = dst.data() + x * nb;
                for (std::size_t y = 0; y < nb; ++y) row[y] += ax * bj[y];
            }
        }
    }
    return out;
}

TensorSequence segment_exp(std::span<const double> increment, int max_level) {
    const int dim = static_cast<int>(increment.size());
    TensorSequence out = TensorSequence::unit(dim, max_level);
    // level l = increment^(x)l / l!, built by repeated Kronecker extension.
    for (int l = 1; l <= max_level; ++l) {
        auto prev = out.level(l - 1);
        auto cur = out.level(l);
        const double inv_l = 1.0 / static_cast<double>(l);
        for (std::size_t x = 0; x < prev.size(); ++x) {
            for (int i = 0; i < dim; ++i)
                cur[x * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i)] =
                    prev[x] * increment[i] * inv_l;
        }
    }
    return out;
}

TensorSequence group_inverse(const TensorSequence& a) {
    const int L = a.max_level();
    if (a.scalar() == 0.0)
        throw std::invalid_argument("group_inverse: level 0 must be nonzero");
    // a = c(1 + x) with x strictly positive degree; inverse is
    // (1/c) sum_{k<=L} (-x)^k, exact at the truncation level.
    TensorSequence x(a.dim(), L);
    const double inv_c = 1.0 / a.scalar();
    for (int l = 1; l <= L; ++l) {
        auto src = a.level(l);
        auto dst = x.level(l);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] = -src[i] * inv_c;
    }
    TensorSequence out = TensorSequence::unit(a.dim(), L);
    TensorSequence pw = TensorSequence::unit(a.dim(), L);
    for (int k = 1; k <= L; ++k) {
        pw = tensor_mul(pw, x);
        for (int l = k; l <= L; ++l) {
            auto src = pw.level(l);
            auto dst = out.level(l);
            for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
        }
    }
    for (int l = 0; l <= L; ++l) {
        auto dst = out.level(l);
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] *= inv_c;
    }
    return out;
}

double level_inner(const TensorSequence& a, const TensorSequence& b, int l) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("level_inner: incompatible alphabets (dim mismatch)");
    auto av = a.level(l);
    auto bv = b.level(l);
    double acc = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i) acc += av[i] * bv[i];
    return acc;
}

double level_norm(const TensorSequence& a, int l) {
    auto av = a.level(l);
    double acc = 0.0;
    for (double v : av) acc += v * v;
    return std::sqrt(acc);
}

}  // namespace roughsew

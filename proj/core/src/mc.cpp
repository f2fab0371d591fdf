#include "symineq/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "symineq/sympoly.hpp"
#include "symineq/threads.hpp"

namespace symineq {

double sample_exponential(RngStream& stream) {
    return -std::log1p(-stream.next_unit());
}

namespace {

constexpr std::uint64_t kBlockSize = 1u << 16;

struct Accum {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double v) {
        ++count;
        const double delta = v - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (v - mean);
    }

    // Chan's pairwise combination; applied in block order.
    void merge(const Accum& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double delta = o.mean - mean;
        const std::uint64_t n = count + o.count;
        mean += delta * static_cast<double>(o.count) / static_cast<double>(n);
        m2 += o.m2 + delta * delta * static_cast<double>(count) *
                         static_cast<double>(o.count) / static_cast<double>(n);
        count = n;
    }
};

double pow_int(double base, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace

McEstimate estimate_hk(std::span<const double> x, int k, std::uint64_t samples,
                       std::uint64_t seed) {
    require_nonneg(x, "estimate_hk");
    if (k < 0) throw std::domain_error("estimate_hk: k must be >= 0");
    if (samples < 2) throw std::domain_error("estimate_hk: samples must be >= 2");

    double k_factorial = 1.0;
    for (int i = 2; i <= k; ++i) k_factorial *= i;

    const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
    std::vector<Accum> acc(blocks);
    std::vector<char> overflow(blocks, 0);
    parallel_for(blocks, [&](std::uint64_t b) {
        RngStream stream(mix64(mix64(seed) + b));
        const std::uint64_t lo = b * kBlockSize;
        const std::uint64_t hi = std::min(samples, lo + kBlockSize);
        Accum a;
        for (std::uint64_t s = lo; s < hi; ++s) {
            double dot = 0.0;
            for (double xi : x) dot += sample_exponential(stream) * xi;
            const double v = pow_int(dot, k) / k_factorial;
            if (!std::isfinite(v)) {
                overflow[b] = 1;
                return;
            }
            a.push(v);
        }
        acc[b] = a;
    });
    for (std::uint64_t b = 0; b < blocks; ++b)
        if (overflow[b])
            throw std::overflow_error(
                "estimate_hk: (xi . x)^k overflowed; rescale by homogeneity "
                "(estimate on x / max(x) and multiply the mean by max(x)^k)");

    Accum total;
    for (const Accum& a : acc) total.merge(a);

    McEstimate est;
    est.k = k;
    est.samples = total.count;
    est.mean = total.mean;
    const double n = static_cast<double>(total.count);
    est.std_error = std::sqrt(total.m2 / (n - 1.0) / n);
    return est;
}

}  // namespace symineq

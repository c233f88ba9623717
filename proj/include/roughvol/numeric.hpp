#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace roughvol {

/// Full linear convolution (FFT-backed for large inputs): out[k] = sum_j a[j] b[k-j],
/// length a.size() + b.size() - 1.
Eigen::ArrayXd fft_convolve_full(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
    explicit GaussLegendre(int n);
};

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

/// Ordinary least squares of y against x.
OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0; // standard error of the mean
    double sd = 0.0;
};
MeanStderr mean_stderr(const std::vector<double>& values);

/// Run fn(i) for i in [0, count) over a small thread pool; fn must only touch
/// its own slot of any shared output. Results are independent of the thread
/// count by construction.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Default thread count: ROUGHVOL_THREADS env var, else hardware concurrency.
int default_thread_count();

} // namespace roughvol

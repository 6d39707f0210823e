// Haar orthogonal sampling (Gaussian QR with diagonal sign correction) and
// statistical estimation of trace moments and cumulants. Floating point lives
// here and only here; the exact engine is the reference these estimates are
// checked against. Estimates are bit-reproducible for a fixed SamplerConfig
// regardless of worker-thread count: sampling is split into fixed batches
// with counter-based per-sample random streams, and batch results are
// combined in index order.
#pragma once

#include <orthowg/trace.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orthowg {

struct SamplerConfig {
    int d = 2;
    long samples = 10000;
    std::uint64_t seed = 1;
    int haar_count = 1;   // independent Haar matrices per sample
    int batches = 50;     // also the jackknife blocks
};

struct Estimate {
    double value = 0;
    double stderr_ = 0;
    long samples = 0;
};

// double-precision matrices keyed like the exact MatrixSet
class MatrixSetD {
public:
    explicit MatrixSetD(int d) : d_(d) {}
    static MatrixSetD from_exact(const MatrixSet& mats);
    int dim() const { return d_; }
    void insert(const std::string& id, Eigen::MatrixXd m);
    const Eigen::MatrixXd& matrix(const std::string& id) const;
    bool contains(const std::string& id) const;

private:
    int d_;
    std::map<std::string, Eigen::MatrixXd> mats_;
    mutable std::map<std::string, Eigen::MatrixXd> cache_;
};

// one Haar orthogonal matrix from the given random stream
Eigen::MatrixXd sample_haar_orthogonal(int d, std::uint64_t stream);

// worker count: ORTHOWG_THREADS when set, else hardware concurrency (capped)
int worker_count();

// mean and standard error of the product over words of their trace values
Estimate estimate_moment(const std::vector<WordSpec>& words, const MatrixSetD& mats,
                         const SamplerConfig& cfg);

// plug-in joint cumulant of the r trace variables, stderr by jackknife over
// the batches; r = words.size() must be <= 4
Estimate estimate_cumulant(const std::vector<WordSpec>& words, const MatrixSetD& mats,
                           const SamplerConfig& cfg);

}  // namespace orthowg

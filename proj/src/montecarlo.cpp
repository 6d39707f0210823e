#include <orthowg/montecarlo.hpp>

#include <orthowg/setpart.hpp>

#include <Eigen/QR>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace orthowg {

namespace {

// splitmix64: the per-sample counter stream
struct Splitmix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() {  // in (0, 1]
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }
};

// Box-Muller over splitmix64, fully specified (no library distributions)
struct Gaussian {
    Splitmix rng;
    bool have_spare = false;
    double spare = 0;
    double next() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = rng.uniform01();
        double u2 = rng.uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare = r * std::sin(2.0 * M_PI * u2);
        have_spare = true;
        return r * std::cos(2.0 * M_PI * u2);
    }
};

std::uint64_t stream_for(std::uint64_t seed, long sample, int haar_index) {
    Splitmix s{seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(sample + 1)) ^
               (0xd1342543de82ef95ULL * static_cast<std::uint64_t>(haar_index + 1))};
    return s.next();
}

}  // namespace

Eigen::MatrixXd sample_haar_orthogonal(int d, std::uint64_t stream) {
    Gaussian g{Splitmix{stream}};
    Eigen::MatrixXd x(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) x(i, j) = g.next();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR();
    // absorb the sign of R's diagonal so the law is exactly Haar
    for (int i = 0; i < d; ++i)
        if (r(i, i) < 0) q.col(i) = -q.col(i);
    return q;
}

MatrixSetD MatrixSetD::from_exact(const MatrixSet& mats) {
    MatrixSetD out(mats.dim());
    for (const auto& [id, m] : mats.matrices()) {
        Eigen::MatrixXd e(mats.dim(), mats.dim());
        for (int i = 1; i <= mats.dim(); ++i)
            for (int j = 1; j <= mats.dim(); ++j) e(i - 1, j - 1) = m.entry(i, j).get_d();
        out.insert(id, std::move(e));
    }
    return out;
}

void MatrixSetD::insert(const std::string& id, Eigen::MatrixXd m) {
    if (m.rows() != d_ || m.cols() != d_)
        throw std::invalid_argument("matrix '" + id + "' has wrong dimension");
    mats_.insert_or_assign(id, std::move(m));
}

bool MatrixSetD::contains(const std::string& id) const {
    return id == kIdentitySymbol || mats_.count(id) > 0;
}

const Eigen::MatrixXd& MatrixSetD::matrix(const std::string& id) const {
    if (auto it = mats_.find(id); it != mats_.end()) return it->second;
    if (id == kIdentitySymbol) {
        auto it = cache_.find(id);
        if (it == cache_.end())
            it = cache_.emplace(id, Eigen::MatrixXd::Identity(d_, d_)).first;
        return it->second;
    }
    throw std::invalid_argument("unknown matrix symbol '" + id + "'");
}

int worker_count() {
    if (const char* env = std::getenv("ORTHOWG_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

namespace {

int max_haar_label(const std::vector<WordSpec>& words) {
    int m = 0;
    for (const auto& w : words)
        for (const auto& t : w.haar_traces)
            for (const auto& s : t) m = std::max(m, s.label);
    return m;
}

// trace values of all words for one sample
std::vector<double> evaluate_sample(const std::vector<WordSpec>& words, const MatrixSetD& mats,
                                    const std::vector<Eigen::MatrixXd>& haars) {
    const int d = mats.dim();
    std::vector<double> out;
    out.reserve(words.size());
    for (const auto& w : words) {
        double value = 1.0;
        for (const auto& trace : w.haar_traces) {
            Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(d, d);
            for (const auto& slot : trace) {
                const Eigen::MatrixXd& o = haars[static_cast<size_t>(slot.label) - 1];
                if (slot.eps > 0)
                    prod = prod * o;
                else
                    prod = prod * o.transpose();
                for (const auto& s : slot.word) {
                    const Eigen::MatrixXd& a = mats.matrix(s.id);
                    if (s.transpose)
                        prod = prod * a.transpose();
                    else
                        prod = prod * a;
                }
            }
            value *= prod.trace();
        }
        for (const auto& plain : w.plain_traces) {
            Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(d, d);
            for (const auto& s : plain) {
                const Eigen::MatrixXd& a = mats.matrix(s.id);
                prod = prod * (s.transpose ? a.transpose() : a);
            }
            value *= prod.trace();
        }
        out.push_back(value);
    }
    return out;
}

// per-batch sums of prod_{i in S} X_i for every nonempty subset S of [r]
struct BatchSums {
    std::vector<std::vector<double>> subset_sums;  // [batch][subset_mask - 1]
    std::vector<long> counts;
};

BatchSums accumulate(const std::vector<WordSpec>& words, const MatrixSetD& mats,
                     const SamplerConfig& cfg) {
    const int r = static_cast<int>(words.size());
    const int n_subsets = (1 << r) - 1;
    const int batches = static_cast<int>(std::min<long>(cfg.batches, cfg.samples));
    BatchSums sums;
    sums.subset_sums.assign(static_cast<size_t>(batches),
                            std::vector<double>(static_cast<size_t>(n_subsets), 0.0));
    sums.counts.assign(static_cast<size_t>(batches), 0);

    auto run_batch = [&](int b) {
        long lo = cfg.samples * b / batches;
        long hi = cfg.samples * (b + 1) / batches;
        auto& acc = sums.subset_sums[static_cast<size_t>(b)];
        for (long s = lo; s < hi; ++s) {
            std::vector<Eigen::MatrixXd> haars;
            haars.reserve(static_cast<size_t>(cfg.haar_count));
            for (int h = 0; h < cfg.haar_count; ++h)
                haars.push_back(sample_haar_orthogonal(cfg.d, stream_for(cfg.seed, s, h)));
            std::vector<double> x = evaluate_sample(words, mats, haars);
            for (int mask = 1; mask <= n_subsets; ++mask) {
                double prod = 1.0;
                for (int i = 0; i < r; ++i)
                    if (mask & (1 << i)) prod *= x[static_cast<size_t>(i)];
                acc[static_cast<size_t>(mask) - 1] += prod;
            }
        }
        sums.counts[static_cast<size_t>(b)] = hi - lo;
    };

    const int workers = std::min(worker_count(), batches);
    if (workers <= 1) {
        for (int b = 0; b < batches; ++b) run_batch(b);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int b = next.fetch_add(1); b < batches; b = next.fetch_add(1)) run_batch(b);
            });
        for (auto& t : pool) t.join();
    }
    return sums;
}

int needed_haars(const std::vector<WordSpec>& words, const SamplerConfig& cfg) {
    int m = max_haar_label(words);
    if (m > cfg.haar_count)
        throw std::invalid_argument("words reference more haar labels than cfg.haar_count");
    return std::max(m, 1);
}

}  // namespace

Estimate estimate_moment(const std::vector<WordSpec>& words, const MatrixSetD& mats,
                         const SamplerConfig& cfg) {
    if (words.empty()) throw std::invalid_argument("no words given");
    SamplerConfig c = cfg;
    c.haar_count = std::max(cfg.haar_count, needed_haars(words, cfg));
    // the moment of a product of words is the single full-product subset
    BatchSums sums = accumulate(words, mats, c);
    const int full = (1 << words.size()) - 1;
    double total = 0, totalsq = 0;
    long n = 0;
    // accumulate mean and batch-based variance in fixed batch order
    std::vector<double> batch_means;
    for (size_t b = 0; b < sums.counts.size(); ++b) {
        total += sums.subset_sums[b][static_cast<size_t>(full) - 1];
        n += sums.counts[b];
        batch_means.push_back(sums.subset_sums[b][static_cast<size_t>(full) - 1] /
                              static_cast<double>(sums.counts[b]));
    }
    double mean = total / static_cast<double>(n);
    const double nb = static_cast<double>(batch_means.size());
    for (double bm : batch_means) totalsq += (bm - mean) * (bm - mean);
    double stderr_ = nb > 1 ? std::sqrt(totalsq / (nb * (nb - 1))) : 0.0;
    return Estimate{mean, stderr_, n};
}

Estimate estimate_cumulant(const std::vector<WordSpec>& words, const MatrixSetD& mats,
                           const SamplerConfig& cfg) {
    const int r = static_cast<int>(words.size());
    if (r < 1 || r > 4) throw std::invalid_argument("estimate_cumulant supports 1 <= r <= 4");
    SamplerConfig c = cfg;
    c.haar_count = std::max(cfg.haar_count, needed_haars(words, cfg));
    BatchSums sums = accumulate(words, mats, c);
    const int batches = static_cast<int>(sums.counts.size());
    const int n_subsets = (1 << r) - 1;

    long total_count = 0;
    std::vector<double> total(static_cast<size_t>(n_subsets), 0.0);
    for (int b = 0; b < batches; ++b) {
        total_count += sums.counts[static_cast<size_t>(b)];
        for (int m = 0; m < n_subsets; ++m)
            total[static_cast<size_t>(m)] += sums.subset_sums[static_cast<size_t>(b)][static_cast<size_t>(m)];
    }

    auto plug_in = [&](const std::vector<double>& subset_means) {
        auto moments = [&](const SetPartition& V) {
            double prod = 1.0;
            for (const auto& blk : V.blocks()) {
                int mask = 0;
                for (int k : blk) mask |= 1 << (k - 1);
                prod *= subset_means[static_cast<size_t>(mask) - 1];
            }
            return prod;
        };
        return joint_cumulant<double>(moments, SetPartition::one_block(r));
    };

    std::vector<double> means(static_cast<size_t>(n_subsets));
    for (int m = 0; m < n_subsets; ++m)
        means[static_cast<size_t>(m)] = total[static_cast<size_t>(m)] / static_cast<double>(total_count);
    double value = plug_in(means);

    // jackknife over batches
    std::vector<double> theta;
    for (int b = 0; b < batches; ++b) {
        long cnt = total_count - sums.counts[static_cast<size_t>(b)];
        if (cnt <= 0) continue;
        std::vector<double> loo(static_cast<size_t>(n_subsets));
        for (int m = 0; m < n_subsets; ++m)
            loo[static_cast<size_t>(m)] =
                (total[static_cast<size_t>(m)] - sums.subset_sums[static_cast<size_t>(b)][static_cast<size_t>(m)]) /
                static_cast<double>(cnt);
        theta.push_back(plug_in(loo));
    }
    double stderr_ = 0;
    if (theta.size() > 1) {
        double mean_theta = 0;
        for (double t : theta) mean_theta += t;
        mean_theta /= static_cast<double>(theta.size());
        double ss = 0;
        for (double t : theta) ss += (t - mean_theta) * (t - mean_theta);
        const double nb = static_cast<double>(theta.size());
        stderr_ = std::sqrt((nb - 1.0) / nb * ss);
    }
    return Estimate{value, stderr_, total_count};
}

}  // namespace orthowg

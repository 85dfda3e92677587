#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cras/model.hpp"
#include "cras/schemes.hpp"
#include "cras/specfun.hpp"

namespace cras::montecarlo {

/// Simulation settings. Estimates are bit-identical for a fixed
/// (master_seed, trials) no matter how many chunks run in parallel: trials
/// are processed in fixed-size blocks whose partial statistics merge in
/// block order.
struct SimConfig {
    std::uint64_t trials = 100000;
    std::uint64_t master_seed = 0x1905C0FFEEULL;
    int parallel_chunks = 1;
};

inline SimConfig validate(const SimConfig& sim) {
    if (sim.trials < 1)
        throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (sim.parallel_chunks < 1)
        throw std::invalid_argument("SimConfig: parallel_chunks must be >= 1");
    return sim;
}

struct TrialRecord {
    SelectionOutcome outcome;
    double sinr = 0.0;  // 0 when halted
    double rate = 0.0;  // log2(1 + sinr), 0 when halted
};

namespace detail {

// Philox4x32-10 block cipher: the counter-based generator behind all
// channel draws. Key = master seed, counter = (block, trial). Every draw is
// a pure function of (seed, trial, draw index), which is what makes chunked
// execution order-independent.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kBump0 = 0x9E3779B9u;
    static constexpr std::uint32_t kBump1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                              std::array<std::uint32_t, 4> ctr) {
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
                   static_cast<std::uint32_t>(p0)};
            k0 += kBump0;
            k1 += kBump1;
        }
        return ctr;
    }
};

}  // namespace detail

/// Random substream for one trial: successive uniforms come from Philox
/// blocks counted within the trial.
class TrialStream {
public:
    TrialStream(std::uint64_t master_seed, std::uint64_t trial)
        : key_(master_seed), trial_(trial) {}

    std::uint64_t next_u64() {
        if (cached_ == 0) {
            const auto words = detail::Philox4x32::block(
                key_, {block_, static_cast<std::uint32_t>(trial_),
                       static_cast<std::uint32_t>(trial_ >> 32), 0x243F6A88u});
            ++block_;
            cache_[0] = (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
            cache_[1] = (static_cast<std::uint64_t>(words[3]) << 32) | words[2];
            cached_ = 2;
        }
        return cache_[--cached_];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential with the given rate via inverse CDF; strictly finite.
    double next_exponential(double rate) {
        return -std::log1p(-next_uniform()) / rate;
    }

private:
    std::uint64_t key_;
    std::uint64_t trial_;
    std::uint32_t block_ = 0;
    std::uint64_t cache_[2] = {0, 0};
    int cached_ = 0;
};

/// IID Rayleigh draw: |h_0|^2 ~ Exp(lambda_ps), |h_i|^2 ~ Exp(lambda_ss),
/// |g_i|^2 ~ Exp(lambda_sp). Draw order interleaves h_i and g_i so that a
/// realization for N antennas extends the one for fewer antennas on the
/// same (seed, trial) — common random numbers stay coupled across N.
inline ChannelRealization draw_channels(const SystemParams& params,
                                        TrialStream& stream) {
    ChannelRealization ch;
    ch.h0_sq = stream.next_exponential(params.rate_ps);
    ch.h_sq.resize(params.n_antennas);
    ch.g_sq.resize(params.n_antennas);
    for (int i = 0; i < params.n_antennas; ++i) {
        ch.h_sq[i] = stream.next_exponential(params.rate_ss);
        ch.g_sq[i] = stream.next_exponential(params.rate_sp);
    }
    return ch;
}

inline TrialRecord simulate_trial(const SystemParams& params,
                                  schemes::SchemeId scheme,
                                  TrialStream& stream) {
    const ChannelRealization ch = draw_channels(params, stream);
    TrialRecord record;
    if (scheme == schemes::SchemeId::single_antenna_pa) {
        const auto pa = schemes::single_antenna_pa(params, ch);
        record.outcome = SelectionOutcome::selected(1, 1);
        record.sinr = pa.sinr;
    } else {
        record.outcome = schemes::select(scheme, params, ch);
        if (!record.outcome.is_halt()) {
            const int chosen = record.outcome.antenna_index - 1;
            record.sinr = params.st_power * ch.h_sq[chosen] /
                          (params.noise + params.pt_power * ch.h0_sq);
        }
    }
    record.rate = record.outcome.is_halt()
                      ? 0.0
                      : std::log1p(record.sinr) / std::numbers::ln2;
    return record;
}

/// Derives the per-scheme seed. With common random numbers every scheme
/// sees identical channel draws; without, each scheme gets its own stream.
inline std::uint64_t scheme_seed(std::uint64_t master_seed,
                                 schemes::SchemeId scheme,
                                 bool common_random_numbers) {
    if (common_random_numbers) return master_seed;
    std::uint64_t x =
        master_seed ^ (0x9E3779B97F4A7C15ULL *
                       (static_cast<std::uint64_t>(scheme) + 0x51ED0BADULL));
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

namespace detail {

// Trials run in fixed blocks of this size; per-block partials merge in
// block order, so the result is invariant to worker count.
inline constexpr std::uint64_t kBlockTrials = 8192;

struct BlockStats {
    std::uint64_t trials = 0;
    std::uint64_t halts = 0;
    std::uint64_t outages = 0;
    double sum_rate = 0.0;
    double sum_rate_sq = 0.0;
    double sum_sinr = 0.0;
    double sum_sinr_pow = 0.0;  // sum of sinr^moment_order
    std::vector<std::uint64_t> rank_counts;
    std::vector<double> rank_sinr_sum;
    std::vector<double> rank_sinr_sq_sum;
};

struct PassOptions {
    int moment_order = 1;
    bool record_sinr = false;  // keep per-trial SINR (bootstrap input)
};

struct PassResult {
    BlockStats totals;
    std::vector<double> sinr_values;
};

inline double integer_pow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

inline PassResult run_pass(const SystemParams& params,
                           schemes::SchemeId scheme, const SimConfig& sim,
                           const PassOptions& options) {
    validate(params);
    validate(sim);

    const std::uint64_t n_blocks =
        (sim.trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockStats> blocks(n_blocks);
    std::vector<std::vector<double>> block_sinr(
        options.record_sinr ? n_blocks : 0);

    auto run_block = [&](std::uint64_t block_index) {
        BlockStats stats;
        stats.rank_counts.assign(params.n_antennas + 1, 0);
        stats.rank_sinr_sum.assign(params.n_antennas + 1, 0.0);
        stats.rank_sinr_sq_sum.assign(params.n_antennas + 1, 0.0);
        std::vector<double>* sinr_out =
            options.record_sinr ? &block_sinr[block_index] : nullptr;

        const std::uint64_t begin = block_index * kBlockTrials;
        const std::uint64_t end = std::min(begin + kBlockTrials, sim.trials);
        if (sinr_out) sinr_out->reserve(end - begin);
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            TrialStream stream(sim.master_seed, trial);
            const TrialRecord record = simulate_trial(params, scheme, stream);
            ++stats.trials;
            if (record.outcome.is_halt()) {
                ++stats.halts;
                ++stats.outages;
                ++stats.rank_counts[0];
            } else {
                if (record.sinr < params.outage_threshold) ++stats.outages;
                const int rank = record.outcome.rank;
                ++stats.rank_counts[rank];
                stats.rank_sinr_sum[rank] += record.sinr;
                stats.rank_sinr_sq_sum[rank] += record.sinr * record.sinr;
            }
            stats.sum_rate += record.rate;
            stats.sum_rate_sq += record.rate * record.rate;
            stats.sum_sinr += record.sinr;
            stats.sum_sinr_pow += integer_pow(record.sinr, options.moment_order);
            if (sinr_out) sinr_out->push_back(record.sinr);
        }
        blocks[block_index] = std::move(stats);
    };

    const int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(sim.parallel_chunks), n_blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < n_blocks; b += workers)
                    run_block(b);
            });
        }
        for (auto& worker : pool) worker.join();
    }

    PassResult result;
    result.totals.rank_counts.assign(params.n_antennas + 1, 0);
    result.totals.rank_sinr_sum.assign(params.n_antennas + 1, 0.0);
    result.totals.rank_sinr_sq_sum.assign(params.n_antennas + 1, 0.0);
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        const BlockStats& s = blocks[b];
        result.totals.trials += s.trials;
        result.totals.halts += s.halts;
        result.totals.outages += s.outages;
        result.totals.sum_rate += s.sum_rate;
        result.totals.sum_rate_sq += s.sum_rate_sq;
        result.totals.sum_sinr += s.sum_sinr;
        result.totals.sum_sinr_pow += s.sum_sinr_pow;
        for (int r = 0; r <= params.n_antennas; ++r) {
            result.totals.rank_counts[r] += s.rank_counts[r];
            result.totals.rank_sinr_sum[r] += s.rank_sinr_sum[r];
            result.totals.rank_sinr_sq_sum[r] += s.rank_sinr_sq_sum[r];
        }
        if (options.record_sinr) {
            result.sinr_values.insert(result.sinr_values.end(),
                                      block_sinr[b].begin(),
                                      block_sinr[b].end());
        }
    }
    return result;
}

}  // namespace detail

/// Fraction of trials that halted or came in below the SINR threshold.
inline MetricEstimate estimate_outage(const SystemParams& params,
                                      schemes::SchemeId scheme,
                                      const SimConfig& sim) {
    const auto pass = detail::run_pass(params, scheme, sim, {});
    const double n = static_cast<double>(pass.totals.trials);
    const double p = static_cast<double>(pass.totals.outages) / n;
    return MetricEstimate{p, std::sqrt(p * (1.0 - p) / n),
                          Method::monte_carlo, pass.totals.trials};
}

/// Mean rate log2(1 + sinr) over all trials; halted trials count zero.
inline MetricEstimate estimate_capacity(const SystemParams& params,
                                        schemes::SchemeId scheme,
                                        const SimConfig& sim) {
    const auto pass = detail::run_pass(params, scheme, sim, {});
    const double n = static_cast<double>(pass.totals.trials);
    const double mean = pass.totals.sum_rate / n;
    double variance = 0.0;
    if (pass.totals.trials > 1) {
        variance = (pass.totals.sum_rate_sq - n * mean * mean) / (n - 1.0);
        variance = std::max(0.0, variance);
    }
    return MetricEstimate{mean, std::sqrt(variance / n), Method::monte_carlo,
                          pass.totals.trials};
}

/// Sample-moment plug-in of the amount-of-fading formula,
/// mean(sinr^n) / mean(sinr)^n - 1, with halted trials contributing zeros —
/// the same weighting the closed form uses. Standard error by nonparametric
/// bootstrap (200 resamples). `normalize` conditions on transmission.
inline MetricEstimate estimate_af(const SystemParams& params,
                                  schemes::SchemeId scheme,
                                  const SimConfig& sim, int n,
                                  bool normalize = false) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("estimate_af: requires order in [2, 8]");
    detail::PassOptions options;
    options.moment_order = n;
    options.record_sinr = true;
    const auto pass = detail::run_pass(params, scheme, sim, options);

    const std::uint64_t transmitted = pass.totals.trials - pass.totals.halts;
    if (transmitted == 0)
        throw std::domain_error("estimate_af: undefined on an all-halt sample");

    const double denom_trials =
        normalize ? static_cast<double>(transmitted)
                  : static_cast<double>(pass.totals.trials);
    auto af_of = [n, denom_trials](double sum_pow, double sum) {
        const double mean_pow = sum_pow / denom_trials;
        const double mean = sum / denom_trials;
        return mean_pow / detail::integer_pow(mean, n) - 1.0;
    };
    const double af = af_of(pass.totals.sum_sinr_pow, pass.totals.sum_sinr);

    // bootstrap over trials, reusing the recorded per-trial SINR values
    constexpr int kResamples = 200;
    const std::uint64_t size = pass.sinr_values.size();
    specfun::KahanSum<double> boot_sum, boot_sq;
    for (int b = 0; b < kResamples; ++b) {
        TrialStream stream(sim.master_seed ^ 0xB007B007B007B007ULL,
                           static_cast<std::uint64_t>(b));
        double sum = 0.0, sum_pow = 0.0;
        std::uint64_t picked_transmitting = 0;
        for (std::uint64_t i = 0; i < size; ++i) {
            const auto idx = static_cast<std::uint64_t>(stream.next_uniform() *
                                                        static_cast<double>(size));
            const double value = pass.sinr_values[std::min(idx, size - 1)];
            sum += value;
            sum_pow += detail::integer_pow(value, n);
            if (value > 0.0) ++picked_transmitting;
        }
        const double denom =
            normalize ? static_cast<double>(std::max<std::uint64_t>(
                            picked_transmitting, 1))
                      : static_cast<double>(size);
        const double mean_pow = sum_pow / denom;
        const double mean = sum / denom;
        const double replica = mean_pow / detail::integer_pow(mean, n) - 1.0;
        boot_sum.add(replica);
        boot_sq.add(replica * replica);
    }
    const double mean_replica = boot_sum.value() / kResamples;
    const double var_replica =
        std::max(0.0, boot_sq.value() / kResamples - mean_replica * mean_replica);

    return MetricEstimate{af, std::sqrt(var_replica), Method::monte_carlo,
                          pass.totals.trials};
}

/// Empirical distribution of the proposed scheme's selection outcome.
struct RankHistogram {
    std::vector<double> rank_freq;    // index k-1 holds rank-k frequency
    std::vector<double> rank_stderr;
    double halt_freq = 0.0;
    double halt_stderr = 0.0;
    std::uint64_t trials = 0;
};

inline RankHistogram rank_histogram(const SystemParams& params,
                                    const SimConfig& sim) {
    const auto pass =
        detail::run_pass(params, schemes::SchemeId::proposed, sim, {});
    const double n = static_cast<double>(pass.totals.trials);
    auto binom_stderr = [n](double p) {
        return std::sqrt(p * (1.0 - p) / n);
    };

    RankHistogram hist;
    hist.trials = pass.totals.trials;
    hist.halt_freq = static_cast<double>(pass.totals.rank_counts[0]) / n;
    hist.halt_stderr = binom_stderr(hist.halt_freq);
    for (int k = 1; k <= params.n_antennas; ++k) {
        const double p = static_cast<double>(pass.totals.rank_counts[k]) / n;
        hist.rank_freq.push_back(p);
        hist.rank_stderr.push_back(binom_stderr(p));
    }
    return hist;
}

/// Per-rank conditional SINR statistics (mean and its standard error given
/// that rank k was selected). Cross-checks the closed-form E[xi_k].
struct ConditionalRankStats {
    std::vector<std::uint64_t> count;  // index k-1
    std::vector<double> mean;
    std::vector<double> std_error;
};

inline ConditionalRankStats conditional_rank_sinr(const SystemParams& params,
                                                  const SimConfig& sim) {
    const auto pass =
        detail::run_pass(params, schemes::SchemeId::proposed, sim, {});
    ConditionalRankStats stats;
    for (int k = 1; k <= params.n_antennas; ++k) {
        const std::uint64_t count = pass.totals.rank_counts[k];
        stats.count.push_back(count);
        if (count == 0) {
            stats.mean.push_back(0.0);
            stats.std_error.push_back(0.0);
            continue;
        }
        const double n = static_cast<double>(count);
        const double mean = pass.totals.rank_sinr_sum[k] / n;
        double variance = 0.0;
        if (count > 1) {
            variance =
                (pass.totals.rank_sinr_sq_sum[k] - n * mean * mean) / (n - 1.0);
            variance = std::max(0.0, variance);
        }
        stats.mean.push_back(mean);
        stats.std_error.push_back(std::sqrt(variance / n));
    }
    return stats;
}

}  // namespace cras::montecarlo

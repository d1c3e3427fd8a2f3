#include "uan/netsim.hpp"
#include "uan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace uan {

namespace {

// Path loss at a fixed absorption value: A(l) = (l / l_ref)^alpha * a_f^l.
double narrowband_attenuation(double l_km, double a_f, const ChannelParams& params) {
    return std::pow(l_km / params.l_ref_km, params.alpha) * std::pow(a_f, l_km);
}

void check_set(const TransmissionSet& ts, const Deployment& d,
               std::span<const BandChannel> channels) {
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (const Transmission& t : ts.members) {
        if (t.tx >= d.size() || t.rx >= d.size() || t.source >= d.size())
            throw std::domain_error("transmission set: node index out of range");
        if (t.tx == t.rx)
            throw std::domain_error("transmission set: transmitter equals receiver");
        if (t.band >= channels.size())
            throw std::domain_error("transmission set: band index out of range");
        if (!(t.power >= 0.0))
            throw std::domain_error("transmission set: negative power");
        seen.emplace_back(t.tx, t.band);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::domain_error("transmission set: one transmission per tx per band per slot");
}

// Attenuation between every node pair, per band, so repeated feasibility
// checks over one deployment cost only arithmetic.
class SinrEvaluator {
  public:
    SinrEvaluator(const Deployment& d, std::span<const BandChannel> channels,
                  const ChannelParams& params)
        : d_(d), channels_(channels) {
        const std::size_t n = d.size();
        att_.resize(channels.size());
        for (std::size_t b = 0; b < channels.size(); ++b) {
            att_[b].assign(n * n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j)
                        att_[b][i * n + j] =
                            narrowband_attenuation(d.distance(i, j), channels[b].a_f, params);
        }
    }

    double attenuation(std::size_t band, std::size_t i, std::size_t j) const {
        return att_[band][i * d_.size() + j];
    }

    std::vector<bool> feasible(const TransmissionSet& ts, double beta) const {
        std::vector<bool> ok(ts.members.size(), false);
        for (std::size_t m = 0; m < ts.members.size(); ++m) {
            const Transmission& t = ts.members[m];
            const double a_link = attenuation(t.band, t.tx, t.rx);
            const double signal = a_link > 0.0 ? t.power / a_link
                                               : std::numeric_limits<double>::infinity();
            double interference = 0.0;
            for (std::size_t k = 0; k < ts.members.size(); ++k) {
                if (k == m || ts.members[k].band != t.band)
                    continue;
                const double a_int = attenuation(t.band, ts.members[k].tx, t.rx);
                interference += a_int > 0.0 ? ts.members[k].power / a_int
                                            : std::numeric_limits<double>::infinity();
            }
            ok[m] = signal / (channels_[t.band].noise + interference) >= beta;
        }
        return ok;
    }

  private:
    const Deployment& d_;
    std::span<const BandChannel> channels_;
    std::vector<std::vector<double>> att_;
};

} // namespace

double Deployment::distance(std::size_t i, std::size_t j) const {
    const double dx = positions[i][0] - positions[j][0];
    const double dy = positions[i][1] - positions[j][1];
    return std::sqrt(dx * dx + dy * dy);
}

Deployment deploy(std::size_t n, DeployMode mode, std::uint64_t seed) {
    if (n < 2)
        throw std::domain_error("deploy: need at least 2 nodes");

    Deployment d;
    d.positions.reserve(n);
    SplitMix64 rng(seed);
    constexpr double r = kUnitDiskRadiusKm;

    switch (mode) {
    case DeployMode::UniformRandom: {
        while (d.positions.size() < n) {
            const double x = rng.uniform(-r, r);
            const double y = rng.uniform(-r, r);
            if (x * x + y * y <= r * r)
                d.positions.push_back({x, y});
        }
        d.dest.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = rng.below(n - 1);
            if (j >= i)
                ++j;
            d.dest[i] = j;
        }
        break;
    }
    case DeployMode::Grid: {
        std::size_t k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        for (;; ++k) {
            std::vector<std::array<double, 2>> pts;
            const double step = 2.0 * r / static_cast<double>(k);
            for (std::size_t iy = 0; iy < k; ++iy) {
                for (std::size_t ix = 0; ix < k; ++ix) {
                    const double x = -r + (static_cast<double>(ix) + 0.5) * step;
                    const double y = -r + (static_cast<double>(iy) + 0.5) * step;
                    if (x * x + y * y <= r * r)
                        pts.push_back({x, y});
                }
            }
            if (pts.size() >= n) {
                d.positions.assign(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n));
                break;
            }
        }
        d.dest.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            d.dest[i] = (i + 1) % n;
        break;
    }
    case DeployMode::AdversarialLine: {
        // evenly spaced along a diameter; extremes realize 2/sqrt(pi)
        for (std::size_t i = 0; i < n; ++i) {
            const double x = -r + 2.0 * r * static_cast<double>(i) / static_cast<double>(n - 1);
            d.positions.push_back({x, 0.0});
        }
        d.dest.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t opposite = n - 1 - i;
            d.dest[i] = opposite == i ? (i + 1) % n : opposite;
        }
        break;
    }
    }
    return d;
}

std::vector<BandChannel> band_channels(const BandPlan& plan, const ChannelParams& params,
                                       std::span<const double> absorption_override) {
    if (!absorption_override.empty() && absorption_override.size() != plan.bands.size())
        throw std::domain_error("band_channels: override size must match the plan");
    std::vector<BandChannel> out;
    out.reserve(plan.bands.size());
    for (std::size_t b = 0; b < plan.bands.size(); ++b) {
        const Band& band = plan.bands[b];
        const double fm = 0.5 * (band.f_min + band.f_max);
        BandChannel ch;
        ch.center_f_khz = fm;
        ch.a_f = absorption_override.empty() ? absorption_linear(fm) : absorption_override[b];
        if (!(ch.a_f >= 1.0))
            throw std::domain_error("band_channels: absorption must be >= 1");
        ch.noise = noise_psd(fm, params);
        ch.width_khz = band.width();
        out.push_back(ch);
    }
    return out;
}

std::vector<bool> sinr_feasible(const TransmissionSet& ts, const Deployment& d,
                                std::span<const BandChannel> channels,
                                const ChannelParams& params, double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("sinr_feasible: beta must be positive");
    check_set(ts, d, channels);
    return SinrEvaluator(d, channels, params).feasible(ts, beta);
}

double verify_sum_inequality(const TransmissionSet& ts, const Deployment& d,
                             std::span<const BandChannel> channels,
                             const ChannelParams& params, double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("verify_sum_inequality: beta must be positive");
    check_set(ts, d, channels);

    constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;
    auto gamma_term = [&](double a_f) {
        return std::pow(two_over_sqrt_pi, params.alpha) * std::pow(a_f, two_over_sqrt_pi) *
               (beta + 1.0) / beta;
    };

    std::vector<double> sums(channels.size(), 0.0);
    std::vector<bool> occupied(channels.size(), false);
    for (const Transmission& t : ts.members) {
        const double l = d.distance(t.tx, t.rx);
        sums[t.band] += std::pow(l, params.alpha) * std::pow(channels[t.band].a_f, l);
        occupied[t.band] = true;
    }

    double margin = std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t b = 0; b < channels.size(); ++b) {
        if (occupied[b]) {
            margin = std::min(margin, gamma_term(channels[b].a_f) - sums[b]);
            any = true;
        }
    }
    if (!any) {
        for (const BandChannel& ch : channels)
            margin = std::min(margin, gamma_term(ch.a_f));
    }
    return margin;
}

double measure_transport(std::span<const TransmissionSet> schedule, const Deployment& d,
                         std::span<const BandChannel> channels, double beta) {
    if (schedule.empty())
        return 0.0;
    const std::size_t n = d.size();
    std::vector<double> buffer(n * n, 0.0);  // buffer[node * n + flow]
    double credited = 0.0;

    for (const TransmissionSet& ts : schedule) {
        std::vector<double> before = buffer;  // relays cannot forward same-slot arrivals
        for (const Transmission& t : ts.members) {
            const double rate =
                channels[t.band].width_khz * std::log2(1.0 + beta);  // bits per 1 s slot
            double moved;
            if (t.tx == t.source) {
                moved = rate;  // sources are infinitely backlogged
            } else {
                moved = std::min({rate, before[t.tx * n + t.source], buffer[t.tx * n + t.source]});
                buffer[t.tx * n + t.source] -= moved;
            }
            if (t.rx == d.dest[t.source])
                credited += moved * d.distance(t.source, d.dest[t.source]);
            else
                buffer[t.rx * n + t.source] += moved;
        }
    }
    return credited / static_cast<double>(schedule.size());
}

GreedySchedule greedy_schedule(const Deployment& d, std::span<const BandChannel> channels,
                               const ChannelParams& params, double beta, std::size_t slots) {
    const std::size_t n = d.size();
    const SinrEvaluator eval(d, channels, params);

    // links in descending distance order; per slot the starting candidate
    // rotates so the schedule exercises different maximal sets
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double la = d.distance(a, d.dest[a]);
        const double lb = d.distance(b, d.dest[b]);
        return la != lb ? la > lb : a < b;
    });

    // band of a link follows the center frequency of its distance
    std::vector<std::size_t> link_band(n, 0);
    if (channels.size() > 1) {
        BandPlan plan;
        plan.delta_f = channels[0].width_khz;
        for (const BandChannel& ch : channels)
            plan.bands.push_back(Band{ch.center_f_khz - 0.5 * ch.width_khz,
                                      ch.center_f_khz + 0.5 * ch.width_khz});
        for (std::size_t i = 0; i < n; ++i)
            link_band[i] = assign_band(d.distance(i, d.dest[i]), plan, params).index;
    }

    constexpr double power_margin = 4.0;  // no-interference SNR target: 4 * beta

    GreedySchedule out;
    out.slots.reserve(slots);
    out.margin_min = std::numeric_limits<double>::infinity();

    for (std::size_t s = 0; s < slots; ++s) {
        TransmissionSet ts;
        ts.slot = s;
        std::vector<bool> busy(n, false);
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t i = order[(c + s) % n];
            const std::size_t j = d.dest[i];
            if (busy[i] || busy[j])
                continue;
            const std::size_t band = link_band[i];
            Transmission t;
            t.tx = i;
            t.rx = j;
            t.band = band;
            t.source = i;
            t.power = power_margin * beta * channels[band].noise * eval.attenuation(band, i, j);
            ts.members.push_back(t);
            const std::vector<bool> ok = eval.feasible(ts, beta);
            if (std::find(ok.begin(), ok.end(), false) != ok.end()) {
                ts.members.pop_back();
                continue;
            }
            busy[i] = busy[j] = true;
        }
        out.margin_min = std::min(
            out.margin_min, verify_sum_inequality(ts, d, channels, params, beta));
        out.slots.push_back(std::move(ts));
    }
    return out;
}

} // namespace uan

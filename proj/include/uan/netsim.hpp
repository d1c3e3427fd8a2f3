#ifndef UAN_NETSIM_HPP
#define UAN_NETSIM_HPP

#include "uan/band_plan.hpp"
#include "uan/channel.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace uan {

/// Radius of the disk of unit area, 1/sqrt(pi) km.
inline constexpr double kUnitDiskRadiusKm = 0.5641895835477563;

/// Largest possible separation of two nodes in the disk, 2/sqrt(pi) km.
inline constexpr double kUnitDiskDiameterKm = 2.0 * kUnitDiskRadiusKm;

/// Node positions in the unit-area disk plus the intended destination of
/// each node's traffic (dest[i] != i).
struct Deployment {
    std::vector<std::array<double, 2>> positions;  // km
    std::vector<std::size_t> dest;

    std::size_t size() const { return positions.size(); }
    double distance(std::size_t i, std::size_t j) const;
};

enum class DeployMode { UniformRandom, Grid, AdversarialLine };

/// Deterministic deployment of n >= 2 nodes; identical seeds reproduce
/// identical deployments.
Deployment deploy(std::size_t n, DeployMode mode, std::uint64_t seed);

/// One simultaneous transmission: tx sends to rx in a band at a given
/// power psd. `source` labels whose traffic the bits belong to (equals tx
/// for direct transmission, the originating node when relaying).
struct Transmission {
    std::size_t tx;
    std::size_t rx;
    std::size_t band = 0;
    double power = 0.0;
    std::size_t source;
};

/// Transmissions sharing one time slot.
struct TransmissionSet {
    std::vector<Transmission> members;
    std::size_t slot = 0;
};

/// Narrowband view of one plan band: everything the SINR model needs.
struct BandChannel {
    double center_f_khz;
    double a_f;         ///< absorption at the band center, >= 1
    double noise;       ///< noise psd at the band center, linear
    double width_khz;
};

/// Thorp-derived band channels for a plan. Absorptions can be overridden
/// (one value per band) to pin a_f exactly.
std::vector<BandChannel> band_channels(const BandPlan& plan, const ChannelParams& params,
                                       std::span<const double> absorption_override = {});

/// Per-member SINR under the physical model: signal over noise plus
/// same-band, same-slot interference, attenuation evaluated at the band's
/// center frequency.
std::vector<double> sinr_values(const TransmissionSet& ts, const Deployment& d,
                                std::span<const BandChannel> channels,
                                const ChannelParams& params);

/// Per-member feasibility: SINR >= beta.
std::vector<bool> sinr_feasible(const TransmissionSet& ts, const Deployment& d,
                                std::span<const BandChannel> channels,
                                const ChannelParams& params, double beta);

/// Slack of the feasibility sum bound for a set whose members all passed
/// sinr_feasible: min over occupied bands of
///   gamma_alpha * (beta+1)/beta - sum_i |X_i - X_j(i)|^alpha * a_f^|X_i - X_j(i)|
/// with gamma_alpha = (2/sqrt(pi))^alpha * a_f^(2/sqrt(pi)). Non-negative
/// for every feasible set; a negative return is a derivation violation.
double verify_sum_inequality(const TransmissionSet& ts, const Deployment& d,
                             std::span<const BandChannel> channels,
                             const ChannelParams& params, double beta);

/// Store-and-forward transport accounting over a slot schedule (1 s
/// slots). Sources have infinite backlog; relays forward only bits already
/// buffered before the slot; delivery credits rate * slot * ||X_src - X_dst||.
/// Bits still in flight when the schedule ends earn nothing. Returns
/// bit-distance per second, i.e. the achieved lambda * n * Lbar.
double measure_transport(std::span<const TransmissionSet> schedule, const Deployment& d,
                         std::span<const BandChannel> channels, double beta);

struct GreedySchedule {
    std::vector<TransmissionSet> slots;
    double margin_min;  ///< worst verify_sum_inequality margin over the slots
};

/// Greedy maximal feasible direct-transmission schedule: per slot, links
/// are tried in descending-distance order (rotated per slot), each node
/// participates at most once, and a candidate is kept only if the whole
/// set stays feasible.
GreedySchedule greedy_schedule(const Deployment& d, std::span<const BandChannel> channels,
                               const ChannelParams& params, double beta, std::size_t slots);

} // namespace uan

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmsa/landscape.hpp"
#include "lmsa/potentials.hpp"
#include "lmsa/schedules.hpp"

namespace lmsa {

// Counter-addressable Gaussian source: the k-th block of dim standard normals
// is a pure function of (base_seed, replica_index, k). The cursor only tracks
// consumption so callers can assert stream alignment across methods.
struct NoiseStream {
    std::uint64_t base_seed = 0;
    std::uint64_t replica_index = 0;
    int dim = 1;
    std::uint64_t cursor = 0;  // next unread step index

    NoiseStream(std::uint64_t base_seed, std::uint64_t replica_index, int dim);
};

Vec gaussians(NoiseStream& ns, long k);
void gaussians_into(NoiseStream& ns, long k, Vec& out);

enum class Method { SA, ISA, KSA, IKSA };
enum class KineticForm { appendix, theory };

bool is_kinetic(Method m);
Method method_parse(const std::string& name);
std::string method_name(Method m);

struct MethodConfig {
    Method method = Method::SA;
    FModifier modifier;  // forced to zero for SA/KSA by validate()
    AdaptiveC adaptive_c;
    CoolingSchedule cooling;
    StepSchedule steps;
    KineticForm kinetic_form = KineticForm::appendix;

    void validate() const;
};

struct MethodState {
    Vec x;
    std::optional<Vec> y;  // kinetic methods only
    double theta = 0.0;    // Theta(k) = sum_{s<=k} eta(s)
    long k = 0;
    double u = 0.0;        // cached U(x)
    double runmin = 0.0;   // min of U over all visited positions, x0 included
    RunMinHistory history;
};

struct Checkpoint {
    long k;
    double theta;
    Vec x;
    double u;
    double runmin;
};

struct Trajectory {
    std::vector<Checkpoint> checkpoints;
    MethodState final_state;
    std::uint64_t noise_cursor = 0;
};

// Thrown when a step produces a non-finite coordinate or |U| > 1e300. Carries
// the failing step index, the checkpoints recorded so far, and the last finite
// state as a checkpoint.
class divergence_error : public std::runtime_error {
public:
    divergence_error(long step, Checkpoint last_finite, std::vector<Checkpoint> recorded)
        : std::runtime_error("trajectory diverged at step " + std::to_string(step)),
          step(step),
          last_finite(std::move(last_finite)),
          recorded(std::move(recorded)) {}
    long step;
    Checkpoint last_finite;
    std::vector<Checkpoint> recorded;
};

// One Euler-Maruyama update. c(k) and eps(k) come from the pre-step state
// (running minimum up to and including the current x). Noise must hold dim
// standard normals.
void overdamped_step(const MethodConfig& cfg, const Potential& p, MethodState& st,
                     const Vec& noise);
void kinetic_step(const MethodConfig& cfg, const Potential& p, MethodState& st, const Vec& noise);

// Runs n_steps steps, consuming exactly dim normals per step for every
// method, recording (theta, x, U(x), runmin) at each requested step index.
// Checkpoint indices must be sorted and within [0, n_steps].
Trajectory simulate(const MethodConfig& cfg, const Potential& p, const Vec& x0,
                    const std::optional<Vec>& y0, long n_steps, NoiseStream& ns,
                    const std::vector<long>& checkpoints);

}  // namespace lmsa

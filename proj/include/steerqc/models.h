// Copyright 2026 The steerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEERQC_MODELS_H
#define STEERQC_MODELS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steerqc/pauli.h"
#include "steerqc/rng.h"
#include "steerqc/tableau.h"

namespace steerqc {

enum class ModelKind : uint8_t { kPtfIsing, kGaugeHiggs, kXzzx };

/// Measurement operator classes across all three models. The single-site X
/// and Z classes are shared; which classes a model uses is fixed by its kind.
enum class OpClass : uint8_t { kZZ, kX, kZ, kZZZ, kXXX, kXZZX };
constexpr size_t kNumOpClasses = 6;

/// Bit set over OpClass.
class OpClassSet {
   public:
    constexpr OpClassSet() = default;
    constexpr OpClassSet(std::initializer_list<OpClass> classes) {
        for (OpClass c : classes) {
            insert(c);
        }
    }
    constexpr void insert(OpClass c) {
        bits_ |= (uint8_t)(1u << (unsigned)c);
    }
    constexpr bool contains(OpClass c) const {
        return (bits_ >> (unsigned)c) & 1;
    }
    constexpr bool empty() const {
        return bits_ == 0;
    }
    constexpr bool operator==(const OpClassSet &) const = default;
    std::vector<OpClass> members() const;

   private:
    uint8_t bits_ = 0;
};

enum class ErrorKind : uint8_t { kXOnly, kZOnly, kBoth };
enum class TerminalBasis : uint8_t { kZ, kX, kXYX };
enum class SteeringGate : uint8_t { kDestabilizer, kTracker };

/// Everything that fixes a trajectory distribution.
struct ModelSpec {
    ModelKind kind = ModelKind::kPtfIsing;
    size_t L = 16;
    double p = 0.5;
    double p1 = 0.5;
    double p2 = 0.5;
    ErrorKind error_kind = ErrorKind::kXOnly;
    OpClassSet steered;
    TerminalBasis terminal = TerminalBasis::kZ;
    Axis initial = Axis::kXPlus;
    /// Measurement events per trajectory. Gauge-Higgs draws two per time step.
    size_t depth_events = 0;
    SteeringGate gate = SteeringGate::kDestabilizer;

    /// |+>^L, ZZ steered, Z readout, 2 L^2 events.
    static ModelSpec ptf_ising(size_t L, double p);
    /// |0>^L, all four classes steered, Z readout, L^2 time steps.
    static ModelSpec gauge_higgs(size_t L, double p1, double p2);
    /// |+>^L, XZZX steered (or every class if steer_all), XYX readout.
    static ModelSpec xzzx(size_t L, double p, ErrorKind errors, bool steer_all = false);

    /// Classes this kind of model can emit.
    OpClassSet defined_classes() const;
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Default event count for a given system size: 2 L^2.
size_t default_depth(size_t L, double multiplier = 2.0);

/// The four gauge-Higgs line scans: which parameter is held fixed, at what
/// value, which classes are steered, and the readout axis.
struct GaugeHiggsLine {
    std::string label;
    bool fixes_p1 = true;
    double fixed_value = 0.1;
    OpClassSet steered;
    TerminalBasis terminal = TerminalBasis::kZ;
    /// Start state, conjugate to the readout axis.
    Axis initial = Axis::kXPlus;

    /// Spec at the scanned value of the free parameter.
    ModelSpec at(size_t L, double scanned) const;
};

/// Labels "p1=0.1", "p1=0.9", "p2=0.1", "p2=0.9". Throws std::invalid_argument.
GaugeHiggsLine table1_preset(std::string_view label);
std::vector<std::string> table1_labels();

/// One measurement: class and 0-based first site of its support.
struct Event {
    OpClass cls;
    uint32_t site;
};

/// One or two events (gauge-Higgs draws a pair per step).
struct TimeStep {
    std::array<Event, 2> events{};
    uint8_t count = 0;

    const Event *begin() const {
        return events.data();
    }
    const Event *end() const {
        return events.data() + count;
    }
};

TimeStep sample_time_step(const ModelSpec &spec, CounterRng &rng);

/// The operator an event measures.
PauliString event_operator(size_t L, Event event);

/// Pairwise-commuting readout operators for the spec's terminal basis.
std::vector<PauliString> terminal_set(const ModelSpec &spec);

std::string_view to_string(ModelKind kind);
std::string_view to_string(OpClass cls);
std::string_view to_string(ErrorKind kind);
std::string_view to_string(TerminalBasis basis);
std::optional<ModelKind> parse_model_kind(std::string_view text);
std::optional<OpClass> parse_op_class(std::string_view text);
std::optional<ErrorKind> parse_error_kind(std::string_view text);
std::optional<TerminalBasis> parse_terminal_basis(std::string_view text);

struct TrajectoryResult {
    std::vector<int8_t> outcomes;
    uint64_t seed = 0;
    size_t steer_count = 0;
};

/// Hooks for replaying a trajectory elsewhere (tests use the dense oracle).
class TrajectoryObserver {
   public:
    virtual ~TrajectoryObserver() = default;
    virtual void on_measure(const Event &, const PauliString &, const MeasureResult &) {
    }
    virtual void on_steer(const PauliString &) {
    }
    /// After each event, once any steering gate has been applied.
    virtual void after_event(const StabilizerTableau &) {
    }
    virtual void on_terminal(const PauliString &, const MeasureResult &) {
    }
};

/// Runs trajectories of a fixed spec. Caches the operator catalog; run() is
/// const and safe to call concurrently.
///
/// A trajectory seed feeds three independent streams: circuit structure,
/// measurement outcomes, and steering tie-breaks. Two runners differing only
/// in SteeringGate therefore see the same circuit and outcome streams.
class TrajectoryRunner {
   public:
    explicit TrajectoryRunner(ModelSpec spec);

    TrajectoryResult run(uint64_t seed, TrajectoryObserver *observer = nullptr) const;

    /// Runs the circuit without the terminal readout and returns the state.
    StabilizerTableau evolve(uint64_t seed, TrajectoryObserver *observer = nullptr, size_t *steer_count = nullptr) const;

    const ModelSpec &spec() const {
        return spec_;
    }
    const std::vector<PauliString> &terminal_ops() const {
        return terminal_;
    }

   private:
    const PauliString &op(const Event &e) const {
        return catalog_[(size_t)e.cls][e.site];
    }

    ModelSpec spec_;
    std::array<std::vector<PauliString>, kNumOpClasses> catalog_;
    std::vector<PauliString> terminal_;
};

TrajectoryResult run_trajectory(const ModelSpec &spec, uint64_t seed);

}  // namespace steerqc

#endif

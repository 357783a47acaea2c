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

#include "steerqc/models.h"

#include <cmath>
#include <stdexcept>

#include "steerqc/errors.h"
#include "steerqc/steering.h"

namespace steerqc {

namespace {

constexpr std::array<std::string_view, kNumOpClasses> kClassNames = {"zz", "x", "z", "zzz", "xxx", "xzzx"};

// Number of admissible first sites for a class, and the k-th of them.
size_t site_count(ModelKind kind, OpClass cls, size_t L) {
    bool gh = kind == ModelKind::kGaugeHiggs;
    switch (cls) {
        case OpClass::kZZ:
            return L - 1;
        case OpClass::kX:
            return gh ? L / 2 : L;
        case OpClass::kZ:
            return gh ? (L + 1) / 2 : L;
        case OpClass::kZZZ:
            return (L - 2) / 2;
        case OpClass::kXXX:
            return (L - 1) / 2;
        case OpClass::kXZZX:
            return L - 3;
    }
    return 0;
}

uint32_t nth_site(ModelKind kind, OpClass cls, size_t k) {
    bool gh = kind == ModelKind::kGaugeHiggs;
    switch (cls) {
        case OpClass::kX:
        case OpClass::kZZZ:
            // Sites 2, 4, ... in 1-based numbering on the gauge-Higgs chain.
            return gh ? (uint32_t)(2 * k + 1) : (uint32_t)k;
        case OpClass::kZ:
        case OpClass::kXXX:
            return gh ? (uint32_t)(2 * k) : (uint32_t)k;
        default:
            return (uint32_t)k;
    }
}

Event draw(const ModelSpec &spec, OpClass cls, CounterRng &rng) {
    size_t count = site_count(spec.kind, cls, spec.L);
    return {cls, nth_site(spec.kind, cls, rng.uniform_below(count))};
}

void require_probability(double value, const char *field) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ConfigError(field, "probability must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

std::vector<OpClass> OpClassSet::members() const {
    std::vector<OpClass> out;
    for (size_t c = 0; c < kNumOpClasses; c++) {
        if (contains((OpClass)c)) {
            out.push_back((OpClass)c);
        }
    }
    return out;
}

size_t default_depth(size_t L, double multiplier) {
    return (size_t)std::llround(multiplier * (double)L * (double)L);
}

ModelSpec ModelSpec::ptf_ising(size_t L, double p) {
    ModelSpec s;
    s.kind = ModelKind::kPtfIsing;
    s.L = L;
    s.p = p;
    s.steered = {OpClass::kZZ};
    s.terminal = TerminalBasis::kZ;
    s.initial = Axis::kXPlus;
    s.depth_events = default_depth(L);
    return s;
}

ModelSpec ModelSpec::gauge_higgs(size_t L, double p1, double p2) {
    ModelSpec s;
    s.kind = ModelKind::kGaugeHiggs;
    s.L = L;
    s.p1 = p1;
    s.p2 = p2;
    s.steered = {OpClass::kZZZ, OpClass::kXXX, OpClass::kX, OpClass::kZ};
    s.terminal = TerminalBasis::kZ;
    s.initial = Axis::kZPlus;
    s.depth_events = default_depth(L);
    return s;
}

ModelSpec ModelSpec::xzzx(size_t L, double p, ErrorKind errors, bool steer_all) {
    ModelSpec s;
    s.kind = ModelKind::kXzzx;
    s.L = L;
    s.p = p;
    s.error_kind = errors;
    s.steered = steer_all ? OpClassSet{OpClass::kXZZX, OpClass::kX, OpClass::kZ} : OpClassSet{OpClass::kXZZX};
    s.terminal = TerminalBasis::kXYX;
    s.initial = Axis::kXPlus;
    s.depth_events = default_depth(L);
    return s;
}

OpClassSet ModelSpec::defined_classes() const {
    switch (kind) {
        case ModelKind::kPtfIsing:
            return {OpClass::kZZ, OpClass::kX};
        case ModelKind::kGaugeHiggs:
            return {OpClass::kZZZ, OpClass::kXXX, OpClass::kX, OpClass::kZ};
        case ModelKind::kXzzx:
            switch (error_kind) {
                case ErrorKind::kXOnly:
                    return {OpClass::kXZZX, OpClass::kX};
                case ErrorKind::kZOnly:
                    return {OpClass::kXZZX, OpClass::kZ};
                case ErrorKind::kBoth:
                    return {OpClass::kXZZX, OpClass::kX, OpClass::kZ};
            }
    }
    return {};
}

void ModelSpec::validate() const {
    if (L < 4) {
        throw ConfigError("L", "system size must be at least 4, got " + std::to_string(L));
    }
    if (kind == ModelKind::kGaugeHiggs) {
        if (L % 2 == 0) {
            throw ConfigError("L", "gauge_higgs needs an odd number of qubits, got " + std::to_string(L));
        }
        require_probability(p1, "p1");
        require_probability(p2, "p2");
    } else {
        require_probability(p, "p");
    }
    // Steering a class the model is able to emit but never does (e.g. Z on an
    // x_only XZZX chain) is harmless; classes foreign to the model are not.
    OpClassSet allowed = defined_classes();
    if (kind == ModelKind::kXzzx) {
        allowed = {OpClass::kXZZX, OpClass::kX, OpClass::kZ};
    }
    for (OpClass c : steered.members()) {
        if (!allowed.contains(c)) {
            throw ConfigError("steering", "class '" + std::string(to_string(c)) + "' is not part of the " +
                                              std::string(to_string(kind)) + " model");
        }
    }
    if (terminal == TerminalBasis::kXYX && L < 3) {
        throw ConfigError("terminal", "xyx readout needs at least 3 sites");
    }
    if (gate == SteeringGate::kTracker && kind != ModelKind::kPtfIsing) {
        throw ConfigError("steering_gate", "the tracker heuristic is only defined for ptf_ising");
    }
}

ModelSpec GaugeHiggsLine::at(size_t L, double scanned) const {
    ModelSpec s = fixes_p1 ? ModelSpec::gauge_higgs(L, fixed_value, scanned) : ModelSpec::gauge_higgs(L, scanned, fixed_value);
    s.steered = steered;
    s.terminal = terminal;
    s.initial = initial;
    return s;
}

GaugeHiggsLine table1_preset(std::string_view label) {
    const OpClassSet x_side{OpClass::kXXX, OpClass::kZZZ, OpClass::kX};
    const OpClassSet z_side{OpClass::kXXX, OpClass::kZZZ, OpClass::kZ};
    if (label == "p1=0.1") {
        return {std::string(label), true, 0.1, x_side, TerminalBasis::kX, Axis::kZPlus};
    }
    if (label == "p1=0.9") {
        return {std::string(label), true, 0.9, z_side, TerminalBasis::kZ, Axis::kXPlus};
    }
    if (label == "p2=0.1") {
        return {std::string(label), false, 0.1, z_side, TerminalBasis::kZ, Axis::kXPlus};
    }
    if (label == "p2=0.9") {
        return {std::string(label), false, 0.9, x_side, TerminalBasis::kX, Axis::kZPlus};
    }
    throw std::invalid_argument("unknown gauge_higgs line '" + std::string(label) +
                                "' (expected p1=0.1, p1=0.9, p2=0.1 or p2=0.9)");
}

std::vector<std::string> table1_labels() {
    return {"p1=0.1", "p1=0.9", "p2=0.1", "p2=0.9"};
}

TimeStep sample_time_step(const ModelSpec &spec, CounterRng &rng) {
    TimeStep step;
    switch (spec.kind) {
        case ModelKind::kPtfIsing:
            step.events[0] = rng.bernoulli(spec.p) ? draw(spec, OpClass::kZZ, rng) : draw(spec, OpClass::kX, rng);
            step.count = 1;
            break;
        case ModelKind::kGaugeHiggs:
            step.events[0] = rng.bernoulli(spec.p1) ? draw(spec, OpClass::kZZZ, rng) : draw(spec, OpClass::kX, rng);
            step.events[1] = rng.bernoulli(spec.p2) ? draw(spec, OpClass::kXXX, rng) : draw(spec, OpClass::kZ, rng);
            step.count = 2;
            break;
        case ModelKind::kXzzx: {
            double u = rng.uniform01();
            OpClass cls;
            if (u < spec.p) {
                cls = OpClass::kXZZX;
            } else if (spec.error_kind == ErrorKind::kXOnly) {
                cls = OpClass::kX;
            } else if (spec.error_kind == ErrorKind::kZOnly) {
                cls = OpClass::kZ;
            } else {
                cls = u < spec.p + 0.5 * (1.0 - spec.p) ? OpClass::kX : OpClass::kZ;
            }
            step.events[0] = draw(spec, cls, rng);
            step.count = 1;
            break;
        }
    }
    return step;
}

PauliString event_operator(size_t L, Event event) {
    switch (event.cls) {
        case OpClass::kZZ:
            return PauliString::on_sites(L, "ZZ", event.site);
        case OpClass::kX:
            return PauliString::on_sites(L, "X", event.site);
        case OpClass::kZ:
            return PauliString::on_sites(L, "Z", event.site);
        case OpClass::kZZZ:
            return PauliString::on_sites(L, "ZZZ", event.site);
        case OpClass::kXXX:
            return PauliString::on_sites(L, "XXX", event.site);
        case OpClass::kXZZX:
            return PauliString::on_sites(L, "XZZX", event.site);
    }
    throw std::invalid_argument("unknown operator class");
}

std::vector<PauliString> terminal_set(const ModelSpec &spec) {
    std::vector<PauliString> ops;
    switch (spec.terminal) {
        case TerminalBasis::kZ:
        case TerminalBasis::kX:
            for (size_t q = 0; q < spec.L; q++) {
                ops.push_back(PauliString::on_sites(spec.L, spec.terminal == TerminalBasis::kZ ? "Z" : "X", q));
            }
            break;
        case TerminalBasis::kXYX:
            for (size_t q = 0; q + 2 < spec.L; q++) {
                ops.push_back(PauliString::on_sites(spec.L, "XYX", q));
            }
            break;
    }
    for (size_t a = 0; a < ops.size(); a++) {
        for (size_t b = a + 1; b < ops.size(); b++) {
            if (!commutes(ops[a], ops[b])) {
                throw std::logic_error("terminal set is not commuting");
            }
        }
    }
    return ops;
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::kPtfIsing:
            return "ptf_ising";
        case ModelKind::kGaugeHiggs:
            return "gauge_higgs";
        case ModelKind::kXzzx:
            return "xzzx";
    }
    return "?";
}

std::string_view to_string(OpClass cls) {
    return kClassNames[(size_t)cls];
}

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kXOnly:
            return "x_only";
        case ErrorKind::kZOnly:
            return "z_only";
        case ErrorKind::kBoth:
            return "both";
    }
    return "?";
}

std::string_view to_string(TerminalBasis basis) {
    switch (basis) {
        case TerminalBasis::kZ:
            return "z";
        case TerminalBasis::kX:
            return "x";
        case TerminalBasis::kXYX:
            return "xyx";
    }
    return "?";
}

std::optional<ModelKind> parse_model_kind(std::string_view text) {
    for (ModelKind k : {ModelKind::kPtfIsing, ModelKind::kGaugeHiggs, ModelKind::kXzzx}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<OpClass> parse_op_class(std::string_view text) {
    for (size_t c = 0; c < kNumOpClasses; c++) {
        if (text == kClassNames[c]) {
            return (OpClass)c;
        }
    }
    return std::nullopt;
}

std::optional<ErrorKind> parse_error_kind(std::string_view text) {
    for (ErrorKind k : {ErrorKind::kXOnly, ErrorKind::kZOnly, ErrorKind::kBoth}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<TerminalBasis> parse_terminal_basis(std::string_view text) {
    for (TerminalBasis b : {TerminalBasis::kZ, TerminalBasis::kX, TerminalBasis::kXYX}) {
        if (text == to_string(b)) {
            return b;
        }
    }
    return std::nullopt;
}

TrajectoryRunner::TrajectoryRunner(ModelSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    OpClassSet classes = spec_.defined_classes();
    for (OpClass cls : classes.members()) {
        auto &ops = catalog_[(size_t)cls];
        ops.resize(spec_.L);
        for (size_t k = 0; k < site_count(spec_.kind, cls, spec_.L); k++) {
            Event e{cls, nth_site(spec_.kind, cls, k)};
            ops[e.site] = event_operator(spec_.L, e);
        }
    }
    terminal_ = terminal_set(spec_);
}

StabilizerTableau TrajectoryRunner::evolve(uint64_t seed, TrajectoryObserver *observer, size_t *steer_count) const {
    CounterRng structure(seed, 1);
    CounterRng steering(seed, 2);
    StabilizerTableau t = StabilizerTableau::product_state(spec_.L, spec_.initial, CounterRng(seed, 0));
    std::optional<SteerTracker> tracker;
    if (spec_.gate == SteeringGate::kTracker) {
        tracker.emplace(spec_.L);
    }

    size_t steers = 0;
    size_t done = 0;
    while (done < spec_.depth_events) {
        TimeStep step = sample_time_step(spec_, structure);
        for (const Event &e : step) {
            if (done == spec_.depth_events) {
                break;
            }
            done++;
            const PauliString &m = op(e);
            MeasureResult r = t.measure(m);
            if (observer) {
                observer->on_measure(e, m, r);
            }
            if (r.outcome < 0 && spec_.steered.contains(e.cls)) {
                PauliString q =
                    tracker && e.cls == OpClass::kZZ ? tracker->choose_gate(e.site, steering) : find_steering_pauli(t, m);
                t.apply_pauli(q);
                steers++;
                if (observer) {
                    observer->on_steer(q);
                }
            }
            if (observer) {
                observer->after_event(t);
            }
            if (tracker) {
                if (e.cls == OpClass::kZZ) {
                    tracker->on_zz(e.site);
                } else if (e.cls == OpClass::kX) {
                    tracker->on_x(e.site);
                }
            }
        }
    }
    if (steer_count) {
        *steer_count = steers;
    }
    return t;
}

TrajectoryResult TrajectoryRunner::run(uint64_t seed, TrajectoryObserver *observer) const {
    TrajectoryResult result;
    result.seed = seed;
    StabilizerTableau t = evolve(seed, observer, &result.steer_count);
    result.outcomes.reserve(terminal_.size());
    for (const PauliString &m : terminal_) {
        MeasureResult r = t.measure(m);
        if (observer) {
            observer->on_terminal(m, r);
            observer->after_event(t);
        }
        result.outcomes.push_back((int8_t)r.outcome);
    }
    return result;
}

TrajectoryResult run_trajectory(const ModelSpec &spec, uint64_t seed) {
    return TrajectoryRunner(spec).run(seed);
}

}  // namespace steerqc

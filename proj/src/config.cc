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

#include "steerqc/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "steerqc/errors.h"

namespace steerqc {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {"model", "L", "p", "line", "errors", "steering", "steering_gate",
                                          "terminal", "initial", "M", "R", "seed", "depth_multiplier", "out"};

std::string require_string(const json &doc, const char *field) {
    const json &v = doc.at(field);
    if (!v.is_string()) {
        throw ConfigError(field, "expected a string");
    }
    return v.get<std::string>();
}

size_t require_count(const json &v, const char *field) {
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ConfigError(field, "expected a positive integer");
    }
    return v.get<size_t>();
}

double require_number(const json &v, const char *field) {
    if (!v.is_number()) {
        throw ConfigError(field, "expected a number");
    }
    return v.get<double>();
}

std::vector<double> parse_grid(const json &v) {
    std::vector<double> grid;
    if (v.is_array()) {
        for (const json &e : v) {
            grid.push_back(require_number(e, "p"));
        }
    } else if (v.is_object()) {
        for (const auto &[k, _] : v.items()) {
            if (k != "start" && k != "stop" && k != "step") {
                throw ConfigError("p", "unknown range key '" + k + "'");
            }
        }
        if (!v.contains("start") || !v.contains("stop") || !v.contains("step")) {
            throw ConfigError("p", "a range needs start, stop and step");
        }
        double start = require_number(v["start"], "p");
        double stop = require_number(v["stop"], "p");
        double step = require_number(v["step"], "p");
        if (!(step > 0) || stop < start) {
            throw ConfigError("p", "range needs step > 0 and stop >= start");
        }
        long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long i = 0; i < count; i++) {
            grid.push_back(std::round((start + step * (double)i) * 1e12) / 1e12);
        }
    } else {
        throw ConfigError("p", "expected a list of numbers or {start, stop, step}");
    }
    if (grid.empty()) {
        throw ConfigError("p", "grid is empty");
    }
    return grid;
}

OpClassSet parse_steering(const json &v, const ModelSpec &base) {
    if (v.is_array()) {
        OpClassSet out;
        for (const json &e : v) {
            if (!e.is_string()) {
                throw ConfigError("steering", "expected class names");
            }
            auto cls = parse_op_class(e.get<std::string>());
            if (!cls) {
                throw ConfigError("steering", "unknown class '" + e.get<std::string>() + "'");
            }
            out.insert(*cls);
        }
        return out;
    }
    if (!v.is_string()) {
        throw ConfigError("steering", "expected a mode name or a list of classes");
    }
    std::string mode = v.get<std::string>();
    if (mode == "default") {
        return base.steered;
    }
    if (mode == "none") {
        return {};
    }
    if (mode == "all") {
        if (base.kind == ModelKind::kXzzx) {
            return {OpClass::kXZZX, OpClass::kX, OpClass::kZ};
        }
        return base.defined_classes();
    }
    if (mode == "m1_only") {
        switch (base.kind) {
            case ModelKind::kPtfIsing:
                return {OpClass::kZZ};
            case ModelKind::kGaugeHiggs:
                return {OpClass::kZZZ, OpClass::kXXX};
            case ModelKind::kXzzx:
                return {OpClass::kXZZX};
        }
    }
    throw ConfigError("steering", "unknown mode '" + mode + "' (expected default, none, all, m1_only or a list)");
}

}  // namespace

ModelSpec SweepConfig::spec_at(size_t L, double value) const {
    ModelSpec s = base;
    s.L = L;
    if (line) {
        if (line->fixes_p1) {
            s.p1 = line->fixed_value;
            s.p2 = value;
        } else {
            s.p1 = value;
            s.p2 = line->fixed_value;
        }
    } else {
        s.p = value;
    }
    s.depth_events = default_depth(L, depth_multiplier);
    s.validate();
    return s;
}

void SweepConfig::validate() const {
    if (sizes.empty()) {
        throw ConfigError("L", "no system sizes");
    }
    if (grid.empty()) {
        throw ConfigError("p", "grid is empty");
    }
    if (M < 2) {
        throw ConfigError("M", "need at least 2 trajectories per batch");
    }
    if (R < 1) {
        throw ConfigError("R", "need at least 1 batch");
    }
    if (!(depth_multiplier > 0) || !std::isfinite(depth_multiplier)) {
        throw ConfigError("depth_multiplier", "must be positive");
    }
    if (base.kind == ModelKind::kGaugeHiggs && !line) {
        throw ConfigError("line", "gauge_higgs sweeps need a line");
    }
    for (size_t L : sizes) {
        for (double v : grid) {
            spec_at(L, v);
        }
    }
}

SweepConfig parse_sweep_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError("<document>", e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("<document>", "expected a JSON object");
    }
    for (const auto &[k, _] : doc.items()) {
        if (!kKnownKeys.count(k)) {
            throw ConfigError(k, "unknown key");
        }
    }
    for (const char *k : {"model", "L", "p"}) {
        if (!doc.contains(k)) {
            throw ConfigError(k, "missing required key");
        }
    }

    SweepConfig c;
    std::string model = require_string(doc, "model");
    auto kind = parse_model_kind(model);
    if (!kind) {
        throw ConfigError("model", "unknown model '" + model + "' (expected ptf_ising, gauge_higgs or xzzx)");
    }

    if (*kind == ModelKind::kGaugeHiggs) {
        if (!doc.contains("line")) {
            throw ConfigError("line", "gauge_higgs sweeps need a line");
        }
        try {
            c.line = table1_preset(require_string(doc, "line"));
        } catch (const std::invalid_argument &e) {
            throw ConfigError("line", e.what());
        }
        c.base = c.line->at(5, 0.5);
    } else if (doc.contains("line")) {
        throw ConfigError("line", "only gauge_higgs takes a line");
    }

    if (*kind == ModelKind::kXzzx) {
        ErrorKind errors = ErrorKind::kXOnly;
        if (doc.contains("errors")) {
            auto e = parse_error_kind(require_string(doc, "errors"));
            if (!e) {
                throw ConfigError("errors", "expected x_only, z_only or both");
            }
            errors = *e;
        }
        c.base = ModelSpec::xzzx(4, 0.5, errors);
    } else if (doc.contains("errors")) {
        throw ConfigError("errors", "only xzzx takes an error kind");
    }
    if (*kind == ModelKind::kPtfIsing) {
        c.base = ModelSpec::ptf_ising(4, 0.5);
    }

    const json &sizes = doc["L"];
    if (sizes.is_array()) {
        for (const json &e : sizes) {
            c.sizes.push_back(require_count(e, "L"));
        }
    } else {
        c.sizes.push_back(require_count(sizes, "L"));
    }
    c.grid = parse_grid(doc["p"]);

    if (doc.contains("steering")) {
        c.base.steered = parse_steering(doc["steering"], c.base);
    }
    if (doc.contains("steering_gate")) {
        std::string g = require_string(doc, "steering_gate");
        if (g == "destabilizer") {
            c.base.gate = SteeringGate::kDestabilizer;
        } else if (g == "tracker") {
            c.base.gate = SteeringGate::kTracker;
        } else {
            throw ConfigError("steering_gate", "expected destabilizer or tracker");
        }
    }
    if (doc.contains("terminal")) {
        auto b = parse_terminal_basis(require_string(doc, "terminal"));
        if (!b) {
            throw ConfigError("terminal", "expected z, x or xyx");
        }
        c.base.terminal = *b;
        if (c.line) {
            c.line->terminal = *b;
        }
    }
    if (doc.contains("initial")) {
        std::string s = require_string(doc, "initial");
        if (s == "z+") {
            c.base.initial = Axis::kZPlus;
        } else if (s == "z-") {
            c.base.initial = Axis::kZMinus;
        } else if (s == "x+") {
            c.base.initial = Axis::kXPlus;
        } else {
            throw ConfigError("initial", "expected z+, z- or x+");
        }
    }
    if (doc.contains("M")) {
        c.M = require_count(doc["M"], "M");
    }
    if (doc.contains("R")) {
        c.R = require_count(doc["R"], "R");
    }
    if (doc.contains("seed")) {
        const json &s = doc["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
            throw ConfigError("seed", "expected a non-negative integer");
        }
        c.base_seed = s.get<uint64_t>();
    }
    if (doc.contains("depth_multiplier")) {
        c.depth_multiplier = require_number(doc["depth_multiplier"], "depth_multiplier");
    }
    if (doc.contains("out")) {
        c.output = require_string(doc, "out");
    }
    c.validate();
    return c;
}

SweepConfig load_sweep_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("--config", "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str());
}

}  // namespace steerqc

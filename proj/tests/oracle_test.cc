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

#include "dense_state.h"

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "steerqc/models.h"
#include "steerqc/steering.h"

using namespace steerqc;
using steerqc::oracle::DenseState;

TEST(dense_state, basics) {
    DenseState zero(1, Axis::kZPlus);
    EXPECT_DOUBLE_EQ(zero.probability(PauliString::parse("Z"), +1), 1.0);
    EXPECT_EQ(zero.measure(PauliString::parse("Z"), 0.999), +1);
    EXPECT_DOUBLE_EQ(zero.probability(PauliString::parse("X"), +1), 0.5);
    EXPECT_THROW(zero.project(PauliString::parse("Z"), -1), std::domain_error);

    DenseState y(1, Axis::kZPlus);
    y.apply_pauli(PauliString::parse("X"));
    EXPECT_DOUBLE_EQ(y.expectation(PauliString::parse("Z")), -1.0);
    DenseState plus(2, Axis::kXPlus);
    plus.project(PauliString::parse("YY"), -1);
    EXPECT_NEAR(plus.expectation(PauliString::parse("XX")), 1.0, 1e-12);
    EXPECT_NEAR(plus.expectation(PauliString::parse("ZZ")), 1.0, 1e-12);
    EXPECT_THROW(DenseState(13, Axis::kZPlus), std::invalid_argument);
}

TEST(dense_state, compares_with_tableaus) {
    StabilizerTableau t = StabilizerTableau::product_state(3, Axis::kXPlus, CounterRng(1, 0));
    std::vector<PauliString> gens = t.canonical_generators();
    EXPECT_TRUE(DenseState(3, Axis::kXPlus).is_stabilized_by(gens));
    EXPECT_FALSE(DenseState(3, Axis::kZPlus).is_stabilized_by(gens));
}

TEST(dense_state, appendix_b_replay) {
    StabilizerTableau t = StabilizerTableau::product_state(8, Axis::kZMinus, CounterRng(3, 0));
    DenseState d(8, Axis::kZMinus);
    for (size_t q = 0; q + 3 < 8; q++) {
        PauliString m = PauliString::on_sites(8, "XZZX", q);
        int r = t.measure(m).outcome;
        d.project(m, r);
        PauliString g = steer(t, m, r);
        d.apply_pauli(g);
    }
    PauliString z5 = PauliString::on_sites(8, "Z", 4);
    int r = t.measure(z5).outcome;
    d.project(z5, r);
    std::vector<PauliString> gens = t.canonical_generators();
    EXPECT_TRUE(d.is_stabilized_by(gens));
}

// Outcome-sequence frequencies of a fixed six-qubit steered circuit against
// the dense Born probability of the same sequence.
TEST(dense_state, sequence_frequencies_match_born_rule) {
    const size_t n = 6;
    ModelSpec spec = ModelSpec::ptf_ising(n, 0.5);
    CounterRng structure(77, 1);
    std::vector<PauliString> ops;
    std::vector<bool> steered;
    for (size_t k = 0; k < 8; k++) {
        Event e = sample_time_step(spec, structure).events[0];
        ops.push_back(event_operator(n, e));
        steered.push_back(e.cls == OpClass::kZZ);
    }
    for (size_t q = 0; q < 3; q++) {
        ops.push_back(PauliString::on_sites(n, "Z", q));
        steered.push_back(false);
    }

    const size_t trials = 10000;
    std::map<std::string, size_t> counts;
    for (size_t i = 0; i < trials; i++) {
        StabilizerTableau t = StabilizerTableau::product_state(n, Axis::kXPlus, CounterRng(i, 0));
        std::string key;
        for (size_t k = 0; k < ops.size(); k++) {
            int r = t.measure(ops[k]).outcome;
            key += r > 0 ? '0' : '1';
            if (steered[k]) {
                steer(t, ops[k], r);
            }
        }
        counts[key]++;
    }
    ASSERT_GT(counts.size(), 1u);

    // Follows one branch on both simulators. A random tableau outcome is
    // forced by the destabilizer of its pivot row, which flips nothing else.
    auto born = [&](const std::string &key) {
        DenseState d(n, Axis::kXPlus);
        StabilizerTableau t = StabilizerTableau::product_state(n, Axis::kXPlus, CounterRng(0, 0));
        double prob = 1;
        for (size_t k = 0; k < ops.size(); k++) {
            int r = key[k] == '0' ? +1 : -1;
            double pk = d.probability(ops[k], r);
            if (pk < 1e-12) {
                return 0.0;
            }
            prob *= pk;
            d.project(ops[k], r);
            MeasureResult got = t.measure(ops[k]);
            if (got.outcome != r) {
                EXPECT_TRUE(got.was_random);
                t.apply_pauli(t.destabilizer(*t.row_of(ops[k])));
            }
            if (steered[k]) {
                PauliString g = steer(t, ops[k], r);
                d.apply_pauli(g);
            }
        }
        return prob;
    };
    double total = 0;
    for (const auto &[key, count] : counts) {
        double p = born(key);
        total += p;
        double sigma = std::sqrt(trials * p * (1 - p));
        EXPECT_LT(std::abs((double)count - p * trials), 4 * sigma + 1e-9) << key;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
}

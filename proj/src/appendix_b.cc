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

#include "steerqc/appendix_b.h"

#include <sstream>

#include "steerqc/pauli.h"
#include "steerqc/steering.h"
#include "steerqc/tableau.h"

namespace steerqc {

namespace {

constexpr size_t kQubits = 8;

std::vector<PauliString> unsigned_rref(std::vector<PauliString> rows) {
    size_t n = rows.empty() ? 0 : rows[0].num_qubits();
    for (PauliString &r : rows) {
        r.set_negative(false);
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < rows.size(); col++) {
        size_t q = col / 2;
        auto bit = [&](const PauliString &p) { return col % 2 == 0 ? p.x(q) : p.z(q); };
        size_t pivot = rank;
        while (pivot < rows.size() && !bit(rows[pivot])) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && bit(rows[r])) {
                PauliString prod = multiply_phased(rows[r], rows[rank]).pauli;
                prod.set_negative(false);
                rows[r] = prod;
            }
        }
        rank++;
    }
    rows.resize(rank);
    return rows;
}

std::string bits_of(const std::vector<int> &outcomes) {
    std::string s;
    for (int v : outcomes) {
        s += v < 0 ? '1' : '0';
    }
    return s;
}

std::string flipped(std::string s) {
    for (char &c : s) {
        c = c == '0' ? '1' : '0';
    }
    return s;
}

}  // namespace

std::vector<std::string> appendix_b_reference_generators() {
    // Z1Z4Z7 replaces the Z1Z3Z7 of the usual listing, which anticommutes
    // with X1Z2Z3X4.
    return {"X1Z2Z3X4", "X3Z4Z5X6", "X4Z5Z6X7", "X2Z3Z4Z6Z7X8", "Z3Z6", "Z1Z4Z7", "Z2Z5Z8", "Z5"};
}

AppendixBReport verify_appendix_b(size_t repetitions, uint64_t seed) {
    AppendixBReport report;
    report.repetitions = repetitions;

    std::vector<PauliString> readout;
    for (size_t q = 0; q + 2 < kQubits; q++) {
        readout.push_back(PauliString::on_sites(kQubits, "XYX", q));
    }
    std::vector<PauliString> reference;
    for (const std::string &s : appendix_b_reference_generators()) {
        reference.push_back(PauliString::parse_sparse(kQubits, s));
    }
    reference = unsigned_rref(reference);
    const PauliString z5 = PauliString::on_sites(kQubits, "Z", 4);

    report.single_cluster_before = true;
    report.stabilizers_match = true;
    report.clusters_match = true;
    bool have_stabilizers = false;
    size_t done = 0;
    for (uint64_t attempt = 0; done < repetitions; attempt++) {
        StabilizerTableau t = StabilizerTableau::product_state(kQubits, Axis::kZMinus, CounterRng(seed, attempt));
        for (size_t q = 0; q + 3 < kQubits; q++) {
            PauliString m = PauliString::on_sites(kQubits, "XZZX", q);
            steer(t, m, t.measure(m).outcome);
        }
        StabilizerTableau before = t;
        std::string pre = bits_of(before.read_commuting_set(readout));
        if (pre.find('0') != std::string::npos && pre.find('1') != std::string::npos) {
            report.single_cluster_before = false;
        }
        if (t.measure(z5).outcome != +1) {
            continue;
        }
        done++;

        std::vector<PauliString> gens = t.canonical_generators();
        if (unsigned_rref(gens) != reference) {
            report.stabilizers_match = false;
        }
        if (!have_stabilizers) {
            for (const PauliString &g : gens) {
                report.stabilizers.push_back(g.sparse_str());
            }
            have_stabilizers = true;
        }

        std::string post = bits_of(t.read_commuting_set(readout));
        report.outcomes.insert(post);
        if (!(post[0] == post[1] && post[1] == post[5] && post[2] == post[3] && post[3] == post[4])) {
            report.clusters_match = false;
        }
    }

    const std::set<std::string> expected = {"111111", "110001", "001110", "000000"};
    std::set<std::string> global_flip;
    for (const std::string &s : report.outcomes) {
        global_flip.insert(flipped(s));
    }
    report.outcomes_match = report.outcomes == expected || global_flip == expected;
    return report;
}

std::string AppendixBReport::render() const {
    std::ostringstream out;
    out << "repetitions: " << repetitions << "\n";
    out << "single cluster before Z5: " << (single_cluster_before ? "yes" : "no") << "\n";
    out << "post-Z5 generators:";
    for (const std::string &s : stabilizers) {
        out << " " << s;
    }
    out << "\n";
    out << "stabilizer group matches reference: " << (stabilizers_match ? "yes" : "no") << "\n";
    out << "outcomes:";
    for (const std::string &s : outcomes) {
        out << " " << s;
    }
    out << "\n";
    out << "outcome set matches: " << (outcomes_match ? "yes" : "no") << "\n";
    out << "clusters {x1,x2,x6} {x3,x4,x5}: " << (clusters_match ? "yes" : "no") << "\n";
    out << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace steerqc

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

#include "steerqc/sweep_csv.h"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace steerqc {

namespace {

std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

[[noreturn]] void fail(size_t line_no, const std::string &msg) {
    throw std::runtime_error("sweep csv line " + std::to_string(line_no) + ": " + msg);
}

double to_double(const std::string &s, size_t line_no) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            fail(line_no, "bad number '" + s + "'");
        }
        return v;
    } catch (const std::logic_error &) {
        fail(line_no, "bad number '" + s + "'");
    }
}

size_t to_size(const std::string &s, size_t line_no) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(line_no, "bad integer '" + s + "'");
    }
    return v;
}

}  // namespace

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
    out << kSweepCsvVersion << "\n" << kSweepCsvHeader << "\n";
    for (const SweepRow &r : rows) {
        out << r.model << ',' << r.L << ',' << number(r.p) << ',' << (r.p1 ? number(*r.p1) : "") << ','
            << (r.p2 ? number(*r.p2) : "") << ',' << number(r.stats.sigma1_mean) << ','
            << number(r.stats.sigma1_stderr) << ',' << number(r.stats.sigma2_mean) << ','
            << number(r.stats.sigma2_stderr) << ',' << r.M << ',' << r.R << ',' << r.depth << "\n";
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream &in) {
    std::vector<SweepRow> rows;
    std::string line;
    size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!saw_header) {
            if (line != kSweepCsvHeader) {
                fail(line_no, "unexpected header '" + line + "'");
            }
            saw_header = true;
            continue;
        }
        std::vector<std::string> f = split(line);
        if (f.size() != 12) {
            fail(line_no, "expected 12 fields, got " + std::to_string(f.size()));
        }
        SweepRow r;
        r.model = f[0];
        r.L = to_size(f[1], line_no);
        r.p = to_double(f[2], line_no);
        if (!f[3].empty()) {
            r.p1 = to_double(f[3], line_no);
        }
        if (!f[4].empty()) {
            r.p2 = to_double(f[4], line_no);
        }
        r.stats.sigma1_mean = to_double(f[5], line_no);
        r.stats.sigma1_stderr = to_double(f[6], line_no);
        r.stats.sigma2_mean = to_double(f[7], line_no);
        r.stats.sigma2_stderr = to_double(f[8], line_no);
        r.M = to_size(f[9], line_no);
        r.R = to_size(f[10], line_no);
        r.depth = to_size(f[11], line_no);
        rows.push_back(std::move(r));
    }
    if (!saw_header) {
        fail(line_no, "missing header");
    }
    return rows;
}

std::vector<ScanPoint> scan_points(std::span<const SweepRow> rows) {
    std::vector<ScanPoint> out;
    out.reserve(rows.size());
    for (const SweepRow &r : rows) {
        out.push_back({r.p, r.L, r.stats.sigma2_mean, r.stats.sigma2_stderr});
    }
    return out;
}

}  // namespace steerqc

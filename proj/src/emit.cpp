// SPDX-License-Identifier: Apache-2.0
//
// irsobf - opportunistic beamforming through intelligent reflecting surfaces
// Copyright (C) 2026 The irsobf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "irsobf/experiment.hpp"

namespace irsobf {

namespace {

std::string g6(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Quotes a CSV field when it holds a separator or a quote.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

/// 6-significant-digit value as a JSON number (parsed back from the text form).
nlohmann::json json_number(double v)
{
    return nlohmann::json::parse(g6(v));
}

} // namespace

void emit_results(const std::vector<ResultRow>& rows, OutputFormat format, std::ostream& out)
{
    if (rows.empty()) {
        throw std::invalid_argument("emit_results: no rows to write");
    }
    if (format == OutputFormat::csv) {
        for (std::size_t i = 0; i < std::size(kResultColumns); ++i) {
            out << (i ? "," : "") << kResultColumns[i];
        }
        out << '\n';
        for (const ResultRow& r : rows) {
            out << csv_field(r.scenario_id) << ',' << r.n_users << ',' << r.n_elements << ',' << csv_field(r.strategy)
                << ',' << csv_field(r.scheduler) << ',' << g6(r.eta) << ',' << g6(r.sum_rate) << ',' << g6(r.stderr_)
                << ',' << (r.analytic_ref ? g6(*r.analytic_ref) : std::string()) << ',' << r.seed << '\n';
        }
    } else {
        for (const ResultRow& r : rows) {
            nlohmann::ordered_json j;
            j["scenario_id"] = r.scenario_id;
            j["K"] = r.n_users;
            j["N"] = r.n_elements;
            j["strategy"] = r.strategy;
            j["scheduler"] = r.scheduler;
            j["eta"] = json_number(r.eta);
            j["sum_rate"] = json_number(r.sum_rate);
            j["stderr"] = json_number(r.stderr_);
            j["analytic_ref"] = r.analytic_ref ? json_number(*r.analytic_ref) : nlohmann::json(nullptr);
            j["seed"] = r.seed;
            out << j.dump() << '\n';
        }
    }
    if (!out) {
        throw std::runtime_error("emit_results: write failed");
    }
}

std::string emit_results(const std::vector<ResultRow>& rows, OutputFormat format)
{
    std::ostringstream out;
    emit_results(rows, format, out);
    return out.str();
}

} // namespace irsobf

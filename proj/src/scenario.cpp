// SPDX-License-Identifier: Apache-2.0
//
// panelbeam: multi-panel analog beamforming under stochastic path blockage
// Copyright (C) 2026 The panelbeam authors
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

#include "panelbeam/scenario.hpp"

#include "panelbeam/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace panelbeam
{
namespace
{

constexpr std::array<const char*, 8> required_keys = {
    "n_a", "n_p", "num_paths", "rician_k_db", "tx_snr_db", "p_min", "p_max", "seed"};

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text)
{
    T value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ConfigError("scenario key '" + key + "': cannot parse '" + text + "'");
    return value;
}

double parse_real(const std::string& key, const std::string& text)
{
    // from_chars for double is missing on some libstdc++ versions still in use
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    double value = 0.0;
    is >> value;
    if (!is || !(is >> std::ws).eof())
        throw ConfigError("scenario key '" + key + "': cannot parse '" + text + "'");
    return value;
}

} // namespace

Scenario parse_scenario(std::istream& in)
{
    std::map<std::string, std::string> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("scenario line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : required_keys)
            known = known || key == k;
        if (!known)
            throw ConfigError("scenario line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (!values.emplace(key, value).second)
            throw ConfigError("scenario key '" + key + "' given twice");
    }
    for (const char* k : required_keys)
        if (!values.count(k))
            throw ConfigError(std::string("scenario is missing key '") + k + "'");

    Scenario s;
    s.config.n_a = parse_number<int>("n_a", values["n_a"]);
    s.config.n_p = parse_number<int>("n_p", values["n_p"]);
    s.config.num_paths = parse_number<int>("num_paths", values["num_paths"]);
    s.config.rician_k = db_to_linear(parse_real("rician_k_db", values["rician_k_db"]));
    s.config.tx_snr = db_to_linear(parse_real("tx_snr_db", values["tx_snr_db"]));
    s.config.p_min = parse_real("p_min", values["p_min"]);
    s.config.p_max = parse_real("p_max", values["p_max"]);
    s.seed = parse_number<std::uint64_t>("seed", values["seed"]);
    s.config.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open scenario file '" + path.string() + "'");
    return parse_scenario(in);
}

void write_scenario(std::ostream& out, const Scenario& scenario)
{
    const auto& c = scenario.config;
    out << std::setprecision(17);
    out << "n_a = " << c.n_a << '\n'
        << "n_p = " << c.n_p << '\n'
        << "num_paths = " << c.num_paths << '\n'
        << "rician_k_db = " << linear_to_db(c.rician_k) << '\n'
        << "tx_snr_db = " << linear_to_db(c.tx_snr) << '\n'
        << "p_min = " << c.p_min << '\n'
        << "p_max = " << c.p_max << '\n'
        << "seed = " << scenario.seed << '\n';
}

Scenario default_scenario() { return Scenario{default_config(), 1}; }

std::string describe(const SystemConfig& c, std::uint64_t seed)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(10)
       << "n_a=" << c.n_a << " n_p=" << c.n_p << " n_t=" << c.n_t() << " num_paths=" << c.num_paths
       << " rician_k_db=" << linear_to_db(c.rician_k) << " tx_snr_db=" << linear_to_db(c.tx_snr)
       << " p_min=" << c.p_min << " p_max=" << c.p_max << " p_blk=" << c.p_blk()
       << " carrier_hz=" << c.carrier_hz << " bandwidth_hz=" << c.bandwidth_hz << " seed=" << seed;
    return os.str();
}

} // namespace panelbeam

#pragma once

// Line-oriented "key = value" job configuration for the CLI. Unknown keys
// and malformed values are rejected with line-numbered diagnostics, and
// parse . print . parse is the identity.
//
//   p = 5
//   m = 2
//   modulus = 2, 4, 1          # optional; ascending, monic; default standard
//   twist = 1                  # automorphism power, sigma = Theta^twist
//   n = 12
//   delta = 1, 0, -2           # a, b, c components of a + bv + cv^2
//   gray_matrix = paper-5-2    # preset name, or three ';'-separated rows
//   gray_order = blocks        # or interleaved
//   f0 = (3t+3)(2t+3)1         # optional explicit generators
//   degree_bounds = 2, 2, 2    # per-component search bounds
//   enumeration_bound = 10000000
//   distance_bound = 5

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "finite_field.hpp"
#include "gray.hpp"
#include "presets.hpp"
#include "ring.hpp"
#include "skew_poly.hpp"

namespace skewcc {

struct ConfigError : std::runtime_error {
    explicit ConfigError(int line, const std::string& what)
        : std::runtime_error("config line " + std::to_string(line) + ": " + what) {}
};

struct JobConfig {
    int p = 0;
    int m = 1;
    std::optional<std::vector<int>> modulus;  // default_modulus(p, m) when absent
    int twist = 1;
    int n = 0;
    std::array<std::string, 3> delta{"1", "0", "0"};
    std::string gray_matrix = "";             // preset name or explicit rows
    GrayOrder gray_order = GrayOrder::blocks;
    std::array<std::optional<std::string>, 3> f;  // coefficient strings
    std::array<int, 3> degree_bounds{1, 1, 1};
    long long enumeration_bound = 10000000;
    int distance_bound = 5;

    static JobConfig parse(std::istream& in);
    void print(std::ostream& out) const;

    Field make_field() const {
        return Field(p, m, modulus ? *modulus : default_modulus(p, m));
    }

    RingElement make_delta(const Field& F) const {
        return RingElement(F.parse(delta[0]), F.parse(delta[1]), F.parse(delta[2]));
    }

    GrayMatrix make_gray(const Field& F) const {
        std::string spec = gray_matrix.empty() ? gray_preset_name_for(p, m) : gray_matrix;
        if (spec.find(';') == std::string::npos) return gray_preset(spec, F);
        Matrix mat(F, 3, 3);
        std::istringstream rows(spec);
        std::string row;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(rows, row, ';')) throw std::invalid_argument("gray_matrix needs three rows");
            std::istringstream cells(row);
            std::string cell;
            for (int j = 0; j < 3; ++j) {
                if (!std::getline(cells, cell, ',')) throw std::invalid_argument("gray_matrix row needs three entries");
                mat.at(i, j) = F.parse(cell);
            }
        }
        return GrayMatrix(std::move(mat));
    }

    bool operator==(const JobConfig& o) const {
        return p == o.p && m == o.m && modulus == o.modulus && twist == o.twist && n == o.n && delta == o.delta &&
               gray_matrix == o.gray_matrix && gray_order == o.gray_order && f == o.f &&
               degree_bounds == o.degree_bounds && enumeration_bound == o.enumeration_bound &&
               distance_bound == o.distance_bound;
    }
};

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(strip(item));
    return out;
}

inline int parse_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(line, "expected integer, got '" + s + "'");
    }
}

}  // namespace detail

inline JobConfig JobConfig::parse(std::istream& in) {
    JobConfig cfg;
    bool saw_p = false, saw_n = false;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = detail::strip(s);
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
        std::string key = detail::strip(s.substr(0, eq));
        std::string value = detail::strip(s.substr(eq + 1));
        if (value.empty()) throw ConfigError(line, "empty value for key '" + key + "'");

        if (key == "p") {
            cfg.p = detail::parse_int(value, line);
            saw_p = true;
        } else if (key == "m") {
            cfg.m = detail::parse_int(value, line);
        } else if (key == "modulus") {
            std::vector<int> mod;
            for (const auto& c : detail::split_list(value)) mod.push_back(detail::parse_int(c, line));
            cfg.modulus = mod;
        } else if (key == "twist") {
            cfg.twist = detail::parse_int(value, line);
        } else if (key == "n") {
            cfg.n = detail::parse_int(value, line);
            saw_n = true;
        } else if (key == "delta") {
            auto parts = detail::split_list(value);
            if (parts.size() != 3) throw ConfigError(line, "delta needs three components a, b, c");
            for (int i = 0; i < 3; ++i) cfg.delta[i] = parts[i];
        } else if (key == "gray_matrix") {
            cfg.gray_matrix = value;
        } else if (key == "gray_order") {
            if (value == "blocks")
                cfg.gray_order = GrayOrder::blocks;
            else if (value == "interleaved")
                cfg.gray_order = GrayOrder::interleaved;
            else
                throw ConfigError(line, "gray_order must be 'blocks' or 'interleaved'");
        } else if (key == "f0" || key == "f1" || key == "f2") {
            cfg.f[key[1] - '0'] = value;
        } else if (key == "degree_bounds") {
            auto parts = detail::split_list(value);
            if (parts.size() != 3) throw ConfigError(line, "degree_bounds needs three integers");
            for (int i = 0; i < 3; ++i) cfg.degree_bounds[i] = detail::parse_int(parts[i], line);
        } else if (key == "enumeration_bound") {
            try {
                cfg.enumeration_bound = std::stoll(value);
            } catch (const std::exception&) {
                throw ConfigError(line, "expected integer, got '" + value + "'");
            }
        } else if (key == "distance_bound") {
            cfg.distance_bound = detail::parse_int(value, line);
        } else {
            throw ConfigError(line, "unknown key '" + key + "'");
        }
    }
    if (!saw_p) throw ConfigError(line, "missing required key 'p'");
    if (!saw_n) throw ConfigError(line, "missing required key 'n'");
    return cfg;
}

inline void JobConfig::print(std::ostream& out) const {
    out << "p = " << p << "\n";
    out << "m = " << m << "\n";
    if (modulus) {
        out << "modulus = ";
        for (size_t i = 0; i < modulus->size(); ++i) out << (i ? ", " : "") << (*modulus)[i];
        out << "\n";
    }
    out << "twist = " << twist << "\n";
    out << "n = " << n << "\n";
    out << "delta = " << delta[0] << ", " << delta[1] << ", " << delta[2] << "\n";
    if (!gray_matrix.empty()) out << "gray_matrix = " << gray_matrix << "\n";
    out << "gray_order = " << to_string(gray_order) << "\n";
    for (int i = 0; i < 3; ++i)
        if (f[i]) out << "f" << i << " = " << *f[i] << "\n";
    out << "degree_bounds = " << degree_bounds[0] << ", " << degree_bounds[1] << ", " << degree_bounds[2] << "\n";
    out << "enumeration_bound = " << enumeration_bound << "\n";
    out << "distance_bound = " << distance_bound << "\n";
}

}  // namespace skewcc

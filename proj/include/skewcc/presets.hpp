#pragma once

// Bundled field moduli and Gray matrices.
//
// For the quadratic extensions used by the catalog the default modulus is
// the standard (Conway) polynomial; any other monic irreducible can be
// supplied explicitly in configuration. For other (p, m) the default is the
// lexicographically smallest monic irreducible, which is deterministic.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "finite_field.hpp"
#include "gray.hpp"

namespace skewcc {

inline std::optional<std::vector<int>> standard_modulus(int p, int m) {
    if (m != 2) return std::nullopt;
    switch (p) {
        case 3: return std::vector<int>{2, 2, 1};    // t^2 = t + 1
        case 5: return std::vector<int>{2, 4, 1};    // t^2 = t + 3
        case 7: return std::vector<int>{3, 6, 1};    // t^2 = t + 4
        case 11: return std::vector<int>{2, 7, 1};   // t^2 = 4t + 9
        case 13: return std::vector<int>{2, 12, 1};  // t^2 = t + 11
        default: return std::nullopt;
    }
}

// Deterministic default: the standard polynomial when bundled, otherwise the
// first monic irreducible in ascending coefficient order.
inline std::vector<int> default_modulus(int p, int m) {
    if (m == 1) return {0, 1};
    if (auto std_mod = standard_modulus(p, m)) return *std_mod;
    std::vector<int> mod(m + 1, 0);
    mod[m] = 1;
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long packed = 0; packed < count; ++packed) {
        long long v = packed;
        for (int i = m - 1; i >= 0; --i) {  // constant coefficient most significant
            mod[i] = static_cast<int>(v % p);
            v /= p;
        }
        try {
            Field probe(p, m, mod);
            return mod;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// All monic irreducible degree-m polynomials over F_p, ascending
// coefficient order; the candidate list for modulus fallback searches.
inline std::vector<std::vector<int>> irreducible_moduli(int p, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> mod(m + 1, 0);
    mod[m] = 1;
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long packed = 0; packed < count; ++packed) {
        long long v = packed;
        for (int i = m - 1; i >= 0; --i) {
            mod[i] = static_cast<int>(v % p);
            v /= p;
        }
        try {
            Field probe(p, m, mod);
            out.push_back(mod);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

// Named 3x3 Gray matrix presets, one per catalog field. Every preset
// satisfies M M^T = alpha I_3 with alpha != 0.
inline GrayMatrix gray_preset(const std::string& name, const Field& F) {
    auto rows = [&](std::array<std::array<const char*, 3>, 3> r) { return GrayMatrix::from_rows(F, r); };
    if (name == "paper-3-2") {
        if (F.p() != 3 || F.m() != 2) throw std::invalid_argument("preset paper-3-2 needs p=3, m=2");
        return rows({{{"t^2", "2", "t"}, {"2", "t", "t^2"}, {"t", "t^2", "2"}}});
    }
    if (name == "paper-5-2") {
        if (F.p() != 5 || F.m() != 2) throw std::invalid_argument("preset paper-5-2 needs p=5, m=2");
        return rows({{{"3", "2", "1"}, {"3", "4", "3"}, {"4", "3", "2"}}});
    }
    if (name == "paper-7-2") {
        if (F.p() != 7 || F.m() != 2) throw std::invalid_argument("preset paper-7-2 needs p=7, m=2");
        return rows({{{"1", "6", "3"}, {"4", "1", "6"}, {"6", "3", "6"}}});
    }
    if (name == "paper-11-2") {
        if (F.p() != 11 || F.m() != 2) throw std::invalid_argument("preset paper-11-2 needs p=11, m=2");
        return rows({{{"7", "4", "2"}, {"9", "7", "4"}, {"4", "2", "4"}}});
    }
    if (name == "paper-13-2") {
        if (F.p() != 13 || F.m() != 2) throw std::invalid_argument("preset paper-13-2 needs p=13, m=2");
        return rows({{{"9", "4", "2"}, {"11", "9", "4"}, {"4", "2", "4"}}});
    }
    throw std::invalid_argument("unknown Gray matrix preset '" + name + "'");
}

inline std::string gray_preset_name_for(int p, int m) {
    if (m == 2 && (p == 3 || p == 5 || p == 7 || p == 11 || p == 13))
        return "paper-" + std::to_string(p) + "-2";
    throw std::invalid_argument("no bundled Gray matrix for p=" + std::to_string(p) + ", m=" + std::to_string(m));
}

}  // namespace skewcc

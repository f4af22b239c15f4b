#pragma once

// The bundled reference catalog: one fully worked [[36,28,3]]_25
// construction with every intermediate polynomial spelled out, and fourteen
// published parameter rows to re-derive. The originating table leaves the
// quadratic field moduli unstated, so row validation first tries the
// standard modulus and then falls back to every monic irreducible quadratic,
// reporting which one (if any) reproduces the printed row.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "distance.hpp"
#include "gray.hpp"
#include "linear_code.hpp"
#include "presets.hpp"
#include "quantum.hpp"
#include "ring.hpp"
#include "skew_poly.hpp"

namespace skewcc {

// ---------------------------------------------------------------------------
// Worked example: F_25 with t^2 = t + 3, sigma = Frobenius, n = 12,
// delta = 1 - 2v^2, ending in a [[36,28,3]]_25 quantum code.
// ---------------------------------------------------------------------------

struct WorkedExample {
    int p = 5, m = 2, n = 12, twist = 1;
    std::vector<int> modulus{2, 4, 1};  // x^2 - x - 3
    std::array<int, 3> delta{1, 0, -2};

    // Printed factorizations, factors in printed order (skew products are
    // order sensitive). x^12 + 1 is listed twice with different factor sets.
    std::vector<const char*> factors_x12_minus_1{
        "x^2 + (3t+2)x + (2t+1)", "x^2 + (3t+3)", "x^2 + (2t+1)", "x + (t+1)",
        "x + (2t+1)",             "x + (2t+2)",   "x + (t+3)",    "x^2 + (2t+3)x + (3t+3)"};
    std::vector<const char*> factors_x12_plus_1_a{
        "x^2 + (t+1)", "x^2 + (4t+2)", "x^2 + (4t+4)", "x^2 + (t+3)",
        "x + (4t)",    "x + (4t+1)",   "x + (4t+3)",   "x + (4t+3)"};
    std::vector<const char*> factors_x12_plus_1_b{
        "x^2 + (t+1)", "x^2 + (4t+2)", "x^2 + (4t+4)", "x^2 + (t+3)",
        "x + (3t)",    "x + (t+4)",    "x + (t)",      "x + (3t+2)"};

    std::array<const char*, 3> f{"x^2 + (2t+3)x + (3t+3)", "x + (4t+3)", "x + (3t+2)"};

    std::array<const char*, 3> h{
        "x^10 + (3t+2)x^9 + (2t)x^8 + (2t+3)x^7 + (3t+4)x^6 + x^4 + (3t+2)x^3 + (2t)x^2 + (2t+3)x + (3t+4)",
        "x^11 + (4t+3)x^10 + 3x^9 + (2t+4)x^8 + 4x^7 + (t+2)x^6 + 2x^5 + (3t+1)x^4 + x^3 + (4t+3)x^2 + 3x + "
        "(2t+4)",
        "x^11 + (3t)x^10 + 3x^9 + (4t)x^8 + 4x^7 + (2t)x^6 + 2x^5 + (t)x^4 + x^3 + (3t)x^2 + 3x + (4t)"};

    std::array<const char*, 3> h_star{
        "(3t+4)x^10 + (3t)x^9 + (2t)x^8 + (2t)x^7 + x^6 + (3t+4)x^4 + (3t)x^3 + (2t)x^2 + (2t)x + 1",
        "(3t+1)x^11 + 3x^10 + (t+2)x^9 + x^8 + (2t+4)x^7 + 2x^6 + (4t+3)x^5 + 4x^4 + (3t+1)x^3 + 3x^2 + (t+2)x "
        "+ 1",
        "(t+4)x^11 + 3x^10 + (2t+3)x^9 + x^8 + (4t+1)x^7 + 2x^6 + (3t+2)x^5 + 4x^4 + (t+4)x^3 + 3x^2 + (2t+3)x "
        "+ 1"};

    // Left quotients Q_i with h_i* h_i = Q_i (x^12 - lambda_i).
    std::array<const char*, 3> quotient{
        "(3t+4)x^8 + (2t+1)x^6 + (3t+4)x^2 + (2t+1)",
        "(3t+1)x^10 + 4x^9 + (2t+4)x^8 + (2t+4)x^6 + x^5 + (3t+1)x^4 + (3t+1)x^2 + 4x + (2t+4)",
        "(t+4)x^10 + (3t+1)x^9 + (4t)x^8 + (4t+1)x^6 + (2t+4)x^5 + (t)x^4 + (t+4)x^2 + (3t+1)x + (4t)"};

    const char* gray_preset_name = "paper-5-2";
    int gray_alpha = 4;  // M M^T = 4 I_3
    int gray_n = 36, gray_k = 32, gray_d = 3;
    QuantumParams quantum{36, 28, 3};
};

inline const WorkedExample& worked_example() {
    static const WorkedExample ex;
    return ex;
}

// ---------------------------------------------------------------------------
// Catalog rows. Generator polynomials use the ascending coefficient-string
// convention. delta is given by its (a, b, c) integer components.
// ---------------------------------------------------------------------------

struct CatalogRow {
    int p, m, n;
    std::array<int, 3> delta;
    std::array<const char*, 3> f;
    int gray_n, gray_k, gray_d;
    int q_n, q_k, q_d;
};

inline const std::vector<CatalogRow>& catalog() {
    static const std::vector<CatalogRow> rows{
        {3, 2, 12, {1, 0, 0}, {"11", "(t)1", "(2t+1)1"}, 36, 33, 3, 36, 30, 3},
        {5, 2, 6, {-1, 0, 0}, {"1(4t+3)1", "21", "31"}, 18, 14, 4, 18, 10, 4},
        {5, 2, 10, {1, 0, 0}, {"(3t+4)1", "1(t+3)1", "(3t+3)1"}, 30, 26, 3, 30, 22, 3},
        {5, 2, 12, {1, 0, -2}, {"(3t+3)(2t+3)1", "(4t+3)1", "(3t+2)1"}, 36, 32, 3, 36, 28, 3},
        {7, 2, 8, {1, 0, -2}, {"(t+3)1", "(5t+6)(2t+2)1", "(t+3)(3t+6)1"}, 24, 19, 4, 24, 14, 4},
        {7, 2, 14, {-1, 0, 2}, {"(5t+4)1", "(t+3)1", "(2t+1)(3t)1"}, 42, 38, 3, 42, 34, 3},
        {7, 2, 14, {-1, 0, 2}, {"(5t+4)1", "(t+3)1", "(2t+1)1"}, 42, 39, 2, 42, 36, 2},
        {7, 2, 18, {1, 0, -2}, {"(3t+2)1", "(5t+2)1", "(6t)1"}, 54, 51, 3, 54, 48, 3},
        {11, 2, 10, {1, 0, -2}, {"(5t+9)(9t+2)1", "(7t+4)1", "(3t+8)1"}, 30, 26, 3, 30, 22, 3},
        {11, 2, 16, {1, 0, 0}, {"(4t+3)1", "(10t+1)(9t+7)1", "(5t+8)(7t+4)1"}, 48, 43, 4, 48, 38, 4},
        {11, 2, 20, {-1, 0, 2}, {"(7t+10)(4t+9)1", "(8t+7)1", "(2t+7)(t)1"}, 60, 55, 3, 60, 50, 3},
        {13, 2, 4, {-1, 0, 0}, {"(12t+11)1", "(9t+6)1", "(t+6)1"}, 12, 9, 4, 12, 6, 4},
        {13, 2, 6, {-1, 0, 0}, {"(t+11)1", "81", "(2t+8)1"}, 18, 15, 4, 18, 12, 4},
        {13, 2, 8, {-1, 0, 2}, {"(2t+11)(7t+3)1", "(t+10)1", "(5t+4)1"}, 24, 20, 3, 24, 16, 3},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// Row validation: rebuild a catalog row from its generator strings under a
// candidate modulus and compare against the printed parameters.
// ---------------------------------------------------------------------------

enum class RowStatus {
    confirmed,           // printed parameters reproduced exactly
    distance_mismatch,   // algebra reproduces, certified distance differs
    unresolved           // no admissible modulus found
};

inline const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::confirmed: return "CONFIRMED";
        case RowStatus::distance_mismatch: return "DISTANCE-MISMATCH";
        default: return "UNRESOLVED";
    }
}

struct RowValidation {
    RowStatus status = RowStatus::unresolved;
    std::vector<int> modulus;                 // modulus the verdict refers to
    bool modulus_is_standard = false;
    std::array<FieldElement, 3> lambdas;
    bool divisibility = false;                // all f_i | x^n - lambda_i
    bool dual_containing = false;
    int gray_n = 0, gray_k = 0, gray_d = 0;   // computed Gray parameters
    QuantumParams quantum;                    // computed quantum parameters
    std::optional<DistanceCertificate> certificate;
    int slack = 0;
    bool is_mds = false;
    std::vector<std::string> notes;           // human-readable diagnostics
};

namespace detail {

struct RowAttempt {
    bool divisibility = false;
    bool dual_containing = false;
    bool params_match = false;
    std::array<FieldElement, 3> lambdas;
    int gray_k = 0;
    std::optional<DistanceCertificate> cert;
    std::optional<QuantumParams> quantum;
};

inline RowAttempt attempt_row(const CatalogRow& row, const Field& F, const GrayMatrix& gray, GrayOrder order,
                              int d_max) {
    RowAttempt out;
    RingElement delta(F.from_int(row.delta[0]), F.from_int(row.delta[1]), F.from_int(row.delta[2]));
    CrtCoords crt = to_crt(delta);
    out.lambdas = {crt.beta0, crt.beta1, crt.beta2};
    std::array<SkewPoly, 3> fs{parse_coeff_string(F, 1, row.f[0]), parse_coeff_string(F, 1, row.f[1]),
                               parse_coeff_string(F, 1, row.f[2])};
    for (int i = 0; i < 3; ++i) {
        SkewPoly mod = SkewPoly::x_pow_minus(F, 1, row.n, out.lambdas[i]);
        if (!right_divides(fs[i], mod)) return out;
    }
    out.divisibility = true;
    out.dual_containing = r_dual_containing(fs, row.n, out.lambdas, 1);
    if (!out.dual_containing) return out;
    RCode rc = assemble_r_code(from_skew_generator(fs[0], row.n, out.lambdas[0], 1),
                               from_skew_generator(fs[1], row.n, out.lambdas[1], 1),
                               from_skew_generator(fs[2], row.n, out.lambdas[2], 1));
    rc.generators = fs;
    rc.lambdas = out.lambdas;
    LinearCode image = gray_image(rc, gray, order);
    out.gray_k = image.k();
    DistanceOutcome dist = min_distance_columns(image, d_max);
    if (!dist.certificate) return out;
    out.cert = dist.certificate;
    out.quantum = css_parameters(image.n(), image.k(), dist.certificate->d);
    out.params_match = image.n() == row.gray_n && image.k() == row.gray_k &&
                       dist.certificate->d == row.gray_d && *out.quantum == QuantumParams{row.q_n, row.q_k, row.q_d};
    return out;
}

}  // namespace detail

// Try the standard modulus first, then every other monic irreducible
// quadratic, until the printed row reproduces in full. If the printed
// parameters reproduce under no modulus, the best attempt (most algebra
// gates passed) is reported with its computed parameters and witness.
inline RowValidation validate_row(const CatalogRow& row, GrayOrder order = GrayOrder::blocks, int d_max = 5) {
    std::vector<std::vector<int>> candidates;
    std::vector<int> std_mod = default_modulus(row.p, row.m);
    candidates.push_back(std_mod);
    for (const auto& mod : irreducible_moduli(row.p, row.m))
        if (mod != std_mod) candidates.push_back(mod);

    RowValidation best;
    int best_score = -1;
    for (const auto& mod : candidates) {
        Field F(row.p, row.m, mod);
        GrayMatrix gray = gray_preset(gray_preset_name_for(row.p, row.m), F);
        detail::RowAttempt att = detail::attempt_row(row, F, gray, order, d_max);
        int score = (att.divisibility ? 1 : 0) + (att.dual_containing ? 1 : 0) + (att.cert ? 1 : 0) +
                    (att.params_match ? 10 : 0);
        if (score > best_score) {
            best_score = score;
            best = RowValidation{};
            best.modulus = mod;
            best.modulus_is_standard = mod == std_mod;
            best.lambdas = att.lambdas;
            best.divisibility = att.divisibility;
            best.dual_containing = att.dual_containing;
            if (att.cert) {
                best.certificate = att.cert;
                best.gray_n = row.gray_n;
                best.gray_k = att.gray_k;
                best.gray_d = att.cert->d;
                best.quantum = *att.quantum;
                best.slack = singleton_slack(best.quantum);
                best.is_mds = best.slack == 0;
            }
            if (att.params_match) {
                best.status = RowStatus::confirmed;
            } else if (att.divisibility && att.dual_containing && att.cert && att.gray_k == row.gray_k) {
                best.status = RowStatus::distance_mismatch;
            } else {
                best.status = RowStatus::unresolved;
            }
        }
        if (best.status == RowStatus::confirmed) break;
    }

    if (best.status == RowStatus::confirmed) {
        best.notes.push_back(std::string("validated with ") +
                             (best.modulus_is_standard ? "standard modulus" : "fallback modulus"));
    } else {
        best.notes.push_back("no admissible modulus reproduces the printed row (" +
                             std::to_string(candidates.size()) + " candidates tried)");
        if (best.status == RowStatus::distance_mismatch) {
            best.notes.push_back("divisibility, dual containment and dimensions reproduce; certified distance " +
                                 std::to_string(best.gray_d) + " differs from printed " +
                                 std::to_string(row.gray_d) + " under every admissible modulus");
            best.notes.push_back("the weight-" + std::to_string(best.gray_d) +
                                 " witness is independently re-verifiable, so the printed distance is not "
                                 "attainable by this construction");
        }
    }
    return best;
}

}  // namespace skewcc

#pragma once

// The Gray map psi: R^n -> F_q^{3n} determined by an invertible 3x3 matrix
// M: per coordinate, the CRT row (beta0, beta1, beta2) is multiplied by M,
// and the n images are assembled either in block order (all first components
// | all second | all third) or interleaved per coordinate. Block order is
// the default; the two orders differ by a fixed coordinate permutation, so
// all distances agree.
//
// When M M^T = alpha I_3 with alpha != 0 the map exchanges duals:
// psi(C_dual) = psi(C)_dual. All bundled matrices satisfy this, and the
// property is what makes the Gray image of a dual-containing code
// dual-containing.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linear_code.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace skewcc {

enum class GrayOrder { blocks, interleaved };

inline const char* to_string(GrayOrder o) { return o == GrayOrder::blocks ? "blocks" : "interleaved"; }

class GrayMatrix {
   public:
    explicit GrayMatrix(Matrix entries)
        : entries_((require_3x3(entries), std::move(entries))),
          inverse_(entries_.inverse()),  // throws if singular, i.e. not in GL_3
          alpha_(compute_alpha()) {}

    static GrayMatrix from_rows(const Field& f, const std::array<std::array<const char*, 3>, 3>& rows) {
        Matrix m(f, 3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) m.at(i, j) = f.parse(rows[i][j]);
        return GrayMatrix(std::move(m));
    }

    const Field& field() const { return entries_.field(); }
    const Matrix& entries() const { return entries_; }
    const Matrix& inverse() const { return inverse_; }

    // alpha with M M^T = alpha I_3, when such a nonzero scalar exists.
    const std::optional<FieldElement>& orthogonality_scalar() const { return alpha_; }

   private:
    static void require_3x3(const Matrix& m) {
        if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("Gray matrix must be 3x3");
    }

    std::optional<FieldElement> compute_alpha() const {
        Matrix prod = entries_ * entries_.transposed();
        FieldElement alpha = prod.at(0, 0);
        if (alpha.is_zero()) return std::nullopt;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                FieldElement want = i == j ? alpha : field().zero();
                if (prod.at(i, j) != want) return std::nullopt;
            }
        return alpha;
    }

    Matrix entries_;
    Matrix inverse_;
    std::optional<FieldElement> alpha_;
};

inline std::optional<FieldElement> check_orthogonality(const GrayMatrix& m) {
    return m.orthogonality_scalar();
}

namespace detail {
inline size_t gray_pos(GrayOrder order, int n, int coord, int component) {
    return order == GrayOrder::blocks ? static_cast<size_t>(component) * n + coord
                                      : static_cast<size_t>(coord) * 3 + component;
}
}  // namespace detail

inline std::vector<FieldElement> gray_map(const std::vector<RingElement>& word, const GrayMatrix& m,
                                          GrayOrder order = GrayOrder::blocks) {
    const Field& F = m.field();
    int n = static_cast<int>(word.size());
    std::vector<FieldElement> out(3 * word.size(), F.zero());
    for (int i = 0; i < n; ++i) {
        CrtCoords crt = to_crt(word[i]);
        std::vector<FieldElement> u = std::vector<FieldElement>{crt.beta0, crt.beta1, crt.beta2} * m.entries();
        for (int j = 0; j < 3; ++j) out[detail::gray_pos(order, n, i, j)] = u[j];
    }
    return out;
}

// Inverse of the Gray map (psi is a bijection R^n -> F_q^{3n}).
inline std::vector<RingElement> gray_unmap(const std::vector<FieldElement>& image, const GrayMatrix& m,
                                           GrayOrder order = GrayOrder::blocks) {
    if (image.size() % 3 != 0) throw std::invalid_argument("Gray image length must be divisible by 3");
    const Field& F = m.field();
    int n = static_cast<int>(image.size() / 3);
    std::vector<RingElement> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<FieldElement> u(3, F.zero());
        for (int j = 0; j < 3; ++j) u[j] = image[detail::gray_pos(order, n, i, j)];
        std::vector<FieldElement> crt = u * m.inverse();
        out.push_back(from_crt(F, {crt[0], crt[1], crt[2]}));
    }
    return out;
}

namespace detail {
// Rows of psi applied to the eta_l-embedded generator rows of component l:
// coordinate i contributes g_i * (row l of M) to the three output slots.
inline Matrix gray_component_rows(const std::array<const Matrix*, 3>& comps, const GrayMatrix& m,
                                  GrayOrder order) {
    const Field& F = m.field();
    int n = static_cast<int>(comps[0]->cols());
    size_t total = comps[0]->rows() + comps[1]->rows() + comps[2]->rows();
    Matrix out(F, total, 3 * static_cast<size_t>(n));
    size_t r = 0;
    for (int l = 0; l < 3; ++l) {
        const Matrix& gen = *comps[l];
        for (size_t i = 0; i < gen.rows(); ++i, ++r)
            for (int coord = 0; coord < n; ++coord) {
                const FieldElement& g = gen.at(i, coord);
                if (g.is_zero()) continue;
                for (int j = 0; j < 3; ++j)
                    out.at(r, gray_pos(order, n, coord, j)) = g * m.entries().at(l, j);
            }
    }
    return out;
}
}  // namespace detail

// The Gray image psi(C) of an R-code as a [3n, k0+k1+k2] linear code. For an
// orthogonal M (M M^T = alpha I) the parity check comes straight from the
// component duals via psi(C_dual) = psi(C)_dual; otherwise it is derived by
// elimination.
inline LinearCode gray_image(const RCode& code, const GrayMatrix& m, GrayOrder order = GrayOrder::blocks) {
    Matrix gen = detail::gray_component_rows(
        {&code.components[0].generator(), &code.components[1].generator(), &code.components[2].generator()}, m,
        order);
    if (m.orthogonality_scalar()) {
        Matrix par = detail::gray_component_rows({&code.components[0].parity_check(),
                                                  &code.components[1].parity_check(),
                                                  &code.components[2].parity_check()},
                                                 m, order);
        return LinearCode::from_generator_and_parity(gen, par);
    }
    return LinearCode::from_generator(gen);
}

// Quasi-twist operator: split a length s*t word into t sections of length s
// and apply the constacyclic shift to each section independently.
inline std::vector<FieldElement> quasi_twist(const std::vector<FieldElement>& word, int section_length,
                                             int index, const FieldElement& shift, int twist) {
    if (static_cast<int>(word.size()) != section_length * index)
        throw std::invalid_argument("word length is not section_length * index");
    std::vector<FieldElement> out;
    out.reserve(word.size());
    for (int s = 0; s < index; ++s) {
        std::vector<FieldElement> section(word.begin() + static_cast<size_t>(s) * section_length,
                                          word.begin() + static_cast<size_t>(s + 1) * section_length);
        std::vector<FieldElement> shifted = tau_shift(section, shift, twist);
        out.insert(out.end(), shifted.begin(), shifted.end());
    }
    return out;
}

inline std::vector<RingElement> quasi_twist(const std::vector<RingElement>& word, int section_length, int index,
                                            const RingElement& shift, int twist) {
    if (static_cast<int>(word.size()) != section_length * index)
        throw std::invalid_argument("word length is not section_length * index");
    std::vector<RingElement> out;
    out.reserve(word.size());
    for (int s = 0; s < index; ++s) {
        std::vector<RingElement> section(word.begin() + static_cast<size_t>(s) * section_length,
                                         word.begin() + static_cast<size_t>(s + 1) * section_length);
        std::vector<RingElement> shifted = tau_shift(section, shift, twist);
        out.insert(out.end(), shifted.begin(), shifted.end());
    }
    return out;
}

// The shift operator induced on the Gray image by tau_{sigma,delta}, i.e.
// psi . tau . psi^{-1}. When the three CRT coordinates of delta coincide
// (delta = +-1) and M is fixed by Theta, this equals quasi_twist with that
// coordinate as shift on sections of length n; for mixed coordinates the
// induced operator additionally mixes the section heads through M, and no
// single-shift quasi-twist fixes the image.
inline std::vector<FieldElement> gray_induced_shift(const std::vector<FieldElement>& image, const GrayMatrix& m,
                                                    const RingElement& delta, int twist,
                                                    GrayOrder order = GrayOrder::blocks) {
    return gray_map(tau_shift(gray_unmap(image, m, order), delta, twist), m, order);
}

}  // namespace skewcc

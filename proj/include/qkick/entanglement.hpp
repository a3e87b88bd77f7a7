#pragma once

#include <string>
#include <string_view>

#include "qkick/numerics.hpp"

namespace qkick {

/// Validated two-qubit density matrix: Hermitian and unit trace to 1e-10,
/// eigenvalues >= -1e-9. The constructor throws SpectrumError otherwise.
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix4& rho);

    /// |psi><psi| / <psi|psi>
    static DensityMatrix from_pure(const Vector4& psi);

    const Matrix4& matrix() const { return rho_; }

private:
    Matrix4 rho_;
};

/// 2 |a1 a4 - a2 a3|, clamped to [0, 1]. Throws NormalizationError when the
/// norm is off by more than 1e-6.
double concurrence_pure(const Vector4& state);

/// Wootters concurrence max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} from
/// the eigenvalues of rho (sy x sy) rho* (sy x sy), sorted descending.
double concurrence_density(const DensityMatrix& rho);

/// Eigenvalues of rho (sy x sy) rho* (sy x sy) after noise repair: imaginary
/// parts below 1e-9, negative real parts in [-1e-9, 0) and real parts within
/// 32 eps ||R||_1 of zero are set to zero.
/// Sorted descending by real part. Throws SpectrumError when a real part is
/// still below -1e-6.
std::array<double, 4> concurrence_spectrum(const DensityMatrix& rho);

enum class StateLabel { s11, s10, s01, s00, phi_plus, phi_minus, psi_plus, psi_minus, custom };

struct NamedState {
    StateLabel label = StateLabel::custom;
    Vector4 vector;
};

/// Canonical unit vector for a label (custom is rejected with UnknownLabel).
NamedState named_state(StateLabel label);

/// Parses "11", "10", "01", "00", "phi+", "phi-", "psi+", "psi-" (also with a
/// ket, e.g. "|11>"). Throws UnknownLabel.
NamedState named_state(std::string_view label);

std::string to_string(StateLabel label);

enum class PauliAxis { x, y };

/// sigma on qubit 1 (sigma x I) or qubit 2 (I x sigma).
Matrix4 local_pauli(int which_qubit, PauliAxis axis);

}  // namespace qkick

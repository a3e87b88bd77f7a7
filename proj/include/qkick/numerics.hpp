#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qkick {

using cplx = std::complex<double>;

/// Complex 4-vector; amplitudes are stored in the basis order |11>, |10>, |01>, |00>.
struct Vector4 {
    std::array<cplx, 4> v{};

    cplx& operator[](std::size_t i) { return v[i]; }
    const cplx& operator[](std::size_t i) const { return v[i]; }

    double norm() const;
    bool is_finite() const;

    friend Vector4 operator+(const Vector4& a, const Vector4& b);
    friend Vector4 operator-(const Vector4& a, const Vector4& b);
    friend Vector4 operator*(cplx s, const Vector4& a);
    friend bool operator==(const Vector4&, const Vector4&) = default;
};

/// Dense complex 4x4 matrix, row-major.
struct Matrix4 {
    std::array<std::array<cplx, 4>, 4> m{};

    cplx& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

    static Matrix4 zero() { return {}; }
    static Matrix4 identity();
    static Matrix4 diagonal(cplx d0, cplx d1, cplx d2, cplx d3);

    cplx trace() const;
    cplx determinant() const;
    bool is_finite() const;
    Matrix4 conj() const;
    Matrix4 transpose() const;

    /// Largest absolute column sum.
    double norm1() const;
    /// Largest entry modulus.
    double max_abs() const;

    Matrix4& operator+=(const Matrix4& o);
    Matrix4& operator-=(const Matrix4& o);
    Matrix4& operator*=(cplx s);

    friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
    friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
    friend Matrix4 operator*(cplx s, Matrix4 a) { return a *= s; }
    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
    friend Vector4 operator*(const Matrix4& a, const Vector4& x);
    friend bool operator==(const Matrix4&, const Matrix4&) = default;
};

Matrix4 matmul(const Matrix4& a, const Matrix4& b);
Matrix4 adjoint(const Matrix4& a);

/// Kronecker product of two single-qubit operators, first factor on qubit 1.
Matrix4 kron(const std::array<std::array<cplx, 2>, 2>& a,
             const std::array<std::array<cplx, 2>, 2>& b);

/// Largest entry modulus of a - b.
double max_abs_diff(const Matrix4& a, const Matrix4& b);

/// ||U^dagger U - I||_max.
double unitarity_defect(const Matrix4& u);

/// Matrix exponential by scaling and squaring with a [13/13] Pade approximant.
/// Throws OverflowError when the 1-norm of `a` is non-finite or above
/// `expm_norm_limit`.
Matrix4 expm(const Matrix4& a);
inline constexpr double expm_norm_limit = 1e6;

/// Eigenvalues of a general complex 4x4 matrix, unordered. Hessenberg
/// reduction followed by shifted QR sweeps with Givens rotations.
/// Throws ConvergenceError if an eigenvalue fails to deflate.
std::array<cplx, 4> eigvals(const Matrix4& a);

/// Solves a x = b for square `a` by Gaussian elimination with partial
/// pivoting, column by column of `b`.
Matrix4 solve(const Matrix4& a, const Matrix4& b);

}  // namespace qkick

#include "qkick/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qkick/errors.hpp"

namespace qkick {

double Vector4::norm() const {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

bool Vector4::is_finite() const {
    return std::all_of(v.begin(), v.end(), [](const cplx& x) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    });
}

Vector4 operator+(const Vector4& a, const Vector4& b) {
    Vector4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

Vector4 operator-(const Vector4& a, const Vector4& b) {
    Vector4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
}

Vector4 operator*(cplx s, const Vector4& a) {
    Vector4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = s * a[i];
    return r;
}

Matrix4 Matrix4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

Matrix4 Matrix4::diagonal(cplx d0, cplx d1, cplx d2, cplx d3) {
    Matrix4 r;
    r(0, 0) = d0;
    r(1, 1) = d1;
    r(2, 2) = d2;
    r(3, 3) = d3;
    return r;
}

cplx Matrix4::trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

cplx Matrix4::determinant() const {
    auto lu = m;
    cplx det = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < 4; ++i)
            if (std::abs(lu[i][k]) > std::abs(lu[piv][k])) piv = i;
        if (lu[piv][k] == cplx{}) return cplx{};
        if (piv != k) {
            std::swap(lu[piv], lu[k]);
            det = -det;
        }
        det *= lu[k][k];
        for (std::size_t i = k + 1; i < 4; ++i) {
            const cplx f = lu[i][k] / lu[k][k];
            for (std::size_t j = k; j < 4; ++j) lu[i][j] -= f * lu[k][j];
        }
    }
    return det;
}

bool Matrix4::is_finite() const {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

Matrix4 Matrix4::conj() const {
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r.m[i][j] = std::conj(m[i][j]);
    return r;
}

Matrix4 Matrix4::transpose() const {
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

double Matrix4::norm1() const {
    double best = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < 4; ++i) s += std::abs(m[i][j]);
        best = std::max(best, s);
    }
    return best;
}

double Matrix4::max_abs() const {
    double best = 0.0;
    for (const auto& row : m)
        for (const auto& x : row) best = std::max(best, std::abs(x));
    return best;
}

Matrix4& Matrix4::operator+=(const Matrix4& o) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i][j] += o.m[i][j];
    return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& o) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i][j] -= o.m[i][j];
    return *this;
}

Matrix4& Matrix4::operator*=(cplx s) {
    for (auto& row : m)
        for (auto& x : row) x *= s;
    return *this;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] +
                        a.m[i][2] * b.m[2][j] + a.m[i][3] * b.m[3][j];
    return r;
}

Vector4 operator*(const Matrix4& a, const Vector4& x) {
    Vector4 r;
    for (std::size_t i = 0; i < 4; ++i)
        r[i] = a.m[i][0] * x[0] + a.m[i][1] * x[1] + a.m[i][2] * x[2] + a.m[i][3] * x[3];
    return r;
}

Matrix4 matmul(const Matrix4& a, const Matrix4& b) { return a * b; }

Matrix4 adjoint(const Matrix4& a) { return a.conj().transpose(); }

Matrix4 kron(const std::array<std::array<cplx, 2>, 2>& a,
             const std::array<std::array<cplx, 2>, 2>& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a[i][j] * b[k][l];
    return r;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).max_abs(); }

double unitarity_defect(const Matrix4& u) {
    return max_abs_diff(adjoint(u) * u, Matrix4::identity());
}

Matrix4 solve(const Matrix4& a, const Matrix4& b) {
    auto lu = a.m;
    auto x = b.m;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < 4; ++i)
            if (std::abs(lu[i][k]) > std::abs(lu[piv][k])) piv = i;
        if (lu[piv][k] == cplx{}) throw ConvergenceError("solve: singular matrix");
        std::swap(lu[piv], lu[k]);
        std::swap(x[piv], x[k]);
        for (std::size_t i = k + 1; i < 4; ++i) {
            const cplx f = lu[i][k] / lu[k][k];
            for (std::size_t j = k; j < 4; ++j) lu[i][j] -= f * lu[k][j];
            for (std::size_t j = 0; j < 4; ++j) x[i][j] -= f * x[k][j];
        }
    }
    for (std::size_t kk = 4; kk-- > 0;) {
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = x[kk][j];
            for (std::size_t c = kk + 1; c < 4; ++c) s -= lu[kk][c] * x[c][j];
            x[kk][j] = s / lu[kk][kk];
        }
    }
    Matrix4 r;
    r.m = x;
    return r;
}

Matrix4 expm(const Matrix4& a) {
    const double nrm = a.norm1();
    if (!a.is_finite() || !std::isfinite(nrm) || nrm > expm_norm_limit)
        throw OverflowError("expm: 1-norm " + std::to_string(nrm) + " outside supported range");

    // Higham (2005) [13/13] coefficients and the matching scaling threshold.
    static constexpr std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;

    int s = 0;
    if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    Matrix4 x = a;
    if (s > 0) x *= std::ldexp(1.0, -s);

    const Matrix4 id = Matrix4::identity();
    const Matrix4 x2 = x * x;
    const Matrix4 x4 = x2 * x2;
    const Matrix4 x6 = x4 * x2;

    const Matrix4 inner_u = b[13] * x6 + b[11] * x4 + b[9] * x2;
    const Matrix4 u = x * (x6 * inner_u + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
    const Matrix4 inner_v = b[12] * x6 + b[10] * x4 + b[8] * x2;
    const Matrix4 v = x6 * inner_v + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

    Matrix4 r = solve(v - u, v + u);
    for (int i = 0; i < s; ++i) r = r * r;
    return r;
}

namespace {

// Reduces h in place to upper Hessenberg form with Householder reflections.
void to_hessenberg(Matrix4& h) {
    for (std::size_t k = 0; k + 2 < 4; ++k) {
        double alpha_norm = 0.0;
        for (std::size_t i = k + 1; i < 4; ++i) alpha_norm += std::norm(h(i, k));
        alpha_norm = std::sqrt(alpha_norm);
        if (alpha_norm == 0.0) continue;

        const cplx x0 = h(k + 1, k);
        const cplx phase = std::abs(x0) == 0.0 ? cplx{1.0} : x0 / std::abs(x0);
        std::array<cplx, 4> v{};
        v[k + 1] = x0 + phase * alpha_norm;
        for (std::size_t i = k + 2; i < 4; ++i) v[i] = h(i, k);
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < 4; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;

        // h <- (I - 2 v v^H / |v|^2) h (I - 2 v v^H / |v|^2)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s{};
            for (std::size_t i = k + 1; i < 4; ++i) s += std::conj(v[i]) * h(i, j);
            s *= 2.0 / vnorm2;
            for (std::size_t i = k + 1; i < 4; ++i) h(i, j) -= v[i] * s;
        }
        for (std::size_t i = 0; i < 4; ++i) {
            cplx s{};
            for (std::size_t j = k + 1; j < 4; ++j) s += h(i, j) * v[j];
            s *= 2.0 / vnorm2;
            for (std::size_t j = k + 1; j < 4; ++j) h(i, j) -= s * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < 4; ++i) h(i, k) = 0.0;
    }
}

// Eigenvalue of the 2x2 block [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
    const cplx half_tr = 0.5 * (a + d);
    const cplx det = a * d - b * c;
    const cplx disc = std::sqrt(half_tr * half_tr - det);
    const cplx l1 = half_tr + disc;
    const cplx l2 = half_tr - disc;
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::array<cplx, 4> eigvals(const Matrix4& a) {
    if (!a.is_finite()) throw ConvergenceError("eigvals: non-finite input");
    Matrix4 h = a;
    to_hessenberg(h);

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_iter_per_eigenvalue = 60;
    std::array<cplx, 4> out{};

    int hi = 3;
    int iter = 0;
    while (hi >= 0) {
        if (hi == 0) {
            out[0] = h(0, 0);
            break;
        }
        // Look for a negligible subdiagonal entry inside the active block.
        int lo = hi;
        while (lo > 0) {
            const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
            const double ref = scale == 0.0 ? h.max_abs() : scale;
            if (std::abs(h(lo, lo - 1)) <= eps * ref) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            out[static_cast<std::size_t>(hi)] = h(hi, hi);
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > max_iter_per_eigenvalue)
            throw ConvergenceError("eigvals: QR iteration did not converge");

        cplx mu;
        if (iter % 11 == 0) {
            // exceptional shift to break cycles
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        }

        // Explicit shifted QR step on rows/cols lo..hi: H - mu I = QR, H <- RQ + mu I.
        const auto l = static_cast<std::size_t>(lo);
        const auto u = static_cast<std::size_t>(hi);
        for (std::size_t k = l; k <= u; ++k) h(k, k) -= mu;
        std::array<std::pair<cplx, cplx>, 4> rot{};  // (c, s) of each Givens rotation
        for (std::size_t k = l; k < u; ++k) {
            const cplx x = h(k, k);
            const cplx y = h(k + 1, k);
            const double r = std::hypot(std::abs(x), std::abs(y));
            cplx c = 1.0;
            cplx s = 0.0;
            if (r != 0.0) {
                c = x / r;
                s = y / r;
            }
            rot[k] = {c, s};
            // G^H applied from the left: rows k, k+1
            for (std::size_t j = k; j < 4; ++j) {
                const cplx p = h(k, j);
                const cplx q = h(k + 1, j);
                h(k, j) = std::conj(c) * p + std::conj(s) * q;
                h(k + 1, j) = -s * p + c * q;
            }
        }
        for (std::size_t k = l; k < u; ++k) {
            const auto [c, s] = rot[k];
            // G applied from the right: cols k, k+1
            for (std::size_t i = 0; i <= std::min<std::size_t>(k + 1, 3); ++i) {
                const cplx p = h(i, k);
                const cplx q = h(i, k + 1);
                h(i, k) = p * c + q * s;
                h(i, k + 1) = -p * std::conj(s) + q * std::conj(c);
            }
        }
        for (std::size_t k = l; k <= u; ++k) h(k, k) += mu;
    }
    return out;
}

}  // namespace qkick

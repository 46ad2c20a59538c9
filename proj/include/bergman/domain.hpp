#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bergman/errors.hpp"
#include "bergman/numeric.hpp"

namespace bergman {

enum class DomainKind {
    UnitDisc,       // |z| < 1
    PuncturedDisc,  // 0 < |z| < 1
    Polydisc,       // max_j |z_j| < 1
    Ball,           // sum_j |z_j|^2 < 1
    HartogsPolydisc,  // |w_j| < |z|^k < 1 for all j          (fibered over the disc)
    HartogsBall,      // |w_1|^2 + ... + |w_n|^2 < |z|^{2k} < 1
};

inline const char* kind_name(DomainKind kind) {
    switch (kind) {
        case DomainKind::UnitDisc: return "UnitDisc";
        case DomainKind::PuncturedDisc: return "PuncturedDisc";
        case DomainKind::Polydisc: return "Polydisc";
        case DomainKind::Ball: return "Ball";
        case DomainKind::HartogsPolydisc: return "HartogsPolydisc";
        case DomainKind::HartogsBall: return "HartogsBall";
    }
    return "?";
}

/// One of the five supported domain families with its parameters.
/// n is the fiber dimension (ambient dimension for Polydisc/Ball); k is the
/// power coupling the base and the fiber, meaningful only for Hartogs kinds.
struct DomainSpec {
    DomainKind kind = DomainKind::UnitDisc;
    int n = 1;
    int k = 1;

    DomainSpec() = default;
    DomainSpec(DomainKind kind_, int n_, int k_ = 1) : kind(kind_), n(n_), k(k_) {
        if (n < 1 || k < 1) throw ContractViolation("DomainSpec requires n >= 1 and k >= 1");
        if ((kind == DomainKind::UnitDisc || kind == DomainKind::PuncturedDisc) && n != 1)
            throw ContractViolation("disc domains are one-dimensional");
    }

    bool is_hartogs() const {
        return kind == DomainKind::HartogsPolydisc || kind == DomainKind::HartogsBall;
    }

    int ambient_dim() const {
        switch (kind) {
            case DomainKind::UnitDisc:
            case DomainKind::PuncturedDisc: return 1;
            case DomainKind::Polydisc:
            case DomainKind::Ball: return n;
            case DomainKind::HartogsPolydisc:
            case DomainKind::HartogsBall: return 1 + n;
        }
        return 0;
    }

    std::string str() const {
        std::string s = kind_name(kind);
        s += "(n=" + std::to_string(n);
        if (is_hartogs()) s += ",k=" + std::to_string(k);
        s += ")";
        return s;
    }

    friend bool operator==(const DomainSpec& a, const DomainSpec& b) {
        return a.kind == b.kind && a.n == b.n && a.k == b.k;
    }
};

inline DomainSpec hartogs_polydisc(int n, int k) { return {DomainKind::HartogsPolydisc, n, k}; }
inline DomainSpec hartogs_ball(int n, int k) { return {DomainKind::HartogsBall, n, k}; }

/// A point of the ambient complex space. For Hartogs kinds coords[0] is the
/// base coordinate z and coords[1..n] are the fiber coordinates w_1..w_n.
struct CPoint {
    std::vector<Complex> coords;

    CPoint() = default;
    CPoint(std::initializer_list<Complex> cs) : coords(cs) {}
    explicit CPoint(std::vector<Complex> cs) : coords(std::move(cs)) {}

    std::size_t dim() const { return coords.size(); }
    Complex base() const { return coords[0]; }
    Complex fiber(std::size_t j) const { return coords[1 + j]; }

    friend bool operator==(const CPoint& a, const CPoint& b) { return a.coords == b.coords; }
};

inline void require_dim(const DomainSpec& spec, const CPoint& p) {
    if (static_cast<int>(p.dim()) != spec.ambient_dim())
        throw ContractViolation("point has dimension " + std::to_string(p.dim()) +
                                ", expected " + std::to_string(spec.ambient_dim()) +
                                " for " + spec.str());
}

/// Strict membership test; boundary points are outside.
inline bool contains(const DomainSpec& spec, const CPoint& p) {
    require_dim(spec, p);
    switch (spec.kind) {
        case DomainKind::UnitDisc:
            return std::abs(p.coords[0]) < 1.0;
        case DomainKind::PuncturedDisc: {
            const double r = std::abs(p.coords[0]);
            return r > 0.0 && r < 1.0;
        }
        case DomainKind::Polydisc: {
            for (const Complex& z : p.coords)
                if (!(std::abs(z) < 1.0)) return false;
            return true;
        }
        case DomainKind::Ball: {
            double s = 0.0;
            for (const Complex& z : p.coords) s += std::norm(z);
            return s < 1.0;
        }
        case DomainKind::HartogsPolydisc: {
            const double rk = ipow(std::abs(p.base()), spec.k);
            if (!(rk < 1.0)) return false;
            for (int j = 0; j < spec.n; ++j)
                if (!(std::abs(p.fiber(j)) < rk)) return false;
            return true;
        }
        case DomainKind::HartogsBall: {
            const double r2k = ipow(std::norm(p.base()), spec.k);
            if (!(r2k < 1.0)) return false;
            double s = 0.0;
            for (int j = 0; j < spec.n; ++j) s += std::norm(p.fiber(j));
            return s < r2k;
        }
    }
    return false;
}

/// Exact Lebesgue volume.
///   Vol(D) = pi,  Vol(D^n) = pi^n,  Vol(B_n) = pi^n / n!,
///   Vol(Omega_k) = pi^{n+1} / (kn+1),  Vol(H_k) = pi^{n+1} / (n! (kn+1)).
inline double volume(const DomainSpec& spec) {
    const double pin = ipow(kPi, spec.n);
    switch (spec.kind) {
        case DomainKind::UnitDisc:
        case DomainKind::PuncturedDisc: return kPi;
        case DomainKind::Polydisc: return pin;
        case DomainKind::Ball: return pin / factorial(spec.n);
        case DomainKind::HartogsPolydisc: return pin * kPi / (spec.k * spec.n + 1.0);
        case DomainKind::HartogsBall:
            return pin * kPi / (factorial(spec.n) * (spec.k * spec.n + 1.0));
    }
    return 0.0;
}

namespace detail {

inline void require_hartogs(const DomainSpec& spec, const char* op) {
    if (!spec.is_hartogs())
        throw ContractViolation(std::string(op) + " is defined only for Hartogs domains, got " + spec.str());
}

} // namespace detail

/// The fiber-scaling biholomorphism (z, w) -> (z, w_1/z^k, ..., w_n/z^k),
/// mapping Omega_k onto D* x D^n and H_k onto D* x B_n.
inline CPoint phi(const DomainSpec& spec, const CPoint& p) {
    detail::require_hartogs(spec, "phi");
    require_dim(spec, p);
    const Complex z = p.base();
    if (z == Complex(0.0)) throw SingularPointError("phi is singular at z = 0");
    if (!contains(spec, p)) throw ContractViolation("phi requires a point of " + spec.str());
    const Complex zk = ipow(z, spec.k);
    CPoint out;
    out.coords.reserve(p.dim());
    out.coords.push_back(z);
    for (int j = 0; j < spec.n; ++j) out.coords.push_back(p.fiber(j) / zk);
    return out;
}

/// Inverse of phi: multiplies the fiber coordinates by z^k.
inline CPoint phi_inv(const DomainSpec& spec, const CPoint& q) {
    detail::require_hartogs(spec, "phi_inv");
    require_dim(spec, q);
    const Complex z = q.base();
    if (z == Complex(0.0)) throw SingularPointError("phi_inv is singular at z = 0");
    const Complex zk = ipow(z, spec.k);
    CPoint out;
    out.coords.reserve(q.dim());
    out.coords.push_back(z);
    for (int j = 0; j < spec.n; ++j) out.coords.push_back(q.fiber(j) * zk);
    return out;
}

/// Complex Jacobian determinant of phi, z^{-kn}: the Jacobian is triangular
/// with diagonal (1, z^{-k}, ..., z^{-k}).
inline Complex phi_jacobian_det(const DomainSpec& spec, const CPoint& p) {
    detail::require_hartogs(spec, "phi_jacobian_det");
    require_dim(spec, p);
    const Complex z = p.base();
    if (z == Complex(0.0)) throw SingularPointError("phi_jacobian_det is singular at z = 0");
    return ipow(z, -static_cast<long long>(spec.k) * spec.n);
}

} // namespace bergman

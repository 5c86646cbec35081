//! Quaternion algebra and the quaternionic Euler angles of Sp(1,1).
//!
//! Sp(1,1) is parametrized by nine real Euler angles
//! (ψ, φ, θ, ϕ, ς, χ, τ, ε, ω); the compact pairs combine with the
//! hyperbolic parameters into quaternion-valued angles
//!
//! ```text
//! θ^q  = θ + ϕ − iτ
//! φ^q  = φ − iε + jς
//! ψ^q  = ψ − iε − iω + kχ
//! ψ₁^q = ψ − iε + kχ          (so ψ^q = ψ₁^q − iω)
//! ```
//!
//! Quaternions use the component order (w, x, y, z) ↔ (1, i, j, k);
//! all serialization follows this order.

use crate::ComplexScalar;

/// Real quaternion `w + x·i + y·j + z·k`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Embed a complex number into the (1, i) subalgebra.
    pub fn from_complex(c: ComplexScalar) -> Self {
        Quaternion::new(c.re, c.im, 0.0, 0.0)
    }

    /// The (1, i) components as a complex number.  Meaningful when the
    /// j and k components vanish.
    pub fn to_complex(self) -> ComplexScalar {
        ComplexScalar::new(self.w, self.x)
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Quaternion exponential.
    ///
    /// For q = w + v with imaginary part v,
    /// exp(q) = e^w (cos|v| + (v/|v|) sin|v|).  The |v| → 0 limit is taken
    /// through the Taylor expansion of sin|v|/|v|, not by division.
    pub fn exp(self) -> Self {
        let vn = (self.x * self.x + self.y * self.y + self.z * self.z).sqrt();
        let ew = self.w.exp();
        // sin(v)/v; below 1e-4 the two-term Taylor series is exact to f64
        // (next term is v^4/120 < 1e-17).
        let sinc = if vn < 1e-4 {
            1.0 - vn * vn / 6.0
        } else {
            vn.sin() / vn
        };
        let c = ew * vn.cos();
        let s = ew * sinc;
        Quaternion::new(c, s * self.x, s * self.y, s * self.z)
    }
}

impl std::ops::Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

/// Hamilton product with i² = j² = k² = ijk = −1.  Not commutative.
impl std::ops::Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Self) -> Self {
        let (a, b, c, d) = (self.w, self.x, self.y, self.z);
        let (e, f, g, h) = (rhs.w, rhs.x, rhs.y, rhs.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}

/// The nine real Euler angles of Sp(1,1).
///
/// `tau`, `epsilon` and `omega` are unbounded hyperbolic-type parameters;
/// the remaining angles are compact (interpreted mod 2π or 4π as needed).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct EulerAngles9 {
    pub psi: f64,
    pub varphi: f64,
    pub theta: f64,
    pub phi: f64,
    pub varsigma: f64,
    pub chi: f64,
    pub tau: f64,
    pub epsilon: f64,
    pub omega: f64,
}

/// The quaternion-valued Euler angles built from [`EulerAngles9`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuaternionAngles {
    /// θ^q = θ + ϕ − iτ (zero j and k components).
    pub theta_q: Quaternion,
    /// φ^q = φ − iε + jς.
    pub varphi_q: Quaternion,
    /// ψ^q = ψ − iε − iω + kχ.
    pub psi_q: Quaternion,
    /// ψ₁^q = ψ − iε + kχ, so that ψ^q = ψ₁^q − iω.
    pub psi1_q: Quaternion,
}

/// Build the quaternion Euler angles from the nine real ones.
pub fn quaternion_angles(e: &EulerAngles9) -> QuaternionAngles {
    QuaternionAngles {
        theta_q: Quaternion::new(e.theta + e.phi, -e.tau, 0.0, 0.0),
        varphi_q: Quaternion::new(e.varphi, -e.epsilon, e.varsigma, 0.0),
        psi_q: Quaternion::new(e.psi, -e.epsilon - e.omega, 0.0, e.chi),
        psi1_q: Quaternion::new(e.psi, -e.epsilon, 0.0, e.chi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn identity_element() {
        let q = Quaternion::new(0.3, -1.2, 0.7, 2.0);
        assert_eq!(Quaternion::ONE * q, q);
        assert_eq!(q * Quaternion::ONE, q);
    }

    #[test]
    fn hamilton_relations() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
        assert_eq!(Quaternion::J * Quaternion::J, -Quaternion::ONE);
        assert_eq!(Quaternion::K * Quaternion::K, -Quaternion::ONE);
        // ijk = -1
        assert_eq!(Quaternion::I * Quaternion::J * Quaternion::K, -Quaternion::ONE);
    }

    #[test]
    fn multiplication_is_not_commutative() {
        // witness pair with q1 q2 != q2 q1
        let q1 = Quaternion::new(1.0, 2.0, 0.0, 0.0);
        let q2 = Quaternion::new(0.5, 0.0, 1.0, 0.0);
        assert_ne!(q1 * q2, q2 * q1);
    }

    #[test]
    fn conjugation_gives_squared_norm() {
        let q = Quaternion::new(0.4, -0.3, 1.7, -2.5);
        let p = q * q.conj();
        assert!((p.w - q.norm_sq()).abs() < 1e-13 * q.norm_sq());
        assert!(p.x.abs() < 1e-13 && p.y.abs() < 1e-13 && p.z.abs() < 1e-13);
    }

    #[test]
    fn exp_basic_values() {
        assert_eq!(Quaternion::ZERO.exp(), Quaternion::ONE);
        // exp(i pi/2) = i
        let e = Quaternion::I.scale(PI / 2.0).exp();
        assert!(close(e, Quaternion::I, 1e-15));
        // exp(k pi) = -1
        let e = Quaternion::K.scale(PI).exp();
        assert!(close(e, -Quaternion::ONE, 1e-15));
    }

    #[test]
    fn exp_near_zero_imaginary_part() {
        // exercises the Taylor branch
        let q = Quaternion::new(0.0, 1e-6, -2e-6, 5e-7);
        let e = q.exp();
        let expected = Quaternion::ONE + q; // to O(|q|^2)
        assert!(close(e, expected, 1e-11));
        assert!((e.norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn quaternion_angles_zero() {
        let qa = quaternion_angles(&EulerAngles9::default());
        assert_eq!(qa.theta_q, Quaternion::ZERO);
        assert_eq!(qa.varphi_q, Quaternion::ZERO);
        assert_eq!(qa.psi_q, Quaternion::ZERO);
        assert_eq!(qa.psi1_q, Quaternion::ZERO);
    }

    #[test]
    fn quaternion_angles_theta_definition() {
        let e = EulerAngles9 {
            theta: 0.7,
            phi: 0.2,
            tau: -1.3,
            ..Default::default()
        };
        let qa = quaternion_angles(&e);
        assert_eq!(qa.theta_q, Quaternion::new(0.9, 1.3, 0.0, 0.0));
        assert_eq!(qa.theta_q.y, 0.0);
        assert_eq!(qa.theta_q.z, 0.0);
    }

    #[test]
    fn psi_relation_holds_for_any_angles() {
        let e = EulerAngles9 {
            psi: 0.3,
            varphi: -0.8,
            theta: 1.1,
            phi: 0.25,
            varsigma: 2.0,
            chi: -0.4,
            tau: 0.9,
            epsilon: -1.5,
            omega: 0.6,
        };
        let qa = quaternion_angles(&e);
        // psi_q + i*omega = psi1_q
        let lhs = qa.psi_q + Quaternion::I.scale(e.omega);
        assert_eq!(lhs, qa.psi1_q);
    }

    fn arb_quat(limit: f64) -> impl Strategy<Value = Quaternion> {
        (
            -limit..limit,
            -limit..limit,
            -limit..limit,
            -limit..limit,
        )
            .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(q1 in arb_quat(10.0), q2 in arb_quat(10.0)) {
            let lhs = (q1 * q2).norm();
            let rhs = q1.norm() * q2.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs));
        }

        #[test]
        fn multiplication_is_associative(
            q1 in arb_quat(5.0),
            q2 in arb_quat(5.0),
            q3 in arb_quat(5.0),
        ) {
            let lhs = (q1 * q2) * q3;
            let rhs = q1 * (q2 * q3);
            prop_assert!(close(lhs, rhs, 1e-13 * (1.0 + lhs.norm())));
        }

        #[test]
        fn exp_inverts(q in arb_quat(5.0)) {
            prop_assume!(q.norm() <= 10.0);
            let p = q.exp() * (-q).exp();
            prop_assert!(close(p, Quaternion::ONE, 1e-12 * (1.0 + p.norm())));
        }

        #[test]
        fn exp_adds_on_a_common_axis(a in -3.0..3.0f64, b in -3.0..3.0f64, s in -2.0..2.0f64, t in -2.0..2.0f64) {
            // same imaginary axis => commuting arguments
            let axis = Quaternion::new(0.0, 0.6, -0.48, 0.64); // |axis| = 1
            let q1 = Quaternion::new(a, 0.0, 0.0, 0.0) + axis.scale(s);
            let q2 = Quaternion::new(b, 0.0, 0.0, 0.0) + axis.scale(t);
            let lhs = q1.exp() * q2.exp();
            let rhs = (q1 + q2).exp();
            prop_assert!(close(lhs, rhs, 1e-12 * (1.0 + rhs.norm())));
        }

        #[test]
        fn complex_embedding_matches_complex_exp(re in -5.0..5.0f64, im in -5.0..5.0f64) {
            let q = Quaternion::new(re, im, 0.0, 0.0);
            let e = q.exp();
            let c = ComplexScalar::new(re, im).exp();
            prop_assert!(e.y == 0.0 && e.z == 0.0);
            prop_assert!((e.to_complex() - c).norm() <= 1e-13 * (1.0 + c.norm()));
        }
    }
}

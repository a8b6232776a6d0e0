//! Quaternion scalar arithmetic.
//!
//! Quaternions are written `q = w + xi + yj + zk` with real coefficients and
//! the Hamilton relations `i^2 = j^2 = k^2 = ijk = -1`, so `ij = k = -ji`.
//! Multiplication is noncommutative; every routine in this crate is explicit
//! about which side a factor acts on.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A quaternion with `f64` coefficients in the coordinate order `(1, i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// The Cayley-Dickson split `q = z + w j` of a quaternion into two complex
/// halves, each stored as a quaternion whose `j`, `k` parts are zero.
///
/// `z` is the first component `Co_1(q)`; `w` is the coefficient of `j` before
/// conjugation, so the second component is `Co_2(q) = conj(w)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair {
    pub z: Quat,
    pub w: Quat,
}

impl Quat {
    pub const ZERO: Quat = Quat { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Quat = Quat { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quat = Quat { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quat = Quat { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quat = Quat { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Quat {
        Quat { w, x, y, z }
    }

    pub const fn from_real(w: f64) -> Quat {
        Quat::new(w, 0.0, 0.0, 0.0)
    }

    /// The complex number `re + im*i` as a quaternion.
    pub const fn from_complex(re: f64, im: f64) -> Quat {
        Quat::new(re, im, 0.0, 0.0)
    }

    /// The basis unit `i_r` for `r` in `0..4`, ordered `(1, i, j, k)`.
    ///
    /// Panics if `r >= 4`.
    pub fn basis_unit(r: usize) -> Quat {
        match r {
            0 => Quat::ONE,
            1 => Quat::I,
            2 => Quat::J,
            3 => Quat::K,
            _ => panic!("quaternion basis index {r} out of range 0..4"),
        }
    }

    /// The coefficient `q_r` in the coordinate order `(1, i, j, k)`.
    ///
    /// Panics if `r >= 4`.
    pub fn component(self, r: usize) -> f64 {
        match r {
            0 => self.w,
            1 => self.x,
            2 => self.y,
            3 => self.z,
            _ => panic!("quaternion component index {r} out of range 0..4"),
        }
    }

    pub fn coords(self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_coords(c: [f64; 4]) -> Quat {
        Quat::new(c[0], c[1], c[2], c[3])
    }

    pub fn conj(self) -> Quat {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn re(self) -> f64 {
        self.w
    }

    pub fn abs_sq(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn abs(self) -> f64 {
        self.abs_sq().sqrt()
    }

    /// `q / |q|`, or `None` when `|q| = 0` exactly.
    pub fn normalized(self) -> Option<Quat> {
        let n = self.abs();
        if n == 0.0 {
            None
        } else {
            Some(self / n)
        }
    }

    /// `conj(q) / |q|^2`, or `None` when `|q| = 0` exactly.
    pub fn inverse(self) -> Option<Quat> {
        let n2 = self.abs_sq();
        if n2 == 0.0 {
            None
        } else {
            Some(self.conj() / n2)
        }
    }

    pub fn is_zero(self, eps: f64) -> bool {
        self.abs() < eps
    }

    /// True when the `i`, `j`, `k` parts all vanish to `eps`.
    pub fn is_real(self, eps: f64) -> bool {
        self.x.abs() < eps && self.y.abs() < eps && self.z.abs() < eps
    }

    /// True when the `j`, `k` parts both vanish to `eps`.
    pub fn is_complex(self, eps: f64) -> bool {
        self.y.abs() < eps && self.z.abs() < eps
    }

    pub fn approx_eq(self, other: Quat, eps: f64) -> bool {
        (self - other).abs() < eps
    }

    /// Cayley-Dickson split `q = z + w j` with `z = w_q + x_q i` and
    /// `w = y_q + z_q i`; the `j` factor sits on the right.
    pub fn split(self) -> ComplexPair {
        ComplexPair {
            z: Quat::from_complex(self.w, self.x),
            w: Quat::from_complex(self.y, self.z),
        }
    }

    /// First complex component `Co_1(q)` of the split.
    pub fn co1(self) -> Quat {
        Quat::from_complex(self.w, self.x)
    }

    /// Second complex component `Co_2(q) = conj(w)` where `q = z + w j`.
    pub fn co2(self) -> Quat {
        Quat::from_complex(self.y, -self.z)
    }

    /// Matrix of left multiplication `p -> q p` on the coordinates `(1, i, j, k)`.
    pub fn left_mult_matrix(self) -> [[f64; 4]; 4] {
        let Quat { w, x, y, z } = self;
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    }

    /// Matrix of right multiplication `p -> p q` on the coordinates `(1, i, j, k)`.
    pub fn right_mult_matrix(self) -> [[f64; 4]; 4] {
        let Quat { w, x, y, z } = self;
        [
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ]
    }
}

impl ComplexPair {
    /// Reassemble `q = z + w j`.
    pub fn join(self) -> Quat {
        self.z + self.w * Quat::J
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, rhs: Quat) -> Quat {
        Quat::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, rhs: Quat) -> Quat {
        Quat::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, q: Quat) -> Quat {
        let Quat { w: a, x: b, y: c, z: d } = self;
        let Quat { w: e, x: f, y: g, z: h } = q;
        Quat::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}

impl Mul<f64> for Quat {
    type Output = Quat;
    fn mul(self, s: f64) -> Quat {
        Quat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quat> for f64 {
    type Output = Quat;
    fn mul(self, q: Quat) -> Quat {
        q * self
    }
}

impl Div<f64> for Quat {
    type Output = Quat;
    fn div(self, s: f64) -> Quat {
        Quat::new(self.w / s, self.x / s, self.y / s, self.z / s)
    }
}

impl AddAssign for Quat {
    fn add_assign(&mut self, rhs: Quat) {
        *self = *self + rhs;
    }
}

impl SubAssign for Quat {
    fn sub_assign(&mut self, rhs: Quat) {
        *self = *self - rhs;
    }
}

impl MulAssign for Quat {
    fn mul_assign(&mut self, rhs: Quat) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, unit) in [(self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")] {
            if c == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} {}{}", if c < 0.0 { "-" } else { "+" }, c.abs(), unit)?;
            } else {
                write!(f, "{}{}", c, unit)?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

//! Weights in the extended lattice spanned by `ω₀`, `δ`, and the simple
//! roots `α_1, …, α_{M+N−1}`, with the exact symmetric pairing
//!
//! * `(α_i, α_j) = a_ij`,
//! * `(ω₀, α_i) = (δ, α_i) = 0`,
//! * `(ω₀, ω₀) = (δ, δ) = 0`, and `(ω₀, δ) = 1`.
//!
//! The affine root is the fixed combination `α₀ = δ − Σ_i α_i`.  Coefficients
//! are exact rationals, so `ε`-coordinate conversions (which may introduce
//! fractions in intermediate steps elsewhere) stay lossless.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{RootDatum, RootError};

/// An element of `ℚ ω₀ ⊕ ℚ δ ⊕ ⊕_i ℚ α_i` for a fixed root datum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    omega0: BigRational,
    delta: BigRational,
    alpha: Vec<BigRational>,
}

impl Weight {
    /// The zero weight for a datum of the given rank.
    pub fn zero(rd: &RootDatum) -> Self {
        Weight {
            omega0: BigRational::zero(),
            delta: BigRational::zero(),
            alpha: vec![BigRational::zero(); rd.rank()],
        }
    }

    /// Build from explicit coordinates; the `alpha` length must match the rank.
    pub fn new(
        rd: &RootDatum,
        omega0: BigRational,
        delta: BigRational,
        alpha: Vec<BigRational>,
    ) -> Result<Self, RootError> {
        if alpha.len() != rd.rank() {
            return Err(RootError::WeightRankMismatch {
                got: alpha.len(),
                expected: rd.rank(),
            });
        }
        Ok(Weight {
            omega0,
            delta,
            alpha,
        })
    }

    /// The basis weight `ω₀`.
    pub fn omega0(rd: &RootDatum) -> Self {
        let mut w = Self::zero(rd);
        w.omega0 = BigRational::one();
        w
    }

    /// The basis weight `δ`.
    pub fn delta(rd: &RootDatum) -> Self {
        let mut w = Self::zero(rd);
        w.delta = BigRational::one();
        w
    }

    /// The simple root `α_i` (node index `1 ≤ i ≤ M+N−1`).
    pub fn alpha(rd: &RootDatum, i: usize) -> Result<Self, RootError> {
        rd.check_node(i)?;
        let mut w = Self::zero(rd);
        w.alpha[i - 1] = BigRational::one();
        Ok(w)
    }

    /// The affine root `α₀ = δ − Σ_i α_i`.
    pub fn alpha0(rd: &RootDatum) -> Self {
        let mut w = Self::delta(rd);
        for c in &mut w.alpha {
            *c = -BigRational::one();
        }
        w
    }

    /// Convert `ε`-coordinates `Σ_k c_k ε_k` (index `k = 1 ..= M+N`) into the
    /// root span.  This is solvable exactly when `Σ_k c_k = 0`, in which case
    /// the `α_i`-coordinate is the partial sum `x_i = c_1 + ⋯ + c_i`.
    pub fn try_from_eps(rd: &RootDatum, coeffs: &[BigRational]) -> Result<Self, RootError> {
        if coeffs.len() != rd.dim_natural() {
            return Err(RootError::EpsilonOutOfRange {
                k: coeffs.len(),
                top: rd.dim_natural(),
            });
        }
        let total: BigRational = coeffs.iter().sum();
        if !total.is_zero() {
            return Err(RootError::EpsilonNotInRootSpan);
        }
        let mut w = Self::zero(rd);
        let mut partial = BigRational::zero();
        for i in 1..=rd.rank() {
            partial += &coeffs[i - 1];
            w.alpha[i - 1] = partial.clone();
        }
        Ok(w)
    }

    /// The root `β_{ij} = ε_i − ε_j` for `ε`-indices `i < j`, as
    /// `α_i + α_{i+1} + ⋯ + α_{j−1}`.
    pub fn beta(rd: &RootDatum, i: usize, j: usize) -> Result<Self, RootError> {
        rd.check_epsilon(i)?;
        rd.check_epsilon(j)?;
        if i >= j {
            return Err(RootError::BadSegment {
                i,
                j,
                top: rd.dim_natural(),
            });
        }
        let mut w = Self::zero(rd);
        for a in i..j {
            w.alpha[a - 1] = BigRational::one();
        }
        Ok(w)
    }

    pub fn omega0_coord(&self) -> &BigRational {
        &self.omega0
    }

    pub fn delta_coord(&self) -> &BigRational {
        &self.delta
    }

    pub fn alpha_coord(&self, i: usize) -> &BigRational {
        &self.alpha[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.omega0.is_zero() && self.delta.is_zero() && self.alpha.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            omega0: &self.omega0 + &other.omega0,
            delta: &self.delta + &other.delta,
            alpha: self
                .alpha
                .iter()
                .zip(&other.alpha)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            omega0: &self.omega0 - &other.omega0,
            delta: &self.delta - &other.delta,
            alpha: self
                .alpha
                .iter()
                .zip(&other.alpha)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            omega0: -self.omega0.clone(),
            delta: -self.delta.clone(),
            alpha: self.alpha.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Weight {
        Weight {
            omega0: &self.omega0 * c,
            delta: &self.delta * c,
            alpha: self.alpha.iter().map(|a| a * c).collect(),
        }
    }

    /// The symmetric bilinear pairing described in the module docs.
    pub fn pairing(&self, rd: &RootDatum, other: &Weight) -> BigRational {
        // (ω₀, δ) contributions, both orders; ω₀ and δ are isotropic and
        // orthogonal to every α_i.
        let mut acc = &self.omega0 * &other.delta + &self.delta * &other.omega0;
        for i in 1..=rd.rank() {
            if self.alpha[i - 1].is_zero() {
                continue;
            }
            for j in 1..=rd.rank() {
                let a = rd.cartan_pairing(i, j);
                if a == 0 || other.alpha[j - 1].is_zero() {
                    continue;
                }
                acc += &self.alpha[i - 1]
                    * &other.alpha[j - 1]
                    * BigRational::from_integer(a.into());
            }
        }
        acc
    }

    /// Membership in `Q⁺`: no `ω₀` or `δ` component and every `α`-coordinate
    /// a nonnegative integer.
    pub fn is_in_q_plus(&self) -> bool {
        self.omega0.is_zero()
            && self.delta.is_zero()
            && self
                .alpha
                .iter()
                .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.omega0.is_zero() {
            parts.push(format!("{}*w0", self.omega0));
        }
        if !self.delta.is_zero() {
            parts.push(format!("{}*d", self.delta));
        }
        for (idx, c) in self.alpha.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*a{}", c, idx + 1));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn isotropy_and_normalization() {
        let rd = RootDatum::new(1, 2).unwrap();
        let w0 = Weight::omega0(&rd);
        let d = Weight::delta(&rd);
        assert_eq!(d.pairing(&rd, &d), rat(0));
        assert_eq!(w0.pairing(&rd, &w0), rat(0));
        assert_eq!(w0.pairing(&rd, &d), rat(1));
        assert_eq!(d.pairing(&rd, &w0), rat(1));
        let a_m = Weight::alpha(&rd, rd.odd_node()).unwrap();
        assert_eq!(a_m.pairing(&rd, &a_m), rat(0));
        assert_eq!(w0.pairing(&rd, &a_m), rat(0));
        assert_eq!(d.pairing(&rd, &a_m), rat(0));
    }

    #[test]
    fn affine_root_completes_delta() {
        for (m, n) in [(1usize, 2usize), (2, 1), (2, 2), (3, 2)] {
            let rd = RootDatum::new(m, n).unwrap();
            let mut acc = Weight::alpha0(&rd);
            for i in rd.nodes() {
                acc = acc.add(&Weight::alpha(&rd, i).unwrap());
            }
            assert_eq!(acc, Weight::delta(&rd), "Σα_i + α₀ = δ for ({m}|{n})");
        }
    }

    #[test]
    fn pairing_matches_cartan_on_simple_roots() {
        let rd = RootDatum::new(2, 2).unwrap();
        for i in rd.nodes() {
            for j in rd.nodes() {
                let ai = Weight::alpha(&rd, i).unwrap();
                let aj = Weight::alpha(&rd, j).unwrap();
                assert_eq!(ai.pairing(&rd, &aj), rat(rd.cartan_pairing(i, j)));
            }
        }
    }

    #[test]
    fn eps_conversion_round_trips_simple_roots() {
        let rd = RootDatum::new(2, 2).unwrap();
        for i in rd.nodes() {
            let mut coeffs = vec![rat(0); rd.dim_natural()];
            coeffs[i - 1] = rat(1);
            coeffs[i] = rat(-1);
            let w = Weight::try_from_eps(&rd, &coeffs).unwrap();
            assert_eq!(w, Weight::alpha(&rd, i).unwrap());
        }
        // ε_1 − ε_4 = α_1 + α_2 + α_3 on (2|2).
        let coeffs = vec![rat(1), rat(0), rat(0), rat(-1)];
        let w = Weight::try_from_eps(&rd, &coeffs).unwrap();
        assert_eq!(w, Weight::beta(&rd, 1, 4).unwrap());
        // Nonzero coordinate sum is rejected.
        let bad = vec![rat(1), rat(0), rat(0), rat(0)];
        assert!(matches!(
            Weight::try_from_eps(&rd, &bad),
            Err(RootError::EpsilonNotInRootSpan)
        ));
    }

    #[test]
    fn beta_pairings_recover_epsilon_form() {
        // (β_{ij}, β_{kl}) = (ε_i − ε_j, ε_k − ε_l) computed two ways.
        let rd = RootDatum::new(2, 3).unwrap();
        let dim = rd.dim_natural();
        for i in 1..=dim {
            for j in (i + 1)..=dim {
                for k in 1..=dim {
                    for l in (k + 1)..=dim {
                        let b1 = Weight::beta(&rd, i, j).unwrap();
                        let b2 = Weight::beta(&rd, k, l).unwrap();
                        let direct = rd.eps_pairing(i, k) - rd.eps_pairing(i, l)
                            - rd.eps_pairing(j, k)
                            + rd.eps_pairing(j, l);
                        assert_eq!(b1.pairing(&rd, &b2), rat(direct));
                    }
                }
            }
        }
    }

    #[test]
    fn q_plus_predicate() {
        let rd = RootDatum::new(2, 2).unwrap();
        assert!(Weight::zero(&rd).is_in_q_plus());
        assert!(Weight::alpha(&rd, 1).unwrap().is_in_q_plus());
        assert!(Weight::beta(&rd, 1, 4).unwrap().is_in_q_plus());
        assert!(!Weight::alpha(&rd, 1).unwrap().neg().is_in_q_plus());
        assert!(!Weight::delta(&rd).is_in_q_plus());
        let half = Weight::alpha(&rd, 1)
            .unwrap()
            .scale(&BigRational::new(1.into(), 2.into()));
        assert!(!half.is_in_q_plus());
    }

    #[test]
    fn display_is_readable() {
        let rd = RootDatum::new(2, 2).unwrap();
        assert_eq!(Weight::zero(&rd).to_string(), "0");
        assert_eq!(Weight::alpha0(&rd).to_string(), "1*d + -1*a1 + -1*a2 + -1*a3");
    }
}

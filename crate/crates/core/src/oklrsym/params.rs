//! Vertices of the linearly oriented quiver with the involution k -> -k,
//! vertex weights, and the coefficient polynomials P, P', Q, Q'.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::poly::MultiPoly;
use super::OklrError;

/// A quiver vertex.  Odd integers are the letters of the shuffle layer;
/// even integers are allowed here so that the fixed vertex 0 can be used.
pub type Vertex = i32;

pub fn theta(i: Vertex) -> Vertex {
    -i
}

/// Number of arrows i -> j in the orientation k -> k+2.
pub fn arrows(i: Vertex, j: Vertex) -> u32 {
    u32::from(j == i + 2)
}

/// Weight on vertices, "k:m" comma list.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexWeight(BTreeMap<Vertex, u32>);

impl VertexWeight {
    pub fn zero() -> Self {
        VertexWeight::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Vertex, u32)>>(pairs: I) -> Self {
        let mut w = VertexWeight::zero();
        for (i, m) in pairs {
            w.add(i, m);
        }
        w
    }

    pub fn add(&mut self, i: Vertex, m: u32) {
        if m > 0 {
            *self.0.entry(i).or_insert(0) += m;
        }
    }

    pub fn get(&self, i: Vertex) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, u32)> + '_ {
        self.0.iter().map(|(&i, &m)| (i, m))
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.0.keys().copied().collect()
    }

    pub fn height(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn theta(&self) -> Self {
        VertexWeight(self.0.iter().map(|(&i, &m)| (theta(i), m)).collect())
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.theta()
    }

    /// lambda(i) + lambda(theta(i))
    pub fn symmetrized(&self, i: Vertex) -> u32 {
        self.get(i) + self.get(theta(i))
    }

    pub fn of_word(nu: &[Vertex]) -> Self {
        VertexWeight::from_pairs(nu.iter().map(|&i| (i, 1)))
    }

    /// Sum of alpha_{nu_k} + alpha_{theta(nu_k)}.
    pub fn isotropic_of_word(nu: &[Vertex]) -> Self {
        VertexWeight::from_pairs(nu.iter().flat_map(|&i| [(i, 1), (theta(i), 1)]))
    }
}

impl fmt::Display for VertexWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().rev().map(|(i, m)| format!("{i}:{m}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for VertexWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for VertexWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_int(s: &str, start: usize) -> Option<(i64, usize)> {
    let b = s.as_bytes();
    let mut i = start;
    if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
        i += 1;
    }
    let ds = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    if i == ds {
        return None;
    }
    s[start..i].parse().ok().map(|v| (v, i))
}

impl FromStr for VertexWeight {
    type Err = OklrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |pos: usize, msg: &str| OklrError::Parse {
            input: s.to_string(),
            pos,
            msg: msg.to_string(),
        };
        let mut v = VertexWeight::zero();
        let t = s.trim_end();
        if t.trim().is_empty() || t.trim() == "0" {
            return Ok(v);
        }
        let b = t.as_bytes();
        let mut i = 0;
        loop {
            while i < b.len() && b[i] == b' ' {
                i += 1;
            }
            let (k, e) = parse_int(t, i).ok_or_else(|| err(i, "expected vertex"))?;
            let k = i32::try_from(k).map_err(|_| err(i, "vertex out of range"))?;
            i = e;
            if i >= b.len() || b[i] != b':' {
                return Err(err(i, "expected ':'"));
            }
            i += 1;
            let (m, e) = parse_int(t, i).ok_or_else(|| err(i, "expected multiplicity"))?;
            let m = u32::try_from(m).map_err(|_| err(i, "multiplicity must be nonnegative"))?;
            v.add(k, m);
            i = e;
            if i == b.len() {
                return Ok(v);
            }
            if b[i] != b',' {
                return Err(err(i, "expected ','"));
            }
            i += 1;
        }
    }
}

/// Outcome of the perfection predicates on a finite theta-stable vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Perfection {
    pub m1_regular: bool,
    pub m2_theta_symmetric: bool,
    pub m3_nonvanishing: bool,
    pub m4_hermitian: bool,
    pub v1_regular: bool,
    pub v2_nonvanishing: bool,
    pub v3_self_conjugate: bool,
}

impl Perfection {
    pub fn matrix_perfect(&self) -> bool {
        self.m1_regular && self.m2_theta_symmetric && self.m3_nonvanishing && self.m4_hermitian
    }

    pub fn vector_perfect(&self) -> bool {
        self.v1_regular && self.v2_nonvanishing && self.v3_self_conjugate
    }
}

/// Coefficient data of the quiver with framing lambda.  Q' entries can be
/// overridden by hand-built fixtures; the polynomial representation is then
/// unavailable since no P' produces them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrices {
    lambda: VertexWeight,
    q_vec_override: BTreeMap<Vertex, MultiPoly>,
}

fn u2() -> MultiPoly {
    MultiPoly::var(2, 0)
}

fn v2() -> MultiPoly {
    MultiPoly::var(2, 1)
}

impl ParamMatrices {
    pub fn quiver(lambda: &VertexWeight) -> Result<Self, OklrError> {
        if lambda.iter().any(|(i, m)| m > 0 && theta(i) == i) {
            return Err(OklrError::FramingOnFixedVertex);
        }
        Ok(ParamMatrices { lambda: lambda.clone(), q_vec_override: BTreeMap::new() })
    }

    /// Replace Q_i by an arbitrary univariate polynomial.
    pub fn with_q_vec(mut self, i: Vertex, q: MultiPoly) -> Self {
        assert_eq!(q.nvars(), 1);
        self.q_vec_override.insert(i, q);
        self
    }

    pub fn lambda(&self) -> &VertexWeight {
        &self.lambda
    }

    pub fn has_polynomial_rep(&self) -> bool {
        self.q_vec_override.is_empty()
    }

    /// (theta lambda)(i)
    pub fn theta_lambda(&self, i: Vertex) -> u32 {
        self.lambda.symmetrized(i)
    }

    /// P_ij(u, v) = delta_{i != j} (v - u)^{a_ij}
    pub fn p_ij(&self, i: Vertex, j: Vertex) -> MultiPoly {
        if i == j {
            return MultiPoly::zero(2);
        }
        v2().sub(&u2()).pow(arrows(i, j))
    }

    /// P_i(u) = delta_{i != theta(i)} (-u)^{lambda(i)}
    pub fn p_i(&self, i: Vertex) -> MultiPoly {
        if i == theta(i) {
            return MultiPoly::zero(1);
        }
        MultiPoly::signed_var(1, 0, -1).pow(self.lambda.get(i))
    }

    /// Q_ij(u, v) = P_ij(u, v) P_ji(v, u)
    pub fn q_ij(&self, i: Vertex, j: Vertex) -> MultiPoly {
        let swapped = self.p_ij(j, i).subst(&[v2(), u2()], 2);
        self.p_ij(i, j).mul(&swapped)
    }

    /// Q_i(u) = P_i(u) P_{theta(i)}(-u), unless overridden.
    pub fn q_i(&self, i: Vertex) -> MultiPoly {
        if let Some(q) = self.q_vec_override.get(&i) {
            return q.clone();
        }
        let neg = self.p_i(theta(i)).subst(&[MultiPoly::signed_var(1, 0, -1)], 1);
        self.p_i(i).mul(&neg)
    }

    /// The involution axiom a_ij = a_{theta(j) theta(i)} on the given vertices.
    pub fn involution_ok(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .all(|&i| vertices.iter().all(|&j| arrows(i, j) == arrows(theta(j), theta(i))))
    }

    pub fn perfection(&self, vertices: &[Vertex]) -> Perfection {
        let pairs = || vertices.iter().flat_map(|&i| vertices.iter().map(move |&j| (i, j)));
        let neg_v_neg_u = [v2().neg(), u2().neg()];
        let v_u = [v2(), u2()];
        let minus_u = [MultiPoly::signed_var(1, 0, -1)];
        Perfection {
            m1_regular: vertices.iter().all(|&i| self.q_ij(i, i).is_zero()),
            m2_theta_symmetric: pairs()
                .all(|(i, j)| self.q_ij(i, j) == self.q_ij(theta(j), theta(i)).subst(&neg_v_neg_u, 2)),
            m3_nonvanishing: pairs().all(|(i, j)| i == j || !self.q_ij(i, j).is_zero()),
            m4_hermitian: pairs().all(|(i, j)| self.q_ij(i, j) == self.q_ij(j, i).subst(&v_u, 2)),
            v1_regular: vertices.iter().all(|&i| i != theta(i) || self.q_i(i).is_zero()),
            v2_nonvanishing: vertices.iter().all(|&i| i == theta(i) || !self.q_i(i).is_zero()),
            v3_self_conjugate: vertices.iter().all(|&i| self.q_i(i) == self.q_i(theta(i)).subst(&minus_u, 1)),
        }
    }
}

/// Integer polynomial in one variable from ascending coefficients.
pub fn univariate(coeffs: &[i64]) -> MultiPoly {
    let mut out = MultiPoly::zero(1);
    for (d, &c) in coeffs.iter().enumerate() {
        out.add_assign(&MultiPoly::monomial(1, vec![d as u32], BigRational::from_integer(BigInt::from(c))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_weight() {
        let w: VertexWeight = "1:2,-1:2,0:2".parse().unwrap();
        assert_eq!(w.get(0), 2);
        assert!(w.is_self_dual());
        assert_eq!(w.to_string(), "1:2,0:2,-1:2");
        match "1:2,x".parse::<VertexWeight>() {
            Err(OklrError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quiver_parameters_are_perfect() {
        let vs = [-4, -3, -2, -1, 0, 1, 2, 3, 4];
        for lam in ["0", "1:1", "1:1,3:2", "-1:2,3:1"] {
            let p = ParamMatrices::quiver(&lam.parse().unwrap()).unwrap();
            assert!(p.involution_ok(&vs));
            let perf = p.perfection(&vs);
            assert!(perf.matrix_perfect() && perf.vector_perfect(), "{lam}: {perf:?}");
        }
        assert!(ParamMatrices::quiver(&"0:1".parse().unwrap()).is_err());
    }

    #[test]
    fn q_vector_values() {
        let p = ParamMatrices::quiver(&"1:1".parse().unwrap()).unwrap();
        assert_eq!(p.q_i(1), univariate(&[0, -1]));
        assert_eq!(p.q_i(-1), univariate(&[0, 1]));
        assert_eq!(p.q_i(3), univariate(&[1]));
        assert_eq!(p.theta_lambda(-1), 1);
        let degenerate = p.clone().with_q_vec(1, univariate(&[0, 1])).with_q_vec(-1, univariate(&[1]));
        assert!(!degenerate.perfection(&[-1, 1]).v3_self_conjugate);
        // Q_13(u, v) = v - u, Q_31(u, v) = u - v
        assert_eq!(p.q_ij(1, 3), v2().sub(&u2()));
        assert_eq!(p.q_ij(3, 1), u2().sub(&v2()));
        assert_eq!(p.q_ij(1, 5), MultiPoly::one(2));
    }
}

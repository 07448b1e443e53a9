//! Exact integer model of the dihedral group `D_n` and its action on the
//! configuration space `Z_n`.
//!
//! `D_n` (order 2n, n >= 2) consists of n rotations `R_k` and n mirrors `M_k`
//! with multiplication rules
//!
//! ```text
//! R_i * R_j = R_{i+j}    R_i * M_j = M_{i+j}
//! M_i * R_j = M_{i-j}    M_i * M_j = R_{i-j}      (indices mod n)
//! ```
//!
//! All arithmetic here is modular integer arithmetic; no floating point enters
//! the algebraic layer. The canonical element ordering (rotations first, then
//! mirrors, ascending index) fixes the row/column conventions used by every
//! matrix downstream, with row/column `i` attached to the coset representative
//! `t_i = R_i` of `D_n / {R_0, M_0}`.

use std::fmt;

use crate::{Error, Result};

/// Whether an element is a rotation `R_k` or a mirror `M_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Rotation,
    Mirror,
}

/// One element of `D_n`, stored as the pair (kind, index) over a fixed order n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    kind: ElementKind,
    index: usize,
    order: usize,
}

impl DihedralElement {
    /// The rotation `R_index` in `D_order`.
    pub fn rotation(order: usize, index: usize) -> Result<Self> {
        Self::new(ElementKind::Rotation, order, index)
    }

    /// The mirror `M_index` in `D_order`.
    pub fn mirror(order: usize, index: usize) -> Result<Self> {
        Self::new(ElementKind::Mirror, order, index)
    }

    /// The group identity `R_0`.
    pub fn identity(order: usize) -> Result<Self> {
        Self::rotation(order, 0)
    }

    fn new(kind: ElementKind, order: usize, index: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        if index >= order {
            return Err(Error::IndexOutOfRange { index, order });
        }
        Ok(Self { kind, index, order })
    }

    /// Parses a textual spec such as `"R3"` or `"M0"` relative to `order`.
    pub fn parse(spec: &str, order: usize) -> Result<Self> {
        let mut chars = spec.chars();
        let kind = match chars.next() {
            Some('R') | Some('r') => ElementKind::Rotation,
            Some('M') | Some('m') => ElementKind::Mirror,
            _ => return Err(Error::ParseElement(spec.to_string())),
        };
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseElement(spec.to_string()))?;
        Self::new(kind, order, index).map_err(|_| Error::ParseElement(spec.to_string()))
    }

    pub fn kind(&self) -> ElementKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_rotation(&self) -> bool {
        self.kind == ElementKind::Rotation
    }

    pub fn is_mirror(&self) -> bool {
        self.kind == ElementKind::Mirror
    }

    pub fn is_identity(&self) -> bool {
        self.kind == ElementKind::Rotation && self.index == 0
    }

    /// Group multiplication `self * rhs`.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch(self.order, rhs.order));
        }
        let n = self.order;
        let (kind, index) = match (self.kind, rhs.kind) {
            (ElementKind::Rotation, ElementKind::Rotation) => {
                (ElementKind::Rotation, (self.index + rhs.index) % n)
            }
            (ElementKind::Rotation, ElementKind::Mirror) => {
                (ElementKind::Mirror, (self.index + rhs.index) % n)
            }
            (ElementKind::Mirror, ElementKind::Rotation) => {
                (ElementKind::Mirror, (self.index + n - rhs.index) % n)
            }
            (ElementKind::Mirror, ElementKind::Mirror) => {
                (ElementKind::Rotation, (self.index + n - rhs.index) % n)
            }
        };
        Ok(Self {
            kind,
            index,
            order: n,
        })
    }

    /// Group inverse: `R_k^-1 = R_{n-k}`, `M_k^-1 = M_k`.
    pub fn inverse(&self) -> Self {
        match self.kind {
            ElementKind::Rotation => Self {
                kind: ElementKind::Rotation,
                index: (self.order - self.index) % self.order,
                order: self.order,
            },
            ElementKind::Mirror => *self,
        }
    }

    /// The transitive action on the configuration space:
    /// `R_k . r_i = r_{i+k}`, `M_k . r_i = r_{k-i}` (mod n).
    pub fn act(&self, point: ConfigPoint) -> Result<ConfigPoint> {
        if self.order != point.order {
            return Err(Error::OrderMismatch(self.order, point.order));
        }
        let n = self.order;
        let site = match self.kind {
            ElementKind::Rotation => (point.site + self.index) % n,
            ElementKind::Mirror => (self.index + n - point.site) % n,
        };
        Ok(ConfigPoint { site, order: n })
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ElementKind::Rotation => write!(f, "R{}", self.index),
            ElementKind::Mirror => write!(f, "M{}", self.index),
        }
    }
}

/// A point `r_site` of the configuration space `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConfigPoint {
    site: usize,
    order: usize,
}

impl ConfigPoint {
    pub fn new(order: usize, site: usize) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        if site >= order {
            return Err(Error::IndexOutOfRange {
                index: site,
                order,
            });
        }
        Ok(Self { site, order })
    }

    pub fn site(&self) -> usize {
        self.site
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// All 2n elements of `D_n` in canonical order: `R_0..R_{n-1}, M_0..M_{n-1}`.
///
/// Every matrix row/column convention downstream is derived from this order.
pub fn enumerate_group(order: usize) -> Result<Vec<DihedralElement>> {
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    let mut elements = Vec::with_capacity(2 * order);
    for index in 0..order {
        elements.push(DihedralElement::rotation(order, index)?);
    }
    for index in 0..order {
        elements.push(DihedralElement::mirror(order, index)?);
    }
    Ok(elements)
}

/// The stability subgroup of `r_0`: `H = {R_0, M_0}`, isomorphic to `Z_2`.
pub fn stabilizer(order: usize) -> Result<[DihedralElement; 2]> {
    Ok([
        DihedralElement::rotation(order, 0)?,
        DihedralElement::mirror(order, 0)?,
    ])
}

/// The left-coset decomposition `D_n = union of t_m * {R_0, M_0}` with the
/// representatives `t_m = R_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    representatives: Vec<DihedralElement>,
}

impl CosetDecomposition {
    pub fn representatives(&self) -> &[DihedralElement] {
        &self.representatives
    }

    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    /// Index m of the coset `t_m * H` containing `g`, found by testing
    /// `t_m^-1 * g` for membership in the stabilizer. This is the coset
    /// oracle: for `D_n` it always returns `g.index()`, but the lookup is
    /// performed honestly.
    pub fn coset_index(&self, g: &DihedralElement) -> Result<usize> {
        let n = self.order();
        if g.order() != n {
            return Err(Error::OrderMismatch(n, g.order()));
        }
        let stab = stabilizer(n)?;
        for (m, t) in self.representatives.iter().enumerate() {
            let h = t.inverse().multiply(g)?;
            if stab.contains(&h) {
                return Ok(m);
            }
        }
        unreachable!("cosets partition the group");
    }
}

/// Builds and validates the coset decomposition of `D_n` by `{R_0, M_0}`.
pub fn coset_decomposition(order: usize) -> Result<CosetDecomposition> {
    let representatives: Vec<_> = (0..order)
        .map(|m| DihedralElement::rotation(order, m))
        .collect::<Result<_>>()?;
    let decomposition = CosetDecomposition { representatives };

    // Partition check: every group element must land in exactly one coset.
    let stab = stabilizer(order)?;
    for g in enumerate_group(order)? {
        let hits = decomposition
            .representatives
            .iter()
            .filter(|t| {
                let h = t.inverse().multiply(&g).expect("same order");
                stab.contains(&h)
            })
            .count();
        if hits != 1 {
            return Err(Error::InvalidSpectralData(format!(
                "coset representatives do not partition D_{order}: element {g} hit {hits} cosets"
            )));
        }
    }
    Ok(decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(n: usize, k: usize) -> DihedralElement {
        DihedralElement::rotation(n, k).unwrap()
    }

    fn mir(n: usize, k: usize) -> DihedralElement {
        DihedralElement::mirror(n, k).unwrap()
    }

    #[test]
    fn multiplication_rules() {
        // R_2 * R_2 = R_1 in D_3
        assert_eq!(rot(3, 2).multiply(&rot(3, 2)).unwrap(), rot(3, 1));
        // mirrors are involutions
        for n in 2..=8 {
            for k in 0..n {
                assert_eq!(mir(n, k).multiply(&mir(n, k)).unwrap(), rot(n, 0));
            }
        }
        // M_2 * R_1 = M_1 in D_5
        assert_eq!(mir(5, 2).multiply(&rot(5, 1)).unwrap(), mir(5, 1));
        // R_i * M_j = M_{i+j}
        assert_eq!(rot(4, 3).multiply(&mir(4, 2)).unwrap(), mir(4, 1));
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert_eq!(
            rot(3, 1).multiply(&rot(4, 1)),
            Err(Error::OrderMismatch(3, 4))
        );
        let p = ConfigPoint::new(4, 0).unwrap();
        assert_eq!(rot(3, 1).act(p), Err(Error::OrderMismatch(3, 4)));
    }

    #[test]
    fn inverses() {
        assert_eq!(rot(4, 1).inverse(), rot(4, 3));
        assert_eq!(mir(4, 3).inverse(), mir(4, 3));
        assert_eq!(rot(2, 0).inverse(), rot(2, 0));
        for n in 2..=8 {
            for g in enumerate_group(n).unwrap() {
                assert_eq!(g.multiply(&g.inverse()).unwrap(), rot(n, 0));
                assert_eq!(g.inverse().multiply(&g).unwrap(), rot(n, 0));
            }
        }
    }

    #[test]
    fn action_on_configuration_space() {
        let r4 = ConfigPoint::new(5, 4).unwrap();
        assert_eq!(rot(5, 2).act(r4).unwrap().site(), 1);

        // act(M_0, r_2) = r_3 in Z_5, cross-checked against the coset oracle:
        // M_0 * R_2 = M_3 lies in the coset with representative R_3.
        let r2 = ConfigPoint::new(5, 2).unwrap();
        assert_eq!(mir(5, 0).act(r2).unwrap().site(), 3);
        let cosets = coset_decomposition(5).unwrap();
        let moved = mir(5, 0).multiply(&rot(5, 2)).unwrap();
        assert_eq!(cosets.coset_index(&moved).unwrap(), 3);
    }

    #[test]
    fn action_axioms_exhaustive() {
        for n in 2..=6 {
            let group = enumerate_group(n).unwrap();
            for g in &group {
                for h in &group {
                    let gh = g.multiply(h).unwrap();
                    for site in 0..n {
                        let p = ConfigPoint::new(n, site).unwrap();
                        // (g h).p = g.(h.p)
                        assert_eq!(gh.act(p).unwrap(), g.act(h.act(p).unwrap()).unwrap());
                    }
                }
                for site in 0..n {
                    let p = ConfigPoint::new(n, site).unwrap();
                    assert_eq!(g.act(g.inverse().act(p).unwrap()).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn enumeration() {
        assert_eq!(
            enumerate_group(2).unwrap(),
            vec![rot(2, 0), rot(2, 1), mir(2, 0), mir(2, 1)]
        );
        assert_eq!(enumerate_group(3).unwrap().len(), 6);
        assert_eq!(enumerate_group(1), Err(Error::InvalidOrder(1)));
        assert_eq!(enumerate_group(0), Err(Error::InvalidOrder(0)));
    }

    #[test]
    fn group_axioms_small_orders() {
        for n in 2..=4 {
            let group = enumerate_group(n).unwrap();
            assert_eq!(group.len(), 2 * n);
            let e = rot(n, 0);
            for a in &group {
                assert_eq!(a.multiply(&e).unwrap(), *a);
                assert_eq!(e.multiply(a).unwrap(), *a);
                for b in &group {
                    for c in &group {
                        let ab_c = a.multiply(b).unwrap().multiply(c).unwrap();
                        let a_bc = a.multiply(&b.multiply(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                    }
                }
            }
        }
    }

    #[test]
    fn rotations_form_cyclic_subgroup() {
        for n in 2..=10 {
            // R_1 has order exactly n
            let mut power = rot(n, 1);
            for _ in 1..n {
                assert!(!power.is_identity());
                power = power.multiply(&rot(n, 1)).unwrap();
            }
            assert!(power.is_identity());
        }
    }

    #[test]
    fn action_is_transitive_with_z2_stabilizer() {
        for n in 2..=8 {
            let group = enumerate_group(n).unwrap();
            for from in 0..n {
                for to in 0..n {
                    let p = ConfigPoint::new(n, from).unwrap();
                    assert!(group
                        .iter()
                        .any(|g| g.act(p).unwrap().site() == to));
                }
            }
            let origin = ConfigPoint::new(n, 0).unwrap();
            let stab: Vec<_> = group
                .iter()
                .filter(|g| g.act(origin).unwrap() == origin)
                .cloned()
                .collect();
            assert_eq!(stab, vec![rot(n, 0), mir(n, 0)]);
        }
    }

    #[test]
    fn coset_decomposition_properties() {
        let cosets = coset_decomposition(3).unwrap();
        assert_eq!(cosets.representatives(), &[rot(3, 0), rot(3, 1), rot(3, 2)]);
        for n in 2..=8 {
            let cosets = coset_decomposition(n).unwrap();
            assert_eq!(cosets.representatives()[0], rot(n, 0));
            // {R_k, M_k} share the coset index k
            for k in 0..n {
                assert_eq!(cosets.coset_index(&rot(n, k)).unwrap(), k);
                assert_eq!(cosets.coset_index(&mir(n, k)).unwrap(), k);
            }
        }
    }

    #[test]
    fn element_parsing() {
        assert_eq!(DihedralElement::parse("R3", 5).unwrap(), rot(5, 3));
        assert_eq!(DihedralElement::parse("m0", 2).unwrap(), mir(2, 0));
        assert!(matches!(
            DihedralElement::parse("X9", 4),
            Err(Error::ParseElement(_))
        ));
        assert!(matches!(
            DihedralElement::parse("R9", 4),
            Err(Error::ParseElement(_))
        ));
        assert!(matches!(
            DihedralElement::parse("R", 4),
            Err(Error::ParseElement(_))
        ));
        assert_eq!(format!("{}", mir(7, 4)), "M4");
    }
}

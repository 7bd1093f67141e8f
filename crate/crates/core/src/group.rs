//! The five group families, built from their presentations (normal-form
//! rewriting) or, for PSL(2,2^k), as determinant-1 matrices over GF(2^k).
//! Centers and centralizers are computed exhaustively; no Cayley table is
//! materialized, products are evaluated on demand.

use std::collections::HashMap;
use std::fmt;

use crate::field::FieldGf2k;
use crate::{Error, Result};

/// A family instance with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Generalized quaternion group Q_{4n} (n >= 2).
    Q4n { n: u32 },
    /// Dihedral group D_{2m} (m >= 3).
    D2m { m: u32 },
    /// Quasidihedral group QD_{2^n} (n >= 4).
    Qd2n { n: u32 },
    /// Metacyclic group M_{2mn} (m > 2, n >= 1).
    M2mn { m: u32, n: u32 },
    /// Projective special linear group PSL(2,2^k); equal to SL(2,2^k) in
    /// characteristic 2. Constructible for k >= 1; the closed-form spectra apply for k >= 2.
    Psl2 { k: u32 },
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GroupSpec::Q4n { n } => n >= 2,
            GroupSpec::D2m { m } => m >= 3,
            GroupSpec::Qd2n { n } => n >= 4,
            GroupSpec::M2mn { m, n } => m > 2 && n >= 1,
            GroupSpec::Psl2 { k } => (1..=5).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParamOutOfRange(format!("{self}")))
        }
    }

    /// Group order as a function of the parameters.
    pub fn order(&self) -> u64 {
        match *self {
            GroupSpec::Q4n { n } => 4 * n as u64,
            GroupSpec::D2m { m } => 2 * m as u64,
            GroupSpec::Qd2n { n } => 1 << n,
            GroupSpec::M2mn { m, n } => 2 * m as u64 * n as u64,
            GroupSpec::Psl2 { k } => {
                let q = 1u64 << k;
                q * (q * q - 1)
            }
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::Q4n { .. } => "q4n",
            GroupSpec::D2m { .. } => "d2m",
            GroupSpec::Qd2n { .. } => "qd2n",
            GroupSpec::M2mn { .. } => "m2mn",
            GroupSpec::Psl2 { .. } => "psl2",
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Q4n { n } => write!(f, "Q_{{{}}}", 4 * n),
            GroupSpec::D2m { m } => write!(f, "D_{{{}}}", 2 * m),
            GroupSpec::Qd2n { n } => write!(f, "QD_{{2^{n}}}"),
            GroupSpec::M2mn { m, n } => write!(f, "M_{{2*{m}*{n}}}"),
            GroupSpec::Psl2 { k } => write!(f, "PSL(2,2^{k})"),
        }
    }
}

/// Element codes are family-specific normal forms packed into a u64:
/// presentation families use (i << 1 | j) or (i * 2n + j); PSL2 packs the
/// four matrix entries in 16-bit lanes.
enum Mul {
    // x^i y^j, 0 <= i < 2n, j in {0,1}; x^n = y^2, y x = x^{-1} y
    Q4n { two_n: u64 },
    // a^i b^j, 0 <= i < m, j in {0,1}; b a = a^{-1} b
    D2m { m: u64 },
    // a^i b^j, 0 <= i < 2^{n-1}, j in {0,1}; b a = a^r b, r = 2^{n-2}-1
    Qd2n { half: u64, r: u64 },
    // a^i b^j, 0 <= i < m, 0 <= j < 2n; b a = a^{-1} b
    M2mn { m: u64, two_n: u64 },
    // [a b; c d] with ad + bc = 1 over GF(2^k)
    Psl2 { field: FieldGf2k },
}

impl Mul {
    fn apply(&self, g: u64, h: u64) -> u64 {
        match *self {
            Mul::Q4n { two_n } => {
                let (i1, j1) = (g >> 1, g & 1);
                let (i2, j2) = (h >> 1, h & 1);
                if j1 == 0 {
                    ((i1 + i2) % two_n) << 1 | j2
                } else if j2 == 0 {
                    ((i1 + two_n - i2) % two_n) << 1 | 1
                } else {
                    // y x^{i2} y = x^{-i2} y^2 = x^{n - i2}
                    ((i1 + two_n - i2 + two_n / 2) % two_n) << 1
                }
            }
            Mul::D2m { m } => {
                let (i1, j1) = (g >> 1, g & 1);
                let (i2, j2) = (h >> 1, h & 1);
                let i = if j1 == 0 { i1 + i2 } else { i1 + m - i2 };
                (i % m) << 1 | (j1 ^ j2)
            }
            Mul::Qd2n { half, r } => {
                let (i1, j1) = (g >> 1, g & 1);
                let (i2, j2) = (h >> 1, h & 1);
                let i = if j1 == 0 { i1 + i2 } else { i1 + r * i2 };
                (i % half) << 1 | (j1 ^ j2)
            }
            Mul::M2mn { m, two_n } => {
                let (i1, j1) = (g / two_n, g % two_n);
                let (i2, j2) = (h / two_n, h % two_n);
                let i = if j1 % 2 == 0 { i1 + i2 } else { i1 + m - i2 };
                (i % m) * two_n + (j1 + j2) % two_n
            }
            Mul::Psl2 { field } => {
                let f = &field;
                let (a1, b1, c1, d1) = unpack(g);
                let (a2, b2, c2, d2) = unpack(h);
                pack(
                    f.mul(a1, a2) ^ f.mul(b1, c2),
                    f.mul(a1, b2) ^ f.mul(b1, d2),
                    f.mul(c1, a2) ^ f.mul(d1, c2),
                    f.mul(c1, b2) ^ f.mul(d1, d2),
                )
            }
        }
    }
}

fn pack(a: u32, b: u32, c: u32, d: u32) -> u64 {
    a as u64 | (b as u64) << 16 | (c as u64) << 32 | (d as u64) << 48
}

fn unpack(g: u64) -> (u32, u32, u32, u32) {
    (
        (g & 0xffff) as u32,
        (g >> 16 & 0xffff) as u32,
        (g >> 32 & 0xffff) as u32,
        (g >> 48) as u32,
    )
}

/// A sorted, duplicate-free set of element indices.
pub type ElementSet = Vec<usize>;

/// A finite group as canonical element codes plus a multiplication oracle.
pub struct FiniteGroup {
    spec: GroupSpec,
    codes: Vec<u64>,
    index: HashMap<u64, usize>,
    identity: usize,
    mul: Mul,
}

impl FiniteGroup {
    /// Build a group from a validated spec.
    pub fn build(spec: GroupSpec) -> Result<Self> {
        spec.validate()?;
        let (codes, mul) = match spec {
            GroupSpec::Q4n { n } => {
                let two_n = 2 * n as u64;
                let codes = (0..two_n).flat_map(|i| [i << 1, i << 1 | 1]).collect();
                (codes, Mul::Q4n { two_n })
            }
            GroupSpec::D2m { m } => {
                let m = m as u64;
                let codes = (0..m).flat_map(|i| [i << 1, i << 1 | 1]).collect();
                (codes, Mul::D2m { m })
            }
            GroupSpec::Qd2n { n } => {
                let half = 1u64 << (n - 1);
                let r = (1u64 << (n - 2)) - 1;
                let codes = (0..half).flat_map(|i| [i << 1, i << 1 | 1]).collect();
                (codes, Mul::Qd2n { half, r })
            }
            GroupSpec::M2mn { m, n } => {
                let (m, two_n) = (m as u64, 2 * n as u64);
                let codes = (0..m * two_n).collect();
                (codes, Mul::M2mn { m, two_n })
            }
            GroupSpec::Psl2 { k } => {
                let field = FieldGf2k::new(k)?;
                (enumerate_sl2(&field), Mul::Psl2 { field })
            }
        };
        let index: HashMap<u64, usize> =
            codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let identity_code = match mul {
            Mul::Psl2 { .. } => pack(1, 0, 0, 1),
            _ => 0,
        };
        let identity = index[&identity_code];
        let g = FiniteGroup {
            spec,
            codes,
            index,
            identity,
            mul,
        };
        debug_assert_eq!(g.order() as u64, spec.order());
        Ok(g)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.codes.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Multiplication oracle on element indices.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.mul.apply(self.codes[a], self.codes[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        // brute-force inverse; used only in invariant checks
        (0..self.order())
            .find(|&b| self.mul(a, b) == self.identity)
            .expect("every element has an inverse")
    }

    /// Human-readable label for element `i` in the family's normal form.
    pub fn label(&self, i: usize) -> String {
        let code = self.codes[i];
        match self.mul {
            Mul::Q4n { .. } => word("x", "y", code >> 1, code & 1),
            Mul::D2m { .. } | Mul::Qd2n { .. } => word("a", "b", code >> 1, code & 1),
            Mul::M2mn { two_n, .. } => word("a", "b", code / two_n, code % two_n),
            Mul::Psl2 { .. } => {
                let (a, b, c, d) = unpack(code);
                format!("[{a:x},{b:x};{c:x},{d:x}]")
            }
        }
    }

    /// Elements commuting with every element of the group.
    pub fn center(&self) -> ElementSet {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|h| self.commutes(z, h)))
            .collect()
    }

    fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul.apply(self.codes[a], self.codes[b])
            == self.mul.apply(self.codes[b], self.codes[a])
    }

    /// C_G(e) = { h : he = eh }, sorted by element index.
    pub fn centralizer(&self, e: usize) -> ElementSet {
        (0..self.order()).filter(|&h| self.commutes(h, e)).collect()
    }

    /// Distinct proper centralizers, i.e. centralizers of non-central
    /// elements, deduplicated. Vertex order groups them by descending
    /// cardinality so block structures of the distance matrices line up.
    pub fn proper_centralizer_family(&self) -> Result<CentralizerFamily> {
        let center = self.center();
        if center.len() == self.order() {
            return Err(Error::NoProperCentralizers);
        }
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sets: Vec<(ElementSet, usize)> = Vec::new();
        for e in 0..self.order() {
            if center.binary_search(&e).is_ok() {
                continue;
            }
            let c = self.centralizer(e);
            debug_assert!(c.len() < self.order());
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), e);
                sets.push((c, e));
            }
        }
        sets.sort_by(|(a, ea), (b, eb)| b.len().cmp(&a.len()).then(ea.cmp(eb)));
        let (centralizers, representatives): (Vec<_>, Vec<_>) = sets.into_iter().unzip();
        let cardinalities = centralizers.iter().map(|c| c.len()).collect();
        Ok(CentralizerFamily {
            centralizers,
            cardinalities,
            representatives,
        })
    }
}

fn word(x: &str, y: &str, i: u64, j: u64) -> String {
    let mut s = String::new();
    match i {
        0 => {}
        1 => s.push_str(x),
        _ => s.push_str(&format!("{x}^{i}")),
    }
    match j {
        0 => {}
        1 => s.push_str(y),
        _ => s.push_str(&format!("{y}^{j}")),
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// All 2x2 matrices over GF(2^k) with determinant 1, enumerated as
/// (a,b,c) with d solved from ad + bc = 1 (d = (1 + bc)/a when a != 0;
/// otherwise bc must equal 1 and d is free). Count is q^3 - q.
fn enumerate_sl2(f: &FieldGf2k) -> Vec<u64> {
    let q = f.size();
    let mut out = Vec::with_capacity(q as usize * (q as usize * q as usize - 1));
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                if a != 0 {
                    let inv_a = f.inv(a).expect("a != 0");
                    let d = f.mul(1 ^ f.mul(b, c), inv_a);
                    out.push(pack(a, b, c, d));
                } else if f.mul(b, c) == 1 {
                    for d in 0..q {
                        out.push(pack(a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// The distinct proper centralizers of a group, ordered by descending
/// cardinality (ties broken by representative index).
#[derive(Debug, Clone)]
pub struct CentralizerFamily {
    pub centralizers: Vec<ElementSet>,
    pub cardinalities: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl CentralizerFamily {
    pub fn len(&self) -> usize {
        self.centralizers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centralizers.is_empty()
    }

    /// Multiset of centralizer cardinalities as (cardinality, count) pairs,
    /// descending by cardinality.
    pub fn cardinality_multiset(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &c in &self.cardinalities {
            match out.last_mut() {
                Some((v, n)) if *v == c => *n += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn multiset(spec: GroupSpec) -> Vec<(usize, usize)> {
        FiniteGroup::build(spec)
            .unwrap()
            .proper_centralizer_family()
            .unwrap()
            .cardinality_multiset()
    }

    #[test]
    fn orders() {
        for (spec, order) in [
            (GroupSpec::Q4n { n: 3 }, 12),
            (GroupSpec::D2m { m: 5 }, 10),
            (GroupSpec::Qd2n { n: 4 }, 16),
            (GroupSpec::M2mn { m: 3, n: 2 }, 12),
            (GroupSpec::Psl2 { k: 2 }, 60),
        ] {
            assert_eq!(FiniteGroup::build(spec).unwrap().order(), order);
        }
    }

    #[test]
    fn invalid_params() {
        for spec in [
            GroupSpec::Q4n { n: 1 },
            GroupSpec::D2m { m: 2 },
            GroupSpec::Qd2n { n: 3 },
            GroupSpec::M2mn { m: 2, n: 1 },
            GroupSpec::M2mn { m: 5, n: 0 },
            GroupSpec::Psl2 { k: 0 },
        ] {
            assert!(FiniteGroup::build(spec).is_err());
        }
    }

    #[test]
    fn group_axioms_small() {
        // full closure/identity/inverse/associativity check on small orders
        for spec in [
            GroupSpec::Q4n { n: 3 },
            GroupSpec::D2m { m: 6 },
            GroupSpec::Qd2n { n: 4 },
            GroupSpec::M2mn { m: 5, n: 2 },
            GroupSpec::Psl2 { k: 1 },
        ] {
            let g = FiniteGroup::build(spec).unwrap();
            let n = g.order();
            let e = g.identity();
            for a in 0..n {
                assert_eq!(g.mul(e, a), a);
                assert_eq!(g.mul(a, e), a);
                let mut row: Vec<usize> = (0..n).map(|b| g.mul(a, b)).collect();
                row.sort_unstable();
                assert!(row.iter().enumerate().all(|(i, &v)| i == v), "{spec}: row {a}");
                let inv = g.inverse(a);
                assert_eq!(g.mul(inv, a), e);
            }
            if n <= 60 {
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q12_center_and_centralizers() {
        let g = FiniteGroup::build(GroupSpec::Q4n { n: 3 }).unwrap();
        // Z(Q_12) = {1, x^3}
        let z = g.center();
        assert_eq!(z.len(), 2);
        let labels: Vec<String> = z.iter().map(|&i| g.label(i)).collect();
        assert!(labels.contains(&"1".to_string()));
        assert!(labels.contains(&"x^3".to_string()));
        // C(x) = <x> of order 6; C(y) = {1, x^3, y, x^3 y} of order 4
        let x = (0..g.order()).find(|&i| g.label(i) == "x").unwrap();
        assert_eq!(g.centralizer(x).len(), 6);
        let y = (0..g.order()).find(|&i| g.label(i) == "y").unwrap();
        let cy = g.centralizer(y);
        assert_eq!(cy.len(), 4);
        let mut cy_labels: Vec<String> = cy.iter().map(|&i| g.label(i)).collect();
        cy_labels.sort();
        assert_eq!(cy_labels, ["1", "x^3", "x^3y", "y"]);
        // identity's centralizer is the whole group
        assert_eq!(g.centralizer(g.identity()).len(), g.order());
        assert_eq!(multiset(GroupSpec::Q4n { n: 3 }), vec![(6, 1), (4, 3)]);
    }

    #[test]
    fn q8_all_cardinalities_equal() {
        assert_eq!(multiset(GroupSpec::Q4n { n: 2 }), vec![(4, 3)]);
    }

    #[test]
    fn q4n_has_n_plus_1_centralizers() {
        for n in 2..=40 {
            let g = FiniteGroup::build(GroupSpec::Q4n { n }).unwrap();
            let fam = g.proper_centralizer_family().unwrap();
            assert_eq!(fam.len(), n as usize + 1);
            assert!(fam.cardinalities.iter().all(|&c| g.order() % c == 0));
        }
    }

    #[test]
    fn d10_trivial_center() {
        let g = FiniteGroup::build(GroupSpec::D2m { m: 5 }).unwrap();
        assert_eq!(g.center(), vec![g.identity()]);
        assert_eq!(multiset(GroupSpec::D2m { m: 5 }), vec![(5, 1), (2, 5)]);
    }

    #[test]
    fn qd16_defining_relation() {
        let g = FiniteGroup::build(GroupSpec::Qd2n { n: 4 }).unwrap();
        let a = (0..g.order()).find(|&i| g.label(i) == "a").unwrap();
        let b = (0..g.order()).find(|&i| g.label(i) == "b").unwrap();
        // b a b^{-1} = a^3 (2^{n-2} - 1 = 3 at n = 4)
        let lhs = g.mul(g.mul(b, a), g.inverse(b));
        let a3 = g.mul(g.mul(a, a), a);
        assert_eq!(lhs, a3);
        assert_eq!(multiset(GroupSpec::Qd2n { n: 4 }), vec![(8, 1), (4, 4)]);
    }

    #[test]
    fn psl2_centralizer_classes() {
        let g = FiniteGroup::build(GroupSpec::Psl2 { k: 2 }).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.center(), vec![g.identity()]);
        // 5 of cardinality 4, 6 of cardinality 5, 10 of cardinality 3
        assert_eq!(
            multiset(GroupSpec::Psl2 { k: 2 }),
            vec![(5, 6), (4, 5), (3, 10)]
        );
        for k in [2u32, 3] {
            let g = FiniteGroup::build(GroupSpec::Psl2 { k }).unwrap();
            let fam = g.proper_centralizer_family().unwrap();
            let q = 1usize << k;
            let mut expect = vec![
                (q + 1, q / 2 * (q - 1)),
                (q, q + 1),
                (q - 1, q / 2 * (q + 1)),
            ];
            expect.sort_by(|a, b| b.0.cmp(&a.0));
            assert_eq!(fam.cardinality_multiset(), expect, "k = {k}");
        }
    }

    #[test]
    fn centralizers_are_subgroups_containing_center() {
        for spec in [
            GroupSpec::Q4n { n: 4 },
            GroupSpec::D2m { m: 7 },
            GroupSpec::M2mn { m: 6, n: 2 },
        ] {
            let g = FiniteGroup::build(spec).unwrap();
            let z = g.center();
            for e in 0..g.order() {
                let c = g.centralizer(e);
                assert!(z.iter().all(|zi| c.binary_search(zi).is_ok()));
                assert!(c.binary_search(&e).is_ok());
                for &u in &c {
                    for &v in &c {
                        assert!(c.binary_search(&g.mul(u, v)).is_ok());
                    }
                }
            }
        }
    }
}

//! Finite Coxeter diagrams, parabolic orders by classification, and descent
//! class sizes by inclusion-exclusion over parabolic cosets.
//!
//! Generator numbering: type A uses `s_1, ..., s_r`; every other type starts
//! at `s_0`. In type B the edge `s_0 -4- s_1` carries the label; in type D
//! both `s_0` and `s_1` attach to `s_2`. E follows Bourbaki shifted down by
//! one, so `s_1` is the branch node's leaf attached to `s_3`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::compositions::bits;
use crate::{Error, Prime, Result};

/// Largest rank swept by [`ribbon_all`].
pub const MAX_RANK: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

fn factorial(n: u32) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

impl IrreducibleType {
    pub fn rank(&self) -> u32 {
        match *self {
            IrreducibleType::A(r) | IrreducibleType::B(r) | IrreducibleType::D(r) => r,
            IrreducibleType::E6 => 6,
            IrreducibleType::E7 => 7,
            IrreducibleType::E8 => 8,
            IrreducibleType::F4 | IrreducibleType::H4 => 4,
            IrreducibleType::H3 => 3,
            IrreducibleType::I2(_) => 2,
        }
    }

    pub fn order(&self) -> BigUint {
        match *self {
            IrreducibleType::A(r) => factorial(r + 1),
            IrreducibleType::B(r) => factorial(r) << r,
            IrreducibleType::D(r) => factorial(r) << (r - 1),
            IrreducibleType::E6 => BigUint::from(51_840u32),
            IrreducibleType::E7 => BigUint::from(2_903_040u32),
            IrreducibleType::E8 => BigUint::from(696_729_600u32),
            IrreducibleType::F4 => BigUint::from(1_152u32),
            IrreducibleType::H3 => BigUint::from(120u32),
            IrreducibleType::H4 => BigUint::from(14_400u32),
            IrreducibleType::I2(m) => BigUint::from(2 * m),
        }
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(r) => write!(f, "A{r}"),
            IrreducibleType::B(r) => write!(f, "B{r}"),
            IrreducibleType::D(r) => write!(f, "D{r}"),
            IrreducibleType::E6 => f.write_str("E6"),
            IrreducibleType::E7 => f.write_str("E7"),
            IrreducibleType::E8 => f.write_str("E8"),
            IrreducibleType::F4 => f.write_str("F4"),
            IrreducibleType::H3 => f.write_str("H3"),
            IrreducibleType::H4 => f.write_str("H4"),
            IrreducibleType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A Coxeter diagram on generators `0..rank`. `labels[i][j]` is `m_ij`;
/// `2` means no edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    name: Option<String>,
    labels: Vec<Vec<u32>>,
    first_label: u32,
}

impl CoxeterDiagram {
    /// Builds a diagram from its edges `(i, j, m)`; absent pairs get `m = 2`.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        if rank == 0 || rank > 63 {
            return Err(Error::InvalidInput(format!("rank {rank} out of range")));
        }
        let mut labels = vec![vec![2u32; rank]; rank];
        for (i, row) in labels.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in edges {
            if i >= rank || j >= rank || i == j {
                return Err(Error::InvalidInput(format!("bad edge ({i}, {j})")));
            }
            if m < 3 {
                return Err(Error::InvalidInput(format!("edge label {m} must be at least 3")));
            }
            if labels[i][j] != 2 {
                return Err(Error::InvalidInput(format!("repeated edge ({i}, {j})")));
            }
            labels[i][j] = m;
            labels[j][i] = m;
        }
        Ok(CoxeterDiagram {
            name: None,
            labels,
            first_label: 0,
        })
    }

    fn named(mut self, name: String, first_label: u32) -> Self {
        self.name = Some(name);
        self.first_label = first_label;
        self
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The `m_ij` label; `2` when `s_i` and `s_j` commute.
    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.labels[i][j]
    }

    /// Printed index of generator `0`: `1` for type A, otherwise `0`.
    pub fn first_label(&self) -> u32 {
        self.first_label
    }

    /// All generators as a bitmask.
    pub fn full_mask(&self) -> u64 {
        (1u64 << self.rank()) - 1
    }

    /// Converts printed generator labels into a bitmask.
    pub fn subset_mask(&self, generators: &[u32]) -> Result<u64> {
        let mut mask = 0u64;
        for &g in generators {
            let idx = g.checked_sub(self.first_label).filter(|&i| (i as usize) < self.rank());
            match idx {
                Some(i) => mask |= 1 << i,
                None => {
                    return Err(Error::InvalidInput(format!(
                        "generator s_{g} is not in {}",
                        self.name().unwrap_or("the diagram")
                    )))
                }
            }
        }
        Ok(mask)
    }

    fn neighbours(&self, i: usize, within: u64) -> impl Iterator<Item = usize> + '_ {
        bits(within)
            .map(|j| j as usize)
            .filter(move |&j| j != i && self.labels[i][j] != 2)
    }
}

/// Parses `A5`, `B4`, `D6`, `E6`-`E8`, `F4`, `H3`, `H4`, `G2`, and
/// `I2:m` (also `I2 m`, `I2(m)`).
pub fn builtin_diagram(name: &str) -> Result<CoxeterDiagram> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let compact = compact.to_ascii_uppercase();
    if compact == "G2" {
        return Ok(dihedral(6)?.named("G2".into(), 0));
    }
    if let Some(rest) = compact.strip_prefix("I2") {
        let m: u32 = rest
            .trim_start_matches([':', '('])
            .trim_end_matches(')')
            .parse()
            .map_err(|_| unknown())?;
        if m < 3 {
            return Err(unknown());
        }
        return Ok(dihedral(m)?.named(format!("I2:{m}"), 0));
    }
    if compact.is_empty() || !compact.is_char_boundary(1) {
        return Err(unknown());
    }
    let (letter, rank) = compact.split_at(1);
    let r: usize = rank.parse().map_err(|_| unknown())?;
    let path = |r: usize| -> Vec<(usize, usize, u32)> { (1..r).map(|i| (i - 1, i, 3)).collect() };
    let (edges, first) = match (letter, r) {
        ("A", 1..=63) => (path(r), 1),
        ("B", 2..=63) => {
            let mut e = path(r);
            e[0].2 = 4;
            (e, 0)
        }
        ("D", 4..=63) => {
            let mut e: Vec<_> = (3..r).map(|i| (i - 1, i, 3)).collect();
            e.extend([(0, 2, 3), (1, 2, 3)]);
            (e, 0)
        }
        ("E", 6..=8) => {
            let mut e = vec![(0, 2, 3), (1, 3, 3)];
            e.extend((3..r).map(|i| (i - 1, i, 3)));
            (e, 0)
        }
        ("F", 4) => (vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)], 0),
        ("H", 3 | 4) => {
            let mut e = path(r);
            e[0].2 = 5;
            (e, 0)
        }
        _ => return Err(unknown()),
    };
    Ok(CoxeterDiagram::from_edges(r, &edges)?.named(format!("{letter}{r}"), first))
}

fn dihedral(m: u32) -> Result<CoxeterDiagram> {
    CoxeterDiagram::from_edges(2, &[(0, 1, m)])
}

/// Connected components of the subdiagram induced on `mask`.
fn components(diagram: &CoxeterDiagram, mask: u64) -> Vec<Vec<usize>> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in bits(mask) {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = vec![start as usize];
        seen |= 1 << start;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in diagram.neighbours(v, mask) {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    comp.push(w);
                }
            }
            k += 1;
        }
        out.push(comp);
    }
    out
}

fn classify_one(diagram: &CoxeterDiagram, nodes: &[usize]) -> Result<IrreducibleType> {
    let r = nodes.len();
    let unclassifiable = || {
        Error::Unclassifiable(format!(
            "component on generators {nodes:?} of {}",
            diagram.name().unwrap_or("the diagram")
        ))
    };
    let mask: u64 = nodes.iter().map(|&v| 1u64 << v).sum();
    let degree = |v: usize| diagram.neighbours(v, mask).count();
    let mut edges = Vec::new();
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a + 1..] {
            if diagram.label(u, v) != 2 {
                edges.push((u, v, diagram.label(u, v)));
            }
        }
    }
    if r == 1 {
        return Ok(IrreducibleType::A(1));
    }
    if edges.len() != r - 1 {
        return Err(unclassifiable());
    }
    if r == 2 {
        return Ok(match edges[0].2 {
            3 => IrreducibleType::A(2),
            4 => IrreducibleType::B(2),
            m => IrreducibleType::I2(m),
        });
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 != 3).collect();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) > 2).collect();
    if heavy.is_empty() {
        match branch[..] {
            [] => return Ok(IrreducibleType::A(r as u32)),
            [c] if degree(c) == 3 => {
                let mut arms: Vec<usize> = diagram
                    .neighbours(c, mask)
                    .map(|start| arm_length(diagram, mask, c, start))
                    .collect();
                arms.sort_unstable();
                return match arms[..] {
                    [1, 1, _] => Ok(IrreducibleType::D(r as u32)),
                    [1, 2, 2] => Ok(IrreducibleType::E6),
                    [1, 2, 3] => Ok(IrreducibleType::E7),
                    [1, 2, 4] => Ok(IrreducibleType::E8),
                    _ => Err(unclassifiable()),
                };
            }
            _ => return Err(unclassifiable()),
        }
    }
    if heavy.len() != 1 || !branch.is_empty() {
        return Err(unclassifiable());
    }
    let (u, v, m) = *heavy[0];
    let at_end = degree(u) == 1 || degree(v) == 1;
    match (m, at_end, r) {
        (4, true, _) => Ok(IrreducibleType::B(r as u32)),
        (4, false, 4) => Ok(IrreducibleType::F4),
        (5, true, 3) => Ok(IrreducibleType::H3),
        (5, true, 4) => Ok(IrreducibleType::H4),
        _ => Err(unclassifiable()),
    }
}

/// Nodes on the path leaving `center` through `start`.
fn arm_length(diagram: &CoxeterDiagram, mask: u64, center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    while let Some(next) = diagram.neighbours(cur, mask).find(|&w| w != prev) {
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

/// Irreducible components of the parabolic subgroup generated by `mask`.
pub fn classify_components(diagram: &CoxeterDiagram, mask: u64) -> Result<Vec<IrreducibleType>> {
    components(diagram, mask & diagram.full_mask())
        .iter()
        .map(|c| classify_one(diagram, c))
        .collect()
}

/// `|W_J|` for the generators in `mask`.
pub fn parabolic_order(diagram: &CoxeterDiagram, mask: u64) -> Result<BigUint> {
    Ok(classify_components(diagram, mask)?
        .iter()
        .map(IrreducibleType::order)
        .product())
}

/// `|W|`.
pub fn group_order(diagram: &CoxeterDiagram) -> Result<BigUint> {
    parabolic_order(diagram, diagram.full_mask())
}

/// `|{w : D(w) = I}| = Σ_{J ⊆ I} (-1)^(|I|-|J|) |W| / |W_(S∖J)|`.
pub fn ribbon_general(diagram: &CoxeterDiagram, mask: u64) -> Result<BigUint> {
    if mask & !diagram.full_mask() != 0 {
        return Err(Error::InvalidInput("subset exceeds the generators".into()));
    }
    let order = group_order(diagram)?;
    let full = diagram.full_mask();
    let mut plus = BigUint::from(0u32);
    let mut minus = BigUint::from(0u32);
    for j in crate::compositions::submasks(mask) {
        let cosets = &order / parabolic_order(diagram, full & !j)?;
        if (mask.count_ones() - j.count_ones()) % 2 == 0 {
            plus += cosets;
        } else {
            minus += cosets;
        }
    }
    Ok(plus - minus)
}

/// Every descent class size, indexed by generator bitmask.
pub fn ribbon_all(diagram: &CoxeterDiagram) -> Result<Vec<BigUint>> {
    let rank = diagram.rank();
    if rank > MAX_RANK {
        return Err(Error::Capacity {
            what: "diagram rank",
            limit: MAX_RANK as u64,
            got: rank as u64,
        });
    }
    let order = group_order(diagram)?;
    let full = diagram.full_mask();
    let mut values = (0..1u64 << rank)
        .into_par_iter()
        .map(|j| Ok(&order / parabolic_order(diagram, full & !j)?))
        .collect::<Result<Vec<BigUint>>>()?;
    for b in 0..rank {
        let half = 1usize << b;
        values.par_chunks_mut(half * 2).for_each(|chunk| {
            let (lo, hi) = chunk.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h -= l;
            }
        });
    }
    Ok(values)
}

/// Class sizes with multiplicities.
pub fn descent_class_multiset(diagram: &CoxeterDiagram) -> Result<BTreeMap<BigUint, u64>> {
    let mut out = BTreeMap::new();
    for v in ribbon_all(diagram)? {
        *out.entry(v).or_insert(0) += 1;
    }
    Ok(out)
}

/// `1^2, 23^4, 73^2`: sizes ascending, multiplicity omitted when 1.
pub fn format_multiset(multiset: &BTreeMap<BigUint, u64>) -> String {
    multiset
        .iter()
        .map(|(v, &k)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Parses the notation of [`format_multiset`].
pub fn parse_multiset(s: &str) -> Result<BTreeMap<BigUint, u64>> {
    let bad = || Error::InvalidInput(format!("malformed multiset {s:?}"));
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (v, k) = item.split_once('^').unwrap_or((item, "1"));
        let v: BigUint = v.trim().parse().map_err(|_| bad())?;
        let k: u64 = k.trim().parse().map_err(|_| bad())?;
        *out.entry(v).or_insert(0) += k;
    }
    Ok(out)
}

/// Number of descent classes of each size mod `p`.
pub fn residue_histogram(diagram: &CoxeterDiagram, p: Prime) -> Result<Vec<u64>> {
    let q = BigUint::from(p.get());
    let mut hist = vec![0u64; p.get() as usize];
    for v in ribbon_all(diagram)? {
        let r = (v % &q).to_usize().expect("residue below p");
        hist[r] += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{Composition, PseudoComposition};
    use crate::ribbon::{ribbon_a, ribbon_b, ribbon_d};

    const BUILTINS: [&str; 16] = [
        "A1", "A5", "B2", "B5", "D4", "D6", "E6", "E7", "E8", "F4", "H3", "H4", "I2:5", "I2:7",
        "G2", "A9",
    ];

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn builtin_shapes() {
        let b3 = builtin_diagram("B3").unwrap();
        assert_eq!((b3.label(0, 1), b3.label(1, 2), b3.label(0, 2)), (4, 3, 2));
        let d4 = builtin_diagram("D4").unwrap();
        for leaf in [0, 1, 3] {
            assert_eq!(d4.label(leaf, 2), 3);
        }
        let i25 = builtin_diagram("I2 5").unwrap();
        assert_eq!(i25.label(0, 1), 5);
        assert_eq!(builtin_diagram("I2(9)").unwrap().label(0, 1), 9);
        assert_eq!(builtin_diagram("A3").unwrap().first_label(), 1);
        for bad in ["D3", "B1", "E9", "H5", "I2:2", "X4", ""] {
            assert!(matches!(builtin_diagram(bad), Err(Error::UnknownGroup(_))), "{bad}");
        }
    }

    #[test]
    fn classification() {
        let d4 = builtin_diagram("D4").unwrap();
        assert_eq!(
            classify_components(&d4, 0b1011).unwrap(),
            vec![IrreducibleType::A(1); 3]
        );
        let b3 = builtin_diagram("B3").unwrap();
        assert_eq!(classify_components(&b3, 0b110).unwrap(), vec![IrreducibleType::A(2)]);
        let a3 = builtin_diagram("A3").unwrap();
        assert_eq!(parabolic_order(&a3, 0b110).unwrap(), big(6));
        assert_eq!(parabolic_order(&b3, 0).unwrap(), big(1));
        for (name, want) in [
            ("E6", IrreducibleType::E6),
            ("E7", IrreducibleType::E7),
            ("E8", IrreducibleType::E8),
            ("F4", IrreducibleType::F4),
            ("H4", IrreducibleType::H4),
            ("D7", IrreducibleType::D(7)),
            ("B6", IrreducibleType::B(6)),
        ] {
            let g = builtin_diagram(name).unwrap();
            assert_eq!(classify_components(&g, g.full_mask()).unwrap(), vec![want]);
        }
        assert_eq!(group_order(&builtin_diagram("H4").unwrap()).unwrap(), big(14_400));
        // E8 minus its end node is E7, minus the branch leaf is A7
        let e8 = builtin_diagram("E8").unwrap();
        assert_eq!(classify_components(&e8, 0x7f).unwrap(), vec![IrreducibleType::E7]);
        assert_eq!(classify_components(&e8, 0xfd).unwrap(), vec![IrreducibleType::A(7)]);
    }

    #[test]
    fn rejects_infinite_shapes() {
        let triangle = CoxeterDiagram::from_edges(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]).unwrap();
        assert!(matches!(
            classify_components(&triangle, 0b111),
            Err(Error::Unclassifiable(_))
        ));
        let two_heavy = CoxeterDiagram::from_edges(3, &[(0, 1, 4), (1, 2, 4)]).unwrap();
        assert!(parabolic_order(&two_heavy, 0b111).is_err());
        assert!(CoxeterDiagram::from_edges(2, &[(0, 1, 2)]).is_err());
    }

    #[test]
    fn ribbon_examples() {
        let b3 = builtin_diagram("B3").unwrap();
        assert_eq!(ribbon_general(&b3, 0b001).unwrap(), big(7));
        for name in BUILTINS {
            let g = builtin_diagram(name).unwrap();
            assert_eq!(ribbon_general(&g, 0).unwrap(), big(1), "{name}");
        }
        for m in 3..=12u32 {
            let g = builtin_diagram(&format!("I2:{m}")).unwrap();
            assert_eq!(ribbon_general(&g, 0b01).unwrap(), big(m as u64 - 1));
            let ms = descent_class_multiset(&g).unwrap();
            assert_eq!(format_multiset(&ms), format!("1^2, {}^2", m - 1));
        }
        let f4 = descent_class_multiset(&builtin_diagram("F4").unwrap()).unwrap();
        assert_eq!(format_multiset(&f4), "1^2, 23^4, 73^2, 95^4, 97^2, 169^2");
        let h3 = descent_class_multiset(&builtin_diagram("H3").unwrap()).unwrap();
        assert_eq!(format_multiset(&h3), "1^2, 11^2, 19^2, 29^2");
    }

    #[test]
    fn mass_symmetry_positivity() {
        for name in BUILTINS {
            let g = builtin_diagram(name).unwrap();
            let all = ribbon_all(&g).unwrap();
            assert_eq!(all.iter().sum::<BigUint>(), group_order(&g).unwrap(), "{name}");
            let full = g.full_mask() as usize;
            for (i, v) in all.iter().enumerate() {
                assert_eq!(v, &all[full ^ i], "{name} {i:b}");
                assert!(*v >= big(1));
            }
        }
    }

    #[test]
    fn batch_matches_single() {
        for name in ["F4", "H4", "D5", "E6"] {
            let g = builtin_diagram(name).unwrap();
            let all = ribbon_all(&g).unwrap();
            for (i, v) in all.iter().enumerate() {
                assert_eq!(&ribbon_general(&g, i as u64).unwrap(), v);
            }
        }
    }

    #[test]
    fn agrees_with_families() {
        for n in 2..=10u32 {
            let g = builtin_diagram(&format!("A{}", n - 1)).unwrap();
            let all = ribbon_all(&g).unwrap();
            for (m, v) in all.iter().enumerate() {
                // generator s_i sits at bit i - 1; descent i sits at bit i
                let alpha = Composition::from_mask(n, (m as u64) << 1).unwrap();
                assert_eq!(&ribbon_a(&alpha), v, "A n={n} {alpha}");
            }
        }
        for n in 2..=7u32 {
            let all = ribbon_all(&builtin_diagram(&format!("B{n}")).unwrap()).unwrap();
            for (m, v) in all.iter().enumerate() {
                let alpha = PseudoComposition::from_mask(n, m as u64).unwrap();
                assert_eq!(&ribbon_b(&alpha), v, "B n={n} {alpha}");
            }
        }
        for n in 4..=7u32 {
            let all = ribbon_all(&builtin_diagram(&format!("D{n}")).unwrap()).unwrap();
            for (m, v) in all.iter().enumerate() {
                let alpha = PseudoComposition::from_mask(n, m as u64).unwrap();
                assert_eq!(&ribbon_d(&alpha).unwrap(), v, "D n={n} {alpha}");
            }
        }
    }

    #[test]
    fn histograms() {
        let p = |x| Prime::new(x).unwrap();
        let e6 = builtin_diagram("E6").unwrap();
        assert_eq!(residue_histogram(&e6, p(2)).unwrap(), vec![32, 32]);
        let h3 = builtin_diagram("H3").unwrap();
        assert_eq!(residue_histogram(&h3, p(5)).unwrap(), vec![0, 4, 0, 0, 4]);
        let e7 = builtin_diagram("E7").unwrap();
        assert_eq!(residue_histogram(&e7, p(7)).unwrap(), vec![0, 64, 0, 0, 0, 0, 64]);
    }

    #[test]
    fn multiset_notation_round_trips() {
        let s = "1^2, 23^4, 73^2, 95^4, 97^2, 169^2";
        assert_eq!(format_multiset(&parse_multiset(s).unwrap()), s);
        assert_eq!(parse_multiset("5, 5, 7").unwrap().get(&big(5)), Some(&2));
        assert!(parse_multiset("1^x").is_err());
    }

    #[test]
    fn subset_labels() {
        let a3 = builtin_diagram("A3").unwrap();
        assert_eq!(a3.subset_mask(&[1, 3]).unwrap(), 0b101);
        assert!(a3.subset_mask(&[0]).is_err());
        let b3 = builtin_diagram("B3").unwrap();
        assert_eq!(b3.subset_mask(&[0, 2]).unwrap(), 0b101);
        assert!(b3.subset_mask(&[3]).is_err());
    }
}

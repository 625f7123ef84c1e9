//! Root data, weights and the classical decomposition rules of KR crystals.
//!
//! Weights live in the ε-basis and are stored doubled, so spin weights such
//! as ½(ε1+…+εn) stay integral.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalType {
    A,
    B,
    C,
    D,
}

impl ClassicalType {
    pub fn letter(self) -> char {
        match self {
            ClassicalType::A => 'A',
            ClassicalType::B => 'B',
            ClassicalType::C => 'C',
            ClassicalType::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Result<Self, CartanError> {
        match c {
            'A' => Ok(ClassicalType::A),
            'B' => Ok(ClassicalType::B),
            'C' => Ok(ClassicalType::C),
            'D' => Ok(ClassicalType::D),
            other => Err(CartanError::UnsupportedType(other)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// A_{n-1}^(1); `n` counts letters, so the classical rank is n-1.
    A1,
    B1,
    C1,
    D1,
    /// A_{2n}^(2)
    A2Even,
    /// A_{2n-1}^(2)
    A2Odd,
    /// D_{n+1}^(2)
    D2,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A1,
        Family::B1,
        Family::C1,
        Family::D1,
        Family::A2Even,
        Family::A2Odd,
        Family::D2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::B1 => "B1",
            Family::C1 => "C1",
            Family::D1 => "D1",
            Family::A2Even => "A2even",
            Family::A2Odd => "A2odd",
            Family::D2 => "D2",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name().eq_ignore_ascii_case(s))
    }

    /// Type of the classical subalgebra obtained by removing node 0.
    pub fn classical_type(self) -> ClassicalType {
        match self {
            Family::A1 => ClassicalType::A,
            Family::B1 | Family::D2 => ClassicalType::B,
            Family::C1 | Family::A2Even | Family::A2Odd => ClassicalType::C,
            Family::D1 => ClassicalType::D,
        }
    }

    /// Human-readable affine type, e.g. `C_3^(1)`.
    pub fn affine_name(self, n: usize) -> String {
        match self {
            Family::A1 => alloc::format!("A_{}^(1)", n - 1),
            Family::B1 => alloc::format!("B_{}^(1)", n),
            Family::C1 => alloc::format!("C_{}^(1)", n),
            Family::D1 => alloc::format!("D_{}^(1)", n),
            Family::A2Even => alloc::format!("A_{}^(2)", 2 * n),
            Family::A2Odd => alloc::format!("A_{}^(2)", 2 * n - 1),
            Family::D2 => alloc::format!("D_{}^(2)", n + 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanError {
    UnsupportedType(char),
    RankTooSmall { n: usize },
    NodeOutOfRange { r: usize, lo: usize, hi: usize },
    ZeroWidth,
    NotDominant,
    LengthMismatch,
}

impl fmt::Display for CartanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanError::UnsupportedType(c) => write!(f, "unsupported type letter {c:?}"),
            CartanError::RankTooSmall { n } => write!(f, "rank n={n} too small for this family"),
            CartanError::NodeOutOfRange { r, lo, hi } => {
                write!(f, "node r={r} outside {lo}..={hi}")
            }
            CartanError::ZeroWidth => f.write_str("width s must be positive"),
            CartanError::NotDominant => f.write_str("weight is not dominant integral"),
            CartanError::LengthMismatch => f.write_str("weight length does not match rank"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSpec {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl AffineSpec {
    pub fn new(family: Family, n: usize, r: usize, s: usize) -> Result<Self, CartanError> {
        let min_n = match family {
            Family::D1 => 3,
            _ => 2,
        };
        if n < min_n {
            return Err(CartanError::RankTooSmall { n });
        }
        let hi = if family == Family::A1 { n - 1 } else { n };
        if r < 1 || r > hi {
            return Err(CartanError::NodeOutOfRange { r, lo: 1, hi });
        }
        if s == 0 {
            return Err(CartanError::ZeroWidth);
        }
        Ok(AffineSpec { family, n, r, s })
    }

    pub fn classical_type(&self) -> ClassicalType {
        self.family.classical_type()
    }

    /// Number of classical colors (n-1 for A1, n otherwise).
    pub fn classical_rank(&self) -> usize {
        match self.family {
            Family::A1 => self.n - 1,
            _ => self.n,
        }
    }

    /// Colors of the affine crystal, 0 included.
    pub fn colors(&self) -> Vec<u8> {
        (0..=self.classical_rank() as u8).collect()
    }

    pub fn classical_colors(&self) -> Vec<u8> {
        (1..=self.classical_rank() as u8).collect()
    }
}

impl fmt::Display for AffineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} r={} s={}", self.family, self.n, self.r, self.s)
    }
}

/// A weight in the ε-basis, every coordinate doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    /// ε_i (1-based) with coordinate `coeff`, given in undoubled units.
    pub fn unit(len: usize, i: usize, coeff: i32) -> Self {
        let mut w = Weight::zero(len);
        w.0[i - 1] = 2 * coeff;
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Halves every doubled coordinate; `None` if some entry is odd.
    pub fn halve(&self) -> Option<Weight> {
        if self.0.iter().any(|a| a % 2 != 0) {
            return None;
        }
        Some(Weight(self.0.iter().map(|a| a / 2).collect()))
    }

    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| *a as i64 * *b as i64).sum()
    }

    /// ⟨self, α^∨⟩ = 2(self, α)/(α, α); the doubling cancels.
    pub fn pairing(&self, root: &Weight) -> i64 {
        let num = 2 * self.dot(root);
        let den = root.dot(root);
        num / den
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if a % 2 == 0 {
                write!(f, "{}", a / 2)?;
            } else {
                write!(f, "{}/2", a)?;
            }
        }
        f.write_str(")")
    }
}

/// α_1..α_rank in ε-coordinates. Type A uses n coordinates and n-1 roots.
pub fn classical_simple_roots(t: ClassicalType, n: usize) -> Result<Vec<Weight>, CartanError> {
    if n < 2 {
        return Err(CartanError::RankTooSmall { n });
    }
    let mut roots: Vec<Weight> = (1..n)
        .map(|i| Weight::unit(n, i, 1).sub(&Weight::unit(n, i + 1, 1)))
        .collect();
    match t {
        ClassicalType::A => {}
        ClassicalType::B => roots.push(Weight::unit(n, n, 1)),
        ClassicalType::C => roots.push(Weight::unit(n, n, 2)),
        ClassicalType::D => roots.push(Weight::unit(n, n - 1, 1).add(&Weight::unit(n, n, 1))),
    }
    Ok(roots)
}

/// Classical part ᾱ_0 of α_0, so that wt(f_0 b) = wt(b) − ᾱ_0.
pub fn zero_root_projection(spec: &AffineSpec) -> Weight {
    let n = spec.n;
    match spec.family {
        Family::A1 => Weight::unit(n, n, 1).sub(&Weight::unit(n, 1, 1)),
        Family::B1 | Family::D1 | Family::A2Odd => {
            Weight::unit(n, 1, -1).add(&Weight::unit(n, 2, -1))
        }
        Family::C1 => Weight::unit(n, 1, -2),
        Family::D2 | Family::A2Even => Weight::unit(n, 1, -1),
    }
}

/// Simple roots indexed by color 0..=rank, color 0 being ᾱ_0.
pub fn affine_roots(spec: &AffineSpec) -> Vec<Weight> {
    let mut roots = vec![zero_root_projection(spec)];
    roots.extend(classical_simple_roots(spec.classical_type(), spec.n).expect("validated spec"));
    roots
}

/// Positive roots, used by the Weyl dimension formula.
pub fn positive_roots(t: ClassicalType, n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Weight::unit(n, i, 1).sub(&Weight::unit(n, j, 1)));
            if t != ClassicalType::A {
                out.push(Weight::unit(n, i, 1).add(&Weight::unit(n, j, 1)));
            }
        }
        match t {
            ClassicalType::B => out.push(Weight::unit(n, i, 1)),
            ClassicalType::C => out.push(Weight::unit(n, i, 2)),
            _ => {}
        }
    }
    out
}

/// Number of coordinates of weights of the given type and rank parameter.
pub fn weight_len(_t: ClassicalType, n: usize) -> usize {
    n
}

pub fn rank(t: ClassicalType, n: usize) -> usize {
    match t {
        ClassicalType::A => n - 1,
        _ => n,
    }
}

/// Fundamental weight Λ_i (doubled coordinates).
pub fn fundamental_weight(t: ClassicalType, n: usize, i: usize) -> Weight {
    let mut w = Weight::zero(n);
    let spin = match t {
        ClassicalType::B => i == n,
        ClassicalType::D => i >= n - 1,
        _ => false,
    };
    if spin {
        for a in w.0.iter_mut() {
            *a = 1;
        }
        if t == ClassicalType::D && i == n - 1 {
            w.0[n - 1] = -1;
        }
    } else {
        for a in w.0.iter_mut().take(i) {
            *a = 2;
        }
    }
    w
}

/// Dynkin labels → weight.
pub fn weight_from_labels(t: ClassicalType, n: usize, labels: &[u32]) -> Weight {
    let mut w = Weight::zero(n);
    for (k, &c) in labels.iter().enumerate() {
        if c > 0 {
            w = w.add(&fundamental_weight(t, n, k + 1).scale(c as i32));
        }
    }
    w
}

/// Weight → Dynkin labels; `None` if not dominant integral.
pub fn labels_of(t: ClassicalType, n: usize, w: &Weight) -> Option<Vec<u32>> {
    let roots = classical_simple_roots(t, n).ok()?;
    let mut out = Vec::with_capacity(roots.len());
    for a in &roots {
        let num = 2 * w.dot(a);
        let den = a.dot(a);
        if num % den != 0 || num < 0 {
            return None;
        }
        out.push((num / den) as u32);
    }
    Some(out)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Dimension of the irreducible module of highest weight `w`.
pub fn weyl_dimension(t: ClassicalType, n: usize, w: &Weight) -> Result<u128, CartanError> {
    if w.len() != n {
        return Err(CartanError::LengthMismatch);
    }
    if labels_of(t, n, w).is_none() {
        return Err(CartanError::NotDominant);
    }
    let r = rank(t, n);
    let rho = weight_from_labels(t, n, &vec![1; r]);
    let shifted = w.add(&rho);
    let (mut num, mut den) = (1u128, 1u128);
    for a in positive_roots(t, n) {
        let top = shifted.dot(&a);
        let bottom = rho.dot(&a);
        num *= top as u128;
        den *= bottom as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    Ok(num / den)
}

/// Formats Dynkin labels as `2Λ1 + Λ3`, or `0`.
pub fn format_labels(labels: &[u32]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, &c) in labels.iter().enumerate() {
        match c {
            0 => {}
            1 => parts.push(alloc::format!("Λ{}", k + 1)),
            _ => parts.push(alloc::format!("{}Λ{}", c, k + 1)),
        }
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join(" + ")
    }
}

/// A dominant weight drawn as columns: full columns by height (weakly
/// decreasing), an optional spin half-column, and a color for type D
/// height-n blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub columns: Vec<usize>,
    pub spin: bool,
    pub color: Option<u8>,
}

impl Shape {
    pub fn empty() -> Self {
        Shape { columns: Vec::new(), spin: false, color: None }
    }

    pub fn from_columns(mut columns: Vec<usize>) -> Self {
        columns.retain(|&h| h > 0);
        columns.sort_unstable_by(|a, b| b.cmp(a));
        Shape { columns, spin: false, color: None }
    }

    /// Row lengths (the partition).
    pub fn rows(&self) -> Vec<usize> {
        let h = self.columns.first().copied().unwrap_or(0);
        (1..=h).map(|i| self.columns.iter().filter(|&&c| c >= i).count()).collect()
    }

    /// Spin columns counted in half-units.
    pub fn spin_columns(&self) -> u32 {
        self.spin as u32
    }

    pub fn to_labels(&self, t: ClassicalType, n: usize) -> Vec<u32> {
        let mut labels = vec![0u32; rank(t, n)];
        for &h in &self.columns {
            match (t, h == n) {
                (ClassicalType::B, true) => labels[n - 1] += 2,
                (ClassicalType::D, true) => {
                    if self.color == Some(2) {
                        labels[n - 2] += 2
                    } else {
                        labels[n - 1] += 2
                    }
                }
                _ => labels[h - 1] += 1,
            }
        }
        if self.spin {
            match (t, self.color) {
                (ClassicalType::D, Some(2)) => labels[n - 2] += 1,
                _ => labels[n - 1] += 1,
            }
        }
        labels
    }

    pub fn to_weight(&self, t: ClassicalType, n: usize) -> Weight {
        weight_from_labels(t, n, &self.to_labels(t, n))
    }

    /// Inverse of `to_labels`; type D may not mix Λ_{n-1} and Λ_n.
    pub fn from_labels(t: ClassicalType, n: usize, labels: &[u32]) -> Option<Shape> {
        let mut columns = Vec::new();
        let mut spin = false;
        let mut color = None;
        for (k, &c) in labels.iter().enumerate() {
            let i = k + 1;
            let special = match t {
                ClassicalType::B => i == n,
                ClassicalType::D => i >= n - 1,
                _ => false,
            };
            if !special {
                columns.extend(core::iter::repeat_n(i, c as usize));
                continue;
            }
            if c == 0 {
                continue;
            }
            if t == ClassicalType::D {
                if color.is_some() {
                    return None;
                }
                color = Some(if i == n { 1 } else { 2 });
            }
            columns.extend(core::iter::repeat_n(n, (c / 2) as usize));
            spin = c % 2 == 1;
        }
        columns.sort_unstable_by(|a, b| b.cmp(a));
        Some(Shape { columns, spin, color })
    }
}

/// Partitions with at most `rows` parts, each at most `width`, listed in
/// decreasing lexicographic order.
fn partitions_in_box(rows: usize, width: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == rows {
            out.push(acc.clone());
            return;
        }
        for v in (0..=max).rev() {
            acc.push(v);
            go(rows, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, width, &mut Vec::new(), &mut out);
    out
}

fn partition_labels(t: ClassicalType, n: usize, rows: &[usize]) -> Vec<u32> {
    let mut w = Weight::zero(n);
    for (k, &len) in rows.iter().enumerate() {
        w.0[k] = 2 * len as i32;
    }
    labels_of(t, n, &w).expect("partition is dominant")
}

fn sort_labels(t: ClassicalType, n: usize, mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort_by(|a, b| {
        let wa = weight_from_labels(t, n, a);
        let wb = weight_from_labels(t, n, b);
        wb.cmp(&wa).then_with(|| b.cmp(a))
    });
    v
}

/// Heights r, r-2, ... of columns left by removing vertical dominoes,
/// with `s` columns in total (height 0 allowed).
fn vertical_domino_labels(t: ClassicalType, n: usize, r: usize, s: usize) -> Vec<Vec<u32>> {
    let heights: Vec<usize> = (0..=r / 2).map(|k| r - 2 * k).collect();
    let mut out = Vec::new();
    fn go(
        heights: &[usize],
        left: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if heights.len() == 1 {
            acc.push(left);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for k in 0..=left {
            acc.push(k);
            go(&heights[1..], left - k, acc, out);
            acc.pop();
        }
    }
    let mut counts = Vec::new();
    go(&heights, s, &mut Vec::new(), &mut counts);
    for c in counts {
        let mut labels = vec![0u32; rank(t, n)];
        for (h, k) in heights.iter().zip(&c) {
            if *h > 0 {
                labels[h - 1] += *k as u32;
            }
        }
        out.push(labels);
    }
    out
}

/// Classical decomposition of B^{r,s} under colors {1..n}, as Dynkin labels.
pub fn kr_classical_decomposition(spec: &AffineSpec) -> Vec<Vec<u32>> {
    let t = spec.classical_type();
    let (n, r, s) = (spec.n, spec.r, spec.s);
    let rk = rank(t, n);
    let single = |node: usize| {
        let mut labels = vec![0u32; rk];
        labels[node - 1] = s as u32;
        vec![labels]
    };
    let v = match spec.family {
        Family::A1 => single(r),
        Family::D1 if r >= n - 1 => single(r),
        Family::C1 | Family::D2 if r == n => single(n),
        Family::B1 if r == n => {
            // 2(k_ι + k_{ι+2} + … + k_{n-2}) + k_n = s with ι ≡ n (mod 2)
            let mut out = Vec::new();
            for kn in (0..=s).filter(|k| (s - k) % 2 == 0) {
                let rest = (s - kn) / 2;
                for mut labels in vertical_domino_labels(t, n, n - 2, rest) {
                    labels[n - 1] += kn as u32;
                    out.push(labels);
                }
            }
            out
        }
        Family::B1 | Family::D1 | Family::A2Odd => vertical_domino_labels(t, n, r, s),
        Family::C1 => partitions_in_box(r, s)
            .into_iter()
            .filter(|p| p.iter().all(|&x| x % 2 == s % 2))
            .map(|p| partition_labels(t, n, &p))
            .collect(),
        Family::A2Even | Family::D2 => partitions_in_box(r, s)
            .into_iter()
            .map(|p| partition_labels(t, n, &p))
            .collect(),
    };
    sort_labels(t, n, v)
}

/// The second decomposition checked on every build: colors listed so that
/// the k-th entry plays the role of node k+1, with the expected multiset.
pub fn second_decomposition(spec: &AffineSpec) -> (Vec<u8>, ClassicalType, Vec<Vec<u32>>) {
    let t = spec.classical_type();
    let (n, r, s) = (spec.n, spec.r, spec.s);
    match spec.family {
        Family::A1 => {
            let colors: Vec<u8> = (2..n as u8).chain(core::iter::once(0)).collect();
            (colors, t, kr_classical_decomposition(spec))
        }
        Family::B1 | Family::D1 | Family::A2Odd => {
            let colors: Vec<u8> = core::iter::once(0).chain(2..=n as u8).collect();
            let expected = if spec.family == Family::D1 && r >= n - 1 {
                let mut labels = vec![0u32; n];
                let other = if r == n { n - 1 } else { n };
                labels[other - 1] = s as u32;
                vec![labels]
            } else {
                kr_classical_decomposition(spec)
            };
            (colors, t, expected)
        }
        Family::C1 | Family::D2 | Family::A2Even => {
            let colors: Vec<u8> = (0..n as u8).rev().collect();
            let expected = match spec.family {
                Family::A2Even => {
                    let b = ClassicalType::B;
                    let v = partitions_in_box(r, s)
                        .into_iter()
                        .filter(|p| p.iter().all(|&x| x % 2 == s % 2))
                        .map(|p| partition_labels(b, n, &p))
                        .collect();
                    return (colors, b, sort_labels(b, n, v));
                }
                _ => kr_classical_decomposition(spec),
            };
            (colors, t, expected)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots_textbook() {
        let c2 = classical_simple_roots(ClassicalType::C, 2).unwrap();
        assert_eq!(c2, vec![Weight(vec![2, -2]), Weight(vec![0, 4])]);
        let b3 = classical_simple_roots(ClassicalType::B, 3).unwrap();
        assert_eq!(b3[2], Weight(vec![0, 0, 2]));
        let d4 = classical_simple_roots(ClassicalType::D, 4).unwrap();
        assert_eq!(d4[3], Weight(vec![0, 0, 2, 2]));
        assert!(classical_simple_roots(ClassicalType::C, 1).is_err());
    }

    #[test]
    fn zero_roots() {
        let c = AffineSpec::new(Family::C1, 3, 1, 1).unwrap();
        assert_eq!(zero_root_projection(&c), Weight(vec![-4, 0, 0]));
        let a = AffineSpec::new(Family::A1, 3, 1, 1).unwrap();
        assert_eq!(zero_root_projection(&a), Weight(vec![-2, 0, 2]));
        let d = AffineSpec::new(Family::D2, 2, 1, 1).unwrap();
        assert_eq!(zero_root_projection(&d), Weight(vec![-2, 0]));
    }

    #[test]
    fn dimensions() {
        let c = ClassicalType::C;
        assert_eq!(weyl_dimension(c, 2, &fundamental_weight(c, 2, 1)).unwrap(), 4);
        assert_eq!(weyl_dimension(c, 2, &fundamental_weight(c, 2, 1).scale(2)).unwrap(), 10);
        let b = ClassicalType::B;
        assert_eq!(weyl_dimension(b, 3, &fundamental_weight(b, 3, 1)).unwrap(), 7);
        assert_eq!(weyl_dimension(b, 3, &fundamental_weight(b, 3, 3)).unwrap(), 8);
        let d = ClassicalType::D;
        assert_eq!(weyl_dimension(d, 4, &fundamental_weight(d, 4, 4)).unwrap(), 8);
        assert_eq!(weyl_dimension(d, 4, &fundamental_weight(d, 4, 2)).unwrap(), 28);
        assert!(weyl_dimension(c, 2, &Weight(vec![0, 2])).is_err());
    }

    #[test]
    fn decomposition_tables() {
        let spec = AffineSpec::new(Family::C1, 3, 1, 2).unwrap();
        assert_eq!(kr_classical_decomposition(&spec), vec![vec![2, 0, 0], vec![0, 0, 0]]);
        let spec = AffineSpec::new(Family::D2, 2, 1, 1).unwrap();
        assert_eq!(kr_classical_decomposition(&spec), vec![vec![1, 0], vec![0, 0]]);
        let spec = AffineSpec::new(Family::B1, 3, 2, 1).unwrap();
        assert_eq!(kr_classical_decomposition(&spec), vec![vec![0, 1, 0], vec![0, 0, 0]]);
        let spec = AffineSpec::new(Family::A2Even, 2, 2, 1).unwrap();
        assert_eq!(
            kr_classical_decomposition(&spec),
            vec![vec![0, 1], vec![1, 0], vec![0, 0]]
        );
        let spec = AffineSpec::new(Family::B1, 3, 3, 2).unwrap();
        assert_eq!(kr_classical_decomposition(&spec), vec![vec![0, 0, 2], vec![1, 0, 0]]);
    }

    #[test]
    fn shapes_round_trip() {
        let t = ClassicalType::D;
        let labels = vec![1, 0, 3, 0];
        let shape = Shape::from_labels(t, 4, &labels).unwrap();
        assert_eq!(shape.columns, vec![4, 1]);
        assert!(shape.spin);
        assert_eq!(shape.color, Some(2));
        assert_eq!(shape.to_labels(t, 4), labels);
        assert_eq!(Shape::from_columns(vec![1, 2, 0]).rows(), vec![2, 1]);
    }

    #[test]
    fn spec_ranges() {
        assert!(AffineSpec::new(Family::A1, 3, 3, 1).is_err());
        assert!(AffineSpec::new(Family::C1, 3, 3, 1).is_ok());
        assert!(AffineSpec::new(Family::C1, 3, 1, 0).is_err());
    }
}

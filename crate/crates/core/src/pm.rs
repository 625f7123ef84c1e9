//! ±-diagrams: the X_n → X_{n-1} branching data, the bijection Φ to
//! {2..n}-highest elements, and the maps built on top of it.
//!
//! A diagram is stored as a multiset of columns sorted left to right by
//! (outer height, middle height, inner height), all descending. That order is
//! forced by λ ⊆ μ ⊆ Λ being partitions, so equal diagrams compare equal.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::cartan::{ClassicalType, Family, Shape};
use crate::crystal::CrystalGraph;
use crate::tableaux::{Letter, SpinWord, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Empty,
    Plus,
    Minus,
    /// `∓`: + directly above the inner shape, − above that.
    PlusMinus,
    /// Type B only: a 0 at height n.
    Zero,
}

impl Sign {
    pub fn has_plus(self) -> bool {
        matches!(self, Sign::Plus | Sign::PlusMinus)
    }

    pub fn has_minus(self) -> bool {
        matches!(self, Sign::Minus | Sign::PlusMinus)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PmColumn {
    pub outer: u8,
    pub sign: Sign,
}

impl PmColumn {
    pub fn new(outer: usize, sign: Sign) -> Self {
        PmColumn { outer: outer as u8, sign }
    }

    pub fn inner(self) -> usize {
        let o = self.outer as usize;
        match self.sign {
            Sign::Empty => o,
            Sign::Plus | Sign::Minus | Sign::Zero => o - 1,
            Sign::PlusMinus => o - 2,
        }
    }

    /// Twice the height of μ in this column; a 0 sits halfway.
    fn mid_key(self) -> usize {
        let o = self.outer as usize;
        match self.sign {
            Sign::Empty | Sign::Plus => 2 * o,
            Sign::Minus | Sign::PlusMinus => 2 * o - 2,
            Sign::Zero => 2 * o - 1,
        }
    }

    fn key(self) -> (usize, usize, usize) {
        (self.outer as usize, self.mid_key(), self.inner())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmError {
    Invalid(&'static str),
    Unsupported(&'static str),
    NotFound,
    Inconsistent(&'static str),
    NotDoubled,
}

impl fmt::Display for PmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PmError::Invalid(m) => write!(f, "invalid ±-diagram: {m}"),
            PmError::Unsupported(m) => write!(f, "unsupported: {m}"),
            PmError::NotFound => f.write_str("element has no ±-diagram in the lookup"),
            PmError::Inconsistent(m) => write!(f, "inconsistent data: {m}"),
            PmError::NotDoubled => f.write_str("diagram is not a doubled diagram"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PmDiagram {
    pub t: ClassicalType,
    pub n: usize,
    pub columns: Vec<PmColumn>,
    /// Half-width spin column (B: Λ_n; D: Λ_{n-1} or Λ_n).
    pub spin: Option<Sign>,
    /// Type D color of the height-n block.
    pub color: Option<u8>,
}

impl PmDiagram {
    pub fn new(
        t: ClassicalType,
        n: usize,
        mut columns: Vec<PmColumn>,
        spin: Option<Sign>,
        color: Option<u8>,
    ) -> Self {
        columns.retain(|c| c.outer > 0);
        columns.sort_by_key(|c| core::cmp::Reverse(c.key()));
        PmDiagram { t, n, columns, spin, color }
    }

    pub fn outer(&self) -> Shape {
        Shape {
            columns: self.columns.iter().map(|c| c.outer as usize).collect(),
            spin: self.spin.is_some(),
            color: self.color,
        }
    }

    /// Inner column heights, descending.
    pub fn inner_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.columns.iter().map(|c| c.inner()).filter(|&h| h > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// X_{n-1}-weight of the inner shape on coordinates 2..n, doubled. Spin
    /// columns add one half to every coordinate.
    pub fn inner_weight(&self) -> Vec<i32> {
        let mut w = vec![0i32; self.n - 1];
        for h in self.inner_columns() {
            for x in w.iter_mut().take(h) {
                *x += 2;
            }
        }
        if self.spin.is_some() {
            for x in w.iter_mut() {
                *x += 1;
            }
        }
        w
    }

    pub fn count(&self, outer: usize, sign: Sign) -> usize {
        self.columns.iter().filter(|c| c.outer as usize == outer && c.sign == sign).count()
    }

    pub fn validate(&self) -> Result<(), PmError> {
        let n = self.n;
        let mut prev: Option<PmColumn> = None;
        for c in &self.columns {
            let o = c.outer as usize;
            if o > n {
                return Err(PmError::Invalid("column taller than n"));
            }
            match c.sign {
                Sign::PlusMinus if o < 2 => return Err(PmError::Invalid("∓ needs height 2")),
                Sign::Zero if self.t != ClassicalType::B || o != n => {
                    return Err(PmError::Invalid("0 only at height n in type B"))
                }
                Sign::Empty if o == n && self.t != ClassicalType::A => {
                    return Err(PmError::Invalid("empty column of height n"))
                }
                _ => {}
            }
            if let Some(p) = prev {
                if p.inner() < c.inner() || p.mid_key() < c.mid_key() {
                    return Err(PmError::Invalid("not a horizontal strip"));
                }
            }
            prev = Some(*c);
        }
        let zeros = self.columns.iter().filter(|c| c.sign == Sign::Zero).count();
        if zeros > 1 {
            return Err(PmError::Invalid("too many 0-columns"));
        }
        // The spin column sits leftmost at height n, so a − there must not be
        // followed by a + or a 0 at height n.
        if self.spin == Some(Sign::Minus)
            && self
                .columns
                .iter()
                .any(|c| c.outer as usize == n && matches!(c.sign, Sign::Plus | Sign::Zero))
        {
            return Err(PmError::Invalid("+ or 0 after a spin −"));
        }
        if let Some(sp) = self.spin {
            if !matches!(sp, Sign::Plus | Sign::Minus) {
                return Err(PmError::Invalid("spin column holds a single sign"));
            }
        }
        if self.t == ClassicalType::D {
            let full: Vec<Sign> = self
                .columns
                .iter()
                .filter(|c| c.outer as usize == n)
                .map(|c| c.sign)
                .chain(self.spin)
                .collect();
            if full.contains(&Sign::Plus) && full.contains(&Sign::Minus) {
                return Err(PmError::Invalid("+ and − columns mixed at height n"));
            }
        }
        Ok(())
    }

    /// Rows of the outer shape from the top, '.' inner, then signs; the spin
    /// column is appended as a suffix line.
    pub fn text(&self) -> String {
        let top = self.columns.first().map_or(0, |c| c.outer as usize);
        let mut lines = Vec::new();
        for h in (1..=top).rev() {
            let mut row = String::new();
            for c in &self.columns {
                let o = c.outer as usize;
                if h > o {
                    continue;
                }
                let inner = c.inner();
                let ch = if h <= inner {
                    '.'
                } else {
                    match (c.sign, h - inner) {
                        (Sign::Plus, _) => '+',
                        (Sign::Minus, _) => '-',
                        (Sign::Zero, _) => '0',
                        (Sign::PlusMinus, 1) => '+',
                        (Sign::PlusMinus, _) => '-',
                        (Sign::Empty, _) => '.',
                    }
                };
                row.push(ch);
            }
            lines.push(row);
        }
        match self.spin {
            Some(Sign::Plus) => lines.push(String::from("spin +")),
            Some(Sign::Minus) => lines.push(String::from("spin -")),
            _ => {}
        }
        if let Some(c) = self.color {
            lines.push(alloc::format!("color {c}"));
        }
        lines.join("\n")
    }
}

fn signs_for(t: ClassicalType, n: usize, h: usize) -> Vec<Sign> {
    let mut out = Vec::new();
    if h < n || t == ClassicalType::A {
        out.push(Sign::Empty);
    }
    out.push(Sign::Plus);
    out.push(Sign::Minus);
    if h >= 2 {
        out.push(Sign::PlusMinus);
    }
    if t == ClassicalType::B && h == n {
        out.push(Sign::Zero);
    }
    out
}

/// All valid ±-diagrams with the given outer shape, sorted.
pub fn enumerate_pm(t: ClassicalType, n: usize, outer: &Shape) -> Vec<PmDiagram> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &h in &outer.columns {
        match groups.last_mut() {
            Some((g, k)) if *g == h => *k += 1,
            _ => groups.push((h, 1)),
        }
    }
    let spins: Vec<Option<Sign>> =
        if outer.spin { vec![Some(Sign::Plus), Some(Sign::Minus)] } else { vec![None] };
    let mut out = Vec::new();
    let mut acc: Vec<PmColumn> = Vec::new();
    fn go(
        t: ClassicalType,
        n: usize,
        groups: &[(usize, usize)],
        acc: &mut Vec<PmColumn>,
        emit: &mut dyn FnMut(&[PmColumn]),
    ) {
        let Some(&(h, k)) = groups.first() else {
            emit(acc);
            return;
        };
        let signs = signs_for(t, n, h);
        let mut counts = vec![0usize; signs.len()];
        compositions(k, &mut counts, 0, &mut |counts| {
            let base = acc.len();
            for (s, &c) in signs.iter().zip(counts) {
                for _ in 0..c {
                    acc.push(PmColumn::new(h, *s));
                }
            }
            go(t, n, &groups[1..], acc, emit);
            acc.truncate(base);
        });
    }
    for spin in spins {
        go(t, n, &groups, &mut acc, &mut |cols| {
            let p = PmDiagram::new(t, n, cols.to_vec(), spin, outer.color);
            if p.validate().is_ok() {
                out.push(p);
            }
        });
    }
    out.sort_by(|a, b| a.text().cmp(&b.text()).then_with(|| a.spin.cmp(&b.spin)));
    out.dedup();
    out
}

fn compositions(total: usize, counts: &mut Vec<usize>, k: usize, emit: &mut dyn FnMut(&[usize])) {
    if k + 1 == counts.len() {
        counts[k] = total;
        emit(counts);
        return;
    }
    for c in 0..=total {
        counts[k] = c;
        compositions(total - c, counts, k + 1, emit);
    }
    counts[k] = 0;
}

fn push_range(a: &mut Vec<u8>, lo: usize, hi: usize) {
    for i in lo..=hi {
        a.push(i as u8);
    }
}

fn d_color_string(a: &mut Vec<u8>, n: usize, color: Option<u8>) {
    if color == Some(2) {
        push_range(a, 1, n - 1);
    } else {
        push_range(a, 1, n - 2);
        a.push(n as u8);
    }
}

/// The string a = (a_1, …, a_l) with Φ(P) = f_{a_1} ⋯ f_{a_l} u.
pub fn phi_string(p: &PmDiagram) -> Vec<u8> {
    let (t, n) = (p.t, p.n);
    let mut a = Vec::new();
    for c in p.columns.iter().rev() {
        let o = c.outer as usize;
        match c.sign {
            Sign::Zero => push_range(&mut a, 1, n),
            Sign::Minus if t == ClassicalType::D && o == n => d_color_string(&mut a, n, p.color),
            Sign::Empty | Sign::Minus => push_range(&mut a, 1, c.inner()),
            _ => {}
        }
    }
    let minus = |a: &mut Vec<u8>, h: usize, spin: bool| match t {
        ClassicalType::C => {
            push_range(a, 1, n);
            for i in (h..n).rev() {
                a.push(i as u8);
            }
        }
        ClassicalType::B if spin => push_range(a, 1, n),
        ClassicalType::B => {
            push_range(a, 1, n);
            for i in (h..=n).rev() {
                a.push(i as u8);
            }
        }
        ClassicalType::D if h == n => d_color_string(a, n, p.color),
        ClassicalType::D if h + 1 == n => push_range(a, 1, n),
        ClassicalType::D => {
            push_range(a, 1, n);
            for i in (h..=n - 2).rev() {
                a.push(i as u8);
            }
        }
        ClassicalType::A => {}
    };
    if p.spin == Some(Sign::Minus) {
        minus(&mut a, n, true);
    }
    for c in &p.columns {
        if c.sign.has_minus() {
            minus(&mut a, c.outer as usize, false);
        }
    }
    a
}

/// Φ(P) inside a graph whose vertex `u` is the highest element of B(outer(P)).
pub fn phi_in_graph(g: &CrystalGraph, u: u32, p: &PmDiagram) -> Option<u32> {
    g.f_string(u, &phi_string(p))
}

/// The direct construction of Φ(P) as a tableau (types B and C, and type D
/// without height-n columns).
pub fn phi_direct(p: &PmDiagram) -> Result<Tableau, PmError> {
    let (t, n) = (p.t, p.n);
    match t {
        ClassicalType::A => return Err(PmError::Unsupported("type A")),
        ClassicalType::D if p.spin.is_some() || p.columns.iter().any(|c| c.outer as usize >= n) => {
            return Err(PmError::Unsupported("type D height-n columns"))
        }
        _ => {}
    }
    let mut spin = p.spin.map(|s| match s {
        Sign::Plus => SpinWord::highest(n),
        _ => SpinWord(SpinWord::highest(n).0 & !1),
    });
    let mut cols: Vec<Vec<Letter>> = Vec::new();
    for c in &p.columns {
        let o = c.outer as usize;
        if o == n && c.sign == Sign::Plus {
            cols.push((1..=n).map(Letter::plain).collect());
            continue;
        }
        let top_minus = c.sign.has_minus();
        let zero = c.sign == Sign::Zero;
        let rest = o - top_minus as usize - zero as usize;
        let mut col: Vec<Letter> = (2..=rest + 1).map(Letter::plain).collect();
        if zero {
            col.push(Letter::ZERO);
        }
        if top_minus {
            col.push(Letter::bar(1));
        }
        cols.push(col);
    }
    // Heights of the + signs to process, left to right, skipping height n.
    let mut pluses = Vec::new();
    for c in &p.columns {
        let h = match c.sign {
            Sign::Plus => c.outer as usize,
            Sign::PlusMinus => c.outer as usize - 1,
            _ => continue,
        };
        if h < n {
            pluses.push(h);
        }
    }
    // Cursor: column index (spin column is index 0 when present) and the
    // number of cells already passed from the top.
    let offset = spin.is_some() as usize;
    let mut col_idx = 0usize;
    let mut passed = 0usize;
    for h in pluses {
        loop {
            if col_idx >= cols.len() + offset {
                return Err(PmError::Inconsistent("ran out of cells"));
            }
            if col_idx < offset {
                if spin != Some(SpinWord(SpinWord::highest(n).0 & !1)) {
                    col_idx += 1;
                    passed = 0;
                    continue;
                }
                let mut w = SpinWord::highest(n);
                w.0 &= !(1 << h);
                spin = Some(w);
                col_idx += 1;
                passed = 0;
                break;
            }
            let col = &mut cols[col_idx - offset];
            if passed >= col.len() {
                col_idx += 1;
                passed = 0;
                continue;
            }
            let pos = col.len() - 1 - passed;
            if col[pos] == Letter::bar(1) {
                col[pos] = Letter::bar(h + 1);
                passed += 1;
                break;
            }
            if col[pos] == Letter::plain(2) && pos == 0 {
                let k = 1 + col.iter().take_while(|a| a.0 > 1).count();
                let repl: Vec<Letter> =
                    (1..=h).chain(h + 2..=k).map(Letter::plain).collect();
                col.splice(0..k - 1, repl);
                col_idx += 1;
                passed = 0;
                break;
            }
            passed += 1;
        }
    }
    Ok(Tableau { columns: cols, spin })
}

/// Φ and Φ⁻¹ tabulated over a whole classical graph.
#[derive(Clone, Debug, Default)]
pub struct PmLookup {
    by_vertex: HashMap<u32, PmDiagram>,
    by_diagram: HashMap<PmDiagram, u32>,
}

impl PmLookup {
    /// Tabulates Φ over every {1..n}-component of `g`.
    pub fn build(g: &CrystalGraph, t: ClassicalType, n: usize) -> Result<Self, PmError> {
        let classical: Vec<u8> = (1..=n as u8).collect();
        let mut out = PmLookup::default();
        for u in 0..g.len() as u32 {
            if !g.is_highest(u, &classical) {
                continue;
            }
            let labels: Vec<u32> = classical.iter().map(|&c| g.phi(u, c)).collect();
            let shape = Shape::from_labels(t, n, &labels)
                .ok_or(PmError::Inconsistent("mixed spin labels"))?;
            for p in enumerate_pm(t, n, &shape) {
                let v = phi_in_graph(g, u, &p).ok_or(PmError::Inconsistent("Φ string fails"))?;
                if out.by_vertex.insert(v, p.clone()).is_some() {
                    return Err(PmError::Inconsistent("two diagrams hit one vertex"));
                }
                out.by_diagram.insert(p, v);
            }
        }
        Ok(out)
    }

    pub fn diagram(&self, v: u32) -> Result<&PmDiagram, PmError> {
        self.by_vertex.get(&v).ok_or(PmError::NotFound)
    }

    pub fn vertex(&self, p: &PmDiagram) -> Result<u32, PmError> {
        self.by_diagram.get(p).copied().ok_or(PmError::NotFound)
    }

    pub fn len(&self) -> usize {
        self.by_vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_vertex.is_empty()
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.by_vertex.keys().copied().collect();
        v.sort_unstable();
        v
    }
}

/// The map 𝔖 on ±-diagrams of B^{r,s}.
pub fn involution_s(p: &PmDiagram, r: usize, s: usize) -> Result<PmDiagram, PmError> {
    if p.spin.is_some() || p.columns.iter().any(|c| c.sign == Sign::Zero) {
        return Err(PmError::Unsupported("spin or 0 columns"));
    }
    let mut out: Vec<PmColumn> = Vec::new();
    let tall = p.columns.iter().filter(|c| c.inner() >= 1).count();
    if tall > s {
        return Err(PmError::Inconsistent("more than s columns"));
    }
    for c in &p.columns {
        if c.inner() >= r {
            out.push(*c);
        }
    }
    for i in 0..r {
        let group: Vec<&PmColumn> = p.columns.iter().filter(|c| c.inner() == i).collect();
        let c_i = if i == 0 { s - tall } else { group.len() };
        if (r - i) % 2 == 1 {
            let plus = group.iter().filter(|c| c.sign == Sign::Plus).count();
            let minus = group.iter().filter(|c| c.sign == Sign::Minus).count();
            if plus + minus != c_i || plus + minus != group.len() {
                return Err(PmError::Inconsistent("expected a single sign above every column"));
            }
            out.extend((0..minus).map(|_| PmColumn::new(i + 1, Sign::Plus)));
            out.extend((0..plus).map(|_| PmColumn::new(i + 1, Sign::Minus)));
        } else {
            let pairs = group.iter().filter(|c| c.sign == Sign::PlusMinus).count();
            let empty = group.iter().filter(|c| c.sign == Sign::Empty).count();
            if group.len() != pairs + empty || pairs > c_i {
                return Err(PmError::Inconsistent("expected ∓ or nothing above every column"));
            }
            out.extend((0..c_i - pairs).map(|_| PmColumn::new(i + 2, Sign::PlusMinus)));
            if i > 0 {
                out.extend((0..pairs).map(|_| PmColumn::new(i, Sign::Empty)));
            }
        }
    }
    let q = PmDiagram::new(p.t, p.n, out, None, p.color);
    q.validate()?;
    Ok(q)
}

/// Doubling into a type-C diagram: every column twice, a spin column becomes
/// one full column, a 0-column becomes a + column and a − column.
pub fn double_pm(p: &PmDiagram) -> PmDiagram {
    let n = p.n;
    let mut cols = Vec::new();
    for c in &p.columns {
        if c.sign == Sign::Zero {
            cols.push(PmColumn::new(n, Sign::Plus));
            cols.push(PmColumn::new(n, Sign::Minus));
        } else {
            cols.push(*c);
            cols.push(*c);
        }
    }
    if let Some(s) = p.spin {
        cols.push(PmColumn::new(n, s));
    }
    PmDiagram::new(ClassicalType::C, n, cols, None, None)
}

/// Inverse of `double_pm` towards a diagram of type `target` (B or C).
pub fn halve_pm(p: &PmDiagram, target: ClassicalType) -> Result<PmDiagram, PmError> {
    let n = p.n;
    let mut counts: Vec<((u8, Sign), usize)> = Vec::new();
    for c in &p.columns {
        match counts.iter_mut().find(|(k, _)| *k == (c.outer, c.sign)) {
            Some((_, m)) => *m += 1,
            None => counts.push(((c.outer, c.sign), 1)),
        }
    }
    let mut cols = Vec::new();
    let (mut plus, mut minus) = (0usize, 0usize);
    for ((o, s), m) in counts {
        if o as usize == n && target == ClassicalType::B && matches!(s, Sign::Plus | Sign::Minus) {
            // a 0-column doubles to + and −, a spin column to one full column
            if s == Sign::Plus {
                plus = m;
            } else {
                minus = m;
            }
            continue;
        }
        if m % 2 == 1 {
            return Err(PmError::NotDoubled);
        }
        cols.extend((0..m / 2).map(|_| PmColumn::new(o as usize, s)));
    }
    let mut found = None;
    for zero in [false, true] {
        for spin in [None, Some(Sign::Plus), Some(Sign::Minus)] {
            let p_left = plus.checked_sub(zero as usize + (spin == Some(Sign::Plus)) as usize);
            let m_left = minus.checked_sub(zero as usize + (spin == Some(Sign::Minus)) as usize);
            let (Some(pl), Some(ml)) = (p_left, m_left) else { continue };
            if pl % 2 == 1 || ml % 2 == 1 {
                continue;
            }
            let mut c = cols.clone();
            c.extend((0..pl / 2).map(|_| PmColumn::new(n, Sign::Plus)));
            c.extend((0..ml / 2).map(|_| PmColumn::new(n, Sign::Minus)));
            if zero {
                c.push(PmColumn::new(n, Sign::Zero));
            }
            let q = PmDiagram::new(target, n, c, spin, None);
            if q.validate().is_ok() {
                if found.is_some() {
                    return Err(PmError::NotDoubled);
                }
                found = Some(q);
            }
        }
    }
    found.ok_or(PmError::NotDoubled)
}

pub fn is_doubled(p: &PmDiagram, target: ClassicalType) -> bool {
    halve_pm(p, target).is_ok()
}

/// (ℓ1, ℓ2, ℓ3) with the 0-column flag γ, for diagrams of outer shape sΛ_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignTriple {
    pub l1: usize,
    pub l2: usize,
    pub l3: usize,
    pub gamma: usize,
}

impl SignTriple {
    pub fn from_diagram(family: Family, p: &PmDiagram) -> Result<Self, PmError> {
        let n = p.n;
        if p.columns.iter().any(|c| c.outer as usize != n) {
            return Err(PmError::Invalid("triples need columns of height n"));
        }
        let count = |s| p.columns.iter().filter(|c| c.sign == s).count();
        match family {
            Family::C1 => Ok(SignTriple {
                l1: count(Sign::Plus),
                l2: count(Sign::Minus),
                l3: count(Sign::PlusMinus),
                gamma: 0,
            }),
            Family::D2 => Ok(SignTriple {
                l1: 2 * count(Sign::Plus) + (p.spin == Some(Sign::Plus)) as usize,
                l2: 2 * count(Sign::Minus) + (p.spin == Some(Sign::Minus)) as usize,
                l3: 2 * count(Sign::PlusMinus),
                gamma: count(Sign::Zero),
            }),
            _ => Err(PmError::Unsupported("triples exist for C1 and D2")),
        }
    }

    pub fn to_diagram(self, family: Family, n: usize) -> Result<PmDiagram, PmError> {
        let mut cols = Vec::new();
        let full = |k: usize, s: Sign, cols: &mut Vec<PmColumn>| {
            cols.extend((0..k).map(|_| PmColumn::new(n, s)))
        };
        let p = match family {
            Family::C1 => {
                full(self.l1, Sign::Plus, &mut cols);
                full(self.l2, Sign::Minus, &mut cols);
                full(self.l3, Sign::PlusMinus, &mut cols);
                PmDiagram::new(ClassicalType::C, n, cols, None, None)
            }
            Family::D2 => {
                if self.l3 % 2 == 1 || (self.l1 % 2 == 1 && self.l2 % 2 == 1) {
                    return Err(PmError::Invalid("malformed triple"));
                }
                full(self.l1 / 2, Sign::Plus, &mut cols);
                full(self.l2 / 2, Sign::Minus, &mut cols);
                full(self.l3 / 2, Sign::PlusMinus, &mut cols);
                full(self.gamma, Sign::Zero, &mut cols);
                let spin = if self.l1 % 2 == 1 {
                    Some(Sign::Plus)
                } else if self.l2 % 2 == 1 {
                    Some(Sign::Minus)
                } else {
                    None
                };
                PmDiagram::new(ClassicalType::B, n, cols, spin, None)
            }
            _ => return Err(PmError::Unsupported("triples exist for C1 and D2")),
        };
        p.validate()?;
        Ok(p)
    }
}

/// f_0 on triples.
pub fn triple_f0(family: Family, s: usize, t: SignTriple) -> Option<SignTriple> {
    let SignTriple { l1, l2, l3, gamma } = t;
    match family {
        Family::C1 => (l2 > 0).then(|| SignTriple { l1: l1 + 1, l2: l2 - 1, l3, gamma }),
        Family::D2 => {
            let sum = l1 + l2 + l3;
            if sum < s {
                Some(SignTriple { l1: l1 + 2, l2, l3, gamma: gamma - 1 })
            } else if l2 > 1 {
                Some(SignTriple { l1, l2: l2 - 2, l3, gamma: gamma + 1 })
            } else if l2 == 1 {
                Some(SignTriple { l1: l1 + 1, l2: 0, l3, gamma })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// e_0 on triples.
pub fn triple_e0(family: Family, s: usize, t: SignTriple) -> Option<SignTriple> {
    let SignTriple { l1, l2, l3, gamma } = t;
    match family {
        Family::C1 => (l1 > 0).then(|| SignTriple { l1: l1 - 1, l2: l2 + 1, l3, gamma }),
        Family::D2 => {
            let sum = l1 + l2 + l3;
            if sum < s {
                Some(SignTriple { l1, l2: l2 + 2, l3, gamma: gamma - 1 })
            } else if l1 > 1 {
                Some(SignTriple { l1: l1 - 2, l2, l3, gamma: gamma + 1 })
            } else if l1 == 1 {
                Some(SignTriple { l1: 0, l2: l2 + 1, l3, gamma })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// σ between the two spin KR crystals of type D: + and − columns (and the
/// spin column's sign) swap, ∓ stays, the color flips.
pub fn sigma_spin_d(p: &PmDiagram) -> PmDiagram {
    let flip = |s: Sign| match s {
        Sign::Plus => Sign::Minus,
        Sign::Minus => Sign::Plus,
        other => other,
    };
    let cols = p
        .columns
        .iter()
        .map(|c| if c.outer as usize == p.n { PmColumn { outer: c.outer, sign: flip(c.sign) } } else { *c })
        .collect();
    let color = p.color.map(|c| 3 - c);
    PmDiagram::new(p.t, p.n, cols, p.spin.map(flip), color)
}

/// Row lengths (outer, middle, inner) of a diagram without 0 or spin columns.
fn rows(p: &PmDiagram) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let top = p.columns.first().map_or(0, |c| c.outer as usize);
    let count = |f: &dyn Fn(&PmColumn) -> usize, h: usize| {
        p.columns.iter().filter(|c| f(c) >= h).count()
    };
    let outer = |c: &PmColumn| c.outer as usize;
    let mid = |c: &PmColumn| c.mid_key() / 2;
    let inner = |c: &PmColumn| c.inner();
    (
        (1..=top).map(|h| count(&outer, h)).collect(),
        (1..=top).map(|h| count(&mid, h)).collect(),
        (1..=top).map(|h| count(&inner, h)).collect(),
    )
}

fn from_rows(
    t: ClassicalType,
    n: usize,
    color: Option<u8>,
    outer: &[usize],
    mid: &[usize],
    inner: &[usize],
) -> Result<PmDiagram, PmError> {
    let width = outer.first().copied().unwrap_or(0);
    let conj = |rows: &[usize], j: usize| rows.iter().filter(|&&len| len >= j).count();
    let mut cols = Vec::new();
    for j in 1..=width {
        let (o, m, i) = (conj(outer, j), conj(mid, j), conj(inner, j));
        let sign = match (o - m, m - i) {
            (0, 0) => Sign::Empty,
            (0, 1) => Sign::Plus,
            (1, 0) => Sign::Minus,
            (1, 1) => Sign::PlusMinus,
            _ => return Err(PmError::Invalid("not a horizontal strip")),
        };
        cols.push(PmColumn::new(o, sign));
    }
    let p = PmDiagram::new(t, n, cols, None, color);
    Ok(p)
}

/// e_1 on the {3..n}-highest element indexed by (P, p), inner(P) = outer(p),
/// via the three-step pairing rule. `None` if e_1 annihilates.
pub fn e1_on_pair(big: &PmDiagram, small: &PmDiagram) -> Result<Option<(PmDiagram, PmDiagram)>, PmError> {
    let plain = |d: &PmDiagram| d.spin.is_none() && d.columns.iter().all(|c| c.sign != Sign::Zero);
    if !plain(big) || !plain(small) {
        return Err(PmError::Unsupported("spin or 0 columns"));
    }
    if big.inner_columns() != small.outer().columns || small.spin.is_some() {
        return Err(PmError::Inconsistent("inner(P) differs from outer(p)"));
    }
    let (cap_l, mu, mut lam) = rows(big);
    let (_, mut kappa, nu) = rows(small);
    let height = cap_l.len();
    let get = |v: &Vec<usize>, h: usize| v.get(h).copied().unwrap_or(0);
    // Sign positions (column x, row index h), 1-based x.
    let mut big_plus = Vec::new();
    let mut big_minus = Vec::new();
    let mut small_plus = Vec::new();
    let mut small_minus = Vec::new();
    for h in 0..height {
        for x in get(&lam, h) + 1..=get(&mu, h) {
            big_plus.push((x, h));
        }
        for x in get(&mu, h) + 1..=get(&cap_l, h) {
            big_minus.push((x, h));
        }
        for x in get(&nu, h) + 1..=get(&kappa, h) {
            small_plus.push((x, h));
        }
        for x in get(&kappa, h) + 1..=get(&lam, h) {
            small_minus.push((x, h));
        }
    }
    big_plus.sort_unstable();
    big_minus.sort_unstable();
    small_plus.sort_unstable();
    small_minus.sort_unstable();
    let mut bp_used = vec![false; big_plus.len()];
    let mut bm_used = vec![false; big_minus.len()];
    let mut sp_used = vec![false; small_plus.len()];
    let mut sm_used = vec![false; small_minus.len()];
    for (k, &(x, _)) in small_plus.iter().enumerate() {
        if let Some(j) = (0..big_plus.len()).find(|&j| !bp_used[j] && big_plus[j].0 <= x) {
            bp_used[j] = true;
            sp_used[k] = true;
        }
    }
    for (k, &(x, _)) in small_minus.iter().enumerate() {
        if let Some(j) = (0..big_minus.len()).rev().find(|&j| !bm_used[j] && big_minus[j].0 <= x) {
            bm_used[j] = true;
            sm_used[k] = true;
        }
    }
    for used in sp_used.iter_mut().filter(|u| !**u) {
        if let Some(j) = (0..small_minus.len()).find(|&j| !sm_used[j]) {
            sm_used[j] = true;
            *used = true;
        }
    }
    // A box that changes hands sits in column x; the partitions that move are
    // read off that column's heights.
    let col_height = |rows: &Vec<usize>, x: usize| rows.iter().filter(|&&len| len >= x).count();
    let mut mu = mu;
    if let Some(k) = (0..small_plus.len()).rev().find(|&k| !sp_used[k]) {
        let (x, h) = small_plus[k];
        let o = col_height(&lam, x);
        lam[o - 1] -= 1;
        kappa[h] -= 1;
    } else if let Some(j) = (0..big_minus.len()).find(|&j| !bm_used[j]) {
        let (x, h) = big_minus[j];
        let i = col_height(&lam, x);
        if lam.len() <= i {
            lam.resize(i + 1, 0);
        }
        lam[i] += 1;
        mu[h] += 1;
    } else {
        return Ok(None);
    }
    for v in [&mut lam, &mut kappa] {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    let p2 = from_rows(big.t, big.n, big.color, &cap_l, &mu, &lam)?;
    let q2 = from_rows(small.t, small.n, small.color, &lam, &kappa, &nu)?;
    p2.validate()?;
    q2.validate()?;
    Ok(Some((p2, q2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClassicalType::*;

    fn shape(cols: &[usize]) -> Shape {
        Shape::from_columns(cols.to_vec())
    }

    #[test]
    fn counts_for_one_box() {
        assert_eq!(enumerate_pm(C, 3, &shape(&[1])).len(), 3);
        assert_eq!(enumerate_pm(B, 3, &shape(&[1])).len(), 3);
        assert_eq!(enumerate_pm(C, 3, &Shape::empty()).len(), 1);
    }

    #[test]
    fn strings() {
        let minus = PmDiagram::new(C, 3, vec![PmColumn::new(2, Sign::Minus)], None, None);
        assert_eq!(phi_string(&minus), vec![1, 1, 2, 3, 2]);
        let zero = PmDiagram::new(B, 2, vec![PmColumn::new(2, Sign::Zero)], None, None);
        assert_eq!(phi_string(&zero), vec![1, 2]);
        let spin = PmDiagram::new(D, 4, vec![], Some(Sign::Minus), Some(1));
        assert_eq!(phi_string(&spin), vec![1, 2, 4]);
    }

    #[test]
    fn direct_construction() {
        let t = phi_direct(&PmDiagram::new(C, 3, vec![PmColumn::new(2, Sign::PlusMinus)], None, None)).unwrap();
        assert_eq!(t.label(3), "2,-2");
        let t = phi_direct(&PmDiagram::new(C, 3, vec![PmColumn::new(1, Sign::Minus)], None, None)).unwrap();
        assert_eq!(t.label(3), "-1");
        let t = phi_direct(&PmDiagram::new(C, 3, vec![PmColumn::new(2, Sign::Plus)], None, None)).unwrap();
        assert_eq!(t.label(3), "1,2");
    }

    #[test]
    fn s_map_examples() {
        let p = PmDiagram::new(
            C,
            3,
            vec![PmColumn::new(1, Sign::Plus), PmColumn::new(1, Sign::Minus)],
            None,
            None,
        );
        assert_eq!(involution_s(&p, 1, 2).unwrap(), p);
        let q = PmDiagram::new(C, 3, vec![PmColumn::new(1, Sign::Empty), PmColumn::new(1, Sign::Plus)], None, None);
        let expect = PmDiagram::new(C, 3, vec![PmColumn::new(1, Sign::Empty), PmColumn::new(1, Sign::Minus)], None, None);
        assert_eq!(involution_s(&q, 1, 2).unwrap(), expect);
    }

    #[test]
    fn doubling() {
        let p = PmDiagram::new(C, 2, vec![PmColumn::new(1, Sign::Minus)], None, None);
        let d = double_pm(&p);
        assert_eq!(d.columns, vec![PmColumn::new(1, Sign::Minus); 2]);
        assert_eq!(halve_pm(&d, C).unwrap(), p);
        let s = PmDiagram::new(B, 2, vec![], Some(Sign::Minus), None);
        assert_eq!(double_pm(&s).columns, vec![PmColumn::new(2, Sign::Minus)]);
        let z = PmDiagram::new(B, 2, vec![PmColumn::new(2, Sign::Zero)], None, None);
        assert_eq!(
            double_pm(&z).columns,
            vec![PmColumn::new(2, Sign::Plus), PmColumn::new(2, Sign::Minus)]
        );
        assert_eq!(halve_pm(&double_pm(&z), B).unwrap(), z);
        assert!(!is_doubled(&p, C));
    }

    #[test]
    fn triples() {
        let t = SignTriple { l1: 1, l2: 0, l3: 2, gamma: 0 };
        assert_eq!(triple_e0(Family::C1, 3, t), Some(SignTriple { l1: 0, l2: 1, l3: 2, gamma: 0 }));
        assert_eq!(triple_e0(Family::C1, 3, SignTriple { l1: 0, l2: 1, l3: 2, gamma: 0 }), None);
        let z = SignTriple { l1: 0, l2: 0, l3: 0, gamma: 1 };
        assert_eq!(triple_f0(Family::D2, 2, z), Some(SignTriple { l1: 2, l2: 0, l3: 0, gamma: 0 }));
        let d = z.to_diagram(Family::D2, 2).unwrap();
        assert_eq!(SignTriple::from_diagram(Family::D2, &d).unwrap(), z);
    }

    #[test]
    fn spin_sigma_flips() {
        let p = PmDiagram::new(D, 4, vec![PmColumn::new(4, Sign::PlusMinus)], None, Some(1));
        let q = sigma_spin_d(&p);
        assert_eq!(q.color, Some(2));
        assert_eq!(q.columns, p.columns);
        assert_eq!(sigma_spin_d(&q), p);
    }

    #[test]
    fn pair_rule_annihilates_highest() {
        let full = PmDiagram::new(C, 3, vec![PmColumn::new(1, Sign::Empty)], None, None);
        let top = PmDiagram::new(C, 2, vec![PmColumn::new(1, Sign::Empty)], None, None);
        assert_eq!(e1_on_pair(&full, &top).unwrap(), None);
    }
}

//! Letters, columns and Kashiwara–Nakashima tableaux for types A, B, C, D.
//!
//! Columns are stored bottom to top (French convention), so a column of
//! type C reads `i_1 ≺ i_2 ≺ …` from index 0 upward. A type-B tableau may
//! carry a spin column, drawn leftmost and acting as the last tensor factor.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::cartan::{ClassicalType, Shape, Weight};
use crate::crystal::{tensor_signature, Direction};

/// A letter: `i` for i, `-i` for ī, `0` for the type-B zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub i8);

impl Letter {
    pub const ZERO: Letter = Letter(0);

    pub fn plain(i: usize) -> Letter {
        Letter(i as i8)
    }

    pub fn bar(i: usize) -> Letter {
        Letter(-(i as i8))
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn weight(self, n: usize) -> Weight {
        let mut w = Weight::zero(n);
        if self.0 > 0 {
            w.0[self.index() - 1] = 2;
        } else if self.0 < 0 {
            w.0[self.index() - 1] = -2;
        }
        w
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableauError {
    ZeroOutsideB,
    LetterOutOfRange(Letter),
    ColorOutOfRange(usize),
    Parse(String),
    UnsupportedShape,
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauError::ZeroOutsideB => f.write_str("letter 0 only exists in type B"),
            TableauError::LetterOutOfRange(l) => write!(f, "letter {l} out of range"),
            TableauError::ColorOutOfRange(i) => write!(f, "color {i} out of range"),
            TableauError::Parse(s) => write!(f, "cannot parse {s:?}"),
            TableauError::UnsupportedShape => f.write_str("shape not supported for this type"),
        }
    }
}

fn letter_in_range(t: ClassicalType, n: usize, a: Letter) -> Result<(), TableauError> {
    if a.is_zero() {
        return if t == ClassicalType::B { Ok(()) } else { Err(TableauError::ZeroOutsideB) };
    }
    if a.index() > n || (t == ClassicalType::A && a.is_barred()) {
        return Err(TableauError::LetterOutOfRange(a));
    }
    Ok(())
}

/// Position of a letter in the type's chain; n and n̄ share a rank in type D.
pub fn letter_rank(t: ClassicalType, n: usize, a: Letter) -> i32 {
    let n = n as i32;
    let i = a.0 as i32;
    match (t, i.signum()) {
        (_, 1) => i,
        (ClassicalType::D, _) => 2 * n + i,
        (_, 0) => n + 1,
        _ => 2 * n + 2 + i,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LetterOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn compare_letters(
    t: ClassicalType,
    n: usize,
    a: Letter,
    b: Letter,
) -> Result<LetterOrder, TableauError> {
    letter_in_range(t, n, a)?;
    letter_in_range(t, n, b)?;
    if a == b {
        return Ok(LetterOrder::Equal);
    }
    Ok(match letter_rank(t, n, a).cmp(&letter_rank(t, n, b)) {
        Ordering::Less => LetterOrder::Less,
        Ordering::Greater => LetterOrder::Greater,
        Ordering::Equal => LetterOrder::Incomparable,
    })
}

fn precedes(t: ClassicalType, n: usize, a: Letter, b: Letter) -> bool {
    a != b && letter_rank(t, n, a) < letter_rank(t, n, b)
}

fn weakly_precedes(t: ClassicalType, n: usize, a: Letter, b: Letter) -> bool {
    a == b || precedes(t, n, a, b)
}

/// f_i on a single letter.
pub fn letter_f(t: ClassicalType, n: usize, i: usize, a: Letter) -> Option<Letter> {
    let x = a.0 as i32;
    let i = i as i32;
    let n_ = n as i32;
    if i < n_ || t == ClassicalType::A {
        if x == i {
            return Some(Letter((i + 1) as i8));
        }
        if t != ClassicalType::A && x == -(i + 1) {
            return Some(Letter(-i as i8));
        }
        return None;
    }
    match t {
        ClassicalType::C => (x == n_).then(|| Letter(-n_ as i8)),
        ClassicalType::B => match x {
            _ if x == n_ => Some(Letter::ZERO),
            0 => Some(Letter(-n_ as i8)),
            _ => None,
        },
        ClassicalType::D => {
            if x == n_ - 1 {
                Some(Letter(-n_ as i8))
            } else if x == n_ {
                Some(Letter(-(n_ - 1) as i8))
            } else {
                None
            }
        }
        ClassicalType::A => None,
    }
}

/// e_i on a single letter.
pub fn letter_e(t: ClassicalType, n: usize, i: usize, a: Letter) -> Option<Letter> {
    let x = a.0 as i32;
    let i = i as i32;
    let n_ = n as i32;
    if i < n_ || t == ClassicalType::A {
        if x == i + 1 {
            return Some(Letter(i as i8));
        }
        if t != ClassicalType::A && x == -i {
            return Some(Letter(-(i + 1) as i8));
        }
        return None;
    }
    match t {
        ClassicalType::C => (x == -n_).then_some(Letter(n_ as i8)),
        ClassicalType::B => match x {
            0 => Some(Letter(n_ as i8)),
            _ if x == -n_ => Some(Letter::ZERO),
            _ => None,
        },
        ClassicalType::D => {
            if x == -n_ {
                Some(Letter((n_ - 1) as i8))
            } else if x == -(n_ - 1) {
                Some(Letter(n_ as i8))
            } else {
                None
            }
        }
        ClassicalType::A => None,
    }
}

fn string_len(mut step: impl FnMut(Letter) -> Option<Letter>, mut a: Letter) -> u32 {
    let mut k = 0;
    while let Some(b) = step(a) {
        a = b;
        k += 1;
    }
    k
}

pub fn letter_eps(t: ClassicalType, n: usize, i: usize, a: Letter) -> u32 {
    string_len(|x| letter_e(t, n, i, x), a)
}

pub fn letter_phi(t: ClassicalType, n: usize, i: usize, a: Letter) -> u32 {
    string_len(|x| letter_f(t, n, i, x), a)
}

/// Spin word as a bitmask: bit k-1 set means `+` in position k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinWord(pub u32);

impl SpinWord {
    pub fn highest(n: usize) -> SpinWord {
        SpinWord((1u32 << n) - 1)
    }

    pub fn is_plus(self, k: usize) -> bool {
        self.0 >> (k - 1) & 1 == 1
    }

    pub fn minus_count(self, n: usize) -> u32 {
        n as u32 - (self.0 & ((1u32 << n) - 1)).count_ones()
    }

    pub fn weight(self, n: usize) -> Weight {
        Weight((1..=n).map(|k| if self.is_plus(k) { 1 } else { -1 }).collect())
    }

    pub fn signs(self, n: usize) -> String {
        (1..=n).map(|k| if self.is_plus(k) { '+' } else { '-' }).collect()
    }

    pub fn parse(s: &str) -> Option<SpinWord> {
        let mut bits = 0u32;
        for (k, c) in s.chars().enumerate() {
            match c {
                '+' => bits |= 1 << k,
                '-' => {}
                _ => return None,
            }
        }
        (!s.is_empty()).then_some(SpinWord(bits))
    }

    /// The KN spin column: i where `+`, ī where `−`, listed bottom to top.
    pub fn to_column(self, t: ClassicalType, n: usize) -> Vec<Letter> {
        let mut col: Vec<Letter> = (1..=n)
            .map(|k| if self.is_plus(k) { Letter::plain(k) } else { Letter::bar(k) })
            .collect();
        col.sort_by_key(|&a| letter_rank(t, n, a));
        col
    }
}

pub fn spin_f(t: ClassicalType, n: usize, i: usize, w: SpinWord) -> Option<SpinWord> {
    if i < n {
        (w.is_plus(i) && !w.is_plus(i + 1)).then(|| SpinWord(w.0 ^ (0b11 << (i - 1))))
    } else if t == ClassicalType::D {
        (w.is_plus(n - 1) && w.is_plus(n)).then(|| SpinWord(w.0 ^ (0b11 << (n - 2))))
    } else {
        w.is_plus(n).then(|| SpinWord(w.0 ^ (1 << (n - 1))))
    }
}

pub fn spin_e(t: ClassicalType, n: usize, i: usize, w: SpinWord) -> Option<SpinWord> {
    if i < n {
        (!w.is_plus(i) && w.is_plus(i + 1)).then(|| SpinWord(w.0 ^ (0b11 << (i - 1))))
    } else if t == ClassicalType::D {
        (!w.is_plus(n - 1) && !w.is_plus(n)).then(|| SpinWord(w.0 ^ (0b11 << (n - 2))))
    } else {
        (!w.is_plus(n)).then(|| SpinWord(w.0 ^ (1 << (n - 1))))
    }
}

/// Either kind of elementary crystal element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    Letter(Letter),
    Spin(SpinWord),
}

pub fn elementary_step(
    t: ClassicalType,
    n: usize,
    i: usize,
    x: Elementary,
    dir: Direction,
) -> Result<Option<Elementary>, TableauError> {
    let rank = crate::cartan::rank(t, n);
    if i == 0 || i > rank {
        return Err(TableauError::ColorOutOfRange(i));
    }
    Ok(match (x, dir) {
        (Elementary::Letter(a), Direction::F) => {
            letter_in_range(t, n, a)?;
            letter_f(t, n, i, a).map(Elementary::Letter)
        }
        (Elementary::Letter(a), Direction::E) => {
            letter_in_range(t, n, a)?;
            letter_e(t, n, i, a).map(Elementary::Letter)
        }
        (Elementary::Spin(w), Direction::F) => spin_f(t, n, i, w).map(Elementary::Spin),
        (Elementary::Spin(w), Direction::E) => spin_e(t, n, i, w).map(Elementary::Spin),
    })
}

fn elementary_eps_phi(t: ClassicalType, n: usize, i: usize, x: Elementary) -> (u32, u32) {
    match x {
        Elementary::Letter(a) => (letter_eps(t, n, i, a), letter_phi(t, n, i, a)),
        Elementary::Spin(w) => {
            (spin_e(t, n, i, w).is_some() as u32, spin_f(t, n, i, w).is_some() as u32)
        }
    }
}

pub type Column = Vec<Letter>;

/// Columns left to right, each bottom to top, plus an optional type-B spin
/// column drawn to the left of everything else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    pub columns: Vec<Column>,
    pub spin: Option<SpinWord>,
}

impl Tableau {
    pub fn new(columns: Vec<Column>) -> Self {
        Tableau { columns, spin: None }
    }

    pub fn boxes(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Canonical text: `1,2|3,-2`, spin column first as `+-+`.
    pub fn label(&self, n: usize) -> String {
        let mut parts: Vec<String> = Vec::new();
        if let Some(w) = self.spin {
            parts.push(w.signs(n));
        }
        for c in &self.columns {
            parts.push(c.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","));
        }
        parts.join("|")
    }

    pub fn parse(s: &str) -> Result<Tableau, TableauError> {
        let mut t = Tableau::default();
        if s.is_empty() {
            return Ok(t);
        }
        for (k, part) in s.split('|').enumerate() {
            if k == 0 && part.chars().all(|c| c == '+' || c == '-') && !part.is_empty() {
                t.spin = SpinWord::parse(part);
                continue;
            }
            let col: Result<Column, _> = part
                .split(',')
                .map(|x| x.trim().parse::<i8>().map(Letter).map_err(|_| TableauError::Parse(s.into())))
                .collect();
            t.columns.push(col?);
        }
        Ok(t)
    }

    pub fn weight(&self, t: ClassicalType, n: usize) -> Weight {
        let mut w = Weight::zero(n);
        for a in self.columns.iter().flatten() {
            w = w.add(&a.weight(n));
        }
        if let Some(s) = self.spin {
            w = w.add(&s.weight(n));
        }
        let _ = t;
        w
    }
}

/// Letters in reading order: rightmost column first, each bottom to top.
pub fn reading_word(t: &Tableau) -> Vec<Letter> {
    t.columns.iter().rev().flat_map(|c| c.iter().copied()).collect()
}

fn factors(t: &Tableau) -> Vec<Elementary> {
    let mut out: Vec<Elementary> = reading_word(t).into_iter().map(Elementary::Letter).collect();
    if let Some(w) = t.spin {
        out.push(Elementary::Spin(w));
    }
    out
}

fn put_factor(tab: &Tableau, pos: usize, x: Elementary) -> Tableau {
    let mut out = tab.clone();
    let mut k = pos;
    for c in out.columns.iter_mut().rev() {
        if k < c.len() {
            if let Elementary::Letter(a) = x {
                c[k] = a;
            }
            return out;
        }
        k -= c.len();
    }
    if let Elementary::Spin(w) = x {
        out.spin = Some(w);
    }
    out
}

/// (ε_i, φ_i) of a tableau via the signature rule on its reading word.
pub fn tableau_eps_phi(t: ClassicalType, n: usize, i: usize, tab: &Tableau) -> (u32, u32) {
    let fs: Vec<(u32, u32)> =
        factors(tab).into_iter().map(|x| elementary_eps_phi(t, n, i, x)).collect();
    let sig = tensor_signature(&fs);
    (sig.eps, sig.phi)
}

pub fn tableau_step(
    t: ClassicalType,
    n: usize,
    i: usize,
    tab: &Tableau,
    dir: Direction,
) -> Option<Tableau> {
    let fs = factors(tab);
    let pairs: Vec<(u32, u32)> = fs.iter().map(|&x| elementary_eps_phi(t, n, i, x)).collect();
    let sig = tensor_signature(&pairs);
    let pos = match dir {
        Direction::E => sig.e_pos?,
        Direction::F => sig.f_pos?,
    };
    let moved = elementary_step(t, n, i, fs[pos], dir).ok()??;
    Some(put_factor(tab, pos, moved))
}

/// Column condition for each type. Heights must not exceed n
/// (n-1 letters for type A's `n`).
pub fn validate_column(t: ClassicalType, n: usize, col: &[Letter]) -> bool {
    if col.iter().any(|&a| letter_in_range(t, n, a).is_err()) {
        return false;
    }
    let big = col.len();
    if big > n {
        return false;
    }
    for w in col.windows(2) {
        let ok = match t {
            ClassicalType::B if w[0].is_zero() && w[1].is_zero() => true,
            ClassicalType::D => !weakly_precedes(t, n, w[1], w[0]),
            _ => precedes(t, n, w[0], w[1]),
        };
        if !ok {
            return false;
        }
    }
    if t == ClassicalType::A {
        return true;
    }
    for (k0, a) in col.iter().enumerate() {
        if a.0 <= 0 {
            continue;
        }
        for (l0, b) in col.iter().enumerate() {
            if b.0 == -a.0 {
                let (k, l) = (k0 + 1, l0 + 1);
                if k + (big - l + 1) > a.index() {
                    return false;
                }
            }
        }
    }
    true
}

/// Type-B spin column: i and ī never both present.
pub fn validate_spin_column(col: &[Letter]) -> bool {
    col.iter().all(|a| !col.contains(&Letter(-a.0)) || a.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConfigKind {
    Pair,
    Odd,
    Even,
}

/// One witness of a configuration; indices are 1-based as in the definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Configuration {
    pub kind: ConfigKind,
    pub a: usize,
    pub b: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub score: usize,
}

/// All configuration witnesses of the column pair (u, v), u the left one.
pub fn configurations(t: ClassicalType, n: usize, u: &[Letter], v: &[Letter]) -> Vec<Configuration> {
    let mut out = Vec::new();
    if t == ClassicalType::A {
        return out;
    }
    let big = v.len().min(u.len());
    let i = |k: usize| u[k - 1];
    let j = |k: usize| v[k - 1];
    let nn = n as i8;
    let special = |x: Letter| match t {
        ClassicalType::B => x.0 == nn || x.0 == 0 || x.0 == -nn,
        ClassicalType::D => x.0 == nn || x.0 == -nn,
        _ => false,
    };
    let generic_b_max = if t == ClassicalType::C { n } else { n - 1 };
    for p in 1..=big {
        for q in p..=big {
            for r in q + 1..=big {
                for s in r..=big {
                    let a_ok = i(p).0 > 0 && j(s).0 == -i(p).0;
                    if !a_ok {
                        continue;
                    }
                    let a = i(p).index();
                    for (x, y) in [(i(q), i(r)), (j(q), j(r))] {
                        if x.0 > 0 && y.0 == -x.0 && x.index() >= a && x.index() <= generic_b_max {
                            out.push(Configuration {
                                kind: ConfigKind::Pair,
                                a,
                                b: x.index(),
                                p,
                                q,
                                r,
                                s,
                                score: (q - p) + (s - r),
                            });
                        }
                    }
                    if t == ClassicalType::C || a >= n {
                        continue;
                    }
                    if r == q + 1
                        && ((special(i(q)) && special(i(r))) || (special(j(q)) && special(j(r))))
                    {
                        out.push(Configuration {
                            kind: ConfigKind::Pair,
                            a,
                            b: n,
                            p,
                            q,
                            r,
                            s,
                            score: (q - p) + (s - r),
                        });
                    }
                    if t == ClassicalType::D {
                        let (jq, ir) = (j(q).0, i(r).0);
                        let odd = (r - q + 1) % 2 == 1;
                        let cross = (jq == nn && ir == -nn) || (jq == -nn && ir == nn);
                        let same = (jq == nn && ir == nn) || (jq == -nn && ir == -nn);
                        if odd && cross {
                            out.push(Configuration {
                                kind: ConfigKind::Odd,
                                a,
                                b: n,
                                p,
                                q,
                                r,
                                s,
                                score: s - p,
                            });
                        }
                        if !odd && same {
                            out.push(Configuration {
                                kind: ConfigKind::Even,
                                a,
                                b: n,
                                p,
                                q,
                                r,
                                s,
                                score: s - p,
                            });
                        }
                    }
                }
            }
        }
    }
    if t != ClassicalType::C {
        // (n,n): i_p against j_q with p < q.
        for p in 1..big {
            for q in p + 1..=big {
                let (x, y) = (i(p).0, j(q).0);
                let hit = match t {
                    ClassicalType::B => (x == nn || x == 0) && (y == 0 || y == -nn),
                    _ => (x == nn || x == -nn) && (y == nn || y == -nn),
                };
                if hit {
                    out.push(Configuration {
                        kind: ConfigKind::Pair,
                        a: n,
                        b: n,
                        p,
                        q,
                        r: q,
                        s: q,
                        score: 0,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Adjacency condition for columns u (left) and v (right).
pub fn validate_adjacent(t: ClassicalType, n: usize, u: &[Letter], v: &[Letter]) -> bool {
    if u.len() < v.len() {
        return false;
    }
    for k in 0..v.len() {
        if !weakly_precedes(t, n, u[k], v[k]) {
            return false;
        }
        if t == ClassicalType::B && u[k].is_zero() && v[k].is_zero() {
            return false;
        }
    }
    configurations(t, n, u, v).iter().all(|c| match c.kind {
        ConfigKind::Pair => c.score < c.b - c.a,
        ConfigKind::Odd | ConfigKind::Even => c.score < n - c.a,
    })
}

pub fn validate_tableau(t: ClassicalType, n: usize, tab: &Tableau) -> bool {
    if tab.spin.is_some() && t != ClassicalType::B {
        return false;
    }
    let mut cols: Vec<&[Letter]> = Vec::new();
    let spin_col;
    if let Some(w) = tab.spin {
        spin_col = w.to_column(t, n);
        if !validate_spin_column(&spin_col) {
            return false;
        }
        cols.push(&spin_col);
    }
    for c in &tab.columns {
        if c.is_empty() || !validate_column(t, n, c) {
            return false;
        }
        cols.push(c);
    }
    cols.windows(2).all(|w| validate_adjacent(t, n, w[0], w[1]))
}

/// Highest-weight tableau of the given shape.
pub fn highest_tableau(t: ClassicalType, n: usize, shape: &Shape) -> Result<Tableau, TableauError> {
    let mut columns = Vec::new();
    for &h in &shape.columns {
        let limit = match t {
            ClassicalType::A => n - 1,
            ClassicalType::D => n - 2,
            _ => n,
        };
        if h > limit {
            return Err(TableauError::UnsupportedShape);
        }
        columns.push((1..=h).map(Letter::plain).collect());
    }
    let spin = if shape.spin {
        if t != ClassicalType::B {
            return Err(TableauError::UnsupportedShape);
        }
        Some(SpinWord::highest(n))
    } else {
        None
    };
    Ok(Tableau { columns, spin })
}

fn alphabet(t: ClassicalType, n: usize) -> Vec<Letter> {
    let mut out: Vec<Letter> = (1..=n).map(Letter::plain).collect();
    if t == ClassicalType::A {
        return out;
    }
    if t == ClassicalType::B {
        out.push(Letter::ZERO);
    }
    out.extend((1..=n).rev().map(Letter::bar));
    out
}

/// All columns of height h passing `validate_column`.
pub fn enumerate_columns(t: ClassicalType, n: usize, h: usize) -> Vec<Column> {
    let letters = alphabet(t, n);
    let mut out = Vec::new();
    fn go(
        t: ClassicalType,
        n: usize,
        h: usize,
        letters: &[Letter],
        acc: &mut Column,
        out: &mut Vec<Column>,
    ) {
        if acc.len() == h {
            if validate_column(t, n, acc) {
                out.push(acc.clone());
            }
            return;
        }
        for &x in letters {
            if let Some(&last) = acc.last() {
                let ok = match t {
                    ClassicalType::B if x.is_zero() && last.is_zero() => true,
                    ClassicalType::D => !weakly_precedes(t, n, x, last),
                    _ => precedes(t, n, last, x),
                };
                if !ok {
                    continue;
                }
            }
            acc.push(x);
            go(t, n, h, letters, acc, out);
            acc.pop();
        }
    }
    go(t, n, h, &letters, &mut Vec::new(), &mut out);
    out
}

/// Every valid tableau of the shape, found by filtering all fillings.
pub fn enumerate_tableaux(t: ClassicalType, n: usize, shape: &Shape) -> Vec<Tableau> {
    let per_height: Vec<Vec<Column>> =
        shape.columns.iter().map(|&h| enumerate_columns(t, n, h)).collect();
    let spins: Vec<Option<SpinWord>> = if shape.spin {
        (0..1u32 << n).map(|b| Some(SpinWord(b))).collect()
    } else {
        vec![None]
    };
    let mut out = Vec::new();
    for spin in spins {
        let lead = spin.map(|w| w.to_column(t, n));
        let mut acc: Vec<Column> = Vec::new();
        fill(t, n, &per_height, lead.as_deref(), &mut acc, &mut |cols| {
            out.push(Tableau { columns: cols.to_vec(), spin })
        });
    }
    out.sort();
    out
}

fn fill(
    t: ClassicalType,
    n: usize,
    per_height: &[Vec<Column>],
    lead: Option<&[Letter]>,
    acc: &mut Vec<Column>,
    emit: &mut dyn FnMut(&[Column]),
) {
    let k = acc.len();
    if k == per_height.len() {
        emit(acc);
        return;
    }
    for c in &per_height[k] {
        let left: Option<&[Letter]> = acc.last().map(|v| v.as_slice()).or(lead);
        if let Some(u) = left {
            if !validate_adjacent(t, n, u, c) {
                continue;
            }
        }
        acc.push(c.clone());
        fill(t, n, per_height, lead, acc, emit);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ClassicalType::*;

    fn col(xs: &[i8]) -> Column {
        xs.iter().map(|&x| Letter(x)).collect()
    }

    #[test]
    fn letter_order() {
        assert_eq!(compare_letters(C, 3, Letter(3), Letter(-3)), Ok(LetterOrder::Less));
        assert_eq!(compare_letters(B, 2, Letter(2), Letter(0)), Ok(LetterOrder::Less));
        assert_eq!(compare_letters(D, 3, Letter(3), Letter(-3)), Ok(LetterOrder::Incomparable));
        assert_eq!(compare_letters(D, 3, Letter(-3), Letter(-2)), Ok(LetterOrder::Less));
        assert!(compare_letters(C, 3, Letter(0), Letter(1)).is_err());
    }

    #[test]
    fn letter_graphs() {
        assert_eq!(letter_f(C, 2, 2, Letter(2)), Some(Letter(-2)));
        assert_eq!(letter_f(B, 2, 2, Letter(2)), Some(Letter(0)));
        assert_eq!(letter_f(B, 2, 2, Letter(0)), Some(Letter(-2)));
        assert_eq!(letter_phi(B, 2, 2, Letter(2)), 2);
        assert_eq!(letter_f(D, 3, 3, Letter(2)), Some(Letter(-3)));
        assert_eq!(letter_f(D, 3, 2, Letter(2)), Some(Letter(3)));
        assert_eq!(letter_f(A, 3, 2, Letter(2)), Some(Letter(3)));
        assert_eq!(letter_f(A, 3, 2, Letter(3)), None);
    }

    #[test]
    fn spin_moves() {
        let w = SpinWord::highest(3);
        assert_eq!(spin_f(B, 3, 3, w), Some(SpinWord(0b011)));
        assert_eq!(spin_f(D, 3, 3, w), Some(SpinWord(0b001)));
        assert_eq!(spin_f(B, 3, 1, w), None);
        assert_eq!(spin_f(B, 3, 2, SpinWord(0b011)), Some(SpinWord(0b101)));
    }

    #[test]
    fn column_rules() {
        assert!(!validate_column(C, 2, &col(&[1, -1])));
        assert!(validate_column(C, 2, &col(&[2, -2])));
        assert!(validate_column(B, 2, &col(&[0, 0])));
        assert!(validate_column(D, 3, &col(&[3, -3])));
        assert!(!validate_column(C, 3, &col(&[2, 1])));
    }

    #[test]
    fn configuration_examples() {
        let cs = configurations(C, 3, &col(&[2, -2]), &col(&[3, -2]));
        assert_eq!(cs.len(), 1);
        assert_eq!((cs[0].a, cs[0].b, cs[0].score), (2, 2, 0));
        let cs = configurations(D, 3, &col(&[1, 2, 3]), &col(&[-3, -2, -1]));
        assert!(cs.iter().any(|c| c.kind == ConfigKind::Odd && c.score == 2 && c.p == 1));
        assert!(configurations(C, 3, &col(&[1, 2]), &col(&[-2, -1])).is_empty());
        assert!(!validate_adjacent(C, 3, &col(&[2, -2]), &col(&[3, -2])));
        assert!(!validate_adjacent(D, 3, &col(&[1, 2, 3]), &col(&[-3, -2, -1])));
        assert!(validate_adjacent(C, 2, &col(&[1, 2]), &col(&[1, 2])));
    }

    #[test]
    fn reading_and_labels() {
        let t = Tableau::new(vec![col(&[1, 2]), col(&[1, 3])]);
        assert_eq!(reading_word(&t), col(&[1, 3, 1, 2]));
        assert_eq!(t.label(3), "1,2|1,3");
        assert_eq!(Tableau::parse("1,2|1,3").unwrap(), t);
        let s = Tableau { columns: vec![col(&[-1])], spin: Some(SpinWord(0b01)) };
        assert_eq!(Tableau::parse(&s.label(2)).unwrap(), s);
    }

    #[test]
    fn tableau_operators() {
        let t = Tableau::new(vec![col(&[1, 2])]);
        assert_eq!(tableau_step(C, 2, 1, &t, Direction::E), None);
        assert_eq!(tableau_step(C, 2, 2, &t, Direction::F), Some(Tableau::new(vec![col(&[1, -2])])));
        assert!(validate_tableau(C, 2, &t));
        assert!(!validate_tableau(C, 3, &Tableau::new(vec![col(&[2, -2]), col(&[3, -2])])));
    }
}

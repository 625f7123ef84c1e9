use kr_core::cartan::{classical_simple_roots, rank, ClassicalType, Shape, Weight};
use kr_core::crystal::{generate_closure, ClassicalRules, CrystalGraph, Element, DEFAULT_VERTEX_BOUND};
use kr_core::pm::{e1_on_pair, enumerate_pm, phi_direct, phi_string, PmLookup, Sign};
use kr_core::tableaux::highest_tableau;
use ClassicalType::*;

fn graph(t: ClassicalType, n: usize, shape: &Shape) -> CrystalGraph {
    let tab = highest_tableau(t, n, shape).unwrap();
    let mut roots = vec![Weight::zero(n)];
    roots.extend(classical_simple_roots(t, n).unwrap());
    let colors: Vec<u8> = (1..=rank(t, n) as u8).collect();
    let w = tab.weight(t, n);
    generate_closure(&ClassicalRules { t, n }, vec![(Element::Tableau(tab), w)], &colors, &roots, DEFAULT_VERTEX_BOUND)
        .unwrap()
}

fn shapes(t: ClassicalType, n: usize) -> Vec<Shape> {
    let max_h = if t == D { n - 2 } else { n };
    let mut out = Vec::new();
    for h1 in 1..=max_h {
        for h2 in 0..=h1 {
            for h3 in 0..=h2 {
                let s = Shape::from_columns(vec![h1, h2, h3]);
                out.push(s);
            }
        }
    }
    if t == B {
        for h in 0..n {
            let mut s = Shape::from_columns(vec![h]);
            s.spin = true;
            out.push(s);
        }
    }
    out
}

fn inner_matches(t: ClassicalType, n: usize, g: &CrystalGraph, v: u32, want: &[i32]) -> bool {
    let w = &g.weight(v).0[1..n];
    if t == D {
        w.iter().zip(want).all(|(a, b)| a.abs() == b.abs())
    } else {
        w == want
    }
}

fn check_phi(t: ClassicalType, n: usize) {
    let branch: Vec<u8> = (2..=n as u8).collect();
    for shape in shapes(t, n) {
        let g = graph(t, n, &shape);
        let look = PmLookup::build(&g, t, n).unwrap_or_else(|e| panic!("{t:?}{n} {shape:?}: {e}"));
        let highest: Vec<u32> = (0..g.len() as u32).filter(|&v| g.is_highest(v, &branch)).collect();
        assert_eq!(look.vertices(), highest, "{t:?}{n} {shape:?}: Φ is not onto the branching set");
        for v in highest {
            let p = look.diagram(v).unwrap();
            assert!(inner_matches(t, n, &g, v, &p.inner_weight()), "{t:?}{n} {}: weight", p.text());
            if let Ok(tab) = phi_direct(p) {
                assert_eq!(tab.label(n), g.label(v), "{t:?}{n} direct construction of\n{}", p.text());
            }
        }
    }
}

fn check_pair_rule(t: ClassicalType, n: usize) {
    let top = if t == D { n - 2 } else { n };
    let upper: Vec<u8> = (3..=n as u8).collect();
    for shape in shapes(t, n) {
        if shape.spin || shape.columns.iter().any(|&h| h > top) {
            continue;
        }
        let g = graph(t, n, &shape);
        let u = 0;
        let mut seen = 0usize;
        for big in enumerate_pm(t, n, &shape) {
            if big.columns.iter().any(|c| c.sign == Sign::Zero) {
                continue;
            }
            let inner = Shape::from_columns(big.inner_columns());
            let hb = g.f_string(u, &phi_string(&big)).unwrap();
            for small in enumerate_pm(t, n - 1, &inner) {
                let lift: Vec<u8> = phi_string(&small).iter().map(|c| c + 1).collect();
                let v = g.f_string(hb, &lift).unwrap();
                assert!(g.is_highest(v, &upper));
                let psi = |a: &kr_core::pm::PmDiagram, b: &kr_core::pm::PmDiagram| {
                    let x = g.f_string(u, &phi_string(a)).unwrap();
                    let l: Vec<u8> = phi_string(b).iter().map(|c| c + 1).collect();
                    g.f_string(x, &l).unwrap()
                };
                let Ok(moved) = e1_on_pair(&big, &small) else {
                    assert!(small.columns.iter().any(|c| c.sign == Sign::Zero));
                    continue;
                };
                let got = moved.map(|(a, b)| psi(&a, &b));
                assert_eq!(got, g.e(v, 1), "{t:?}{n}\n{}\n--\n{}", big.text(), small.text());
                seen += 1;
            }
        }
        assert!(seen > 0);
    }
}

#[test]
fn phi_type_c() {
    check_phi(C, 2);
    check_phi(C, 3);
}

#[test]
fn phi_type_b() {
    check_phi(B, 2);
    check_phi(B, 3);
}

#[test]
fn phi_type_d() {
    check_phi(D, 4);
}

#[test]
fn pair_rule_type_c() {
    check_pair_rule(C, 3);
}

#[test]
fn pair_rule_type_b() {
    check_pair_rule(B, 3);
}

#[test]
fn pair_rule_type_d() {
    check_pair_rule(D, 5);
}

use kr_core::cartan::{classical_simple_roots, rank, weyl_dimension, ClassicalType, Shape, Weight};
use kr_core::crystal::{generate_closure, ClassicalRules, Element, DEFAULT_VERTEX_BOUND};
use kr_core::tableaux::{enumerate_tableaux, highest_tableau, validate_tableau, Tableau};

fn closure(t: ClassicalType, n: usize, shape: &Shape) -> Vec<Tableau> {
    let tab = highest_tableau(t, n, shape).unwrap();
    let mut roots = vec![Weight::zero(n)];
    roots.extend(classical_simple_roots(t, n).unwrap());
    let colors: Vec<u8> = (1..=rank(t, n) as u8).collect();
    let w = tab.weight(t, n);
    let g = generate_closure(
        &ClassicalRules { t, n },
        vec![(Element::Tableau(tab), w)],
        &colors,
        &roots,
        DEFAULT_VERTEX_BOUND,
    )
    .unwrap();
    let mut out: Vec<Tableau> = (0..g.len() as u32)
        .map(|v| match g.element(v) {
            Element::Tableau(t) => t.clone(),
            _ => unreachable!(),
        })
        .collect();
    out.sort();
    out
}

fn shapes(t: ClassicalType, n: usize) -> Vec<Shape> {
    let max_h = match t {
        ClassicalType::A => n - 1,
        ClassicalType::D => n - 2,
        _ => n,
    };
    let mut out = Vec::new();
    for h1 in 1..=max_h {
        for h2 in 0..=h1 {
            for h3 in 0..=h2 {
                out.push(Shape::from_columns(vec![h1, h2, h3]));
            }
        }
    }
    if t == ClassicalType::B {
        for h in 0..=n {
            let mut s = Shape::from_columns(vec![h]);
            s.spin = true;
            out.push(s);
        }
    }
    out
}

fn check(t: ClassicalType, n: usize) {
    for shape in shapes(t, n) {
        let closed = closure(t, n, &shape);
        let filtered = enumerate_tableaux(t, n, &shape);
        let dim = weyl_dimension(t, n, &shape.to_weight(t, n)).unwrap();
        assert_eq!(closed.len() as u128, dim, "{t:?}{n} {shape:?} closure size");
        let bad: Vec<String> = closed
            .iter()
            .filter(|x| !validate_tableau(t, n, x))
            .take(3)
            .map(|x| x.label(n))
            .collect();
        let extra: Vec<String> = filtered
            .iter()
            .filter(|x| closed.binary_search(x).is_err())
            .take(3)
            .map(|x| x.label(n))
            .collect();
        assert!(bad.is_empty() && extra.is_empty(),
            "{t:?}{n} {shape:?}: closure not valid {bad:?}; filter extra {extra:?}");
        assert_eq!(closed, filtered);
    }
}

#[test]
fn filter_matches_closure_type_a() {
    check(ClassicalType::A, 3);
    check(ClassicalType::A, 4);
}

#[test]
fn filter_matches_closure_type_c() {
    check(ClassicalType::C, 2);
    check(ClassicalType::C, 3);
}

#[test]
fn filter_matches_closure_type_b() {
    check(ClassicalType::B, 2);
    check(ClassicalType::B, 3);
}

#[test]
fn filter_matches_closure_type_d() {
    check(ClassicalType::D, 4);
    check(ClassicalType::D, 5);
}

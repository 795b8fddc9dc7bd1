//! Acceptance suite: the toolkit's verification gate. Each test checks one
//! headline guarantee end to end and prints a PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`). Every check is exact;
//! there are no tolerances anywhere.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use crepant_core::chenruan::{cr_algebra, cr_betti};
use crepant_core::exact::{CycloNumber, Rational};
use crepant_core::gb::{parse_polynomial, MonomialOrder, Polynomial, QuotientPresentation};
use crepant_core::isocheck::{extend_map, verify_iso, verify_isometry, MapFile};
use crepant_core::qcorr::{
    check_evaluation, quantum_algebra, symbolic_product, three_point, validate_chain, ChainConfig,
};
use crepant_core::toricring::{CurveClass, ToricCohomology};
use crepant_core::wps::{builtin_resolution, enumerate_gorenstein, twisted_sectors, Weights};
use crepant_core::GradedAlgebra;

fn pass(n: u32, msg: &str) {
    println!("criterion {n}: PASS - {msg}");
}

fn weights(v: &[u64]) -> Weights {
    Weights::new(v.to_vec()).unwrap()
}

fn one_one_n(n: u64) -> Weights {
    let mut w = vec![1u64; n as usize];
    w.push(n);
    weights(&w)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn cyc(n: i64, d: i64) -> CycloNumber {
    CycloNumber::from_rational(rat(n, d))
}

struct Pipeline {
    toric: ToricCohomology,
    gens: Vec<CurveClass>,
    cfg: ChainConfig,
}

fn pipeline(w: &Weights) -> Pipeline {
    let toric = ToricCohomology::builtin(w).unwrap();
    let gens = toric.curve_classes().unwrap();
    let cfg = validate_chain(&toric, &gens).unwrap();
    Pipeline { toric, gens, cfg }
}

fn fixture_map(name: &str) -> crepant_core::isocheck::GeneratorMap {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    let raw = std::fs::read_to_string(path).unwrap();
    let file: MapFile = serde_json::from_str(&raw).unwrap();
    file.to_generator_map().unwrap()
}

fn crepant_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_crepant"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_01_gorenstein_tables() {
    let expected: [(usize, Vec<Vec<u64>>); 3] = [
        (1, vec![vec![1, 1]]),
        (2, vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 3]]),
        (
            3,
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, 1, 3],
                vec![1, 1, 2, 2],
                vec![1, 1, 2, 4],
                vec![1, 1, 4, 6],
                vec![1, 2, 2, 5],
                vec![1, 2, 3, 6],
                vec![1, 2, 6, 9],
                vec![1, 3, 4, 4],
                vec![1, 3, 8, 12],
                vec![1, 4, 5, 10],
                vec![1, 6, 14, 21],
                vec![2, 3, 3, 4],
                vec![2, 3, 10, 15],
            ],
        ),
    ];
    for (dim, table) in &expected {
        let got: Vec<Vec<u64>> = enumerate_gorenstein(*dim)
            .iter()
            .map(|w| w.as_slice().to_vec())
            .collect();
        assert_eq!(&got, table, "dimension {dim}");
        // the CLI agrees element by element
        let out = crepant_bin(&["gorenstein", "enumerate", "--dim", &dim.to_string()]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let cli_table: Vec<Vec<u64>> = serde_json::from_value(v["weights"].clone()).unwrap();
        assert_eq!(&cli_table, table);
    }
    pass(1, "Gorenstein enumeration gives exactly 1/3/14 weight systems in dimensions 1/2/3");
}

#[test]
fn criterion_02_resolution_validity() {
    let mut cases: Vec<(Weights, usize)> = vec![(weights(&[1, 1, 2, 2]), 6), (weights(&[1, 3, 4, 4]), 12)];
    for n in 2..=6 {
        cases.push((one_one_n(n), 2 * n as usize));
    }
    for (w, cones) in cases {
        let (original, refined) = builtin_resolution(&w).unwrap();
        let report = crepant_core::wps::validate_resolution(&original, &refined).unwrap();
        assert!(report.smooth, "{w} smooth");
        assert!(report.crepant, "{w} crepant");
        assert_eq!(refined.max_cones.len(), cones, "{w} max cones");
    }
    pass(2, "built-in resolutions are smooth and crepant with 6 / 12 / 2n max cones");
}

#[test]
fn criterion_03_toric_presentations() {
    // P(1,1,2,2): mutual reduction against <h^2 + 1/4 e^2 - he, h^2 e>
    let t = ToricCohomology::builtin(&weights(&[1, 1, 2, 2])).unwrap();
    let vars = t.algebra.vars().to_vec();
    let reference = QuotientPresentation::new(
        vec![
            parse_polynomial("h^2 + 1/4*e^2 - h*e", &vars).unwrap(),
            parse_polynomial("h^2*e", &vars).unwrap(),
        ],
        MonomialOrder::GrevLex,
    );
    for g in reference.generators() {
        assert!(t.algebra.presentation().contains(g));
    }
    for g in t.algebra.presentation().generators() {
        assert!(reference.contains(g));
    }

    // P(1,3,4,4): every one of the 14 reference generators reduces to 0,
    // the reduced bases agree, and the staircase is exactly the 12
    // reference monomials
    let t = ToricCohomology::builtin(&weights(&[1, 3, 4, 4])).unwrap();
    let vars = t.algebra.vars().to_vec();
    let listed = [
        "3*h*e4",
        "e1*e3",
        "e1*e4",
        "e2*e4",
        "e3*e4",
        "e1^2 - 10*h*e1 - 4*h*e2 - 2*h*e3 + 24*h^2",
        "e1*e2 + 3*h*e1 + 2*h*e2 + h*e3 - 12*h^2",
        "e2^2 - 6*h*e1 - 12*h*e2 - 2*h*e3 + 24*h^2",
        "e2*e3 + 3*h*e1 + 6*h*e2 + h*e3 - 12*h^2",
        "e3^2 - 6*h*e1 - 12*h*e2 - 14*h*e3 + 24*h^2",
        "16*h^2*e1",
        "16*h^2*e2",
        "16*h^2*e3",
        "16*h^3 - 1/27*e4^3",
    ];
    for g in listed {
        let p = parse_polynomial(g, &vars).unwrap();
        assert!(t.algebra.presentation().contains(&p), "{g}");
    }
    let reference = QuotientPresentation::new(
        listed
            .iter()
            .map(|g| parse_polynomial(g, &vars).unwrap())
            .collect(),
        MonomialOrder::GrevLex,
    );
    assert_eq!(reference.groebner(), t.algebra.presentation().groebner());
    assert_eq!(
        t.algebra.labels(),
        &["1", "h", "e1", "e2", "e3", "e4", "h^2", "h*e1", "h*e2", "h*e3", "e4^2", "h^3"]
    );

    // P(1,...,1,n): <h^n + (-1)^n (e/n)^n, he>
    for n in 2..=6u64 {
        let t = ToricCohomology::builtin(&one_one_n(n)).unwrap();
        let vars = t.algebra.vars().to_vec();
        let sign = if n % 2 == 0 { "+" } else { "-" };
        let reference = QuotientPresentation::new(
            vec![
                parse_polynomial(&format!("h^{n} {sign} 1/{}*e^{n}", n.pow(n as u32)), &vars)
                    .unwrap(),
                parse_polynomial("h*e", &vars).unwrap(),
            ],
            MonomialOrder::GrevLex,
        );
        assert_eq!(reference.groebner(), t.algebra.presentation().groebner(), "n={n}");
    }
    pass(3, "toric presentations match the reference ideals exactly (14 generators for P(1,3,4,4), 12-element staircase)");
}

#[test]
fn criterion_04_degree_functional() {
    let mut cases: Vec<Weights> = vec![weights(&[1, 1, 2, 2]), weights(&[1, 3, 4, 4])];
    for n in 2..=6 {
        cases.push(one_one_n(n));
    }
    for w in cases {
        let t = ToricCohomology::builtin(&w).unwrap();
        let n = t.refined.dim;
        let h = t.h_vector();
        let mut hn = h.clone();
        for _ in 1..n {
            hn = t.algebra.mul_vec(&hn, &h);
        }
        let prod: u64 = w.as_slice().iter().product();
        assert_eq!(
            t.algebra.integrate(&hn).unwrap(),
            cyc(1, prod as i64),
            "deg(h^n) for {w}"
        );
        // cross-cone consistency: the product of the divisors of every max
        // cone integrates to exactly 1
        for cone in &t.refined.max_cones {
            let mut prod_poly = Polynomial::one(t.algebra.vars());
            for &ri in cone {
                prod_poly = prod_poly.mul(t.divisor_class(ri));
            }
            let coords = t.algebra.expand(&prod_poly).unwrap();
            assert_eq!(
                t.algebra.integrate(&coords).unwrap(),
                CycloNumber::one(),
                "{w} cone {cone:?}"
            );
        }
    }
    pass(4, "deg(h^3) = 1/4 for P(1,1,2,2) and deg(h^n) = 1/prod(w) for all built-ins, consistent across all max cones");
}

#[test]
fn criterion_05_mrho_generators() {
    // P(1,1,2,2): PD = 2he
    let p = pipeline(&weights(&[1, 1, 2, 2]));
    let expect = |t: &ToricCohomology, src: &str| {
        let poly = parse_polynomial(src, &t.algebra.vars().to_vec()).unwrap();
        t.algebra.expand(&poly).unwrap()
    };
    assert_eq!(p.gens.len(), 1);
    assert_eq!(p.gens[0].pd, expect(&p.toric, "2*h*e"));

    // P(1,3,4,4): 4he1, 4he2, 4he3, -1/3 e4^2
    let p = pipeline(&weights(&[1, 3, 4, 4]));
    assert_eq!(p.gens.len(), 4);
    for (k, src) in ["4*h*e1", "4*h*e2", "4*h*e3", "-1/3*e4^2"].iter().enumerate() {
        assert_eq!(p.gens[k].pd, expect(&p.toric, src), "{src}");
    }

    // P(1,...,1,n): (h - e/n)^{n-2} e
    for n in 2..=6u64 {
        let p = pipeline(&one_one_n(n));
        assert_eq!(p.gens.len(), 1, "n={n}");
        let src = format!("(h - 1/{n}*e)^{} * e", n - 2);
        assert_eq!(p.gens[0].pd, expect(&p.toric, &src), "n={n}");
    }
    pass(5, "M_rho generators have the exact Poincaré duals 2he; 4he1..4he3, -1/3 e4^2; (h - e/n)^(n-2) e");
}

#[test]
fn criterion_06_chain_detection() {
    let p = pipeline(&weights(&[1, 3, 4, 4]));
    assert_eq!(p.cfg.chain, vec![0, 1, 2]);
    assert_eq!(p.cfg.isolated, vec![3]);
    let cartan = [[-2i64, 1, 0], [1, -2, 1], [0, 1, -2]];
    for (a, &ga) in p.cfg.chain.iter().enumerate() {
        for (b, &dual) in p.cfg.chain_duals.iter().enumerate() {
            assert_eq!(
                p.cfg.intersections[ga][dual],
                rat(cartan[a][b], 1),
                "({a},{b})"
            );
        }
        // the chain pairs to zero with the isolated divisor e4
        assert_eq!(p.cfg.intersections[ga][3], rat(0, 1));
    }
    assert_eq!(p.cfg.intersections[3][0], rat(0, 1));
    pass(6, "the intersection matrix for P(1,3,4,4) is the negated A_3 Cartan pattern with Gamma_4 isolated");
}

/// The six quantum products of the resolution of P(1,3,4,4), as formal
/// sub-chain coefficient lists. Keys are (mu, nu), 0-based inclusive.
fn reference_1344_tables() -> Vec<((&'static str, &'static str), Vec<(&'static str, i64, Vec<((usize, usize), i64)>)>)> {
    let q1 = (0, 0);
    let q2 = (1, 1);
    let q3 = (2, 2);
    let q12 = (0, 1);
    let q23 = (1, 2);
    let q123 = (0, 2);
    vec![
        (
            ("e1", "e1"),
            vec![
                ("h^2", -24, vec![]),
                ("h*e1", 10, vec![(q1, 16), (q12, 4), (q123, 4)]),
                ("h*e2", 4, vec![(q2, 4), (q12, 4), (q23, 4), (q123, 4)]),
                ("h*e3", 2, vec![(q23, 4), (q123, 4)]),
            ],
        ),
        (
            ("e1", "e2"),
            vec![
                ("h^2", 12, vec![]),
                ("h*e1", -3, vec![(q1, -8), (q12, 4)]),
                ("h*e2", -2, vec![(q2, -8), (q12, 4), (q23, -4)]),
                ("h*e3", -1, vec![(q23, -4)]),
            ],
        ),
        (
            ("e1", "e3"),
            vec![
                ("h*e1", 0, vec![(q12, -4), (q123, 4)]),
                ("h*e2", 0, vec![(q2, 4), (q12, -4), (q23, -4), (q123, 4)]),
                ("h*e3", 0, vec![(q23, -4), (q123, 4)]),
            ],
        ),
        (
            ("e2", "e2"),
            vec![
                ("h^2", -24, vec![]),
                ("h*e1", 6, vec![(q1, 4), (q12, 4)]),
                ("h*e2", 12, vec![(q2, 16), (q12, 4), (q23, 4)]),
                ("h*e3", 2, vec![(q3, 4), (q23, 4)]),
            ],
        ),
        (
            ("e2", "e3"),
            vec![
                ("h^2", 12, vec![]),
                ("h*e1", -3, vec![(q12, -4)]),
                ("h*e2", -6, vec![(q2, -8), (q12, -4), (q23, 4)]),
                ("h*e3", -1, vec![(q3, -8), (q23, 4)]),
            ],
        ),
        (
            ("e3", "e3"),
            vec![
                ("h^2", -24, vec![]),
                ("h*e1", 6, vec![(q12, 4), (q123, 4)]),
                ("h*e2", 12, vec![(q2, 4), (q12, 4), (q23, 4), (q123, 4)]),
                ("h*e3", 14, vec![(q3, 16), (q23, 4), (q123, 4)]),
            ],
        ),
    ]
}

#[test]
fn criterion_07_quantum_symbolic_tables() {
    let p = pipeline(&weights(&[1, 3, 4, 4]));
    let alg = &p.toric.algebra;
    let idx = |l: &str| alg.labels().iter().position(|x| x == l).unwrap();
    for ((left, right), rows) in reference_1344_tables() {
        let sym = symbolic_product(&p.toric, &p.cfg, &p.gens, idx(left), idx(right)).unwrap();
        let mut expected: Vec<(Rational, BTreeMap<(usize, usize), Rational>)> =
            vec![(rat(0, 1), BTreeMap::new()); alg.dim()];
        for (label, constant, qterms) in rows {
            let k = idx(label);
            expected[k].0 = rat(constant, 1);
            for (sub, c) in qterms {
                expected[k].1.insert(sub, rat(c, 1));
            }
        }
        for (k, coeff) in sym.iter().enumerate() {
            assert_eq!(coeff.constant, expected[k].0, "{left}*{right} @ {}", alg.label(k));
            assert_eq!(coeff.qterms, expected[k].1, "{left}*{right} @ {}", alg.label(k));
        }
    }

    // P(1,1,2,2): e*e = -4h^2 + (4 + 8 q/(1-q)) he
    let p = pipeline(&weights(&[1, 1, 2, 2]));
    let alg = &p.toric.algebra;
    let idx = |l: &str| alg.labels().iter().position(|x| x == l).unwrap();
    let e = idx("e");
    let sym = symbolic_product(&p.toric, &p.cfg, &p.gens, e, e).unwrap();
    assert_eq!(sym[idx("h^2")].constant, rat(-4, 1));
    assert!(sym[idx("h^2")].qterms.is_empty());
    assert_eq!(sym[idx("h*e")].constant, rat(4, 1));
    assert_eq!(
        sym[idx("h*e")].qterms,
        BTreeMap::from([((0usize, 0usize), rat(8, 1))])
    );

    // the quantum presentation at symbolic q:
    // h^2 e = 0 and h^2 + 1/4 e^2 - he - (2q/(1-q)) he = 0 under the star
    // product. Combine the symbolic tables linearly and check cancellation.
    let h = idx("h");
    let sym_hh = symbolic_product(&p.toric, &p.cfg, &p.gens, h, h).unwrap();
    let sym_he = symbolic_product(&p.toric, &p.cfg, &p.gens, h, e).unwrap();
    // no quantum corrections on h-products
    for c in sym_hh.iter().chain(sym_he.iter()) {
        assert!(c.qterms.is_empty());
    }
    for k in 0..alg.dim() {
        // constant part: h*h + 1/4 e*e - h*e
        let const_part =
            &sym_hh[k].constant + &(&rat(1, 4) * &sym[k].constant) - &sym_he[k].constant;
        // coefficient of q/(1-q): 1/4 * (e*e)-term - 2 * (h*e constant)
        let q_part = sym[k]
            .qterms
            .get(&(0, 0))
            .cloned()
            .unwrap_or_else(|| rat(0, 1))
            * rat(1, 4)
            - rat(2, 1) * &sym_he[k].constant;
        assert_eq!(const_part, rat(0, 1), "constant part at {}", alg.label(k));
        assert_eq!(q_part, rat(0, 1), "q-part at {}", alg.label(k));
        // h^2 e = h * (h*e) has no correction and vanishes in degree 6?
        // (checked implicitly: sym_he has empty qterms and the classical
        // relation h^2 e = 0 holds in the algebra)
    }
    pass(7, "all six P(1,3,4,4) quantum products and the P(1,1,2,2) product match the reference sub-chain tables term by term");
}

#[test]
fn criterion_08_main_isomorphisms() {
    let p = pipeline(&weights(&[1, 3, 4, 4]));
    let cr = cr_algebra(&weights(&[1, 3, 4, 4])).unwrap();
    let i = CycloNumber::i();
    let mi = -&CycloNumber::i();

    let cases = [
        ("ri.json", vec![i.clone(), i.clone(), i.clone(), CycloNumber::zero()]),
        ("ri2.json", vec![mi.clone(), mi.clone(), mi, CycloNumber::zero()]),
    ];
    let mut matrices = Vec::new();
    for (fixture, q) in &cases {
        let map = fixture_map(fixture);
        let quantum = quantum_algebra(&p.toric, &p.cfg, &p.gens, q).unwrap();
        let m = extend_map(&quantum, &cr, &map).unwrap();
        let iso = verify_iso(&quantum, &cr, &m).unwrap();
        assert!(iso.passed(), "{fixture}: {iso:?}");
        let isometry = verify_isometry(&quantum, &cr, &m).unwrap();
        assert!(isometry.passed, "{fixture} isometry");
        matrices.push(m);
    }
    // negative control: the same matrices fail against the uncorrected ring
    for (k, m) in matrices.iter().enumerate() {
        let report = verify_iso(&p.toric.algebra, &cr, m).unwrap();
        assert!(!report.passed(), "matrix {k} must fail classically");
        assert!(report
            .violations
            .iter()
            .any(|v| v.left.starts_with('e') && v.right.starts_with('e')));
    }
    pass(8, "matrices (ri)/(ri2) are ring isomorphisms and isometries at (i,i,i,0)/(-i,-i,-i,0) and fail against the uncorrected ring");
}

#[test]
fn criterion_09_p1122_map() {
    let p = pipeline(&weights(&[1, 1, 2, 2]));
    let cr = cr_algebra(&weights(&[1, 1, 2, 2])).unwrap();
    let map = fixture_map("p1122.json");

    // passes at q = -1 (source is the Chen-Ruan side)
    let quantum = quantum_algebra(&p.toric, &p.cfg, &p.gens, &[CycloNumber::from_int(-1)]).unwrap();
    let m = extend_map(&cr, &quantum, &map).unwrap();
    assert!(verify_iso(&cr, &quantum, &m).unwrap().passed());

    // q = 1 is a pole, rejected both in the library and by the CLI
    assert!(matches!(
        check_evaluation(&p.cfg, &[CycloNumber::one()]),
        Err(crepant_core::qcorr::QcorrError::Pole(_))
    ));
    let out = crepant_bin(&["quantum", "--weights", "1,1,2,2", "--q", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "pole");

    // q = i fails verification
    let quantum_i = quantum_algebra(&p.toric, &p.cfg, &p.gens, &[CycloNumber::i()]).unwrap();
    let failed = match extend_map(&cr, &quantum_i, &map) {
        Err(_) => true,
        Ok(m) => !verify_iso(&cr, &quantum_i, &m).unwrap().passed(),
    };
    assert!(failed);
    pass(9, "H -> h, E -> (i/2)e passes at q = -1, q = 1 is rejected as a pole, q = i fails verification");
}

#[test]
fn criterion_10_p11n_family() {
    for n in 2..=6u64 {
        let w = one_one_n(n);
        let p = pipeline(&w);
        let cr = cr_algebra(&w).unwrap();
        let quantum = quantum_algebra(&p.toric, &p.cfg, &p.gens, &[CycloNumber::zero()]).unwrap();
        let map = crepant_core::isocheck::GeneratorMap {
            source_vars: vec!["H".into(), "E1".into()],
            matrix: vec![
                vec![CycloNumber::one(), CycloNumber::zero()],
                vec![
                    CycloNumber::zero(),
                    &(-&CycloNumber::root_of_unity(1, 2 * n)) * &cyc(1, n as i64),
                ],
            ],
        };
        let m = extend_map(&cr, &quantum, &map).unwrap();
        assert!(verify_iso(&cr, &quantum, &m).unwrap().passed(), "n={n}");
        // isometry status is reported (it holds for this family)
        assert!(verify_isometry(&cr, &quantum, &m).unwrap().passed, "n={n}");
    }
    pass(10, "H -> h, E1 -> -exp(i pi/n) e/n is a ring isomorphism for n = 2..6 at q = 0");
}

#[test]
fn criterion_11_property_suites() {
    // (a) quantum ring axioms at 20 random exact off-pole evaluations per family
    let mut seed = 0x3c6ef372fe94f82bu64;
    let mut next = move || {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed
    };
    for w in [weights(&[1, 3, 4, 4]), weights(&[1, 1, 2, 2])] {
        let p = pipeline(&w);
        let alg = &p.toric.algebra;
        let chain_len = p.cfg.chain.len();
        let mut tested = 0;
        while tested < 20 {
            let mut q = vec![CycloNumber::zero(); p.gens.len()];
            for l in 0..chain_len {
                let num = (next() % 11) as i64 - 5;
                let den = (next() % 6) as i64 + 2;
                q[p.cfg.chain[l]] = cyc(num, den);
            }
            if check_evaluation(&p.cfg, &q).is_err() {
                continue;
            }
            tested += 1;
            let quantum = quantum_algebra(&p.toric, &p.cfg, &p.gens, &q).unwrap();
            let dim = alg.dim();
            for i in 0..dim {
                for j in i..dim {
                    assert_eq!(
                        quantum.product_of_basis(i, j),
                        quantum.product_of_basis(j, i)
                    );
                    for (k, c) in quantum.product_of_basis(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            assert_eq!(
                                quantum.degrees()[k],
                                quantum.degrees()[i] + quantum.degrees()[j]
                            );
                        }
                    }
                    for k in j..dim {
                        let ij = quantum.product_of_basis(i, j).to_vec();
                        let jk = quantum.product_of_basis(j, k).to_vec();
                        let left = quantum.mul_vec(&ij, &quantum.basis_vector(k));
                        let right = quantum.mul_vec(&quantum.basis_vector(i), &jk);
                        assert_eq!(left, right, "{w} associativity ({i},{j},{k})");
                    }
                }
            }
        }
    }

    // (b) Gram nonsingularity and the additive McKay dimension match
    let mut builtins: Vec<Weights> = vec![weights(&[1, 1, 2, 2]), weights(&[1, 3, 4, 4])];
    for n in 2..=6 {
        builtins.push(one_one_n(n));
    }
    for w in &builtins {
        let t = ToricCohomology::builtin(w).unwrap();
        assert!(t.algebra.gram().unwrap().is_nonsingular(), "{w} toric Gram");
        let cr: GradedAlgebra = cr_algebra(w).unwrap();
        assert!(cr.gram().unwrap().is_nonsingular(), "{w} CR Gram");
        assert_eq!(cr.dim(), t.algebra.dim(), "{w} dim CR = dim Z");
        assert_eq!(cr.dim(), cr_betti(w).unwrap().total_dim(), "{w} Betti total");
    }

    // (c) normal-form idempotence on the P(1,3,4,4) presentation
    let t = ToricCohomology::builtin(&weights(&[1, 3, 4, 4])).unwrap();
    let vars = t.algebra.vars().to_vec();
    let q = t.algebra.presentation();
    for src in [
        "e1^2*e2 - 3*h*e3 + 7",
        "(h + e1 + e4)^3",
        "e4^3 - 16*27*h^3",
        "h*e1*e2*e3*e4",
    ] {
        let poly = parse_polynomial(src, &vars).unwrap();
        let nf = q.normal_form(&poly);
        assert_eq!(q.normal_form(&nf), nf, "{src}");
    }

    // (d) age integrality for every enumerated Gorenstein system, dims 1..3
    for dim in 1..=3 {
        for w in enumerate_gorenstein(dim) {
            for sector in twisted_sectors(&w) {
                assert!(sector.age.is_integer(), "{w} gamma={}", sector.gamma);
            }
        }
    }

    // (e) closed form vs truncated series at q = 1/2, tail-bounded exactly
    let p = pipeline(&weights(&[1, 3, 4, 4]));
    let half = vec![cyc(1, 2), cyc(1, 2), cyc(1, 2), CycloNumber::zero()];
    let deg2: Vec<Vec<CycloNumber>> = (0..3).map(|j| p.toric.e_vector(j)).collect();
    for a in &deg2 {
        for b in &deg2 {
            for c in &deg2 {
                let psi = three_point(&p.toric, &p.cfg, &p.gens, a, b, c).unwrap();
                let closed = psi.evaluate(&p.cfg, &half).unwrap();
                let truncated = psi.truncated_series(&p.cfg, &half, 50).unwrap();
                let tail = psi.tail(&p.cfg, &half, 50).unwrap();
                assert_eq!(closed, &truncated + &tail);
            }
        }
    }
    let p = pipeline(&weights(&[1, 1, 2, 2]));
    let e = p.toric.e_vector(0);
    let psi = three_point(&p.toric, &p.cfg, &p.gens, &e, &e, &e).unwrap();
    let half = vec![cyc(1, 2)];
    let closed = psi.evaluate(&p.cfg, &half).unwrap();
    let truncated = psi.truncated_series(&p.cfg, &half, 50).unwrap();
    let tail = psi.tail(&p.cfg, &half, 50).unwrap();
    assert_eq!(closed, &truncated + &tail);
    assert!(!tail.is_zero());

    pass(11, "ring axioms at 20 random evaluations, Gram nonsingularity, McKay dimensions, normal-form idempotence, age integrality, and series/closed-form agreement all hold");
}

//! Verification suites shared by the CLI `verify` command and the
//! acceptance tests. Each case records a pass flag and a short detail line.

use std::collections::{BTreeSet, VecDeque};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{polytopes_equal, Face};
use crate::instances::{
    gz_instance, phi_matrix, phi_shift, sp2n_adapted_cone, sp4_ddo, sp4_instance, sp4_no_body, Instance,
};
use crate::okounkov::valuation_points_rho;
use crate::paramitosis::{self, Box, BoxFace, Status};
use crate::parapolytope::Parapolytope;
use crate::pipedreams::{
    face_to_skew, gl_face_to_dream, gl_pipe_mitosis, skew_mitosis, skew_offspring, Side, SkewPipeDream,
};
use crate::rational::int;
use crate::schubert::{face_character, mitosis_chain, sp4};
use crate::weyl::WeylGroup;

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Case> {
        self.cases.iter().filter(|c| !c.pass).collect()
    }
}

fn case(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Case {
    Case {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn timed(suite: &str, f: impl FnOnce() -> Vec<Case>) -> SuiteReport {
    let t = Instant::now();
    let cases = f();
    SuiteReport {
        suite: suite.to_string(),
        cases,
        seconds: t.elapsed().as_secs_f64(),
    }
}

fn guard(name: &str, r: Result<Case>) -> Case {
    r.unwrap_or_else(|e| case(name, false, format!("error: {e}")))
}

/// Every box with `n` coordinates and integer bounds `0 ≤ μ_i ≤ ν_i ≤ 2`.
pub fn small_boxes(n: usize) -> Vec<Box> {
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    (0..n)
        .map(|_| pairs.iter())
        .multi_cartesian_product()
        .map(|v| {
            let mu: Vec<i64> = v.iter().map(|p| p.0).collect();
            let nu: Vec<i64> = v.iter().map(|p| p.1).collect();
            Box::from_ints(&mu, &nu).expect("ordered bounds")
        })
        .collect()
}

/// Faces containing the vertex `μ`.
fn faces_through_low(b: &Box) -> Vec<BoxFace> {
    (0..b.n())
        .map(|i| {
            if b.is_pinched(i) {
                vec![Status::Pinched]
            } else {
                vec![Status::Low, Status::Free]
            }
        })
        .multi_cartesian_product()
        .map(BoxFace)
        .collect()
}

fn all_box_faces(b: &Box) -> Vec<BoxFace> {
    (0..b.n())
        .map(|i| {
            if b.is_pinched(i) {
                vec![Status::Pinched]
            } else {
                vec![Status::Low, Status::High, Status::Free]
            }
        })
        .multi_cartesian_product()
        .map(BoxFace)
        .collect()
}

#[derive(Default)]
struct BoxTally {
    checked: usize,
    failures: Vec<String>,
}

impl BoxTally {
    fn merge(mut self, other: BoxTally) -> BoxTally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

fn box_identity(b: &Box) -> Result<BoxTally> {
    let mut t = BoxTally::default();
    for g in faces_through_low(b) {
        if paramitosis::reduced_partition(b, &g)?.is_none() || paramitosis::mitosis(b, &g)?.is_empty() {
            continue;
        }
        let class = paramitosis::l_class(b, &g)?;
        let mut out = BTreeSet::new();
        for f in &class {
            out.extend(paramitosis::mitosis(b, f)?);
        }
        let lhs = paramitosis::t_operator(b, &paramitosis::chi(b, &class)?)?;
        let rhs = paramitosis::chi(b, &out)?;
        t.checked += 1;
        if lhs != rhs {
            t.failures.push(format!("{g} in μ={:?} ν={:?}", b.mu(), b.nu()));
        }
    }
    Ok(t)
}

fn box_structure(b: &Box) -> Result<BoxTally> {
    let mut t = BoxTally::default();
    for g in all_box_faces(b) {
        let m = paramitosis::mitosis(b, &g)?;
        t.checked += 1;
        for f in &m {
            if f.dim() != g.dim() + 1 || !paramitosis::mitosis(b, f)?.is_empty() {
                t.failures.push(format!("M² or dimension at {g}"));
            }
        }
        if paramitosis::reduced_partition(b, &g)?.is_some() {
            if let Some(first) = m.iter().next() {
                let mut union = BTreeSet::new();
                for f in paramitosis::l_class(b, &g)? {
                    union.extend(paramitosis::mitosis(b, &f)?);
                }
                if union != paramitosis::l_class(b, first)? {
                    t.failures.push(format!("class closure at {g}"));
                }
            }
        }
    }
    Ok(t)
}

fn run_boxes(max_n: usize, f: fn(&Box) -> Result<BoxTally>) -> Result<BoxTally> {
    (1..=max_n)
        .flat_map(small_boxes)
        .collect::<Vec<_>>()
        .par_iter()
        .map(f)
        .try_reduce(BoxTally::default, |a, b| Ok(a.merge(b)))
}

fn tally_case(name: &str, r: Result<BoxTally>) -> Case {
    match r {
        Ok(t) => case(
            name,
            t.failures.is_empty() && t.checked > 0,
            format!(
                "{} checked, {} failed{}",
                t.checked,
                t.failures.len(),
                t.failures.first().map(|f| format!(": {f}")).unwrap_or_default()
            ),
        ),
        Err(e) => case(name, false, format!("error: {e}")),
    }
}

/// The box identity `T_Π χ(L(Γ)) = χ(M(L(Γ)))` over all small boxes.
pub fn paramitosis_identity(max_n: usize) -> SuiteReport {
    timed("paramitosis-identity", || {
        vec![tally_case("T χ(L) = χ(M(L))", run_boxes(max_n, box_identity))]
    })
}

/// `M² = ∅`, the dimension step, and single-class closure.
pub fn paramitosis_structure(max_n: usize) -> SuiteReport {
    timed("paramitosis-structure", || {
        vec![tally_case("M² = ∅ and class closure", run_boxes(max_n, box_structure))]
    })
}

pub fn balanced_instances() -> Vec<Instance> {
    let mut v: Vec<Instance> = [vec![0, 1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2, 3]]
        .iter()
        .map(|l| gz_instance(l).expect("monotone"))
        .collect();
    for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        v.push(sp4_instance(a, b).expect("dominant"));
    }
    v
}

/// Parapolytope certificate, balance, and admissibility per instance.
pub fn balanced() -> SuiteReport {
    timed("balanced", || {
        balanced_instances()
            .par_iter()
            .map(|inst| {
                guard(
                    &inst.name,
                    (|| {
                        inst.para.certify()?;
                        let bal = inst.para.is_balanced(&inst.lambda, &inst.rd)?;
                        let adm = inst.para.is_admissible()?;
                        Ok(case(
                            inst.name.clone(),
                            bal && adm,
                            format!("certified, balanced={bal}, admissible={adm}"),
                        ))
                    })(),
                )
            })
            .collect()
    })
}

pub fn demazure_instances() -> Vec<Instance> {
    let mut v: Vec<Instance> = [vec![0, 1, 2], vec![0, 2, 3], vec![0, 1, 2, 3]]
        .iter()
        .map(|l| gz_instance(l).expect("monotone"))
        .collect();
    v.push(sp4_instance(1, 1).expect("dominant"));
    v.push(sp4_instance(2, 1).expect("dominant"));
    v
}

/// One chain per Weyl group element: characters agree and every step
/// satisfies the four hypotheses.
pub fn demazure_chains(inst: &Instance) -> Vec<Case> {
    let g = WeylGroup::new(&inst.rd);
    g.elements()
        .par_iter()
        .map(|w| {
            let name = format!("{} w={w}", inst.name);
            guard(
                &name,
                (|| {
                    let res = mitosis_chain(&inst.para, &g, w)?;
                    let faces = face_character(&inst.para, res.sigma.faces(), &inst.lambda, &inst.rd)?;
                    let dem = g.demazure_character(&res.subword, &inst.lambda)?;
                    let hyp = res.hypotheses_hold();
                    let witness = res
                        .steps
                        .iter()
                        .flat_map(|s| s.report.witnesses.iter())
                        .next()
                        .cloned()
                        .unwrap_or_default();
                    Ok(case(
                        name.clone(),
                        faces == dem && hyp,
                        format!(
                            "subword {:?}, {} points, match={}, hypotheses={} {witness}",
                            res.subword,
                            faces.coefficient_sum(),
                            faces == dem,
                            hyp
                        ),
                    ))
                })(),
            )
        })
        .collect()
}

pub fn demazure() -> SuiteReport {
    timed("demazure", || {
        demazure_instances().iter().flat_map(demazure_chains).collect()
    })
}

/// Full character, Weyl dimension, and lattice count coincide.
pub fn dimensions() -> SuiteReport {
    timed("dimensions", || {
        let mut cases: Vec<Case> = balanced_instances()
            .iter()
            .map(|inst| {
                guard(
                    &inst.name,
                    (|| {
                        let g = WeylGroup::new(&inst.rd);
                        let dim = g.weyl_dim(&inst.lambda)?;
                        let count = inst.para.poly.lattice_points()?.len() as i64;
                        let full = g.demazure_character(g.longest().word(), &inst.lambda)?;
                        let ok = dim == count && full.coefficient_sum() == dim;
                        Ok(case(
                            inst.name.clone(),
                            ok,
                            format!("weyl_dim={dim}, lattice={count}, character={}", full.coefficient_sum()),
                        ))
                    })(),
                )
            })
            .collect();
        cases.push(guard(
            "SP(1,1) counts",
            (|| {
                let p = sp4_ddo(&int(1), &int(1))?;
                let v = p.poly.vertices()?.len();
                let l = p.poly.lattice_points()?.len();
                Ok(case("SP(1,1) counts", v == 11 && l == 16, format!("{v} vertices, {l} lattice points")))
            })(),
        ));
        cases
    })
}

/// The lattice points of `Δ_v(ρ)` listed as valuations, with vertices
/// marked.
pub const RHO_VERTICES: [[u32; 4]; 11] = [
    [0, 0, 0, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [1, 1, 0, 0],
    [1, 0, 2, 0],
    [1, 0, 0, 1],
    [0, 2, 0, 0],
    [0, 1, 2, 0],
    [0, 1, 0, 1],
    [0, 0, 3, 0],
    [0, 0, 1, 1],
];

pub const RHO_NON_VERTICES: [[u32; 4]; 5] =
    [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 2, 0], [1, 0, 1, 0], [0, 1, 1, 0]];

pub fn okounkov() -> SuiteReport {
    timed("okounkov", || {
        let mut cases = Vec::new();
        for (a, b) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
            let name = format!("φ(Δ_v({a},{b})) + shift = SP({a},{b})");
            cases.push(guard(
                &name,
                (|| {
                    let (l1, l2) = (int(a), int(b));
                    let img = sp4_no_body(&l1, &l2)?.affine_image(&phi_matrix(), &phi_shift(&l1, &l2))?;
                    let eq = polytopes_equal(&img, &sp4_ddo(&l1, &l2)?.poly)?;
                    Ok(case(name.clone(), eq, format!("equal={eq}")))
                })(),
            ));
        }
        cases.push(guard(
            "valuation points of ρ",
            (|| {
                let pts = valuation_points_rho();
                let expect: BTreeSet<[u32; 4]> = RHO_VERTICES.iter().chain(&RHO_NON_VERTICES).copied().collect();
                let body = sp4_no_body(&int(1), &int(1))?;
                let verts: BTreeSet<[u32; 4]> = body
                    .vertices()?
                    .iter()
                    .map(|v| {
                        let c: Vec<u32> = v.iter().map(|x| crate::rational::to_i64(x).unwrap_or(-1) as u32).collect();
                        [c[0], c[1], c[2], c[3]]
                    })
                    .collect();
                let marked: BTreeSet<[u32; 4]> = RHO_VERTICES.iter().copied().collect();
                let ok = pts == expect && verts == marked && pts.len() == 16 && marked.len() == 11;
                Ok(case(
                    "valuation points of ρ",
                    ok,
                    format!("{} points, {} vertices", pts.len(), verts.len()),
                ))
            })(),
        ));
        cases
    })
}

/// `Sp_4` catalog: lattice counts against Demazure characters, chain
/// equality, and the intersection identity.
pub fn catalog() -> SuiteReport {
    timed("catalog", || {
        let mut cases = Vec::new();
        for (a, b) in [(1, 1), (2, 1), (1, 2)] {
            let inst = match sp4_instance(a, b) {
                Ok(i) => i,
                Err(e) => return vec![case("instance", false, e.to_string())],
            };
            let g = WeylGroup::new(&inst.rd);
            for w in g.elements() {
                let name = format!("{} Δ_{w}", inst.name);
                cases.push(guard(
                    &name,
                    (|| {
                        let d = sp4::delta(&inst.para, w)?;
                        let count = d.lattice_points(&inst.para.poly)?.len() as i64;
                        let word = g.subword_reduced_word(w, &inst.para.decomp.word)?;
                        let dim = g.demazure_character(&word, &inst.lambda)?.coefficient_sum();
                        let chain = mitosis_chain(&inst.para, &g, w)?;
                        let same = chain.sigma == d;
                        Ok(case(
                            name.clone(),
                            count == dim && same,
                            format!("|Δ∩Z⁴|={count}, character={dim}, chain matches={same}"),
                        ))
                    })(),
                ));
            }
            let name = format!("{} intersection identity", inst.name);
            cases.push(guard(
                &name,
                (|| {
                    let ok = sp4::intersection_identity(&inst.para, None)?;
                    let control = sp4::intersection_identity(&inst.para, Some(vec![vec!["H2+", "H4+"]]))?;
                    Ok(case(name.clone(), ok && !control, format!("identity={ok}, perturbed={control}")))
                })(),
            ));
        }
        cases
    })
}

/// Faces reachable from `0` by any sequence of mitosis operations.
pub fn reachable_faces(para: &Parapolytope) -> Result<BTreeSet<Face>> {
    let start = para.origin_face()?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for i in 1..=para.decomp.r() {
            for g in para.mitosis_i(i, &f)? {
                if seen.insert(g.clone()) {
                    queue.push_back(g);
                }
            }
        }
    }
    Ok(seen)
}

/// Skew mitosis against geometric mitosis on the adapted-string cone.
pub fn skew(ns: &[usize]) -> SuiteReport {
    timed("skew", || {
        ns.iter()
            .map(|&n| {
                let name = format!("adapted cone n={n}");
                guard(
                    &name,
                    (|| {
                        let cone = sp2n_adapted_cone(n)?;
                        let faces = reachable_faces(&cone)?;
                        let mut bad = Vec::new();
                        let mut checked = 0;
                        for f in &faces {
                            let d = face_to_skew(&cone, n, f)?;
                            for i in 1..=n {
                                let geo = cone
                                    .mitosis_i(i, f)?
                                    .iter()
                                    .map(|g| face_to_skew(&cone, n, g))
                                    .collect::<Result<BTreeSet<_>>>()?;
                                checked += 1;
                                if geo != skew_mitosis(&d, i)? {
                                    bad.push(format!("i={i} at\n{}", d.render()));
                                }
                            }
                        }
                        Ok(case(
                            name.clone(),
                            bad.is_empty(),
                            format!(
                                "{} faces, {checked} checks, {} mismatches{}",
                                faces.len(),
                                bad.len(),
                                bad.first().map(|b| format!(": {b}")).unwrap_or_default()
                            ),
                        ))
                    })(),
                )
            })
            .collect()
    })
}

/// Classical pipe-dream mitosis against geometric mitosis on GZ polytopes.
pub fn gl_pipes() -> SuiteReport {
    timed("gl-pipes", || {
        [vec![0, 1, 2], vec![0, 1, 2, 3]]
            .iter()
            .map(|lambda| {
                let n = lambda.len();
                let name = format!("GL{n} pipe dreams");
                guard(
                    &name,
                    (|| {
                        let inst = gz_instance(lambda)?;
                        let faces = reachable_faces(&inst.para)?;
                        let mut bad = 0;
                        for f in &faces {
                            let d = gl_face_to_dream(&inst.para, n, f)?;
                            for i in 1..n {
                                let geo = inst
                                    .para
                                    .mitosis_i(i, f)?
                                    .iter()
                                    .map(|g| gl_face_to_dream(&inst.para, n, g))
                                    .collect::<Result<BTreeSet<_>>>()?;
                                if geo != gl_pipe_mitosis(&d, i)? {
                                    bad += 1;
                                }
                            }
                        }
                        Ok(case(
                            name.clone(),
                            bad == 0,
                            format!("{} faces, {bad} mismatches", faces.len()),
                        ))
                    })(),
                )
            })
            .collect()
    })
}

/// Face sets along a chain of mitosis operations applied left to right,
/// starting from `{0}`.
pub fn chain_steps(para: &Parapolytope, ops: &[usize]) -> Result<Vec<BTreeSet<Face>>> {
    let mut cur = BTreeSet::from([para.origin_face()?]);
    let mut out = vec![cur.clone()];
    for &i in ops {
        if i == 0 || i > para.decomp.r() {
            return Err(crate::Error::InvalidLabel(format!("mitosis index {i}")));
        }
        cur = para.mitosis_set(i, &cur)?;
        out.push(cur.clone());
    }
    Ok(out)
}

/// Renders a chain as blocks headed `start`, `M1`, ...; the diagrams of one
/// step appear in sorted order, separated by blank lines.
pub fn render_chain(ops: &[usize], steps: &[BTreeSet<String>]) -> String {
    let mut out = String::new();
    for (k, step) in steps.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        if k == 0 {
            out.push_str("start\n");
        } else {
            out.push_str(&format!("M{}\n", ops[k - 1]));
        }
        if step.is_empty() {
            out.push_str("(empty)\n");
        }
        for (j, d) in step.iter().enumerate() {
            if j > 0 {
                out.push('\n');
            }
            out.push_str(d);
            out.push('\n');
        }
    }
    out
}

pub fn skew_chain_display(n: usize, ops: &[usize]) -> Result<String> {
    let cone = sp2n_adapted_cone(n)?;
    let steps = chain_steps(&cone, ops)?
        .iter()
        .map(|s| s.iter().map(|f| Ok(face_to_skew(&cone, n, f)?.render())).collect())
        .collect::<Result<Vec<BTreeSet<String>>>>()?;
    Ok(render_chain(ops, &steps))
}

pub fn gl_chain_display(lambda: &[i64], ops: &[usize]) -> Result<String> {
    let inst = gz_instance(lambda)?;
    let n = lambda.len();
    let steps = chain_steps(&inst.para, ops)?
        .iter()
        .map(|s| s.iter().map(|f| Ok(gl_face_to_dream(&inst.para, n, f)?.render())).collect())
        .collect::<Result<Vec<BTreeSet<String>>>>()?;
    Ok(render_chain(ops, &steps))
}

/// A diagram followed by its labelled offspring `D{p}{±}` under `mitosis_i`.
pub fn skew_offspring_display(d: &SkewPipeDream, i: usize) -> Result<String> {
    let mut out = format!("D\n{}\n", d.render());
    for o in skew_offspring(d, i)? {
        let sign = if o.side == Side::Plus { '+' } else { '-' };
        out.push_str(&format!("\nD{}{sign}\n{}\n", o.p, o.dream.render()));
    }
    Ok(out)
}

/// The `n = 3` diagram whose `mitosis_2` has three offspring.
pub fn skew_worked_example() -> SkewPipeDream {
    SkewPipeDream::new(3, [(1, 3), (2, 2), (2, 3), (4, 2), (4, 3), (5, 3)]).expect("allowed cells")
}

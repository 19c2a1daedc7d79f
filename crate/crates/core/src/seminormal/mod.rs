//! Gelfand–Zeitlin idempotents, seminormal bases, transition matrices, gammas and matrix units.
//!
//! Everything is computed in the block representation `ρ = ⊕_λ ρ_λ` of level `r` on the Murphy
//! cell modules; `ρ` is faithful over the fraction field (certified by [`Seminormal::check_faithful`]),
//! so identities among images are identities in `A_r`.

mod jm;
mod rep;

use std::sync::Arc;

use serde_json::{json, Value};

pub use jm::{central_basis, separating_central_element, JmFamily, JmSpectrum};
pub use rep::RepMatrix;

use crate::algebra::{Element, MatrixF, SparseVec, SubspaceBasis};
use crate::arith::{Rational, Scalar};
use crate::combinatorics::{dominance_cmp, Partition, PathOrder, PathTableau};
use crate::murphy::{cell_module, murphy_level, CellModule, MurphyError, ReducerKind};
use crate::tower::report::{AxiomReport, AxiomResult};
use crate::tower::Tower;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeminormalError {
    #[error(transparent)]
    Murphy(#[from] MurphyError),
    #[error("paths {first} and {second} at level {level} have the same eigenvalue sequence")]
    Separation { level: usize, first: String, second: String },
    #[error("labels {first} and {second} at level {level} have the same central character")]
    Inseparable { level: usize, first: String, second: String },
    #[error("Jucys–Murphy data does not act by a scalar on {label} at level {level}")]
    NotScalar { level: usize, label: String },
    #[error("transition matrix of {label} has entry ({row}, {col}) outside dominance")]
    Triangularity { label: String, row: String, col: String },
    #[error("gamma vanishes for path {path}")]
    ZeroGamma { path: String },
    #[error("{law} fails: {detail}")]
    Law { law: &'static str, detail: String },
    #[error("block representation of level {level} is not faithful")]
    NotFaithful { level: usize },
    #[error("{0}")]
    Unsupported(String),
}

fn law(law: &'static str, detail: impl Into<String>) -> SeminormalError {
    SeminormalError::Law { law, detail: detail.into() }
}

/// Seminormal data of one cell: `f_t = m_t F_t`, `m_t = Σ_s T[s,t] f_s`, `γ_t = ⟨f_t, f_t⟩`.
pub struct SeminormalCell {
    module: Arc<CellModule>,
    fm: MatrixF,
    fm_inv: MatrixF,
    transition: MatrixF,
    gram: MatrixF,
    gammas: Vec<Scalar>,
}

impl SeminormalCell {
    pub fn label(&self) -> &Partition {
        self.module.label()
    }

    pub fn module(&self) -> &CellModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn paths(&self) -> &[PathTableau] {
        self.module.paths()
    }

    pub fn path_index(&self, t: &PathTableau) -> Option<usize> {
        self.paths().iter().position(|p| p == t)
    }

    /// Row `t`: coordinates of `f_t` in the Murphy basis.
    pub fn seminormal_vectors(&self) -> &MatrixF {
        &self.fm
    }

    /// `T` with `m_t = Σ_s T[s,t] f_s`.
    pub fn transition(&self) -> &MatrixF {
        &self.transition
    }

    /// `T⁻¹` with `f_t = Σ_s T⁻¹[s,t] m_s`.
    pub fn inverse_transition(&self) -> MatrixF {
        self.fm.transpose()
    }

    pub fn gram(&self) -> &MatrixF {
        &self.gram
    }

    pub fn gammas(&self) -> &[Scalar] {
        &self.gammas
    }

    /// Matrix of `ρ_λ(x)` in the seminormal basis: row `t` holds the coordinates of `f_t x`.
    pub fn seminormal_action(&self, murphy_action: &MatrixF) -> MatrixF {
        self.fm.mul(murphy_action).mul(&self.fm_inv)
    }
}

/// Seminormal data of level `r`, with the idempotents of all prefix paths realized at level `r`.
pub struct Seminormal {
    level: usize,
    jm: JmFamily,
    cells: Vec<SeminormalCell>,
    jm_reps: Vec<RepMatrix>,
    idempotents: Vec<Vec<(PathTableau, RepMatrix)>>,
}

fn unitriangular_violation(
    tower: &Tower,
    paths: &[PathTableau],
    m: &MatrixF,
    entry: impl Fn(usize, usize) -> Scalar,
) -> Option<(usize, usize)> {
    for s in 0..m.nrows() {
        for t in 0..m.ncols() {
            let v = entry(s, t);
            let ok = if s == t {
                v.is_one()
            } else {
                v.is_zero() || dominance_cmp(tower.graph(), &paths[s], &paths[t]) == Ok(PathOrder::Greater)
            };
            if !ok {
                return Some((s, t));
            }
        }
    }
    None
}

impl Seminormal {
    /// Builds the data at level `r` from the tower's Jucys–Murphy family.
    pub fn new(tower: &Tower, r: usize) -> Result<Self, SeminormalError> {
        let jm = JmFamily::new(tower, r)?;
        Self::with_family(tower, r, jm)
    }

    /// Builds the data at level `r` from a given family `L_0..=L_r`.
    pub fn with_family(tower: &Tower, r: usize, jm: JmFamily) -> Result<Self, SeminormalError> {
        if jm.max_level() < r {
            return Err(SeminormalError::Unsupported(format!("Jucys–Murphy family stops below level {r}")));
        }
        for k in 0..=r {
            jm.check_separation(tower, k)?;
        }
        let modules = tower
            .graph()
            .labels(r)
            .iter()
            .map(|l| cell_module(tower, r, l, ReducerKind::Accelerated))
            .collect::<Result<Vec<_>, _>>()?;
        let dims: Vec<usize> = modules.iter().map(|m| m.dim()).collect();
        let rep = |x: &Element| -> Result<RepMatrix, SeminormalError> {
            let x = tower.embed(x, r);
            Ok(RepMatrix::new(modules.iter().map(|m| m.act(tower, &x)).collect::<Result<_, _>>()?))
        };
        let mut jm_reps = vec![RepMatrix::identity(&dims)];
        for k in 1..=r {
            jm_reps.push(rep(jm.element(k))?);
        }

        let root = PathTableau { start: 0, steps: vec![tower.graph().labels(0)[0].clone()] };
        let mut idempotents = vec![vec![(root, RepMatrix::identity(&dims))]];
        for k in 1..=r {
            let mut next = Vec::new();
            for (p, f) in &idempotents[k - 1] {
                let mu = p.shape();
                let children = tower.graph().out_edges(k - 1, mu);
                let kappas: Vec<Scalar> = children.iter().map(|l| jm.kappa(k, mu, l)).collect();
                for (i, child) in children.iter().enumerate() {
                    let mut g = f.clone();
                    for (j, c) in kappas.iter().enumerate() {
                        if j == i {
                            continue;
                        }
                        let denom = &kappas[i] - c;
                        if denom.is_zero() {
                            return Err(SeminormalError::Separation {
                                level: k,
                                first: format!("{p}→{child}"),
                                second: format!("{p}→{}", children[j]),
                            });
                        }
                        let factor = jm_reps[k].sub(&RepMatrix::scalar(&dims, c)).scale(&denom.inv());
                        g = g.mul(&factor);
                    }
                    let mut steps = p.steps.clone();
                    steps.push(child.clone());
                    next.push((PathTableau { start: 0, steps }, g));
                }
            }
            idempotents.push(next);
        }

        let mut cells = Vec::new();
        for (b, module) in modules.into_iter().enumerate() {
            let rows: Vec<Vec<Scalar>> = module
                .paths()
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let f = &idempotents[r].iter().find(|(p, _)| p == t).expect("every path has an idempotent").1;
                    f.block(b).row(i).to_vec()
                })
                .collect();
            let fm = MatrixF::from_rows(rows);
            let label = module.label().to_string();
            let fm_inv = fm.inverse().ok_or_else(|| law("seminormal basis", format!("{label}: f_t are dependent")))?;
            let transition = fm_inv.transpose();
            let paths = module.paths();
            for (m, entry) in [(&transition, false), (&fm, true)] {
                let hit = unitriangular_violation(tower, paths, m, |s, t| {
                    if entry {
                        m.get(t, s).clone()
                    } else {
                        m.get(s, t).clone()
                    }
                });
                if let Some((s, t)) = hit {
                    return Err(SeminormalError::Triangularity {
                        label,
                        row: paths[s].to_string(),
                        col: paths[t].to_string(),
                    });
                }
            }
            let gram = module.gram(tower)?;
            let form = fm.mul(&gram).mul(&fm.transpose());
            if !form.is_diagonal() {
                return Err(law("gamma orthogonality", format!("{label}: ⟨f_s, f_t⟩ ≠ 0 for some s ≠ t")));
            }
            let gammas: Vec<Scalar> = (0..module.dim()).map(|i| form.get(i, i).clone()).collect();
            if let Some(i) = gammas.iter().position(Scalar::is_zero) {
                return Err(SeminormalError::ZeroGamma { path: paths[i].to_string() });
            }
            cells.push(SeminormalCell { module, fm, fm_inv, transition, gram, gammas });
        }
        Ok(Seminormal { level: r, jm, cells, jm_reps, idempotents })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn family(&self) -> &JmFamily {
        &self.jm
    }

    pub fn cells(&self) -> &[SeminormalCell] {
        &self.cells
    }

    pub fn cell(&self, lambda: &Partition) -> Option<&SeminormalCell> {
        self.cells.iter().position(|c| c.label() == lambda).map(|i| &self.cells[i])
    }

    fn block_index(&self, lambda: &Partition) -> Option<usize> {
        self.cells.iter().position(|c| c.label() == lambda)
    }

    fn dims(&self) -> Vec<usize> {
        self.cells.iter().map(SeminormalCell::dim).collect()
    }

    /// `ρ(x)` for `x` in any level `≤ r`.
    pub fn rep(&self, tower: &Tower, x: &Element) -> Result<RepMatrix, SeminormalError> {
        let x = tower.embed(x, self.level);
        Ok(RepMatrix::new(self.cells.iter().map(|c| c.module.act(tower, &x)).collect::<Result<_, _>>()?))
    }

    /// `ρ(L_k)`.
    pub fn jm_rep(&self, k: usize) -> &RepMatrix {
        &self.jm_reps[k]
    }

    /// `ρ(F_t)` for a path from level 0 to any level `≤ r`.
    pub fn idempotent(&self, t: &PathTableau) -> Option<&RepMatrix> {
        self.idempotents.get(t.end_level())?.iter().find(|(p, _)| p == t).map(|(_, f)| f)
    }

    /// Paths from level 0 to level `k` with their idempotents.
    pub fn idempotents(&self, k: usize) -> &[(PathTableau, RepMatrix)] {
        &self.idempotents[k]
    }

    /// Action of `L_i` on the Murphy basis of `Δ_r(λ)`.
    pub fn jm_triangular_action(&self, lambda: &Partition, i: usize) -> Option<&MatrixF> {
        Some(self.jm_reps[i].block(self.block_index(lambda)?))
    }

    /// `E^λ_{st} = γ_s⁻¹ F_s m^λ_{st} F_t`, as the block of `λ` (the other blocks vanish).
    pub fn matrix_unit(&self, tower: &Tower, lambda: &Partition, s: usize, t: usize) -> Result<MatrixF, SeminormalError> {
        let b = self.block_index(lambda).ok_or_else(|| MurphyError::UnknownLabel {
            level: self.level,
            label: lambda.to_string(),
        })?;
        let cell = &self.cells[b];
        let n = cell.dim();
        let ml = murphy_level(tower, self.level);
        let m_st = &ml.cellular_elements(tower, lambda)?[s * n + t];
        let fs = self.idempotent(&cell.paths()[s]).expect("path idempotent").block(b);
        let ft = self.idempotent(&cell.paths()[t]).expect("path idempotent").block(b);
        Ok(fs.mul(&cell.module.act(tower, m_st)?).mul(ft).scale(&cell.gammas[s].inv()))
    }

    /// `F_s F_t = δ_{st} F_t` within each level `k ≤ r`, `Σ_t F_t = 1`, and the truncation rule
    /// `F_s F_t = δ_{s, t[0,k]} F_t` for `s` ending at level `k` and `t` at level `r`.
    pub fn check_idempotents(&self) -> Result<(), SeminormalError> {
        let dims = self.dims();
        let one = RepMatrix::identity(&dims);
        for k in 0..=self.level {
            let level = &self.idempotents[k];
            let mut sum = RepMatrix::zero(&dims);
            for (i, (s, fs)) in level.iter().enumerate() {
                sum = sum.add(fs);
                for (j, (t, ft)) in level.iter().enumerate() {
                    let prod = fs.mul(ft);
                    let ok = if i == j { &prod == fs } else { prod.is_zero() };
                    if !ok {
                        return Err(law("idempotent orthogonality", format!("F_{s} F_{t}")));
                    }
                }
                if fs.is_zero() {
                    return Err(law("idempotent orthogonality", format!("F_{s} = 0")));
                }
            }
            if sum != one {
                return Err(law("idempotent sum", format!("level {k}")));
            }
            for (s, fs) in level {
                for (t, ft) in &self.idempotents[self.level] {
                    let expect = if &t.segment(0, k) == s { ft.clone() } else { RepMatrix::zero(&dims) };
                    if fs.mul(ft) != expect {
                        return Err(law("truncation", format!("F_{s} F_{t}")));
                    }
                }
            }
        }
        for (t, ft) in &self.idempotents[self.level] {
            let b = self.block_index(t.shape()).expect("shape is a label");
            if (0..dims.len()).any(|c| c != b && !ft.block(c).is_zero()) || ft.block(b).rank() != 1 {
                return Err(law("primitive idempotent", format!("F_{t} is not a rank-one idempotent of its block")));
            }
        }
        Ok(())
    }

    /// `f_t L_i = κ_t(i) f_t` for every path and `1 ≤ i ≤ r`.
    pub fn check_jm_spectrum(&self) -> Result<(), SeminormalError> {
        for (b, cell) in self.cells.iter().enumerate() {
            let kappas: Vec<Vec<Scalar>> = cell.paths().iter().map(|t| self.jm.sequence(t)).collect();
            for i in 1..=self.level {
                let diag = MatrixF::from_rows(
                    (0..cell.dim())
                        .map(|t| (0..cell.dim()).map(|s| if s == t { kappas[t][i - 1].clone() } else { Scalar::zero() }).collect())
                        .collect(),
                );
                if cell.fm.mul(self.jm_reps[i].block(b)) != diag.mul(&cell.fm) {
                    return Err(law("jm spectrum", format!("{} L_{i}", cell.label())));
                }
            }
        }
        Ok(())
    }

    /// `m_t L_i = κ_t(i) m_t + Σ_{s ⊳ t} r_s m_s` with integral `r_s`.
    pub fn check_jm_triangular(&self, tower: &Tower) -> Result<(), SeminormalError> {
        for (b, cell) in self.cells.iter().enumerate() {
            let paths = cell.paths();
            let kappas: Vec<Vec<Scalar>> = paths.iter().map(|t| self.jm.sequence(t)).collect();
            for i in 1..=self.level {
                let m = self.jm_reps[i].block(b);
                for t in 0..cell.dim() {
                    for s in 0..cell.dim() {
                        let v = m.get(t, s);
                        let ok = if s == t {
                            v == &kappas[t][i - 1]
                        } else {
                            v.is_zero() || dominance_cmp(tower.graph(), &paths[s], &paths[t]) == Ok(PathOrder::Greater)
                        };
                        if !ok || !v.is_integral() {
                            return Err(law(
                                "jm triangularity",
                                format!("{} L_{i}: entry ({}, {}) = {v}", cell.label(), paths[t], paths[s]),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `E_st E_uv = δ_tu E_sv`, `E_tt = F_t`, `Σ E_tt = 1`, the `F_s m_st F_t` span `A_r`, and
    /// `F_st g` stays in the span of `F_sv` for every generator `g`.
    pub fn check_matrix_units(&self, tower: &Tower) -> Result<(), SeminormalError> {
        let dims = self.dims();
        let mut total = RepMatrix::zero(&dims);
        let mut span = SubspaceBasis::new(false);
        let offsets: Vec<usize> = dims.iter().scan(0, |acc, d| {
            let o = *acc;
            *acc += d * d;
            Some(o)
        }).collect();
        let gens: Vec<RepMatrix> =
            tower.generators(self.level).iter().map(|g| self.rep(tower, g)).collect::<Result<_, _>>()?;
        for (b, cell) in self.cells.iter().enumerate() {
            let n = cell.dim();
            let units: Vec<MatrixF> = (0..n * n)
                .map(|k| self.matrix_unit(tower, cell.label(), k / n, k % n))
                .collect::<Result<_, _>>()?;
            let e = |s: usize, t: usize| &units[s * n + t];
            for s in 0..n {
                for t in 0..n {
                    for u in 0..n {
                        for v in 0..n {
                            let expect = if t == u { e(s, v).clone() } else { MatrixF::zeros(n, n) };
                            if e(s, t).mul(e(u, v)) != expect {
                                return Err(law("matrix units", format!("{}: E_{s}{t} E_{u}{v}", cell.label())));
                            }
                        }
                    }
                }
                let fs = self.idempotent(&cell.paths()[s]).expect("path idempotent");
                if e(s, s) != fs.block(b) {
                    return Err(law("matrix units", format!("E_tt ≠ F_t for {}", cell.paths()[s])));
                }
                let mut padded = RepMatrix::zero(&dims);
                padded.set_block(b, e(s, s).clone());
                total = total.add(&padded);
            }
            for s in 0..n {
                let mut row_span = SubspaceBasis::new(false);
                for v in 0..n {
                    row_span.insert(&flatten(e(s, v), 0));
                }
                for t in 0..n {
                    span.insert(&flatten(e(s, t), offsets[b]));
                    for g in &gens {
                        if !row_span.contains(&flatten(&e(s, t).mul(g.block(b)), 0)) {
                            return Err(law("seminormal cellularity", format!("{}: F_{s}{t} g", cell.label())));
                        }
                    }
                }
            }
        }
        if total != RepMatrix::identity(&dims) {
            return Err(law("matrix units", "Σ E_tt ≠ 1"));
        }
        if span.rank() != tower.algebra(self.level).dim() {
            return Err(law("seminormal cellularity", format!("rank {} of the F_st", span.rank())));
        }
        Ok(())
    }

    /// `span{u*_t F_t}` is a right ideal on which `A_r` acts by the seminormal matrices.
    pub fn check_right_ideal(&self, tower: &Tower) -> Result<(), SeminormalError> {
        for (b, cell) in self.cells.iter().enumerate() {
            let vectors: Vec<MatrixF> = cell
                .paths()
                .iter()
                .map(|t| -> Result<MatrixF, SeminormalError> {
                    let u = tower.u_star_path(t);
                    let f = self.idempotent(t).expect("path idempotent").block(b);
                    Ok(cell.module.act(tower, &u)?.mul(f))
                })
                .collect::<Result<_, _>>()?;
            for g in tower.generators(self.level) {
                let act = cell.module.act(tower, g)?;
                let s_act = cell.seminormal_action(&act);
                for (t, v) in vectors.iter().enumerate() {
                    let mut expect = MatrixF::zeros(cell.dim(), cell.dim());
                    for (s, w) in vectors.iter().enumerate() {
                        expect = expect.add(&w.scale(s_act.get(t, s)));
                    }
                    if v.mul(&act) != expect {
                        return Err(law("right ideal", format!("{}: u*_t F_t g for t = {}", cell.label(), cell.paths()[t])));
                    }
                }
            }
        }
        Ok(())
    }

    /// The generators' images span an algebra of dimension `dim A_r` at some rational specialization.
    pub fn check_faithful(&self, tower: &Tower) -> Result<(), SeminormalError> {
        let target = tower.algebra(self.level).dim();
        let gens: Vec<RepMatrix> =
            tower.generators(self.level).iter().map(|g| self.rep(tower, g)).collect::<Result<_, _>>()?;
        for point in [Rational::new(7.into(), 3.into()), Rational::new((-5).into(), 2.into()), Rational::from_integer(11.into())] {
            let Some(gens) = gens.iter().map(|g| g.evaluate_at(&point)).collect::<Option<Vec<_>>>() else {
                continue;
            };
            if generated_dimension(&gens, &self.dims()) == target {
                return Ok(());
            }
        }
        Err(SeminormalError::NotFaithful { level: self.level })
    }

    /// The three restriction statements against the data of a lower level `s`.
    pub fn check_restriction(&self, tower: &Tower, lower: &Seminormal) -> Result<(), SeminormalError> {
        let (r, s) = (self.level, lower.level);
        if s == 0 || s >= r {
            return Err(SeminormalError::Unsupported(format!("restriction from {r} to {s}")));
        }
        let split = |t: &PathTableau| (t.segment(0, s), t.segment(s, r));
        let coords = |cell: &SeminormalCell| -> Vec<(PathTableau, PathTableau)> { cell.paths().iter().map(split).collect() };

        for g in tower.generators(s) {
            let low: Vec<MatrixF> = lower
                .cells
                .iter()
                .map(|c| Ok(c.seminormal_action(&c.module.act(tower, g)?)))
                .collect::<Result<_, SeminormalError>>()?;
            for cell in &self.cells {
                let action = cell.seminormal_action(&cell.module.act(tower, &tower.embed(g, r))?);
                let parts = coords(cell);
                for (i, (a1, a2)) in parts.iter().enumerate() {
                    for (j, (b1, b2)) in parts.iter().enumerate() {
                        let expect = if a2 == b2 {
                            let lb = lower.block_index(a1.shape()).expect("lower label");
                            let lc = &lower.cells[lb];
                            low[lb].get(lc.path_index(a1).unwrap(), lc.path_index(b1).unwrap()).clone()
                        } else {
                            Scalar::zero()
                        };
                        if action.get(i, j) != &expect {
                            return Err(law("restriction (1)", format!("{}: {} → {}", cell.label(), parts[i].0, parts[j].0)));
                        }
                    }
                }
            }
        }

        let ml = murphy_level(tower, s);
        for lc in &lower.cells {
            let n = lc.dim();
            let cellular = ml.cellular_elements(tower, lc.label())?;
            for u in 0..n {
                for v in 0..n {
                    let fu = self.idempotent(&lc.paths()[u]).expect("prefix idempotent");
                    let fv = self.idempotent(&lc.paths()[v]).expect("prefix idempotent");
                    let x = fu.mul(&self.rep(tower, &cellular[u * n + v])?).mul(fv);
                    for (b, cell) in self.cells.iter().enumerate() {
                        let action = cell.seminormal_action(x.block(b));
                        let parts = coords(cell);
                        for (i, (a1, a2)) in parts.iter().enumerate() {
                            for (j, (b1, b2)) in parts.iter().enumerate() {
                                let hit = a1 == &lc.paths()[u] && b1 == &lc.paths()[v] && a2 == b2;
                                let expect = if hit { lc.gammas[u].clone() } else { Scalar::zero() };
                                if action.get(i, j) != &expect {
                                    return Err(law("restriction (2)", format!("{}: u = {}, v = {}", cell.label(), lc.paths()[u], lc.paths()[v])));
                                }
                            }
                        }
                    }
                }
            }
        }

        if tower.provider().has_flip(r - s) && tower.provider().has_flip(r) {
            for g in tower.generators(r - s) {
                let Some(x) = tower.shifted(g, r) else { continue };
                for cell in &self.cells {
                    let action = cell.seminormal_action(&cell.module.act(tower, &x)?);
                    let parts = coords(cell);
                    for (i, (a1, a2)) in parts.iter().enumerate() {
                        for (j, (b1, b2)) in parts.iter().enumerate() {
                            let v = action.get(i, j);
                            if a1 != b1 {
                                if !v.is_zero() {
                                    return Err(law("restriction (3)", format!("{}: {} → {}", cell.label(), parts[i].0, parts[j].0)));
                                }
                                continue;
                            }
                            for (k, (c1, c2)) in parts.iter().enumerate() {
                                if c2 != a2 || c1.shape() != a1.shape() {
                                    continue;
                                }
                                let l = parts.iter().position(|(d1, d2)| d1 == c1 && d2 == b2).expect("same prefix");
                                if action.get(k, l) != v {
                                    return Err(law("restriction (3)", format!("{}: depends on t1", cell.label())));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// All checks at level `r` as an axiom-style report; restriction uses every `1 ≤ s < r`.
    pub fn report(tower: &Tower, r: usize) -> AxiomReport {
        let mut report = AxiomReport::default();
        let fail = |name: &str, e: &SeminormalError| AxiomResult::fail(name, r, json!({ "error": e.to_string() }));
        let sn = match Seminormal::new(tower, r) {
            Ok(sn) => sn,
            Err(e) => {
                let name = match e {
                    SeminormalError::Triangularity { .. } => "transition-unitriangular",
                    SeminormalError::ZeroGamma { .. } => "gamma",
                    SeminormalError::Separation { .. } | SeminormalError::Inseparable { .. } => "jm-separation",
                    _ => "seminormal-basis",
                };
                report.push(fail(name, &e));
                return report;
            }
        };
        report.push(AxiomResult::pass("jm-separation", r));
        report.push(AxiomResult::pass("transition-unitriangular", r));
        report.push(AxiomResult::pass("gamma", r));
        let checks: [(&str, Result<(), SeminormalError>); 6] = [
            ("faithful", sn.check_faithful(tower)),
            ("gz-idempotents", sn.check_idempotents()),
            ("jm-spectrum", sn.check_jm_spectrum()),
            ("jm-triangular", sn.check_jm_triangular(tower)),
            ("matrix-units", sn.check_matrix_units(tower)),
            ("right-ideal", sn.check_right_ideal(tower)),
        ];
        for (name, res) in checks {
            report.push(match res {
                Ok(()) => AxiomResult::pass(name, r),
                Err(e) => fail(name, &e),
            });
        }
        for s in 1..r {
            let res = Seminormal::with_family(tower, s, sn.jm.truncate(s)).and_then(|low| sn.check_restriction(tower, &low));
            report.push(match res {
                Ok(()) => AxiomResult::pass("restriction-seminormal", r),
                Err(e) => AxiomResult::fail("restriction-seminormal", r, json!({ "s": s, "error": e.to_string() })),
            });
        }
        report
    }

    /// JSON view of one cell: transition matrix, gammas, and the Jucys–Murphy actions on the Murphy basis.
    pub fn cell_json(&self, lambda: &Partition) -> Option<Value> {
        let b = self.block_index(lambda)?;
        let cell = &self.cells[b];
        let paths: Vec<String> = cell.paths().iter().map(|t| t.to_string()).collect();
        let jm: Vec<Value> = (1..=self.level).map(|i| matrix_json(self.jm_reps[i].block(b))).collect();
        let kappas: Vec<Vec<String>> =
            cell.paths().iter().map(|t| self.jm.sequence(t).iter().map(|k| k.to_string()).collect()).collect();
        Some(json!({
            "level": self.level,
            "cell": lambda.to_string(),
            "paths": paths,
            "transition": matrix_json(&cell.transition),
            "gammas": cell.gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "jm": jm,
            "kappa": kappas,
        }))
    }

    /// `F_t` as an element of `A_k`, `k` the end level of `t`, by interpolation in the algebra.
    pub fn idempotent_element(tower: &Tower, jm: &JmFamily, t: &PathTableau) -> Result<Element, SeminormalError> {
        let r = t.end_level();
        let alg = tower.algebra(r);
        let mut f = alg.one();
        for k in t.start + 1..=r {
            let mu = t.at(k - 1);
            let kappa = jm.kappa(k, mu, t.at(k));
            let l = tower.embed(jm.element(k), r);
            for other in tower.graph().out_edges(k - 1, mu) {
                if &other == t.at(k) {
                    continue;
                }
                let c = jm.kappa(k, mu, &other);
                let denom = &kappa - &c;
                if denom.is_zero() {
                    return Err(SeminormalError::Separation { level: k, first: t.to_string(), second: other.to_string() });
                }
                let factor = l.sub(&alg.scalar(c)).scale(&denom.inv());
                f = alg.mul(&f, &factor);
            }
        }
        Ok(f)
    }
}

fn flatten(m: &MatrixF, offset: usize) -> SparseVec {
    let mut v = SparseVec::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let x = m.get(i, j);
            if !x.is_zero() {
                v.insert((offset + i * m.ncols() + j) as u32, x.clone());
            }
        }
    }
    v
}

fn rep_flatten(m: &RepMatrix) -> SparseVec {
    let mut v = SparseVec::new();
    let mut offset = 0;
    for b in m.blocks() {
        v.extend(flatten(b, offset));
        offset += b.nrows() * b.ncols();
    }
    v
}

/// Dimension of the unital algebra generated by `gens`.
fn generated_dimension(gens: &[RepMatrix], dims: &[usize]) -> usize {
    let mut span = SubspaceBasis::new(false);
    let one = RepMatrix::identity(dims);
    span.insert(&rep_flatten(&one));
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if span.insert(&rep_flatten(&y)) {
                frontier.push(y);
            }
        }
    }
    span.rank()
}

pub fn matrix_json(m: &MatrixF) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

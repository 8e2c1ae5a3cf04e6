//! Polyhedral geometry of the cone over the columns of A: pointedness
//! certificates, the face lattice, normalized volumes, and exact membership
//! tests for the semigroup NA and its localizations NA + ZF along faces.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use itertools::Itertools;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::intlinalg::{lattice_kernel, IntMatrix};
use crate::{Error, Result};

/// A d x n integer matrix of rank d whose columns lie in a single open
/// half-space, together with a strict certificate h (h . a_j > 0 for all j).
#[derive(Clone, Debug)]
pub struct PointedMatrix {
    matrix: IntMatrix,
    certificate: Vec<BigRational>,
}

impl PointedMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn certificate(&self) -> &[BigRational] {
        &self.certificate
    }

    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.matrix.col(j)
    }

    /// Re-checks the stored certificate.
    pub fn certificate_is_valid(&self) -> bool {
        (0..self.n()).all(|j| dot_qz(&self.certificate, &self.column(j)).is_positive())
    }
}

/// A face of the cone over A: the set of columns on which a supporting
/// linear functional vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub columns: Vec<usize>,
    pub functional: Vec<BigRational>,
    pub dimension: usize,
}

impl Face {
    pub fn is_empty_face(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn is_full_face(&self, n: usize) -> bool {
        self.columns.len() == n
    }

    /// Column submatrix spanning the face.
    pub fn submatrix(&self, a: &PointedMatrix) -> IntMatrix {
        a.matrix().select_cols(&self.columns)
    }

    /// The functional is zero exactly on the face columns and strictly
    /// positive off them.
    pub fn verify(&self, a: &PointedMatrix) -> bool {
        (0..a.n()).all(|j| {
            let v = dot_qz(&self.functional, &a.column(j));
            if self.columns.contains(&j) {
                v.is_zero()
            } else {
                v.is_positive()
            }
        })
    }
}

/// All faces of the cone over A, sorted by (dimension, columns), with the
/// strict containment pairs.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// Pairs (i, j) with faces[i].columns a proper subset of faces[j].columns.
    pub containment: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn empty_face(&self) -> &Face {
        &self.faces[0]
    }

    pub fn full_face(&self) -> &Face {
        self.faces.last().unwrap()
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(move |(_, f)| f.dimension == k)
    }
}

pub(crate) fn dot_qz(q: &[BigRational], z: &[BigInt]) -> BigRational {
    q.iter()
        .zip(z.iter())
        .map(|(a, b)| a * BigRational::from_integer(b.clone()))
        .sum()
}

fn dot_qq(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

// ---------------------------------------------------------------------------
// Pointedness via Fourier-Motzkin elimination
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct Ineq {
    /// Coefficients on h_0..h_{d-1}; entries for already-eliminated
    /// variables are zero.
    coeffs: Vec<BigRational>,
    rhs: BigRational,
    /// Nonnegative multipliers over the original n constraints, so that
    /// coeffs = sum mult_j * a_j and rhs = sum mult_j.
    mult: Vec<BigRational>,
}

/// Certify pointedness of M: find h with h . a_j > 0 for all columns, or a
/// Gordan counter-certificate (nonzero u >= 0 with M u = 0).
pub fn make_pointed_matrix(m: IntMatrix) -> Result<PointedMatrix> {
    let d = m.rows();
    let n = m.cols();
    if d == 0 || n == 0 {
        return Err(Error::InvalidInput("matrix must have at least one row and column".into()));
    }
    let rank = m.rank();
    if rank < d {
        return Err(Error::NotFullRank { expected: d, found: rank });
    }
    // Feasibility of { h : a_j . h >= 1 for all j } is equivalent to strict
    // pointedness by scaling.
    let mut system: Vec<Ineq> = (0..n)
        .map(|j| {
            let mut mult = vec![BigRational::zero(); n];
            mult[j] = BigRational::one();
            Ineq {
                coeffs: m.col(j).into_iter().map(BigRational::from_integer).collect(),
                rhs: BigRational::one(),
                mult,
            }
        })
        .collect();
    let mut snapshots: Vec<Vec<Ineq>> = Vec::new();
    for var in (1..d).rev() {
        if let Some(cert) = infeasibility_certificate(&system, var + 1) {
            return Err(Error::NotPointed { counter_certificate: Some(cert) });
        }
        snapshots.push(system.clone());
        system = eliminate_variable(&system, var, n);
    }
    if let Some(cert) = infeasibility_certificate(&system, 1) {
        return Err(Error::NotPointed { counter_certificate: Some(cert) });
    }
    // Solve the single-variable system in h_0, then back-substitute.
    let mut h = vec![BigRational::zero(); d];
    h[0] = pick_value(&system, 0, &h).ok_or(Error::NotPointed { counter_certificate: None })?;
    for (stage, snap) in snapshots.iter().enumerate().rev() {
        let var = d - 1 - stage;
        h[var] =
            pick_value(snap, var, &h).ok_or(Error::NotPointed { counter_certificate: None })?;
    }
    let pm = PointedMatrix { matrix: m, certificate: h };
    debug_assert!(pm.certificate_is_valid());
    Ok(pm)
}

/// An inequality 0 >= rhs with rhs > 0 witnesses infeasibility; its
/// multipliers give the Gordan certificate after clearing denominators.
fn infeasibility_certificate(system: &[Ineq], active_vars: usize) -> Option<Vec<BigInt>> {
    for ineq in system {
        if ineq.coeffs[..active_vars].iter().all(|c| c.is_zero()) && ineq.rhs.is_positive() {
            let lcm = ineq
                .mult
                .iter()
                .fold(BigInt::one(), |acc, q| num::Integer::lcm(&acc, q.denom()));
            let u: Vec<BigInt> = ineq
                .mult
                .iter()
                .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
                .collect();
            return Some(u);
        }
    }
    None
}

fn eliminate_variable(system: &[Ineq], var: usize, n: usize) -> Vec<Ineq> {
    let mut out: Vec<Ineq> = Vec::new();
    let pos: Vec<&Ineq> = system.iter().filter(|i| i.coeffs[var].is_positive()).collect();
    let neg: Vec<&Ineq> = system.iter().filter(|i| i.coeffs[var].is_negative()).collect();
    for i in system.iter().filter(|i| i.coeffs[var].is_zero()) {
        out.push(i.clone());
    }
    for p in &pos {
        for q in &neg {
            // Scale so the var coefficients cancel; both weights positive.
            let wp = -q.coeffs[var].clone();
            let wq = p.coeffs[var].clone();
            let coeffs: Vec<BigRational> = (0..p.coeffs.len())
                .map(|i| &wp * &p.coeffs[i] + &wq * &q.coeffs[i])
                .collect();
            let rhs = &wp * &p.rhs + &wq * &q.rhs;
            let mult: Vec<BigRational> =
                (0..n).map(|i| &wp * &p.mult[i] + &wq * &q.mult[i]).collect();
            out.push(Ineq { coeffs, rhs, mult });
        }
    }
    out
}

/// Given values for h_0..h_{var-1}, pick a feasible value for h_var from a
/// system whose active variables are 0..=var.
fn pick_value(system: &[Ineq], var: usize, h: &[BigRational]) -> Option<BigRational> {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for ineq in system {
        let c = &ineq.coeffs[var];
        let mut residual = ineq.rhs.clone();
        for i in 0..var {
            residual -= &ineq.coeffs[i] * &h[i];
        }
        if c.is_zero() {
            if residual.is_positive() {
                return None;
            }
            continue;
        }
        let bound = &residual / c;
        if c.is_positive() {
            lo = Some(match lo {
                Some(l) if l >= bound => l,
                _ => bound,
            });
        } else {
            hi = Some(match hi {
                Some(u) if u <= bound => u,
                _ => bound,
            });
        }
    }
    match (lo, hi) {
        (Some(l), Some(u)) => {
            if l > u {
                None
            } else {
                Some((&l + &u) / BigRational::from_integer(BigInt::from(2)))
            }
        }
        (Some(l), None) => Some(l),
        (None, Some(u)) => Some(u),
        (None, None) => Some(BigRational::zero()),
    }
}

// ---------------------------------------------------------------------------
// Face lattice
// ---------------------------------------------------------------------------

/// Kernel basis of the span of the given row vectors inside Z^dim.
fn kernel_of_rows(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return (0..dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); dim];
                e[i] = BigInt::one();
                e
            })
            .collect();
    }
    lattice_kernel(&IntMatrix::from_bigint_rows(rows.to_vec())).vectors
}

/// Enumerate all faces of the cone over A, each with a verified supporting
/// functional.  The empty face carries the pointedness certificate and the
/// full face the zero functional.
pub fn face_lattice(a: &PointedMatrix) -> FaceLattice {
    let d = a.d();
    let n = a.n();
    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| a.column(j)).collect();
    // Facets: supporting hyperplanes spanned by d-1 linearly independent
    // columns (the empty subset when d = 1).
    let mut facets: BTreeMap<Vec<usize>, Vec<BigRational>> = BTreeMap::new();
    for subset in (0..n).combinations(d - 1) {
        let rows: Vec<Vec<BigInt>> = subset.iter().map(|&j| cols[j].clone()).collect();
        if !rows.is_empty() && IntMatrix::from_bigint_rows(rows.clone()).rank() != d - 1 {
            continue;
        }
        for psi in kernel_of_rows(&rows, d) {
            let sides: Vec<BigInt> = (0..n)
                .map(|j| psi.iter().zip(cols[j].iter()).map(|(x, y)| x * y).sum())
                .collect();
            let oriented: Option<Vec<BigInt>> = if sides.iter().all(|s| !s.is_negative()) {
                Some(psi.clone())
            } else if sides.iter().all(|s| !s.is_positive()) {
                Some(psi.iter().map(|x| -x).collect())
            } else {
                None
            };
            if let Some(phi) = oriented {
                let face_cols: Vec<usize> = (0..n).filter(|&j| sides[j].is_zero()).collect();
                if face_cols.len() == n {
                    continue; // zero functional, not a proper facet
                }
                facets
                    .entry(face_cols)
                    .or_insert_with(|| phi.into_iter().map(BigRational::from_integer).collect());
            }
        }
    }
    // Close under intersection of column sets.
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    sets.insert((0..n).collect());
    for f in facets.keys() {
        sets.insert(f.clone());
    }
    loop {
        let mut new: Vec<Vec<usize>> = Vec::new();
        for (x, y) in sets.iter().tuple_combinations() {
            let inter: Vec<usize> = x.iter().filter(|j| y.contains(j)).cloned().collect();
            if !sets.contains(&inter) {
                new.push(inter);
            }
        }
        if new.is_empty() {
            break;
        }
        sets.extend(new);
    }
    sets.insert(Vec::new());
    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|columns| {
            let functional: Vec<BigRational> = if columns.len() == n {
                vec![BigRational::zero(); d]
            } else if columns.is_empty() {
                a.certificate().to_vec()
            } else {
                // Sum of the functionals of all facets containing this face.
                let mut phi = vec![BigRational::zero(); d];
                for (fc, ff) in &facets {
                    if columns.iter().all(|j| fc.contains(j)) {
                        for i in 0..d {
                            phi[i] += &ff[i];
                        }
                    }
                }
                phi
            };
            let dimension = if columns.is_empty() {
                0
            } else {
                a.matrix().select_cols(&columns).rank()
            };
            Face { columns, functional, dimension }
        })
        .collect();
    faces.sort_by(|x, y| (x.dimension, &x.columns).cmp(&(y.dimension, &y.columns)));
    debug_assert!(faces.iter().all(|f| f.verify(a)));
    let mut containment = Vec::new();
    for i in 0..faces.len() {
        for j in 0..faces.len() {
            if i != j
                && faces[i].columns.len() < faces[j].columns.len()
                && faces[i].columns.iter().all(|c| faces[j].columns.contains(c))
            {
                containment.push((i, j));
            }
        }
    }
    FaceLattice { faces, containment }
}

// ---------------------------------------------------------------------------
// Normalized volume
// ---------------------------------------------------------------------------

/// Insertion orders for the triangulation; both must give the same volume.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointOrder {
    Lex,
    Reverse,
}

/// d! times the Euclidean volume of conv(0, a_1, ..., a_n), computed by an
/// exact recursive triangulation with determinant sums.
pub fn normalized_volume(a: &PointedMatrix) -> BigInt {
    normalized_volume_with_order(a, PointOrder::Lex)
}

pub fn normalized_volume_with_order(a: &PointedMatrix, order: PointOrder) -> BigInt {
    let d = a.d();
    let mut points: Vec<Vec<BigInt>> = Vec::with_capacity(a.n() + 1);
    points.push(vec![BigInt::zero(); d]);
    for j in 0..a.n() {
        points.push(a.column(j));
    }
    if order == PointOrder::Reverse {
        points.reverse();
    }
    let idx: Vec<usize> = (0..points.len()).collect();
    let simplices = triangulate(&points, &idx);
    let mut vol = BigInt::zero();
    for s in simplices {
        debug_assert_eq!(s.len(), d + 1);
        let rows: Vec<Vec<BigInt>> = (1..=d)
            .map(|i| (0..d).map(|c| &points[s[i]][c] - &points[s[0]][c]).collect())
            .collect();
        vol += IntMatrix::from_bigint_rows(rows).det().abs();
    }
    vol
}

fn affine_rank(points: &[Vec<BigInt>], idx: &[usize]) -> usize {
    if idx.len() <= 1 {
        return 0;
    }
    let base = &points[idx[0]];
    let rows: Vec<Vec<BigInt>> = idx[1..]
        .iter()
        .map(|&i| (0..base.len()).map(|c| &points[i][c] - &base[c]).collect())
        .collect();
    IntMatrix::from_bigint_rows(rows).rank()
}

/// Triangulate the convex hull of the given points (a k-dimensional face of
/// the original configuration) into k-simplices, pyramiding from the first
/// point over the facets that do not contain it.
fn triangulate(points: &[Vec<BigInt>], idx: &[usize]) -> Vec<Vec<usize>> {
    let k = affine_rank(points, idx);
    if k == 0 {
        return vec![vec![idx[0]]];
    }
    let apex = idx[0];
    let mut out = Vec::new();
    for (facet, psi, offset) in enumerate_facets(points, idx, k) {
        let apex_side: BigInt =
            psi.iter().zip(points[apex].iter()).map(|(x, y)| x * y).sum::<BigInt>() - &offset;
        if apex_side.is_positive() {
            for sub in triangulate(points, &facet) {
                let mut simplex = Vec::with_capacity(sub.len() + 1);
                simplex.push(apex);
                simplex.extend(sub);
                out.push(simplex);
            }
        }
    }
    out
}

/// Facets of the k-dimensional face spanned by the given points, each with a
/// supporting functional psi and offset c such that psi . p >= c on the face
/// with equality exactly on the facet.
fn enumerate_facets(
    points: &[Vec<BigInt>],
    idx: &[usize],
    k: usize,
) -> Vec<(Vec<usize>, Vec<BigInt>, BigInt)> {
    let dim = points[idx[0]].len();
    let mut found: BTreeMap<Vec<usize>, (Vec<BigInt>, BigInt)> = BTreeMap::new();
    for subset in idx.iter().cloned().combinations(k) {
        let base = &points[subset[0]];
        let dirs: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| (0..dim).map(|c| &points[i][c] - &base[c]).collect())
            .collect();
        if !dirs.is_empty() && IntMatrix::from_bigint_rows(dirs.clone()).rank() != k - 1 {
            continue;
        }
        // A functional vanishing on the subset's affine hull but not on the
        // whole face.
        let kernel = kernel_of_rows(&dirs, dim);
        let psi = kernel.into_iter().find(|psi| {
            idx.iter().any(|&i| {
                let side: BigInt = psi
                    .iter()
                    .zip(points[i].iter().zip(base.iter()))
                    .map(|(x, (p, b))| x * (p - b))
                    .sum();
                !side.is_zero()
            })
        });
        let Some(psi) = psi else { continue };
        let sides: Vec<BigInt> = idx
            .iter()
            .map(|&i| {
                psi.iter()
                    .zip(points[i].iter().zip(base.iter()))
                    .map(|(x, (p, b))| x * (p - b))
                    .sum()
            })
            .collect();
        let (psi, sides): (Vec<BigInt>, Vec<BigInt>) = if sides.iter().all(|s| !s.is_negative()) {
            (psi, sides)
        } else if sides.iter().all(|s| !s.is_positive()) {
            (psi.iter().map(|x| -x).collect(), sides.iter().map(|x| -x).collect())
        } else {
            continue;
        };
        let facet: Vec<usize> = idx
            .iter()
            .enumerate()
            .filter(|(pos, _)| sides[*pos].is_zero())
            .map(|(_, &i)| i)
            .collect();
        let offset: BigInt = psi.iter().zip(base.iter()).map(|(x, y)| x * y).sum();
        found.entry(facet).or_insert((psi, offset));
    }
    found.into_iter().map(|(f, (p, c))| (f, p, c)).collect()
}

// ---------------------------------------------------------------------------
// Semigroup membership
// ---------------------------------------------------------------------------

/// Decide v in NA; on success returns a witness u in N^n with A u = v.
///
/// The search is a depth-first enumeration bounded by the pointedness
/// certificate: any representation satisfies sum_j u_j (h . a_j) = h . v.
pub fn semigroup_member(a: &PointedMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(v.len(), a.d());
    let n = a.n();
    let cols: Vec<Vec<BigInt>> = (0..n).map(|j| a.column(j)).collect();
    let costs: Vec<BigRational> = (0..n).map(|j| dot_qz(a.certificate(), &cols[j])).collect();
    let mut memo: HashMap<Vec<BigInt>, Option<usize>> = HashMap::new();
    fn dfs(
        v: Vec<BigInt>,
        cols: &[Vec<BigInt>],
        costs: &[BigRational],
        h: &[BigRational],
        memo: &mut HashMap<Vec<BigInt>, Option<usize>>,
    ) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        if let Some(hit) = memo.get(&v) {
            return hit.is_some();
        }
        let budget = dot_qz(h, &v);
        let mut ok = None;
        for (j, col) in cols.iter().enumerate() {
            if costs[j] <= budget {
                let next: Vec<BigInt> = v.iter().zip(col.iter()).map(|(a, b)| a - b).collect();
                if dfs(next, cols, costs, h, memo) {
                    ok = Some(j);
                    break;
                }
            }
        }
        memo.insert(v, ok);
        ok.is_some()
    }
    if !dfs(v.to_vec(), &cols, &costs, a.certificate(), &mut memo) {
        return None;
    }
    // Reconstruct the witness from the memoized generator choices.
    let mut u = vec![BigInt::zero(); n];
    let mut cur = v.to_vec();
    while !cur.iter().all(|x| x.is_zero()) {
        let j = memo.get(&cur).cloned().flatten().expect("memo holds the successful path");
        u[j] += 1;
        cur = cur.iter().zip(cols[j].iter()).map(|(a, b)| a - b).collect();
    }
    Some(u)
}

/// Memoized membership oracle for NA + ZF, the true-degree set (up to sign)
/// of the localization of the semigroup ring along the face F.
///
/// Internally works in the quotient Z^d / ZF presented by the Smith normal
/// form of the face's column matrix, so the lattice part of the test is
/// exact even when ZF is not saturated.
pub struct FaceMembershipOracle {
    u: IntMatrix,
    /// Nonzero diagonal entries of the Smith form; coordinate i of the
    /// U-image is taken mod diag[i].
    diag: Vec<BigInt>,
    gens: Vec<Vec<BigInt>>,
    costs: Vec<BigRational>,
    /// The face functional expressed on U-coordinates; vanishes on the
    /// torsion coordinates.
    psi: Vec<BigRational>,
    memo: HashMap<Vec<BigInt>, bool>,
}

impl FaceMembershipOracle {
    pub fn new(a: &PointedMatrix, face: &Face) -> Self {
        let d = a.d();
        let (s, u) = if face.columns.is_empty() {
            (IntMatrix::zero(d, 0), IntMatrix::identity(d))
        } else {
            let (s, u, _) = face.submatrix(a).smith_normal_form();
            (s, u)
        };
        let mut diag = Vec::new();
        for i in 0..d.min(s.cols()) {
            if !s[(i, i)].is_zero() {
                diag.push(s[(i, i)].clone());
            }
        }
        // psi solves U^T psi = phi, i.e. psi = phi . U^{-1}.
        let ut: Vec<Vec<BigRational>> = (0..d)
            .map(|i| (0..d).map(|j| BigRational::from_integer(u[(j, i)].clone())).collect())
            .collect();
        let psi =
            crate::intlinalg::solve_rational(&ut, &face.functional).expect("U is unimodular");
        for (i, _) in diag.iter().enumerate() {
            debug_assert!(psi[i].is_zero(), "functional must vanish on torsion coordinates");
        }
        let mut gens = Vec::new();
        let mut costs = Vec::new();
        for j in 0..a.n() {
            if face.columns.contains(&j) {
                continue;
            }
            let col = a.column(j);
            let img = Self::reduce_raw(&u.mul_vec(&col), &diag);
            let cost = dot_qz(&face.functional, &col);
            debug_assert!(cost.is_positive());
            gens.push(img);
            costs.push(cost);
        }
        FaceMembershipOracle { u, diag, gens, costs, psi, memo: HashMap::new() }
    }

    fn reduce_raw(y: &[BigInt], diag: &[BigInt]) -> Vec<BigInt> {
        let mut out = y.to_vec();
        for (i, s) in diag.iter().enumerate() {
            out[i] = num::Integer::mod_floor(&out[i], s);
        }
        out
    }

    /// Decide v in NA + ZF.
    pub fn contains(&mut self, v: &[BigInt]) -> bool {
        let y = Self::reduce_raw(&self.u.mul_vec(v), &self.diag);
        self.dfs(y)
    }

    fn dfs(&mut self, t: Vec<BigInt>) -> bool {
        if t.iter().all(|x| x.is_zero()) {
            return true;
        }
        if let Some(&hit) = self.memo.get(&t) {
            return hit;
        }
        let tq: Vec<BigRational> = t.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let budget = dot_qq(&self.psi, &tq);
        let mut ok = false;
        for j in 0..self.gens.len() {
            if self.costs[j] <= budget {
                let raw: Vec<BigInt> =
                    t.iter().zip(self.gens[j].iter()).map(|(a, b)| a - b).collect();
                let next = Self::reduce_raw(&raw, &self.diag);
                if self.dfs(next) {
                    ok = true;
                    break;
                }
            }
        }
        self.memo.insert(t, ok);
        ok
    }
}

/// One-shot convenience wrapper around [`FaceMembershipOracle`].
pub fn localized_member(a: &PointedMatrix, face: &Face, v: &[BigInt]) -> bool {
    FaceMembershipOracle::new(a, face).contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(rows: &[Vec<i64>]) -> PointedMatrix {
        make_pointed_matrix(IntMatrix::from_rows(rows)).unwrap()
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn matrix_0134() -> PointedMatrix {
        pm(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]])
    }

    #[test]
    fn pointed_0134() {
        let a = matrix_0134();
        assert!(a.certificate_is_valid());
        // The explicit certificate (1, 0) also works.
        let h = vec![BigRational::one(), BigRational::zero()];
        assert!((0..4).all(|j| dot_qz(&h, &a.column(j)).is_positive()));
    }

    #[test]
    fn not_pointed_symmetric() {
        let err = make_pointed_matrix(IntMatrix::from_rows(&[vec![1, -1]])).unwrap_err();
        match err {
            Error::NotPointed { counter_certificate: Some(u) } => {
                assert!(u.iter().all(|x| !x.is_negative()));
                assert!(u.iter().any(|x| x.is_positive()));
                let a = IntMatrix::from_rows(&[vec![1, -1]]);
                assert!(a.mul_vec(&u).iter().all(|x| x.is_zero()));
            }
            other => panic!("expected NotPointed with certificate, got {other:?}"),
        }
    }

    #[test]
    fn pointed_identity() {
        let a = pm(&[vec![1, 0], vec![0, 1]]);
        assert!(a.certificate_is_valid());
    }

    #[test]
    fn not_full_rank() {
        let err =
            make_pointed_matrix(IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]])).unwrap_err();
        assert!(matches!(err, Error::NotFullRank { expected: 2, found: 1 }));
    }

    #[test]
    fn face_lattice_simplicial() {
        let a = pm(&[vec![1, 0], vec![0, 1]]);
        let fl = face_lattice(&a);
        let sets: Vec<Vec<usize>> = fl.faces.iter().map(|f| f.columns.clone()).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![1], vec![0, 1]]);
        assert!(fl.faces.iter().all(|f| f.verify(&a)));
    }

    #[test]
    fn face_lattice_0134() {
        let a = matrix_0134();
        let fl = face_lattice(&a);
        let sets: Vec<Vec<usize>> = fl.faces.iter().map(|f| f.columns.clone()).collect();
        // Interior columns (0-indexed 1 and 2) lie on no proper face.
        assert_eq!(sets, vec![vec![], vec![0], vec![3], vec![0, 1, 2, 3]]);
        assert_eq!(fl.faces[1].dimension, 1);
        assert_eq!(fl.faces[3].dimension, 2);
        assert!(fl.faces.iter().all(|f| f.verify(&a)));
    }

    #[test]
    fn face_lattice_single_ray() {
        let a = pm(&[vec![2, 3]]);
        let fl = face_lattice(&a);
        let sets: Vec<Vec<usize>> = fl.faces.iter().map(|f| f.columns.clone()).collect();
        assert_eq!(sets, vec![vec![], vec![0, 1]]);
    }

    #[test]
    fn volume_examples() {
        assert_eq!(normalized_volume(&pm(&[vec![1, 0], vec![0, 1]])), BigInt::from(1));
        assert_eq!(normalized_volume(&matrix_0134()), BigInt::from(4));
        assert_eq!(normalized_volume(&pm(&[vec![1, 1, 1], vec![0, 1, 2]])), BigInt::from(2));
    }

    #[test]
    fn volume_order_independence() {
        for rows in [
            vec![vec![1, 1, 1, 1], vec![0, 1, 3, 4]],
            vec![vec![1, 0, 2], vec![0, 1, 3]],
            vec![vec![2, 3]],
            vec![vec![1, 1, 1], vec![0, 2, 4]],
        ] {
            let a = pm(&rows);
            assert_eq!(
                normalized_volume_with_order(&a, PointOrder::Lex),
                normalized_volume_with_order(&a, PointOrder::Reverse),
            );
        }
    }

    #[test]
    fn member_examples() {
        let a = matrix_0134();
        let w = semigroup_member(&a, &bi(&[2, 2])).expect("member");
        assert_eq!(w, bi(&[0, 2, 0, 0]));
        assert!(semigroup_member(&a, &bi(&[1, 2])).is_none());
        assert_eq!(semigroup_member(&a, &bi(&[0, 0])), Some(bi(&[0, 0, 0, 0])));
    }

    #[test]
    fn member_witness_valid() {
        let a = matrix_0134();
        for v in [[3, 5], [4, 9], [5, 0], [2, 7]] {
            if let Some(u) = semigroup_member(&a, &bi(&v)) {
                assert_eq!(a.matrix().mul_vec(&u), bi(&v));
            }
        }
    }

    #[test]
    fn localized_full_face_is_lattice_membership() {
        let a = matrix_0134();
        let fl = face_lattice(&a);
        let full = fl.full_face();
        // ZA = Z^2 here, so everything is a member.
        assert!(localized_member(&a, full, &bi(&[-5, 7])));
        assert!(localized_member(&a, full, &bi(&[0, -1])));
    }

    #[test]
    fn localized_nonsaturated_lattice() {
        // Columns (2,0) and (0,1): the face {0} generates the index-2
        // sublattice 2Z x 0, and (1,0) is not in NA + ZF.
        let a = pm(&[vec![2, 0], vec![0, 1]]);
        let fl = face_lattice(&a);
        let ray = fl.faces.iter().find(|f| f.columns == vec![0]).unwrap();
        assert!(localized_member(&a, ray, &bi(&[-2, 0])));
        assert!(localized_member(&a, ray, &bi(&[-2, 3])));
        assert!(!localized_member(&a, ray, &bi(&[1, 0])));
        assert!(!localized_member(&a, ray, &bi(&[0, -1])));
    }

    #[test]
    fn localized_empty_face_reduces_to_member() {
        let a = matrix_0134();
        let fl = face_lattice(&a);
        let empty = fl.empty_face();
        for v in [[2, 2], [1, 2], [0, 0], [3, 1], [-1, 0]] {
            assert_eq!(
                localized_member(&a, empty, &bi(&v)),
                semigroup_member(&a, &bi(&v)).is_some(),
            );
        }
    }

    #[test]
    fn localized_0134_ray() {
        let a = matrix_0134();
        let fl = face_lattice(&a);
        let ray0 = fl.faces.iter().find(|f| f.columns == vec![0]).unwrap();
        // (0, -1): everything in NA + Z(1,0) has second coordinate >= 0.
        assert!(!localized_member(&a, ray0, &bi(&[0, -1])));
        assert!(localized_member(&a, ray0, &bi(&[-1, 0])));
        assert!(localized_member(&a, ray0, &bi(&[1, 2])));
    }

    #[test]
    fn member_implies_localized_monotone() {
        let a = matrix_0134();
        let fl = face_lattice(&a);
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = bi(&[x, y]);
                if semigroup_member(&a, &v).is_some() {
                    for f in &fl.faces {
                        assert!(localized_member(&a, f, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn pointedness_no_units() {
        let a = matrix_0134();
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let v = bi(&[x, y]);
                let neg: Vec<BigInt> = v.iter().map(|t| -t).collect();
                if semigroup_member(&a, &v).is_some() && semigroup_member(&a, &neg).is_some() {
                    assert!(v.iter().all(|t| t.is_zero()));
                }
            }
        }
    }
}

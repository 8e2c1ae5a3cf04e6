//! The Z^d-graded polynomial ring R = Q[x_1..x_n] with deg x_j = -a_j:
//! monomial orders, Buchberger's algorithm over exact rationals, toric and
//! face ideals, saturation, and total-degree initial ideals.
//!
//! The paper's coefficient field is the complex numbers; all defining data
//! (binomials, face functionals, degree shifts) are rational, so computing
//! over Q is sound for everything this crate reports.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::conegeom::{face_lattice, Face, FaceLattice, PointedMatrix};
use crate::intlinalg::lattice_kernel;

pub type Expo = Vec<u32>;

/// Monomial orders.  The default is degree-reverse-lexicographic with
/// variables ordered by column index; `ElimLast` makes the last `k`
/// variables dominate, which is what saturation and intersection tricks
/// need to eliminate auxiliary variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    ElimLast { eliminated: usize },
}

/// Plain polynomial ring descriptor: a variable count and a monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub n_vars: usize,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn degrevlex(n_vars: usize) -> Self {
        PolyRing { n_vars, order: MonomialOrder::DegRevLex }
    }

    pub fn cmp_expo(&self, a: &Expo, b: &Expo) -> Ordering {
        match self.order {
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
            MonomialOrder::ElimLast { eliminated } => {
                let n = self.n_vars;
                let da: u64 = a[n - eliminated..].iter().map(|&x| x as u64).sum();
                let db: u64 = b[n - eliminated..].iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| cmp_degrevlex(a, b))
            }
        }
    }
}

fn cmp_degrevlex(a: &Expo, b: &Expo) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

pub fn expo_divides(a: &Expo, b: &Expo) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

pub fn expo_lcm(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub fn expo_sub(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

pub fn expo_add(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub fn expo_total_degree(a: &Expo) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

/// A polynomial with exact rational coefficients; terms are kept sorted in
/// strictly decreasing monomial order with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedPolynomial {
    pub terms: Vec<(BigRational, Expo)>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        GradedPolynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(ring: &PolyRing, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial { terms: vec![(c, vec![0; ring.n_vars])] }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn variable(ring: &PolyRing, j: usize) -> Self {
        let mut e = vec![0u32; ring.n_vars];
        e[j] = 1;
        GradedPolynomial { terms: vec![(BigRational::one(), e)] }
    }

    pub fn monomial(ring: &PolyRing, c: BigRational, e: Expo) -> Self {
        assert_eq!(e.len(), ring.n_vars);
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial { terms: vec![(c, e)] }
    }

    /// Build from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(BigRational, Expo)>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| ring.cmp_expo(&b.1, &a.1));
        let mut out: Vec<(BigRational, Expo)> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == e {
                    last.0 += c;
                    continue;
                }
            }
            out.push((c, e));
        }
        out.retain(|(c, _)| !c.is_zero());
        GradedPolynomial { terms: out }
    }

    pub fn lead(&self) -> Option<&(BigRational, Expo)> {
        self.terms.first()
    }

    pub fn add(&self, ring: &PolyRing, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(ring, terms)
    }

    pub fn neg(&self) -> Self {
        GradedPolynomial { terms: self.terms.iter().map(|(c, e)| (-c, e.clone())).collect() }
    }

    pub fn sub(&self, ring: &PolyRing, other: &Self) -> Self {
        self.add(ring, &other.neg())
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, coeff: &BigRational, e: &Expo) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(c, f)| (c * coeff, expo_add(f, e))).collect(),
        }
    }

    pub fn mul(&self, ring: &PolyRing, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c, e) in &self.terms {
            for (c2, e2) in &other.terms {
                terms.push((c * c2, expo_add(e, e2)));
            }
        }
        Self::from_terms(ring, terms)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial { terms: self.terms.iter().map(|(a, e)| (a * c, e.clone())).collect() }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some((c, _)) => self.scale(&c.recip()),
        }
    }

    /// Z^d-degree when the polynomial is homogeneous for deg x_j = -a_j.
    pub fn homogeneous_degree(&self, ctx: &RingContext) -> Option<Vec<BigInt>> {
        let first = self.terms.first()?;
        let deg = ctx.expo_degree(&first.1);
        for (_, e) in &self.terms[1..] {
            if ctx.expo_degree(e) != deg {
                return None;
            }
        }
        Some(deg)
    }

    /// Sum of the terms of maximal total degree (the image of the order
    /// filtration, with each variable read as its xi counterpart).
    pub fn initial_form(&self, ring: &PolyRing) -> Self {
        let Some(top) = self.terms.iter().map(|(_, e)| expo_total_degree(e)).max() else {
            return Self::zero();
        };
        let terms: Vec<(BigRational, Expo)> = self
            .terms
            .iter()
            .filter(|(_, e)| expo_total_degree(e) == top)
            .cloned()
            .collect();
        Self::from_terms(ring, terms)
    }

    /// Extend the exponent vectors with `extra` zero entries at the end.
    pub fn extend_vars(&self, extra: usize) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(c, e)| {
                    let mut f = e.clone();
                    f.extend(std::iter::repeat(0).take(extra));
                    (c.clone(), f)
                })
                .collect(),
        }
    }

    /// Drop the last `extra` exponent entries; the caller guarantees they
    /// are zero.
    pub fn truncate_vars(&self, ring: &PolyRing, extra: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(c, e)| {
                debug_assert!(e[e.len() - extra..].iter().all(|&x| x == 0));
                (c.clone(), e[..e.len() - extra].to_vec())
            })
            .collect();
        Self::from_terms(ring, terms)
    }

    /// Re-sort terms under a (possibly different) order.
    pub fn reorder(&self, ring: &PolyRing) -> Self {
        Self::from_terms(ring, self.terms.clone())
    }

    pub fn involves_last_vars(&self, extra: usize) -> bool {
        self.terms.iter().any(|(_, e)| e[e.len() - extra..].iter().any(|&x| x != 0))
    }

    pub fn format_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, e)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(j, &p)| if p == 1 { names(j) } else { format!("{}^{}", names(j), p) })
                .collect();
            let mono_str = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if mag.is_one() && !mono.is_empty() {
                out.push_str(&mono_str);
            } else if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{}*{}", mag, mono_str));
            }
        }
        out
    }
}

impl std::fmt::Debug for GradedPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_with(&|j| format!("x{}", j + 1)))
    }
}

// ---------------------------------------------------------------------------
// Ring context: the graded ring attached to a pointed matrix
// ---------------------------------------------------------------------------

/// The ring R = Q[x_1..x_n] graded by deg x_j = -a_j, with the fixed
/// monomial order, the canonical-module twist eps_A = sum of columns, and a
/// cached face lattice.
pub struct RingContext {
    pointed: PointedMatrix,
    ring: PolyRing,
    epsilon: Vec<BigInt>,
    faces: OnceLock<FaceLattice>,
}

impl RingContext {
    pub fn new(pointed: PointedMatrix) -> Self {
        let d = pointed.d();
        let mut epsilon = vec![BigInt::zero(); d];
        for j in 0..pointed.n() {
            for (i, x) in pointed.column(j).into_iter().enumerate() {
                epsilon[i] += x;
            }
        }
        let ring = PolyRing::degrevlex(pointed.n());
        RingContext { pointed, ring, epsilon, faces: OnceLock::new() }
    }

    pub fn pointed(&self) -> &PointedMatrix {
        &self.pointed
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.pointed.n()
    }

    pub fn d(&self) -> usize {
        self.pointed.d()
    }

    pub fn epsilon(&self) -> &[BigInt] {
        &self.epsilon
    }

    /// deg x_j = -a_j.
    pub fn var_degree(&self, j: usize) -> Vec<BigInt> {
        self.pointed.column(j).into_iter().map(|x| -x).collect()
    }

    /// deg x^u = -A u.
    pub fn expo_degree(&self, e: &Expo) -> Vec<BigInt> {
        let d = self.d();
        let mut out = vec![BigInt::zero(); d];
        for (j, &p) in e.iter().enumerate() {
            if p == 0 {
                continue;
            }
            let col = self.pointed.column(j);
            for i in 0..d {
                out[i] -= &col[i] * BigInt::from(p);
            }
        }
        out
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.faces.get_or_init(|| face_lattice(&self.pointed))
    }

    /// All monomials of the given Z^d-degree; finite because A is pointed.
    /// These are the u in N^n with A u = -deg.
    pub fn monomials_of_degree(&self, deg: &[BigInt]) -> Vec<Expo> {
        let target: Vec<BigInt> = deg.iter().map(|x| -x).collect();
        let mut out = Vec::new();
        let mut current = vec![0u32; self.n()];
        self.enumerate_monomials(&target, 0, &mut current, &mut out);
        out
    }

    fn enumerate_monomials(
        &self,
        remaining: &[BigInt],
        var: usize,
        current: &mut Expo,
        out: &mut Vec<Expo>,
    ) {
        let budget = crate::conegeom::dot_qz(self.pointed.certificate(), remaining);
        if budget.is_negative() {
            return;
        }
        if var == self.n() {
            if remaining.iter().all(|x| x.is_zero()) {
                out.push(current.clone());
            }
            return;
        }
        let col = self.pointed.column(var);
        let cost = crate::conegeom::dot_qz(self.pointed.certificate(), &col);
        let mut mult = 0u32;
        let mut rem = remaining.to_vec();
        loop {
            current[var] = mult;
            self.enumerate_monomials(&rem, var + 1, current, out);
            let next_budget = crate::conegeom::dot_qz(self.pointed.certificate(), &rem);
            if next_budget < cost {
                break;
            }
            for i in 0..rem.len() {
                rem[i] = &rem[i] - &col[i];
            }
            mult += 1;
        }
        current[var] = 0;
    }
}

// ---------------------------------------------------------------------------
// Division and Buchberger
// ---------------------------------------------------------------------------

/// Total normal form of `p` against `basis` (full tail reduction).
pub fn normal_form(
    ring: &PolyRing,
    p: &GradedPolynomial,
    basis: &[GradedPolynomial],
) -> GradedPolynomial {
    let mut remainder: Vec<(BigRational, Expo)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((lc, le)) = work.lead().cloned() {
        for g in basis {
            let Some((gc, ge)) = g.lead() else { continue };
            if expo_divides(ge, &le) {
                let factor = &lc / gc;
                let shift = expo_sub(&le, ge);
                work = work.sub(ring, &g.mul_term(&factor, &shift));
                continue 'outer;
            }
        }
        remainder.push((lc, le.clone()));
        work.terms.remove(0);
    }
    GradedPolynomial { terms: remainder }
}

fn s_polynomial(ring: &PolyRing, f: &GradedPolynomial, g: &GradedPolynomial) -> GradedPolynomial {
    let (fc, fe) = f.lead().expect("nonzero");
    let (gc, ge) = g.lead().expect("nonzero");
    let l = expo_lcm(fe, ge);
    let a = f.mul_term(&fc.recip(), &expo_sub(&l, fe));
    let b = g.mul_term(&gc.recip(), &expo_sub(&l, ge));
    a.sub(ring, &b)
}

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing lead
/// monomial.  Deterministic for a fixed order and input ordering.
pub fn buchberger(ring: &PolyRing, gens: &[GradedPolynomial]) -> Vec<GradedPolynomial> {
    let mut basis: Vec<GradedPolynomial> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // Normal selection: smallest lcm in the monomial order.
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, (i1, j1)), (_, (i2, j2))| {
                let l1 = expo_lcm(&basis[*i1].lead().unwrap().1, &basis[*j1].lead().unwrap().1);
                let l2 = expo_lcm(&basis[*i2].lead().unwrap().1, &basis[*j2].lead().unwrap().1);
                ring.cmp_expo(&l1, &l2).then_with(|| (i1, j1).cmp(&(i2, j2)))
            })
            .map(|(k, _)| k)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let fe = &basis[i].lead().unwrap().1;
        let ge = &basis[j].lead().unwrap().1;
        // Buchberger's first criterion: coprime leading monomials.
        if expo_lcm(fe, ge) == expo_add(fe, ge) {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let nf = normal_form(ring, &s, &basis);
        if !nf.is_zero() {
            let k = basis.len();
            basis.push(nf.monic());
            for t in 0..k {
                pairs.push((t, k));
            }
        }
    }
    reduce_basis(ring, basis)
}

/// Inter-reduce a Groebner basis into the reduced one.
fn reduce_basis(ring: &PolyRing, mut basis: Vec<GradedPolynomial>) -> Vec<GradedPolynomial> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| ring.cmp_expo(&a.lead().unwrap().1, &b.lead().unwrap().1));
    // Minimal: drop elements whose lead is divisible by an earlier lead.
    let mut keep: Vec<GradedPolynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let ge = &g.lead().unwrap().1;
        let dominated = basis.iter().enumerate().any(|(j, h)| {
            j != i && {
                let he = &h.lead().unwrap().1;
                expo_divides(he, ge) && (he != ge || j < i)
            }
        });
        if !dominated {
            keep.push(g.clone());
        }
    }
    // Reduced: tail-reduce each against the others.
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<GradedPolynomial> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let r = normal_form(ring, &keep[i], &others);
        if !r.is_zero() {
            out.push(r.monic());
        }
    }
    out.sort_by(|a, b| ring.cmp_expo(&a.lead().unwrap().1, &b.lead().unwrap().1));
    out
}

// ---------------------------------------------------------------------------
// Graded ideals
// ---------------------------------------------------------------------------

/// An ideal with a cached reduced Groebner basis.
#[derive(Clone)]
pub struct GradedIdeal {
    pub generators: Vec<GradedPolynomial>,
    gb: OnceLock<Vec<GradedPolynomial>>,
}

impl GradedIdeal {
    pub fn new(generators: Vec<GradedPolynomial>) -> Self {
        GradedIdeal { generators, gb: OnceLock::new() }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn groebner(&self, ring: &PolyRing) -> &[GradedPolynomial] {
        self.gb.get_or_init(|| buchberger(ring, &self.generators))
    }

    pub fn contains(&self, ring: &PolyRing, p: &GradedPolynomial) -> bool {
        normal_form(ring, p, self.groebner(ring)).is_zero()
    }

    pub fn contains_ideal(&self, ring: &PolyRing, other: &GradedIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(ring, g))
    }

    pub fn equals(&self, ring: &PolyRing, other: &GradedIdeal) -> bool {
        self.contains_ideal(ring, other) && other.contains_ideal(ring, self)
    }

    pub fn is_zero_ideal(&self, ring: &PolyRing) -> bool {
        self.groebner(ring).is_empty()
    }

    pub fn is_unit_ideal(&self, ring: &PolyRing) -> bool {
        self.groebner(ring)
            .iter()
            .any(|g| g.lead().map(|(_, e)| e.iter().all(|&x| x == 0)).unwrap_or(false))
    }
}

/// Binomial x^{u+} - x^{u-} from an integer kernel vector.
fn kernel_binomial(ring: &PolyRing, u: &[BigInt]) -> GradedPolynomial {
    let n = ring.n_vars;
    let mut plus = vec![0u32; n];
    let mut minus = vec![0u32; n];
    for j in 0..n {
        if u[j].is_positive() {
            plus[j] = u32::try_from(&u[j]).expect("desk-scale exponent");
        } else if u[j].is_negative() {
            minus[j] = u32::try_from(&(-&u[j])).expect("desk-scale exponent");
        }
    }
    GradedPolynomial::from_terms(
        ring,
        vec![(BigRational::one(), plus), (-BigRational::one(), minus)],
    )
}

/// Saturation (I : f^inf) by the extra-variable trick: adjoin t, add 1 - t*f,
/// and eliminate t.
pub fn saturate(ring: &PolyRing, ideal: &GradedIdeal, f: &GradedPolynomial) -> GradedIdeal {
    if f.is_zero() {
        return GradedIdeal::new(ideal.generators.clone());
    }
    let ext =
        PolyRing { n_vars: ring.n_vars + 1, order: MonomialOrder::ElimLast { eliminated: 1 } };
    let mut gens: Vec<GradedPolynomial> =
        ideal.generators.iter().map(|g| g.extend_vars(1).reorder(&ext)).collect();
    let t = GradedPolynomial::variable(&ext, ring.n_vars);
    let one = GradedPolynomial::one(&ext);
    gens.push(one.sub(&ext, &t.mul(&ext, &f.extend_vars(1))));
    let gb = buchberger(&ext, &gens);
    let kept: Vec<GradedPolynomial> = gb
        .iter()
        .filter(|g| !g.involves_last_vars(1))
        .map(|g| g.truncate_vars(ring, 1))
        .collect();
    GradedIdeal::new(reduce_basis(ring, kept))
}

/// The toric ideal I_A = < x^u - x^v : A u = A v >, computed from a kernel
/// lattice basis followed by saturation with respect to the product of all
/// variables.
pub fn toric_ideal(ctx: &RingContext) -> GradedIdeal {
    toric_ideal_for_columns(ctx, &(0..ctx.n()).collect::<Vec<_>>())
}

/// Toric ideal of the column submatrix, embedded in the full ring (variables
/// off the subset do not appear).
fn toric_ideal_for_columns(ctx: &RingContext, cols: &[usize]) -> GradedIdeal {
    let ring = ctx.ring();
    let sub = ctx.pointed().matrix().select_cols(cols);
    let kernel = lattice_kernel(&sub);
    if kernel.rank() == 0 {
        return GradedIdeal::zero();
    }
    let gens: Vec<GradedPolynomial> = kernel
        .vectors
        .iter()
        .map(|u| {
            let mut full = vec![BigInt::zero(); ctx.n()];
            for (pos, &j) in cols.iter().enumerate() {
                full[j] = u[pos].clone();
            }
            kernel_binomial(ring, &full)
        })
        .collect();
    let lattice_ideal = GradedIdeal::new(gens);
    let mut prod_e = vec![0u32; ctx.n()];
    for &j in cols {
        prod_e[j] = 1;
    }
    let prod = GradedPolynomial::monomial(ring, BigRational::one(), prod_e);
    let saturated = saturate(ring, &lattice_ideal, &prod);
    GradedIdeal::new(saturated.groebner(ring).to_vec())
}

/// The prime face ideal I_F: the toric ideal of the face submatrix plus the
/// variables corresponding to columns outside F.
pub fn face_ideal(ctx: &RingContext, face: &Face) -> GradedIdeal {
    let ring = ctx.ring();
    let mut gens: Vec<GradedPolynomial> = Vec::new();
    if !face.columns.is_empty() {
        gens.extend(toric_ideal_for_columns(ctx, &face.columns).generators);
    }
    for j in 0..ctx.n() {
        if !face.columns.contains(&j) {
            gens.push(GradedPolynomial::variable(ring, j));
        }
    }
    GradedIdeal::new(gens)
}

/// Initial ideal for the total-degree filtration: generated by the sums of
/// top-degree terms of a Groebner basis under a degree-compatible order.
/// The result lives in the xi-variables (same exponent data).
pub fn initial_ideal_total_degree(ring: &PolyRing, ideal: &GradedIdeal) -> GradedIdeal {
    assert_eq!(
        ring.order,
        MonomialOrder::DegRevLex,
        "initial ideals need a degree-compatible order"
    );
    let gb = ideal.groebner(ring);
    GradedIdeal::new(gb.iter().map(|g| g.initial_form(ring)).collect())
}

/// Intersection of two ideals via the one-variable trick:
/// I cap J = (t*I + (1-t)*J) cap R.
pub fn intersect_ideals(ring: &PolyRing, a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
    let ext =
        PolyRing { n_vars: ring.n_vars + 1, order: MonomialOrder::ElimLast { eliminated: 1 } };
    let t = GradedPolynomial::variable(&ext, ring.n_vars);
    let one_minus_t = GradedPolynomial::one(&ext).sub(&ext, &t);
    let mut gens = Vec::new();
    for g in &a.generators {
        gens.push(t.mul(&ext, &g.extend_vars(1)));
    }
    for g in &b.generators {
        gens.push(one_minus_t.mul(&ext, &g.extend_vars(1)));
    }
    let gb = buchberger(&ext, &gens);
    let kept: Vec<GradedPolynomial> = gb
        .iter()
        .filter(|g| !g.involves_last_vars(1))
        .map(|g| g.truncate_vars(ring, 1))
        .collect();
    GradedIdeal::new(reduce_basis(ring, kept))
}

//! Conjugation invariants of real subalgebras, and eigenvalue comparisons for
//! one-dimensional spans.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, Sign};
use crate::liealg::{a_basis, bracket, AlgElement, Subalgebra};
use crate::linalg::{hermitian_signature, realify, rref_rows, CoordMatrix, ScalarDomain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureClass {
    Abelian,
    Nilpotent,
    Solvable,
    Semisimple,
    LeviDecomposable,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// Dimensions of `u, [u,u], …` until the series stabilizes.
    pub derived_dims: Vec<usize>,
    /// Dimensions of `u, [u,u], [u,[u,u]], …` until the series stabilizes.
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    /// Signature of `tr(ad x · ad y)` on `u` itself.
    pub killing_signature: (usize, usize, usize),
    /// Signature of `tr(x·y)` restricted to `u`.
    pub trace_signature: (usize, usize, usize),
    pub structure_class: StructureClass,
}

fn bracket_span(xs: &[AlgElement], ys: &[AlgElement]) -> Vec<AlgElement> {
    let mut brackets = Vec::new();
    for x in xs {
        for y in ys {
            let b = bracket(x, y);
            if !b.is_zero() {
                brackets.push(b);
            }
        }
    }
    Subalgebra::new("", ScalarDomain::Real, brackets).basis()
}

fn series(u: &[AlgElement], derived: bool) -> Vec<usize> {
    let mut dims = vec![u.len()];
    let mut cur = u.to_vec();
    loop {
        let next = if derived { bracket_span(&cur, &cur) } else { bracket_span(u, &cur) };
        if next.len() == cur.len() {
            return dims;
        }
        dims.push(next.len());
        if next.is_empty() {
            return dims;
        }
        cur = next;
    }
}

fn symmetric_signature(m: &[Vec<FieldElement>]) -> Result<(usize, usize, usize)> {
    if m.is_empty() {
        return Ok((0, 0, 0));
    }
    hermitian_signature(m)
}

/// Dimension of the centralizer of `u` in sl(3,ℂ). It depends only on the
/// complex orbit, so real forms of different complex orbits differ here even
/// when their fingerprints agree.
pub fn ambient_centralizer_dim(u: &Subalgebra) -> usize {
    let basis = a_basis();
    let mut rows = Vec::new();
    for b in u.basis() {
        let images: Vec<AlgElement> = basis.iter().map(|a| bracket(a, &b)).collect();
        for r in 0..3 {
            for c in 0..3 {
                rows.push(images.iter().map(|x| x.matrix().get(r, c).clone()).collect());
            }
        }
    }
    if rows.is_empty() {
        return 8;
    }
    8 - CoordMatrix::new(rows, ScalarDomain::Complex).rank()
}

/// Exact invariants of a closed real subalgebra.
pub fn fingerprint(u: &Subalgebra) -> Result<Fingerprint> {
    if u.domain() != ScalarDomain::Real {
        return Err(Error::DomainMismatch);
    }
    let basis = u.basis();
    let k = basis.len();
    // ad[i][l][j]: coefficient of b_l in [b_i, b_j]
    let mut ad = vec![vec![vec![FieldElement::zero(); k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            let c = u
                .coordinates_of(&bracket(&basis[i], &basis[j]))
                .ok_or_else(|| Error::NotClosed(u.label().to_string()))?;
            for (l, v) in c.into_iter().enumerate() {
                ad[i][l][j] = v;
            }
        }
    }
    let killing: Vec<Vec<FieldElement>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut t = FieldElement::zero();
                    for l in 0..k {
                        for m in 0..k {
                            if !ad[i][l][m].is_zero() && !ad[j][m][l].is_zero() {
                                t += &(&ad[i][l][m] * &ad[j][m][l]);
                            }
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    let trace: Vec<Vec<FieldElement>> = (0..k)
        .map(|i| (0..k).map(|j| (basis[i].matrix() * basis[j].matrix()).trace()).collect())
        .collect();
    let center_rows: Vec<Vec<FieldElement>> = basis
        .iter()
        .map(|x| basis.iter().flat_map(|y| realify(&bracket(x, y).a_coords())).collect())
        .collect();
    let center_dim = k - rref_rows(center_rows).len();

    let derived_dims = series(&basis, true);
    let lower_central_dims = series(&basis, false);
    let killing_signature = symmetric_signature(&killing)?;
    let trace_signature = symmetric_signature(&trace)?;
    let solvable = derived_dims.last() == Some(&0);
    let nilpotent = lower_central_dims.last() == Some(&0);
    let structure_class = if k == 0 {
        StructureClass::Other
    } else if derived_dims.get(1) == Some(&0) {
        StructureClass::Abelian
    } else if nilpotent {
        StructureClass::Nilpotent
    } else if solvable {
        StructureClass::Solvable
    } else if killing_signature.2 == 0 {
        StructureClass::Semisimple
    } else {
        StructureClass::LeviDecomposable
    };
    Ok(Fingerprint {
        dim: k,
        derived_dims,
        lower_central_dims,
        center_dim,
        killing_signature,
        trace_signature,
        structure_class,
    })
}

/// The real scalars `c` with `charpoly(y)(t) = c³·charpoly(x)(t/c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingMatch {
    Empty,
    Finite(Vec<FieldElement>),
    /// The real roots of `c^degree = radicand`, which lie outside ℚ(ζ₈).
    Radical { degree: u32, radicand: FieldElement },
    AnyNonzero,
}

impl ScalingMatch {
    pub fn is_empty(&self) -> bool {
        matches!(self, ScalingMatch::Empty)
    }

    pub fn contains(&self, c: &FieldElement) -> bool {
        if c.is_zero() || !c.is_real() {
            return false;
        }
        match self {
            ScalingMatch::Empty => false,
            ScalingMatch::Finite(v) => v.contains(c),
            ScalingMatch::Radical { degree, radicand } => c.pow(*degree) == *radicand,
            ScalingMatch::AnyNonzero => true,
        }
    }
}

/// Necessary condition for `⟨x⟩` and `⟨y⟩` to be conjugate: the eigenvalues of
/// `y` are those of `x` scaled by one real `c ≠ 0`.
pub fn eigenvalue_scaling_match(x: &AlgElement, y: &AlgElement) -> ScalingMatch {
    let (x2, x1, x0) = x.matrix().charpoly();
    let (y2, y1, y0) = y.matrix().charpoly();
    // p_{3−k}(y) = c^k · p_{3−k}(x)
    let pairs = [(1u32, x2, y2), (2, x1, y1), (3, x0, y0)];
    let mut ratios: Vec<(u32, FieldElement)> = Vec::new();
    for (k, px, py) in pairs {
        if px.is_zero() {
            if !py.is_zero() {
                return ScalingMatch::Empty;
            }
            continue;
        }
        let r = (&py / &px).expect("nonzero divisor");
        if r.is_zero() || !r.is_real() {
            return ScalingMatch::Empty;
        }
        ratios.push((k, r));
    }
    let consistent = |c: &FieldElement| ratios.iter().all(|(k, r)| c.pow(*k) == *r);
    let finite = |c: FieldElement| {
        if consistent(&c) {
            ScalingMatch::Finite(vec![c])
        } else {
            ScalingMatch::Empty
        }
    };
    let get = |k: u32| ratios.iter().find(|(j, _)| *j == k).map(|(_, r)| r.clone());
    match (get(1), get(2), get(3)) {
        (None, None, None) => ScalingMatch::AnyNonzero,
        (Some(c), _, _) => finite(c),
        (None, Some(r2), Some(r3)) => finite((&r3 / &r2).expect("nonzero ratio")),
        (None, Some(r2), None) => {
            if r2.real_sign() != Ok(Sign::Positive) {
                return ScalingMatch::Empty;
            }
            match r2.sqrt_real() {
                Some(s) => ScalingMatch::Finite(vec![-&s, s]),
                None => ScalingMatch::Radical { degree: 2, radicand: r2 },
            }
        }
        (None, None, Some(r3)) => match r3.as_rational().and_then(|q| q.cbrt()) {
            Some(c) => ScalingMatch::Finite(vec![FieldElement::from_rational(c)]),
            None => ScalingMatch::Radical { degree: 3, radicand: r3 },
        },
    }
}

fn require_real(lambda: &FieldElement) -> Result<()> {
    if lambda.is_real() {
        Ok(())
    } else {
        Err(Error::NotReal(lambda.to_string()))
    }
}

/// First generator of the two-dimensional family `u_2_6`; it does not depend on λ.
pub fn u26_first_generator() -> AlgElement {
    let r2 = FieldElement::sqrt2();
    let c = [
        FieldElement::one(),
        FieldElement::from_int(2),
        FieldElement::zero(),
        FieldElement::from_int(-1),
        FieldElement::zero(),
        r2.clone(),
        FieldElement::zero(),
        -r2,
    ];
    AlgElement::from_a_coords(&c)
}

/// Second generator of `u_2_6^λ`: `2λa₁ + 4λa₂ + 6λa₄ − √2(a₅ − a₇)`.
pub fn u26_second_generator(lambda: &FieldElement) -> AlgElement {
    let r2 = FieldElement::sqrt2();
    let c = [
        lambda * &FieldElement::from_int(2),
        lambda * &FieldElement::from_int(4),
        FieldElement::zero(),
        lambda * &FieldElement::from_int(6),
        -&r2,
        FieldElement::zero(),
        r2,
        FieldElement::zero(),
    ];
    AlgElement::from_a_coords(&c)
}

/// The claimed eigenvalues `−2i(i + 2λ)`, `2i(i − 2λ)`, `8iλ` of the second generator.
pub fn claimed_jordan_diagonal(lambda: &FieldElement) -> [FieldElement; 3] {
    let i = FieldElement::i();
    let two_i = &i * &FieldElement::from_int(2);
    let two_l = lambda * &FieldElement::from_int(2);
    [
        -(&two_i * &(&i + &two_l)),
        &two_i * &(&i - &two_l),
        &(&i * &FieldElement::from_int(8)) * lambda,
    ]
}

/// Whether the characteristic polynomial of the second generator of `u_2_6^λ`
/// has exactly the claimed roots.
pub fn jordan_claim_check(lambda: &FieldElement) -> Result<bool> {
    require_real(lambda)?;
    let y = u26_second_generator(lambda);
    let (p2, p1, p0) = y.matrix().charpoly();
    let [e1, e2, e3] = claimed_jordan_diagonal(lambda);
    let roots_ok = [&e1, &e2, &e3].iter().all(|r| {
        let v = &(&(&r.pow(3) + &(&p2 * &r.pow(2))) + &(&p1 * *r)) + &p0;
        v.is_zero()
    });
    let sum = &(&e1 + &e2) + &e3;
    let pairs = &(&(&e1 * &e2) + &(&e1 * &e3)) + &(&e2 * &e3);
    let prod = &(&e1 * &e2) * &e3;
    Ok(roots_ok && p2 == -sum && p1 == pairs && p0 == -prod)
}

/// Whether the characteristic polynomial of `α·x + β·y_η` is the same for every
/// sampled `α`, so that only `β·y_η` matters in the Jordan-form comparison.
pub fn pencil_independent_of_alpha(eta: &FieldElement, beta: &FieldElement, alphas: &[FieldElement]) -> bool {
    let x = u26_first_generator();
    let y = u26_second_generator(eta).scale(beta);
    let base = y.matrix().charpoly();
    alphas.iter().all(|a| (&x.scale(a) + &y).matrix().charpoly() == base)
}

/// The necessary condition for `u_2_6^λ ~ u_2_6^η`: some real `β ≠ 0` scales
/// the eigenvalues of `y_η` onto those of `y_λ`.
pub fn u26_jordan_compatible(lambda: &FieldElement, eta: &FieldElement) -> Result<bool> {
    require_real(lambda)?;
    require_real(eta)?;
    Ok(!eigenvalue_scaling_match(&u26_second_generator(eta), &u26_second_generator(lambda)).is_empty())
}

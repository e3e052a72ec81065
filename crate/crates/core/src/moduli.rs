//! Constant j-invariant and constant curves.
//!
//! Away from characteristics 2 and 3 a curve with constant `j` is a twist of a
//! constant reference curve and is constant exactly when the twist parameter
//! is a constant times an m-th power. In characteristics 2 and 3 the globally
//! minimal model over `A^1`, brought to reduced form, has constant
//! discriminant; the curve is constant exactly when additive equations for the
//! remaining substitution parameters are solvable up to constants.

use std::fmt;

use crate::algebra::additive::{solve_additive, AdditiveTerm};
use crate::algebra::factor::squarefree_decomposition;
use crate::algebra::{Field, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::reduction::{geometric_bad_count, global_minimal, Chart};
use crate::transform::{apply_unchecked, to_reduced_form, to_short_form, ReducedForm, Transform};
use crate::weierstrass::WeierstrassEq;

/// Default bound on the degree of constant-field extensions.
pub const DEFAULT_EXTENSION_BOUND: usize = 12;

/// The additive equation that had no polynomial solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `r^3 + a4 r = -a6` up to constants (characteristic 3, `j = 0`).
    Char3Translation,
    /// `s^2 + s = a2` up to constants (characteristic 2, `j != 0`).
    Char2ArtinSchreier,
    /// `s^4 + a3 s = a4` up to constants (characteristic 2, `j = 0`).
    Char2QuarticS,
    /// `t^2 + a3 t = a6 + s^2 a4 + s^6` up to constants (characteristic 2, `j = 0`).
    Char2QuadraticT,
}

impl Constraint {
    pub fn name(self) -> &'static str {
        match self {
            Constraint::Char3Translation => "r^3+a4*r=-a6",
            Constraint::Char2ArtinSchreier => "s^2+s=a2",
            Constraint::Char2QuarticS => "s^4+a3*s=a4",
            Constraint::Char2QuadraticT => "t^2+a3*t=a6+s^2*a4+s^6",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonConstantReason<F: Field> {
    JNonConstant,
    /// The twist parameter has cluster exponents not divisible by `m`.
    TwistClassObstruction {
        m: u32,
        exponents: Vec<(Poly<F>, i64)>,
    },
    SubstitutionUnsolvable(Constraint),
    /// Some place has bad reduction, which no constant curve has.
    BadReduction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstancyResult<F: Field> {
    /// `apply(W, witness) == model` and the model has constant coefficients.
    Constant {
        model: WeierstrassEq<F>,
        witness: Transform<F>,
    },
    NonConstant(NonConstantReason<F>),
    Undecided {
        extension_bound: usize,
    },
}

impl<F: Field> ConstancyResult<F> {
    pub fn is_constant(&self) -> bool {
        matches!(self, ConstancyResult::Constant { .. })
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, ConstancyResult::Undecided { .. })
    }

    /// `constant`, `non-constant` or `undecided`.
    pub fn kind(&self) -> &'static str {
        match self {
            ConstancyResult::Constant { .. } => "constant",
            ConstancyResult::NonConstant(_) => "non-constant",
            ConstancyResult::Undecided { .. } => "undecided",
        }
    }

    /// Short machine-readable reason.
    pub fn reason(&self) -> String {
        match self {
            ConstancyResult::Constant { .. } => "constant-model".into(),
            ConstancyResult::NonConstant(NonConstantReason::JNonConstant) => "j-nonconstant".into(),
            ConstancyResult::NonConstant(NonConstantReason::TwistClassObstruction {
                m,
                exponents,
            }) => {
                let ex: Vec<String> = exponents
                    .iter()
                    .map(|(g, e)| format!("({g})^{e}"))
                    .collect();
                format!("twist-class-obstruction(m={m}; {})", ex.join(", "))
            }
            ConstancyResult::NonConstant(NonConstantReason::SubstitutionUnsolvable(c)) => {
                format!("substitution-unsolvable({})", c.name())
            }
            ConstancyResult::NonConstant(NonConstantReason::BadReduction) => "bad-reduction".into(),
            ConstancyResult::Undecided { extension_bound } => {
                format!("extension-bound-{extension_bound}")
            }
        }
    }
}

impl<F: Field> fmt::Display for ConstancyResult<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstancyResult::Constant { model, witness } => {
                write!(f, "constant: {model} via {witness}")
            }
            _ => write!(f, "{} ({})", self.kind(), self.reason()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstancyOptions {
    pub extension_bound: usize,
}

impl Default for ConstancyOptions {
    fn default() -> Self {
        ConstancyOptions {
            extension_bound: DEFAULT_EXTENSION_BOUND,
        }
    }
}

pub fn j_constant<F: Field>(w: &WeierstrassEq<F>) -> Result<bool> {
    w.j_invariant()
        .map(|j| j.is_constant())
        .ok_or(Error::Singular)
}

fn require_constant_j<F: Field>(w: &WeierstrassEq<F>) -> Result<()> {
    if !j_constant(w)? {
        return Err(Error::Precondition("j-invariant is not constant".into()));
    }
    Ok(())
}

/// Exponents of the monic squarefree clusters of a nonzero rational function;
/// denominators count negatively.
fn cluster_exponents<F: Field>(x: &RatFunc<F>) -> Result<Vec<(Poly<F>, i64)>> {
    let mut out = Vec::new();
    for (p, sign) in [(x.num(), 1i64), (x.den(), -1)] {
        if !p.is_constant() {
            out.extend(
                squarefree_decomposition(p)?
                    .into_iter()
                    .map(|(g, m)| (g, sign * m as i64)),
            );
        }
    }
    out.sort();
    Ok(out)
}

/// Decides constancy of a curve with constant `j` away from characteristics 2
/// and 3 by the twist class of its short form.
pub fn twist_class_constancy<F: Field>(w: &WeierstrassEq<F>) -> Result<ConstancyResult<F>> {
    let field = w.field().clone();
    if matches!(field.characteristic(), 2 | 3) {
        return Err(Error::WrongCharacteristic(
            "twist classes are used away from characteristics 2 and 3".into(),
        ));
    }
    require_constant_j(w)?;
    let (short, t_short) = to_short_form(w)?;
    let (a, b) = (short.a4(), short.a6());
    let (m, param) = match (a.is_zero(), b.is_zero()) {
        (true, false) => (6, b.clone()),
        (false, true) => (4, a.clone()),
        (false, false) => (2, b.div(a)?),
        (true, true) => return Err(Error::Singular),
    };
    let exponents = cluster_exponents(&param)?;
    let offending: Vec<(Poly<F>, i64)> = exponents
        .iter()
        .filter(|(_, e)| e % m != 0)
        .cloned()
        .collect();
    if !offending.is_empty() {
        return Ok(ConstancyResult::NonConstant(
            NonConstantReason::TwistClassObstruction {
                m: m as u32,
                exponents: offending,
            },
        ));
    }
    // param = c * u^m with u the product of cluster powers
    let mut u = RatFunc::one(&field);
    for (g, e) in &exponents {
        u = &u * &RatFunc::from_poly(g.clone()).powi(e / m)?;
    }
    let witness = t_short.compose(&Transform::scaling(u)?);
    let model = apply_unchecked(w, &witness);
    if !model.is_constant_model() {
        return Err(Error::Counterexample(format!(
            "twist witness leaves {model} non-constant"
        )));
    }
    Ok(ConstancyResult::Constant { model, witness })
}

fn additive_term<F: Field>(coeff: Poly<F>, frobenius: u32) -> AdditiveTerm<F> {
    AdditiveTerm { coeff, frobenius }
}

/// A solution of `L(x) = h` up to constants, normalized to vanish at `T = 0`.
fn solve_mod_constants<F: Field>(
    terms: &[AdditiveTerm<F>],
    rhs: &Poly<F>,
) -> Result<Option<Poly<F>>> {
    Ok(solve_additive(terms, rhs, true)?.map(|sol| {
        let p = sol.particular;
        let c = Poly::constant(p.field(), p.constant_term());
        &p - &c
    }))
}

fn poly_of<F: Field>(x: &RatFunc<F>) -> Result<Poly<F>> {
    if !x.is_polynomial() {
        return Err(Error::Precondition(format!(
            "expected a polynomial coefficient, got {x}"
        )));
    }
    Ok(x.num().clone())
}

fn rst<F: Field>(field: &F, r: Poly<F>, s: Poly<F>, t: Poly<F>) -> Transform<F> {
    Transform {
        u: RatFunc::one(field),
        r: RatFunc::from_poly(r),
        s: RatFunc::from_poly(s),
        t: RatFunc::from_poly(t),
    }
}

/// Solves the substitution constraints on the `A^1` minimal model, which must
/// have constant discriminant.
fn solve_on_a1<F: Field>(w: &WeierstrassEq<F>) -> Result<ConstancyResult<F>> {
    let field = w.field().clone();
    let (m0, t0) = global_minimal(w, Chart::AtZero)?;
    if !m0.discriminant().is_constant() {
        return Ok(ConstancyResult::NonConstant(
            NonConstantReason::BadReduction,
        ));
    }
    let (form, t1) = to_reduced_form(&m0)?;
    let base = t0.compose(&t1);
    let zero = Poly::zero(&field);
    let one = Poly::one(&field);
    let unsolvable = |c| {
        Ok(ConstancyResult::NonConstant(
            NonConstantReason::SubstitutionUnsolvable(c),
        ))
    };
    let last = match &form {
        ReducedForm::Char3JNonzero { .. } => Transform::identity(&field),
        ReducedForm::Char3JZero { a4, a6 } => {
            let terms = [
                additive_term(one.clone(), 1),
                additive_term(poly_of(a4)?, 0),
            ];
            let Some(r) = solve_mod_constants(&terms, &-&poly_of(a6)?)? else {
                return unsolvable(Constraint::Char3Translation);
            };
            rst(&field, r, zero.clone(), zero)
        }
        ReducedForm::Char2JNonzero { a2, .. } => {
            let terms = [additive_term(one.clone(), 1), additive_term(one, 0)];
            let Some(s) = solve_mod_constants(&terms, &poly_of(a2)?)? else {
                return unsolvable(Constraint::Char2ArtinSchreier);
            };
            rst(&field, zero.clone(), s, zero)
        }
        ReducedForm::Char2JZero { a3, a4, a6 } => {
            let a3 = poly_of(a3)?;
            let a4 = poly_of(a4)?;
            let terms = [additive_term(one.clone(), 2), additive_term(a3.clone(), 0)];
            let Some(s) = solve_mod_constants(&terms, &a4)? else {
                return unsolvable(Constraint::Char2QuarticS);
            };
            let s2 = &s * &s;
            let rhs = &(&poly_of(a6)? + &(&s2 * &a4)) + &s2.pow(3);
            let terms = [additive_term(one, 1), additive_term(a3, 0)];
            let Some(t) = solve_mod_constants(&terms, &rhs)? else {
                return unsolvable(Constraint::Char2QuadraticT);
            };
            rst(&field, s2, s, t)
        }
    };
    let witness = base.compose(&last);
    let model = apply_unchecked(w, &witness);
    if !model.is_constant_model() {
        return Err(Error::Counterexample(format!(
            "substitutions solved but {model} is not constant"
        )));
    }
    Ok(ConstancyResult::Constant { model, witness })
}

/// Constancy in characteristic 2 or 3 for a curve with constant `j` and good
/// reduction at every place of `P^1`.
///
/// The substitution parameters are determined on the `A^1` chart: two
/// integral models with unit discriminant differ by a constant `u` and
/// polynomial `r, s, t`, and each additive constraint has at most one
/// solution vanishing at `T = 0`, so it lies in `k[T]` whenever it exists.
/// No constant-field extension is therefore needed and the result is never
/// `Undecided` for bounds `>= 1`.
pub fn constancy_char23<F: Field>(
    w: &WeierstrassEq<F>,
    extension_bound: usize,
) -> Result<ConstancyResult<F>> {
    check_char23(w)?;
    if geometric_bad_count(w)? > 0 {
        return Err(Error::Precondition(
            "the procedure needs good reduction everywhere over P^1; see the reduction report"
                .into(),
        ));
    }
    if extension_bound == 0 {
        return Ok(ConstancyResult::Undecided { extension_bound });
    }
    solve_on_a1(w)
}

/// The same procedure restricted to the `A^1` chart, without the hypothesis at
/// infinity. Bad reduction over `A^1` yields `NonConstant(BadReduction)`.
pub fn constancy_char23_affine<F: Field>(w: &WeierstrassEq<F>) -> Result<ConstancyResult<F>> {
    check_char23(w)?;
    solve_on_a1(w)
}

fn check_char23<F: Field>(w: &WeierstrassEq<F>) -> Result<()> {
    if !matches!(w.field().characteristic(), 2 | 3) {
        return Err(Error::WrongCharacteristic(
            "this procedure is for characteristic 2 and 3".into(),
        ));
    }
    require_constant_j(w)
}

/// Full decision: `j`, then the twist class or the characteristic-2/3 procedure.
pub fn is_constant<F: Field>(
    w: &WeierstrassEq<F>,
    opts: ConstancyOptions,
) -> Result<ConstancyResult<F>> {
    if !j_constant(w)? {
        return Ok(ConstancyResult::NonConstant(
            NonConstantReason::JNonConstant,
        ));
    }
    match w.field().characteristic() {
        2 | 3 => {
            if geometric_bad_count(w)? > 0 {
                return Ok(ConstancyResult::NonConstant(
                    NonConstantReason::BadReduction,
                ));
            }
            constancy_char23(w, opts.extension_bound)
        }
        _ => twist_class_constancy(w),
    }
}

/// [`is_constant`] when the geometric bad-point count is already known.
pub fn is_constant_with_count<F: Field>(
    w: &WeierstrassEq<F>,
    bad_count: usize,
    opts: ConstancyOptions,
) -> Result<ConstancyResult<F>> {
    if !j_constant(w)? {
        return Ok(ConstancyResult::NonConstant(
            NonConstantReason::JNonConstant,
        ));
    }
    match w.field().characteristic() {
        2 | 3 if bad_count > 0 => Ok(ConstancyResult::NonConstant(
            NonConstantReason::BadReduction,
        )),
        2 | 3 if opts.extension_bound == 0 => Ok(ConstancyResult::Undecided {
            extension_bound: opts.extension_bound,
        }),
        2 | 3 => solve_on_a1(w),
        _ => twist_class_constancy(w),
    }
}

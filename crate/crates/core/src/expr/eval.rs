use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::poly::Poly;
use crate::algebra::presentation::Presentation;
use crate::error::{AlgebraError, Result};
use crate::hopf::{self, LocalizedElement, LocalizedTensor};
use crate::presets::{mq2, preset, quantum_determinant, vartheta, ELEMENT_NAMES};
use crate::scalars::CycScalar;
use crate::tensor::{Braiding, TensorPoly};
use crate::{comodule, frt};

use super::Expr;

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(CycScalar),
    Poly(Poly),
    Tensor(TensorPoly),
    /// An element `p * Dq^-k`.
    Localized(LocalizedElement),
    LocalizedTensor(LocalizedTensor),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::Localized(x) => write!(f, "{x}"),
            Value::LocalizedTensor(x) => write!(f, "{x}"),
        }
    }
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Poly(_) => "polynomial",
            Value::Tensor(_) => "tensor",
            Value::Localized(_) => "localized element",
            Value::LocalizedTensor(_) => "localized tensor",
        }
    }

    /// The grade, for values that have one.
    pub fn grade(&self) -> Option<crate::algebra::GradeOf> {
        match self {
            Value::Scalar(_) => Some(crate::algebra::GradeOf::Homogeneous(crate::Z3::ZERO)),
            Value::Poly(p) => Some(p.grade()),
            Value::Tensor(t) => Some(t.grade()),
            Value::Localized(x) => Some(x.numerator().grade()),
            Value::LocalizedTensor(x) => Some(x.num.grade()),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MapName {
    Delta,
    Epsilon,
    Antipode,
    Star,
    DeltaL,
    DeltaR,
}

impl MapName {
    pub const ALL: [MapName; 6] = [
        MapName::Delta,
        MapName::Epsilon,
        MapName::Antipode,
        MapName::Star,
        MapName::DeltaL,
        MapName::DeltaR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::Delta => "delta",
            MapName::Epsilon => "epsilon",
            MapName::Antipode => "antipode",
            MapName::Star => "star",
            MapName::DeltaL => "deltaL",
            MapName::DeltaR => "deltaR",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapName {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        MapName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownIdentifier(s.to_string()))
    }
}

/// Where identifiers are resolved. Tensor factors whose identifiers are
/// not all generators of the main presentation are read in the first
/// companion that knows them.
#[derive(Clone, Debug)]
pub struct Context {
    pres: Arc<Presentation>,
    companions: Vec<Arc<Presentation>>,
}

fn has_matrix_generators(p: &Presentation) -> bool {
    ["a", "beta", "gamma", "d"].iter().all(|g| p.letter(g).is_ok())
}

fn has_plane_generators(p: &Presentation) -> bool {
    ["theta", "phi"].iter().all(|g| p.letter(g).is_ok())
}

impl Context {
    pub fn new(pres: Arc<Presentation>) -> Self {
        let mut companions = Vec::new();
        if !has_matrix_generators(&pres) {
            companions.push(mq2());
        }
        Context { pres, companions }
    }

    pub fn for_preset(name: &str) -> Result<Self> {
        Ok(Context::new(preset(name)?))
    }

    pub fn with_companion(mut self, p: Arc<Presentation>) -> Self {
        self.companions.push(p);
        self
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    fn sub(&self, pres: Arc<Presentation>) -> Context {
        Context {
            pres,
            companions: Vec::new(),
        }
    }
}

fn parse_err<T>(pos: usize, message: impl Into<String>) -> Result<T> {
    Err(AlgebraError::Parse {
        pos,
        message: message.into(),
    })
}

fn first_pos(e: &Expr) -> usize {
    match e {
        Expr::Ident { pos, .. } | Expr::Call { pos, .. } => *pos,
        Expr::Div { num, .. } => first_pos(num),
        Expr::Pow { base, .. } => first_pos(base),
        Expr::Neg(x) => first_pos(x),
        Expr::Add(x, _) | Expr::Sub(x, _) | Expr::Mul(x, _) => first_pos(x),
        Expr::Tensor(v) => v.first().map(first_pos).unwrap_or(0),
        Expr::Num(_) => 0,
    }
}

fn identifiers<'a>(e: &'a Expr, out: &mut Vec<&'a str>) {
    match e {
        Expr::Num(_) => {}
        Expr::Ident { name, .. } => out.push(name),
        Expr::Call { arg, .. } => identifiers(arg, out),
        Expr::Neg(x) | Expr::Pow { base: x, .. } => identifiers(x, out),
        Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div { num: x, den: y, .. } => {
            identifiers(x, out);
            identifiers(y, out);
        }
        Expr::Tensor(v) => v.iter().for_each(|x| identifiers(x, out)),
    }
}

fn knows(p: &Presentation, name: &str) -> bool {
    matches!(name, "q" | "lambda" | "Dq" | "vartheta") || p.letter(name).is_ok()
}

/// Evaluates `e` in `ctx`. Polynomials are reduced; results in the
/// localized algebra are returned with `Dq` stripped where it divides.
pub fn evaluate(e: &Expr, ctx: &Context) -> Result<Value> {
    match eval(e, ctx)? {
        Value::Localized(x) => {
            let x = x.normalized()?;
            Ok(if x.power() == 0 {
                Value::Poly(x.numerator().clone())
            } else {
                Value::Localized(x)
            })
        }
        v => Ok(v),
    }
}

fn eval(e: &Expr, ctx: &Context) -> Result<Value> {
    let p = &ctx.pres;
    match e {
        Expr::Num(n) => Ok(Value::Scalar(CycScalar::from_rational(num_rational::BigRational::from_integer(
            n.clone(),
        )))),
        Expr::Ident { name, pos } => ident(name, *pos, ctx),
        Expr::Call { func, arg, pos } => {
            let Ok(map) = func.parse::<MapName>() else {
                return parse_err(*pos, format!("unknown function `{func}`"));
            };
            let v = eval(arg, ctx)?;
            apply_map(map, v, ctx).map_err(|err| match err {
                AlgebraError::Unsupported(message) => AlgebraError::Parse { pos: *pos, message },
                other => other,
            })
        }
        Expr::Neg(x) => scale(eval(x, ctx)?, &CycScalar::from_int(-1)),
        Expr::Add(x, y) => add(eval(x, ctx)?, eval(y, ctx)?, 1, first_pos(y)),
        Expr::Sub(x, y) => add(eval(x, ctx)?, eval(y, ctx)?, -1, first_pos(y)),
        Expr::Mul(x, y) => mul(eval(x, ctx)?, eval(y, ctx)?, first_pos(y)),
        Expr::Div { num, den, pos } => {
            let n = eval(num, ctx)?;
            match eval(den, ctx)? {
                Value::Scalar(c) => {
                    if c.is_zero() {
                        return parse_err(*pos, "division by zero");
                    }
                    scale(n, &c.inv()?)
                }
                Value::Poly(d) => match det_power(&d)? {
                    Some(k) => mul(n, Value::Localized(LocalizedElement::det_inverse_power(p, k)?), *pos),
                    None => parse_err(*pos, "can only divide by a scalar or a power of Dq"),
                },
                v => parse_err(*pos, format!("cannot divide by a {}", v.kind())),
            }
        }
        Expr::Pow { base, exp, pos } => power(eval(base, ctx)?, *exp, *pos),
        Expr::Tensor(parts) => {
            let mut acc: Option<TensorPoly> = None;
            for part in parts {
                let t = tensor_factor(part, ctx)?;
                acc = Some(match acc {
                    None => t,
                    Some(a) => a.tensor(&t),
                });
            }
            Ok(Value::Tensor(acc.expect("at least two factors")))
        }
    }
}

fn tensor_factor(e: &Expr, ctx: &Context) -> Result<TensorPoly> {
    let mut names = Vec::new();
    identifiers(e, &mut names);
    let home = std::iter::once(&ctx.pres)
        .chain(&ctx.companions)
        .find(|p| names.iter().all(|n| knows(p, n)))
        .cloned()
        .unwrap_or_else(|| ctx.pres.clone());
    let pos = first_pos(e);
    match eval(e, &ctx.sub(home.clone()))? {
        Value::Scalar(c) => Ok(TensorPoly::from_poly(&Poly::scalar(&home, c))),
        Value::Poly(x) => Ok(TensorPoly::from_poly(&x)),
        Value::Tensor(t) => Ok(t),
        v => parse_err(pos, format!("a {} cannot be a tensor factor", v.kind())),
    }
}

fn ident(name: &str, pos: usize, ctx: &Context) -> Result<Value> {
    let p = &ctx.pres;
    match name {
        "q" => return Ok(Value::Scalar(CycScalar::q())),
        "lambda" => return Ok(Value::Scalar(CycScalar::lambda())),
        "Dq" if has_matrix_generators(p) => return Ok(Value::Poly(quantum_determinant(p)?)),
        "vartheta" if has_plane_generators(p) => return Ok(Value::Poly(vartheta(p)?)),
        "ox" => return parse_err(pos, "`ox` needs operands"),
        _ => {}
    }
    if let Ok(l) = p.letter(name) {
        return Ok(Value::Poly(Poly::letter(p, l)?));
    }
    if ELEMENT_NAMES.contains(&name) {
        return parse_err(pos, format!("`{name}` is not available as a value in `{}`", p.name()));
    }
    parse_err(pos, format!("unknown identifier `{name}`"))
}

/// `k` with `d = Dq^k`, `k >= 1`.
fn det_power(d: &Poly) -> Result<Option<u32>> {
    let p = d.presentation();
    if !has_matrix_generators(p) || d.is_zero() {
        return Ok(None);
    }
    let det = quantum_determinant(p)?;
    let deg = d.max_degree();
    if deg == 0 || !deg.is_multiple_of(2) {
        return Ok(None);
    }
    let k = (deg / 2) as u32;
    Ok((det.pow(k)? == *d).then_some(k))
}

fn promote_localized(v: Value) -> Option<LocalizedElement> {
    match v {
        Value::Localized(x) => Some(x),
        Value::Poly(p) => LocalizedElement::from_poly(p).ok(),
        _ => None,
    }
}

fn scale(v: Value, c: &CycScalar) -> Result<Value> {
    Ok(match v {
        Value::Scalar(x) => Value::Scalar(&x * c),
        Value::Poly(p) => Value::Poly(p.scale(c)),
        Value::Tensor(t) => Value::Tensor(t.scale(c)),
        Value::Localized(x) => Value::Localized(x.scale(c)),
        Value::LocalizedTensor(x) => Value::LocalizedTensor(LocalizedTensor {
            num: x.num.scale(c),
            power: x.power,
        }),
    })
}

fn mismatch<T>(pos: usize, op: &str, x: &Value, y: &Value) -> Result<T> {
    parse_err(pos, format!("cannot {op} a {} and a {}", x.kind(), y.kind()))
}

fn add(x: Value, y: Value, sign: i64, pos: usize) -> Result<Value> {
    let y = scale(y, &CycScalar::from_int(sign))?;
    Ok(match (x, y) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
        (Value::Scalar(a), Value::Poly(b)) | (Value::Poly(b), Value::Scalar(a)) => {
            Value::Poly(&Poly::scalar(b.presentation(), a) + &b)
        }
        (Value::Poly(a), Value::Poly(b)) => Value::Poly(&a + &b),
        (Value::Tensor(a), Value::Tensor(b)) => Value::Tensor(a.try_add(&b)?),
        (Value::Scalar(a), Value::Tensor(b)) | (Value::Tensor(b), Value::Scalar(a)) => {
            Value::Tensor(TensorPoly::scalar(b.slots(), a).try_add(&b)?)
        }
        (Value::Scalar(a), Value::Localized(b)) | (Value::Localized(b), Value::Scalar(a)) => {
            let s = LocalizedElement::from_poly(Poly::scalar(b.numerator().presentation(), a))?;
            Value::Localized(s.add(&b)?)
        }
        (x, y) => match (promote_localized(x.clone()), promote_localized(y.clone())) {
            (Some(a), Some(b)) => Value::Localized(a.add(&b)?),
            _ => return mismatch(pos, "add", &x, &y),
        },
    })
}

fn mul(x: Value, y: Value, pos: usize) -> Result<Value> {
    Ok(match (x, y) {
        (Value::Scalar(a), v) | (v, Value::Scalar(a)) => scale(v, &a)?,
        (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.mul(&b)?),
        (Value::Tensor(a), Value::Tensor(b)) => Value::Tensor(a.mul(&b, Braiding::Graded)?),
        (x, y) => match (promote_localized(x.clone()), promote_localized(y.clone())) {
            (Some(a), Some(b)) => Value::Localized(a.mul(&b)?),
            _ => return mismatch(pos, "multiply", &x, &y),
        },
    })
}

fn power(base: Value, exp: i64, pos: usize) -> Result<Value> {
    if exp >= 0 {
        let n = exp as u32;
        return Ok(match base {
            Value::Scalar(c) => Value::Scalar(c.pow(exp)?),
            Value::Poly(p) => Value::Poly(p.pow(n)?),
            Value::Tensor(t) => Value::Tensor(t.pow(n, Braiding::Graded)?),
            Value::Localized(x) => {
                let mut acc = LocalizedElement::from_poly(Poly::one(x.numerator().presentation()))?;
                for _ in 0..n {
                    acc = acc.mul(&x)?;
                }
                Value::Localized(acc)
            }
            v => return parse_err(pos, format!("cannot raise a {} to a power", v.kind())),
        });
    }
    let k = exp.unsigned_abs() as u32;
    match base {
        Value::Scalar(c) => {
            if c.is_zero() {
                return parse_err(pos, "division by zero");
            }
            Ok(Value::Scalar(c.pow(exp)?))
        }
        Value::Poly(p) => {
            let pres = p.presentation().clone();
            if let [(m, c)] = p.terms().iter().collect::<Vec<_>>()[..] {
                if let [l] = m.letters() {
                    if c.is_one() && pres.is_invertible(l.index()) {
                        return Ok(Value::Poly(Poly::letter(&pres, l.inverted())?.pow(k)?));
                    }
                }
            }
            match det_power(&p)? {
                Some(j) => Ok(Value::Localized(LocalizedElement::det_inverse_power(&pres, j * k)?)),
                None => parse_err(pos, "negative powers need a scalar, an invertible generator or Dq"),
            }
        }
        v => parse_err(pos, format!("cannot invert a {}", v.kind())),
    }
}

fn apply_map(map: MapName, v: Value, ctx: &Context) -> Result<Value> {
    let p = &ctx.pres;
    let as_poly = |v: Value| -> Result<Poly> {
        match v {
            Value::Scalar(c) => Ok(Poly::scalar(p, c)),
            Value::Poly(x) => Ok(x),
            other => Err(AlgebraError::Unsupported(format!("`{map}` cannot be applied to a {}", other.kind()))),
        }
    };
    let matrix = has_matrix_generators(p);
    let uq = p.letter("Xp").is_ok() && p.letter("U").is_ok();
    match map {
        MapName::Delta if matrix => match v {
            Value::Localized(x) => Ok(Value::LocalizedTensor(x.coproduct(&hopf::coproduct(p)?)?)),
            v => Ok(Value::Tensor(hopf::coproduct(p)?.apply(&as_poly(v)?)?)),
        },
        MapName::Delta if uq => Ok(Value::Tensor(frt::checks::l_coproduct(Braiding::Graded)?.apply(&as_poly(v)?)?)),
        MapName::Epsilon if matrix => match v {
            Value::Localized(x) => Ok(Value::Scalar(x.counit(&hopf::counit(p)?)?)),
            v => Ok(Value::Scalar(hopf::counit(p)?.apply_scalar(&as_poly(v)?)?)),
        },
        MapName::Epsilon if uq => Ok(Value::Scalar(frt::checks::l_counit()?.apply_scalar(&as_poly(v)?)?)),
        MapName::Antipode if matrix => match v {
            Value::Localized(x) => Ok(Value::Localized(hopf::antipode_localized(&x)?)),
            v => Ok(Value::Localized(hopf::antipode(&as_poly(v)?)?)),
        },
        MapName::Star if matrix => match v {
            Value::Scalar(c) => Ok(Value::Scalar(c.conj())),
            v => Ok(Value::Poly(hopf::star_apply(&as_poly(v)?)?)),
        },
        MapName::DeltaL if has_plane_generators(p) => {
            Ok(Value::Tensor(comodule::delta_l(p, p)?.apply(&as_poly(v)?)?))
        }
        MapName::DeltaR if has_plane_generators(p) => {
            Ok(Value::Tensor(comodule::delta_r(p, p)?.apply(&as_poly(v)?)?))
        }
        _ => Err(AlgebraError::Unsupported(format!("`{map}` is not defined on `{}`", p.name()))),
    }
}

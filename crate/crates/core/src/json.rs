//! JSON documents for the public types.
//!
//! Each `*Doc` type mirrors a wire format and converts to and from the
//! domain type. Parsing a document only checks its shape; `into_domain`
//! applies the domain invariants, so shape errors and domain errors can be
//! reported separately.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::clifford::{indices_mask, mask_indices, CliffordError, DiagonalForm, Multivector};
use crate::exactnum::{CycloField, Cyclotomic, NumError, Rational};
use crate::genclifford::{GCElement, GCError, GCParams};
use crate::locmat::{EmbeddingChain, LocmatError};
use crate::steinitz::{Exponent, SteinitzError, SteinitzNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("unknown field kind {0:?}, expected \"Q\" or \"Qzeta\"")]
    UnknownField(String),
    #[error("field \"Qzeta\" needs an \"order\"")]
    MissingOrder,
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Steinitz(#[from] SteinitzError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    GenClifford(#[from] GCError),
    #[error(transparent)]
    Locmat(#[from] LocmatError),
}

/// A rational written as `"p/q"` or `"p"`; integers are also accepted as JSON numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalDoc(pub Rational);

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            (q != BigInt::from(0)).then(|| Rational::new(p, q))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

impl Serialize for RationalDoc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RationalDoc;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a rational as \"p/q\", \"p\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalDoc, E> {
                parse_rational(v).map(RationalDoc).ok_or_else(|| E::custom(format!("invalid rational {v:?}")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalDoc, E> {
                Ok(RationalDoc(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalDoc, E> {
                Ok(RationalDoc(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(V)
    }
}

/// `{"order": n, "coeffs": ["p/q", …]}` in the power basis of `Q(ζ_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclotomicDoc {
    pub order: u32,
    pub coeffs: Vec<RationalDoc>,
}

impl From<&Cyclotomic> for CyclotomicDoc {
    fn from(c: &Cyclotomic) -> Self {
        CyclotomicDoc { order: c.order(), coeffs: c.coeffs().iter().cloned().map(RationalDoc).collect() }
    }
}

impl CyclotomicDoc {
    pub fn into_domain(self) -> Result<Cyclotomic, JsonError> {
        Ok(Cyclotomic::from_coeffs(self.order, self.coeffs.into_iter().map(|r| r.0).collect())?)
    }
}

/// A field element written either as a rational or as a cyclotomic document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Rational(RationalDoc),
    Cyclotomic(CyclotomicDoc),
}

impl<'de> Deserialize<'de> for ScalarDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(d)?;
        if value.is_object() {
            serde_json::from_value(value).map(ScalarDoc::Cyclotomic).map_err(de::Error::custom)
        } else {
            serde_json::from_value(value).map(ScalarDoc::Rational).map_err(de::Error::custom)
        }
    }
}

impl ScalarDoc {
    /// Rational values are written as strings, others as cyclotomic documents.
    pub fn compact(c: &Cyclotomic) -> Self {
        match c.as_rational() {
            Some(r) => ScalarDoc::Rational(RationalDoc(r.clone())),
            None => ScalarDoc::Cyclotomic(c.into()),
        }
    }

    pub fn into_field(self, field: CycloField) -> Result<Cyclotomic, JsonError> {
        match self {
            ScalarDoc::Rational(r) => Ok(field.from_rational(r.0)),
            ScalarDoc::Cyclotomic(c) => {
                let c = c.into_domain()?;
                if c.order() != field.order() {
                    return Err(NumError::OrderMismatch { left: field.order(), right: c.order() }.into());
                }
                Ok(c)
            }
        }
    }
}

/// A prime exponent: positive integer or `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentDoc(pub Exponent);

impl Serialize for ExponentDoc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Exponent::Finite(e) => s.serialize_u64(e),
            Exponent::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExponentDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExponentDoc;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a positive integer or \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExponentDoc, E> {
                Ok(ExponentDoc(Exponent::Finite(v)))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExponentDoc, E> {
                u64::try_from(v)
                    .map(|v| ExponentDoc(Exponent::Finite(v)))
                    .map_err(|_| E::custom(format!("negative exponent {v}")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExponentDoc, E> {
                match v {
                    "inf" => Ok(ExponentDoc(Exponent::Infinite)),
                    _ => Err(E::custom(format!("expected \"inf\", got {v:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// `{"factors": [[p, e], …], "top": bool}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SteinitzDoc {
    pub factors: Vec<(u64, ExponentDoc)>,
    #[serde(default)]
    pub top: bool,
}

impl From<&SteinitzNumber> for SteinitzDoc {
    fn from(s: &SteinitzNumber) -> Self {
        SteinitzDoc { factors: s.factors().map(|(p, e)| (p, ExponentDoc(e))).collect(), top: s.is_top() }
    }
}

impl SteinitzDoc {
    pub fn into_domain(self) -> Result<SteinitzNumber, JsonError> {
        let finite = SteinitzNumber::from_factors(self.factors.into_iter().map(|(p, e)| (p, e.0)))?;
        Ok(if self.top { SteinitzNumber::top() } else { finite })
    }
}

/// Either a Steinitz document or a plain positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SteinitzInput {
    Integer(u64),
    Doc(SteinitzDoc),
}

impl SteinitzInput {
    pub fn into_domain(self) -> Result<SteinitzNumber, JsonError> {
        match self {
            SteinitzInput::Integer(n) => Ok(SteinitzNumber::from_u64(n)?),
            SteinitzInput::Doc(d) => d.into_domain(),
        }
    }
}

/// `{"diag": [scalar…], "field": "Q"|"Qzeta", "order": n}`; `order` is
/// required for `"Qzeta"` and omitted for `"Q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    pub diag: Vec<ScalarDoc>,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
}

pub fn field_from_doc(kind: &str, order: Option<u32>) -> Result<CycloField, JsonError> {
    match kind {
        "Q" => Ok(CycloField::rationals()),
        "Qzeta" => Ok(CycloField::new(order.ok_or(JsonError::MissingOrder)?)?),
        other => Err(JsonError::UnknownField(other.to_string())),
    }
}

impl From<&DiagonalForm> for FormDoc {
    fn from(f: &DiagonalForm) -> Self {
        let order = f.field().order();
        let (field, order) = if order <= 2 { ("Q".to_string(), None) } else { ("Qzeta".to_string(), Some(order)) };
        FormDoc { diag: f.diag().iter().map(ScalarDoc::compact).collect(), field, order }
    }
}

impl FormDoc {
    pub fn into_domain(self) -> Result<DiagonalForm, JsonError> {
        let field = field_from_doc(&self.field, self.order)?;
        let diag = self.diag.into_iter().map(|d| d.into_field(field)).collect::<Result<_, _>>()?;
        Ok(DiagonalForm::new(field, diag)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaskTermDoc {
    /// Sorted 1-based generator indices.
    pub mask: Vec<usize>,
    pub coeff: ScalarDoc,
}

/// `{"form": …, "terms": [{"mask": [i…], "coeff": scalar}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultivectorDoc {
    pub form: FormDoc,
    pub terms: Vec<MaskTermDoc>,
}

impl From<&Multivector> for MultivectorDoc {
    fn from(m: &Multivector) -> Self {
        MultivectorDoc {
            form: m.form().as_ref().into(),
            terms: m
                .terms()
                .iter()
                .map(|(&mask, c)| MaskTermDoc { mask: mask_indices(mask), coeff: ScalarDoc::compact(c) })
                .collect(),
        }
    }
}

impl MultivectorDoc {
    pub fn into_domain(self) -> Result<Multivector, JsonError> {
        let form = Arc::new(self.form.into_domain()?);
        let field = form.field();
        let terms = self
            .terms
            .into_iter()
            .map(|t| Ok((indices_mask(&t.mask, form.dim())?, t.coeff.into_field(field)?)))
            .collect::<Result<Vec<_>, JsonError>>()?;
        Ok(Multivector::try_from_terms(&form, terms)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpTermDoc {
    pub exps: Vec<i64>,
    pub coeff: ScalarDoc,
}

/// `{"l": l, "m": m, "terms": [{"exps": [k…], "coeff": cyclotomic}]}`; the
/// coefficient field is the default one for `(l, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GCElementDoc {
    pub l: u32,
    pub m: usize,
    pub terms: Vec<ExpTermDoc>,
}

impl From<&GCElement> for GCElementDoc {
    fn from(a: &GCElement) -> Self {
        let p = a.params();
        GCElementDoc {
            l: p.l(),
            m: p.m(),
            terms: a
                .terms()
                .iter()
                .map(|(k, c)| ExpTermDoc {
                    exps: k.iter().map(|&e| e as i64).collect(),
                    coeff: ScalarDoc::Cyclotomic(c.into()),
                })
                .collect(),
        }
    }
}

impl GCElementDoc {
    pub fn into_domain(self) -> Result<GCElement, JsonError> {
        let p = GCParams::new(self.l, self.m)?;
        let terms = self
            .terms
            .into_iter()
            .map(|t| Ok((t.exps, t.coeff.into_field(p.field())?)))
            .collect::<Result<Vec<_>, JsonError>>()?;
        Ok(GCElement::from_terms(p, terms)?)
    }
}

/// `{"sizes": [n…], "tail": t|null, "label": "…"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    pub sizes: Vec<u64>,
    #[serde(default)]
    pub tail: Option<u64>,
    #[serde(default)]
    pub label: String,
}

impl From<&EmbeddingChain> for ChainDoc {
    fn from(c: &EmbeddingChain) -> Self {
        ChainDoc { sizes: c.sizes().to_vec(), tail: c.tail(), label: c.label().to_string() }
    }
}

impl ChainDoc {
    pub fn into_domain(self) -> Result<EmbeddingChain, JsonError> {
        Ok(EmbeddingChain::new(self.sizes, self.tail, self.label)?)
    }
}

/// Square matrix of field elements, rows of cyclotomic documents.
pub fn matrix_doc(m: &[Vec<Cyclotomic>]) -> Vec<Vec<ScalarDoc>> {
    m.iter().map(|r| r.iter().map(ScalarDoc::compact).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn rationals() {
        assert_eq!(format_rational(&q(-3, 6)), "-1/2");
        assert_eq!(format_rational(&q(4, 2)), "2");
        assert_eq!(parse_rational("6/-4"), Some(q(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        let r: RationalDoc = serde_json::from_value(json!(7)).unwrap();
        assert_eq!(r.0, q(7, 1));
        assert!(serde_json::from_value::<RationalDoc>(json!("1/0")).is_err());
    }

    #[test]
    fn cyclotomic_document() {
        let i = CycloField::gaussian().zeta_pow(1);
        let doc = CyclotomicDoc::from(&i);
        assert_eq!(serde_json::to_value(&doc).unwrap(), json!({"order": 4, "coeffs": ["0", "1"]}));
        assert!(serde_json::from_value::<CyclotomicDoc>(json!({"order": 4, "coeffs": ["1"]}))
            .unwrap()
            .into_domain()
            .is_err());
    }

    #[test]
    fn steinitz_document() {
        let s = SteinitzNumber::from_u64(12).unwrap().lcm(&SteinitzNumber::prime_power_infinite(5).unwrap());
        let v = serde_json::to_value(SteinitzDoc::from(&s)).unwrap();
        assert_eq!(v, json!({"factors": [[2, 2], [3, 1], [5, "inf"]], "top": false}));
        let back: SteinitzDoc = serde_json::from_value(v).unwrap();
        assert_eq!(back.into_domain().unwrap(), s);
        let bad: SteinitzDoc = serde_json::from_value(json!({"factors": [[4, 1]], "top": false})).unwrap();
        assert!(matches!(bad.into_domain(), Err(JsonError::Steinitz(SteinitzError::NotPrime(4)))));
        let n: SteinitzInput = serde_json::from_value(json!(18)).unwrap();
        assert_eq!(n.into_domain().unwrap(), SteinitzNumber::from_u64(18).unwrap());
    }

    #[test]
    fn multivector_document() {
        let v = json!({
            "form": {"diag": ["1", "-1", "1"], "field": "Qzeta", "order": 4},
            "terms": [{"mask": [1, 3], "coeff": "1/2"}, {"mask": [], "coeff": {"order": 4, "coeffs": ["0", "1"]}}]
        });
        let doc: MultivectorDoc = serde_json::from_value(v.clone()).unwrap();
        let m = doc.into_domain().unwrap();
        assert_eq!(m.terms().len(), 2);
        assert_eq!(m.coeff(0b101), CycloField::gaussian().from_rational(q(1, 2)));
        let again = serde_json::to_value(MultivectorDoc::from(&m)).unwrap();
        assert_eq!(serde_json::from_value::<MultivectorDoc>(again).unwrap().into_domain().unwrap(), m);
        let out_of_range = json!({"form": {"diag": ["1"], "field": "Q"}, "terms": [{"mask": [2], "coeff": "1"}]});
        let doc: MultivectorDoc = serde_json::from_value(out_of_range).unwrap();
        assert!(doc.into_domain().is_err());
    }

    #[test]
    fn gc_and_chain_documents() {
        let v = json!({"l": 3, "m": 2, "terms": [{"exps": [1, -1], "coeff": "2"}]});
        let a = serde_json::from_value::<GCElementDoc>(v).unwrap().into_domain().unwrap();
        assert_eq!(a.terms().keys().next().unwrap(), &vec![1, 2]);
        let c: ChainDoc = serde_json::from_value(json!({"sizes": [2, 4], "tail": null, "label": "x"})).unwrap();
        assert_eq!(c.into_domain().unwrap().sizes(), &[2, 4]);
        let c: ChainDoc = serde_json::from_value(json!({"sizes": [2, 3]})).unwrap();
        assert!(matches!(c.into_domain(), Err(JsonError::Locmat(LocmatError::NotDivisible { .. }))));
        assert!(serde_json::from_value::<ChainDoc>(json!({"sizes": [2], "extra": 1})).is_err());
    }
}

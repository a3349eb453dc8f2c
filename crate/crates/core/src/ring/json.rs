//! Canonical JSON forms.
//!
//! Polynomial: `{"terms":[{"u":i,"v":j,"coef":"<integer>"},...]}` in display
//! order; a term carrying stratum markers adds `"s":[e1,...]` with trailing
//! zeros dropped. Series: `{"order":N,"coeffs":[<polynomial>,...]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::Coeff;
use super::monomial::{Monomial, MARKERS};
use super::poly::Poly;
use super::series::Series;

#[derive(Serialize, Deserialize)]
struct TermJson {
    u: u32,
    v: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    s: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson<P> {
    order: usize,
    coeffs: P,
}

impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .display_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut s = m.0[2..].to_vec();
                while s.last() == Some(&0) {
                    s.pop();
                }
                TermJson { u: m.0[0], v: m.0[1], s, coef: c.to_string() }
            })
            .collect();
        PolyJson { terms }.serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            if t.s.len() > MARKERS {
                return Err(D::Error::custom(format!("at most {MARKERS} marker exponents")));
            }
            let mut m = Monomial::uv(t.u, t.v);
            m.0[2..2 + t.s.len()].copy_from_slice(&t.s);
            let c: C = t.coef.parse().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coef)))?;
            terms.push((m, c));
        }
        Ok(Poly::from_terms(terms))
    }
}

impl<C: Coeff> Serialize for Series<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson { order: self.order(), coeffs: self.coeffs() }.serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Series<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::<Vec<Poly<C>>>::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        Ok(Series::from_coeffs(raw.order, raw.coeffs))
    }
}

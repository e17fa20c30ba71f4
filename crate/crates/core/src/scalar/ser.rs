//! `serialize_with` helpers rendering [`Real`] values as decimal strings.

use super::Real;
use num_complex::Complex;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serializer;

pub fn real<R: Real, S: Serializer>(v: &R, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_decimal_string())
}

pub fn reals<R: Real, S: Serializer>(v: &[R], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(R::to_decimal_string))
}

pub fn matrix<R: Real, S: Serializer>(m: &[Vec<R>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let row: Vec<String> = row.iter().map(R::to_decimal_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

pub fn complex<R: Real, S: Serializer>(z: &Complex<R>, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(2))?;
    map.serialize_entry("re", &z.re.to_decimal_string())?;
    map.serialize_entry("im", &z.im.to_decimal_string())?;
    map.end()
}

pub fn complexes<R: Real, S: Serializer>(v: &[Complex<R>], s: S) -> Result<S::Ok, S::Error> {
    #[derive(serde::Serialize)]
    struct C {
        re: String,
        im: String,
    }
    s.collect_seq(v.iter().map(|z| C {
        re: z.re.to_decimal_string(),
        im: z.im.to_decimal_string(),
    }))
}

pub fn opt_real<R: Real, S: Serializer>(v: &Option<R>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_decimal_string()),
        None => s.serialize_none(),
    }
}

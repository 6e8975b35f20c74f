//! Pulling a coloring of vectors back to pairs of basis indices.
//!
//! With `d({α,β}) = c(b_β − b_α)` for `α < β`, a `d`-homogeneous triple
//! `α < β < γ` gives `v = b_β − b_α` and `w = b_γ − b_β` with
//! `c(v) = c(w) = c(v + w)`, since `v + w = b_γ − b_α`.

use crate::certificate::{Certificate, Payload, Verdict};
use crate::coloring::{ColorValue, Coloring};
use crate::error::{Error, Result};
use crate::exact::QVec;
use crate::search::ramsey::{pair_ramsey_homogeneous, PairColoring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackWitness {
    pub triple: [usize; 3],
    pub v: QVec,
    pub w: QVec,
    pub color: ColorValue,
}

fn difference(a: usize, b: usize) -> QVec {
    &QVec::basis(b) - &QVec::basis(a)
}

/// The least homogeneous triple among `kappa` basis vectors, if any.
pub fn ramsey_pullback_fs<C: Coloring<QVec> + ?Sized>(kappa: usize, coloring: &C) -> Result<Option<PullbackWitness>> {
    if kappa < 3 {
        return Err(Error::Precondition("need at least 3 basis vectors".into()));
    }
    // Colors are interned to small ids in order of first appearance.
    let mut palette: Vec<ColorValue> = Vec::new();
    let mut ids = vec![0u32; kappa * kappa];
    for a in 0..kappa {
        for b in a + 1..kappa {
            let c = coloring.color(&difference(a, b))?;
            let id = match palette.iter().position(|p| *p == c) {
                Some(i) => i,
                None => {
                    palette.push(c);
                    palette.len() - 1
                }
            };
            ids[a * kappa + b] = id as u32;
        }
    }
    let d = PairColoring::from_fn(kappa, |a, b| ids[a * kappa + b]);
    let Some(t) = pair_ramsey_homogeneous(&d, 3) else {
        return Ok(None);
    };
    let (v, w) = (difference(t[0], t[1]), difference(t[1], t[2]));
    let color = verify_pullback(coloring, &v, &w)?;
    Ok(Some(PullbackWitness { triple: [t[0], t[1], t[2]], v, w, color }))
}

/// Evaluates `c` on `v`, `w` and `v + w` and returns the shared color.
pub fn verify_pullback<C: Coloring<QVec> + ?Sized>(coloring: &C, v: &QVec, w: &QVec) -> Result<ColorValue> {
    if v == w {
        return Err(Error::Verification("v and w coincide".into()));
    }
    let cv = coloring.color(v)?;
    let cw = coloring.color(w)?;
    let cs = coloring.color(&(v + w))?;
    if cv != cw || cv != cs {
        return Err(Error::Verification(format!("colors {cv}, {cw}, {cs} differ")));
    }
    Ok(cv)
}

pub fn pullback_certificate<C: Coloring<QVec> + ?Sized>(
    kappa: usize,
    coloring: &C,
    coloring_name: &str,
) -> Result<Certificate> {
    let found = ramsey_pullback_fs(kappa, coloring)?;
    let triples = (kappa * (kappa - 1) * (kappa - 2) / 6) as u64;
    let cert = match found {
        Some(wit) => Certificate::new(
            "ramsey-pullback",
            Verdict::Witness,
            Payload::Elements {
                elements: vec![wit.v.to_string(), wit.w.to_string()],
                color: Some(wit.color.to_string()),
            },
        )
        .with_param("triple", format!("{},{},{}", wit.triple[0], wit.triple[1], wit.triple[2])),
        None => {
            let mut c = Certificate::new("ramsey-pullback", Verdict::Exhausted, Payload::None);
            c.search_space = triples;
            c
        }
    };
    Ok(cert.with_param("kappa", kappa).with_param("coloring", coloring_name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::self_inner_color;

    /// Colors `b_β − b_α` by whether `α, β` are neighbours on a 5-cycle.
    fn pentagon(v: &QVec) -> ColorValue {
        let idx: Vec<usize> = v.support().into_iter().collect();
        let gap = idx[1] - idx[0];
        ColorValue::Int((gap.min(5 - gap) == 1) as i64)
    }

    #[test]
    fn constant_coloring_takes_first_triple() {
        let c = |_: &QVec| ColorValue::Int(7);
        let wit = ramsey_pullback_fs(4, &c).unwrap().unwrap();
        assert_eq!(wit.triple, [0, 1, 2]);
        assert_eq!(wit.v.to_string(), "{0:-1, 1:1}");
        assert_eq!(wit.w.to_string(), "{1:-1, 2:1}");
    }

    #[test]
    fn pentagon_has_none() {
        assert_eq!(ramsey_pullback_fs(5, &pentagon).unwrap(), None);
        let cert = pullback_certificate(5, &pentagon, "pentagon").unwrap();
        assert_eq!(cert.verdict, Verdict::Exhausted);
    }

    #[test]
    fn self_inner_is_constant_on_differences() {
        // Every b_β − b_α has ⟨v|v⟩ = 2, and v + w is again such a difference.
        let wit = ramsey_pullback_fs(3, &self_inner_color).unwrap().unwrap();
        assert_eq!(wit.color.to_string(), "2");
    }

    #[test]
    fn small_kappa_rejected() {
        assert!(ramsey_pullback_fs(2, &self_inner_color).is_err());
    }
}

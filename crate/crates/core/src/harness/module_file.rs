use serde::{Deserialize, Serialize};

use crate::algebra::{Field, PrimeField, Rationals, Ring};
use crate::error::{Error, Result};
use crate::resolution::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub vars: usize,
}

/// JSON form of a presentation: generator degrees and relation columns, each a
/// list of polynomial strings (one per generator).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub ring: RingSpec,
    pub generators: Vec<i64>,
    pub relations: Vec<Vec<String>>,
}

/// A presentation over whichever coefficient field the file asked for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPresentation {
    Rational(Presentation<Rationals>),
    Prime(Presentation<PrimeField>),
}

/// Run `$body` with `$m` bound to the inner `Presentation<K>`, whatever `K` is.
#[macro_export]
macro_rules! with_presentation {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            $crate::harness::AnyPresentation::Rational($m) => $body,
            $crate::harness::AnyPresentation::Prime($m) => $body,
        }
    };
}

impl AnyPresentation {
    pub fn to_module_file(&self) -> ModuleFile {
        with_presentation!(self, m => to_module_file(m))
    }

    pub fn characteristic(&self) -> u64 {
        with_presentation!(self, m => m.ring().characteristic())
    }
}

impl From<Presentation<Rationals>> for AnyPresentation {
    fn from(m: Presentation<Rationals>) -> Self {
        AnyPresentation::Rational(m)
    }
}

impl From<Presentation<PrimeField>> for AnyPresentation {
    fn from(m: Presentation<PrimeField>) -> Self {
        AnyPresentation::Prime(m)
    }
}

impl TryFrom<AnyPresentation> for Presentation<Rationals> {
    type Error = Error;

    fn try_from(m: AnyPresentation) -> Result<Self> {
        match m {
            AnyPresentation::Rational(m) => Ok(m),
            AnyPresentation::Prime(m) => Err(Error::RingMismatch(format!(
                "expected a module over the rationals, got characteristic {}",
                m.ring().characteristic()
            ))),
        }
    }
}

impl TryFrom<AnyPresentation> for Presentation<PrimeField> {
    type Error = Error;

    fn try_from(m: AnyPresentation) -> Result<Self> {
        match m {
            AnyPresentation::Prime(m) => Ok(m),
            AnyPresentation::Rational(_) => {
                Err(Error::RingMismatch("expected a module over a prime field, got the rationals".into()))
            }
        }
    }
}

fn build<K: Field>(ring: Ring<K>, file: &ModuleFile) -> Result<Presentation<K>> {
    let mut columns = Vec::with_capacity(file.relations.len());
    for (j, col) in file.relations.iter().enumerate() {
        if col.len() != file.generators.len() {
            return Err(Error::Shape(format!(
                "relation column {j} has {} entries for {} generators",
                col.len(),
                file.generators.len()
            )));
        }
        let parsed = col
            .iter()
            .enumerate()
            .map(|(i, s)| {
                ring.parse_poly(s)
                    .map_err(|e| match e {
                        Error::PolySyntax(m) => Error::PolySyntax(format!("relation column {j}, entry {i}: {m}")),
                        other => other,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        columns.push(parsed);
    }
    Presentation::from_columns(ring, file.generators.clone(), columns)
}

impl ModuleFile {
    pub fn to_presentation(&self) -> Result<AnyPresentation> {
        let RingSpec { characteristic, vars } = self.ring;
        Ok(match characteristic {
            0 => AnyPresentation::Rational(build(Ring::rationals(vars)?, self)?),
            p => AnyPresentation::Prime(build(Ring::prime(p, vars)?, self)?),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("module file serializes")
    }
}

/// Parse a module file. Syntax errors carry the JSON line and column; an
/// inhomogeneous relation is reported by its column index.
pub fn parse_module(bytes: &[u8]) -> Result<AnyPresentation> {
    let file: ModuleFile = serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_presentation()
}

/// Serialize a presentation. Over the rationals each relation column is scaled
/// by the lcm of its denominators, which keeps the submodule and the integer grammar.
pub fn to_module_file<K: Field>(m: &Presentation<K>) -> ModuleFile {
    let ring = m.ring();
    let field = ring.field();
    let relations = m
        .rels()
        .columns()
        .iter()
        .map(|col| {
            let l = col.iter().fold(num_bigint::BigInt::from(1), |acc, f| num_integer::lcm(acc, f.denominator_lcm(field)));
            let s = field.from_bigint(&l);
            col.iter().map(|f| ring.render(&f.scale(&s, field))).collect()
        })
        .collect();
    ModuleFile {
        ring: RingSpec { characteristic: ring.characteristic(), vars: ring.num_vars() },
        generators: m.gens().degrees().to_vec(),
        relations,
    }
}

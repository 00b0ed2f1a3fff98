//! Textual code descriptors shared by the library and the CLI.
//!
//! ```text
//! q=2 n=15 T={1,2,4,8}        explicit defining set (commas also separate fields)
//! bch:n=15,q=2,delta=5        narrow-sense BCH; add b=0 for other offsets
//! hamming:m=4,q=2
//! rs:q=8,delta=3
//! ```

use alloc::{
    collections::BTreeMap,
    format,
    string::{String, ToString},
    vec::Vec,
};
use core::{fmt, str::FromStr};

use crate::cyclic::CyclicCode;
use crate::galois::ModulusTable;
use crate::polyring::{format_set, parse_set, CodeSpace};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeDescriptor {
    Explicit { q: u32, n: u32, members: Vec<u32> },
    Bch { n: u32, q: u32, delta: u32, b: u32 },
    Hamming { m: u32, q: u32 },
    Rs { q: u32, delta: u32, b: u32 },
}

impl CodeDescriptor {
    pub fn build(&self, table: &ModulusTable) -> Result<CyclicCode> {
        match *self {
            CodeDescriptor::Explicit { q, n, ref members } => {
                let space = CodeSpace::with_table(n, q, table)?;
                CyclicCode::from_defining_set(&space, members.iter().copied())
            }
            CodeDescriptor::Bch { n, q, delta, b } => {
                let space = CodeSpace::with_table(n, q, table)?;
                CyclicCode::bch(&space, delta, b)
            }
            CodeDescriptor::Hamming { m, q } => CyclicCode::hamming(m, q, table),
            CodeDescriptor::Rs { q, delta, b } => CyclicCode::rs(q, delta, b, table),
        }
    }
}

/// Splits on whitespace and on commas that are not inside braces.
fn fields(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, ch) in text.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            c if depth == 0 && (c == ',' || c.is_whitespace()) => {
                if start < i {
                    out.push(&text[start..i]);
                }
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if start < text.len() {
        out.push(&text[start..]);
    }
    out
}

fn key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for field in fields(text) {
        let (k, v) = field.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got `{field}`")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("duplicate key `{k}`")));
        }
    }
    Ok(map)
}

struct Fields {
    map: BTreeMap<String, String>,
    kind: &'static str,
}

impl Fields {
    fn number(&mut self, key: &str) -> Result<u32> {
        let raw = self.map.remove(key).ok_or_else(|| Error::Parse(format!("{}: missing `{key}`", self.kind)))?;
        raw.parse().map_err(|_| Error::Parse(format!("{}: bad integer `{raw}` for `{key}`", self.kind)))
    }

    fn number_or(&mut self, key: &str, default: u32) -> Result<u32> {
        if self.map.contains_key(key) {
            self.number(key)
        } else {
            Ok(default)
        }
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            Some(k) => Err(Error::Parse(format!("{}: unknown key `{k}`", self.kind))),
            None => Ok(()),
        }
    }
}

impl FromStr for CodeDescriptor {
    type Err = Error;

    fn from_str(text: &str) -> Result<CodeDescriptor> {
        let text = text.trim();
        let (kind, body) = match text.split_once(':') {
            Some((kind, body)) if !kind.contains('=') => (kind.trim(), body),
            _ => ("explicit", text),
        };
        let map = key_values(body)?;
        let desc = match kind {
            "explicit" => {
                let mut f = Fields { map, kind: "explicit" };
                let set = f.map.remove("T").ok_or_else(|| Error::Parse("missing `T={..}`".to_string()))?;
                let mut members = parse_set(&set)?;
                members.sort_unstable();
                members.dedup();
                let d = CodeDescriptor::Explicit { q: f.number("q")?, n: f.number("n")?, members };
                f.finish()?;
                d
            }
            "bch" => {
                let mut f = Fields { map, kind: "bch" };
                let d = CodeDescriptor::Bch {
                    n: f.number("n")?,
                    q: f.number("q")?,
                    delta: f.number("delta")?,
                    b: f.number_or("b", 1)?,
                };
                f.finish()?;
                d
            }
            "hamming" => {
                let mut f = Fields { map, kind: "hamming" };
                let d = CodeDescriptor::Hamming { m: f.number("m")?, q: f.number("q")? };
                f.finish()?;
                d
            }
            "rs" => {
                let mut f = Fields { map, kind: "rs" };
                let d = CodeDescriptor::Rs { q: f.number("q")?, delta: f.number("delta")?, b: f.number_or("b", 1)? };
                f.finish()?;
                d
            }
            other => return Err(Error::Parse(format!("unknown code family `{other}`"))),
        };
        Ok(desc)
    }
}

impl fmt::Display for CodeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeDescriptor::Explicit { q, n, members } => {
                write!(f, "q={q} n={n} T={}", format_set(members.iter().copied()))
            }
            CodeDescriptor::Bch { n, q, delta, b } => {
                write!(f, "bch:n={n},q={q},delta={delta}")?;
                if *b != 1 {
                    write!(f, ",b={b}")?;
                }
                Ok(())
            }
            CodeDescriptor::Hamming { m, q } => write!(f, "hamming:m={m},q={q}"),
            CodeDescriptor::Rs { q, delta, b } => {
                write!(f, "rs:q={q},delta={delta}")?;
                if *b != 1 {
                    write!(f, ",b={b}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn parse(s: &str) -> CodeDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn forms() {
        assert_eq!(parse("q=2 n=15 T={1,2,4,8}"), CodeDescriptor::Explicit { q: 2, n: 15, members: vec![1, 2, 4, 8] });
        assert_eq!(parse("q=2,n=15,T={8,4,2,1}"), parse("q=2 n=15 T={1,2,4,8}"));
        assert_eq!(parse("q=2 n=7 T={}"), CodeDescriptor::Explicit { q: 2, n: 7, members: vec![] });
        assert_eq!(parse("bch:n=15,q=2,delta=5"), CodeDescriptor::Bch { n: 15, q: 2, delta: 5, b: 1 });
        assert_eq!(parse("bch:n=127,q=2,delta=16,b=0"), CodeDescriptor::Bch { n: 127, q: 2, delta: 16, b: 0 });
        assert_eq!(parse("hamming:m=4,q=2"), CodeDescriptor::Hamming { m: 4, q: 2 });
        assert_eq!(parse("rs:q=8,delta=3"), CodeDescriptor::Rs { q: 8, delta: 3, b: 1 });
        for bad in
            ["bch:n=15,q=2", "foo:n=1", "q=2 n=15", "bch:n=15,q=2,delta=x", "q=2 n=15 T={1} z=3", "n=1 n=2 q=2 T={}"]
        {
            assert!(bad.parse::<CodeDescriptor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn builds_expected_codes() {
        let t = ModulusTable::builtin();
        let c = parse("bch:n=15,q=2,delta=5").build(&t).unwrap();
        assert_eq!((c.n(), c.k()), (15, 7));
        assert_eq!(c.generator().degree().finite(), Some(8));
        assert_eq!(parse("q=2 n=15 T={1,2,4,8}").build(&t).unwrap().k(), 11);
        assert!(matches!(parse("q=2 n=15 T={1,2,3}").build(&t), Err(Error::NotCosetClosed { .. })));
        assert_eq!(parse("hamming:m=4,q=2").build(&t).unwrap(), parse("q=2 n=15 T={1,2,4,8}").build(&t).unwrap());
    }

    proptest! {
        #[test]
        fn canonical_text_reparses(mask in 0u32..32, named in 0usize..4, delta in 2u32..15) {
            let t = ModulusTable::builtin();
            let code = match named {
                0 => parse(&format!("bch:n=15,q=2,delta={delta}")),
                1 => parse(&format!("bch:n=15,q=2,delta={delta},b=0")),
                2 => parse("hamming:m=4,q=2"),
                _ => {
                    let space = CodeSpace::new(15, 2).unwrap();
                    let members: Vec<u32> = space.cosets().iter().enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .flat_map(|(_, c)| c.members().to_vec()).collect();
                    CodeDescriptor::Explicit { q: 2, n: 15, members: { let mut m = members; m.sort(); m } }
                }
            };
            let text = format!("{code}");
            prop_assert_eq!(text.parse::<CodeDescriptor>().unwrap(), code.clone());
            let built = code.build(&t).unwrap();
            let canon = format!("{}", built.descriptor());
            prop_assert_eq!(canon.parse::<CodeDescriptor>().unwrap().build(&t).unwrap(), built);
        }
    }
}

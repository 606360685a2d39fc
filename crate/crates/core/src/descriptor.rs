//! Text descriptors for arc unions and index sequences.
//!
//! Set descriptors:
//!
//! ```text
//! interval 0 3/5
//! union (0 1/4) (1/2 3/4)
//! cantor 3:1/32,3:1/32 stage=2
//! empty | full
//! ```
//!
//! Sequence descriptors:
//!
//! ```text
//! periodic 4 0
//! bohr 0.41421356 0.05
//! thue-morse
//! subst 01|10 seed=0
//! explicit 0,1,5
//! random 0.5 42
//! blockcode 2:0110 thue-morse
//! ```
//!
//! `Display` prints the canonical form, which parses back to an equal value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::circle::{cantor_stage, normalize, ArcUnion, CantorScheme, CantorStage, Rational};
use crate::error::{Error, Result};
use crate::sequence::{bits_to_string, BlockCode, Generator, SubstitutionRule, Window};

fn bad(msg: impl Into<String>) -> Error {
    Error::BadDescriptor(msg.into())
}

/// Parse `p/q`, an integer, or a finite decimal such as `0.125` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let err = || bad(format!("not a rational: {t:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| err())?;
        let q: i64 = q.trim().parse().map_err(|_| err())?;
        if q == 0 {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, dec)) = t.split_once('.') {
        if dec.is_empty() || dec.len() > 18 || !dec.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = int.starts_with('-');
        let int_part: i64 = match int.trim_start_matches(['-', '+']) {
            "" => 0,
            s => s.parse().map_err(|_| err())?,
        };
        let scale = 10i64.checked_pow(dec.len() as u32).ok_or_else(err)?;
        let frac: i64 = dec.parse().map_err(|_| err())?;
        let numer = int_part
            .checked_mul(scale)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(err)?;
        let r = Rational::new(numer, scale);
        return Ok(if negative { -r } else { r });
    }
    t.parse::<i64>().map(Rational::from_integer).map_err(|_| err())
}

fn parse_f64(text: &str, what: &str) -> Result<f64> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| bad(format!("{what}: not a number: {text:?}")))
}

fn parse_int<T: FromStr>(text: &str, what: &str) -> Result<T> {
    text.trim()
        .parse::<T>()
        .map_err(|_| bad(format!("{what}: not an integer: {text:?}")))
}

/// Parse a window from `"LO HI"` or `"LO,HI"`.
pub fn parse_window(text: &str) -> Result<Window> {
    let parts: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    if parts.len() != 2 {
        return Err(bad(format!("window needs LO HI, got {text:?}")));
    }
    let lo = parse_int::<i64>(parts[0], "window")?;
    let hi = parse_int::<i64>(parts[1], "window")?;
    Window::new(lo, hi)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetDescriptor {
    Empty,
    Full,
    /// `[a, b)`, wrapping through 0 when `b < a`.
    Interval(Rational, Rational),
    Union(Vec<(Rational, Rational)>),
    Cantor { scheme: CantorScheme, stage: usize },
}

impl SetDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn build(&self) -> Result<ArcUnion> {
        match self {
            SetDescriptor::Empty => Ok(ArcUnion::empty()),
            SetDescriptor::Full => Ok(ArcUnion::full()),
            SetDescriptor::Interval(a, b) => ArcUnion::interval(*a, *b),
            SetDescriptor::Union(pairs) => normalize(pairs, true),
            SetDescriptor::Cantor { scheme, stage } => cantor_stage(scheme, *stage),
        }
    }
}

fn parse_stages(text: &str) -> Result<CantorScheme> {
    let stages = text
        .split(',')
        .map(|s| {
            let (count, gap) = s
                .split_once(':')
                .ok_or_else(|| bad(format!("cantor stage needs COUNT:GAP, got {s:?}")))?;
            Ok(CantorStage {
                count: parse_int::<u32>(count, "cantor count")?,
                gap: parse_rational(gap)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CantorScheme::new(stages)
}

impl FromStr for SetDescriptor {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match head {
            "empty" if rest.is_empty() => Ok(SetDescriptor::Empty),
            "full" if rest.is_empty() => Ok(SetDescriptor::Full),
            "interval" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(bad(format!("interval needs two endpoints, got {rest:?}")));
                }
                let a = parse_rational(parts[0])?;
                let b = parse_rational(parts[1])?;
                // Validate eagerly so a bad descriptor fails at parse time.
                ArcUnion::interval(a, b)?;
                Ok(SetDescriptor::Interval(a, b))
            }
            "union" => {
                let flat = rest.replace(['(', ')'], " ");
                let parts: Vec<&str> = flat.split_whitespace().collect();
                if parts.is_empty() || parts.len() % 2 != 0 {
                    return Err(bad(format!("union needs endpoint pairs, got {rest:?}")));
                }
                let pairs = parts
                    .chunks(2)
                    .map(|p| Ok((parse_rational(p[0])?, parse_rational(p[1])?)))
                    .collect::<Result<Vec<_>>>()?;
                normalize(&pairs, true)?;
                Ok(SetDescriptor::Union(pairs))
            }
            "cantor" => {
                let mut scheme = None;
                let mut stage = None;
                for tok in rest.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("stage=") {
                        stage = Some(parse_int::<usize>(v, "cantor stage")?);
                    } else if scheme.is_none() {
                        scheme = Some(parse_stages(tok)?);
                    } else {
                        return Err(bad(format!("unexpected token {tok:?} in cantor descriptor")));
                    }
                }
                let scheme = scheme.ok_or_else(|| bad("cantor descriptor needs stages"))?;
                let stage = stage.unwrap_or(scheme.depth());
                Ok(SetDescriptor::Cantor { scheme, stage })
            }
            _ => Err(bad(format!("unknown set descriptor {text:?}"))),
        }
    }
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetDescriptor::Empty => write!(f, "empty"),
            SetDescriptor::Full => write!(f, "full"),
            SetDescriptor::Interval(a, b) => write!(f, "interval {a} {b}"),
            SetDescriptor::Union(pairs) => {
                write!(f, "union")?;
                for (a, b) in pairs {
                    write!(f, " ({a} {b})")?;
                }
                Ok(())
            }
            SetDescriptor::Cantor { scheme, stage } => {
                let stages: Vec<String> = scheme
                    .stages
                    .iter()
                    .map(|s| format!("{}:{}", s.count, s.gap))
                    .collect();
                write!(f, "cantor {} stage={stage}", stages.join(","))
            }
        }
    }
}

/// Sequence descriptor; a thin text layer over [`Generator`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeqDescriptor(pub Generator);

impl SeqDescriptor {
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn generator(&self) -> &Generator {
        &self.0
    }
}

fn parse_bits(text: &str) -> Result<Vec<u8>> {
    text.bytes()
        .map(|b| match b {
            b'0' => Ok(0),
            b'1' => Ok(1),
            _ => Err(bad(format!("expected a binary word, got {text:?}"))),
        })
        .collect()
}

fn parse_generator(text: &str) -> Result<Generator> {
    let text = text.trim();
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let args: Vec<&str> = rest.split_whitespace().collect();
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(bad(format!("{head} takes {n} arguments, got {rest:?}")))
        }
    };
    match head {
        "periodic" => {
            arity(2)?;
            let period = parse_int::<u64>(args[0], "period")?;
            if period == 0 {
                return Err(bad("periodic needs n >= 1"));
            }
            Ok(Generator::Periodic {
                period,
                offset: parse_int::<i64>(args[1], "offset")?,
            })
        }
        "bohr" => {
            arity(2)?;
            let alpha = parse_f64(args[0], "alpha")?;
            let delta = parse_f64(args[1], "delta")?;
            if !(delta > 0.0 && delta <= 0.5) {
                return Err(bad(format!("bohr delta {delta} outside (0, 1/2]")));
            }
            Ok(Generator::Bohr { alpha, delta })
        }
        "thue-morse" => {
            arity(0)?;
            Ok(Generator::thue_morse())
        }
        "subst" => {
            if args.is_empty() || args.len() > 2 {
                return Err(bad(format!("subst takes IMG0|IMG1 [seed=S], got {rest:?}")));
            }
            let (a, b) = args[0]
                .split_once('|')
                .ok_or_else(|| bad(format!("subst rule needs IMG0|IMG1, got {:?}", args[0])))?;
            let rule = SubstitutionRule::new(parse_bits(a)?, parse_bits(b)?)?;
            let seed = match args.get(1) {
                Some(tok) => {
                    let v = tok
                        .strip_prefix("seed=")
                        .ok_or_else(|| bad(format!("expected seed=S, got {tok:?}")))?;
                    parse_int::<u8>(v, "seed")?
                }
                None => 0,
            };
            if seed > 1 {
                return Err(bad("substitution seed must be 0 or 1"));
            }
            Ok(Generator::Substitution { rule, seed })
        }
        "explicit" => {
            let list = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| parse_int::<i64>(s, "explicit index"))
                .collect::<Result<Vec<_>>>()?;
            Ok(Generator::Explicit(list))
        }
        "random" => {
            arity(2)?;
            let p = parse_f64(args[0], "p")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad(format!("random p {p} outside [0, 1]")));
            }
            Ok(Generator::Random {
                p,
                seed: parse_int::<u64>(args[1], "seed")?,
            })
        }
        "blockcode" => {
            let (head, base) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad(format!("blockcode needs M:TABLE BASE, got {rest:?}")))?;
            let (m, table) = head
                .split_once(':')
                .ok_or_else(|| bad(format!("blockcode needs M:TABLE, got {head:?}")))?;
            let code = BlockCode::new(parse_int::<usize>(m, "radius")?, parse_bits(table)?)?;
            Ok(Generator::BlockCode {
                base: Box::new(parse_generator(base)?),
                code,
            })
        }
        _ => Err(bad(format!("unknown sequence descriptor {text:?}"))),
    }
}

impl FromStr for SeqDescriptor {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_generator(text).map(SeqDescriptor)
    }
}

struct GenDisplay<'a>(&'a Generator);

impl fmt::Display for GenDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Generator::Explicit(list) => {
                let items: Vec<String> = list.iter().map(|k| k.to_string()).collect();
                if items.is_empty() {
                    write!(f, "explicit")
                } else {
                    write!(f, "explicit {}", items.join(","))
                }
            }
            Generator::Periodic { period, offset } => write!(f, "periodic {period} {offset}"),
            Generator::Bohr { alpha, delta } => write!(f, "bohr {alpha} {delta}"),
            Generator::Substitution { rule, seed } => {
                if rule.is_thue_morse() && *seed == 0 {
                    write!(f, "thue-morse")
                } else {
                    write!(
                        f,
                        "subst {}|{}",
                        bits_to_string(rule.image(0)),
                        bits_to_string(rule.image(1))
                    )?;
                    if *seed != 0 {
                        write!(f, " seed={seed}")?;
                    }
                    Ok(())
                }
            }
            Generator::BlockCode { base, code } => write!(
                f,
                "blockcode {}:{} {}",
                code.radius(),
                bits_to_string(code.table()),
                GenDisplay(base)
            ),
            Generator::Random { p, seed } => write!(f, "random {p} {seed}"),
        }
    }
}

impl fmt::Display for SeqDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        GenDisplay(&self.0).fmt(f)
    }
}
